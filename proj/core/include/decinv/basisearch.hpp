#pragma once

#include <random>

#include "decinv/catalog.hpp"
#include "decinv/hilbert.hpp"
#include "decinv/modlin.hpp"

namespace decinv {

/// Variables surviving the first reduction step only (a4 = a7 = a9 = 0,
/// a10 = 1): a0, a1, a2, a3, a5, a6, a8, x, y.
VarSetPtr step1_vars();

/// First reduction step applied to a polynomial over the full a0..a10 ring,
/// taken mod p into the step1 variable set.
FpPoly reduce_step1(const QPoly& p, const FpRing& ring);

/// The full reduction: a4 = a7 = a9 = 0, a10 = 1, then a0 -> -45 a2 a8 +
/// 126 a5^2, mod p, into the six-variable ring {a1,a2,a3,a5,a6,a8} (plus
/// x, y). Kills j2 and identifies the image of degree m with
/// I_m / j2 I_{m-2}. The result is inhomogeneous in the a-variables by
/// design.
FpPoly reduce_full(const QPoly& p, const FpRing& ring);

/// Same reduction applied directly to an Fp polynomial over step1_vars or
/// the full variable set.
FpPoly reduce_full_fp(const FpPoly& p);

/// The generic decimic with the full reduction applied to its coefficients
/// (order 10 over the six-variable ring).
FpForm reduced_decimic(const FpRing& ring);

/// Generic decimic with only the first reduction step applied.
FpForm step1_decimic(const FpRing& ring);

/// dim I_m - dim I_{m-2} for the decimic; the degree-2 slice is pinned to 1
/// (j2 itself counts as the sole new invariant there).
int target_dim(int m);

/// All monomials of total weighted degree m in basics with the given
/// degrees, as exponent vectors (deduplicated by construction).
std::vector<std::vector<int>> products_of_basics(const std::vector<int>& degrees, int m);

struct RandomInvariant {
    CovExprPtr expr; // transvectant tree over the leaf "f"
    FpForm value;    // order-0 form over f's ring
};

/// A random degree-m invariant built as a transvectant tree over f with
/// valid indices, terminating at order 0. Deterministic under the rng
/// state; returns nothing when every retry degenerates.
std::optional<RandomInvariant> random_invariant(int m, const FpForm& f, std::mt19937_64& rng,
                                                int order_cap = 40, int max_tries = 200);

struct BasicInvariant {
    std::string expr; // printable recipe
    int degree;
    FpPoly reduced; // full reduction; zero exactly for j2
};

struct DegreeRow {
    int m = 0;
    int target = 0;
    int rank_products = 0; // span of products of earlier basics
    int rank = 0;
    int dm = 0; // candidates that grew the rank past the product span
    long candidates = 0;
    bool complete = false;
    std::vector<std::string> new_generators;
};

/// Degree-by-degree saturation search. Each degree inserts products of the
/// known basics first, then random transvectant candidates until the rank
/// reaches target_dim(m) or the candidate budget (budget_factor * target)
/// is exhausted. Incomplete degrees are reported, never silently wrong.
class SearchState {
public:
    SearchState(std::uint64_t prime, std::uint64_t seed);

    const DegreeRow& run_degree(int m, long budget_factor = 10);
    // Runs degrees 2..max_degree in order; stops early if a degree stays
    // incomplete. Returns true iff everything completed.
    bool run_to(int max_degree, long budget_factor = 10);

    std::uint64_t prime() const { return prime_; }
    std::uint64_t seed() const { return seed_; }
    const FpRing& ring() const { return ring_; }
    const FpForm& reduced_f() const { return f_; }
    const std::vector<BasicInvariant>& basics() const { return basics_; }
    const std::vector<DegreeRow>& rows() const { return rows_; }
    const DegreeRow* row(int m) const;
    /// Spanning set (a basis) of the reduced image of I_m; requires the
    /// degree to have been run.
    const std::vector<FpPoly>& slice_basis(int m) const;
    bool complete_through(int m) const;

    void save(const std::string& dir) const;
    static SearchState load(const std::string& dir);

private:
    std::uint64_t prime_, seed_;
    FpRing ring_;
    FpForm f_;
    std::mt19937_64 rng_;
    int next_degree_ = 2;
    std::vector<BasicInvariant> basics_;
    std::vector<DegreeRow> rows_;
    std::map<int, std::vector<FpPoly>> slice_;
};

/// One generator group of a graded-ideal dimension computation: either
/// every invariant of the given degree (symbol empty) or a single named
/// catalog invariant (possibly a sum like "j14+A14").
struct SelectionPart {
    int degree;
    std::string symbol;
};

/// Parses "4,6,8,9,14,10:j10" style selections.
std::vector<SelectionPart> parse_selection(const std::string& text);

struct IdealDimReport {
    int m = 0;
    int rank = 0;
    int target = 0;
    bool full = false; // rank == target
};

/// Rank over the prime field of {g * h} where g runs over the selected
/// generators (reduced) and h over spanning sets of I_{m - deg g}.
/// Requires the search to be complete through m - (smallest selected
/// degree).
IdealDimReport graded_ideal_dimension(SearchState& st, const std::vector<SelectionPart>& sel,
                                      int m);

} // namespace decinv
