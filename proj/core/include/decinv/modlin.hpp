#pragma once

#include <unordered_map>
#include <vector>

#include "decinv/poly.hpp"

namespace decinv {

/// Lazily assigns column indices to monomials. The search pipeline never
/// commits to a fixed degree slice: the ambient space grows as new
/// monomials appear across candidates.
class MonomialInterner {
public:
    int intern(const Monomial& m) {
        auto [it, fresh] = ids_.emplace(m, static_cast<int>(mons_.size()));
        if (fresh) mons_.push_back(m);
        return it->second;
    }
    int find(const Monomial& m) const {
        auto it = ids_.find(m);
        return it == ids_.end() ? -1 : it->second;
    }
    std::size_t size() const { return mons_.size(); }
    const Monomial& at(int i) const { return mons_[static_cast<std::size_t>(i)]; }

private:
    std::unordered_map<Monomial, int, MonomialHash> ids_;
    std::vector<Monomial> mons_;
};

/// Row-echelon accumulator over a prime field answering "does this vector
/// enlarge the span?". Rows are kept fully reduced (reduced row echelon)
/// with unit pivots; insertion of a dependent vector leaves the state
/// unchanged. Rows may be shorter than the current ambient dimension;
/// missing entries are zero.
class IncrementalSpan {
public:
    explicit IncrementalSpan(PrimeField field) : F_(field) {}

    /// Returns true iff v was independent of the current span (in which
    /// case the rank grew by one).
    bool insert(std::vector<std::uint64_t> v);

    int rank() const { return static_cast<int>(rows_.size()); }
    const PrimeField& field() const { return F_; }
    const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    std::uint64_t at(const std::vector<std::uint64_t>& r, std::size_t i) const {
        return i < r.size() ? r[i] : 0;
    }

    PrimeField F_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<int> pivots_;                  // pivots_[r] = pivot column of row r
    std::unordered_map<int, int> row_by_pivot_; // pivot column -> row index
};

/// Coefficient vector of a polynomial with columns assigned by the
/// interner (new monomials extend the ambient space).
std::vector<std::uint64_t> vectorize(const FpPoly& p, MonomialInterner& interner);

/// Coefficient vector in the canonical (descending graded-lex) monomial
/// basis of the degree-d slice in the given variables. The polynomial must
/// be homogeneous of degree d in those variables.
std::vector<std::uint64_t> slice_vectorize(const FpPoly& p, const std::vector<int>& vars, int d);

/// Number of degree-d monomials in k variables (the slice length).
long slice_dimension(int nvars, int d);

} // namespace decinv
