#pragma once

#include <optional>
#include <random>

#include "decinv/catalog.hpp"

namespace decinv {

/// A binary form of stated order with exact rational coefficients:
/// f = sum c[i] x^{order-i} y^i.
struct NumericForm {
    int order;
    std::vector<mpq_class> c; // length order+1

    bool is_zero() const {
        for (auto& v : c)
            if (sgn(v) != 0) return false;
        return true;
    }
};

NumericForm make_numeric_form(int order, std::vector<mpq_class> coeffs);
QForm to_qform(const NumericForm& f);   // over the {x,y} ring
NumericForm from_qform(const QForm& f);

struct MultiplicityReport {
    int multiplicity; // max root multiplicity over the projective line
    // witnessing factor a*x + b*y when the maximal root is rational
    std::optional<std::pair<mpq_class, mpq_class>> linear_factor;
};

/// Exact maximum root multiplicity via square-free gcd chains; the root at
/// infinity is the factor y. Rejects the zero form.
MultiplicityReport max_multiplicity(const NumericForm& f);

/// Nullform test: a root of multiplicity > order/2, or the zero form.
bool is_nullform(const NumericForm& f);

/// Pair nullcone test: a common projective root of multiplicity > n/2 in g
/// and > m/2 in h.
bool is_pair_nullform(const NumericForm& g, const NumericForm& h);

/// A form with a root of multiplicity exactly floor(n/2)+1 at a random
/// rational point; deterministic under the rng state.
NumericForm random_nullform(int n, std::mt19937_64& rng);

/// Value of each hsop member of degree-n forms at a numeric form.
std::vector<std::pair<std::string, mpq_class>> eval_hsop(int n, const NumericForm& f);

struct HsopVerifyReport {
    int n = 0;
    int null_samples = 0, null_failures = 0;
    int nonnull_samples = 0, nonnull_failures = 0;
    std::string counterexample;
    bool ok() const { return null_failures == 0 && nonnull_failures == 0; }
};

/// Direction 1: every sampled nullform kills every hsop invariant, exactly.
/// Direction 2: every sampled non-nullform keeps at least one alive
/// (probabilistic evidence, not proof).
HsopVerifyReport verify_hsop_defines_nullcone(int n, int samples, std::uint64_t seed);

struct CheckReport {
    std::string name;
    bool ok = true;
    std::vector<std::string> lines;
    void record(bool pass, const std::string& what) {
        ok = ok && pass;
        lines.push_back(std::string(pass ? "ok  " : "FAIL") + " " + what);
    }
};

/// The two degree-14 exceptional forms: on x^2 y (2 a1 x^7 + 9 a8 y^7) all
/// nullcone-defining invariants vanish except A14; on
/// y^3 (120 a3 x^7 + a10 y^7) all vanish except j14; the sum j14+A14
/// vanishes on neither.
CheckReport exceptional_forms_check();

/// The eight displayed proportionalities in the V4+V6 pair analysis, with
/// k = x^3(a1 x + a2 y) and m = y^4(b1 x^2 + b2 x y + b3 y^2).
CheckReport lemma8_case_check();

/// Case analyses with the covariant k specialized to x^4 or x^3 y:
/// proportionalities of A12, j10, j8, A6 (resp. j9, A14, j10, A6), the
/// printed specializations of m and k, and the a5 = 0 contradiction
/// bookkeeping.
CheckReport lemma7_case_check();

struct JerzyResult {
    bool hypothesis;
    bool conclusion;
};

/// Weyman's multiplicity criterion: hypothesis = vanishing of (f,f)_{2k},
/// (f,f)_{2k+2}, ... (plus ((f,f)_{2k-2},f)_d when d = 4k-4);
/// conclusion = f has a root of multiplicity >= d-k+1.
JerzyResult jerzy_predicate(const NumericForm& f, int k);

/// Sample the implication hypothesis => conclusion; a (true,false)
/// observation fails the report.
CheckReport jerzy_sample_check(int samples, std::uint64_t seed);

/// Equality up to a scalar: returns c with p = c*q, if it exists and both
/// polynomials are nonzero.
std::optional<mpq_class> proportionality(const QPoly& p, const QPoly& q);

/// Uniform integer in [lo, hi] drawn portably (engine-only, reproducible).
long rng_int(std::mt19937_64& rng, long lo, long hi);

} // namespace decinv
