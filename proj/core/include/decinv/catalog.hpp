#pragma once

#include <vector>

#include "decinv/expr.hpp"

namespace decinv {

/// A named covariant or invariant of the decimic with its transvectant
/// recipe and expected (order, degree). Invariants have order 0.
struct CatalogEntry {
    std::string symbol;
    CovExprPtr recipe;
    int order;
    int degree;
    bool invariant() const { return order == 0; }
};

/// The named covariants (k, m, q, r, k_q, k_m, m_q) and invariants of the
/// decimic, in dependency order: each recipe refers only to f and to
/// earlier symbols.
const std::vector<CatalogEntry>& decimic_catalog();

/// The eleven invariants whose common zero locus defines the nullcone of
/// the decimic: j2, j4, j6, A6, B6, j8, j9, j10, A12, j14, A14.
const std::vector<std::string>& nullcone_defining_symbols();

/// Homogeneous system of parameters for forms of degree n = 2, 4, 6, 8, 10.
/// `defs` lists helper covariants plus the hsop invariants themselves, in
/// dependency order; `items` names the hsop members.
struct HsopSpec {
    int n;
    std::vector<CatalogEntry> defs;
    std::vector<std::string> items;
    std::vector<int> degrees;
};

HsopSpec hsop(int n);

/// Evaluate a dependency-ordered entry list on a given order-n form.
/// When `check_bookkeeping` is set, each result is asserted to have the
/// expected order and degree (degree scaled by the a-degree of f).
template <class R>
std::map<std::string, BForm<R>> expand_entries(const std::vector<CatalogEntry>& entries,
                                               const BForm<R>& f,
                                               bool check_bookkeeping = false) {
    std::map<std::string, BForm<R>> env;
    env.emplace("f", f);
    for (const auto& e : entries) {
        BForm<R> v = eval_expr(e.recipe, env);
        if (check_bookkeeping) {
            if (v.order != e.order || v.adeg != e.degree * f.adeg)
                throw std::logic_error("catalog: order/degree mismatch for " + e.symbol);
            if (v.is_zero())
                throw std::logic_error("catalog: " + e.symbol + " vanished identically");
        }
        env.emplace(e.symbol, std::move(v));
    }
    return env;
}

/// Generic expansions of the full decimic catalog over the ring
/// Q[a0..a10,x,y], computed once per process. If cache_dir is nonempty,
/// expansions are persisted there as text files and reloaded on later runs
/// (they must be bit-identical across runs; the term order is canonical).
const std::map<std::string, QForm>& generic_catalog_expansions(const std::string& cache_dir = "");

/// Value of a catalog invariant at a numeric decimic
/// f = sum C(10,i) coeffs[i] x^{10-i} y^i, by evaluating the recipe chain.
mpq_class eval_invariant(const std::string& symbol, const std::vector<mpq_class>& coeffs);

} // namespace decinv
