#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "decinv/poly.hpp"

namespace decinv {

/// Small Buchberger engine. Monomial order: graded reverse lexicographic
/// on the variable-set ordering. For homogeneous generators a degree bound
/// may be supplied: S-pairs above the bound are discarded, which still
/// yields exact ideal membership for polynomials of degree <= bound.
template <class R>
class GroebnerBasis {
public:
    using Elt = typename R::Elt;
    using Term = std::pair<Monomial, Elt>;
    using TermVec = std::vector<Term>; // sorted descending grevlex

    GroebnerBasis(VarSetPtr vars, R ring)
        : vars_(std::move(vars)), ring_(std::move(ring)), nv_(static_cast<int>(vars_->size())) {}

    void add_generator(const Poly<R>& p) {
        if (!same_vars(p.vars(), vars_)) throw std::invalid_argument("groebner: domain mismatch");
        if (p.is_zero()) return;
        gens_.push_back(to_grevlex(p));
        computed_ = false;
    }

    /// Run Buchberger. degree_bound < 0 means no truncation. A step budget
    /// aborts pathological inputs with a diagnostic.
    void compute(int degree_bound = -1, long step_budget = 2000000) {
        if (degree_bound >= 0)
            for (auto& g : gens_)
                if (!is_homogeneous(g))
                    throw std::invalid_argument(
                        "groebner: degree truncation requires homogeneous generators");
        basis_.clear();
        pairs_.clear();
        handled_.clear();
        for (auto& g : gens_) {
            TermVec r = reduce(g);
            if (!r.empty()) insert_basis(std::move(r), degree_bound);
        }
        long steps = 0;
        while (!pairs_.empty()) {
            std::pop_heap(pairs_.begin(), pairs_.end(), PairLater{});
            Pair pr = pairs_.back();
            pairs_.pop_back();
            if (++steps > step_budget)
                throw std::runtime_error("groebner: step budget exhausted");
            handled_.insert(pair_key(pr.i, pr.j));
            if (chain_criterion(pr)) continue;
            TermVec s = spoly(basis_[pr.i], basis_[pr.j]);
            TermVec r = reduce(s);
            if (!r.empty()) insert_basis(std::move(r), degree_bound);
        }
        // interreduce: drop redundant elements, tail-reduce the rest
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            TermVec g = std::move(basis_[i]);
            basis_[i].clear();
            TermVec r = reduce(std::move(g));
            if (!r.empty()) {
                Elt inv = ring_.inv(r.front().second);
                for (auto& [m, c] : r) c = ring_.mul(c, inv);
            }
            basis_[i] = std::move(r);
        }
        basis_.erase(std::remove_if(basis_.begin(), basis_.end(),
                                    [](const TermVec& g) { return g.empty(); }),
                     basis_.end());
        computed_ = true;
        bound_ = degree_bound;
    }

    bool computed() const { return computed_; }
    int bound() const { return bound_; }
    std::size_t size() const { return basis_.size(); }

    Poly<R> normal_form(const Poly<R>& p) const {
        if (!computed_) throw std::logic_error("groebner: basis not computed");
        TermVec r = reduce(to_grevlex(p));
        std::vector<typename Poly<R>::Term> terms(r.begin(), r.end());
        return Poly<R>::from_terms(vars_, ring_, std::move(terms));
    }

    /// Exact ideal membership: true iff the normal form is 0. With a
    /// degree bound in effect, only valid for deg(p) <= bound.
    bool reduces_to_zero(const Poly<R>& p) const {
        if (bound_ >= 0 && p.deg() > bound_)
            throw std::invalid_argument("groebner: polynomial degree exceeds truncation bound");
        if (!computed_) throw std::logic_error("groebner: basis not computed");
        return reduce(to_grevlex(p)).empty();
    }

    /// Every generator must reduce to zero modulo the computed basis.
    bool self_check() const {
        for (auto& g : gens_) {
            std::vector<typename Poly<R>::Term> terms(g.begin(), g.end());
            if (!reduces_to_zero(Poly<R>::from_terms(vars_, ring_, std::move(terms))))
                return false;
        }
        return true;
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int deg;
    };
    struct PairLater {
        bool operator()(const Pair& a, const Pair& b) const { return a.deg > b.deg; }
    };

    bool grevlex_gt(const Monomial& a, const Monomial& b) const {
        return grevlex_less(b, a, nv_);
    }

    TermVec to_grevlex(const Poly<R>& p) const {
        TermVec v(p.terms().begin(), p.terms().end());
        std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) {
            return grevlex_less(b.first, a.first, nv_);
        });
        return v;
    }

    static bool is_homogeneous(const TermVec& g) {
        if (g.empty()) return true;
        int d = g.front().first.deg();
        for (auto& [m, c] : g)
            if (m.deg() != d) return false;
        return true;
    }

    // r = a + c * shift * b, all sorted descending grevlex
    TermVec add_scaled(const TermVec& a, const Elt& c, const Monomial& shift,
                       const TermVec& b) const {
        TermVec r;
        r.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            Monomial mb = b[j].first.times(shift);
            if (a[i].first == mb) {
                Elt s = ring_.add(a[i].second, ring_.mul(c, b[j].second));
                if (!ring_.is_zero(s)) r.emplace_back(a[i].first, std::move(s));
                ++i, ++j;
            } else if (grevlex_gt(a[i].first, mb)) {
                r.push_back(a[i++]);
            } else {
                Elt s = ring_.mul(c, b[j].second);
                if (!ring_.is_zero(s)) r.emplace_back(mb, std::move(s));
                ++j;
            }
        }
        for (; i < a.size(); ++i) r.push_back(a[i]);
        for (; j < b.size(); ++j) {
            Elt s = ring_.mul(c, b[j].second);
            if (!ring_.is_zero(s)) r.emplace_back(b[j].first.times(shift), std::move(s));
        }
        return r;
    }

    // full reduction modulo the current basis
    TermVec reduce(TermVec p) const {
        TermVec out;
        while (!p.empty()) {
            const Monomial& lm = p.front().first;
            bool hit = false;
            for (auto& g : basis_) {
                if (g.empty()) continue;
                if (g.front().first.divides(lm)) {
                    Monomial shift = g.front().first.quotient_into(lm);
                    // g is monic: p -= lc(p) * shift * g
                    Elt c = ring_.neg(p.front().second);
                    p = add_scaled(p, c, shift, g);
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                out.push_back(p.front());
                p.erase(p.begin());
            }
        }
        return out;
    }

    TermVec spoly(const TermVec& f, const TermVec& g) const {
        Monomial L = f.front().first.lcm(g.front().first);
        Monomial uf = f.front().first.quotient_into(L);
        Monomial ug = g.front().first.quotient_into(L);
        // both monic: S = uf*f - ug*g
        TermVec a;
        a.reserve(f.size());
        for (auto& [m, c] : f) a.emplace_back(m.times(uf), c);
        return add_scaled(a, ring_.neg(ring_.one()), ug, g);
    }

    static std::uint64_t pair_key(std::size_t i, std::size_t j) {
        if (i > j) std::swap(i, j);
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }

    bool chain_criterion(const Pair& pr) const {
        // Buchberger's second criterion: (i,j) is unnecessary if some k
        // with lt_k | lcm(i,j) exists whose pairs (i,k) and (j,k) were
        // both already taken off the queue.
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis_[k].front().first.divides(pr.lcm)) continue;
            if (handled_.count(pair_key(pr.i, k)) && handled_.count(pair_key(pr.j, k)))
                return true;
        }
        return false;
    }

    void insert_basis(TermVec r, int degree_bound) {
        // normalize monic
        Elt inv = ring_.inv(r.front().second);
        for (auto& [m, c] : r) c = ring_.mul(c, inv);
        std::size_t t = basis_.size();
        for (std::size_t i = 0; i < t; ++i) {
            Monomial L = basis_[i].front().first.lcm(r.front().first);
            // product criterion: coprime leading terms give a useless pair
            if (L == basis_[i].front().first.times(r.front().first)) {
                handled_.insert(pair_key(i, t));
                continue;
            }
            int d = L.deg();
            if (degree_bound >= 0 && d > degree_bound) {
                // above the truncation degree: never needed at this bound
                handled_.insert(pair_key(i, t));
                continue;
            }
            pairs_.push_back(Pair{i, t, L, d});
            std::push_heap(pairs_.begin(), pairs_.end(), PairLater{});
        }
        basis_.push_back(std::move(r));
    }

    VarSetPtr vars_;
    R ring_;
    int nv_;
    std::vector<TermVec> gens_;
    std::vector<TermVec> basis_;
    std::vector<Pair> pairs_;
    std::unordered_set<std::uint64_t> handled_;
    bool computed_ = false;
    int bound_ = -1;
};

/// The ideal-membership facts used in the nullcone analysis, checkable by
/// name. Each claim builds its ideal from the catalog expansions and
/// reports whether the stated memberships hold.
struct ClaimResult {
    std::string name;
    bool holds;
    std::string detail;
};

const std::vector<std::string>& groebner_claim_names();

/// Check one named claim over Q (authoritative), or over Z/p when a prime
/// is given (sanity against unlucky-prime artifacts).
ClaimResult check_groebner_claim(const std::string& name, std::uint64_t prime = 0);

} // namespace decinv
