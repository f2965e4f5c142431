#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "decinv/fp.hpp"
#include "decinv/monomial.hpp"
#include "decinv/varset.hpp"

namespace decinv {

/// Coefficient domain: exact rationals. Symbolic work stays integral except
/// inside transvectant normalization, which must clear (asserted by callers).
struct RatRing {
    using Elt = mpq_class;
    static Elt zero() { return Elt(0); }
    static Elt one() { return Elt(1); }
    static bool is_zero(const Elt& a) { return sgn(a) == 0; }
    static Elt from_long(long long v) { return Elt(static_cast<long>(v)); }
    static Elt from_mpz(const mpz_class& v) { return Elt(v); }
    static Elt neg(const Elt& a) { return -a; }
    static Elt add(const Elt& a, const Elt& b) { return a + b; }
    static Elt sub(const Elt& a, const Elt& b) { return a - b; }
    static Elt mul(const Elt& a, const Elt& b) { return a * b; }
    static Elt inv(const Elt& a) {
        if (is_zero(a)) throw std::domain_error("RatRing: inverse of zero");
        return 1 / a;
    }
    static void add_assign(Elt& a, const Elt& b) { a += b; }
    static std::string str(const Elt& a) { return a.get_str(); }
    bool operator==(const RatRing&) const { return true; }
};

/// Coefficient domain: the prime field Z/p.
struct FpRing {
    PrimeField F;
    explicit FpRing(std::uint64_t p) : F(p) {}
    explicit FpRing(PrimeField f) : F(f) {}

    using Elt = std::uint64_t;
    static Elt zero() { return 0; }
    static Elt one() { return 1; }
    static bool is_zero(const Elt& a) { return a == 0; }
    Elt from_long(long long v) const { return F.from_long(v); }
    Elt from_mpz(const mpz_class& v) const {
        return F.from_long(mpz_fdiv_ui(v.get_mpz_t(), F.modulus()));
    }
    Elt neg(const Elt& a) const { return F.neg(a); }
    Elt add(const Elt& a, const Elt& b) const { return F.add(a, b); }
    Elt sub(const Elt& a, const Elt& b) const { return F.sub(a, b); }
    Elt mul(const Elt& a, const Elt& b) const { return F.mul(a, b); }
    Elt inv(const Elt& a) const { return F.inv(a); }
    void add_assign(Elt& a, const Elt& b) const { a = F.add(a, b); }
    static std::string str(const Elt& a) { return std::to_string(a); }
    bool operator==(const FpRing& o) const { return F == o.F; }
};

inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || a->names() == b->names();
}

/// Sparse exact multivariate polynomial over a pluggable coefficient domain.
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients; equality is structural.
template <class R>
class Poly {
public:
    using Elt = typename R::Elt;
    using Term = std::pair<Monomial, Elt>;

    Poly(VarSetPtr vars, R ring) : vars_(std::move(vars)), ring_(std::move(ring)) {}

    static Poly zero(VarSetPtr vars, R ring) { return Poly(std::move(vars), std::move(ring)); }

    static Poly constant(VarSetPtr vars, R ring, Elt c) {
        Poly p(std::move(vars), std::move(ring));
        if (!p.ring_.is_zero(c)) p.terms_.emplace_back(Monomial::one(), std::move(c));
        return p;
    }

    static Poly variable(VarSetPtr vars, R ring, int idx, int exp = 1) {
        Poly p(std::move(vars), std::move(ring));
        if (exp < 0) throw std::invalid_argument("Poly: negative exponent");
        p.terms_.emplace_back(Monomial::var(idx, exp), p.ring_.one());
        return p;
    }

    static Poly monomial(VarSetPtr vars, R ring, Monomial m, Elt c) {
        Poly p(std::move(vars), std::move(ring));
        if (!p.ring_.is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

    static Poly from_terms(VarSetPtr vars, R ring, std::vector<Term> raw) {
        Poly p(std::move(vars), std::move(ring));
        p.terms_ = normalize(p.ring_, std::move(raw));
        return p;
    }

    const VarSetPtr& vars() const { return vars_; }
    const R& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial::one());
    }

    Elt constant_value() const {
        if (terms_.empty()) return ring_.zero();
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_[0].second;
    }

    int deg() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.deg());
        return d;
    }

    template <class Indices>
    int deg_in(const Indices& idx) const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.deg_in(idx));
        return d;
    }

    // Degree if homogeneous in the given variables, nullopt otherwise.
    // The zero polynomial counts as homogeneous of every degree.
    template <class Indices>
    std::optional<int> homogeneous_degree_in(const Indices& idx) const {
        std::optional<int> d;
        for (auto& [m, c] : terms_) {
            int t = m.deg_in(idx);
            if (!d)
                d = t;
            else if (*d != t)
                return std::nullopt;
        }
        return terms_.empty() ? std::optional<int>(0) : d;
    }

    Elt coeff(const Monomial& m) const {
        for (auto& [mm, c] : terms_)
            if (mm == m) return c;
        return ring_.zero();
    }

    bool operator==(const Poly& o) const {
        if (!same_vars(vars_, o.vars_) || !(ring_ == o.ring_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].first == o.terms_[i].first) ||
                !(terms_[i].second == o.terms_[i].second))
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(vars_, ring_);
        r.terms_.reserve(terms_.size());
        for (auto& [m, c] : terms_) r.terms_.emplace_back(m, ring_.neg(c));
        return r;
    }

    Poly operator+(const Poly& o) const {
        check_compatible(o);
        Poly r(vars_, ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].first == o.terms_[j].first) {
                Elt s = ring_.add(terms_[i].second, o.terms_[j].second);
                if (!ring_.is_zero(s)) r.terms_.emplace_back(terms_[i].first, std::move(s));
                ++i, ++j;
            } else if (grlex_greater(terms_[i].first, o.terms_[j].first)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        check_compatible(o);
        Poly r(vars_, ring_);
        if (terms_.empty() || o.terms_.empty()) return r;
        std::unordered_map<Monomial, Elt, MonomialHash> acc;
        acc.reserve(std::min<std::size_t>(terms_.size() * o.terms_.size(), std::size_t(1) << 20));
        for (auto& [ma, ca] : terms_) {
            for (auto& [mb, cb] : o.terms_) {
                Monomial m = ma.times(mb);
                Elt prod = ring_.mul(ca, cb);
                auto [it, fresh] = acc.emplace(m, prod);
                if (!fresh) ring_.add_assign(it->second, prod);
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!ring_.is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        return r;
    }

    Poly scaled(const Elt& c) const {
        Poly r(vars_, ring_);
        if (ring_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (auto& [m, cc] : terms_) {
            Elt p = ring_.mul(cc, c);
            if (!ring_.is_zero(p)) r.terms_.emplace_back(m, std::move(p));
        }
        return r;
    }

    Poly pow(int n) const {
        if (n < 0) throw std::invalid_argument("Poly: negative power");
        Poly r = constant(vars_, ring_, ring_.one());
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            if (n >>= 1) base = base * base;
        }
        return r;
    }

    /// Iterated formal partial derivative.
    Poly diff(int var, int times = 1) const {
        if (times < 0) throw std::invalid_argument("Poly: negative derivative order");
        if (times == 0) return *this;
        Poly r(vars_, ring_);
        r.terms_.reserve(terms_.size());
        for (auto& [m, c] : terms_) {
            int e = m[var];
            if (e < times) continue;
            // falling factorial e (e-1) ... (e-times+1); exceeds 64 bits for
            // high derivative orders, so accumulate exactly
            mpz_class ff = 1;
            for (int i = 0; i < times; ++i) ff *= (e - i);
            Elt nc = ring_.mul(c, ring_.from_mpz(ff));
            if (ring_.is_zero(nc)) continue;
            Monomial nm = m;
            nm.set(var, e - times);
            r.terms_.emplace_back(nm, std::move(nc));
        }
        // term order is preserved: exponent change is uniform in one variable
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        return r;
    }

    /// Simultaneous substitution of polynomials for variables.
    Poly substitute(const std::map<int, Poly>& bindings) const {
        for (auto& [v, b] : bindings) {
            if (v < 0 || static_cast<std::size_t>(v) >= vars_->size())
                throw std::out_of_range("Poly: substitute target out of range");
            if (!same_vars(b.vars_, vars_) || !(b.ring_ == ring_))
                throw std::invalid_argument("Poly: substitution binding domain mismatch");
        }
        std::map<int, std::vector<Poly>> powers; // powers[v][k] = binding^k
        Poly result(vars_, ring_);
        for (auto& [m, c] : terms_) {
            Poly t = constant(vars_, ring_, c);
            Monomial residual = Monomial::one();
            for (std::size_t v = 0; v < vars_->size(); ++v) {
                int e = m[static_cast<int>(v)];
                if (e == 0) continue;
                auto it = bindings.find(static_cast<int>(v));
                if (it == bindings.end()) {
                    residual.set(static_cast<int>(v), e);
                } else {
                    auto& pw = powers[static_cast<int>(v)];
                    if (pw.empty()) pw.push_back(constant(vars_, ring_, ring_.one()));
                    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * it->second);
                    t = t * pw[static_cast<std::size_t>(e)];
                }
            }
            if (!(residual == Monomial::one()))
                t = t * Poly::monomial(vars_, ring_, residual, ring_.one());
            result = result + t;
        }
        return result;
    }

    /// Full evaluation at a point (all variables bound).
    Elt eval(const std::vector<Elt>& point) const {
        if (point.size() != vars_->size())
            throw std::invalid_argument("Poly: evaluation point has wrong arity");
        Elt acc = ring_.zero();
        for (auto& [m, c] : terms_) {
            Elt t = c;
            for (std::size_t v = 0; v < vars_->size(); ++v) {
                int e = m[static_cast<int>(v)];
                for (int i = 0; i < e; ++i) t = ring_.mul(t, point[v]);
            }
            ring_.add_assign(acc, t);
        }
        return acc;
    }

    /// Sum of terms whose total degree in the given variables equals d.
    template <class Indices>
    Poly homogeneous_component(const Indices& idx, int d) const {
        Poly r(vars_, ring_);
        for (auto& [m, c] : terms_)
            if (m.deg_in(idx) == d) r.terms_.emplace_back(m, c);
        return r;
    }

    /// Polynomial coefficient of var^exp (the variable is removed).
    Poly coefficient_of(int var, int exp) const {
        Poly r(vars_, ring_);
        for (auto& [m, c] : terms_) {
            if (m[var] != exp) continue;
            Monomial nm = m;
            nm.set(var, 0);
            r.terms_.emplace_back(nm, c);
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << ring_.str(c);
            for (std::size_t v = 0; v < vars_->size(); ++v) {
                int e = m[static_cast<int>(v)];
                if (e == 0) continue;
                os << "*" << vars_->name(static_cast<int>(v));
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

    static std::vector<Term> normalize(const R& ring, std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
        std::vector<Term> out;
        out.reserve(raw.size());
        for (auto& t : raw) {
            if (!out.empty() && out.back().first == t.first)
                ring.add_assign(out.back().second, t.second);
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const Term& t) { return ring.is_zero(t.second); }),
                  out.end());
        return out;
    }

private:
    void check_compatible(const Poly& o) const {
        if (!same_vars(vars_, o.vars_) || !(ring_ == o.ring_))
            throw std::invalid_argument("Poly: domain mismatch");
    }

    VarSetPtr vars_;
    R ring_;
    std::vector<Term> terms_;
};

using QPoly = Poly<RatRing>;
using FpPoly = Poly<FpRing>;

/// Reduce a rational polynomial mod p, optionally renaming variables into a
/// smaller set (varmap[old] = new index, or -1 for variables that must not
/// occur). Coefficient denominators must be invertible mod p.
FpPoly reduce_mod_p(const QPoly& p, const FpRing& ring, VarSetPtr newvars);

/// Parse the text form emitted by Poly::str (rational coefficients).
QPoly parse_qpoly(const std::string& text, VarSetPtr vars);

} // namespace decinv
