#pragma once

#include <array>

#include "decinv/poly.hpp"

namespace decinv {

/// A binary form of stated order whose coefficients are polynomials in the
/// a_i: the body is homogeneous of exactly `order` in {x,y} and of exactly
/// `adeg` in the remaining variables. Order-0 forms are invariants.
template <class R>
struct BForm {
    Poly<R> body;
    int order = 0;
    int adeg = 0;

    bool is_zero() const { return body.is_zero(); }
};

using QForm = BForm<RatRing>;
using FpForm = BForm<FpRing>;

template <class R>
std::pair<int, int> xy_indices(const Poly<R>& p) {
    return {p.vars()->index("x"), p.vars()->index("y")};
}

/// Wrap a polynomial as a form, checking homogeneity in {x,y} and in the
/// coefficient variables. For the zero polynomial the stated order/adeg are
/// kept as bookkeeping.
template <class R>
BForm<R> make_form(Poly<R> body, int order, int adeg) {
    auto [xi, yi] = xy_indices(body);
    std::array<int, 2> xy{xi, yi};
    std::vector<int> avars;
    for (std::size_t v = 0; v < body.vars()->size(); ++v)
        if (static_cast<int>(v) != xi && static_cast<int>(v) != yi)
            avars.push_back(static_cast<int>(v));
    if (!body.is_zero()) {
        auto od = body.homogeneous_degree_in(xy);
        if (!od || *od != order)
            throw std::invalid_argument("BForm: body not homogeneous of the stated order");
        auto ad = body.homogeneous_degree_in(avars);
        if (!ad || *ad != adeg)
            throw std::invalid_argument("BForm: body not homogeneous of the stated degree");
    }
    return BForm<R>{std::move(body), order, adeg};
}

/// The generic form of degree n with the binomial-coefficient convention:
/// sum_i C(n,i) a_i x^{n-i} y^i. Order n, degree 1.
template <class R>
BForm<R> generic_form(int n, VarSetPtr vars, R ring) {
    if (n < 1) throw std::invalid_argument("generic_form: order must be >= 1");
    int xi = vars->index("x"), yi = vars->index("y");
    std::vector<typename Poly<R>::Term> terms;
    for (int i = 0; i <= n; ++i) {
        int ai = vars->index("a" + std::to_string(i));
        Monomial m = Monomial::var(ai);
        m.set(xi, n - i);
        m.set(yi, i);
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(i));
        terms.emplace_back(m, ring.from_long(binom.get_si()));
    }
    return BForm<R>{Poly<R>::from_terms(std::move(vars), ring, std::move(terms)), n, 1};
}

/// A pure monomial x^i y^j as a form of degree 0 in the a_i.
template <class R>
BForm<R> xy_monomial_form(VarSetPtr vars, R ring, int xe, int ye) {
    Monomial m;
    m.set(vars->index("x"), xe);
    m.set(vars->index("y"), ye);
    return BForm<R>{Poly<R>::monomial(std::move(vars), ring, m, ring.one()), xe + ye, 0};
}

namespace detail {

inline mpq_class transvectant_factor_rat(int n, int m, int k) {
    // (n-k)! (m-k)! / (n! m!)
    mpz_class num = 1, den = 1;
    for (int i = n - k + 1; i <= n; ++i) den *= i;
    for (int i = m - k + 1; i <= m; ++i) den *= i;
    return mpq_class(num, den);
}

inline RatRing::Elt transvectant_factor(const RatRing&, int n, int m, int k) {
    return transvectant_factor_rat(n, m, k);
}

inline FpRing::Elt transvectant_factor(const FpRing& r, int n, int m, int k) {
    auto& F = r.F;
    std::uint64_t num = F.mul(F.factorial(static_cast<unsigned>(n - k)),
                              F.factorial(static_cast<unsigned>(m - k)));
    std::uint64_t den = F.mul(F.factorial(static_cast<unsigned>(n)),
                              F.factorial(static_cast<unsigned>(m)));
    return F.mul(num, F.inv(den));
}

} // namespace detail

/// The normalized k-th transvectant
///   (f,g)_k = (n-k)!(m-k)!/(n! m!) *
///             sum_i (-1)^i C(k,i) d^k f/dx^{k-i}dy^i * d^k g/dx^i dy^{k-i},
/// a form of order n+m-2k and degree deg f + deg g.
template <class R>
BForm<R> transvectant(const BForm<R>& f, const BForm<R>& g, int k) {
    int n = f.order, m = g.order;
    if (k < 0 || k > std::min(n, m))
        throw std::invalid_argument("transvectant: index out of range");
    auto [xi, yi] = xy_indices(f.body);
    const auto& ring = f.body.ring();

    std::vector<Poly<R>> df, dg; // df[i] = d^k f/dx^{k-i}dy^i
    df.reserve(static_cast<std::size_t>(k) + 1);
    dg.reserve(static_cast<std::size_t>(k) + 1);
    {
        Poly<R> fx = f.body, gx = g.body;
        // start from d^k/dx^k, then trade one x-derivative for a y-derivative
        fx = fx.diff(xi, k);
        gx = gx.diff(xi, k);
        for (int i = 0; i <= k; ++i) {
            df.push_back(fx);
            dg.push_back(gx);
            if (i < k) {
                // replace: one fewer x-derivative, one more y-derivative
                fx = f.body.diff(xi, k - i - 1).diff(yi, i + 1);
                gx = g.body.diff(xi, k - i - 1).diff(yi, i + 1);
            }
        }
    }

    Poly<R> sum = Poly<R>::zero(f.body.vars(), ring);
    for (int i = 0; i <= k; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                     static_cast<unsigned long>(i));
        if (i & 1) binom = -binom;
        Poly<R> prod = df[static_cast<std::size_t>(i)] * dg[static_cast<std::size_t>(k - i)];
        sum = sum + prod.scaled(ring.from_mpz(binom));
    }
    sum = sum.scaled(detail::transvectant_factor(ring, n, m, k));
    return BForm<R>{std::move(sum), n + m - 2 * k, f.adeg + g.adeg};
}

template <class R>
BForm<R> form_product(const BForm<R>& f, const BForm<R>& g) {
    return BForm<R>{f.body * g.body, f.order + g.order, f.adeg + g.adeg};
}

template <class R>
BForm<R> form_sum(const BForm<R>& f, const BForm<R>& g) {
    if (f.order != g.order || f.adeg != g.adeg)
        throw std::invalid_argument("form_sum: order/degree mismatch");
    return BForm<R>{f.body + g.body, f.order, f.adeg};
}

template <class R>
BForm<R> form_pow(const BForm<R>& f, int n) {
    return BForm<R>{f.body.pow(n), f.order * n, f.adeg * n};
}

/// The substitution action f -> f((x,y) M) for an integer matrix of
/// determinant 1; same order and degree.
template <class R>
BForm<R> apply_sl2(const BForm<R>& f, const std::array<std::array<long long, 2>, 2>& M) {
    if (M[0][0] * M[1][1] - M[0][1] * M[1][0] != 1)
        throw std::invalid_argument("apply_sl2: determinant must be 1");
    auto vars = f.body.vars();
    const auto& ring = f.body.ring();
    int xi = vars->index("x"), yi = vars->index("y");
    auto lin = [&](long long cx, long long cy) {
        return Poly<R>::variable(vars, ring, xi).scaled(ring.from_long(cx)) +
               Poly<R>::variable(vars, ring, yi).scaled(ring.from_long(cy));
    };
    std::map<int, Poly<R>> bind;
    // (x,y) M = (x M00 + y M10, x M01 + y M11)
    bind.emplace(xi, lin(M[0][0], M[1][0]));
    bind.emplace(yi, lin(M[0][1], M[1][1]));
    return BForm<R>{f.body.substitute(bind), f.order, f.adeg};
}

/// True iff every coefficient is an integer (denominator 1). Direct
/// transvectants of generic forms satisfy this; iterated recipes need not.
inline bool is_integral(const QPoly& p) {
    for (auto& [m, c] : p.terms())
        if (c.get_den() != 1) return false;
    return true;
}

} // namespace decinv
