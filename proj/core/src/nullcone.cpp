#include "decinv/nullcone.hpp"

#include <sstream>

namespace decinv {

namespace {

// Univariate rational polynomials, ascending coefficients, trimmed.
using UPoly = std::vector<mpq_class>;

void trim(UPoly& u) {
    while (!u.empty() && sgn(u.back()) == 0) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; } // zero -> -1

UPoly uderiv(const UPoly& u) {
    UPoly d;
    for (std::size_t i = 1; i < u.size(); ++i) d.push_back(u[i] * static_cast<long>(i));
    trim(d);
    return d;
}

void make_monic(UPoly& u) {
    if (u.empty()) return;
    mpq_class lc = u.back();
    for (auto& c : u) c /= lc;
}

UPoly urem(UPoly a, const UPoly& b) { // b monic, nonzero
    while (udeg(a) >= udeg(b)) {
        mpq_class c = a.back();
        int shift = udeg(a) - udeg(b);
        for (int i = 0; i <= udeg(b); ++i) a[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
        trim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        make_monic(b);
        UPoly r = urem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

// f(t, 1); the root at infinity has multiplicity order - deg.
UPoly dehomogenize(const NumericForm& f) {
    UPoly u(static_cast<std::size_t>(f.order) + 1);
    for (int i = 0; i <= f.order; ++i) u[static_cast<std::size_t>(f.order - i)] = f.c[static_cast<std::size_t>(i)];
    trim(u);
    return u;
}

// The monic polynomial whose roots are the roots of u of multiplicity >= t.
UPoly high_part(UPoly u, int t) {
    trim(u);
    make_monic(u);
    for (int j = 1; j < t && udeg(u) >= 1; ++j) u = ugcd(u, uderiv(u));
    if (udeg(u) < 1) return {};
    return u;
}

std::string describe(const NumericForm& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.c.size(); ++i)
        os << (i ? "," : "") << f.c[i].get_str();
    os << "]";
    return os.str();
}

QForm parsed_form(const std::string& text, const VarSetPtr& vars, int order, int adeg) {
    return make_form(parse_qpoly(text, vars), order, adeg);
}

// value != 0 and value = c * target for a scalar c.
void check_prop(CheckReport& rep, const std::string& what, const QPoly& value,
                const std::string& target_text) {
    QPoly target = parse_qpoly(target_text, value.vars());
    auto c = proportionality(value, target);
    rep.record(c.has_value() && sgn(*c) != 0, what + " ~ " + target_text);
}

QPoly kill_vars(const QPoly& p, const std::vector<std::string>& names) {
    std::map<int, QPoly> bind;
    for (const auto& n : names) bind.emplace(p.vars()->index(n), QPoly::zero(p.vars(), p.ring()));
    return p.substitute(bind);
}

} // namespace

NumericForm make_numeric_form(int order, std::vector<mpq_class> coeffs) {
    if (order < 1 || coeffs.size() != static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("make_numeric_form: need order+1 coefficients");
    for (auto& c : coeffs) c.canonicalize();
    return NumericForm{order, std::move(coeffs)};
}

QForm to_qform(const NumericForm& f) {
    auto vars = VarSet::xy();
    RatRing ring;
    int xi = vars->index("x"), yi = vars->index("y");
    std::vector<QPoly::Term> terms;
    for (int i = 0; i <= f.order; ++i) {
        if (sgn(f.c[static_cast<std::size_t>(i)]) == 0) continue;
        Monomial m;
        m.set(xi, f.order - i);
        m.set(yi, i);
        terms.emplace_back(m, f.c[static_cast<std::size_t>(i)]);
    }
    return QForm{QPoly::from_terms(vars, ring, std::move(terms)), f.order, 0};
}

NumericForm from_qform(const QForm& f) {
    auto [xi, yi] = xy_indices(f.body);
    NumericForm out{f.order, std::vector<mpq_class>(static_cast<std::size_t>(f.order) + 1, 0)};
    for (const auto& [m, c] : f.body.terms()) {
        if (m.deg() != m[xi] + m[yi])
            throw std::invalid_argument("from_qform: coefficients are not numeric");
        out.c[static_cast<std::size_t>(m[yi])] = c;
    }
    return out;
}

MultiplicityReport max_multiplicity(const NumericForm& f) {
    if (f.order < 1 || f.c.size() != static_cast<std::size_t>(f.order) + 1)
        throw std::invalid_argument("max_multiplicity: malformed form");
    if (f.is_zero()) throw std::invalid_argument("max_multiplicity: zero form");
    UPoly u = dehomogenize(f);
    int inf_mult = f.order - udeg(u);
    int finite = 0;
    UPoly cur = u, last;
    while (udeg(cur) >= 1) {
        last = cur;
        cur = ugcd(cur, uderiv(cur));
        ++finite;
    }
    MultiplicityReport rep{std::max(finite, inf_mult), std::nullopt};
    if (inf_mult == rep.multiplicity)
        rep.linear_factor = std::make_pair(mpq_class(0), mpq_class(1)); // y
    else if (udeg(last) == 1) {
        mpq_class alpha = -last[0] / last[1];
        rep.linear_factor = std::make_pair(mpq_class(1), -alpha); // x - alpha*y
    }
    return rep;
}

bool is_nullform(const NumericForm& f) {
    if (f.is_zero()) return true;
    return 2 * max_multiplicity(f).multiplicity > f.order;
}

bool is_pair_nullform(const NumericForm& g, const NumericForm& h) {
    if (g.is_zero()) return is_nullform(h);
    if (h.is_zero()) return is_nullform(g);
    int tg = g.order / 2 + 1, th = h.order / 2 + 1;
    UPoly ug = dehomogenize(g), uh = dehomogenize(h);
    bool inf_g = g.order - udeg(ug) >= tg, inf_h = h.order - udeg(uh) >= th;
    if (inf_g && inf_h) return true;
    UPoly pg = high_part(std::move(ug), tg), ph = high_part(std::move(uh), th);
    if (pg.empty() || ph.empty()) return false;
    return udeg(ugcd(std::move(pg), std::move(ph))) >= 1;
}

long rng_int(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

NumericForm random_nullform(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("random_nullform: order must be >= 1");
    int t = n / 2 + 1;    // multiplicity just past the nullform threshold
    int gdeg = n - t;     // < t, so no other root can compete
    long a, b;
    do {
        a = rng_int(rng, -9, 9);
        b = rng_int(rng, -9, 9);
    } while (a == 0 && b == 0);
    std::vector<mpq_class> g(static_cast<std::size_t>(gdeg) + 1);
    for (;;) {
        for (auto& c : g) c = rng_int(rng, -9, 9);
        // g as a binary form: sum g[i] x^{gdeg-i} y^i; require g(a,b) != 0
        mpq_class val = 0;
        for (int i = 0; i <= gdeg; ++i) {
            mpz_class pa = 1, pb = 1;
            for (int j = 0; j < gdeg - i; ++j) pa *= a;
            for (int j = 0; j < i; ++j) pb *= b;
            val += g[static_cast<std::size_t>(i)] * pa * pb;
        }
        if (sgn(val) != 0) break;
    }
    // ell = b*x - a*y vanishes at (a, b)
    std::vector<mpq_class> f{1};
    std::vector<mpq_class> ell{mpq_class(b), mpq_class(-a)};
    auto convolve = [](const std::vector<mpq_class>& p, const std::vector<mpq_class>& q) {
        std::vector<mpq_class> r(p.size() + q.size() - 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
        return r;
    };
    for (int i = 0; i < t; ++i) f = convolve(f, ell);
    f = convolve(f, g);
    return make_numeric_form(n, std::move(f));
}

std::vector<std::pair<std::string, mpq_class>> eval_hsop(int n, const NumericForm& f) {
    HsopSpec hs = hsop(n);
    if (f.order != n) throw std::invalid_argument("eval_hsop: order mismatch");
    auto env = expand_entries(hs.defs, to_qform(f));
    std::vector<std::pair<std::string, mpq_class>> out;
    for (const auto& item : hs.items) {
        const QForm& v = env.at(item);
        if (v.order != 0) throw std::logic_error("eval_hsop: non-invariant item " + item);
        out.emplace_back(item, v.body.constant_value());
    }
    return out;
}

HsopVerifyReport verify_hsop_defines_nullcone(int n, int samples, std::uint64_t seed) {
    HsopVerifyReport rep;
    rep.n = n;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        NumericForm f = random_nullform(n, rng);
        ++rep.null_samples;
        for (auto& [name, val] : eval_hsop(n, f))
            if (sgn(val) != 0) {
                ++rep.null_failures;
                if (rep.counterexample.empty())
                    rep.counterexample = name + " nonzero on nullform " + describe(f);
                break;
            }
    }
    for (int s = 0; s < samples; ++s) {
        std::vector<mpq_class> c(static_cast<std::size_t>(n) + 1);
        for (auto& v : c) v = rng_int(rng, -20, 20);
        NumericForm f = make_numeric_form(n, std::move(c));
        if (f.is_zero() || is_nullform(f)) {
            --s;
            continue;
        }
        ++rep.nonnull_samples;
        bool alive = false;
        for (auto& [name, val] : eval_hsop(n, f))
            if (sgn(val) != 0) {
                alive = true;
                break;
            }
        if (!alive) {
            ++rep.nonnull_failures;
            if (rep.counterexample.empty())
                rep.counterexample = "all hsop members vanish on non-nullform " + describe(f);
        }
    }
    return rep;
}

std::optional<mpq_class> proportionality(const QPoly& p, const QPoly& q) {
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    const auto& tp = p.terms().front();
    const auto& tq = q.terms().front();
    if (!(tp.first == tq.first)) return std::nullopt;
    mpq_class c = tp.second / tq.second;
    if (p == q.scaled(c)) return c;
    return std::nullopt;
}

CheckReport exceptional_forms_check() {
    CheckReport rep{"exceptional-forms"};
    struct Probe {
        std::vector<std::string> avars;
        std::string body;
        std::string survivor;
    };
    const Probe probes[] = {
        {{"a1", "a8"}, "2*a1*x^9*y + 9*a8*x^2*y^8", "A14"},
        {{"a3", "a10"}, "120*a3*x^7*y^3 + a10*y^10", "j14"},
    };
    for (const auto& pr : probes) {
        std::vector<std::string> names = pr.avars;
        names.push_back("x");
        names.push_back("y");
        auto vars = VarSet::make(names);
        QForm f = parsed_form(pr.body, vars, 10, 1);
        auto env = expand_entries(decimic_catalog(), f);
        for (const auto& sym : nullcone_defining_symbols()) {
            bool zero = env.at(sym).is_zero();
            bool want_zero = sym != pr.survivor;
            rep.record(zero == want_zero,
                       sym + (want_zero ? " vanishes" : " survives") + " on " + pr.body);
        }
        QForm s = form_sum(env.at("j14"), env.at("A14"));
        rep.record(!s.is_zero(), "j14+A14 survives on " + pr.body);
    }
    return rep;
}

CheckReport lemma8_case_check() {
    CheckReport rep{"v4-v6-pair"};
    auto vars = VarSet::make({"a1", "a2", "b1", "b2", "b3", "x", "y"});
    QForm k = parsed_form("a1*x^4 + a2*x^3*y", vars, 4, 1);
    QForm m = parsed_form("b1*x^2*y^4 + b2*x*y^5 + b3*y^6", vars, 6, 1);

    check_prop(rep, "((m,m)_4,k)_4",
               transvectant(transvectant(m, m, 4), k, 4).body, "a1*b1^2");

    auto run_case = [&](const QForm& kc, const QForm& mc, const std::string& tag,
                        const std::vector<std::pair<int, std::string>>& targets) {
        // targets: recipe id -> expected proportional polynomial
        auto compute = [&](int which) -> QForm {
            switch (which) {
                case 0: return transvectant(transvectant(mc, mc, 2), form_pow(kc, 2), 8);
                case 1: return transvectant(transvectant(mc, kc, 1), form_pow(kc, 2), 8);
                case 2:
                    return transvectant(form_pow(transvectant(kc, kc, 2), 2),
                                        transvectant(mc, mc, 2), 8);
                default: return transvectant(form_pow(mc, 2), form_pow(kc, 3), 12);
            }
        };
        for (const auto& [which, text] : targets) {
            static const char* rname[] = {"((m,m)_2,k^2)_8", "((m,k)_1,k^2)_8",
                                          "((k,k)_2^2,(m,m)_2)_8", "(m^2,k^3)_12"};
            check_prop(rep, std::string(rname[which]) + " " + tag, compute(which).body, text);
        }
    };

    QForm k_a1 = QForm{kill_vars(k.body, {"a1"}), 4, 1};
    run_case(k_a1, m, "[a1=0]",
             {{0, "a2^2*b1^2"}, {1, "a2^3*b3"}, {2, "5*a2^4*b2^2 - 12*a2^4*b1*b3"}});

    QForm m_b1 = QForm{kill_vars(m.body, {"b1"}), 6, 1};
    run_case(k, m_b1, "[b1=0]",
             {{0, "a1^2*b2^2"},
              {1, "a2^3*b3"},
              {2, "a2^4*b2^2"},
              {3, "a1*a2^2*b2^2 - 11*a1^2*a2*b2*b3 + 22*a1^3*b3^2"}});
    return rep;
}

CheckReport lemma7_case_check() {
    CheckReport rep{"k-specialization"};
    auto vars = VarSet::decimic();
    RatRing ring;
    QForm f = generic_form<RatRing>(10, vars, ring);
    QForm k_cov = transvectant(f, f, 8);

    // Case k = x^4.
    {
        QForm k = xy_monomial_form(vars, ring, 4, 0);
        QForm m = transvectant(f, k, 4);
        rep.record(m.body == parse_qpoly("a4*x^6 + 6*a5*x^5*y + 15*a6*x^4*y^2 + "
                                         "20*a7*x^3*y^3 + 15*a8*x^2*y^4 + 6*a9*x*y^5 + "
                                         "a10*y^6",
                                         vars),
                   "(f,x^4)_4 expansion");
        check_prop(rep, "(m^2,k^3)_12 [k=x^4]",
                   transvectant(form_pow(m, 2), form_pow(k, 3), 12).body, "a10^2");
        check_prop(rep, "((m,m)_2,k^2)_8 [k=x^4]",
                   transvectant(transvectant(m, m, 2), form_pow(k, 2), 8).body,
                   "-a9^2 + a8*a10");
        check_prop(rep, "(k,(m,m)_4)_4 [k=x^4]",
                   transvectant(k, transvectant(m, m, 4), 4).body,
                   "3*a8^2 - 4*a7*a9 + a6*a10");
        check_prop(rep, "(m,m)_6 [k=x^4]", transvectant(m, m, 6).body,
                   "-10*a7^2 + 15*a6*a8 - 6*a5*a9 + a4*a10");
        rep.record(kill_vars(k_cov.body, {"a7", "a8", "a9", "a10"}) ==
                       parse_qpoly("70*a6^2*y^4 + 56*a5*a6*x*y^3 + "
                                   "168*a5^2*x^2*y^2 - 252*a4*a6*x^2*y^2 + "
                                   "56*a4*a5*x^3*y - 112*a3*a6*x^3*y + "
                                   "70*a4^2*x^4 - 112*a3*a5*x^4 + 56*a2*a6*x^4",
                                   vars),
                   "k with a7=..=a10=0");
    }

    // Case k = x^3 y.
    {
        QForm k = xy_monomial_form(vars, ring, 3, 1);
        QForm m = transvectant(f, k, 4);
        rep.record(m.body == parse_qpoly("-a3*x^6 - 6*a4*x^5*y - 15*a5*x^4*y^2 - "
                                         "20*a6*x^3*y^3 - 15*a7*x^2*y^4 - 6*a8*x*y^5 - "
                                         "a9*y^6",
                                         vars),
                   "(f,x^3*y)_4 expansion");
        check_prop(rep, "((m,k)_1,k^2)_8 [k=x^3y]",
                   transvectant(transvectant(m, k, 1), form_pow(k, 2), 8).body, "a9");
        check_prop(rep, "((k,k)_2^2,(m,m)_2)_8 [k=x^3y]",
                   transvectant(form_pow(transvectant(k, k, 2), 2),
                                transvectant(m, m, 2), 8)
                       .body,
                   "a7*a9 - a8^2");
        check_prop(rep, "((m,m)_2,k^2)_8 [k=x^3y]",
                   transvectant(transvectant(m, m, 2), form_pow(k, 2), 8).body,
                   "-5*a7^2 + 2*a6*a8 + 3*a5*a9");
        check_prop(rep, "(m,m)_6 [k=x^3y]", transvectant(m, m, 6).body,
                   "-10*a6^2 + 15*a5*a7 - 6*a4*a8 + a3*a9");

        QPoly k_sub = kill_vars(k_cov.body, {"a6", "a7", "a8", "a9"});
        rep.record(k_sub == parse_qpoly("2*a2*a10*y^4 + 4*a1*a10*x*y^3 + "
                                        "168*a5^2*x^2*y^2 + 2*a0*a10*x^2*y^2 + "
                                        "56*a4*a5*x^3*y + 70*a4^2*x^4 - 112*a3*a5*x^4",
                                        vars),
                   "k with a6=..=a9=0");
        int xi = vars->index("x"), yi = vars->index("y");
        QPoly c22 = k_sub.coefficient_of(xi, 2).coefficient_of(yi, 2);
        QPoly j2_sub = kill_vars(transvectant(f, f, 10).body, {"a6", "a7", "a8", "a9"});
        rep.record(c22 == parse_qpoly("168*a5^2 + 2*a0*a10", vars),
                   "x^2y^2 coefficient is 168*a5^2 + 2*a0*a10");
        rep.record(j2_sub == parse_qpoly("-252*a5^2 + 2*a0*a10", vars),
                   "j2 with a6=..=a9=0 is -252*a5^2 + 2*a0*a10");
        rep.record(c22 - j2_sub == parse_qpoly("420*a5^2", vars),
                   "difference forces a5 = 0");
    }
    return rep;
}

JerzyResult jerzy_predicate(const NumericForm& f, int k) {
    int d = f.order;
    if (k < 1 || d < 4 * k - 4)
        throw std::invalid_argument("jerzy_predicate: need order >= 4k-4");
    QForm F = to_qform(f);
    bool hyp = true;
    if (d == 4 * k - 4 && !transvectant(transvectant(F, F, 2 * k - 2), F, d).is_zero())
        hyp = false;
    for (int j = 2 * k; hyp && j <= d; j += 2)
        if (!transvectant(F, F, j).is_zero()) hyp = false;
    bool concl = f.is_zero() || max_multiplicity(f).multiplicity >= d - k + 1;
    return JerzyResult{hyp, concl};
}

CheckReport jerzy_sample_check(int samples, std::uint64_t seed) {
    CheckReport rep{"multiplicity-criterion"};
    std::mt19937_64 rng(seed);
    const std::pair<int, int> cases[] = {{10, 3}, {10, 2}, {8, 3}, {8, 2}, {6, 2}, {4, 2}};
    int vacuous = 0, active = 0;
    for (auto [d, k] : cases) {
        for (int s = 0; s < samples; ++s) {
            NumericForm f;
            if (s % 2 == 0) {
                // plant a root of high multiplicity so the hypothesis can fire
                int t = d - k + 1;
                std::vector<mpq_class> g(static_cast<std::size_t>(d - t) + 1);
                for (auto& c : g) c = rng_int(rng, -5, 5);
                std::vector<mpq_class> body(static_cast<std::size_t>(d) + 1, 0);
                for (int i = 0; i <= d - t; ++i) body[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
                f = make_numeric_form(d, std::move(body)); // x^t * (...)
                if (f.is_zero()) {
                    --s;
                    continue;
                }
            } else {
                std::vector<mpq_class> c(static_cast<std::size_t>(d) + 1);
                for (auto& v : c) v = rng_int(rng, -9, 9);
                f = make_numeric_form(d, std::move(c));
                if (f.is_zero()) {
                    --s;
                    continue;
                }
            }
            JerzyResult r = jerzy_predicate(f, k);
            (r.hypothesis ? active : vacuous)++;
            if (r.hypothesis && !r.conclusion) {
                rep.record(false, "hypothesis held but no deep root on " + describe(f));
                return rep;
            }
        }
    }
    rep.record(active > 0, "hypothesis exercised on " + std::to_string(active) +
                               " samples (" + std::to_string(vacuous) + " vacuous)");
    return rep;
}

} // namespace decinv
