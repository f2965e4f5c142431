#include "decinv/catalog.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>

namespace decinv {

namespace {

using E = CovExpr;

CovExprPtr L(const char* n) { return E::leaf(n); }
CovExprPtr T(CovExprPtr a, CovExprPtr b, int k) { return E::transv(std::move(a), std::move(b), k); }
CovExprPtr P(CovExprPtr a, int n) { return E::pow(std::move(a), n); }

std::vector<CatalogEntry> build_decimic_catalog() {
    std::vector<CatalogEntry> c;
    auto add = [&](const char* sym, CovExprPtr r, int order, int degree) {
        c.push_back(CatalogEntry{sym, std::move(r), order, degree});
    };
    // covariants
    add("k", T(L("f"), L("f"), 8), 4, 2);
    add("m", T(L("f"), L("k"), 4), 6, 3);
    add("q", T(L("f"), L("f"), 6), 8, 2);
    add("r", T(L("f"), L("q"), 8), 2, 3);
    add("k_q", T(L("q"), L("q"), 6), 4, 4);
    add("k_m", T(L("m"), L("m"), 4), 4, 6);
    add("m_q", T(L("q"), L("k_q"), 4), 4, 6);
    // invariants of the parameter system
    add("j2", T(L("f"), L("f"), 10), 0, 2);
    add("j4", T(L("k"), L("k"), 4), 0, 4);
    add("A6", T(L("m"), L("m"), 6), 0, 6);
    add("C6", T(L("r"), L("r"), 2), 0, 6);
    add("j8", T(L("k"), L("k_m"), 4), 0, 8);
    add("j9", T(T(L("m"), L("k"), 1), P(L("k"), 2), 8), 0, 9);
    add("j10", T(T(L("m"), L("m"), 2), P(L("k"), 2), 8), 0, 10);
    add("j14", T(T(L("k_q"), L("k_q"), 2), L("m_q"), 4), 0, 14);
    add("A14", T(P(T(L("k"), L("k"), 2), 2), T(L("m"), L("m"), 2), 8), 0, 14);
    // auxiliary invariants of the nullcone analysis
    add("j6", T(T(L("k"), L("k"), 2), L("k"), 4), 0, 6);
    add("B6", T(T(L("q"), L("q"), 4), L("q"), 8), 0, 6);
    add("A12", T(P(L("m"), 2), P(L("k"), 3), 12), 0, 12);
    add("A4", T(L("q"), L("q"), 8), 0, 4);
    add("A8", T(L("k_q"), L("k_q"), 4), 0, 8);
    add("A10", T(L("m_q"), L("k_q"), 4), 0, 10);
    add("B12", T(T(L("k_q"), L("k_q"), 2), L("k_q"), 4), 0, 12);
    return c;
}

} // namespace

const std::vector<CatalogEntry>& decimic_catalog() {
    static const std::vector<CatalogEntry> c = build_decimic_catalog();
    return c;
}

const std::vector<std::string>& nullcone_defining_symbols() {
    static const std::vector<std::string> s = {"j2", "j4",  "j6",  "A6",  "B6", "j8",
                                               "j9", "j10", "A12", "j14", "A14"};
    return s;
}

HsopSpec hsop(int n) {
    HsopSpec h;
    h.n = n;
    auto add = [&](const char* sym, CovExprPtr r, int order, int degree, bool item) {
        h.defs.push_back(CatalogEntry{sym, std::move(r), order, degree});
        if (item) {
            h.items.push_back(sym);
            h.degrees.push_back(degree);
        }
    };
    switch (n) {
        case 2:
            add("h2", T(L("f"), L("f"), 2), 0, 2, true);
            break;
        case 4:
            add("h2", T(L("f"), L("f"), 4), 0, 2, true);
            add("h3", T(T(L("f"), L("f"), 2), L("f"), 4), 0, 3, true);
            break;
        case 6:
            add("k", T(L("f"), L("f"), 4), 4, 2, false);
            add("m", T(L("f"), L("k"), 4), 2, 3, false);
            add("h2", T(L("f"), L("f"), 6), 0, 2, true);
            add("h4", T(L("k"), L("k"), 4), 0, 4, true);
            add("h6", T(T(L("k"), L("k"), 2), L("k"), 4), 0, 6, true);
            add("h10", T(P(L("m"), 2), T(L("k"), L("k"), 2), 4), 0, 10, true);
            break;
        case 8:
            add("k", T(L("f"), L("f"), 6), 4, 2, false);
            add("m", T(L("f"), L("k"), 4), 4, 3, false);
            add("h2", T(L("f"), L("f"), 8), 0, 2, true);
            add("h3", T(T(L("f"), L("f"), 4), L("f"), 8), 0, 3, true);
            add("h4", T(L("k"), L("k"), 4), 0, 4, true);
            add("h5", T(L("m"), L("k"), 4), 0, 5, true);
            add("h6", T(T(L("k"), L("k"), 2), L("k"), 4), 0, 6, true);
            add("h7", T(T(L("k"), L("k"), 2), L("m"), 4), 0, 7, true);
            break;
        case 10: {
            for (const auto& e : decimic_catalog()) h.defs.push_back(e);
            h.defs.push_back(CatalogEntry{"j14+A14", E::sum(L("j14"), L("A14")), 0, 14});
            h.items = {"j2", "j4", "A6", "C6", "j8", "j9", "j10", "j14+A14"};
            h.degrees = {2, 4, 6, 6, 8, 9, 10, 14};
            break;
        }
        default:
            throw std::invalid_argument("hsop: unsupported form degree");
    }
    return h;
}

namespace {

std::map<std::string, QForm> expand_generic_catalog(const std::string& cache_dir) {
    auto vars = VarSet::decimic();
    RatRing ring;
    namespace fs = std::filesystem;

    if (!cache_dir.empty()) {
        // try to load every symbol from the cache
        std::map<std::string, QForm> env;
        bool ok = true;
        for (const auto& e : decimic_catalog()) {
            fs::path p = fs::path(cache_dir) / (e.symbol + ".txt");
            std::ifstream in(p);
            if (!in) {
                ok = false;
                break;
            }
            std::string body;
            std::getline(in, body);
            env.emplace(e.symbol, QForm{parse_qpoly(body, vars), e.order, e.degree});
        }
        if (ok) return env;
    }

    QForm f = generic_form(10, vars, ring);
    auto env = expand_entries(decimic_catalog(), f, /*check_bookkeeping=*/true);
    // Direct transvectants of f are integral; deeper recipes (for instance
    // (q,q)_6) are genuinely rational, so integrality is not asserted here.

    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        for (const auto& e : decimic_catalog()) {
            fs::path p = fs::path(cache_dir) / (e.symbol + ".txt");
            std::ofstream out(p);
            out << env.at(e.symbol).body.str() << "\n";
        }
    }
    env.erase("f");
    return env;
}

} // namespace

const std::map<std::string, QForm>& generic_catalog_expansions(const std::string& cache_dir) {
    static std::map<std::string, QForm> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache = expand_generic_catalog(cache_dir);
    return cache;
}

mpq_class eval_invariant(const std::string& symbol, const std::vector<mpq_class>& coeffs) {
    if (coeffs.size() != 11) throw std::invalid_argument("eval_invariant: need 11 coefficients");
    auto vars = VarSet::xy();
    RatRing ring;
    int xi = vars->index("x"), yi = vars->index("y");
    std::vector<QPoly::Term> terms;
    for (int i = 0; i <= 10; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), 10, static_cast<unsigned long>(i));
        mpq_class c = coeffs[static_cast<std::size_t>(i)] * mpq_class(binom);
        if (sgn(c) == 0) continue;
        Monomial m;
        m.set(xi, 10 - i);
        m.set(yi, i);
        terms.emplace_back(m, c);
    }
    QForm f{QPoly::from_terms(vars, ring, std::move(terms)), 10, 0};

    std::map<std::string, QForm> env;
    env.emplace("f", f);
    std::map<const CovExpr*, QForm> cache;
    for (const auto& e : decimic_catalog()) {
        env.emplace(e.symbol, eval_expr(e.recipe, env, &cache));
        if (e.symbol == symbol) return env.at(symbol).body.constant_value();
    }
    if (symbol == "j14+A14")
        return env.at("j14").body.constant_value() + env.at("A14").body.constant_value();
    throw std::out_of_range("eval_invariant: unknown symbol " + symbol);
}

} // namespace decinv
