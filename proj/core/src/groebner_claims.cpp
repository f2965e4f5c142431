#include "decinv/catalog.hpp"
#include "decinv/groebner.hpp"

namespace decinv {

namespace {

// polynomial coefficient of x^xe y^ye in a covariant body (a-variables only)
QPoly xy_coeff(const QForm& f, int xe, int ye) {
    auto [xi, yi] = xy_indices(f.body);
    return f.body.coefficient_of(xi, xe).coefficient_of(yi, ye);
}

struct ClaimInput {
    std::vector<QPoly> generators;
    std::vector<std::pair<std::string, QPoly>> members; // must all reduce to zero
    int degree_bound;
};

ClaimInput build_claim(const std::string& name) {
    const auto& cat = generic_catalog_expansions();
    const QForm& k = cat.at("k");
    const QForm& q = cat.at("q");
    const QPoly j2 = cat.at("j2").body;

    std::vector<QPoly> I; // j2 and the coefficients of k
    I.push_back(j2);
    for (int i = 0; i <= 4; ++i) I.push_back(xy_coeff(k, i, 4 - i));

    ClaimInput in;
    if (name == "A4-in-I" || name == "A8-in-I" || name == "A10-in-I") {
        in.generators = I;
        std::string sym = name.substr(0, name.find('-'));
        in.members = {{sym, cat.at(sym).body}};
        in.degree_bound = cat.at(sym).adeg;
    } else if (name == "B12-in-I-B6") {
        in.generators = I;
        in.generators.push_back(cat.at("B6").body);
        in.members = {{"B12", cat.at("B12").body}};
        in.degree_bound = 12;
    } else if (name == "p-powers-in-J") {
        // J = (j2, coeffs of k, coeffs of x^4y^4 ... y^8 in q);
        // p1, p2, p3 = coeffs of x^7y, x^6y^2, x^5y^3
        in.generators = I;
        for (int xe = 4; xe >= 0; --xe) in.generators.push_back(xy_coeff(q, xe, 8 - xe));
        QPoly p1 = xy_coeff(q, 7, 1), p2 = xy_coeff(q, 6, 2), p3 = xy_coeff(q, 5, 3);
        in.members = {{"p1^4", p1.pow(4)}, {"p2^3", p2.pow(3)}, {"p3^2", p3.pow(2)}};
        in.degree_bound = 8;
    } else if (name == "ai-p0-in-J") {
        // J' = (j2, coeffs of k, coeffs of x^7y ... y^8 in q); p0 = coeff of x^8
        in.generators = I;
        for (int xe = 7; xe >= 0; --xe) in.generators.push_back(xy_coeff(q, xe, 8 - xe));
        QPoly p0 = xy_coeff(q, 8, 0);
        auto vars = p0.vars();
        for (int i = 4; i <= 10; ++i) {
            int ai = vars->index("a" + std::to_string(i));
            QPoly aip0 = p0 * QPoly::variable(vars, RatRing{}, ai);
            in.members.emplace_back("a" + std::to_string(i) + "*p0", aip0);
        }
        in.degree_bound = 3;
    } else {
        throw std::invalid_argument("unknown groebner claim: " + name);
    }
    return in;
}

template <class R>
ClaimResult run_claim(const std::string& name, const ClaimInput& in, VarSetPtr vars, R ring,
                      auto convert) {
    GroebnerBasis<R> gb(vars, ring);
    for (const auto& g : in.generators) gb.add_generator(convert(g));
    gb.compute(in.degree_bound);
    ClaimResult res{name, true, ""};
    if (!gb.self_check()) {
        res.holds = false;
        res.detail = "generator failed to reduce to zero";
        return res;
    }
    for (const auto& [label, p] : in.members) {
        if (!gb.reduces_to_zero(convert(p))) {
            res.holds = false;
            res.detail += (res.detail.empty() ? "" : "; ") + label + " not in ideal";
        }
    }
    if (res.holds)
        res.detail = "basis size " + std::to_string(gb.size()) + ", all " +
                     std::to_string(in.members.size()) + " memberships hold";
    return res;
}

} // namespace

const std::vector<std::string>& groebner_claim_names() {
    static const std::vector<std::string> names = {"A4-in-I", "A8-in-I", "A10-in-I",
                                                   "B12-in-I-B6", "p-powers-in-J", "ai-p0-in-J"};
    return names;
}

ClaimResult check_groebner_claim(const std::string& name, std::uint64_t prime) {
    ClaimInput in = build_claim(name);
    auto vars = in.generators.front().vars();
    if (prime == 0)
        return run_claim(name, in, vars, RatRing{}, [](const QPoly& p) { return p; });
    FpRing ring(prime);
    return run_claim(name, in, vars, ring,
                     [&](const QPoly& p) { return reduce_mod_p(p, ring, p.vars()); });
}

} // namespace decinv
