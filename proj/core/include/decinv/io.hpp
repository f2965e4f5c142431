#pragma once

#include <json.hpp>

#include "decinv/binform.hpp"

namespace decinv {

/// JSON polynomial: list of (exponent-vector, coefficient-string) pairs,
/// in the canonical (descending graded-lex) term order.
template <class R>
nlohmann::json poly_terms_json(const Poly<R>& p) {
    nlohmann::json terms = nlohmann::json::array();
    const std::size_t nv = p.vars()->size();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json expo = nlohmann::json::array();
        for (std::size_t v = 0; v < nv; ++v) expo.push_back(m[static_cast<int>(v)]);
        terms.push_back(nlohmann::json::array({expo, R::str(c)}));
    }
    return terms;
}

template <class R>
nlohmann::json poly_to_json(const Poly<R>& p) {
    return nlohmann::json{{"vars", p.vars()->names()}, {"terms", poly_terms_json(p)}};
}

/// Inverse of poly_to_json's term list for rational polynomials.
inline QPoly qpoly_from_json(const nlohmann::json& terms, const VarSetPtr& vars) {
    RatRing ring;
    std::vector<QPoly::Term> ts;
    for (const auto& t : terms) {
        const auto& expo = t.at(0);
        Monomial m;
        for (std::size_t v = 0; v < expo.size(); ++v) m.set(static_cast<int>(v), expo[v].get<int>());
        ts.emplace_back(m, mpq_class(t.at(1).get<std::string>()));
    }
    return QPoly::from_terms(vars, ring, std::move(ts));
}

template <class R>
nlohmann::json form_to_json(const BForm<R>& f) {
    return nlohmann::json{{"order", f.order},
                          {"degree", f.adeg},
                          {"vars", f.body.vars()->names()},
                          {"terms", poly_terms_json(f.body)}};
}

/// Human-oriented layout: one coefficient polynomial per power of x,
/// ascending in x (the y^n coefficient first).
template <class R>
std::string pretty_form(const BForm<R>& f) {
    auto [xi, yi] = xy_indices(f.body);
    std::string out;
    for (int xe = 0; xe <= f.order; ++xe) {
        Poly<R> c = f.body.coefficient_of(xi, xe).coefficient_of(yi, f.order - xe);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " +\n";
        out += "(" + c.str() + ")";
        if (xe > 0) out += "*x" + (xe > 1 ? "^" + std::to_string(xe) : std::string());
        if (f.order - xe > 0)
            out += "*y" + (f.order - xe > 1 ? "^" + std::to_string(f.order - xe) : std::string());
    }
    return out.empty() ? "0" : out;
}

} // namespace decinv
