#include "decinv/poly.hpp"

#include <cctype>

namespace decinv {

FpPoly reduce_mod_p(const QPoly& p, const FpRing& ring, VarSetPtr newvars) {
    const auto& oldvars = p.vars();
    std::vector<int> varmap(oldvars->size());
    for (std::size_t i = 0; i < oldvars->size(); ++i)
        varmap[i] = newvars->find(oldvars->name(static_cast<int>(i)));

    std::uint64_t mod = ring.F.modulus();
    std::vector<FpPoly::Term> terms;
    terms.reserve(p.terms().size());
    for (auto& [m, c] : p.terms()) {
        Monomial nm;
        for (std::size_t v = 0; v < oldvars->size(); ++v) {
            int e = m[static_cast<int>(v)];
            if (e == 0) continue;
            if (varmap[v] < 0)
                throw std::invalid_argument("reduce_mod_p: variable " +
                                            oldvars->name(static_cast<int>(v)) +
                                            " has no image in the target ring");
            nm.set(varmap[v], e);
        }
        std::uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), mod);
        std::uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), mod);
        std::uint64_t v = ring.F.mul(num, ring.F.inv(den));
        if (v != 0) terms.emplace_back(nm, v);
    }
    return FpPoly::from_terms(std::move(newvars), ring, std::move(terms));
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
};

mpz_class parse_int(Lexer& lx) {
    lx.skip();
    std::string digits;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i])))
        digits += lx.s[lx.i++];
    if (digits.empty()) throw std::invalid_argument("parse_qpoly: expected integer");
    return mpz_class(digits);
}

std::string parse_name(Lexer& lx) {
    lx.skip();
    std::string name;
    while (lx.i < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '_'))
        name += lx.s[lx.i++];
    if (name.empty()) throw std::invalid_argument("parse_qpoly: expected name");
    return name;
}

} // namespace

QPoly parse_qpoly(const std::string& text, VarSetPtr vars) {
    Lexer lx{text};
    std::vector<QPoly::Term> terms;
    bool first = true;
    while (true) {
        lx.skip();
        if (lx.i >= lx.s.size()) break;
        int sign = 1;
        if (lx.eat('+')) {
        } else if (lx.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("parse_qpoly: expected +/- between terms");
        }
        // allow a leading sign directly attached to the coefficient
        if (lx.eat('-')) sign = -sign;
        first = false;

        mpq_class coeff(sign);
        Monomial mon;
        bool has_factor = false;
        while (true) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpz_class num = parse_int(lx);
                if (lx.eat('/')) {
                    mpz_class den = parse_int(lx);
                    coeff *= mpq_class(num, den);
                } else {
                    coeff *= num;
                }
                coeff.canonicalize();
                has_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string name = parse_name(lx);
                int idx = vars->index(name);
                int exp = 1;
                if (lx.eat('^')) exp = static_cast<int>(parse_int(lx).get_si());
                mon.set(idx, mon[idx] + exp);
                has_factor = true;
            } else {
                break;
            }
            if (!lx.eat('*')) break;
        }
        if (!has_factor) throw std::invalid_argument("parse_qpoly: empty term");
        if (sgn(coeff) != 0) terms.emplace_back(mon, coeff);
    }
    return QPoly::from_terms(std::move(vars), RatRing{}, std::move(terms));
}

} // namespace decinv
