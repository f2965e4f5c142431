#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "decinv/io.hpp"
#include "decinv/poly.hpp"

using namespace decinv;

namespace {

QPoly random_qpoly(const VarSetPtr& vars, std::mt19937_64& rng, int nterms, int maxexp) {
    RatRing ring;
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> expo(0, maxexp);
    std::vector<QPoly::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        Monomial m;
        for (std::size_t v = 0; v < vars->size(); ++v)
            m.set(static_cast<int>(v), expo(rng));
        terms.emplace_back(m, mpq_class(coef(rng)));
    }
    return QPoly::from_terms(vars, ring, std::move(terms));
}

} // namespace

TEST_CASE("constants and zero") {
    auto vars = VarSet::make({"x", "y"});
    RatRing ring;
    QPoly z = QPoly::zero(vars, ring);
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    CHECK(z.deg() == -1);
    QPoly c = QPoly::constant(vars, ring, mpq_class(7));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == 7);
    CHECK(QPoly::constant(vars, ring, mpq_class(0)).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    auto vars = VarSet::make({"x", "y", "z"});
    RatRing ring;
    std::mt19937_64 rng(42);
    QPoly zero = QPoly::zero(vars, ring);
    QPoly one = QPoly::constant(vars, ring, mpq_class(1));
    for (int trial = 0; trial < 20; ++trial) {
        QPoly a = random_qpoly(vars, rng, 5, 4);
        QPoly b = random_qpoly(vars, rng, 5, 4);
        QPoly c = random_qpoly(vars, rng, 5, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a * zero == zero);
        CHECK(a - a == zero);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("power matches iterated product") {
    auto vars = VarSet::make({"x", "y"});
    RatRing ring;
    std::mt19937_64 rng(7);
    QPoly a = random_qpoly(vars, rng, 4, 3);
    QPoly acc = QPoly::constant(vars, ring, mpq_class(1));
    for (int n = 0; n <= 5; ++n) {
        CHECK(a.pow(n) == acc);
        acc = acc * a;
    }
}

TEST_CASE("terms are sorted in strictly descending graded-lex order") {
    auto vars = VarSet::make({"x", "y", "z"});
    std::mt19937_64 rng(11);
    QPoly a = random_qpoly(vars, rng, 12, 5);
    const auto& ts = a.terms();
    for (std::size_t i = 1; i < ts.size(); ++i)
        CHECK(grlex_less(ts[i].first, ts[i - 1].first));
}

TEST_CASE("parse and str round-trip") {
    auto vars = VarSet::make({"a", "b", "x", "y"});
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        QPoly a = random_qpoly(vars, rng, 6, 4);
        CHECK(parse_qpoly(a.str(), vars) == a);
    }
    RatRing ring;
    CHECK(parse_qpoly("0", vars) == QPoly::zero(vars, ring));
    QPoly p = parse_qpoly("3/2*x^2*y - a*b + 5", vars);
    CHECK(p.term_count() == 3);
    CHECK(parse_qpoly(p.str(), vars) == p);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto vars = VarSet::make({"x", "y", "z"});
    RatRing ring;
    std::mt19937_64 rng(3);
    int xi = vars->index("x");
    QPoly target = random_qpoly(vars, rng, 3, 2);
    std::map<int, QPoly> bind{{xi, target}};
    for (int trial = 0; trial < 10; ++trial) {
        QPoly a = random_qpoly(vars, rng, 4, 3);
        QPoly b = random_qpoly(vars, rng, 4, 3);
        CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
        CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
    }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
    auto vars = VarSet::make({"x", "y"});
    std::mt19937_64 rng(5);
    int xi = vars->index("x");
    for (int trial = 0; trial < 10; ++trial) {
        QPoly a = random_qpoly(vars, rng, 4, 4);
        QPoly b = random_qpoly(vars, rng, 4, 4);
        CHECK((a * b).diff(xi) == a.diff(xi) * b + a * b.diff(xi));
    }
    // iterated derivative agrees with repetition
    QPoly a = random_qpoly(vars, rng, 6, 5);
    CHECK(a.diff(xi, 3) == a.diff(xi).diff(xi).diff(xi));
}

TEST_CASE("high-order derivative coefficients stay exact beyond 64 bits") {
    auto vars = VarSet::make({"x", "y"});
    int xi = vars->index("x");
    QPoly p = QPoly::monomial(vars, RatRing{}, Monomial::var(xi, 21), 1);
    // 21! does not fit in a signed 64-bit integer
    mpz_class f21 = 1;
    for (int i = 2; i <= 21; ++i) f21 *= i;
    QPoly d = p.diff(xi, 21);
    REQUIRE(d.term_count() == 1);
    CHECK(d.terms()[0].second == mpq_class(f21));
    // and the same derivative over a prime field matches the exact value mod p
    FpRing fp(109);
    FpPoly q = FpPoly::monomial(vars, fp, Monomial::var(xi, 21), 1);
    CHECK(q.diff(xi, 21).terms()[0].second == fp.from_mpz(f21));
}

TEST_CASE("homogeneous slicing") {
    auto vars = VarSet::make({"x", "y"});
    QPoly p = parse_qpoly("x^3 + 2*x*y^2 + 5*x*y + 7", vars);
    std::vector<int> all{0, 1};
    CHECK(!p.homogeneous_degree_in(all));
    QPoly cubic = p.homogeneous_component(all, 3);
    CHECK(cubic == parse_qpoly("x^3 + 2*x*y^2", vars));
    CHECK(cubic.homogeneous_degree_in(all) == 3);
    QPoly sum = QPoly::zero(vars, p.ring());
    for (int d = 0; d <= p.deg(); ++d) sum = sum + p.homogeneous_component(all, d);
    CHECK(sum == p);
}

TEST_CASE("coefficient extraction") {
    auto vars = VarSet::make({"a", "x", "y"});
    QPoly p = parse_qpoly("3*a*x^2*y + x^2 - 4*a^2*y", vars);
    int xi = vars->index("x");
    CHECK(p.coefficient_of(xi, 2) == parse_qpoly("3*a*y + 1", vars));
    CHECK(p.coefficient_of(xi, 0) == parse_qpoly("-4*a^2*y", vars));
    CHECK(p.coefficient_of(xi, 5).is_zero());
}

TEST_CASE("full evaluation matches substitution of constants") {
    auto vars = VarSet::make({"x", "y"});
    QPoly p = parse_qpoly("x^2*y - 3*x + 1/2", vars);
    mpq_class v = p.eval({mpq_class(2), mpq_class(-3)});
    CHECK(v == mpq_class(4 * (-3) - 6) + mpq_class(1, 2));
}

TEST_CASE("mod-p reduction is a ring homomorphism") {
    auto vars = VarSet::make({"x", "y"});
    FpRing fp(101);
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        QPoly a = random_qpoly(vars, rng, 5, 3);
        QPoly b = random_qpoly(vars, rng, 5, 3);
        FpPoly ra = reduce_mod_p(a, fp, vars);
        FpPoly rb = reduce_mod_p(b, fp, vars);
        CHECK(reduce_mod_p(a * b, fp, vars) == ra * rb);
        CHECK(reduce_mod_p(a + b, fp, vars) == ra + rb);
    }
    // denominators are cleared through modular inverses
    QPoly half = parse_qpoly("1/2*x", vars);
    FpPoly r = reduce_mod_p(half, fp, vars);
    CHECK(r.terms().front().second == fp.F.inv(2));
}

TEST_CASE("prime field arithmetic") {
    PrimeField F(109);
    for (std::uint64_t a = 1; a < 109; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK(F.add(108, 1) == 0);
    CHECK(F.neg(0) == 0);
    CHECK(F.factorial(0) == 1);
    std::uint64_t f = 1;
    for (std::uint64_t i = 1; i <= 12; ++i) {
        f = F.mul(f, i);
        CHECK(F.factorial(static_cast<unsigned>(i)) == f);
    }
}

TEST_CASE("JSON round-trip") {
    auto vars = VarSet::make({"a", "x", "y"});
    std::mt19937_64 rng(21);
    QPoly p = random_qpoly(vars, rng, 8, 4);
    auto j = poly_to_json(p);
    CHECK(j.at("vars").get<std::vector<std::string>>() == vars->names());
    CHECK(qpoly_from_json(j.at("terms"), vars) == p);
    CHECK(qpoly_from_json(poly_to_json(QPoly::zero(vars, p.ring())).at("terms"), vars).is_zero());
}

TEST_CASE("grevlex and grlex orders are total and compatible with degree") {
    auto vars = VarSet::make({"x", "y", "z"});
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> expo(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial a, b;
        for (int v = 0; v < 3; ++v) {
            a.set(v, expo(rng));
            b.set(v, expo(rng));
        }
        if (a.deg() != b.deg()) {
            CHECK(grlex_less(a, b) == (a.deg() < b.deg()));
            CHECK(grevlex_less(a, b, 3) == (a.deg() < b.deg()));
        }
        if (!(a == b)) {
            CHECK(grlex_less(a, b) != grlex_less(b, a));
            CHECK(grevlex_less(a, b, 3) != grevlex_less(b, a, 3));
        } else {
            CHECK(!grlex_less(a, b));
            CHECK(!grevlex_less(a, b, 3));
        }
    }
}
