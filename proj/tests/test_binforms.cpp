#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "decinv/binform.hpp"

using namespace decinv;

namespace {

QForm generic10() {
    return generic_form<RatRing>(10, VarSet::decimic(), RatRing{});
}

} // namespace

TEST_CASE("generic form layout") {
    auto f = generic10();
    CHECK(f.order == 10);
    CHECK(f.adeg == 1);
    CHECK(f.body.term_count() == 11);
    auto vars = f.body.vars();
    // coefficient of x^10 is a0, of x^5 y^5 is C(10,5) a5 = 252 a5
    int xi = vars->index("x"), yi = vars->index("y");
    QPoly mid = f.body.coefficient_of(xi, 5).coefficient_of(yi, 5);
    CHECK(mid == parse_qpoly("252*a5", vars));
    CHECK(f.body.coefficient_of(xi, 10).coefficient_of(yi, 0) == parse_qpoly("a0", vars));
}

TEST_CASE("form wrapper validates homogeneity") {
    auto vars = VarSet::decimic();
    RatRing ring;
    CHECK_THROWS(make_form(parse_qpoly("x^2 + y", vars), 2, 0));
    CHECK_THROWS(make_form(parse_qpoly("a0*x^2", vars), 2, 2));
    QForm ok = make_form(parse_qpoly("a0*x^2 + a1*x*y", vars), 2, 1);
    CHECK(ok.order == 2);
}

TEST_CASE("tenth derivative in x recovers 10! a0") {
    auto f = generic10();
    int xi = f.body.vars()->index("x");
    QPoly d = f.body.diff(xi, 10);
    CHECK(d == parse_qpoly("3628800*a0", f.body.vars()));
}

TEST_CASE("transvectant index symmetry (f,g)_k = (-1)^k (g,f)_k") {
    auto vars = VarSet::decimic();
    RatRing ring;
    QForm f = generic_form<RatRing>(10, vars, ring);
    QForm g = make_form(parse_qpoly("a0*x^4 + 4*a1*x^3*y + a2*y^4", vars), 4, 1);
    for (int k = 0; k <= 4; ++k) {
        QForm fg = transvectant(f, g, k);
        QForm gf = transvectant(g, f, k);
        QPoly want = (k % 2 == 0) ? gf.body : -gf.body;
        CHECK(fg.body == want);
        CHECK(fg.order == 10 + 4 - 2 * k);
        CHECK(fg.adeg == 2);
    }
}

TEST_CASE("zeroth transvectant is the product") {
    auto f = generic10();
    CHECK(transvectant(f, f, 0).body == (f.body * f.body));
}

TEST_CASE("transvectant is bilinear") {
    auto vars = VarSet::decimic();
    RatRing ring;
    QForm g = make_form(parse_qpoly("a0*x^4 + a1*x^2*y^2", vars), 4, 1);
    QForm h = make_form(parse_qpoly("a2*x^3*y + 5*a3*y^4", vars), 4, 1);
    QForm w = make_form(parse_qpoly("a4*x^6 + a5*x^3*y^3 + a6*y^6", vars), 6, 1);
    for (int k = 0; k <= 4; ++k) {
        QForm lhs = transvectant(form_sum(g, h), w, k);
        QForm rhs = form_sum(transvectant(g, w, k), transvectant(h, w, k));
        CHECK(lhs.body == rhs.body);
    }
}

TEST_CASE("full transvectant of the decimic with itself") {
    auto f = generic10();
    QForm j2 = transvectant(f, f, 10);
    CHECK(j2.order == 0);
    CHECK(j2.adeg == 2);
    CHECK(j2.body == parse_qpoly("-252*a5^2 + 420*a4*a6 - 240*a3*a7 + 90*a2*a8 - "
                                 "20*a1*a9 + 2*a0*a10",
                                 f.body.vars()));
}

TEST_CASE("odd transvectants of a form with itself vanish") {
    auto f = generic10();
    for (int k = 1; k <= 9; k += 2) CHECK(transvectant(f, f, k).is_zero());
}

TEST_CASE("direct transvectants of the generic decimic are integral") {
    auto f = generic10();
    for (int k = 0; k <= 10; k += 2) CHECK(is_integral(transvectant(f, f, k).body));
}

TEST_CASE("SL2 equivariance of invariants and covariance of transvectants") {
    auto f = generic10();
    std::array<std::array<long long, 2>, 2> M{{{2, 1}, {1, 1}}}; // det 1
    std::array<std::array<long long, 2>, 2> S{{{0, -1}, {1, 0}}};
    for (auto& mat : {M, S}) {
        QForm ft = apply_sl2(f, mat);
        // invariants are literally unchanged under substitution
        CHECK(transvectant(ft, ft, 10).body == transvectant(f, f, 10).body);
        // covariants transform by the same substitution
        QForm k1 = transvectant(ft, ft, 8);
        QForm k2 = apply_sl2(transvectant(f, f, 8), mat);
        CHECK(k1.body == k2.body);
    }
    CHECK_THROWS(apply_sl2(f, std::array<std::array<long long, 2>, 2>{{{2, 0}, {0, 1}}}));
}

TEST_CASE("Fp and rational transvectants agree after reduction") {
    auto vars = VarSet::decimic();
    RatRing qring;
    FpRing fring(109);
    QForm fq = generic_form<RatRing>(10, vars, qring);
    FpForm fp = generic_form<FpRing>(10, vars, fring);
    for (int k : {2, 4, 8, 10}) {
        QForm tq = transvectant(fq, fq, k);
        FpForm tp = transvectant(fp, fp, k);
        CHECK(reduce_mod_p(tq.body, fring, vars) == tp.body);
    }
}

TEST_CASE("product, sum and power bookkeeping") {
    auto f = generic10();
    QForm p = form_product(f, f);
    CHECK(p.order == 20);
    CHECK(p.adeg == 2);
    QForm pw = form_pow(f, 3);
    CHECK(pw.order == 30);
    CHECK(pw.adeg == 3);
    CHECK(pw.body == (f.body * f.body * f.body));
    CHECK_THROWS(form_sum(f, transvectant(f, f, 8)));
}

TEST_CASE("x^8 coefficient of k squared matches the squared seed") {
    // the x^4 coefficient of k = (f,f)_8 is 70 a4^2 - 112 a3 a5 + 56 a2 a6
    // - 16 a1 a7 + 2 a0 a8; squaring k doubles it on x^8
    auto f = generic10();
    auto vars = f.body.vars();
    QForm k = transvectant(f, f, 8);
    int xi = vars->index("x"), yi = vars->index("y");
    QPoly seed = k.body.coefficient_of(xi, 4).coefficient_of(yi, 0);
    CHECK(seed == parse_qpoly("70*a4^2 - 112*a3*a5 + 56*a2*a6 - 16*a1*a7 + 2*a0*a8", vars));
    QForm k2 = form_pow(k, 2);
    CHECK(k2.body.coefficient_of(xi, 8).coefficient_of(yi, 0) == seed * seed);
}

TEST_CASE("transvectant rejects out-of-range indices") {
    auto f = generic10();
    CHECK_THROWS(transvectant(f, f, 11));
    CHECK_THROWS(transvectant(f, f, -1));
}
