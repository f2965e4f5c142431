#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <random>

#include "decinv/basisearch.hpp"
#include "decinv/nullcone.hpp"

using namespace decinv;

TEST_CASE("first reduction step sends the degree-2 invariant to a nonzero image") {
    FpRing ring(109);
    RatRing qr;
    QForm f = generic_form<RatRing>(10, VarSet::decimic(), qr);
    QPoly j2 = transvectant(f, f, 10).body;
    FpPoly s1 = reduce_step1(j2, ring);
    // a4 = a7 = a9 = 0, a10 = 1: image proportional to a0 + 45 a2 a8 - 126 a5^2
    CHECK_FALSE(s1.is_zero());
    auto vars = step1_vars();
    FpPoly want = reduce_mod_p(parse_qpoly("2*a0 + 90*a2*a8 - 252*a5^2", vars), ring, vars);
    CHECK(s1 == want);
    // the full reduction then substitutes a0 and kills it
    CHECK(reduce_full(j2, ring).is_zero());
    // ... along with every multiple
    QPoly j4 = transvectant(transvectant(f, f, 8), transvectant(f, f, 8), 4).body;
    CHECK(reduce_full(j2 * j2, ring).is_zero());
    CHECK(reduce_full(j2 * j4, ring).is_zero());
    CHECK_FALSE(reduce_full(j4, ring).is_zero());
}

TEST_CASE("direct Fp reduction agrees with the rational route") {
    FpRing ring(109);
    RatRing qr;
    auto vars = VarSet::decimic();
    QForm f = generic_form<RatRing>(10, vars, qr);
    for (int k : {8, 6}) {
        QPoly p = transvectant(f, f, k).body;
        FpPoly direct = reduce_full_fp(reduce_mod_p(p, ring, vars));
        CHECK(direct == reduce_full(p, ring));
    }
}

TEST_CASE("reduction is multiplicative at sample points") {
    FpRing ring(109);
    RatRing qr;
    auto vars = VarSet::decimic();
    QForm f = generic_form<RatRing>(10, vars, qr);
    QPoly a = transvectant(f, f, 10).body;
    QPoly b = transvectant(transvectant(f, f, 8), transvectant(f, f, 8), 4).body;
    CHECK(reduce_full(a * b, ring) == reduce_full(a, ring) * reduce_full(b, ring));
    CHECK(reduce_full(a + b * b, ring) ==
          reduce_full(a, ring) + reduce_full(b, ring) * reduce_full(b, ring));
}

TEST_CASE("reduced decimic matches reducing the generic decimic") {
    FpRing ring(109);
    RatRing qr;
    QForm f = generic_form<RatRing>(10, VarSet::decimic(), qr);
    FpForm red = reduced_decimic(ring);
    CHECK(red.order == 10);
    CHECK(red.body == reduce_full(f.body, ring));
    FpForm s1 = step1_decimic(ring);
    CHECK(s1.body == reduce_step1(f.body, ring));
}

TEST_CASE("target dimensions from the dimension series") {
    CHECK(target_dim(2) == 1); // pinned: the degree-2 invariant itself
    CHECK(target_dim(3) == 0);
    CHECK(target_dim(4) == 1);  // 2 - 1
    CHECK(target_dim(6) == 4);  // 6 - 2
    CHECK(target_dim(7) == 0);
    CHECK(target_dim(8) == 6);  // 12 - 6
    CHECK(target_dim(9) == 5);
    CHECK(target_dim(10) == 12); // 24 - 12
    CHECK(target_dim(20) == 221); // 540 - 319
    CHECK(target_dim(24) == 542); // 1429 - 887
}

TEST_CASE("products of basics enumerates weighted monomials") {
    // degrees {2}: only j2^2 at total degree 4
    CHECK(products_of_basics({2}, 4) == std::vector<std::vector<int>>{{2}});
    // degrees {2,4} at 6: j2^3 and j2*j4
    auto got = products_of_basics({2, 4}, 6);
    CHECK(got.size() == 2);
    for (auto& e : got) CHECK(2 * e[0] + 4 * e[1] == 6);
    // odd total degree from even generators: nothing
    CHECK(products_of_basics({2, 4}, 7).empty());
    CHECK(products_of_basics({2, 4}, 0).empty());
    // degrees {2,3} at 12: 2a+3b=12 -> (0,4),(3,2),(6,0)
    CHECK(products_of_basics({2, 3}, 12).size() == 3);
}

TEST_CASE("random invariants are deterministic under the seed and degree-correct") {
    FpRing ring(109);
    FpForm f = reduced_decimic(ring);
    std::mt19937_64 rng1(5), rng2(5);
    auto r1 = random_invariant(4, f, rng1);
    auto r2 = random_invariant(4, f, rng2);
    REQUIRE(r1.has_value());
    REQUIRE(r2.has_value());
    CHECK(r1->expr->str() == r2->expr->str());
    CHECK(r1->value.body == r2->value.body);
    CHECK(r1->value.order == 0);
    CHECK_FALSE(r1->value.is_zero());
}

TEST_CASE("degree-2 random invariants reduce to the pinned generator") {
    // every degree-2 invariant is a multiple of the full transvectant, whose
    // reduced image is zero; checked against the unreduced decimic instead
    FpRing ring(109);
    auto vars = VarSet::decimic();
    FpForm f = generic_form<FpRing>(10, vars, ring);
    FpPoly j2 = transvectant(f, f, 10).body;
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 3; ++trial) {
        auto r = random_invariant(2, f, rng);
        REQUIRE(r.has_value());
        // proportional: r = c * j2 for some scalar c
        const auto& lead = r->value.body.terms().front();
        std::uint64_t c = ring.F.mul(lead.second, ring.F.inv(j2.coeff(lead.first)));
        CHECK(r->value.body == j2.scaled(c));
    }
}

TEST_CASE("search saturates the low degrees with the reference counts") {
    SearchState st(109, 1);
    REQUIRE(st.run_to(10));
    const std::map<int, int> expected_dm{{2, 1}, {3, 0}, {4, 1}, {5, 0}, {6, 4},
                                         {7, 0}, {8, 5}, {9, 5}, {10, 8}};
    for (auto& [m, dm] : expected_dm) {
        const DegreeRow* row = st.row(m);
        REQUIRE(row != nullptr);
        CHECK(row->complete);
        CHECK(row->dm == dm);
        CHECK(row->rank == target_dim(m));
        CHECK(static_cast<int>(row->new_generators.size()) == dm);
    }
    CHECK(st.complete_through(10));
    CHECK_FALSE(st.complete_through(12));
    // slice bases have the advertised ranks
    CHECK(static_cast<int>(st.slice_basis(10).size()) == target_dim(10));
    // running a degree out of order is refused
    CHECK_THROWS(st.run_degree(14));
}

TEST_CASE("two primes agree on the new-generator counts") {
    SearchState a(109, 1), b(197, 2);
    REQUIRE(a.run_to(8));
    REQUIRE(b.run_to(8));
    for (int m = 2; m <= 8; ++m) CHECK(a.row(m)->dm == b.row(m)->dm);
}

TEST_CASE("checkpoint save/load resumes identically") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "decinv-test-ckpt";
    fs::remove_all(dir);
    fs::create_directories(dir);

    SearchState a(109, 7);
    REQUIRE(a.run_to(8));
    a.save(dir.string());

    SearchState b = SearchState::load(dir.string());
    CHECK(b.prime() == 109);
    CHECK(b.seed() == 7);
    REQUIRE(b.row(8) != nullptr);
    CHECK(b.row(8)->dm == a.row(8)->dm);
    for (std::size_t i = 0; i < a.basics().size(); ++i) {
        CHECK(a.basics()[i].expr == b.basics()[i].expr);
        CHECK(a.basics()[i].degree == b.basics()[i].degree);
        CHECK(a.basics()[i].reduced == b.basics()[i].reduced);
    }

    // continuing from the checkpoint gives the same rows as an uninterrupted run
    SearchState c(109, 7);
    REQUIRE(c.run_to(10));
    b.run_degree(9);
    b.run_degree(10);
    for (int m : {9, 10}) {
        CHECK(b.row(m)->dm == c.row(m)->dm);
        CHECK(b.row(m)->new_generators == c.row(m)->new_generators);
        CHECK(b.row(m)->candidates == c.row(m)->candidates);
    }
    fs::remove_all(dir);
}

TEST_CASE("selection parser") {
    auto sel = parse_selection("4,6,8,9,14,10:j10");
    REQUIRE(sel.size() == 6);
    CHECK(sel[0].degree == 4);
    CHECK(sel[0].symbol.empty());
    CHECK(sel[5].degree == 10);
    CHECK(sel[5].symbol == "j10");
    CHECK(parse_selection("4,").size() == 1); // trailing separators are ignored
    CHECK_THROWS(parse_selection(""));
    CHECK_THROWS(parse_selection("x"));
}

TEST_CASE("graded ideal dimension at a small degree") {
    SearchState st(109, 1);
    REQUIRE(st.run_to(8));
    // the ideal generated by all invariants of degree 2 and 4 inside
    // degree 8: j2 I_6 + j4 I_4 modulo the reduction; j2 dies, so this is
    // the image of j4 I_4, spanned by j4^2 and j4 j2^2 -> j4^2 only, rank 1
    auto rep = graded_ideal_dimension(st, parse_selection("2,4"), 8);
    CHECK(rep.m == 8);
    CHECK(rep.rank == 1);
    CHECK_FALSE(rep.full);
    // all degrees up through 8 span everything at degree 8
    auto rep2 = graded_ideal_dimension(st, parse_selection("2,4,6,8"), 8);
    CHECK(rep2.rank == rep2.target);
    CHECK(rep2.full);
}
