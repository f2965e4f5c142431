#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "decinv/hilbert.hpp"

using namespace decinv;

namespace {

// Independent oracle: partitions of k into at most `parts` parts each at
// most `cap`, by the textbook recursion on the largest allowed part.
mpz_class partition_oracle(int k, int parts, int cap) {
    if (k < 0 || parts < 0) return 0;
    if (k == 0) return 1;
    if (parts == 0 || cap <= 0) return 0;
    return partition_oracle(k, parts, cap - 1) + partition_oracle(k - cap, parts - 1, cap);
}

} // namespace

TEST_CASE("partition counts match a direct oracle") {
    for (int k = 0; k <= 18; ++k)
        for (int parts : {1, 2, 3, 5, 8})
            for (int cap : {1, 2, 4, 7, 10})
                CHECK(partition_count(k, parts, cap) == partition_oracle(k, parts, cap));
}

TEST_CASE("partition count boundary behaviour") {
    CHECK(partition_count(0, 0, 0) == 1);
    CHECK(partition_count(1, 0, 5) == 0);
    CHECK(partition_count(1, 5, 0) == 0);
    CHECK(partition_count(-1, 3, 3) == 0);
    CHECK(partition_count(9, 3, 3) == 1); // 3+3+3 only
    CHECK(partition_count(10, 3, 3) == 0);
}

TEST_CASE("odd products give no invariants") {
    CHECK(dim_invariants(10, 3) == 0);
    CHECK(dim_invariants(10, 5) == 0);
    CHECK(dim_invariants(3, 3) == 0);
}

TEST_CASE("classical dimension values for small forms") {
    // binary quadratic: only powers of the discriminant
    for (int m = 0; m <= 12; m += 2) CHECK(dim_invariants(2, m) == 1);
    // binary quartic: generated by two free invariants of degrees 2, 3
    // so dim I_m = #partitions of m into 2s and 3s
    auto quartic = [](int m) {
        int c = 0;
        for (int two = 0; 2 * two <= m; ++two)
            if ((m - 2 * two) % 3 == 0) ++c;
        return c;
    };
    for (int m = 0; m <= 14; ++m) CHECK(dim_invariants(4, m) == quartic(m));
}

TEST_CASE("Hermite reciprocity: dim I_m(V_n) = dim I_n(V_m)") {
    for (int n = 2; n <= 12; ++n)
        for (int m = 2; m <= 12; ++m)
            CHECK(dim_invariants(n, m) == dim_invariants(m, n));
}

TEST_CASE("decimic dimension series, degrees 0 through 48") {
    const long expected[] = {1,    0,    1,    0,    2,    0,    6,    0,    12,   5,
                             24,   13,   52,   33,   97,   80,   177,  160,  319,  301,
                             540,  547,  887,  926,  1429, 1512, 2219, 2402, 3367, 3681,
                             5015, 5502, 7294, 8064, 10419, 11550, 14664, 16253, 20287, 22531,
                             27682, 30738, 37319, 41378, 49671, 55060, 65390, 72391, 85250};
    DimensionTable t = poincare_table(10, 48);
    REQUIRE(t.coeffs.size() == 49);
    for (int m = 0; m <= 48; ++m)
        CHECK(t.coeffs[static_cast<std::size_t>(m)] == expected[m]);
}

TEST_CASE("numerator against the parameter-system denominator") {
    const std::vector<int> degs{2, 4, 6, 6, 8, 9, 10, 14};
    DimensionTable t = poincare_table(10, 58);
    NumeratorTable num = numerator(t, degs);
    CHECK(degree_bound(num) == 48);

    // palindromic: a_i = a_{48-i}
    for (int i = 0; i <= 48; ++i)
        CHECK(num.coeffs[static_cast<std::size_t>(i)] ==
              num.coeffs[static_cast<std::size_t>(48 - i)]);

    const std::pair<int, long> nonzero[] = {
        {0, 1},   {6, 2},   {8, 4},   {9, 4},   {10, 7},  {11, 8},  {12, 15}, {13, 15},
        {14, 20}, {15, 27}, {16, 29}, {17, 35}, {18, 40}, {19, 44}, {20, 47}, {21, 55},
        {22, 52}, {23, 57}, {24, 56}, {25, 57}, {26, 52}, {27, 55}, {28, 47}, {29, 44},
        {30, 40}, {31, 35}, {32, 29}, {33, 27}, {34, 20}, {35, 15}, {36, 15}, {37, 8},
        {38, 7},  {39, 4},  {40, 4},  {42, 2},  {48, 1}};
    std::vector<mpz_class> want(49, 0);
    for (auto [i, c] : nonzero) want[static_cast<std::size_t>(i)] = c;
    for (int i = 0; i <= 48; ++i)
        CHECK(num.coeffs[static_cast<std::size_t>(i)] == want[static_cast<std::size_t>(i)]);

    // all coefficients are nonnegative (numerator of a free-module
    // decomposition over the parameter subalgebra)
    for (auto& c : num.coeffs) CHECK(c >= 0);
}

TEST_CASE("series reconstruction from the numerator") {
    const std::vector<int> degs{2, 4, 6, 6, 8, 9, 10, 14};
    // the table must extend past deg(numerator) + slack so the trailing
    // zeros of the numerator are certified, hence 58 rather than 48
    DimensionTable t = poincare_table(10, 58);
    NumeratorTable num = numerator(t, degs);
    std::vector<mpz_class> back = reconstruct_series(num, 58);
    REQUIRE(back.size() == t.coeffs.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == t.coeffs[i]);
}

TEST_CASE("numerator round-trips for small forms too") {
    struct Case {
        int n;
        std::vector<int> degs;
    };
    const Case cases[] = {{2, {2}}, {4, {2, 3}}, {6, {2, 4, 6, 10}}, {8, {2, 3, 4, 5, 6, 7}}};
    for (const auto& c : cases) {
        DimensionTable t = poincare_table(c.n, 30);
        NumeratorTable num = numerator(t, c.degs);
        std::vector<mpz_class> back = reconstruct_series(num, 24);
        for (int m = 0; m <= 24; ++m)
            CHECK(back[static_cast<std::size_t>(m)] == t.coeffs[static_cast<std::size_t>(m)]);
    }
}
