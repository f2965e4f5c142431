#include "decinv/hilbert.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace decinv {

namespace {

// partitions of k into at most m parts, each at most n, by the recurrence
// p(k,m,n) = p(k,m,n-1) + p(k-n,m-1,n)
mpz_class pc(int k, int m, int n, std::map<std::tuple<int, int, int>, mpz_class>& memo) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (m <= 0 || n <= 0) return 0;
    if (k > m * n) return 0;
    auto key = std::make_tuple(k, m, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    mpz_class r = pc(k, m, n - 1, memo) + pc(k - n, m - 1, n, memo);
    memo.emplace(key, r);
    return r;
}

} // namespace

mpz_class partition_count(int k, int max_parts, int max_part) {
    if (k < 0) return 0;
    std::map<std::tuple<int, int, int>, mpz_class> memo;
    return pc(k, max_parts, max_part, memo);
}

mpz_class dim_invariants(int n, int m) {
    if (n < 1 || m < 0) throw std::invalid_argument("dim_invariants: bad arguments");
    if ((static_cast<long long>(n) * m) % 2 != 0) return 0;
    int w = n * m / 2;
    std::map<std::tuple<int, int, int>, mpz_class> memo;
    return pc(w, m, n, memo) - pc(w - 1, m, n, memo);
}

DimensionTable poincare_table(int n, int max_degree) {
    DimensionTable t;
    t.n = n;
    t.coeffs.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int m = 0; m <= max_degree; ++m) t.coeffs.push_back(dim_invariants(n, m));
    return t;
}

NumeratorTable numerator(const DimensionTable& table, const std::vector<int>& degrees) {
    int sum_d = 0;
    for (int d : degrees) sum_d += d;
    // a(t) has degree at most sum(d_i) - (number of parameters minus the
    // top socle shift); requiring the table to reach sum_d - 8 plus slack
    // certifies the trailing zeros we report.
    if (static_cast<int>(table.coeffs.size()) <= sum_d - 8)
        throw std::invalid_argument("numerator: table too short to certify trailing zeros");
    NumeratorTable num;
    num.degrees = degrees;
    num.coeffs = table.coeffs;
    for (int d : degrees) {
        // multiply by (1 - t^d) in place
        for (int i = static_cast<int>(num.coeffs.size()) - 1; i >= d; --i)
            num.coeffs[static_cast<std::size_t>(i)] -= num.coeffs[static_cast<std::size_t>(i - d)];
    }
    return num;
}

int degree_bound(const NumeratorTable& num) {
    int last = 0;
    for (int i = 0; i < static_cast<int>(num.coeffs.size()); ++i)
        if (num.coeffs[static_cast<std::size_t>(i)] != 0) last = i;
    return last;
}

std::vector<mpz_class> reconstruct_series(const NumeratorTable& num, int max_degree) {
    std::vector<mpz_class> s(num.coeffs.begin(),
                             num.coeffs.begin() +
                                 std::min<std::size_t>(num.coeffs.size(),
                                                       static_cast<std::size_t>(max_degree) + 1));
    s.resize(static_cast<std::size_t>(max_degree) + 1);
    for (int d : num.degrees) {
        // divide by (1 - t^d): s[i] += s[i-d]
        for (int i = d; i <= max_degree; ++i)
            s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - d)];
    }
    return s;
}

} // namespace decinv
