#pragma once

#include <gmpxx.h>

#include <vector>

namespace decinv {

/// Cayley-Sylvester dimension counting for invariants of binary forms,
/// the Poincare series and its numerator against a parameter-system
/// denominator. All counts are exact integers.

/// Number of partitions of k into at most max_parts parts, each at most
/// max_part.
mpz_class partition_count(int k, int max_parts, int max_part);

/// dim I_m for binary forms of degree n:
///   partition_count(nm/2, m, n) - partition_count(nm/2 - 1, m, n),
/// and 0 when nm is odd.
mpz_class dim_invariants(int n, int m);

/// Coefficients of the Poincare series P(t) = sum dim I_m t^m.
struct DimensionTable {
    int n;
    std::vector<mpz_class> coeffs; // coeffs[m] = dim I_m, m = 0..max_degree
};

DimensionTable poincare_table(int n, int max_degree);

/// Numerator a(t) with P(t) = a(t) / prod (1 - t^{d_i}).
struct NumeratorTable {
    std::vector<int> degrees;
    std::vector<mpz_class> coeffs;
};

/// a(t) = P(t) * prod (1 - t^{d_i}), truncated at the table length.
/// Coefficients beyond `certified_through` = len(table) - 1 are unknown.
NumeratorTable numerator(const DimensionTable& table, const std::vector<int>& degrees);

/// Index of the last nonzero coefficient.
int degree_bound(const NumeratorTable& num);

/// Expand a(t) / prod (1 - t^{d_i}) back into a series; used as a
/// reconstruction cross-check against the Poincare table.
std::vector<mpz_class> reconstruct_series(const NumeratorTable& num, int max_degree);

} // namespace decinv
