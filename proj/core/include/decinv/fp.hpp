#pragma once

#include <cstdint>
#include <stdexcept>

namespace decinv {

/// Arithmetic in Z/p for an odd prime p. The search default is p = 109,
/// the parameter-system replication uses p = 197; any prime > 50 is accepted
/// (smaller primes risk collapsing the small integer coefficients that
/// appear throughout the catalog).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p, bool allow_small = false) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus must be prime");
        if (!allow_small && p <= 50)
            throw std::invalid_argument("PrimeField: modulus must exceed 50");
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }
    std::uint64_t from_long(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(r);
    }
    // n! mod p; requires n < p so the factorial is invertible.
    std::uint64_t factorial(unsigned n) const {
        if (n >= p_) throw std::domain_error("PrimeField: factorial argument >= modulus");
        std::uint64_t r = 1;
        for (unsigned i = 2; i <= n; ++i) r = mul(r, i);
        return r;
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

} // namespace decinv
