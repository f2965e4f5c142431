#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace decinv {

/// Exponent vector, fixed capacity 16, entries 0..255. Positions beyond the
/// active variable set are always zero, so equality and hashing can ignore
/// the variable count.
struct Monomial {
    std::array<std::uint8_t, 16> e{};

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int exp = 1) {
        Monomial m;
        m.set(i, exp);
        return m;
    }

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

    void set(int i, int exp) {
        if (exp < 0 || exp > 255) throw std::overflow_error("Monomial: exponent out of range");
        e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(exp);
    }

    int deg() const {
        int d = 0;
        for (auto v : e) d += v;
        return d;
    }

    template <class Indices>
    int deg_in(const Indices& idx) const {
        int d = 0;
        for (int i : idx) d += e[static_cast<std::size_t>(i)];
        return d;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < 16; ++i) {
            int s = e[i] + o.e[i];
            if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < 16; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // Requires this->divides(o).
    Monomial quotient_into(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < 16; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        for (std::size_t i = 0; i < 16; ++i) r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
        return r;
    }

    std::uint64_t lo() const {
        std::uint64_t v;
        std::memcpy(&v, e.data(), 8);
        return v;
    }
    std::uint64_t hi() const {
        std::uint64_t v;
        std::memcpy(&v, e.data() + 8, 8);
        return v;
    }
};

// Graded lexicographic: higher total degree first, ties broken by the
// earliest variable with a larger exponent.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < 16; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

inline bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_less(b, a); }

// Graded reverse lexicographic on the first nvars positions.
inline bool grevlex_less(const Monomial& a, const Monomial& b, int nvars) {
    int da = 0, db = 0;
    for (int i = 0; i < nvars; ++i) {
        da += a.e[static_cast<std::size_t>(i)];
        db += b.e[static_cast<std::size_t>(i)];
    }
    if (da != db) return da < db;
    for (int i = nvars - 1; i >= 0; --i) {
        int d = a.e[static_cast<std::size_t>(i)] - b.e[static_cast<std::size_t>(i)];
        if (d != 0) return d > 0; // larger exponent on a later variable = smaller
    }
    return false;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = m.lo() * 0x9e3779b97f4a7c15ull;
        h ^= h >> 32;
        h += m.hi() * 0xbf58476d1ce4e5b9ull;
        h ^= h >> 29;
        h *= 0x94d049bb133111ebull;
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

} // namespace decinv
