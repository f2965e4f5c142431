#include "decinv/modlin.hpp"

#include <functional>
#include <stdexcept>

namespace decinv {

bool IncrementalSpan::insert(std::vector<std::uint64_t> v) {
    // forward elimination against existing pivots
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::size_t pc = static_cast<std::size_t>(pivots_[r]);
        std::uint64_t c = at(v, pc);
        if (c == 0) continue;
        const auto& row = rows_[r];
        std::uint64_t f = F_.neg(c); // v += f * row  (pivot of row is 1)
        if (row.size() > v.size()) v.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0) v[i] = F_.add(v[i], F_.mul(f, row[i]));
    }
    std::size_t piv = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            piv = i;
            break;
        }
    if (piv == v.size()) return false; // dependent

    std::uint64_t inv = F_.inv(v[piv]);
    for (auto& c : v) c = F_.mul(c, inv);
    // back-substitute into stored rows to keep reduced echelon form
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& row = rows_[r];
        std::uint64_t c = at(row, piv);
        if (c == 0) continue;
        std::uint64_t f = F_.neg(c);
        if (v.size() > row.size()) row.resize(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) row[i] = F_.add(row[i], F_.mul(f, v[i]));
    }
    row_by_pivot_.emplace(static_cast<int>(piv), static_cast<int>(rows_.size()));
    pivots_.push_back(static_cast<int>(piv));
    rows_.push_back(std::move(v));
    return true;
}

std::vector<std::uint64_t> vectorize(const FpPoly& p, MonomialInterner& interner) {
    std::vector<std::uint64_t> v;
    for (auto& [m, c] : p.terms()) {
        int col = interner.intern(m);
        if (static_cast<std::size_t>(col) >= v.size())
            v.resize(static_cast<std::size_t>(col) + 1, 0);
        v[static_cast<std::size_t>(col)] = c;
    }
    return v;
}

std::vector<std::uint64_t> slice_vectorize(const FpPoly& p, const std::vector<int>& vars, int d) {
    if (!p.is_zero()) {
        auto hd = p.homogeneous_degree_in(vars);
        if (!hd || *hd != d)
            throw std::invalid_argument("slice_vectorize: polynomial not homogeneous of degree");
    }
    // enumerate the degree-d monomials in descending graded-lex order
    std::vector<Monomial> basis;
    std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t i, int rem, Monomial m) {
        if (i + 1 == vars.size()) {
            m.set(vars[i], rem);
            basis.push_back(m);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            Monomial mm = m;
            mm.set(vars[i], e);
            rec(i + 1, rem - e, mm);
        }
    };
    if (vars.empty()) throw std::invalid_argument("slice_vectorize: empty variable list");
    rec(0, d, Monomial::one());

    std::unordered_map<Monomial, std::size_t, MonomialHash> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    std::vector<std::uint64_t> v(basis.size(), 0);
    for (auto& [m, c] : p.terms()) {
        auto it = pos.find(m);
        if (it == pos.end())
            throw std::invalid_argument("slice_vectorize: term outside the slice");
        v[it->second] = c;
    }
    return v;
}

long slice_dimension(int nvars, int d) {
    // C(d + nvars - 1, nvars - 1)
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(d + nvars - 1),
                 static_cast<unsigned long>(nvars - 1));
    return b.get_si();
}

} // namespace decinv
