#include "decinv/basisearch.hpp"

#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "decinv/nullcone.hpp" // rng_int

namespace decinv {

namespace {

const QPoly& generic_decimic_body() {
    static const QPoly body =
        generic_form<RatRing>(10, VarSet::generic(10), RatRing{}).body;
    return body;
}

// Exact-arithmetic step: a4 = a7 = a9 = 0, a10 = 1, optionally
// a0 -> -45 a2 a8 + 126 a5^2, over Q; then mod p into `target`.
FpPoly reduce_via_q(const QPoly& p, const FpRing& ring, bool substitute_a0,
                    const VarSetPtr& target) {
    auto vars = p.vars();
    RatRing q;
    std::map<int, QPoly> bind;
    for (const char* n : {"a4", "a7", "a9"})
        if (vars->has(n)) bind.emplace(vars->index(n), QPoly::zero(vars, q));
    if (vars->has("a10")) bind.emplace(vars->index("a10"), QPoly::constant(vars, q, 1));
    if (substitute_a0 && vars->has("a0"))
        bind.emplace(vars->index("a0"),
                     parse_qpoly("-45*a2*a8 + 126*a5^2", vars));
    return reduce_mod_p(p.substitute(bind), ring, target);
}

} // namespace

VarSetPtr step1_vars() {
    static const VarSetPtr v =
        VarSet::make({"a0", "a1", "a2", "a3", "a5", "a6", "a8", "x", "y"});
    return v;
}

FpPoly reduce_step1(const QPoly& p, const FpRing& ring) {
    return reduce_via_q(p, ring, false, step1_vars());
}

FpPoly reduce_full(const QPoly& p, const FpRing& ring) {
    return reduce_via_q(p, ring, true, VarSet::reduced());
}

FpPoly reduce_full_fp(const FpPoly& p) {
    auto vars = p.vars();
    const FpRing& ring = p.ring();
    auto target = VarSet::reduced();
    // q = -45 a2 a8 + 126 a5^2 over the target ring
    FpPoly q = [&] {
        std::vector<FpPoly::Term> ts;
        Monomial m1 = Monomial::var(target->index("a2"));
        m1.set(target->index("a8"), 1);
        ts.emplace_back(m1, ring.from_long(-45));
        ts.emplace_back(Monomial::var(target->index("a5"), 2), ring.from_long(126));
        return FpPoly::from_terms(target, ring, std::move(ts));
    }();
    std::vector<FpPoly> qpow{FpPoly::constant(target, ring, 1)};
    std::vector<int> map(vars->size(), -1);
    int i0 = vars->find("a0"), i4 = vars->find("a4"), i7 = vars->find("a7"),
        i9 = vars->find("a9"), i10 = vars->find("a10");
    for (std::size_t v = 0; v < vars->size(); ++v)
        map[v] = target->find(vars->name(static_cast<int>(v)));
    FpPoly out = FpPoly::zero(target, ring);
    for (const auto& [mon, c] : p.terms()) {
        if ((i4 >= 0 && mon[i4] > 0) || (i7 >= 0 && mon[i7] > 0) || (i9 >= 0 && mon[i9] > 0))
            continue;
        Monomial im;
        int a0pow = 0;
        bool ok = true;
        for (std::size_t v = 0; v < vars->size() && ok; ++v) {
            int e = mon[static_cast<int>(v)];
            if (e == 0) continue;
            if (static_cast<int>(v) == i0) {
                a0pow = e;
            } else if (static_cast<int>(v) == i10) {
                // a10 -> 1
            } else if (map[v] >= 0) {
                im.set(map[v], e);
            } else {
                throw std::invalid_argument("reduce_full_fp: variable " + vars->name(static_cast<int>(v)) +
                                            " has no image");
            }
        }
        while (static_cast<int>(qpow.size()) <= a0pow) qpow.push_back(qpow.back() * q);
        FpPoly term = FpPoly::monomial(target, ring, im, c);
        out = out + term * qpow[static_cast<std::size_t>(a0pow)];
    }
    return out;
}

FpForm reduced_decimic(const FpRing& ring) {
    return FpForm{reduce_full(generic_decimic_body(), ring), 10, 1};
}

FpForm step1_decimic(const FpRing& ring) {
    return FpForm{reduce_step1(generic_decimic_body(), ring), 10, 1};
}

int target_dim(int m) {
    if (m < 2) throw std::invalid_argument("target_dim: m must be >= 2");
    // j2 itself is the one new invariant of degree 2, even though
    // dim I_2 - dim I_0 = 0 with the constants counted.
    if (m == 2) return 1;
    mpz_class d = dim_invariants(10, m) - dim_invariants(10, m - 2);
    return static_cast<int>(d.get_si());
}

std::vector<std::vector<int>> products_of_basics(const std::vector<int>& degrees, int m) {
    std::vector<std::vector<int>> out;
    if (m <= 0) return out;
    for (int d : degrees)
        if (d <= 0) throw std::invalid_argument("products_of_basics: degrees must be positive");
    std::vector<int> expo(degrees.size(), 0);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int rest) {
        if (rest == 0) {
            out.push_back(expo);
            return;
        }
        if (i == degrees.size()) return;
        for (int e = 0; e * degrees[i] <= rest; ++e) {
            expo[i] = e;
            go(i + 1, rest - e * degrees[i]);
        }
        expo[i] = 0;
    };
    go(0, m);
    return out;
}

namespace {

struct GenCov {
    CovExprPtr e;
    FpForm v;
};

std::optional<GenCov> gen_cov(int m, const FpForm& f, std::mt19937_64& rng, int cap) {
    if (m == 1) return GenCov{CovExpr::leaf("f"), f};
    for (int t = 0; t < 6; ++t) {
        int m1 = static_cast<int>(rng_int(rng, 1, m - 1));
        auto a = gen_cov(m1, f, rng, cap);
        if (!a) continue;
        auto b = gen_cov(m - m1, f, rng, cap);
        if (!b) continue;
        int na = a->v.order, nb = b->v.order;
        int lo = std::max(0, (na + nb - cap + 1) / 2), hi = std::min(na, nb);
        if (lo > hi) continue;
        int k = static_cast<int>(rng_int(rng, lo, hi));
        FpForm v = transvectant(a->v, b->v, k);
        if (v.is_zero()) continue;
        return GenCov{CovExpr::transv(a->e, b->e, k), v};
    }
    return std::nullopt;
}

} // namespace

std::optional<RandomInvariant> random_invariant(int m, const FpForm& f, std::mt19937_64& rng,
                                                int order_cap, int max_tries) {
    if (m < 2) throw std::invalid_argument("random_invariant: m must be >= 2");
    for (int t = 0; t < max_tries; ++t) {
        int m1 = static_cast<int>(rng_int(rng, 1, m - 1));
        auto a = gen_cov(m1, f, rng, order_cap);
        if (!a) continue;
        auto b = gen_cov(m - m1, f, rng, order_cap);
        if (!b) continue;
        if (a->v.order != b->v.order) continue;
        FpForm v = transvectant(a->v, b->v, a->v.order);
        if (v.is_zero()) continue;
        return RandomInvariant{CovExpr::transv(a->e, b->e, a->v.order), std::move(v)};
    }
    return std::nullopt;
}

SearchState::SearchState(std::uint64_t prime, std::uint64_t seed)
    : prime_(prime), seed_(seed), ring_(prime), f_(reduced_decimic(ring_)), rng_(seed) {}

const DegreeRow* SearchState::row(int m) const {
    for (const auto& r : rows_)
        if (r.m == m) return &r;
    return nullptr;
}

const std::vector<FpPoly>& SearchState::slice_basis(int m) const {
    auto it = slice_.find(m);
    if (it == slice_.end())
        throw std::out_of_range("slice_basis: degree " + std::to_string(m) + " not run");
    return it->second;
}

bool SearchState::complete_through(int m) const {
    if (next_degree_ <= m) return false;
    for (const auto& r : rows_)
        if (r.m <= m && !r.complete) return false;
    return true;
}

const DegreeRow& SearchState::run_degree(int m, long budget_factor) {
    if (m != next_degree_)
        throw std::logic_error("run_degree: expected degree " + std::to_string(next_degree_));
    if (!rows_.empty() && !complete_through(m - 1))
        throw std::runtime_error("run_degree: an earlier degree is incomplete");

    DegreeRow row;
    row.m = m;
    row.target = target_dim(m);

    if (m == 2) {
        // j2 is killed by the a0 substitution by design, so the degree-2
        // slice is measured before that step: the image there is
        // proportional to a0 + 45 a2 a8 - 126 a5^2, visibly nonzero.
        FpForm fs = step1_decimic(ring_);
        FpForm j2_step1 = transvectant(fs, fs, 10);
        if (j2_step1.is_zero())
            throw std::logic_error("run_degree: j2 vanished before the a0 substitution");
        FpForm j2_red = transvectant(f_, f_, 10);
        if (!j2_red.is_zero())
            throw std::logic_error("run_degree: reduction failed to kill j2");
        row.rank = 1;
        row.rank_products = 0;
        row.dm = 1;
        row.candidates = 1;
        row.complete = true;
        row.new_generators = {"(f,f)_10"};
        basics_.push_back(BasicInvariant{"(f,f)_10", 2, j2_red.body});
        slice_[2] = {};
        rows_.push_back(std::move(row));
        ++next_degree_;
        return rows_.back();
    }

    MonomialInterner interner;
    IncrementalSpan span(ring_.F);
    std::vector<FpPoly> basis;

    if (row.target > 0) {
        // Products of known basics first: b * (spanning set of I_{m - deg b})
        // spans exactly the degree-m monomials in the basics, because the
        // lower slices are complete.
        for (const auto& b : basics_) {
            if (b.reduced.is_zero()) continue; // j2
            int rest = m - b.degree;
            if (rest < 2) continue;
            for (const FpPoly& h : slice_.at(rest)) {
                FpPoly prod = b.reduced * h;
                if (prod.is_zero()) continue;
                if (span.insert(vectorize(prod, interner))) basis.push_back(std::move(prod));
            }
        }
        row.rank_products = span.rank();

        long budget = budget_factor * row.target;
        long misfires = 0;
        while (span.rank() < row.target && row.candidates < budget && misfires < budget) {
            auto cand = random_invariant(m, f_, rng_);
            if (!cand) {
                ++misfires;
                continue;
            }
            ++row.candidates;
            FpPoly val = cand->value.body;
            if (span.insert(vectorize(val, interner))) {
                ++row.dm;
                std::string ex = cand->expr->str();
                row.new_generators.push_back(ex);
                basics_.push_back(BasicInvariant{ex, m, val});
                basis.push_back(std::move(val));
            }
        }
        row.rank = span.rank();
    }
    row.complete = row.rank == row.target;
    slice_[m] = std::move(basis);
    rows_.push_back(std::move(row));
    ++next_degree_;
    return rows_.back();
}

bool SearchState::run_to(int max_degree, long budget_factor) {
    while (next_degree_ <= max_degree) {
        const DegreeRow& r = run_degree(next_degree_, budget_factor);
        if (!r.complete) return false;
    }
    return complete_through(max_degree);
}

namespace {

void write_fp_poly(std::ostream& os, const FpPoly& p) {
    os << p.term_count();
    for (const auto& [m, c] : p.terms()) {
        os << " " << c;
        for (std::size_t v = 0; v < p.vars()->size(); ++v) os << ":" << m[static_cast<int>(v)];
    }
    os << "\n";
}

FpPoly read_fp_poly(std::istream& is, const VarSetPtr& vars, const FpRing& ring) {
    std::size_t n;
    is >> n;
    std::vector<FpPoly::Term> ts;
    ts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string tok;
        is >> tok;
        std::istringstream ss(tok);
        std::uint64_t c;
        char colon;
        ss >> c;
        Monomial m;
        for (std::size_t v = 0; v < vars->size(); ++v) {
            int e;
            ss >> colon >> e;
            m.set(static_cast<int>(v), e);
        }
        ts.emplace_back(m, c);
    }
    return FpPoly::from_terms(vars, ring, std::move(ts));
}

} // namespace

void SearchState::save(const std::string& dir) const {
    std::filesystem::create_directories(dir);
    std::ofstream os(dir + "/search-state.txt");
    if (!os) throw std::runtime_error("save: cannot write to " + dir);
    os << "decinv-search 1\n";
    os << prime_ << " " << seed_ << " " << next_degree_ << "\n";
    os << rng_ << "\n";
    os << basics_.size() << "\n";
    for (const auto& b : basics_) {
        os << b.degree << " " << b.expr << "\n";
        write_fp_poly(os, b.reduced);
    }
    os << rows_.size() << "\n";
    for (const auto& r : rows_) {
        os << r.m << " " << r.target << " " << r.rank_products << " " << r.rank << " " << r.dm
           << " " << r.candidates << " " << (r.complete ? 1 : 0) << " "
           << r.new_generators.size() << "\n";
        for (const auto& g : r.new_generators) os << g << "\n";
    }
    os << slice_.size() << "\n";
    for (const auto& [m, polys] : slice_) {
        os << m << " " << polys.size() << "\n";
        for (const auto& p : polys) write_fp_poly(os, p);
    }
    if (!os) throw std::runtime_error("save: write failure in " + dir);
}

SearchState SearchState::load(const std::string& dir) {
    std::ifstream is(dir + "/search-state.txt");
    if (!is) throw std::runtime_error("load: cannot read " + dir + "/search-state.txt");
    std::string magic;
    int version;
    is >> magic >> version;
    if (magic != "decinv-search" || version != 1)
        throw std::runtime_error("load: unrecognized checkpoint format");
    std::uint64_t prime, seed;
    int next;
    is >> prime >> seed >> next;
    SearchState st(prime, seed);
    is >> st.rng_;
    st.next_degree_ = next;
    auto vars = VarSet::reduced();
    std::size_t nb;
    is >> nb;
    for (std::size_t i = 0; i < nb; ++i) {
        int degree;
        std::string expr;
        is >> degree;
        std::getline(is >> std::ws, expr);
        FpPoly reduced = read_fp_poly(is, vars, st.ring_);
        st.basics_.push_back(BasicInvariant{std::move(expr), degree, std::move(reduced)});
    }
    std::size_t nr;
    is >> nr;
    for (std::size_t i = 0; i < nr; ++i) {
        DegreeRow r;
        int complete;
        std::size_t ng;
        is >> r.m >> r.target >> r.rank_products >> r.rank >> r.dm >> r.candidates >> complete >>
            ng;
        r.complete = complete != 0;
        for (std::size_t g = 0; g < ng; ++g) {
            std::string line;
            std::getline(is >> std::ws, line);
            r.new_generators.push_back(line);
        }
        st.rows_.push_back(std::move(r));
    }
    std::size_t ns;
    is >> ns;
    for (std::size_t i = 0; i < ns; ++i) {
        int m;
        std::size_t np;
        is >> m >> np;
        std::vector<FpPoly> polys;
        polys.reserve(np);
        for (std::size_t p = 0; p < np; ++p) polys.push_back(read_fp_poly(is, vars, st.ring_));
        st.slice_[m] = std::move(polys);
    }
    if (!is) throw std::runtime_error("load: truncated checkpoint in " + dir);
    return st;
}

std::vector<SelectionPart> parse_selection(const std::string& text) {
    std::vector<SelectionPart> out;
    std::istringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        SelectionPart p;
        auto colon = tok.find(':');
        p.degree = std::stoi(tok.substr(0, colon));
        if (colon != std::string::npos) p.symbol = tok.substr(colon + 1);
        out.push_back(std::move(p));
    }
    if (out.empty()) throw std::invalid_argument("parse_selection: empty selection");
    return out;
}

IdealDimReport graded_ideal_dimension(SearchState& st, const std::vector<SelectionPart>& sel,
                                      int m) {
    int min_deg = sel.front().degree;
    for (const auto& p : sel) min_deg = std::min(min_deg, p.degree);
    if (!st.complete_through(m - min_deg))
        throw std::runtime_error("graded_ideal_dimension: search incomplete below degree " +
                                 std::to_string(m - min_deg));

    // Named generators come from the catalog recipes evaluated on the
    // reduced decimic.
    std::map<std::string, FpForm> env;
    auto named = [&](const std::string& sym) -> FpPoly {
        if (env.empty()) env = expand_entries(decimic_catalog(), st.reduced_f());
        auto plus = sym.find('+');
        FpForm v = env.at(sym.substr(0, plus));
        if (plus != std::string::npos) v = form_sum(v, env.at(sym.substr(plus + 1)));
        if (v.order != 0)
            throw std::invalid_argument("graded_ideal_dimension: " + sym + " is not an invariant");
        return v.body;
    };

    std::vector<std::pair<int, FpPoly>> gens;
    for (const auto& part : sel) {
        if (part.symbol.empty())
            for (const FpPoly& g : st.slice_basis(part.degree)) gens.emplace_back(part.degree, g);
        else
            gens.emplace_back(part.degree, named(part.symbol));
    }

    MonomialInterner interner;
    IncrementalSpan span(st.ring().F);
    for (const auto& [deg, g] : gens) {
        if (deg == m) { // cofactor is a constant
            if (!g.is_zero()) span.insert(vectorize(g, interner));
            continue;
        }
        if (deg == m - 1) continue; // no invariants of degree 1
        for (const FpPoly& h : st.slice_basis(m - deg)) {
            FpPoly prod = g * h;
            if (prod.is_zero()) continue;
            span.insert(vectorize(prod, interner));
        }
    }
    IdealDimReport rep;
    rep.m = m;
    rep.rank = span.rank();
    rep.target = target_dim(m);
    rep.full = rep.rank == rep.target;
    return rep;
}

} // namespace decinv
