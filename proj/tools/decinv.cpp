#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "decinv/basisearch.hpp"
#include "decinv/groebner.hpp"
#include "decinv/hilbert.hpp"
#include "decinv/io.hpp"
#include "decinv/nullcone.hpp"

using nlohmann::json;
using namespace decinv;

namespace {

constexpr int kExitOk = 0, kExitFailed = 1, kExitUsage = 2, kExitIncomplete = 3;

json base(const std::string& command) { return json{{"schema", 1}, {"command", command}}; }

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

std::vector<std::string> to_strings(const std::vector<mpz_class>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_str());
    return out;
}

std::vector<mpq_class> parse_coeff_list(const std::string& csv) {
    std::vector<mpq_class> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.emplace_back(tok);
    for (auto& c : out) c.canonicalize();
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

json report_json(const CheckReport& rep) {
    return json{{"name", rep.name}, {"ok", rep.ok}, {"checks", rep.lines}};
}

json row_json(const DegreeRow& r) {
    return json{{"m", r.m},
                {"target", r.target},
                {"rank_products", r.rank_products},
                {"rank", r.rank},
                {"d_m", r.dm},
                {"candidates", r.candidates},
                {"complete", r.complete},
                {"new_generators", r.new_generators}};
}

// Runs (or resumes) the search up to max_degree, saving a checkpoint if
// a directory was given. Returns the state; sets `complete`.
SearchState run_search(std::uint64_t prime, std::uint64_t seed, int max_degree,
                       long budget_factor, const std::string& resume_dir, bool& complete) {
    SearchState st = resume_dir.empty() || !std::ifstream(resume_dir + "/search-state.txt")
                         ? SearchState(prime, seed)
                         : SearchState::load(resume_dir);
    if (st.prime() != prime || st.seed() != seed)
        throw std::runtime_error("checkpoint prime/seed differ from the requested run");
    complete = true;
    for (int m = 2; m <= max_degree; ++m) {
        if (st.row(m)) continue;
        const DegreeRow& r = st.run_degree(m, budget_factor);
        std::cerr << "search: degree " << r.m << " rank " << r.rank << "/" << r.target
                  << " d_m=" << r.dm << (r.complete ? "" : " INCOMPLETE") << "\n";
        if (!resume_dir.empty()) st.save(resume_dir);
        if (!r.complete) {
            complete = false;
            break;
        }
    }
    return st;
}

const std::map<int, int>& reference_dm() {
    static const std::map<int, int> t{{2, 1},   {4, 1},   {6, 4},  {8, 5},  {9, 5},
                                      {10, 8},  {11, 8},  {12, 12}, {13, 15}, {14, 13},
                                      {15, 19}, {16, 5}};
    return t;
}

int cmd_verify_all(const std::string& tier, std::uint64_t seed) {
    json out = base("verify-all");
    out["tier"] = tier;
    json checks = json::array();
    bool ok = true, incomplete = false;
    auto add = [&](const std::string& name, bool pass, const json& detail = json()) {
        checks.push_back(json{{"name", name}, {"ok", pass}, {"detail", detail}});
        ok = ok && pass;
        std::cerr << (pass ? "ok  " : "FAIL") << " " << name << "\n";
    };

    {
        DimensionTable table = poincare_table(10, 58);
        NumeratorTable num = numerator(table, {2, 4, 6, 6, 8, 9, 10, 14});
        int bound = degree_bound(num);
        bool palin = true;
        for (int k = 0; k <= bound; ++k)
            if (num.coeffs[static_cast<std::size_t>(k)] !=
                num.coeffs[static_cast<std::size_t>(bound - k)])
                palin = false;
        add("numerator-degree-bound-48", bound == 48);
        add("numerator-palindromic", palin);
        auto back = reconstruct_series(num, 58);
        add("series-reconstruction", back == table.coeffs);
    }
    {
        bool pass = true;
        std::string what;
        try {
            RatRing ring;
            QForm f = generic_form<RatRing>(10, VarSet::decimic(), ring);
            expand_entries(decimic_catalog(), f, true);
        } catch (const std::exception& e) {
            pass = false;
            what = e.what();
        }
        add("catalog-bookkeeping", pass, what);
    }
    for (const auto& rep :
         {exceptional_forms_check(), lemma8_case_check(), lemma7_case_check(),
          jerzy_sample_check(34, seed)})
        add(rep.name, rep.ok, rep.lines);
    for (int n : {2, 4, 6, 8, 10}) {
        auto rep = verify_hsop_defines_nullcone(n, 100, seed + static_cast<std::uint64_t>(n));
        add("nullcone-hsop-n" + std::to_string(n), rep.ok(), rep.counterexample);
    }
    for (const auto& name : groebner_claim_names()) {
        ClaimResult r = check_groebner_claim(name);
        add("ideal-membership-" + name, r.holds, r.detail);
    }
    {
        int ceiling = tier == "default" ? 14 : 16;
        bool complete = false;
        SearchState st = run_search(109, seed, ceiling, 10, "", complete);
        if (!complete) incomplete = true;
        bool match = complete;
        for (const auto& [m, dm] : reference_dm()) {
            if (m > ceiling) continue;
            const DegreeRow* r = st.row(m);
            if (!r || r->dm != dm) match = false;
        }
        add("degree-table-p109", match);
        if (tier != "default") {
            bool c197 = false;
            SearchState st197 = run_search(197, seed, 20, 10, "", c197);
            if (!c197) incomplete = true;
            bool match197 = c197;
            for (const auto& [m, dm] : reference_dm())
                if (m <= 16 && (!st197.row(m) || st197.row(m)->dm != dm)) match197 = false;
            add("degree-table-p197-agrees", match197);
            if (c197) {
                auto rep542 = graded_ideal_dimension(st197, parse_selection("4,6,8,9,10,14"), 24);
                add("ideal-dim-24-542", rep542.full && rep542.rank == 542, rep542.rank);
                auto rep221 =
                    graded_ideal_dimension(st197, parse_selection("4,6,8,9,14,10:j10"), 20);
                add("ideal-dim-20-221", rep221.full && rep221.rank == 221, rep221.rank);
            }
        }
    }

    out["checks"] = checks;
    out["ok"] = ok;
    emit(out);
    if (incomplete) return kExitIncomplete;
    return ok ? kExitOk : kExitFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant theory of the binary decimic: series, catalog, search, verification"};
    app.require_subcommand(1);

    // poincare
    int po_n = 10, po_max = 48;
    auto* po = app.add_subcommand("poincare", "Dimensions of the invariant slices");
    po->add_option("--n", po_n, "Order of the binary form")->check(CLI::PositiveNumber);
    po->add_option("--max", po_max, "Largest degree")->check(CLI::NonNegativeNumber);

    // numerator
    std::string nu_degrees = "2,4,6,6,8,9,10,14";
    int nu_max = 58;
    auto* nu = app.add_subcommand("numerator", "Series numerator against an hsop denominator");
    nu->add_option("--degrees", nu_degrees, "Denominator degrees (comma separated)");
    nu->add_option("--max", nu_max, "Report coefficients through this degree");

    // catalog
    bool cat_list = false;
    std::string cat_dump, cat_cache;
    auto* cat = app.add_subcommand("catalog", "Named covariants and invariants of the decimic");
    cat->add_flag("--list", cat_list, "List symbols with order/degree/term counts");
    cat->add_option("--dump", cat_dump, "Emit the generic expansion of one symbol");
    cat->add_option("--cache", cat_cache, "Directory for cached expansions");

    // eval
    std::string ev_symbol, ev_coeffs;
    auto* ev = app.add_subcommand("eval", "Evaluate a catalog invariant at a numeric decimic");
    ev->add_option("--invariant", ev_symbol, "Symbol, e.g. j2 or j14+A14")->required();
    ev->add_option("--coeffs", ev_coeffs, "11 rational coefficients c0..c10")->required();

    // search
    int se_max = 16;
    std::uint64_t se_prime = 109, se_seed = 1;
    long se_budget = 10;
    bool se_deep = false, se_exhaustive = false;
    std::string se_resume;
    auto* se = app.add_subcommand("search", "Degree-by-degree basic-invariant search");
    se->add_option("--max-degree", se_max, "Search ceiling");
    se->add_option("--prime", se_prime, "Modulus (prime > 50)");
    se->add_option("--seed", se_seed, "Random seed");
    se->add_option("--budget-factor", se_budget, "Candidates per degree = factor * target");
    se->add_flag("--deep", se_deep, "Allow degrees up to 21");
    se->add_flag("--exhaustive", se_exhaustive, "Allow degrees up to 48 (long-running)");
    se->add_option("--resume", se_resume, "Checkpoint directory (loaded and updated)");

    // ideal-dim
    std::string id_select;
    int id_degree = 0;
    std::uint64_t id_prime = 197, id_seed = 1;
    std::string id_resume;
    auto* id = app.add_subcommand("ideal-dim", "Graded dimension of an invariant ideal slice");
    id->add_option("--select", id_select,
                   "Generator degrees, e.g. 4,6,8,9,14,10:j10 (bare degree = all invariants)")
        ->required();
    id->add_option("--degree", id_degree, "Graded part to measure")->required();
    id->add_option("--prime", id_prime, "Modulus (prime > 50)");
    id->add_option("--seed", id_seed, "Random seed for the underlying search");
    id->add_option("--resume", id_resume, "Checkpoint directory for the underlying search");

    // nullcone-verify
    int nc_n = 10, nc_samples = 100;
    std::uint64_t nc_seed = 1;
    auto* nc = app.add_subcommand("nullcone-verify", "Hsop vanishing vs. nullform sampling");
    nc->add_option("--n", nc_n, "Order of the binary form")->check(CLI::IsMember({2, 4, 6, 8, 10}));
    nc->add_option("--samples", nc_samples, "Samples per direction");
    nc->add_option("--seed", nc_seed, "Random seed");

    // lemma-check
    std::string lc_which;
    int lc_samples = 20;
    std::uint64_t lc_seed = 1;
    auto* lc = app.add_subcommand("lemma-check", "Displayed case identities");
    lc->add_option("--which", lc_which, "7 (k specializations), 8 (V4+V6 pair), jerzy")
        ->required()
        ->check(CLI::IsMember({"7", "8", "jerzy"}));
    lc->add_option("--samples", lc_samples, "Samples per case (jerzy only)");
    lc->add_option("--seed", lc_seed, "Random seed (jerzy only)");

    // exceptional-forms
    auto* ex = app.add_subcommand("exceptional-forms",
                                  "Degree-14 invariants on the two exceptional forms");

    // groebner-check
    std::string gc_claim = "all";
    std::uint64_t gc_prime = 0;
    auto* gc = app.add_subcommand("groebner-check", "Ideal-membership claims");
    gc->add_option("--claim", gc_claim, "Claim name or 'all'");
    gc->add_option("--prime", gc_prime, "0 = exact rationals, else modulus");

    // verify-all
    std::string va_tier = "default";
    std::uint64_t va_seed = 1;
    auto* va = app.add_subcommand("verify-all", "Run every check of the chosen tier");
    va->add_option("--tier", va_tier, "default | deep")
        ->check(CLI::IsMember({"default", "deep"}));
    va->add_option("--seed", va_seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (po->parsed()) {
            DimensionTable t = poincare_table(po_n, po_max);
            json out = base("poincare");
            out["n"] = t.n;
            out["coeffs"] = to_strings(t.coeffs);
            emit(out);
            return kExitOk;
        }
        if (nu->parsed()) {
            std::vector<int> degrees = parse_int_list(nu_degrees);
            int span = nu_max;
            for (int d : degrees) span = std::max(span, d);
            DimensionTable table = poincare_table(10, span);
            NumeratorTable num = numerator(table, degrees);
            int bound = degree_bound(num);
            bool palin = true;
            for (int k = 0; k <= bound; ++k)
                if (num.coeffs[static_cast<std::size_t>(k)] !=
                    num.coeffs[static_cast<std::size_t>(bound - k)])
                    palin = false;
            json out = base("numerator");
            out["degrees"] = num.degrees;
            std::vector<mpz_class> upto(num.coeffs.begin(),
                                        num.coeffs.begin() + std::min<std::size_t>(
                                                                 num.coeffs.size(),
                                                                 static_cast<std::size_t>(nu_max) + 1));
            out["coeffs"] = to_strings(upto);
            out["degree_bound"] = bound;
            out["palindromic"] = palin;
            emit(out);
            return kExitOk;
        }
        if (cat->parsed()) {
            const auto& exp = generic_catalog_expansions(cat_cache);
            json out = base("catalog");
            if (!cat_dump.empty()) {
                auto it = exp.find(cat_dump);
                if (it == exp.end()) {
                    std::cerr << "unknown symbol: " << cat_dump << "\n";
                    return kExitUsage;
                }
                out["symbol"] = cat_dump;
                out["form"] = form_to_json(it->second);
            } else {
                json list = json::array();
                for (const auto& e : decimic_catalog())
                    list.push_back(json{{"symbol", e.symbol},
                                        {"recipe", e.recipe->str()},
                                        {"order", e.order},
                                        {"degree", e.degree},
                                        {"terms", exp.at(e.symbol).body.term_count()}});
                out["entries"] = list;
            }
            emit(out);
            return kExitOk;
        }
        if (ev->parsed()) {
            auto coeffs = parse_coeff_list(ev_coeffs);
            if (coeffs.size() != 11) {
                std::cerr << "eval: need exactly 11 coefficients\n";
                return kExitUsage;
            }
            mpq_class v = eval_invariant(ev_symbol, coeffs);
            json out = base("eval");
            out["invariant"] = ev_symbol;
            out["value"] = v.get_str();
            emit(out);
            return kExitOk;
        }
        if (se->parsed()) {
            int ceiling = se_exhaustive ? 48 : se_deep ? 21 : 16;
            if (se_max > ceiling) {
                std::cerr << "search: degree " << se_max << " needs "
                          << (se_max > 21 ? "--exhaustive" : "--deep") << "\n";
                return kExitUsage;
            }
            bool complete = false;
            SearchState st = run_search(se_prime, se_seed, se_max, se_budget, se_resume, complete);
            json out = base("search");
            out["prime"] = st.prime();
            out["seed"] = st.seed();
            out["max_degree"] = se_max;
            json rows = json::array();
            for (const auto& r : st.rows()) rows.push_back(row_json(r));
            out["rows"] = rows;
            out["complete"] = complete;
            emit(out);
            return complete ? kExitOk : kExitIncomplete;
        }
        if (id->parsed()) {
            auto sel = parse_selection(id_select);
            int min_deg = sel.front().degree;
            for (const auto& p : sel) min_deg = std::min(min_deg, p.degree);
            bool complete = false;
            SearchState st =
                run_search(id_prime, id_seed, id_degree - min_deg, 10, id_resume, complete);
            if (!complete) return kExitIncomplete;
            IdealDimReport rep = graded_ideal_dimension(st, sel, id_degree);
            json out = base("ideal-dim");
            out["select"] = id_select;
            out["degree"] = rep.m;
            out["rank"] = rep.rank;
            out["target"] = rep.target;
            out["full"] = rep.full;
            emit(out);
            return rep.full ? kExitOk : kExitFailed;
        }
        if (nc->parsed()) {
            auto rep = verify_hsop_defines_nullcone(nc_n, nc_samples, nc_seed);
            json out = base("nullcone-verify");
            out["n"] = rep.n;
            out["null_samples"] = rep.null_samples;
            out["null_failures"] = rep.null_failures;
            out["nonnull_samples"] = rep.nonnull_samples;
            out["nonnull_failures"] = rep.nonnull_failures;
            out["counterexample"] = rep.counterexample;
            out["ok"] = rep.ok();
            emit(out);
            return rep.ok() ? kExitOk : kExitFailed;
        }
        if (lc->parsed()) {
            CheckReport rep = lc_which == "7"   ? lemma7_case_check()
                              : lc_which == "8" ? lemma8_case_check()
                                                : jerzy_sample_check(lc_samples, lc_seed);
            json out = base("lemma-check");
            out["report"] = report_json(rep);
            emit(out);
            return rep.ok ? kExitOk : kExitFailed;
        }
        if (ex->parsed()) {
            CheckReport rep = exceptional_forms_check();
            json out = base("exceptional-forms");
            out["report"] = report_json(rep);
            emit(out);
            return rep.ok ? kExitOk : kExitFailed;
        }
        if (gc->parsed()) {
            std::vector<std::string> names;
            if (gc_claim == "all")
                names = groebner_claim_names();
            else
                names.push_back(gc_claim);
            json out = base("groebner-check");
            json claims = json::array();
            bool ok = true;
            for (const auto& n : names) {
                ClaimResult r = check_groebner_claim(n, gc_prime);
                claims.push_back(json{{"name", r.name}, {"holds", r.holds}, {"detail", r.detail}});
                ok = ok && r.holds;
                std::cerr << (r.holds ? "ok  " : "FAIL") << " " << r.name << "\n";
            }
            out["claims"] = claims;
            out["ok"] = ok;
            emit(out);
            return ok ? kExitOk : kExitFailed;
        }
        if (va->parsed()) return cmd_verify_all(va_tier, va_seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
    return kExitUsage;
}
