#include "y2p/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "y2p/classify.hpp"
#include "y2p/module.hpp"
#include "y2p/presentation.hpp"
#include "y2p/redenv.hpp"
#include "y2p/textio.hpp"
#include "y2p/walgebra.hpp"

namespace y2p {

namespace {

using nlohmann::json;

struct RunConfig {
    uint32_t p = 3;
    uint32_t m = 1;
    uint32_t n = 1;
    uint32_t level_bound = 8;
    uint64_t seed = 1;
    uint64_t budget_points = 300000; // exhaustive spin budget
    int budget_spins = 100;          // randomized spins per side
    uint64_t budget_dim = 10000;     // induced-module dimension cap
    std::string format = "json";
    std::string out_path;

    FieldSpec field() const {
        return m == 1 ? FieldSpec::prime_field(p) : FieldSpec::extension(p, m);
    }
    SpinBudget spin_budget() const { return {budget_points, budget_spins}; }
};

void add_common(CLI::App* cmd, RunConfig& cfg, bool with_n = false) {
    cmd->add_option("--p", cfg.p, "prime characteristic")->required();
    cmd->add_option("--m", cfg.m, "extension degree (default 1)");
    if (with_n) cmd->add_option("--n", cfg.n, "truncation level / columns")->required();
    cmd->add_option("--seed", cfg.seed, "seed for randomized strategies");
    cmd->add_option("--level-bound", cfg.level_bound, "generator level bound");
    cmd->add_option("--budget-points", cfg.budget_points, "exhaustive spin budget");
    cmd->add_option("--budget-spins", cfg.budget_spins, "randomized spins per side");
    cmd->add_option("--budget-dim", cfg.budget_dim, "induced dimension cap");
    cmd->add_option("--format", cfg.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", cfg.out_path, "write the report to a file");
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(cfg.out_path);
    if (!file) throw Error("cannot open output file " + cfg.out_path);
    file << text << "\n";
}

std::string verdict_str(const IrrResult& r) {
    switch (r.verdict) {
        case IrrVerdict::Irreducible: return "true";
        case IrrVerdict::IrreducibleProbabilistic: return "true (probabilistic)";
        case IrrVerdict::Reducible: return "false";
    }
    return "?";
}

uint32_t env_budget(const char* name, uint32_t fallback) {
    if (const char* v = std::getenv(name)) return static_cast<uint32_t>(std::stoul(v));
    return fallback;
}

// ---- subcommand bodies -------------------------------------------------

int cmd_irreps(const RunConfig& cfg, bool count_only, bool list, std::ostream& out) {
    auto series = enumerate_restricted_series(cfg.p, cfg.n);
    const uint64_t pairs = static_cast<uint64_t>(series.size()) * series.size();
    if (cfg.format == "csv") {
        std::ostringstream csv;
        if (count_only || !list) {
            csv << "per_component,pairs\n" << series.size() << "," << pairs;
        } else {
            csv << "coefficients\n";
            for (const auto& s : series) {
                for (size_t i = 1; i <= cfg.n; ++i) {
                    if (i > 1) csv << ",";
                    csv << (i <= s.degree() ? bracket(s.coeff(i)) : 0);
                }
                csv << "\n";
            }
        }
        emit(cfg, csv.str(), out);
        return 0;
    }
    json j;
    j["schema"] = 1;
    j["command"] = "irreps";
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["per_component"] = series.size();
    j["pairs"] = pairs;
    if (list && !count_only) {
        json arr = json::array();
        for (const auto& s : series) {
            json coeffs = json::array();
            for (size_t i = 1; i <= cfg.n; ++i)
                coeffs.push_back(i <= s.degree() ? bracket(s.coeff(i)) : 0);
            arr.push_back(std::move(coeffs));
        }
        j["series"] = std::move(arr);
    }
    emit(cfg, j.dump(2), out);
    return 0;
}

int cmd_dim(const RunConfig& cfg, const std::string& alpha, const std::string& beta,
            const std::string& lambda1, const std::string& lambda2, std::ostream& out) {
    FieldSpec f = cfg.field();
    std::vector<FieldScalar> a, b;
    if (!lambda1.empty() || !lambda2.empty()) {
        if (lambda1.empty() || lambda2.empty() || !alpha.empty() || !beta.empty())
            throw ParseError("dim takes either --alpha/--beta or --lambda1/--lambda2", 0);
        // series form: factor the components; zero roots are invisible here,
        // so unequal degrees are a hard error (pass multisets to zero-pad)
        RestrictedTuple t = RestrictedTuple::checked(parse_lower_series(lambda1, f),
                                                     parse_lower_series(lambda2, f));
        Poly n1 = t.lambda1.to_monic_poly(), n2 = t.lambda2.to_monic_poly();
        if (n1.degree() != n2.degree())
            throw Error("dim: factored degrees differ (" + std::to_string(n1.degree()) +
                        " vs " + std::to_string(n2.degree()) +
                        "); supply explicit --alpha/--beta multisets to zero-pad");
        for (const auto& r : n1.roots()) a.push_back(-r);
        for (const auto& r : n2.roots()) b.push_back(-r);
    } else {
        a = parse_tuple(alpha, f);
        b = parse_tuple(beta, f);
    }
    PairedRoots pr = renumerate(a, b);
    uint64_t dim = 1;
    for (const auto& [x, y] : pr.pairs) dim *= bracket(x - y) + 1;
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "dim\n" << dim;
        emit(cfg, csv.str(), out);
        return 0;
    }
    json j;
    j["schema"] = 1;
    j["command"] = "dim";
    j["p"] = cfg.p;
    j["dim"] = dim;
    json pairing = json::array();
    for (const auto& [x, y] : pr.pairs)
        pairing.push_back(json::array({bracket(x), bracket(y)}));
    j["pairing"] = std::move(pairing);
    emit(cfg, j.dump(2), out);
    return 0;
}

std::vector<std::pair<FieldScalar, FieldScalar>> parse_factors(const std::string& text,
                                                               const FieldSpec& f) {
    std::vector<std::pair<FieldScalar, FieldScalar>> out;
    size_t at = 0;
    while (at < text.size()) {
        size_t open = text.find('(', at);
        if (open == std::string::npos) break;
        size_t close = text.find(')', open);
        if (close == std::string::npos)
            throw ParseError("unterminated factor", open);
        auto pair = parse_tuple(text.substr(open + 1, close - open - 1), f);
        if (pair.size() != 2) throw ParseError("factor needs two entries", open);
        out.push_back({pair[0], pair[1]});
        at = close + 1;
    }
    if (out.empty()) throw ParseError("no factors given", 0);
    return out;
}

int cmd_tensor(const RunConfig& cfg, const std::string& factors, bool check_irr,
               const std::string& dump_path, std::ostream& out) {
    FieldSpec f = cfg.field();
    auto params = parse_factors(factors, f);
    MatrixModule t = tensor_evaluations(f, params);
    json j;
    j["schema"] = 1;
    j["command"] = "tensor";
    j["p"] = cfg.p;
    j["dim"] = t.dim();
    j["level_support"] = t.level_support();
    if (check_irr) {
        IrrResult r = is_irreducible(t, cfg.seed, cfg.spin_budget());
        j["irreducible"] = verdict_str(r);
    }
    if (!dump_path.empty()) {
        std::ofstream file(dump_path);
        if (!file) throw Error("cannot open " + dump_path);
        file << module_to_json(t) << "\n";
        j["module_written"] = dump_path;
    }
    emit(cfg, j.dump(2), out);
    return 0;
}

int cmd_drinfeld_poly(const RunConfig& cfg, const std::string& l1, const std::string& l2,
                      std::ostream& out) {
    FieldSpec f = cfg.field();
    json j;
    j["schema"] = 1;
    j["command"] = "drinfeld-poly";
    j["p"] = cfg.p;
    j["m"] = cfg.m;
    try {
        auto r = is_finite_dimensional(parse_rational_series(l1, f),
                                       parse_rational_series(l2, f));
        j["finite_dimensional"] = r.finite_dimensional;
        if (r.drinfeld) j["P"] = r.drinfeld->str();
    } catch (const NeedsLargerField& e) {
        j["finite_dimensional"] = nullptr;
        j["error"] = "needs-larger-field";
        j["required_degree"] = e.required_degree;
    }
    emit(cfg, j.dump(2), out);
    return 0;
}

int cmd_straighten(const RunConfig& cfg, const std::string& element, bool restricted,
                   std::ostream& out) {
    FieldSpec f = cfg.field();
    NCPoly x = parse_nc_element(element, f);
    StraightenOpts opts;
    opts.mode = restricted ? StraightenMode::Restricted : StraightenMode::Plain;
    opts.level_bound = cfg.level_bound;
    NCPoly nf = straighten(x, opts);
    bool high_d = false;
    for (const auto& [w, c] : nf.terms())
        if (PBWMonomial::from_word(w).has_high_d_exponent(cfg.p)) high_d = true;
    json j;
    j["schema"] = 1;
    j["command"] = "straighten";
    j["p"] = cfg.p;
    j["mode"] = restricted ? "restricted" : "plain";
    j["normal_form"] = nf.str();
    j["terms"] = nf.terms().size();
    if (restricted)
        j["note"] = high_d ? "d-exponents >= p left intact (not reduced symbolically)"
                           : "all e/f exponents below p";
    emit(cfg, j.dump(2), out);
    return 0;
}

int cmd_wverify(const RunConfig& cfg, bool all, const std::string& alpha,
                const std::string& beta, uint32_t rmax, std::ostream& out) {
    FieldSpec f = cfg.field();
    json items = json::array();
    bool pass = true;
    auto run_one = [&](const std::vector<FieldScalar>& a,
                       const std::vector<FieldScalar>& b) {
        ErLemmaReport r = verify_er_lemma(f, cfg.n, a, b, rmax);
        json it;
        std::string akey, bkey;
        for (const auto& x : a) akey += std::to_string(bracket(x)) + ",";
        for (const auto& x : b) bkey += std::to_string(bracket(x)) + ",";
        it["alpha"] = akey.substr(0, akey.size() - 1);
        it["beta"] = bkey.substr(0, bkey.size() - 1);
        it["pass"] = r.ok;
        if (!r.ok) it["failures"] = r.failures;
        pass = pass && r.ok;
        items.push_back(std::move(it));
    };
    if (all) {
        std::vector<uint32_t> v(2 * cfg.n, 0);
        while (true) {
            std::vector<FieldScalar> a, b;
            for (uint32_t i = 0; i < cfg.n; ++i) a.push_back(FieldScalar::from_int(f, v[i]));
            for (uint32_t i = 0; i < cfg.n; ++i)
                b.push_back(FieldScalar::from_int(f, v[cfg.n + i]));
            run_one(a, b);
            uint32_t i = 0;
            for (; i < 2 * cfg.n; ++i) {
                if (++v[i] < cfg.p) break;
                v[i] = 0;
            }
            if (i == 2 * cfg.n) break;
        }
    } else {
        run_one(parse_tuple(alpha, f), parse_tuple(beta, f));
    }
    json j;
    j["schema"] = 1;
    j["command"] = "wverify";
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["rmax"] = rmax;
    j["pass"] = pass;
    j["items"] = std::move(items);
    emit(cfg, j.dump(2), out);
    return pass ? 0 : 1;
}

int cmd_uchi(const RunConfig& cfg, const std::string& alpha, const std::string& beta,
             bool invariants, bool simplicity, bool verma_seed, std::ostream& out) {
    FieldSpec f = cfg.field();
    auto a = parse_tuple(alpha, f), b = parse_tuple(beta, f);
    if (a.size() != cfg.n || b.size() != cfg.n)
        throw Error("uchi: tuples must have length n");
    LeviModule seed = verma_seed ? LeviModule::baby_verma(f, a, b)
                                 : LeviModule::simple(f, a, b);
    InducedModule v = InducedModule::induce(seed, cfg.budget_dim);
    json j;
    j["schema"] = 1;
    j["command"] = "uchi";
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["seed_kind"] = verma_seed ? "baby-verma" : "simple";
    j["seed_dim"] = seed.dim();
    j["dim"] = v.dim();
    if (invariants) j["m_chi_invariants_dim"] = m_chi_invariants(v).rows();
    if (simplicity)
        j["simple"] = verdict_str(simplicity_check(v, cfg.seed, cfg.spin_budget()));
    emit(cfg, j.dump(2), out);
    return 0;
}

// ---- verify suites -----------------------------------------------------

struct SuiteState {
    json items = json::array();
    bool pass = true;
    void record(const std::string& name, bool ok, const std::string& detail = "") {
        json it;
        it["item"] = name;
        it["pass"] = ok;
        if (!detail.empty()) it["detail"] = detail;
        items.push_back(std::move(it));
        pass = pass && ok;
    }
};

void suite_yangian(const RunConfig& cfg, SuiteState& st) {
    FieldSpec f = cfg.field();
    bool rtt = true;
    for (uint32_t r = 1; r <= 3 && rtt; ++r)
        for (uint32_t s = 1; s <= 3 && rtt; ++s)
            for (int i = 1; i <= 2 && rtt; ++i)
                for (int j = 1; j <= 2 && rtt; ++j)
                    for (int k = 1; k <= 2 && rtt; ++k)
                        for (int l = 1; l <= 2 && rtt; ++l)
                            rtt = verify_rtt_relation(f, r, s, i, j, k, l);
    st.record("rtt-relations r,s<=3", rtt);

    std::mt19937_64 rng(cfg.seed);
    StraightenOpts left, right;
    left.level_bound = right.level_bound = 64;
    right.rightmost = true;
    bool laws = true;
    for (int trial = 0; trial < 100 && laws; ++trial) {
        Word w(1 + rng() % 6);
        for (auto& g : w) g = make_gen(static_cast<Fam>(rng() % 4), 1 + rng() % 4);
        NCPoly x = NCPoly::monomial(f, w, FieldScalar::one(f));
        NCPoly nf = straighten(x, left);
        laws = straighten(nf, left) == nf && straighten(x, right) == nf;
    }
    st.record("straightening laws (100 seeded words)", laws);

    st.record("nilpotency of f^(1)",
              nilpotency_witness(NCPoly::generator(f, Fam::F, 1)) == cfg.p);
}

void suite_modules(const RunConfig& cfg, SuiteState& st) {
    FieldSpec f = cfg.field();
    bool evals = true;
    for (uint32_t a = 0; a < cfg.p && evals; ++a)
        for (uint32_t b = 0; b < cfg.p && evals; ++b)
            evals = verify_module(evaluation_module(f, FieldScalar::from_int(f, a),
                                                    FieldScalar::from_int(f, b)))
                        .ok;
    st.record("evaluation modules verify", evals);

    bool tensors = true;
    for (uint32_t a1 = 0; a1 < cfg.p && tensors; ++a1)
        for (uint32_t b1 = 0; b1 < cfg.p && tensors; ++b1)
            for (uint32_t a2 = 0; a2 < cfg.p && tensors; ++a2)
                for (uint32_t b2 = 0; b2 < cfg.p && tensors; ++b2) {
                    MatrixModule t = tensor_evaluations(
                        f, {{FieldScalar::from_int(f, a1), FieldScalar::from_int(f, b1)},
                            {FieldScalar::from_int(f, a2), FieldScalar::from_int(f, b2)}});
                    tensors = verify_module(t).ok;
                }
    st.record("two-factor tensors verify", tensors);
}

void suite_walgebra(const RunConfig& cfg, SuiteState& st) {
    FieldSpec f = cfg.field();
    bool lemma = true;
    std::vector<uint32_t> v(2 * cfg.n, 0);
    while (lemma) {
        std::vector<FieldScalar> a, b;
        for (uint32_t i = 0; i < cfg.n; ++i) a.push_back(FieldScalar::from_int(f, v[i]));
        for (uint32_t i = 0; i < cfg.n; ++i)
            b.push_back(FieldScalar::from_int(f, v[cfg.n + i]));
        lemma = verify_er_lemma(f, cfg.n, a, b, cfg.n + 2).ok;
        uint32_t i = 0;
        for (; i < 2 * cfg.n; ++i) {
            if (++v[i] < cfg.p) break;
            v[i] = 0;
        }
        if (i == 2 * cfg.n) break;
    }
    st.record("e_r eigenvalue lemma (exhaustive tuples)", lemma);
}

void suite_premet(const RunConfig& cfg, SuiteState& st) {
    FieldSpec f = cfg.field();
    std::vector<FieldScalar> a(cfg.n, FieldScalar::from_int(f, 1));
    std::vector<FieldScalar> b(cfg.n, FieldScalar::from_int(f, 0));
    LeviModule seed = LeviModule::simple(f, a, b);
    InducedModule v = InducedModule::induce(seed, cfg.budget_dim);

    uint64_t expect = seed.dim();
    for (uint32_t i = 0; i < 2 * cfg.n * cfg.n - 2 * cfg.n; ++i) expect *= cfg.p;
    st.record("induced dimension p^(2n^2-2n) * dim(seed)", v.dim() == expect,
              "dim=" + std::to_string(v.dim()));
    st.record("m_chi invariants recover the seed",
              m_chi_invariants(v).rows() == seed.dim());

    bool ppower = true;
    const Matrix id = Matrix::identity(f, v.dim());
    for (int x = 1; x <= 2 * static_cast<int>(cfg.n) && ppower; ++x)
        for (int y = 1; y <= 2 * static_cast<int>(cfg.n) && ppower; ++y) {
            Matrix op = v.unit_op(x, y);
            Matrix xbracket = x == y ? op : Matrix(f, v.dim(), v.dim());
            ppower = op.pow(cfg.p) - xbracket ==
                     id.scaled(v.context().chi()(x, y).pow(cfg.p));
        }
    st.record("p-power operator identities", ppower);

    IrrResult r = simplicity_check(v, cfg.seed, cfg.spin_budget());
    st.record("simplicity of the induced module", r.verdict != IrrVerdict::Reducible,
              verdict_str(r));
}

int cmd_verify(const RunConfig& cfg, const std::string& suite,
               const std::string& module_json_path, std::ostream& out) {
    SuiteState st;
    int exit_code = 0;
    try {
        if (!module_json_path.empty()) {
            std::ifstream file(module_json_path);
            if (!file) throw Error("cannot open " + module_json_path);
            std::stringstream buf;
            buf << file.rdbuf();
            MatrixModule m = module_from_json(buf.str());
            ModuleReport r = verify_module(m);
            st.record("stored module verifies", r.ok,
                      r.ok ? "" : r.failures.front());
        }
        if (suite == "yangian" || suite == "all") suite_yangian(cfg, st);
        if (suite == "modules" || suite == "all") suite_modules(cfg, st);
        if (suite == "walgebra" || suite == "all") suite_walgebra(cfg, st);
        if (suite == "premet" || suite == "all") suite_premet(cfg, st);
    } catch (const BudgetError& e) {
        st.record("budget", false, e.what());
        exit_code = 3;
    }
    json j;
    j["schema"] = 1;
    j["command"] = "verify";
    j["suite"] = suite;
    j["p"] = cfg.p;
    j["n"] = cfg.n;
    j["pass"] = st.pass;
    j["items"] = std::move(st.items);
    emit(cfg, j.dump(2), out);
    if (exit_code) return exit_code;
    return st.pass ? 0 : 1;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computational realization of the restricted Yangian for gl_2 "
                 "in prime characteristic"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.budget_points = env_budget("Y2P_BUDGET_POINTS", 300000);
    cfg.budget_spins = static_cast<int>(env_budget("Y2P_BUDGET_SPINS", 100));
    cfg.budget_dim = env_budget("Y2P_BUDGET_DIM", 10000);

    // irreps
    auto* irreps = app.add_subcommand("irreps", "enumerate restricted tuples");
    bool count_only = false, list = false;
    add_common(irreps, cfg, true);
    irreps->add_flag("--count", count_only, "print counts only");
    irreps->add_flag("--list", list, "list coefficient vectors");

    // dim
    auto* dim = app.add_subcommand("dim", "predicted simple-module dimension");
    std::string alpha, beta, dlambda1, dlambda2;
    add_common(dim, cfg);
    dim->add_option("--alpha", alpha, "comma-separated alpha roots");
    dim->add_option("--beta", beta, "comma-separated beta roots");
    dim->add_option("--lambda1", dlambda1, "restricted series (factored form)");
    dim->add_option("--lambda2", dlambda2, "restricted series (factored form)");

    // tensor
    auto* tensor_cmd = app.add_subcommand("tensor", "build a tensor of evaluation modules");
    std::string factors, dump_path;
    bool check_irr = false;
    add_common(tensor_cmd, cfg);
    tensor_cmd->add_option("--factors", factors, "factors \"(a,b);(c,d)\"")->required();
    tensor_cmd->add_flag("--check-irreducible", check_irr, "run the spin test");
    tensor_cmd->add_option("--dump-module", dump_path, "write the module JSON here");

    // drinfeld-poly
    auto* dp = app.add_subcommand("drinfeld-poly", "finite-dimensionality criterion");
    std::string lambda1, lambda2;
    add_common(dp, cfg);
    dp->add_option("--lambda1", lambda1, "series or rational series")->required();
    dp->add_option("--lambda2", lambda2, "series or rational series")->required();

    // straighten
    auto* str_cmd = app.add_subcommand("straighten", "PBW normal form of an element");
    std::string element;
    bool restricted = false;
    add_common(str_cmd, cfg);
    str_cmd->add_option("--element", element, "e.g. \"e(1)*f(1) - d1(2)\"")->required();
    str_cmd->add_flag("--restricted", restricted, "kill p-th powers of e and f");

    // wverify
    auto* wv = app.add_subcommand("wverify", "W-side eigenvalue checks");
    bool wall = false;
    uint32_t rmax = 4;
    std::string walpha, wbeta;
    add_common(wv, cfg, true);
    wv->add_flag("--all", wall, "exhaust all tuples");
    wv->add_option("--alpha", walpha, "alpha tuple");
    wv->add_option("--beta", wbeta, "beta tuple");
    wv->add_option("--rmax", rmax, "check levels up to rmax");

    // uchi
    auto* uc = app.add_subcommand("uchi", "reduced enveloping algebra module");
    bool invariants = false, simplicity = false, verma_seed = false;
    std::string ualpha, ubeta;
    add_common(uc, cfg, true);
    uc->add_option("--alpha", ualpha, "alpha tuple")->required();
    uc->add_option("--beta", ubeta, "beta tuple")->required();
    uc->add_flag("--invariants", invariants, "compute dim of the m_chi invariants");
    uc->add_flag("--simplicity", simplicity, "run the simplicity check");
    uc->add_flag("--verma-seed", verma_seed, "induce from the baby Verma seed");

    // verify
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all", module_json_path;
    add_common(vf, cfg, false);
    vf->add_option("--suite", suite, "yangian | modules | walgebra | premet | all")
        ->check(CLI::IsMember({"yangian", "modules", "walgebra", "premet", "all"}));
    vf->add_option("--n", cfg.n, "truncation level for walgebra/premet");
    vf->add_option("--module-json", module_json_path, "verify a stored module file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (irreps->parsed()) return cmd_irreps(cfg, count_only, list, out);
        if (dim->parsed()) {
            if (alpha.empty() && dlambda1.empty())
                throw ParseError("dim needs --alpha/--beta or --lambda1/--lambda2", 0);
            return cmd_dim(cfg, alpha, beta, dlambda1, dlambda2, out);
        }
        if (tensor_cmd->parsed())
            return cmd_tensor(cfg, factors, check_irr, dump_path, out);
        if (dp->parsed()) return cmd_drinfeld_poly(cfg, lambda1, lambda2, out);
        if (str_cmd->parsed()) return cmd_straighten(cfg, element, restricted, out);
        if (wv->parsed()) {
            if (!wall && (walpha.empty() || wbeta.empty()))
                throw ParseError("wverify needs --all or both --alpha and --beta", 0);
            return cmd_wverify(cfg, wall, walpha, wbeta, rmax, out);
        }
        if (uc->parsed())
            return cmd_uchi(cfg, ualpha, ubeta, invariants, simplicity, verma_seed, out);
        if (vf->parsed()) return cmd_verify(cfg, suite, module_json_path, out);
    } catch (const ParseError& e) {
        err << "parse error at position " << e.position << ": " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand given\n";
    return 2;
}

} // namespace y2p
