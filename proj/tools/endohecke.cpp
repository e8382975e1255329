#include "endohecke/acceptance.hpp"
#include "endohecke/gauge.hpp"
#include "endohecke/hecke_h.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <set>

using namespace endohecke;

namespace {

enum Exit { kOk = 0, kValidation = 1, kAcceptance = 2, kBound = 3 };

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string datum;
    std::string character;
    int bound = 3;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string side = "H";
    std::string word;
    std::string check = "all";
    std::string object = "theta";
    int trials = 100;
    int N = 1;
};

struct Loaded {
    RootDatum datum;
    TorusCharacter L;
};

Loaded load(const RunConfig& cfg) {
    if (cfg.datum.empty()) throw ValidationError("--datum is required");
    RootDatum d;
    try {
        d = load_root_datum(cfg.datum);
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
    auto problems = validate_root_datum(d);
    if (!problems.empty()) {
        std::string msg = "invalid root datum " + cfg.datum + ":";
        for (auto& p : problems) msg += " " + p + ";";
        throw ValidationError(msg);
    }
    TorusCharacter L;
    try {
        L = cfg.character.empty() ? TorusCharacter::trivial(d.rank) : TorusCharacter::parse(cfg.character);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("bad character: ") + e.what());
    }
    if (static_cast<int>(L.values.size()) != d.rank)
        throw ValidationError("character has " + std::to_string(L.values.size()) + " entries, datum rank is " +
                              std::to_string(d.rank));
    for (auto& x : L.values)
        if (x < 0 || x >= 1) throw ValidationError("character entries must lie in [0,1)");
    if (cfg.bound < 0) throw ValidationError("--bound must be >= 0");
    return {std::move(d), std::move(L)};
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// "s3,s1" or "3,1" -> 0-based indices into S_H
std::vector<int> parse_word(const std::string& text, std::size_t nsimples) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok[0] == 's') tok.erase(0, 1);
        int k = 0;
        try {
            k = std::stoi(tok);
        } catch (const std::exception&) {
            throw ValidationError("bad word letter '" + tok + "'");
        }
        if (k < 1 || static_cast<std::size_t>(k) > nsimples)
            throw ValidationError("letter s" + std::to_string(k) + " out of range 1.." + std::to_string(nsimples));
        out.push_back(k - 1);
    }
    return out;
}

int cmd_endoscope(const RunConfig& cfg) {
    auto [d, L] = load(cfg);
    RootDatum H = endoscopic_datum(d, L);
    Json j;
    j["datum"] = d.name;
    j["character"] = L.str();
    j["cartan_type"] = cartan_type(H);
    j["endoscopic_datum"] = Json::parse(root_datum_json(H));
    Json coroots = Json::array();
    for (int i : endoscopic_coroots(d, L))
        if (d.positive[i]) coroots.push_back(d.coroots[i]);
    j["positive_coroots"] = coroots;
    Json simples = Json::array();
    const CoxeterSystem sys = endoscopic_system(d, L);
    for (auto& s : sys.simples()) simples.push_back(elem_json(s));
    j["affine_simple_system"] = simples;
    auto n = block_count_formula(d, L);
    j["blocks_L_to_L"] = n ? Json(*n) : Json(nullptr);
    Json warnings = Json::array();
    if (coroots.empty()) {
        warnings.push_back("W~°_L trivial: no L-trivial coroots, H is a torus");
        std::cerr << "warning: W~°_L trivial for this character\n";
    }
    j["warnings"] = warnings;
    emit(j);
    return kOk;
}

int cmd_blocks(const RunConfig& cfg) {
    auto [d, L] = load(cfg);
    BlockSystem bs(d, L);
    Json out = Json::array();
    for (auto& Lp : bs.orbit())
        for (auto& b : bs.enumerate_blocks(Lp, L, cfg.bound)) out.push_back(block_json(bs, b));
    if (cfg.format == "table") {
        for (auto& b : out)
            std::cout << b["left_char"].get<std::string>() << " -> " << b["right_char"].get<std::string>()
                      << "  minimal length " << b["minimal_length"] << "  members " << b["members"]
                      << "  by length " << b["sizes_by_length"].dump() << "\n";
        return kOk;
    }
    emit(out);
    return kOk;
}

int cmd_hecke(const RunConfig& cfg, const std::string& sub) {
    auto [d, L] = load(cfg);
    MonoHecke mh(BlockSystem(d, L));
    const CoxeterSystem& H = mh.blocks().neutral(L);
    if (sub == "verify") {
        CompareReport rep = compare_neutral_block(mh, L, cfg.bound, std::min(cfg.bound, 2));
        Json j;
        j["ok"] = rep.ok;
        j["bound"] = cfg.bound;
        j["coefficient_checks"] = rep.coefficient_checks;
        j["product_checks"] = rep.product_checks;
        j["mismatches"] = rep.mismatches;
        emit(j);
        return rep.ok ? kOk : kAcceptance;
    }
    if (sub == "kl") {
        Json out = Json::array();
        if (cfg.side == "H") {
            HeckeH hh(H);
            auto elems = H.elements_up_to(cfg.bound);
            for (auto& w : elems)
                for (auto& u : elems) {
                    if (!H.leq(u, w)) continue;
                    Json e;
                    e["u"] = elem_json(u);
                    e["w"] = elem_json(w);
                    e["P"] = laurent_json(hh.kl_poly(u, w));
                    out.push_back(e);
                }
        } else if (cfg.side == "mono") {
            for (auto& [w, bw] : mh.kl_basis_neutral(L, cfg.bound)) {
                Json e;
                e["w"] = elem_json(w);
                Json coeffs = Json::array();
                for (auto& [u, p] : bw.terms) {
                    Json c;
                    c["u"] = elem_json(u);
                    c["that_coeff"] = laurent_json(mh.that_coeff(bw, u));
                    coeffs.push_back(c);
                }
                e["b"] = coeffs;
                out.push_back(e);
            }
        } else {
            throw ValidationError("--side must be H or mono");
        }
        emit(out);
        return kOk;
    }
    // theta
    BlockSystem bs(d, L);
    Json out = Json::array();
    for (auto& b : bs.enumerate_blocks(L, L, cfg.bound)) {
        Json j = theta_json(mh, b, cfg.N);
        j["eigen_checks"] = Json::object();
        for (std::size_t s = 0; s < mh.ambient().num_simples(); ++s)
            if (mh.block_simple(static_cast<int>(s), L))
                j["eigen_checks"][std::to_string(s)] = theta_eigen_check(mh, b, static_cast<int>(s), cfg.N);
        out.push_back(j);
    }
    emit(out);
    return kOk;
}

int cmd_gauge(const RunConfig& cfg) {
    auto [d, L] = load(cfg);
    BlockSystem bs(d, L);
    auto g = build_cover_graph(bs.neutral(L), cfg.bound);
    auto f0 = sign_solution(g);
    std::mt19937_64 rng(cfg.seed);
    auto random_gauge = [&] {
        VertexFn r(g.vertices.size());
        std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
        for (auto& x : r) {
            long n = num(rng);
            x = mpq_class(n == 0 ? 5 : n, den(rng));
            x.canonicalize();
        }
        r[0] = 1;
        return r;
    };
    int pass = 0;
    for (int t = 0; t < cfg.trials; ++t) {
        auto f1 = gauge_transform(g, f0, random_gauge());
        auto r = random_gauge();
        if (gauge_fix(g, f1, gauge_transform(g, f1, r)) == r) ++pass;
    }
    Json j;
    j["vertices"] = g.vertices.size();
    j["edges"] = g.edges.size();
    j["diamonds"] = g.diamonds.size();
    j["sign_solution_anticommutative"] = is_anticommutative(g, f0);
    j["trials"] = cfg.trials;
    j["pass"] = pass;
    j["fail"] = cfg.trials - pass;
    emit(j);
    return pass == cfg.trials && is_anticommutative(g, f0) ? kOk : kAcceptance;
}

int cmd_soergel(const RunConfig& cfg) {
    auto [d, L] = load(cfg);
    MonoHecke mh(BlockSystem(d, L));
    const CoxeterSystem& H = mh.blocks().neutral(L);
    if (H.num_simples() == 0) throw ValidationError("S_H is empty for this character");
    auto word = parse_word(cfg.word, H.num_simples());
    const bool all = cfg.check == "all";
    if (!all && cfg.check != "ranks" && cfg.check != "split" && cfg.check != "adjunction" && cfg.check != "none")
        throw ValidationError("--check must be all, ranks, split, adjunction or none");
    PolyRing R(d);
    std::mt19937_64 rng(cfg.seed);
    bool ok = true;
    Json j;
    Json letters = Json::array();
    for (int l : word) letters.push_back(elem_json(H.simple(l)));
    j["word"] = letters;
    auto M = bs_bimodule(R, H, word);
    j["label"] = M.label;
    j["graded_rank"] = laurent_json(graded_rank(M));
    if (all || cfg.check == "ranks") {
        HeckeElt prod = mh.T(AffWElem::identity(d.rank), L);
        for (int l : word) prod = mh.mul(prod, mh.b_simple(H.simple(l), L));
        LaurentPoly eps;
        for (auto& [u, p] : prod.terms) eps += p * LaurentPoly::q(H.length(u));
        auto pt = random_point(R, Level::RR, rng);
        bool fibers = true;
        for (auto& [u, p] : prod.terms)
            fibers = fibers && static_cast<std::int64_t>(fiber_dim(R, M, u, pt)) == p.at_one();
        j["b_product"] = hecke_json(prod);
        j["rank_matches_b_product"] = graded_rank(M) == eps;
        j["fibers_match_b_product"] = fibers;
        ok = ok && graded_rank(M) == eps && fibers;
    }
    AffWElem x = AffWElem::identity(d.rank);
    for (int l : word) x = x * H.simple(l);
    if (!word.empty() && H.length(x) == static_cast<int>(word.size())) {
        auto top = top_summand(R, M, x, rng);
        Json t;
        t["graded_rank"] = laurent_json(graded_rank(top.module));
        t["split_complete"] = top.split_complete;
        j["top_summand"] = t;
    }
    std::set<int> distinct(word.begin(), word.end());
    Json per = Json::array();
    for (int l : distinct) {
        Json s;
        s["simple"] = "s" + std::to_string(l + 1);
        if (all || cfg.check == "split") {
            auto sp = split_bb(R, H.simple(l), H.simple_root(l));
            s["split"] = {{"ok", sp.ok}, {"summands", {"B<1>", "B<-1>"}}, {"detail", sp.detail}};
            ok = ok && sp.ok;
        }
        if (all || cfg.check == "adjunction") {
            auto ad = unit_counit_check(R, H.simple(l), H.simple_root(l));
            s["adjunction"] = {{"unit_ok", ad.unit_ok},
                               {"counit_ok", ad.counit_ok},
                               {"triangle_left", ad.triangle_left},
                               {"triangle_right", ad.triangle_right},
                               {"detail", ad.detail}};
            ok = ok && ad.ok();
        }
        per.push_back(s);
    }
    j["simples"] = per;
    j["ok"] = ok;
    emit(j);
    return ok ? kOk : kAcceptance;
}

int cmd_verify_all(const RunConfig& cfg) {
    std::vector<FixtureCase> cases;
    if (cfg.datum.empty()) {
        cases = standard_fixtures(ENDOHECKE_FIXTURES);
    } else {
        auto [d, L] = load(cfg);
        cases.push_back({d.name + " (" + L.str() + ")", d, L});
    }
    AcceptanceOptions opt;
    opt.block_bound = cfg.bound;
    opt.seed = cfg.seed;
    auto results = run_acceptance(cases, opt);
    bool ok = true;
    for (auto& r : results) ok = ok && r.pass();
    if (cfg.format == "table") {
        for (auto& r : results) std::cout << format_line(r) << "\n";
    } else {
        Json j;
        j["ok"] = ok;
        j["criteria"] = results_json(results);
        emit(j);
    }
    return ok ? kOk : kAcceptance;
}

int cmd_dump(const RunConfig& cfg) {
    auto [d, L] = load(cfg);
    MonoHecke mh(BlockSystem(d, L));
    const CoxeterSystem& H = mh.blocks().neutral(L);
    Json j;
    bool stable = true;
    if (cfg.object == "blocks") {
        j = Json::array();
        for (auto& b : mh.blocks().enumerate_blocks(L, L, cfg.bound)) j.push_back(block_json(mh.blocks(), b));
    } else if (cfg.object == "theta") {
        auto blocks = mh.blocks().enumerate_blocks(L, L, cfg.bound);
        j = theta_json(mh, blocks.front(), cfg.N);
        stable = hecke_from_json(j["theta"]) == theta_vector(mh, blocks.front(), cfg.N);
    } else if (cfg.object == "hecke") {
        auto word = parse_word(cfg.word, H.num_simples());
        HeckeElt prod = mh.T(AffWElem::identity(d.rank), L);
        for (int l : word) prod = mh.mul(prod, mh.b_simple(H.simple(l), L));
        j = hecke_json(prod);
        stable = hecke_from_json(Json::parse(j.dump())) == prod;
    } else if (cfg.object == "bimodule") {
        PolyRing R(d);
        auto M = bs_bimodule(R, H, parse_word(cfg.word, H.num_simples()));
        j = bimodule_json(M);
        auto back = bimodule_from_json(Json::parse(j.dump()));
        stable = back.degrees == M.degrees && back.right_x == M.right_x && back.zop == M.zop;
    } else {
        throw ValidationError("--object must be blocks, theta, hecke or bimodule");
    }
    if (!stable) {
        std::cerr << "round trip mismatch\n";
        return kValidation;
    }
    emit(j);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"endohecke: endoscopic groups, monodromic Hecke algebras and Soergel bimodules"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&cfg](CLI::App* sc, bool needs_datum = true) {
        auto* o = sc->add_option("--datum", cfg.datum, "root datum JSON file");
        if (needs_datum) o->required();
        sc->add_option("--char", cfg.character, "torus character, comma separated rationals in [0,1)");
        sc->add_option("--bound", cfg.bound, "length bound")->capture_default_str();
        sc->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        sc->add_option("--format", cfg.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };
    auto* endo = app.add_subcommand("endoscope", "endoscopic root datum and affine simple system");
    common(endo);
    auto* blocks = app.add_subcommand("blocks", "blocks with minimal elements and sizes per length");
    common(blocks);
    auto* hecke = app.add_subcommand("hecke", "monodromic Hecke algebra");
    hecke->require_subcommand(1);
    auto* hv = hecke->add_subcommand("verify", "compare the neutral block with the Hecke algebra of W~_H");
    auto* hk = hecke->add_subcommand("kl", "dump KL polynomials");
    auto* ht = hecke->add_subcommand("theta", "theta vectors of all blocks");
    for (auto* sc : {hv, hk, ht}) common(sc);
    hk->add_option("--side", cfg.side, "H or mono")->capture_default_str();
    ht->add_option("--N", cfg.N, "truncation length")->capture_default_str();
    auto* gauge = app.add_subcommand("gauge", "randomized gauge-equivalence trials");
    common(gauge);
    gauge->add_option("--trials", cfg.trials)->capture_default_str();
    auto* soer = app.add_subcommand("soergel", "Bott-Samelson bimodule checks");
    common(soer);
    soer->add_option("--word", cfg.word, "letters of S_H, 1-based, e.g. s3,s1");
    soer->add_option("--check", cfg.check, "all, ranks, split, adjunction or none")->capture_default_str();
    auto* va = app.add_subcommand("verify-all", "run every acceptance criterion");
    common(va, false);
    auto* dump = app.add_subcommand("dump", "JSON dump of blocks, theta vectors, Hecke elements or bimodules");
    common(dump);
    dump->add_option("--object", cfg.object, "blocks, theta, hecke or bimodule")->capture_default_str();
    dump->add_option("--word", cfg.word, "letters of S_H for hecke and bimodule");
    dump->add_option("--N", cfg.N, "theta truncation")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kValidation;
    }
    try {
        if (*endo) return cmd_endoscope(cfg);
        if (*blocks) return cmd_blocks(cfg);
        if (*hecke) return cmd_hecke(cfg, *hv ? "verify" : *hk ? "kl" : "theta");
        if (*gauge) return cmd_gauge(cfg);
        if (*soer) return cmd_soergel(cfg);
        if (*va) return cmd_verify_all(cfg);
        if (*dump) return cmd_dump(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return kBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kValidation;
    }
    return kValidation;
}
