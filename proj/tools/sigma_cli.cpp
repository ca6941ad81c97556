#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sigmakit/diag_group.hpp"
#include "sigmakit/io.hpp"
#include "sigmakit/solvers.hpp"

namespace {

using sigmakit::io::Json;

struct TowerOpts {
    std::uint64_t p = 0;
    unsigned e = 1;
    unsigned max_level = 24;
    std::uint64_t dlog_cap = std::uint64_t(1) << 24;

    sigmakit::FieldTower make() const {
        sigmakit::TowerCaps caps;
        caps.level_cap = max_level;
        caps.dlog_cap = dlog_cap;
        return sigmakit::FieldTower(p, e, caps);
    }
};

void add_tower_opts(CLI::App* cmd, TowerOpts& opts) {
    cmd->add_option("--p", opts.p, "field characteristic")->required();
    cmd->add_option("--e", opts.e, "q = p^e");
    cmd->add_option("--max-level", opts.max_level, "tower level cap");
    cmd->add_option("--dlog-cap", opts.dlog_cap, "largest enumerable field size");
}

Json caps_json(const TowerOpts& opts, std::optional<unsigned> max_n = std::nullopt) {
    Json j;
    if (max_n) j["max_n"] = *max_n;
    j["max_level"] = opts.max_level;
    j["dlog_cap"] = opts.dlog_cap;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sigmakit::ParseError("cannot open '" + path + "'", 0);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& err) {
        throw sigmakit::ParseError(std::string("invalid JSON: ") + err.what(),
                                   std::size_t(err.byte));
    }
}

sigmakit::DiagGroup group_from_flags(const std::string& alpha, const std::string& module_path) {
    if (!alpha.empty()) {
        sigmakit::SigmaPoly a = sigmakit::SigmaPoly::parse(alpha);
        if (a.is_zero())
            throw sigmakit::ParseError("relator must be nonzero", 0);
        return sigmakit::DiagGroup::one_relator(a);
    }
    if (module_path.empty())
        throw sigmakit::ParseError("either --alpha or --module is required", 0);
    return sigmakit::DiagGroup{sigmakit::io::module_from_json(read_json_file(module_path)), ""};
}

int emit(const Json& j, bool pretty, bool exhausted = false) {
    if (pretty) std::cout << j.dump(2) << '\n';
    else std::cout << j.dump() << '\n';
    return exhausted ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for diagonalizable difference algebraic groups"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable JSON");

    std::string alpha, module_path, system_path, a_text;
    unsigned n = 1, l = 1, max_t = 4;
    std::optional<unsigned> max_n;
    std::vector<std::string> gens;
    TowerOpts topts;

    auto* analyze = app.add_subcommand("group-analyze", "sigma-dim, order, connectedness");
    analyze->add_option("--alpha", alpha, "one-relator shorthand");
    analyze->add_option("--module", module_path, "module presentation JSON");

    auto* gn_cmd = app.add_subcommand("group-gn", "presentation of G_n over (k, sigma^n)");
    gn_cmd->add_option("--alpha", alpha, "one-relator shorthand");
    gn_cmd->add_option("--module", module_path, "module presentation JSON");
    gn_cmd->add_option("--n", n, "power of sigma")->required();

    auto* jh = app.add_subcommand("group-jh", "Jordan-Hoelder factor multiset");
    jh->add_option("--alpha", alpha, "one-relator shorthand")->required();

    auto* mrank = app.add_subcommand("module-rank", "ranks and torsion of a presentation");
    mrank->add_option("--module", module_path, "module presentation JSON")->required();

    auto* hull = app.add_subcommand("hull", "one-relator hull of a cyclic presentation");
    hull->add_option("--gen", gens, "ideal generator (repeatable)")->required();

    auto* slang = app.add_subcommand("solve-lang", "solve sigma^d(Y) = AY");
    add_tower_opts(slang, topts);
    slang->add_option("--system", system_path, "linear system JSON")->required();

    auto* smult = app.add_subcommand("solve-mult", "solve a multiplicative system");
    add_tower_opts(smult, topts);
    smult->add_option("--system", system_path, "multiplicative system JSON")->required();
    smult->add_option("--max-n", max_n, "bound on n (default: finite-case bound)");

    auto* sadd = app.add_subcommand("solve-additive", "solve L(x) = a");
    add_tower_opts(sadd, topts);
    sadd->add_option("--system", system_path, "JSON {\"lambdas\":[...],\"a\":\"...\"}")
        ->required();

    auto* fold = app.add_subcommand("fold", "fold a linear equation l times");
    add_tower_opts(fold, topts);
    fold->add_option("--system", system_path, "linear system JSON")->required();
    fold->add_option("--l", l, "fold count")->required();

    auto* unfold = app.add_subcommand("unfold", "unfold a multiplicative system to (k, sigma^n)");
    add_tower_opts(unfold, topts);
    unfold->add_option("--system", system_path, "multiplicative system JSON")->required();
    unfold->add_option("--n", n, "target power")->required();

    auto* h1 = app.add_subcommand("h1", "canonical torsor class representative");
    add_tower_opts(h1, topts);
    h1->add_option("--alpha", alpha, "relator")->required();
    h1->add_option("--a", a_text, "constant (element text)")->required();

    auto* moduli = app.add_subcommand("moduli", "deterministic modulus table");
    add_tower_opts(moduli, topts);
    moduli->add_option("--max-t", max_t, "levels to print");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            sigmakit::GroupReport r = sigmakit::analyze(group_from_flags(alpha, module_path));
            return emit(sigmakit::io::group_report_to_json(r), pretty);
        }
        if (*gn_cmd) {
            sigmakit::DiagGroup g = gn(group_from_flags(alpha, module_path), n);
            return emit(sigmakit::io::module_to_json(g.module), pretty);
        }
        if (*jh) {
            sigmakit::FactorSeries s =
                sigmakit::jordan_holder(group_from_flags(alpha, module_path));
            Json out;
            Json factors = Json::array();
            for (const auto& f : s.factors) {
                Json entry;
                entry["kind"] = f.is_order_zero_piece() ? "order_zero_piece" : "almost_simple";
                entry["relator"] = f.relator.to_string();
                factors.push_back(std::move(entry));
            }
            out["factors"] = std::move(factors);
            return emit(out, pretty);
        }
        if (*mrank) {
            sigmakit::ZSigmaModule m = sigmakit::io::module_from_json(read_json_file(module_path));
            Json out;
            out["rank_zsigma"] = sigmakit::rank_zsigma(m);
            std::optional<long> rz = sigmakit::rank_z(m);
            if (rz) out["rank_z"] = *rz;
            else out["rank_z"] = "infinite";
            try {
                out["z_torsion"] = sigmakit::has_z_torsion(m);
            } catch (const sigmakit::ModuleError&) {
                out["z_torsion"] = "unsupported";
                emit(out, pretty);
                return 1;
            }
            return emit(out, pretty);
        }
        if (*hull) {
            std::vector<sigmakit::SigmaPoly> ideal;
            for (const auto& g : gens) ideal.push_back(sigmakit::SigmaPoly::parse(g));
            sigmakit::HullResult r = sigmakit::one_relator_hull(ideal);
            Json out;
            if (r.alpha) {
                out["hull"] = "one_relator";
                out["alpha"] = r.alpha->to_string();
            } else {
                out["hull"] = "order_zero";
            }
            return emit(out, pretty);
        }
        if (*slang) {
            sigmakit::FieldTower tower = topts.make();
            sigmakit::LinDiffEq eq =
                sigmakit::io::linear_from_json(read_json_file(system_path), tower);
            sigmakit::SolveOutcome o = sigmakit::lang_solve(tower, eq);
            Json out = sigmakit::io::outcome_to_json(o);
            out["caps"] = caps_json(topts);
            return emit(out, pretty, !o.found());
        }
        if (*smult) {
            sigmakit::FieldTower tower = topts.make();
            sigmakit::MultTorsor t =
                sigmakit::io::mult_from_json(read_json_file(system_path), tower);
            sigmakit::SolveOutcome o = sigmakit::torsor_search(tower, t, max_n);
            Json out = sigmakit::io::outcome_to_json(o);
            out["caps"] = caps_json(topts, max_n ? *max_n : o.tried_n);
            return emit(out, pretty, !o.found());
        }
        if (*sadd) {
            sigmakit::FieldTower tower = topts.make();
            Json j = read_json_file(system_path);
            sigmakit::AdditiveEq eq;
            for (const auto& entry : j.at("lambdas"))
                eq.lambdas.push_back(
                    sigmakit::io::parse_tower_elem(entry.get<std::string>(), tower));
            eq.rhs = sigmakit::io::parse_tower_elem(j.at("a").get<std::string>(), tower);
            sigmakit::SolveOutcome o = sigmakit::solve_additive(tower, eq);
            Json out = sigmakit::io::outcome_to_json(o);
            out["caps"] = caps_json(topts);
            return emit(out, pretty, !o.found());
        }
        if (*fold) {
            sigmakit::FieldTower tower = topts.make();
            sigmakit::LinDiffEq eq =
                sigmakit::io::linear_from_json(read_json_file(system_path), tower);
            sigmakit::LinDiffEq folded = sigmakit::fold_linear(eq, l);
            return emit(sigmakit::io::linear_to_json(folded, tower), pretty);
        }
        if (*unfold) {
            sigmakit::FieldTower tower = topts.make();
            sigmakit::MultTorsor t =
                sigmakit::io::mult_from_json(read_json_file(system_path), tower);
            return emit(sigmakit::io::mult_to_json(sigmakit::unfold_mult_system(t, n)), pretty);
        }
        if (*h1) {
            sigmakit::FieldTower tower = topts.make();
            sigmakit::SigmaPoly ap = sigmakit::SigmaPoly::parse(alpha);
            sigmakit::TowerElem a = sigmakit::io::parse_tower_elem(a_text, tower);
            if (a.is_zero()) throw sigmakit::ParseError("constant must be nonzero", 0);
            sigmakit::TowerElem rep = sigmakit::h1_canonical(tower, ap, a);
            Json out;
            out["canonical"] = rep.to_string();
            return emit(out, pretty);
        }
        if (*moduli) {
            sigmakit::FieldTower tower = topts.make();
            Json out;
            out["p"] = topts.p;
            out["e"] = topts.e;
            Json table = Json::array();
            for (unsigned t = 1; t <= max_t; ++t) {
                Json entry;
                entry["t"] = t;
                entry["coeffs"] = tower.modulus(t);
                table.push_back(std::move(entry));
            }
            out["moduli"] = std::move(table);
            return emit(out, pretty);
        }
    } catch (const sigmakit::ParseError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::string what = err.what();
        std::cerr << "error: " << what << '\n';
        // unsupported shapes and cap overruns are reportable outcomes
        return 1;
    }
    return 2;
}
