// Command-line driver: collapse prediction and simulation, invariant drift
// series, special staircase configurations, group-relation suites and
// conjecture scans.  Subcommand outputs are JSON on stdout; traces are CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polydyn/json_io.hpp"

using namespace polydyn;
using nlohmann::json;

namespace {

cplx parse_cplx(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

std::vector<cplx> cplx_list_from_json(const json& j) {
    std::vector<cplx> out;
    for (const auto& v : j)
        out.push_back(cplx_from_json(v));
    return out;
}

struct CommonOpts {
    std::string system = "staircase";
    std::string eta = "1";
    std::string word;
    std::string state_path;
    std::string config_path;
    std::uint64_t seed = 1;
    int n = 5;
    int iters = 200;
    double tol = 1e-4;
    bool backward = false;

    void attach(CLI::App* cmd, bool with_dynamics) {
        cmd->add_option("--system", system, "staircase|flat|leapfrog");
        cmd->add_option("--eta", eta, "staircase scaling parameter, re[,im]");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--n", n, "polygon size for random starts");
        cmd->add_option("--state", state_path, "JSON state file (polygon + curvature)");
        cmd->add_option("--config", config_path, "JSON config file; flags override it");
        if (with_dynamics) {
            cmd->add_option("--iters", iters, "iteration budget");
            cmd->add_option("--tol", tol, "collapse tolerance");
            cmd->add_option("--word", word, "flip word: comma-separated indices or 'sweep'");
            cmd->add_flag("--backward", backward, "iterate the reverse dynamic");
        }
    }

    AnyState load_state(const SystemSpec& spec) const {
        std::ifstream in(state_path);
        if (!in)
            throw Error("cannot open state file '" + state_path + "'");
        json j = json::parse(in);
        if (spec.kind == SystemSpec::Kind::Leapfrog) {
            std::vector<ProjPoint> sm, s;
            for (const auto& v : j.at("s_minus"))
                sm.push_back(projpoint_from_json(v));
            for (const auto& v : j.at("s"))
                s.push_back(projpoint_from_json(v));
            Mobius m = j.contains("monodromy") ? mobius_from_json(j.at("monodromy"))
                                               : Mobius::identity();
            return LeapfrogState(std::move(sm), std::move(s), m);
        }
        TwistedPolygon P = polygon_from_json(j.at("polygon"));
        if (spec.kind == SystemSpec::Kind::Staircase)
            return StaircaseState(P, cplx_list_from_json(j.at("mu")));
        return FlatState(P, cplx_list_from_json(j.at("alpha")));
    }

    ExperimentConfig experiment() {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in)
                throw Error("cannot open config file '" + config_path + "'");
            json j = json::parse(in);
            if (j.contains("system"))
                system = j.at("system").get<std::string>();
            if (j.contains("eta")) {
                cplx e = cplx_from_json(j.at("eta"));
                eta = std::to_string(std::real(e)) + "," + std::to_string(std::imag(e));
            }
            if (j.contains("seed"))
                seed = j.at("seed").get<std::uint64_t>();
            if (j.contains("n"))
                n = j.at("n").get<int>();
            if (j.contains("iterations"))
                iters = j.at("iterations").get<int>();
            if (j.contains("tol"))
                tol = j.at("tol").get<double>();
            if (j.contains("word"))
                word = j.at("word").get<std::string>();
            if (j.contains("backward"))
                backward = j.at("backward").get<bool>();
        }
        ExperimentConfig cfg;
        cfg.system = SystemSpec::parse(system, parse_cplx(eta));
        cfg.seed = seed;
        cfg.n = n;
        cfg.iterations = iters;
        cfg.collapse_tol = tol;
        cfg.backward = backward;
        if (!state_path.empty()) {
            cfg.start = load_state(cfg.system);
            cfg.n = std::visit(
                [](const auto& s) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LeapfrogState>)
                        return s.n();
                    else
                        return s.polygon.n();
                },
                *cfg.start);
        }
        if (!word.empty())
            cfg.word = FlipWord::parse(word, cfg.n);
        return cfg;
    }
};

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    out << j.dump(2) << "\n";
}

int run(int argc, char** argv, CLI::App& app) {
    CommonOpts predict_opts, simulate_opts, invariants_opts, scan_opts;
    std::string csv_path, out_path, special_kind = "parabolic", q_text = "2", lambda_text = "4";
    int trials = 20, workers = 1, special_n = 5, relations_n = 6, relations_trials = 100;
    std::uint64_t relations_seed = 1;

    CLI::App* predict = app.add_subcommand("predict", "collapse candidates and I/J/K/Delta");
    predict_opts.attach(predict, false);
    predict->add_option("--out", out_path, "output JSON path (default stdout)");

    CLI::App* simulate = app.add_subcommand("simulate", "iterate the dynamic and report");
    simulate_opts.attach(simulate, true);
    simulate->add_option("--csv", csv_path, "write the per-iteration CSV trace here");
    simulate->add_option("--out", out_path, "output JSON path (default stdout)");

    CLI::App* invariants = app.add_subcommand("invariants", "invariant series over a word");
    invariants_opts.attach(invariants, true);
    invariants->add_option("--out", out_path, "output CSV path (default stdout)");

    CLI::App* special = app.add_subcommand("special", "special staircase configurations");
    special->add_option("--n", special_n, "polygon size");
    special->add_option("--kind", special_kind, "parabolic|geometric|lambda");
    special->add_option("--q", q_text, "geometric ratio, re[,im]");
    special->add_option("--lambda", lambda_text, "curvature value, re[,im]");
    special->add_option("--out", out_path, "output JSON path (default stdout)");

    CLI::App* relations = app.add_subcommand("relations", "flip group relation suite");
    relations->add_option("--n", relations_n, "polygon size (>= 4 for commutation)");
    relations->add_option("--trials", relations_trials, "random states per relation");
    relations->add_option("--seed", relations_seed, "random seed");
    relations->add_option("--out", out_path, "output JSON path (default stdout)");

    CLI::App* scan = app.add_subcommand("scan", "seeded conjecture scan");
    scan_opts.attach(scan, true);
    scan->add_option("--trials", trials, "number of seeded trials");
    scan->add_option("--workers", workers, "parallel trial workers");
    scan->add_option("--out", out_path, "output JSON path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (predict->parsed()) {
        ExperimentConfig cfg = predict_opts.experiment();
        Sampler sampler(cfg.seed);
        AnyState st = cfg.start ? *cfg.start : sampler.state(cfg.system, cfg.n);
        CollapsePrediction pred = std::visit(
            [&](const auto& s) {
                if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StaircaseState>)
                    return predict_collapse(s, cfg.system.eta);
                else
                    return predict_collapse(s);
            },
            st);
        emit(to_json(pred), out_path);
        return 0;
    }
    if (simulate->parsed()) {
        ExperimentConfig cfg = simulate_opts.experiment();
        CollapseReport rep = run_collapse(cfg);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            write_csv_trace(rep, csv);
        }
        emit(to_json(rep), out_path);
        return 0;
    }
    if (invariants->parsed()) {
        ExperimentConfig cfg = invariants_opts.experiment();
        CollapseReport rep = run_collapse(cfg);
        std::ostringstream csv;
        csv.precision(17);
        csv << "iteration,I_re,I_im,J_re,J_im,K_re,K_im,Delta_re,Delta_im";
        size_t gmax = 0;
        for (const auto& rec : rep.trace)
            gmax = std::max(gmax, rec.G.size());
        for (size_t k = 1; k <= gmax; ++k)
            csv << ",G" << k << "_re,G" << k << "_im";
        csv << "\n";
        for (const auto& rec : rep.trace) {
            if (!rec.invariants_valid)
                continue;
            csv << rec.iteration;
            for (cplx v : {rec.I, rec.J, rec.K, rec.Delta})
                csv << ',' << std::real(v) << ',' << std::imag(v);
            for (size_t k = 0; k < gmax; ++k) {
                if (k < rec.G.size())
                    csv << ',' << std::real(rec.G[k]) << ',' << std::imag(rec.G[k]);
                else
                    csv << ",,";
            }
            csv << "\n";
        }
        if (out_path.empty())
            std::cout << csv.str();
        else
            std::ofstream(out_path) << csv.str();
        std::cerr << "max_invariant_drift " << rep.max_invariant_drift << "\n";
        return 0;
    }
    if (special->parsed()) {
        SpecialRequest req;
        if (special_kind == "parabolic")
            req.kind = SpecialKind::Parabolic;
        else if (special_kind == "geometric")
            req.kind = SpecialKind::Geometric;
        else if (special_kind == "lambda")
            req.kind = SpecialKind::FromLambda;
        else
            throw Error("special: unknown kind '" + special_kind + "'");
        req.q = parse_cplx(q_text);
        req.lambda = parse_cplx(lambda_text);
        SpecialReport rep = special_staircase(special_n, req);
        emit(to_json(rep), out_path);
        return 0;
    }
    if (relations->parsed()) {
        RelationsReport rep = relations_suite(relations_n, relations_trials, relations_seed);
        emit(to_json(rep), out_path);
        return rep.pass ? 0 : 4;
    }
    if (scan->parsed()) {
        ExperimentConfig cfg = scan_opts.experiment();
        ScanSummary sum = scan_conjecture(cfg, trials, workers);
        emit(to_json(sum), out_path);
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polygonal dynamics on the projective line"};
    app.require_subcommand(1);
    try {
        return run(argc, argv, app);
    } catch (const ExcludedParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        bool degenerate = dynamic_cast<const DegenerateCrossRatio*>(&e) ||
                          dynamic_cast<const DegenerateTriple*>(&e) ||
                          dynamic_cast<const CoincidentAxis*>(&e) ||
                          dynamic_cast<const DegenerateWindow*>(&e) ||
                          dynamic_cast<const DegenerateReconstruction*>(&e) ||
                          dynamic_cast<const DegenerateStep*>(&e) ||
                          dynamic_cast<const ParabolicStep*>(&e) ||
                          dynamic_cast<const DegenerateEdge*>(&e) ||
                          dynamic_cast<const NoCyclicPlacement*>(&e) ||
                          dynamic_cast<const ZeroPolynomial*>(&e);
        return degenerate ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
