#include "edgesim/advisor.hpp"
#include "edgesim/config.hpp"
#include "edgesim/errors.hpp"
#include "edgesim/io.hpp"
#include "edgesim/sweep.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>

namespace {

using namespace edgesim;

void emit(const std::string& out_path, const std::string& text) {
    if (out_path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        write_text_file(out_path, text);
    }
}

bool apply_alpha_mode(const std::string& text, SweepConfig& sweep, std::string& error) {
    if (text == "sampled") {
        sweep.alpha_mode = AlphaMode::Sampled;
        return true;
    }
    if (text == "midpoint") {
        sweep.alpha_mode = AlphaMode::Midpoint;
        return true;
    }
    if (text.rfind("fixed=", 0) == 0) {
        const char* begin = text.data() + 6;
        const char* end = text.data() + text.size();
        double alpha = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, end, alpha);
        if (ec != std::errc() || ptr != end || !(0.0 < alpha && alpha <= 1.0)) {
            error = "--alpha-mode fixed=<v> needs a number v in (0, 1]";
            return false;
        }
        sweep.alpha_mode = AlphaMode::Fixed;
        sweep.alpha_fixed = alpha;
        return true;
    }
    error = "--alpha-mode must be sampled, midpoint, or fixed=<v>";
    return false;
}

struct SimulateArgs {
    std::string model = "all";
    double sweep_start = 0.0;
    double sweep_end = 0.0;
    double sweep_step = 0.0;
    std::uint64_t seed = 0;
    int repetitions = 0;
    std::string alpha_mode;
    std::string format = "csv";
    std::string out = "-";
    std::string config_path;

    CLI::Option* opt_model = nullptr;
    CLI::Option* opt_start = nullptr;
    CLI::Option* opt_end = nullptr;
    CLI::Option* opt_step = nullptr;
    CLI::Option* opt_seed = nullptr;
    CLI::Option* opt_repetitions = nullptr;
    CLI::Option* opt_alpha_mode = nullptr;
};

int run_simulate(const SimulateArgs& args) {
    ConfigDocument doc;
    if (!args.config_path.empty()) {
        doc = load_config_file(args.config_path);
    }

    SweepConfig sweep = doc.sweep_config();
    if (args.opt_model->count() > 0) {
        if (args.model == "all") {
            sweep.models = {ModelKind::Fog, ModelKind::Mec, ModelKind::Hybrid};
        } else {
            sweep.models = {*parse_model(args.model)};
        }
    }
    if (args.opt_start->count() > 0) sweep.start_mb = args.sweep_start;
    if (args.opt_end->count() > 0) sweep.end_mb = args.sweep_end;
    if (args.opt_step->count() > 0) sweep.step_mb = args.sweep_step;
    if (args.opt_repetitions->count() > 0) sweep.repetitions = args.repetitions;
    if (args.opt_alpha_mode->count() > 0) {
        std::string error;
        if (!apply_alpha_mode(args.alpha_mode, sweep, error)) {
            std::cerr << error << "\n";
            return 1;
        }
    }
    if (args.opt_seed->count() > 0) {
        sweep.seed = args.seed;
    } else if (const auto env_seed = seed_from_env()) {
        sweep.seed = *env_seed;
    }
    sweep.validate();

    SweepInputs inputs;
    inputs.sweep = sweep;
    for (ModelKind model : sweep.models) {
        inputs.scenarios.push_back(doc.scenario_params(model));
        inputs.policies.push_back(doc.policy_config(model));
    }

    const std::vector<PointResult> points = run_sweep(inputs);
    emit(args.out, args.format == "json" ? to_json_report(points) : to_csv(points));
    return 0;
}

int run_compare(const std::string& in_path, const std::string& out_path) {
    const std::vector<PointResult> points = read_results(in_path);
    const ComparisonMetrics metrics = compare(points);
    emit(out_path, to_json(metrics));
    return 0;
}

int run_validate_config(const std::string& config_path, bool explain) {
    const ConfigDocument doc = load_config_file(config_path);
    doc.validate();
    if (explain) {
        std::string text;
        for (const std::string& line : doc.explain()) {
            text += line;
            text += '\n';
        }
        emit("-", text);
    } else {
        emit("-", config_path + ": ok\n");
    }
    return 0;
}

int run_advise(const std::string& use_case, const std::string& profile_path) {
    UseCaseProfile profile;
    if (!use_case.empty()) {
        const auto named = find_named_profile(use_case);
        if (!named) {
            std::cerr << "unknown use case '" << use_case << "'; known use cases:";
            for (const UseCaseProfile& candidate : named_profiles()) {
                std::cerr << " '" << candidate.name << "'";
            }
            std::cerr << "\n";
            return 1;
        }
        profile = *named;
    } else {
        profile = profile_from_json(read_text_file(profile_path));
    }

    const Recommendation rec = recommend(profile);
    nlohmann::json scores;
    scores["fog"] = rec.scores.at(EdgeModel::Fog);
    scores["mec"] = rec.scores.at(EdgeModel::Mec);
    scores["cloudlets"] = rec.scores.at(EdgeModel::Cloudlets);
    const nlohmann::json doc{{"use_case", rec.use_case},
                             {"composition", rec.composition.to_string()},
                             {"components", rec.composition.components()},
                             {"from_lookup", rec.from_lookup},
                             {"scores", scores}};
    emit("-", doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latency simulator and deployment advisor for edge-computing topologies",
                 "edgesim"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Sweep request volumes through the deployment models");
    sim_args.opt_model =
        simulate->add_option("--model", sim_args.model, "Model to simulate (default: all)")
            ->check(CLI::IsMember({"fog", "mec", "hybrid", "all"}));
    sim_args.opt_start =
        simulate->add_option("--sweep-start", sim_args.sweep_start, "First volume in MB");
    sim_args.opt_end =
        simulate->add_option("--sweep-end", sim_args.sweep_end, "Last volume in MB");
    sim_args.opt_step =
        simulate->add_option("--sweep-step", sim_args.sweep_step, "Volume increment in MB");
    sim_args.opt_seed = simulate->add_option("--seed", sim_args.seed, "Random seed");
    sim_args.opt_repetitions = simulate->add_option("--repetitions", sim_args.repetitions,
                                                    "Runs per (model, volume) point");
    sim_args.opt_alpha_mode = simulate->add_option(
        "--alpha-mode", sim_args.alpha_mode, "sampled | midpoint | fixed=<v>");
    simulate->add_option("--format", sim_args.format, "Output format (default: csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--out", sim_args.out, "Output path, or - for stdout");
    simulate->add_option("--config", sim_args.config_path, "Config file (JSON)");

    std::string compare_in;
    std::string compare_out = "-";
    CLI::App* compare_cmd =
        app.add_subcommand("compare", "Derive cross-model metrics from sweep results");
    compare_cmd->add_option("--in", compare_in, "Results file (CSV or JSON)")->required();
    compare_cmd->add_option("--out", compare_out, "Metrics path, or - for stdout");

    std::string validate_path;
    bool explain = false;
    CLI::App* validate_cmd =
        app.add_subcommand("validate-config", "Check a config file and show effective values");
    validate_cmd->add_option("--config", validate_path, "Config file (JSON)")->required();
    validate_cmd->add_flag("--explain", explain,
                           "Print every effective parameter with its origin");

    std::string use_case;
    std::string profile_path;
    CLI::App* advise_cmd =
        app.add_subcommand("advise", "Recommend a deployment composition for a use case");
    CLI::Option* opt_use_case =
        advise_cmd->add_option("--use-case", use_case, "A named use case");
    advise_cmd->add_option("--profile", profile_path, "Use-case profile (JSON file)")
        ->excludes(opt_use_case);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (simulate->parsed()) {
            return run_simulate(sim_args);
        }
        if (compare_cmd->parsed()) {
            return run_compare(compare_in, compare_out);
        }
        if (validate_cmd->parsed()) {
            return run_validate_config(validate_path, explain);
        }
        if (advise_cmd->parsed()) {
            if (use_case.empty() && profile_path.empty()) {
                std::cerr << "advise needs --use-case or --profile\n";
                return 1;
            }
            return run_advise(use_case, profile_path);
        }
        std::cerr << "no subcommand\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
