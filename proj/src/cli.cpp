#include "qumea/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

namespace qumea {

ModelSpec resolve_model(const std::string& name_or_path) {
    if (auto builtin = builtin_model(name_or_path)) {
        return *std::move(builtin);
    }
    std::ifstream file(name_or_path);
    if (!file) {
        throw IoError("cannot open model file '" + name_or_path + "'");
    }
    std::ostringstream content;
    content << file.rdbuf();
    if (file.bad()) {
        throw IoError("cannot read model file '" + name_or_path + "'");
    }
    return parse_model(content.str());
}

double resolve_eps(const RunConfig& config, const DecoherenceFunctional& functional) {
    if (config.eps.has_value()) {
        return *config.eps;
    }
    if (const char* env = std::getenv("QUMEA_EPS")) {
        try {
            std::size_t used = 0;
            const double value = std::stod(env, &used);
            if (used != std::string(env).size() || !(value > 0.0)) {
                throw std::invalid_argument(env);
            }
            return value;
        } catch (const std::exception&) {
            throw SchemaError(std::string("QUMEA_EPS: cannot parse '") + env +
                              "' as a positive number");
        }
    }
    return functional.default_eps();
}

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
    (void)err;
    const ModelSpec spec = resolve_model(config.model);
    const DecoherenceFunctional functional = build_decoherence(spec, config.tol);
    out << format_check(make_check_report(functional), config.output);
    return exit_ok;
}

int run_preclusions(const RunConfig& config, std::ostream& out, std::ostream& err) {
    (void)err;
    const ModelSpec spec = resolve_model(config.model);
    const DecoherenceFunctional functional = build_decoherence(spec, config.tol);
    const PreclusionReport report =
        functional.precluded_events(resolve_eps(config, functional), config.max_histories);
    out << format_preclusions(report, config.output);
    return exit_ok;
}

int run_coevents(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const ModelSpec spec = resolve_model(config.model);
    const DecoherenceFunctional functional = build_decoherence(spec, config.tol);
    const PreclusionReport report =
        functional.precluded_events(resolve_eps(config, functional), config.max_histories);
    const PreclusiveFamily family =
        minimal_preclusive(report, config.unital_only, config.max_dim);
    out << format_coevents(family, config.output);
    if (family.reported().empty()) {
        err << "no " << (config.unital_only ? "unital " : "")
            << "preclusive co-event exists for this model\n";
        return exit_empty_family;
    }
    return exit_ok;
}

namespace {

int dispatch(const std::function<int()>& command, std::ostream& err) {
    try {
        return command();
    } catch (const AxiomViolationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_axiom_violation;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return exit_capacity;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_io_or_schema;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_io_or_schema;
    }
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantal measures, preclusion and co-events on finite history spaces"};
    app.require_subcommand(1);

    RunConfig config;
    std::string output = "text";

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--model", config.model, "built-in model name or JSON file path")
            ->required();
        sub->add_option("--eps", config.eps,
                        "absolute preclusion threshold (default 1e-9 * scale)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--tol", config.tol, "relative numerical tolerance (default 1e-12)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--output", output, "report format: json, tsv or text")
            ->check(CLI::IsMember({"json", "tsv", "text"}));
        sub->add_option("--max-histories", config.max_histories,
                        "guard on the sample-space size for exhaustive scans");
        sub->add_option("--max-dim", config.max_dim,
                        "guard on the annihilator dimension for the minimality scan");
    };

    CLI::App* check = app.add_subcommand("check", "validate the axioms and report basics");
    CLI::App* preclusions =
        app.add_subcommand("preclusions", "list every measure-zero event exhaustively");
    CLI::App* coevents =
        app.add_subcommand("coevents", "enumerate the minimal preclusive co-events");
    add_common(check);
    add_common(preclusions);
    add_common(coevents);
    coevents->add_flag("--unital-only", config.unital_only,
                       "report only unital minimal co-events");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_io_or_schema;
    }
    config.output = parse_output_format(output);

    if (check->parsed()) {
        return dispatch([&] { return run_check(config, out, err); }, err);
    }
    if (preclusions->parsed()) {
        return dispatch([&] { return run_preclusions(config, out, err); }, err);
    }
    return dispatch([&] { return run_coevents(config, out, err); }, err);
}

} // namespace qumea
