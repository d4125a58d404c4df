#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "qumea/coevent.hpp"
#include "qumea/model_library.hpp"
#include "qumea/report_io.hpp"

namespace qumea {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_io_or_schema = 1,
    exit_axiom_violation = 2,
    exit_capacity = 3,
    exit_empty_family = 4,
};

struct RunConfig {
    std::string model;                    // built-in name or JSON file path
    std::optional<double> eps;            // absolute preclusion threshold
    std::optional<double> tol;            // relative numerical tolerance
    bool unital_only = false;
    OutputFormat output = OutputFormat::text;
    std::size_t max_histories = default_enumeration_guard;
    std::size_t max_dim = default_annihilator_guard;
};

/// Built-in model, or the parsed contents of a JSON model file.
ModelSpec resolve_model(const std::string& name_or_path);

/// eps resolution: --eps flag, then the QUMEA_EPS environment variable, then
/// the functional's default of 1e-9 * scale.
double resolve_eps(const RunConfig& config, const DecoherenceFunctional& functional);

int run_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_preclusions(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_coevents(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses flags, dispatches, maps errors to
/// exit codes. Reports go to `out`, diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qumea
