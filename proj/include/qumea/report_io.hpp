#pragma once

#include <cstddef>
#include <string>

#include "qumea/coevent.hpp"
#include "qumea/quantal_measure.hpp"

namespace qumea {

enum class OutputFormat { json, tsv, text };

/// Parses "json" | "tsv" | "text"; throws SchemaError otherwise.
OutputFormat parse_output_format(const std::string& name);

/// Axiom-check summary of a decoherence functional.
struct CheckReport {
    std::size_t histories = 0;
    double hermiticity_residual = 0.0;
    double min_eigenvalue = 0.0;
    bool classical = false;
    double mu_total = 0.0;
    double scale = 0.0;
    double tol = 0.0;
};

CheckReport make_check_report(const DecoherenceFunctional& functional);

/// "{a, b}" style rendering of an event's members in canonical order.
std::string event_to_text(const Event& event);

/// Sum-of-starred-labels rendering, e.g. "[++--]* + [+---]*"; "0" when zero.
std::string coevent_to_text(const Coevent& phi);

/// Shortest decimal representation that round-trips the double.
std::string format_double(double value);

std::string format_check(const CheckReport& report, OutputFormat format);
std::string format_preclusions(const PreclusionReport& report, OutputFormat format);
std::string format_coevents(const PreclusiveFamily& family, OutputFormat format);

} // namespace qumea
