#include "qumea/report_io.hpp"

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qumea {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
    if (name == "json") {
        return OutputFormat::json;
    }
    if (name == "tsv") {
        return OutputFormat::tsv;
    }
    if (name == "text") {
        return OutputFormat::text;
    }
    throw SchemaError("output: expected json, tsv or text, got '" + name + "'");
}

CheckReport make_check_report(const DecoherenceFunctional& functional) {
    CheckReport report;
    report.histories = functional.space().size();
    report.hermiticity_residual = functional.hermiticity_residual();
    report.min_eigenvalue = functional.min_eigenvalue();
    report.classical = functional.is_classical();
    report.mu_total = functional.measure(Event::all(functional.space()));
    report.scale = functional.scale();
    report.tol = functional.tol();
    return report;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string event_to_text(const Event& event) {
    std::string out = "{";
    bool first = true;
    for (const auto& label : event.member_labels()) {
        if (!first) {
            out += ", ";
        }
        out += label;
        first = false;
    }
    out += "}";
    return out;
}

std::string coevent_to_text(const Coevent& phi) {
    if (phi.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& label : phi.support().member_labels()) {
        if (!first) {
            out += " + ";
        }
        out += label + "*";
        first = false;
    }
    return out;
}

namespace {

json coevent_to_json(const Coevent& phi) {
    return json{{"support", phi.support().member_labels()},
                {"unital", phi.is_unital()},
                {"multiplicative", phi.is_multiplicative()}};
}

} // namespace

std::string format_check(const CheckReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: {
        json doc{{"histories", report.histories},
                 {"hermiticity_residual", report.hermiticity_residual},
                 {"min_eigenvalue", report.min_eigenvalue},
                 {"classical", report.classical},
                 {"mu_omega", report.mu_total},
                 {"scale", report.scale},
                 {"tol", report.tol}};
        return doc.dump(2) + "\n";
    }
    case OutputFormat::tsv: {
        std::ostringstream os;
        os << "histories\t" << report.histories << "\n"
           << "hermiticity_residual\t" << format_double(report.hermiticity_residual) << "\n"
           << "min_eigenvalue\t" << format_double(report.min_eigenvalue) << "\n"
           << "classical\t" << (report.classical ? "true" : "false") << "\n"
           << "mu_omega\t" << format_double(report.mu_total) << "\n"
           << "scale\t" << format_double(report.scale) << "\n"
           << "tol\t" << format_double(report.tol) << "\n";
        return os.str();
    }
    case OutputFormat::text:
    default: {
        std::ostringstream os;
        os << "histories: " << report.histories << "\n"
           << "hermiticity residual: " << format_double(report.hermiticity_residual) << "\n"
           << "min eigenvalue: " << format_double(report.min_eigenvalue) << "\n"
           << "classical: " << (report.classical ? "yes" : "no") << "\n"
           << "mu(Omega): " << format_double(report.mu_total) << "\n";
        return os.str();
    }
    }
}

std::string format_preclusions(const PreclusionReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::json: {
        json events = json::array();
        for (std::size_t i = 0; i < report.zero_events.size(); ++i) {
            events.push_back(json{{"event", report.zero_events[i].member_labels()},
                                  {"measure", report.zero_measures[i]}});
        }
        json doc{{"eps", report.eps},
                 {"span_rank", report.span_rank},
                 {"zero_events", std::move(events)}};
        return doc.dump(2) + "\n";
    }
    case OutputFormat::tsv: {
        std::ostringstream os;
        os << "# eps\t" << format_double(report.eps) << "\n"
           << "# span_rank\t" << report.span_rank << "\n";
        for (std::size_t i = 0; i < report.zero_events.size(); ++i) {
            os << event_to_text(report.zero_events[i]) << "\t"
               << format_double(report.zero_measures[i]) << "\n";
        }
        return os.str();
    }
    case OutputFormat::text:
    default: {
        std::ostringstream os;
        os << "eps: " << format_double(report.eps) << "\n"
           << "zero events: " << report.zero_events.size() << " (GF(2) span rank "
           << report.span_rank << ")\n";
        for (std::size_t i = 0; i < report.zero_events.size(); ++i) {
            os << "  " << event_to_text(report.zero_events[i])
               << "  mu=" << format_double(report.zero_measures[i]) << "\n";
        }
        return os.str();
    }
    }
}

std::string format_coevents(const PreclusiveFamily& family, OutputFormat format) {
    const auto& coevents = family.reported();
    switch (format) {
    case OutputFormat::json: {
        json list = json::array();
        for (const auto& phi : coevents) {
            list.push_back(coevent_to_json(phi));
        }
        json doc{{"dimension", family.dimension},
                 {"count_minimal", family.minimal.size()},
                 {"count_minimal_unital", family.minimal_unital.size()},
                 {"unital_only", family.unital_only},
                 {"coevents", std::move(list)}};
        return doc.dump(2) + "\n";
    }
    case OutputFormat::tsv: {
        std::ostringstream os;
        os << "# dimension\t" << family.dimension << "\n"
           << "# count_minimal\t" << family.minimal.size() << "\n"
           << "# count_minimal_unital\t" << family.minimal_unital.size() << "\n";
        for (const auto& phi : coevents) {
            os << coevent_to_text(phi) << "\t" << phi.support().cardinality() << "\t"
               << (phi.is_unital() ? "true" : "false") << "\t"
               << (phi.is_multiplicative() ? "true" : "false") << "\n";
        }
        return os.str();
    }
    case OutputFormat::text:
    default: {
        std::ostringstream os;
        os << "annihilator dimension: " << family.dimension << "\n"
           << "minimal preclusive co-events: " << family.minimal.size() << " ("
           << family.minimal_unital.size() << " unital)\n";
        if (family.unital_only) {
            os << "showing unital only: " << coevents.size() << "\n";
        }
        for (const auto& phi : coevents) {
            os << "  " << coevent_to_text(phi);
            os << (phi.is_unital() ? "  (unital" : "  (non-unital");
            if (phi.is_multiplicative()) {
                os << ", multiplicative";
            }
            os << ")\n";
        }
        return os.str();
    }
    }
}

} // namespace qumea
