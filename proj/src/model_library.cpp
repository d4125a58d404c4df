#include "qumea/model_library.hpp"

#include <cmath>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace qumea {

using nlohmann::json;

namespace {

void validate_sizes(const ModelSpec& spec) {
    const std::size_t n = spec.histories.size();
    if (n == 0) {
        throw SchemaError("histories: must not be empty");
    }
    if (spec.amplitudes.size() != n) {
        throw SchemaError("amplitudes: expected " + std::to_string(n) + " entries, got " +
                          std::to_string(spec.amplitudes.size()));
    }
    if (spec.final_class.size() != n) {
        throw SchemaError("final_class: expected " + std::to_string(n) + " entries, got " +
                          std::to_string(spec.final_class.size()));
    }
    if (!spec.initial_class.empty() && spec.initial_class.size() != n) {
        throw SchemaError("initial_class: expected " + std::to_string(n) + " entries, got " +
                          std::to_string(spec.initial_class.size()));
    }
    if (!(spec.tol >= 0.0)) {
        throw SchemaError("tol: must be nonnegative");
    }
}

// Hermiticity + positive semidefiniteness of the initial density matrix.
void validate_rho(const ModelSpec& spec) {
    if (!spec.rho.has_value()) {
        return;
    }
    const Eigen::MatrixXcd& rho = *spec.rho;
    const auto classes = initial_class_labels(spec);
    const auto k = static_cast<Eigen::Index>(classes.size());
    if (rho.rows() != k || rho.cols() != k) {
        throw SchemaError("rho: is " + std::to_string(rho.rows()) + "x" +
                          std::to_string(rho.cols()) + " but the model has " +
                          std::to_string(classes.size()) + " initial classes");
    }
    double scale = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        scale = std::max(scale, std::abs(rho(i, i)));
    }
    const double bound = spec.tol * (scale > 0.0 ? scale : 1.0);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = i; j < k; ++j) {
            const double r = std::abs(rho(i, j) - std::conj(rho(j, i)));
            if (r > bound) {
                std::ostringstream os;
                os << "rho: not Hermitian at entry (" << i << "," << j << "), residual " << r;
                throw AxiomViolationError(os.str());
            }
        }
    }
    Eigen::MatrixXcd sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    const double min_ev = solver.eigenvalues().minCoeff();
    if (min_ev < -bound) {
        throw AxiomViolationError("rho: not positive semidefinite, minimum eigenvalue " +
                                  std::to_string(min_ev));
    }
}

std::string slit_label(std::size_t i) {
    if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
    }
    return "h" + std::to_string(i + 1);
}

} // namespace

std::vector<std::string> initial_class_labels(const ModelSpec& spec) {
    if (spec.initial_class.empty()) {
        return {""};
    }
    std::vector<std::string> out;
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& c : spec.initial_class) {
        if (seen.emplace(c, out.size()).second) {
            out.push_back(c);
        }
    }
    return out;
}

DecoherenceFunctional build_decoherence(const ModelSpec& spec, std::optional<double> tol) {
    validate_sizes(spec);
    validate_rho(spec);
    SampleSpace space(spec.histories);
    const auto n = static_cast<Eigen::Index>(spec.histories.size());

    Eigen::MatrixXcd rho_sym;
    std::vector<std::size_t> init_index(spec.histories.size(), 0);
    if (spec.rho.has_value()) {
        rho_sym = 0.5 * (*spec.rho + spec.rho->adjoint());
        const auto classes = initial_class_labels(spec);
        std::unordered_map<std::string, std::size_t> lookup;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            lookup.emplace(classes[i], i);
        }
        for (std::size_t g = 0; g < spec.histories.size(); ++g) {
            init_index[g] = lookup.at(spec.initial_class.empty() ? "" : spec.initial_class[g]);
        }
    }

    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto gi = static_cast<std::size_t>(i);
            const auto gj = static_cast<std::size_t>(j);
            if (spec.final_class[gi] != spec.final_class[gj]) {
                m(i, j) = 0.0;
                continue;
            }
            std::complex<double> v = spec.amplitudes[gi] * std::conj(spec.amplitudes[gj]);
            if (spec.rho.has_value()) {
                v *= rho_sym(static_cast<Eigen::Index>(init_index[gi]),
                             static_cast<Eigen::Index>(init_index[gj]));
            }
            m(i, j) = v;
        }
    }
    return DecoherenceFunctional::from_matrix(std::move(space), m, tol.value_or(spec.tol));
}

ModelSpec three_slit() {
    ModelSpec spec;
    spec.histories = {"a", "b", "c"};
    spec.amplitudes = {{1.0, 0.0}, {-1.0, 0.0}, {1.0, 0.0}};
    spec.final_class = {"p", "p", "p"};
    return spec;
}

ModelSpec n_slit(std::span<const std::complex<double>> amplitudes) {
    if (amplitudes.empty()) {
        throw PreconditionError("n_slit needs at least one amplitude");
    }
    ModelSpec spec;
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        spec.histories.push_back(slit_label(i));
        spec.final_class.emplace_back("p");
    }
    spec.amplitudes.assign(amplitudes.begin(), amplitudes.end());
    return spec;
}

ModelSpec hardy() {
    const double source = 1.0 / std::sqrt(3.0);
    const double t_pp = 1.0 / std::sqrt(2.0);
    const double t_pm = t_pp;
    const double t_mp = -5.0 / (3.0 * std::sqrt(2.0));
    const double t_mm = -t_pp;
    const auto transfer = [&](char z, char x) {
        if (z == '+') {
            return x == '+' ? t_pp : t_pm;
        }
        return x == '+' ? t_mp : t_mm;
    };

    ModelSpec spec;
    for (int code = 0; code < 16; ++code) {
        // lexicographic with + before -: read the 4 bits MSB-first as zL zR xL xR
        const char z_l = (code & 8) ? '-' : '+';
        const char z_r = (code & 4) ? '-' : '+';
        const char x_l = (code & 2) ? '-' : '+';
        const char x_r = (code & 1) ? '-' : '+';
        spec.histories.push_back(std::string("[") + z_l + z_r + x_l + x_r + "]");
        const double s = (z_l == '-' && z_r == '-') ? 0.0 : source;
        spec.amplitudes.emplace_back(s * transfer(z_l, x_l) * transfer(z_r, x_r), 0.0);
        spec.final_class.push_back(std::string{x_l, x_r});
    }
    return spec;
}

ModelSpec classical(std::span<const double> probabilities) {
    if (probabilities.empty()) {
        throw PreconditionError("classical model needs at least one probability");
    }
    ModelSpec spec;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (!(probabilities[i] >= 0.0)) {
            throw PreconditionError("probability " + std::to_string(i) + " is negative");
        }
        spec.histories.push_back(slit_label(i));
        spec.final_class.push_back(spec.histories.back());
        spec.amplitudes.emplace_back(std::sqrt(probabilities[i]), 0.0);
    }
    return spec;
}

namespace {

std::complex<double> parse_complex(const json& node, const std::string& path) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
        throw SchemaError(path + ": expected a [re, im] number pair");
    }
    return {node[0].get<double>(), node[1].get<double>()};
}

std::vector<std::string> parse_string_array(const json& node, const std::string& path) {
    if (!node.is_array()) {
        throw SchemaError(path + ": expected an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_string()) {
            throw SchemaError(path + "[" + std::to_string(i) + "]: expected a string");
        }
        out.push_back(node[i].get<std::string>());
    }
    return out;
}

} // namespace

ModelSpec parse_model(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw SchemaError("root: expected an object");
    }
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "histories" && key != "amplitudes" && key != "initial_class" &&
            key != "final_class" && key != "rho" && key != "tol") {
            throw SchemaError(key + ": unknown field");
        }
    }
    if (!doc.contains("histories")) {
        throw SchemaError("histories: missing required field");
    }
    if (!doc.contains("amplitudes")) {
        throw SchemaError("amplitudes: missing required field");
    }
    if (!doc.contains("final_class")) {
        throw SchemaError("final_class: missing required field");
    }

    ModelSpec spec;
    spec.histories = parse_string_array(doc["histories"], "histories");
    {
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t i = 0; i < spec.histories.size(); ++i) {
            if (!seen.emplace(spec.histories[i], i).second) {
                throw SchemaError("histories[" + std::to_string(i) + "]: duplicate label '" +
                                  spec.histories[i] + "'");
            }
        }
    }

    const json& amps = doc["amplitudes"];
    if (!amps.is_array()) {
        throw SchemaError("amplitudes: expected an array");
    }
    for (std::size_t i = 0; i < amps.size(); ++i) {
        spec.amplitudes.push_back(parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]"));
    }

    spec.final_class = parse_string_array(doc["final_class"], "final_class");
    if (doc.contains("initial_class")) {
        spec.initial_class = parse_string_array(doc["initial_class"], "initial_class");
    }

    if (doc.contains("tol")) {
        if (!doc["tol"].is_number()) {
            throw SchemaError("tol: expected a number");
        }
        spec.tol = doc["tol"].get<double>();
    }

    if (doc.contains("rho")) {
        const json& rho = doc["rho"];
        if (!rho.is_array() || rho.empty()) {
            throw SchemaError("rho: expected a nonempty array of rows");
        }
        const auto k = static_cast<Eigen::Index>(rho.size());
        Eigen::MatrixXcd matrix(k, k);
        for (Eigen::Index i = 0; i < k; ++i) {
            const json& row = rho[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) {
                throw SchemaError("rho[" + std::to_string(i) + "]: expected a row of " +
                                  std::to_string(k) + " complex entries");
            }
            for (Eigen::Index j = 0; j < k; ++j) {
                matrix(i, j) = parse_complex(row[static_cast<std::size_t>(j)],
                                             "rho[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "]");
            }
        }
        spec.rho = std::move(matrix);
    }

    validate_sizes(spec);
    validate_rho(spec);
    return spec;
}

std::string to_json(const ModelSpec& spec) {
    json doc;
    doc["histories"] = spec.histories;
    json amps = json::array();
    for (const auto& a : spec.amplitudes) {
        amps.push_back({a.real(), a.imag()});
    }
    doc["amplitudes"] = std::move(amps);
    if (!spec.initial_class.empty()) {
        doc["initial_class"] = spec.initial_class;
    }
    doc["final_class"] = spec.final_class;
    if (spec.rho.has_value()) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < spec.rho->rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < spec.rho->cols(); ++j) {
                const auto v = (*spec.rho)(i, j);
                row.push_back({v.real(), v.imag()});
            }
            rows.push_back(std::move(row));
        }
        doc["rho"] = std::move(rows);
    }
    if (spec.tol != default_tol) {
        doc["tol"] = spec.tol;
    }
    return doc.dump(2);
}

namespace {

std::vector<double> parse_double_list(const std::string& text, const std::string& what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception&) {
            throw SchemaError(what + ": cannot parse '" + item + "' as a number");
        }
    }
    if (out.empty()) {
        throw SchemaError(what + ": expected a comma-separated list of numbers");
    }
    return out;
}

} // namespace

std::optional<ModelSpec> builtin_model(const std::string& name) {
    if (name == "three-slit") {
        return three_slit();
    }
    if (name == "hardy") {
        return hardy();
    }
    if (name.rfind("classical:", 0) == 0) {
        const auto ps = parse_double_list(name.substr(10), "classical probabilities");
        for (double p : ps) {
            if (!(p >= 0.0)) {
                throw SchemaError("classical probabilities: entries must be nonnegative");
            }
        }
        return classical(ps);
    }
    if (name.rfind("n-slit:", 0) == 0) {
        std::vector<std::complex<double>> amps;
        std::stringstream ss(name.substr(7));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto sep = item.find(':');
            if (sep == std::string::npos) {
                throw SchemaError("n-slit amplitudes: expected re:im, got '" + item + "'");
            }
            const auto parse_part = [&](const std::string& s) {
                try {
                    std::size_t used = 0;
                    const double v = std::stod(s, &used);
                    if (used != s.size()) {
                        throw std::invalid_argument(s);
                    }
                    return v;
                } catch (const std::exception&) {
                    throw SchemaError("n-slit amplitudes: cannot parse '" + s + "' as a number");
                }
            };
            amps.emplace_back(parse_part(item.substr(0, sep)), parse_part(item.substr(sep + 1)));
        }
        if (amps.empty()) {
            throw SchemaError("n-slit amplitudes: expected a comma-separated list");
        }
        return n_slit(amps);
    }
    return std::nullopt;
}

} // namespace qumea
