#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qumea/quantal_measure.hpp"

namespace qumea {

/**
 * Physical model data from which a decoherence functional is built:
 * one complex amplitude per history, a final class per history (histories in
 * different final classes never interfere), and optionally an initial class
 * per history with an initial density matrix over the initial-class labels.
 *
 * An empty initial_class means all histories share one initial class. When
 * rho is present it is indexed by the distinct initial-class labels in order
 * of first appearance.
 */
struct ModelSpec {
    std::vector<std::string> histories;
    std::vector<std::complex<double>> amplitudes;
    std::vector<std::string> initial_class;  // empty = all histories share one class
    std::vector<std::string> final_class;
    std::optional<Eigen::MatrixXcd> rho;
    double tol = default_tol;
};

/// Distinct initial-class labels in order of first appearance (the rho index).
std::vector<std::string> initial_class_labels(const ModelSpec& spec);

/**
 * M[g,h] = amp(g) conj(amp(h)) [final(g) = final(h)] rho(init(g), init(h)),
 * with the rho factor 1 when rho is omitted. The result is Hermitian by
 * construction and positive semidefinite whenever rho is, and is passed
 * through the standard axiom validation.
 */
DecoherenceFunctional build_decoherence(const ModelSpec& spec,
                                        std::optional<double> tol = std::nullopt);

/// Three slits a, b, c arriving at one point, amplitudes (1, -1, 1): the
/// pairwise sums (a,b) and (b,c) cancel while the total does not.
ModelSpec three_slit();

/// One history per slit, one shared final class, the given amplitudes.
ModelSpec n_slit(std::span<const std::complex<double>> amplitudes);

/**
 * Hardy-pair model: two entangled spin-half atoms, each passing a z-analyzer,
 * a recombiner and a second analyzer. Histories [zL zR xL xR] over all sign
 * choices, ordered lexicographically with + before -; the source emits the
 * z-pairs (++), (+-), (-+) with equal amplitude and (--) with none; the final
 * class is the pair (xL, xR).
 *
 * Analyzer coefficients: t(+>+) = t(+>-) = 1/sqrt2, t(->-) = -1/sqrt2,
 * t(->+) = -5/(3 sqrt2). The last coefficient is tuned so that the
 * measure-zero events are exactly the sixteen-history model's known list
 * ([--xy], [++x-]+[+-x-], [++-x]+[-+-x]) and nothing else; symmetric 50/50
 * analyzers would add accidental cancellations such as [+-+-]+[-++-].
 * The normalization gives mu(Omega) = 1.
 */
ModelSpec hardy();

/// One history per entry in its own final class, amplitude sqrt(p):
/// a diagonal, classical functional.
ModelSpec classical(std::span<const double> probabilities);

/**
 * Parses the JSON model document:
 *   { "histories": ["label", ...],
 *     "amplitudes": [[re, im], ...],
 *     "initial_class": ["label", ...],          (optional)
 *     "final_class": ["label", ...],
 *     "rho": [[[re, im], ...], ...],            (optional)
 *     "tol": number }                           (optional)
 * Throws SchemaError with a path to the offending field; a rho that is not
 * Hermitian positive semidefinite is rejected here as an axiom violation.
 */
ModelSpec parse_model(const std::string& json_text);

/// Inverse of parse_model, for fixtures and round-trips.
std::string to_json(const ModelSpec& spec);

/**
 * Resolves a built-in model name: "three-slit", "hardy",
 * "classical:p1,p2,...", "n-slit:re:im,re:im,...". Returns nullopt for
 * anything else (callers then treat the string as a file path).
 */
std::optional<ModelSpec> builtin_model(const std::string& name);

} // namespace qumea
