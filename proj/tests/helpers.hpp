#pragma once

// Test-only helpers: an amplitude-sum oracle for the quantal measure that
// never touches the pair-matrix code path, plus deterministic random
// generators for property tests.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qumea/event_algebra.hpp"
#include "qumea/model_library.hpp"

namespace qumea::testing {

/**
 * mu(A) computed straight from the model data: group the member histories'
 * amplitudes by (final class, initial class), then per final class sum
 * w_p rho[p,q] conj(w_q) over initial classes (rho factor 1 when absent).
 */
inline double measure_oracle(const ModelSpec& spec, std::uint64_t members) {
    std::map<std::string, std::map<std::string, std::complex<double>>> groups;
    for (std::size_t i = 0; i < spec.histories.size(); ++i) {
        if (!((members >> i) & 1u)) {
            continue;
        }
        const std::string init = spec.initial_class.empty() ? "" : spec.initial_class[i];
        groups[spec.final_class[i]][init] += spec.amplitudes[i];
    }

    std::map<std::string, std::size_t> rho_index;
    if (spec.rho.has_value()) {
        const auto classes = initial_class_labels(spec);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            rho_index[classes[k]] = k;
        }
    }

    double total = 0.0;
    for (const auto& [final_label, by_init] : groups) {
        (void)final_label;
        if (!spec.rho.has_value()) {
            std::complex<double> sum{0.0, 0.0};
            for (const auto& [init, amp] : by_init) {
                (void)init;
                sum += amp;
            }
            total += std::norm(sum);
        } else {
            std::complex<double> acc{0.0, 0.0};
            for (const auto& [p, wp] : by_init) {
                for (const auto& [q, wq] : by_init) {
                    acc += wp * std::conj(wq) *
                           (*spec.rho)(static_cast<Eigen::Index>(rho_index.at(p)),
                                       static_cast<Eigen::Index>(rho_index.at(q)));
                }
            }
            total += acc.real();
        }
    }
    return total;
}

/// Strongly positive random functional matrix, built as F^dagger F.
inline Eigen::MatrixXcd random_psd_matrix(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    const auto ni = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd f(ni, ni);
    for (Eigen::Index i = 0; i < ni; ++i) {
        for (Eigen::Index j = 0; j < ni; ++j) {
            f(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        }
    }
    return f.adjoint() * f;
}

inline SampleSpace numbered_space(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("g" + std::to_string(i + 1));
    }
    return SampleSpace(std::move(labels));
}

inline Event random_event(const SampleSpace& space, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(
        0, (std::uint64_t{1} << space.size()) - 1);
    return Event(space, dist(rng));
}

/// Assigns every history to one of A, B, C or none, uniformly.
inline std::array<Event, 3> random_disjoint_triple(const SampleSpace& space,
                                                   std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    std::array<std::uint64_t, 3> masks{0, 0, 0};
    for (std::size_t i = 0; i < space.size(); ++i) {
        const int slot = pick(rng);
        if (slot < 3) {
            masks[static_cast<std::size_t>(slot)] |= std::uint64_t{1} << i;
        }
    }
    return {Event(space, masks[0]), Event(space, masks[1]), Event(space, masks[2])};
}

} // namespace qumea::testing
