#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qumea/event_algebra.hpp"

namespace qumea {

/// Relative numerical tolerance used when none is given.
inline constexpr double default_tol = 1e-12;

/// Relative factor for the default preclusion threshold, eps = 1e-9 * scale.
inline constexpr double default_eps_rel = 1e-9;

/// Exhaustive list of events of measure <= eps, in canonical order, together
/// with the GF(2) rank of their indicator vectors. The empty event is always
/// present, so `zero_events` is never empty.
struct PreclusionReport {
    SampleSpace space;
    double eps = 0.0;
    std::vector<Event> zero_events;
    std::vector<double> zero_measures;  // parallel to zero_events
    std::size_t span_rank = 0;
};

/**
 * Decoherence functional on a finite sample space: a Hermitian, strongly
 * positive matrix M with M[g,h] = D({g},{h}), extended to event pairs by
 * bilinearity. The quantal measure is mu(A) = D(A,A).
 *
 * Validation happens once at construction; the stored matrix is the
 * Hermitian average (M + M^dagger)/2 of the input, which differs from it by
 * at most the accepted residual. Immutable after construction.
 */
class DecoherenceFunctional {
public:
    /**
     * Validates hermiticity and positive semidefiniteness of `matrix` within
     * tol * scale (scale = largest diagonal modulus, absolute when zero) and
     * wraps it. Throws AxiomViolationError naming the worst entry or the
     * offending eigenvalue.
     */
    static DecoherenceFunctional from_matrix(SampleSpace space,
                                             const Eigen::MatrixXcd& matrix,
                                             double tol = default_tol);

    const SampleSpace& space() const { return space_; }
    const Eigen::MatrixXcd& matrix() const { return m_; }
    double tol() const { return tol_; }

    /// Largest diagonal modulus; the reference magnitude for tolerances.
    double scale() const { return scale_; }
    /// tol * scale, or plain tol when the scale vanishes.
    double tol_abs() const { return tol_ * (scale_ > 0.0 ? scale_ : 1.0); }
    /// Default absolute preclusion threshold, 1e-9 * scale.
    double default_eps() const { return default_eps_rel * (scale_ > 0.0 ? scale_ : 1.0); }

    /// Validation diagnostics.
    double hermiticity_residual() const { return herm_residual_; }
    double min_eigenvalue() const { return min_eigenvalue_; }

    /// D(A,B) = sum over pairs (g in A, h in B) of M[g,h].
    std::complex<double> decohere(const Event& a, const Event& b) const;

    /// mu(A) = D(A,A); throws ConsistencyError if the imaginary residue or a
    /// negative value exceeds what the validated axioms allow.
    double measure(const Event& a) const;

    /// Level-1 interference mu(AuB) - mu(A) - mu(B) for disjoint A, B.
    double interference_level1(const Event& a, const Event& b) const;

    /// Level-2 interference of pairwise disjoint A, B, C; identically zero
    /// for any valid functional.
    double interference_level2(const Event& a, const Event& b, const Event& c) const;

    /// True iff all level-1 interference vanishes, i.e. |Re M[g,h]| <= tol
    /// scale off the diagonal.
    bool is_classical() const { return is_classical(tol_); }
    bool is_classical(double tol) const;

    /// Gram matrix D(A_i, A_j) over the collection plus its PSD verdict.
    std::pair<Eigen::MatrixXcd, bool>
    strong_positivity_matrix(std::span<const Event> collection) const;

    /**
     * Exhaustive scan of all 2^n events for mu(A) <= eps. eps must be
     * nonnegative; pass default_eps() for the standard threshold. Throws
     * CapacityError when the space exceeds the guard.
     */
    PreclusionReport precluded_events(double eps,
                                      std::size_t guard = default_enumeration_guard) const;

private:
    DecoherenceFunctional(SampleSpace space, Eigen::MatrixXcd m, double tol,
                          double scale, double herm_residual, double min_eigenvalue)
        : space_(std::move(space)), m_(std::move(m)), tol_(tol), scale_(scale),
          herm_residual_(herm_residual), min_eigenvalue_(min_eigenvalue) {}

    void require_on_space(const Event& a) const;

    SampleSpace space_;
    Eigen::MatrixXcd m_;
    double tol_;
    double scale_;
    double herm_residual_;
    double min_eigenvalue_;
};

} // namespace qumea
