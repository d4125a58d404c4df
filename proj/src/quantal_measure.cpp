#include "qumea/quantal_measure.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "qumea/gf2.hpp"

namespace qumea {

namespace {

std::string format_complex(std::complex<double> z) {
    std::ostringstream os;
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

// Bilinear extension of the matrix to an event pair, iterating set bits.
std::complex<double> pair_sum(const Eigen::MatrixXcd& m, std::uint64_t a, std::uint64_t b) {
    std::complex<double> acc{0.0, 0.0};
    for (std::uint64_t i = a; i != 0; i &= i - 1) {
        const auto row = static_cast<Eigen::Index>(std::countr_zero(i));
        for (std::uint64_t j = b; j != 0; j &= j - 1) {
            acc += m(row, static_cast<Eigen::Index>(std::countr_zero(j)));
        }
    }
    return acc;
}

} // namespace

DecoherenceFunctional DecoherenceFunctional::from_matrix(SampleSpace space,
                                                         const Eigen::MatrixXcd& matrix,
                                                         double tol) {
    const auto n = static_cast<Eigen::Index>(space.size());
    if (matrix.rows() != n || matrix.cols() != n) {
        throw PreconditionError("matrix is " + std::to_string(matrix.rows()) + "x" +
                                std::to_string(matrix.cols()) + " but the space has " +
                                std::to_string(space.size()) + " histories");
    }
    if (!(tol >= 0.0)) {
        throw PreconditionError("tolerance must be nonnegative");
    }

    double scale = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        scale = std::max(scale, std::abs(matrix(i, i)));
    }
    const double tol_abs = tol * (scale > 0.0 ? scale : 1.0);

    double worst = 0.0;
    Eigen::Index worst_i = 0, worst_j = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double r = std::abs(matrix(i, j) - std::conj(matrix(j, i)));
            if (r > worst) {
                worst = r;
                worst_i = i;
                worst_j = j;
            }
        }
    }
    if (worst > tol_abs) {
        std::ostringstream os;
        os << "matrix is not Hermitian: entry (" << worst_i << "," << worst_j << ") = "
           << format_complex(matrix(worst_i, worst_j)) << " vs conj of (" << worst_j << ","
           << worst_i << ") = " << format_complex(std::conj(matrix(worst_j, worst_i)))
           << ", residual " << worst;
        throw AxiomViolationError(os.str());
    }

    Eigen::MatrixXcd sym = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    const double min_ev = solver.eigenvalues().minCoeff();
    if (min_ev < -tol_abs) {
        std::ostringstream os;
        os << "matrix is not strongly positive: minimum eigenvalue " << min_ev
           << " below -" << tol_abs;
        throw AxiomViolationError(os.str());
    }

    return DecoherenceFunctional(std::move(space), std::move(sym), tol, scale, worst, min_ev);
}

void DecoherenceFunctional::require_on_space(const Event& a) const {
    if (a.space() != space_) {
        throw SpaceMismatchError("event does not belong to the functional's sample space");
    }
}

std::complex<double> DecoherenceFunctional::decohere(const Event& a, const Event& b) const {
    require_on_space(a);
    require_on_space(b);
    return pair_sum(m_, a.members(), b.members());
}

double DecoherenceFunctional::measure(const Event& a) const {
    require_on_space(a);
    const std::complex<double> d = pair_sum(m_, a.members(), a.members());
    if (std::abs(d.imag()) > tol_abs()) {
        throw ConsistencyError("measure has imaginary residue " + std::to_string(d.imag()));
    }
    // PSD within tol bounds the sum below by -tol_abs per member
    const double floor = -tol_abs() * static_cast<double>(std::max<std::size_t>(a.cardinality(), 1));
    if (d.real() < floor) {
        throw ConsistencyError("measure " + std::to_string(d.real()) +
                               " is more negative than strong positivity allows");
    }
    return d.real();
}

double DecoherenceFunctional::interference_level1(const Event& a, const Event& b) const {
    if (!are_disjoint(a, b)) {
        throw PreconditionError("level-1 interference needs disjoint events");
    }
    require_on_space(a);
    return measure(set_union(a, b)) - measure(a) - measure(b);
}

double DecoherenceFunctional::interference_level2(const Event& a, const Event& b,
                                                  const Event& c) const {
    if (!are_disjoint(a, b) || !are_disjoint(b, c) || !are_disjoint(a, c)) {
        throw PreconditionError("level-2 interference needs pairwise disjoint events");
    }
    require_on_space(a);
    const Event ab = set_union(a, b);
    const Event bc = set_union(b, c);
    const Event ac = set_union(a, c);
    const Event abc = set_union(ab, c);
    return measure(abc) - measure(ab) - measure(bc) - measure(ac) +
           measure(a) + measure(b) + measure(c);
}

bool DecoherenceFunctional::is_classical(double tol) const {
    const double bound = tol * (scale_ > 0.0 ? scale_ : 1.0);
    const auto n = m_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i != j && std::abs(m_(i, j).real()) > bound) {
                return false;
            }
        }
    }
    return true;
}

std::pair<Eigen::MatrixXcd, bool>
DecoherenceFunctional::strong_positivity_matrix(std::span<const Event> collection) const {
    const auto k = static_cast<Eigen::Index>(collection.size());
    Eigen::MatrixXcd gram(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        require_on_space(collection[i]);
        for (Eigen::Index j = 0; j < k; ++j) {
            gram(i, j) = pair_sum(m_, collection[i].members(), collection[j].members());
        }
    }
    if (k == 0) {
        return {gram, true};
    }
    double gram_scale = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
        gram_scale = std::max(gram_scale, std::abs(gram(i, i)));
    }
    const double ref = std::max(gram_scale, scale_);
    const double bound = tol_ * (ref > 0.0 ? ref : 1.0);
    Eigen::MatrixXcd sym = 0.5 * (gram + gram.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    const bool psd = solver.eigenvalues().minCoeff() >= -bound;
    return {gram, psd};
}

PreclusionReport DecoherenceFunctional::precluded_events(double eps, std::size_t guard) const {
    if (!(eps >= 0.0)) {
        throw PreconditionError("preclusion threshold must be nonnegative");
    }
    const std::size_t n = space_.size();
    if (n > guard) {
        throw CapacityError("sample space of " + std::to_string(n) +
                            " histories exceeds the enumeration guard of " +
                            std::to_string(guard));
    }

    PreclusionReport report{space_, eps, {}, {}, 0};
    std::vector<gf2::Word> masks;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const std::complex<double> d = pair_sum(m_, mask, mask);
        if (d.real() <= eps) {
            report.zero_events.emplace_back(space_, mask);
            report.zero_measures.push_back(d.real());
            masks.push_back(mask);
        }
    }
    report.span_rank = gf2::rank(masks);
    return report;
}

} // namespace qumea
