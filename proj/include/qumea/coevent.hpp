#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qumea/event_algebra.hpp"
#include "qumea/quantal_measure.hpp"

namespace qumea {

/**
 * GF(2)-linear truth functional phi on the event algebra, identified with
 * its support subset of the sample space: phi(A) = parity of |support n A|.
 * Linearity phi(A+B) = phi(A)+phi(B) holds identically in this
 * representation. Immutable value.
 */
class Coevent {
public:
    explicit Coevent(Event support) : support_(std::move(support)) {}

    static Coevent zero(SampleSpace space) { return Coevent(Event::empty(std::move(space))); }

    /// The dual-basis co-event gamma* of a single history; unital and
    /// multiplicative.
    static Coevent atom(SampleSpace space, const std::string& label);

    const Event& support() const { return support_; }
    const SampleSpace& space() const { return support_.space(); }

    /// phi(A) in {0,1}: parity of the overlap with the support.
    int evaluate(const Event& a) const;

    bool is_zero() const { return support_.is_empty(); }

    /// phi(1) = 1, i.e. odd support cardinality.
    bool is_unital() const { return support_.cardinality() % 2 == 1; }

    /// phi(AB) = phi(A)phi(B) for all A, B. A nonzero linear phi is
    /// multiplicative iff its support is a single history; the zero co-event
    /// is trivially multiplicative.
    bool is_multiplicative() const { return support_.cardinality() <= 1; }

    friend bool operator==(const Coevent& a, const Coevent& b) {
        return a.support_ == b.support_;
    }
    friend bool operator!=(const Coevent& a, const Coevent& b) { return !(a == b); }

    /// Sum of co-events: symmetric difference of supports.
    friend Coevent operator+(const Coevent& a, const Coevent& b) {
        return Coevent(add(a.support_, b.support_));
    }

private:
    Event support_;
};

/// Support order: support(phi1) is a subset of support(phi2).
bool leq_support(const Coevent& phi1, const Coevent& phi2);

/**
 * Measure-free order: there exists an event S with
 * phi1(A) = phi2(S*A) for every event A. Implemented as the literal double
 * brute force over S and A (exponential; meant for small spaces), so it can
 * serve as an independent check of the support order.
 */
bool leq_general(const Coevent& phi1, const Coevent& phi2,
                 std::size_t guard = default_enumeration_guard);

/// True iff phi evaluates to 0 on every listed zero event (exhaustive path).
bool is_preclusive(const Coevent& phi, const PreclusionReport& report);

/**
 * Deterministic GF(2) basis of the annihilator of the zero events' span:
 * exactly the preclusive co-events. Dimension is n - span_rank.
 */
std::vector<Coevent> preclusive_annihilator(const PreclusionReport& report);

/// Default cap on the annihilator dimension for the 2^d minimality scan.
inline constexpr std::size_t default_annihilator_guard = 20;

/**
 * The preclusive co-events of a preclusion report: annihilator basis, the
 * support-minimal nonzero elements (an antichain, in canonical
 * (cardinality, indicator) order), and their unital subset.
 */
struct PreclusiveFamily {
    std::vector<Coevent> annihilator_basis;
    std::size_t dimension = 0;
    std::vector<Coevent> minimal;
    std::vector<Coevent> minimal_unital;
    bool unital_only = false;

    /// The list selected by unital_only; empty when no potential reality exists.
    const std::vector<Coevent>& reported() const {
        return unital_only ? minimal_unital : minimal;
    }
};

/**
 * Enumerates the whole annihilator (2^dimension elements) and keeps the
 * support-minimal nonzero co-events; unitality is applied as a post-filter
 * only. Throws CapacityError when the dimension exceeds max_dimension.
 */
PreclusiveFamily minimal_preclusive(const PreclusionReport& report,
                                    bool unital_only = false,
                                    std::size_t max_dimension = default_annihilator_guard);

} // namespace qumea
