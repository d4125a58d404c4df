#include "qumea/coevent.hpp"

#include <algorithm>
#include <bit>

#include "qumea/gf2.hpp"

namespace qumea {

namespace {

int parity(std::uint64_t mask) {
    return std::popcount(mask) & 1;
}

gf2::Rref reduce_zero_events(const PreclusionReport& report) {
    std::vector<gf2::Word> rows;
    rows.reserve(report.zero_events.size());
    for (const Event& e : report.zero_events) {
        rows.push_back(e.members());
    }
    return gf2::Rref(rows);
}

} // namespace

Coevent Coevent::atom(SampleSpace space, const std::string& label) {
    return Coevent(Event::singleton(std::move(space), label));
}

int Coevent::evaluate(const Event& a) const {
    require_same_space(support_, a);
    return parity(support_.members() & a.members());
}

bool leq_support(const Coevent& phi1, const Coevent& phi2) {
    return is_subset(phi1.support(), phi2.support());
}

bool leq_general(const Coevent& phi1, const Coevent& phi2, std::size_t guard) {
    require_same_space(phi1.support(), phi2.support());
    const std::size_t n = phi1.space().size();
    if (n > guard) {
        throw CapacityError("general order check on " + std::to_string(n) +
                            " histories exceeds the enumeration guard of " +
                            std::to_string(guard));
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::uint64_t s1 = phi1.support().members();
    const std::uint64_t s2 = phi2.support().members();
    for (std::uint64_t s = 0; s < count; ++s) {
        bool witness = true;
        for (std::uint64_t a = 0; a < count; ++a) {
            if (parity(s1 & a) != parity(s2 & (s & a))) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return true;
        }
    }
    return false;
}

bool is_preclusive(const Coevent& phi, const PreclusionReport& report) {
    if (phi.space() != report.space) {
        throw SpaceMismatchError("co-event does not belong to the report's sample space");
    }
    const std::uint64_t s = phi.support().members();
    for (const Event& z : report.zero_events) {
        if (parity(s & z.members()) != 0) {
            return false;
        }
    }
    return true;
}

std::vector<Coevent> preclusive_annihilator(const PreclusionReport& report) {
    const gf2::Rref rref = reduce_zero_events(report);
    std::vector<Coevent> basis;
    for (gf2::Word w : rref.annihilator_basis(report.space.size())) {
        basis.emplace_back(Event(report.space, w));
    }
    return basis;
}

PreclusiveFamily minimal_preclusive(const PreclusionReport& report, bool unital_only,
                                    std::size_t max_dimension) {
    const gf2::Rref rref = reduce_zero_events(report);
    const std::vector<gf2::Word> basis = rref.annihilator_basis(report.space.size());
    const std::size_t d = basis.size();
    if (d > max_dimension) {
        throw CapacityError("annihilator dimension " + std::to_string(d) +
                            " exceeds the guard of " + std::to_string(max_dimension));
    }

    // all nonzero annihilator elements, Gray-code walk over the basis
    std::vector<std::uint64_t> elements;
    elements.reserve((std::size_t{1} << d) - 1);
    std::uint64_t current = 0;
    for (std::uint64_t k = 1; k < (std::uint64_t{1} << d); ++k) {
        current ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
        if (current != 0) {
            elements.push_back(current);
        }
    }
    std::sort(elements.begin(), elements.end(), [](std::uint64_t a, std::uint64_t b) {
        const int ca = std::popcount(a), cb = std::popcount(b);
        return ca != cb ? ca < cb : a < b;
    });

    // ordered by support size, so every strict subset precedes its supersets
    std::vector<std::uint64_t> minimal;
    for (std::uint64_t v : elements) {
        bool dominated = false;
        for (std::uint64_t m : minimal) {
            if ((m & v) == m) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            minimal.push_back(v);
        }
    }

    PreclusiveFamily family;
    family.dimension = d;
    family.unital_only = unital_only;
    for (gf2::Word w : basis) {
        family.annihilator_basis.emplace_back(Event(report.space, w));
    }
    for (std::uint64_t v : minimal) {
        Coevent phi{Event(report.space, v)};
        if (phi.is_unital()) {
            family.minimal_unital.push_back(phi);
        }
        family.minimal.push_back(std::move(phi));
    }
    return family;
}

} // namespace qumea
