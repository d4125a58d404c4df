#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qumea/coevent.hpp"
#include "qumea/model_library.hpp"

using namespace qumea;
using qumea::testing::numbered_space;
using qumea::testing::random_psd_matrix;

namespace {

SampleSpace abc() {
    return SampleSpace({"a", "b", "c"});
}

// independent oracle: check multiplicativity over every event pair
bool multiplicative_brute_force(const Coevent& phi) {
    const auto events = enumerate_events(phi.space());
    for (const Event& a : events) {
        for (const Event& b : events) {
            if (phi.evaluate(mul(a, b)) != phi.evaluate(a) * phi.evaluate(b)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("atom co-events answer membership") {
    const SampleSpace s = abc();
    const Coevent atom_a = Coevent::atom(s, "a");
    CHECK(atom_a.support() == Event::singleton(s, "a"));
    for (const Event& e : enumerate_events(s)) {
        CHECK(atom_a.evaluate(e) == (e.contains("a") ? 1 : 0));
    }
    CHECK(atom_a.evaluate(Event::of(s, {"b", "c"})) == 0);
    CHECK_THROWS_AS(Coevent::atom(s, "z"), PreconditionError);
    CHECK_THROWS_AS(atom_a.evaluate(Event::empty(numbered_space(2))), SpaceMismatchError);
}

TEST_CASE("the three-slit co-event resolves the antinomy") {
    const SampleSpace s = abc();
    const Coevent phi = Coevent::atom(s, "a") + Coevent::atom(s, "b") + Coevent::atom(s, "c");
    const Event ab = Event::of(s, {"a", "b"});
    const Event bc = Event::of(s, {"b", "c"});
    const Event ac = Event::of(s, {"a", "c"});
    CHECK(phi.evaluate(ab) == 0);
    CHECK(phi.evaluate(bc) == 0);
    CHECK(phi.evaluate(ac) == 0); // phi(A+C) = phi(A+B) + phi(B+C) = 0
    CHECK(phi.evaluate(Event::all(s)) == 1);
    CHECK(phi.evaluate(Event::singleton(s, "a")) == 1);
    CHECK(phi.evaluate(Event::singleton(s, "b")) == 1);
    CHECK(phi.evaluate(Event::singleton(s, "c")) == 1);
    CHECK(phi.evaluate(Event::empty(s)) == 0);
}

TEST_CASE("evaluation is linear and respects negation for unital co-events") {
    const SampleSpace s = numbered_space(4);
    std::mt19937_64 rng(201);
    std::uniform_int_distribution<std::uint64_t> dist(0, 15);
    for (int trial = 0; trial < 300; ++trial) {
        const Coevent phi{Event(s, dist(rng))};
        const Event a(s, dist(rng));
        const Event b(s, dist(rng));
        CHECK(phi.evaluate(a + b) == (phi.evaluate(a) ^ phi.evaluate(b)));
        if (phi.is_unital()) {
            CHECK(phi.evaluate(complement(a)) == 1 - phi.evaluate(a));
        } else {
            CHECK(phi.evaluate(complement(a)) == phi.evaluate(a));
        }
    }
}

TEST_CASE("unitality is odd support cardinality") {
    const SampleSpace s = abc();
    CHECK(Coevent::atom(s, "a").is_unital());
    CHECK_FALSE(Coevent::zero(s).is_unital());
    const Coevent pair = Coevent::atom(s, "a") + Coevent::atom(s, "b");
    CHECK_FALSE(pair.is_unital());
    CHECK(pair.evaluate(Event::all(s)) == 0);
}

TEST_CASE("multiplicativity shortcut matches brute force") {
    const SampleSpace s = abc();
    CHECK(Coevent::atom(s, "a").is_multiplicative());
    const Coevent pair = Coevent::atom(s, "a") + Coevent::atom(s, "b");
    CHECK_FALSE(pair.is_multiplicative());
    // phi({a} {b}) = phi(0) = 0 but phi({a}) phi({b}) = 1
    CHECK(pair.evaluate(mul(Event::singleton(s, "a"), Event::singleton(s, "b"))) == 0);
    CHECK(pair.evaluate(Event::singleton(s, "a")) * pair.evaluate(Event::singleton(s, "b")) == 1);

    const Coevent triple = pair + Coevent::atom(s, "c");
    CHECK_FALSE(triple.is_multiplicative());

    for (std::size_t n = 1; n <= 4; ++n) {
        const SampleSpace sp = numbered_space(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const Coevent phi{Event(sp, mask)};
            CHECK(phi.is_multiplicative() == multiplicative_brute_force(phi));
        }
    }
}

TEST_CASE("preclusivity against a report") {
    const auto d = build_decoherence(three_slit());
    const SampleSpace s = d.space();
    const PreclusionReport report = d.precluded_events(1e-9);

    const Coevent phi = Coevent::atom(s, "a") + Coevent::atom(s, "b") + Coevent::atom(s, "c");
    CHECK(is_preclusive(phi, report));
    CHECK_FALSE(is_preclusive(Coevent::atom(s, "b"), report));

    // a trivial report precludes nothing, so every co-event qualifies
    const auto classical_d = build_decoherence(classical(std::vector<double>{0.4, 0.6}));
    const auto trivial = classical_d.precluded_events(classical_d.default_eps());
    const SampleSpace cs = classical_d.space();
    for (std::uint64_t mask = 0; mask < 4; ++mask) {
        CHECK(is_preclusive(Coevent{Event(cs, mask)}, trivial));
    }

    CHECK_THROWS_AS(is_preclusive(Coevent::zero(numbered_space(4)), report),
                    SpaceMismatchError);
}

TEST_CASE("annihilator of a trivial report is the full dual space") {
    const auto d = build_decoherence(classical(std::vector<double>{0.4, 0.6}));
    const auto report = d.precluded_events(d.default_eps());
    const auto basis = preclusive_annihilator(report);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].support().members() == 0b01);
    CHECK(basis[1].support().members() == 0b10);
}

TEST_CASE("three-slit annihilator is one-dimensional") {
    const auto d = build_decoherence(three_slit());
    const auto report = d.precluded_events(1e-9);
    const auto basis = preclusive_annihilator(report);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].support().members() == 0b111);
}

TEST_CASE("every annihilator member is preclusive, on random models") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const SampleSpace s = numbered_space(n);
        const auto d = DecoherenceFunctional::from_matrix(s, random_psd_matrix(n, rng));
        const auto report = d.precluded_events(d.default_eps());
        const auto basis = preclusive_annihilator(report);
        // all 2^d combinations vanish on every zero event
        std::uint64_t current = 0;
        for (std::uint64_t k = 1; k < (std::uint64_t{1} << basis.size()); ++k) {
            current ^= basis[static_cast<std::size_t>(std::countr_zero(k))].support().members();
            CHECK(is_preclusive(Coevent{Event(s, current)}, report));
        }
    }
}

TEST_CASE("minimal co-events of a classical model are the surviving atoms") {
    const auto d = build_decoherence(classical(std::vector<double>{0.5, 0.5}));
    const auto family = minimal_preclusive(d.precluded_events(d.default_eps()));
    REQUIRE(family.minimal.size() == 2);
    CHECK(family.minimal[0].support().members() == 0b01);
    CHECK(family.minimal[1].support().members() == 0b10);
    CHECK(family.minimal_unital.size() == 2);
    CHECK(family.dimension == 2);

    // a zero-probability history is precluded and drops out
    const auto d2 = build_decoherence(classical(std::vector<double>{1.0, 0.0}));
    const auto family2 = minimal_preclusive(d2.precluded_events(d2.default_eps()));
    REQUIRE(family2.minimal.size() == 1);
    CHECK(family2.minimal[0].support().members() == 0b01);
    CHECK(family2.minimal[0].is_unital());
    CHECK(family2.minimal[0].is_multiplicative());

    const auto d3 = build_decoherence(classical(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}));
    const auto family3 = minimal_preclusive(d3.precluded_events(d3.default_eps()));
    REQUIRE(family3.minimal.size() == 3);
    for (const auto& phi : family3.minimal) {
        CHECK(phi.support().cardinality() == 1);
    }
}

TEST_CASE("the three-slit family is the unique compound co-event") {
    const auto d = build_decoherence(three_slit());
    const auto family = minimal_preclusive(d.precluded_events(1e-9));
    CHECK(family.dimension == 1);
    REQUIRE(family.minimal.size() == 1);
    CHECK(family.minimal[0].support().members() == 0b111);
    CHECK(family.minimal[0].is_unital());
    REQUIRE(family.minimal_unital.size() == 1);
}

TEST_CASE("full two-slit cancellation leaves only a non-unital reality") {
    const std::vector<std::complex<double>> amps{{1.0, 0.0}, {-1.0, 0.0}};
    const auto d = build_decoherence(n_slit(amps));
    CHECK(d.measure(Event::all(d.space())) == doctest::Approx(0.0));
    const auto family = minimal_preclusive(d.precluded_events(d.default_eps()), true);
    REQUIRE(family.minimal.size() == 1);
    CHECK(family.minimal[0].support().members() == 0b11);
    CHECK(family.minimal_unital.empty());
    CHECK(family.unital_only);
    CHECK(family.reported().empty());
}

TEST_CASE("minimality scan respects the dimension guard") {
    const auto d = build_decoherence(classical(std::vector<double>{0.25, 0.25, 0.25, 0.25}));
    const auto report = d.precluded_events(d.default_eps());
    CHECK_THROWS_AS(minimal_preclusive(report, false, 3), CapacityError);
    CHECK_NOTHROW(minimal_preclusive(report, false, 4));
}

TEST_CASE("the minimal family is an antichain in canonical order") {
    std::mt19937_64 rng(203);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        const SampleSpace s = numbered_space(n);
        const auto d = DecoherenceFunctional::from_matrix(s, random_psd_matrix(n, rng));
        const auto family = minimal_preclusive(d.precluded_events(d.default_eps()));
        for (std::size_t i = 0; i < family.minimal.size(); ++i) {
            for (std::size_t j = 0; j < family.minimal.size(); ++j) {
                if (i != j) {
                    CHECK_FALSE(leq_support(family.minimal[i], family.minimal[j]));
                }
            }
            if (i + 1 < family.minimal.size()) {
                const auto& a = family.minimal[i].support();
                const auto& b = family.minimal[i + 1].support();
                const bool ordered = a.cardinality() < b.cardinality() ||
                                     (a.cardinality() == b.cardinality() &&
                                      a.members() < b.members());
                CHECK(ordered);
            }
        }
    }
}

TEST_CASE("support order") {
    const SampleSpace s = abc();
    const Coevent ac = Coevent::atom(s, "a") + Coevent::atom(s, "c");
    const Coevent abc_phi = ac + Coevent::atom(s, "b");
    CHECK(leq_support(ac, abc_phi));
    CHECK_FALSE(leq_support(abc_phi, ac));
    CHECK(leq_support(ac, ac));
    CHECK_FALSE(leq_support(Coevent::atom(s, "a"), Coevent::atom(s, "b")));
}

TEST_CASE("general order agrees with the support order on small spaces") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const SampleSpace s = numbered_space(n);
        for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << n); ++m1) {
            for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << n); ++m2) {
                const Coevent phi1{Event(s, m1)};
                const Coevent phi2{Event(s, m2)};
                CHECK(leq_general(phi1, phi2) == leq_support(phi1, phi2));
            }
        }
    }
}

TEST_CASE("general order basics") {
    const SampleSpace s = abc();
    CHECK(leq_general(Coevent::zero(s), Coevent::atom(s, "b")));
    CHECK_FALSE(leq_general(Coevent::atom(s, "a"), Coevent::atom(s, "b")));
    CHECK_FALSE(leq_general(Coevent::atom(s, "b"), Coevent::atom(s, "a")));

    std::vector<std::string> big;
    for (int i = 0; i < 30; ++i) {
        big.push_back("h" + std::to_string(i));
    }
    const SampleSpace huge(big);
    CHECK_THROWS_AS(leq_general(Coevent::zero(huge), Coevent::zero(huge)), CapacityError);
}
