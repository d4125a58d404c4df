#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qumea/errors.hpp"

namespace qumea {

/**
 * Finite, ordered set of history labels. The label order is fixed at
 * construction and defines the canonical basis order for all event
 * indicators and GF(2) work downstream.
 *
 * Copies share the underlying label data; the type is an immutable value.
 */
class SampleSpace {
public:
    /// Indicators are 64-bit masks, so a space holds at most 63 histories.
    static constexpr std::size_t max_histories = 63;

    explicit SampleSpace(std::vector<std::string> labels);

    std::size_t size() const { return data_->labels.size(); }
    const std::vector<std::string>& labels() const { return data_->labels; }
    const std::string& label(std::size_t index) const;

    /// Index of a label in canonical order; throws PreconditionError if unknown.
    std::size_t index_of(const std::string& label) const;
    bool has_label(const std::string& label) const;

    /// Spaces are equal iff their label sequences are equal.
    friend bool operator==(const SampleSpace& a, const SampleSpace& b) {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }
    friend bool operator!=(const SampleSpace& a, const SampleSpace& b) {
        return !(a == b);
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::unordered_map<std::string, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

/**
 * Subset of a sample space, stored as a membership mask: bit i is set iff
 * history i (in canonical order) belongs to the event. Immutable value.
 */
class Event {
public:
    /// Wraps a raw mask; bits beyond the space size must be clear.
    Event(SampleSpace space, std::uint64_t members);

    static Event empty(SampleSpace space) { return Event(std::move(space), 0); }
    static Event all(SampleSpace space);
    static Event singleton(SampleSpace space, const std::string& label);
    static Event of(SampleSpace space, std::initializer_list<std::string> labels);

    const SampleSpace& space() const { return space_; }
    std::uint64_t members() const { return members_; }

    bool contains(std::size_t index) const { return (members_ >> index) & 1u; }
    bool contains(const std::string& label) const { return contains(space_.index_of(label)); }
    std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(members_)); }
    bool is_empty() const { return members_ == 0; }

    /// Member labels in canonical (history-index) order.
    std::vector<std::string> member_labels() const;

    friend bool operator==(const Event& a, const Event& b) {
        return a.members_ == b.members_ && a.space_ == b.space_;
    }
    friend bool operator!=(const Event& a, const Event& b) { return !(a == b); }

private:
    SampleSpace space_;
    std::uint64_t members_;
};

/// Throws SpaceMismatchError unless both events live on the same space.
void require_same_space(const Event& a, const Event& b);

/// Symmetric difference (A u B) \ (A n B): the algebra's addition.
Event add(const Event& a, const Event& b);

/// Set intersection: the algebra's multiplication.
Event mul(const Event& a, const Event& b);

/// Complement within the space, i.e. add(all, a).
Event complement(const Event& a);

bool are_disjoint(const Event& a, const Event& b);
bool is_subset(const Event& a, const Event& b);

/// Set union; equals add(a, b) when a and b are disjoint.
Event set_union(const Event& a, const Event& b);

inline Event operator+(const Event& a, const Event& b) { return add(a, b); }
inline Event operator*(const Event& a, const Event& b) { return mul(a, b); }

/// Default cap on space size for exhaustive 2^n enumerations.
inline constexpr std::size_t default_enumeration_guard = 24;

/**
 * All 2^n events of the space in canonical order: the indicator mask read as
 * an n-bit integer, ascending. Throws CapacityError when n exceeds the guard.
 */
std::vector<Event> enumerate_events(const SampleSpace& space,
                                    std::size_t guard = default_enumeration_guard);

} // namespace qumea
