#include "qumea/event_algebra.hpp"

#include <algorithm>
#include <utility>

namespace qumea {

SampleSpace::SampleSpace(std::vector<std::string> labels) {
    if (labels.empty()) {
        throw PreconditionError("sample space needs at least one history label");
    }
    if (labels.size() > max_histories) {
        throw CapacityError("sample space limited to " + std::to_string(max_histories) +
                            " histories, got " + std::to_string(labels.size()));
    }
    auto data = std::make_shared<Data>();
    data->index.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!data->index.emplace(labels[i], i).second) {
            throw PreconditionError("duplicate history label '" + labels[i] + "'");
        }
    }
    data->labels = std::move(labels);
    data_ = std::move(data);
}

const std::string& SampleSpace::label(std::size_t index) const {
    if (index >= size()) {
        throw PreconditionError("history index " + std::to_string(index) + " out of range");
    }
    return data_->labels[index];
}

std::size_t SampleSpace::index_of(const std::string& label) const {
    auto it = data_->index.find(label);
    if (it == data_->index.end()) {
        throw PreconditionError("unknown history label '" + label + "'");
    }
    return it->second;
}

bool SampleSpace::has_label(const std::string& label) const {
    return data_->index.count(label) != 0;
}

Event::Event(SampleSpace space, std::uint64_t members)
    : space_(std::move(space)), members_(members) {
    const std::size_t n = space_.size();
    if (n < 64 && (members_ >> n) != 0) {
        throw PreconditionError("event indicator has bits beyond the sample space size");
    }
}

Event Event::all(SampleSpace space) {
    const std::size_t n = space.size();
    const std::uint64_t mask = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return Event(std::move(space), mask);
}

Event Event::singleton(SampleSpace space, const std::string& label) {
    const std::size_t i = space.index_of(label);
    return Event(std::move(space), std::uint64_t{1} << i);
}

Event Event::of(SampleSpace space, std::initializer_list<std::string> labels) {
    std::uint64_t mask = 0;
    for (const auto& l : labels) {
        mask |= std::uint64_t{1} << space.index_of(l);
    }
    return Event(std::move(space), mask);
}

std::vector<std::string> Event::member_labels() const {
    std::vector<std::string> out;
    out.reserve(cardinality());
    for (std::uint64_t m = members_; m != 0; m &= m - 1) {
        out.push_back(space_.label(static_cast<std::size_t>(std::countr_zero(m))));
    }
    return out;
}

void require_same_space(const Event& a, const Event& b) {
    if (a.space() != b.space()) {
        throw SpaceMismatchError("events belong to different sample spaces");
    }
}

Event add(const Event& a, const Event& b) {
    require_same_space(a, b);
    return Event(a.space(), a.members() ^ b.members());
}

Event mul(const Event& a, const Event& b) {
    require_same_space(a, b);
    return Event(a.space(), a.members() & b.members());
}

Event complement(const Event& a) {
    return add(Event::all(a.space()), a);
}

bool are_disjoint(const Event& a, const Event& b) {
    require_same_space(a, b);
    return (a.members() & b.members()) == 0;
}

bool is_subset(const Event& a, const Event& b) {
    require_same_space(a, b);
    return (a.members() & b.members()) == a.members();
}

Event set_union(const Event& a, const Event& b) {
    require_same_space(a, b);
    return Event(a.space(), a.members() | b.members());
}

std::vector<Event> enumerate_events(const SampleSpace& space, std::size_t guard) {
    const std::size_t n = space.size();
    if (n > guard) {
        throw CapacityError("sample space of " + std::to_string(n) +
                            " histories exceeds the enumeration guard of " +
                            std::to_string(guard));
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Event> out;
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        out.emplace_back(space, mask);
    }
    return out;
}

} // namespace qumea
