#include "qumea/gf2.hpp"

#include <algorithm>
#include <bit>

namespace qumea::gf2 {

Rref::Rref(std::span<const Word> rows) {
    for (Word r : rows) {
        // forward-eliminate against existing pivots
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if ((r >> pivots_[k]) & 1u) {
                r ^= rows_[k];
            }
        }
        if (r == 0) {
            continue;
        }
        const auto pivot = static_cast<std::size_t>(std::countr_zero(r));
        // clear the new pivot column from all existing rows
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if ((rows_[k] >> pivot) & 1u) {
                rows_[k] ^= r;
            }
        }
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
        rows_.insert(rows_.begin() + pos, r);
        pivots_.insert(pivots_.begin() + pos, pivot);
    }
}

Word Rref::reduce(Word v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if ((v >> pivots_[k]) & 1u) {
            v ^= rows_[k];
        }
    }
    return v;
}

std::vector<Word> Rref::annihilator_basis(std::size_t columns) const {
    std::vector<Word> basis;
    basis.reserve(columns - rank());
    std::size_t next_pivot = 0;
    for (std::size_t col = 0; col < columns; ++col) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        // free column: set it, plus every pivot whose row contains the column
        Word v = Word{1} << col;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if ((rows_[k] >> col) & 1u) {
                v |= Word{1} << pivots_[k];
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::size_t rank(std::span<const Word> rows) {
    return Rref(rows).rank();
}

} // namespace qumea::gf2
