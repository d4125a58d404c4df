#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qumea::gf2 {

/// Row vector over GF(2), bit i = coefficient of basis column i.
using Word = std::uint64_t;

/**
 * Reduced row-echelon form of a set of GF(2) row vectors. Pivot columns are
 * chosen in ascending (canonical history) order, each pivot column has a
 * single 1, and rows are stored in ascending pivot order, so the result is
 * deterministic for a given row span.
 */
class Rref {
public:
    explicit Rref(std::span<const Word> rows);

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Word>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Remainder of v after elimination; zero iff v lies in the row span.
    Word reduce(Word v) const;
    bool in_span(Word v) const { return reduce(v) == 0; }

    /**
     * Basis of the dual kernel {s : parity(s & r) = 0 for all spanned r},
     * one vector per free column in ascending column order. Size n - rank.
     */
    std::vector<Word> annihilator_basis(std::size_t columns) const;

private:
    std::vector<Word> rows_;           // ascending pivot order
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

/// GF(2) rank of the given row vectors.
std::size_t rank(std::span<const Word> rows);

} // namespace qumea::gf2
