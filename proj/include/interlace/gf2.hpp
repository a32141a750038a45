#pragma once

#include "interlace/bitrow.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace interlace::gf2 {

/// Symmetric square matrix over GF(2), bit-packed by rows. Diagonal entries
/// encode loops. Immutable after construction; all operations are pure.
class Gf2Matrix {
public:
    Gf2Matrix() = default;

    /// n×n zero matrix.
    explicit Gf2Matrix(std::size_t n);

    /// Throws PreconditionError unless `rows` is square and symmetric.
    explicit Gf2Matrix(const std::vector<BitRow>& rows);

    /// Convenience for literals: {{0,1},{1,0}}. Same validation.
    static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t size() const noexcept { return n_; }
    bool at(std::size_t i, std::size_t j) const noexcept {
        return (data_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1U;
    }
    std::size_t words_per_row() const noexcept { return wpr_; }
    std::span<const std::uint64_t> row_words(std::size_t i) const noexcept {
        return {data_.data() + i * wpr_, wpr_};
    }

    std::size_t rank() const;
    std::size_t nullity() const { return n_ - rank(); }

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    friend class Gf2Builder;
    std::size_t n_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Mutable construction helper that keeps the matrix symmetric by setting
/// entries in pairs. Used by the graph layer to build G_P without copying
/// through BitRow vectors.
class Gf2Builder {
public:
    explicit Gf2Builder(std::size_t n);
    void set(std::size_t i, std::size_t j) noexcept;  // sets (i,j) and (j,i)
    void set_diagonal(std::size_t i) noexcept;
    Gf2Matrix build() &&;

private:
    Gf2Matrix m_;
};

std::size_t nullity(const Gf2Matrix& m);

/// Adjoins a new row/column 0 whose off-diagonal ones are exactly the
/// positions in `s` (indices into m), with corner entry `loop`. Existing
/// indices shift by one. Throws PreconditionError for out-of-range indices.
Gf2Matrix bordered(const Gf2Matrix& m, std::span<const std::size_t> s, bool loop);

/// Nullities of the three matrices in the bordering lemma and the index of
/// the largest one: 1 for the unlooped border, 2 for m itself, 3 for the
/// looped border.
struct TriClassification {
    std::size_t bordered = 0;
    std::size_t plain = 0;
    std::size_t looped = 0;
    int type = 0;
};

/// Throws InternalError if the three nullities are not "two equal, the third
/// one larger by exactly one".
TriClassification tri_type(const Gf2Matrix& m, std::span<const std::size_t> s);

}  // namespace interlace::gf2
