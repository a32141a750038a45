#include "interlace/gf2_kernels.hpp"

#include <bit>
#include <utility>

namespace interlace::gf2::kernels {

std::size_t rank_words(std::span<std::uint64_t> rows, std::size_t cols) noexcept {
    std::size_t rank = 0;
    const std::size_t n = rows.size();
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::size_t p = rank;
        while (p < n && (rows[p] & bit) == 0) ++p;
        if (p == n) continue;
        std::swap(rows[p], rows[rank]);
        const std::uint64_t pivot = rows[rank];
        for (std::size_t r = rank + 1; r < n; ++r)
            if (rows[r] & bit) rows[r] ^= pivot;
        ++rank;
    }
    return rank;
}

std::size_t rank_scalar(std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                        std::size_t words_per_row) noexcept {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t p = rank;
        while (p < rows && (data[p * words_per_row + w] & bit) == 0) ++p;
        if (p == rows) continue;
        // Rows at or below `rank` are zero in every column before c.
        std::uint64_t* pivot = data.data() + rank * words_per_row;
        if (p != rank) {
            std::uint64_t* other = data.data() + p * words_per_row;
            for (std::size_t k = w; k < words_per_row; ++k) std::swap(pivot[k], other[k]);
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t* row = data.data() + r * words_per_row;
            if ((row[w] & bit) == 0) continue;
            for (std::size_t k = w; k < words_per_row; ++k) row[k] ^= pivot[k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace interlace::gf2::kernels
