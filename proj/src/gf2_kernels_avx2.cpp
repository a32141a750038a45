// Compiled with -mavx2 (see src/CMakeLists.txt). Only reached after a
// runtime CPU check.
#include "interlace/gf2_kernels.hpp"

#if INTERLACE_HAVE_AVX2_KERNEL

#include <immintrin.h>

#include <utility>

namespace interlace::gf2::kernels {

namespace {

inline void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t count) noexcept {
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_xor_si256(a, b));
    }
    for (; k < count; ++k) dst[k] ^= src[k];
}

inline void swap_words(std::uint64_t* a, std::uint64_t* b, std::size_t count) noexcept {
    std::size_t k = 0;
    for (; k + 4 <= count; k += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + k), y);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(b + k), x);
    }
    for (; k < count; ++k) std::swap(a[k], b[k]);
}

}  // namespace

std::size_t rank_avx2(std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                      std::size_t words_per_row) noexcept {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        std::size_t p = rank;
        while (p < rows && (data[p * words_per_row + w] & bit) == 0) ++p;
        if (p == rows) continue;
        std::uint64_t* pivot = data.data() + rank * words_per_row;
        const std::size_t tail = words_per_row - w;
        if (p != rank) swap_words(pivot + w, data.data() + p * words_per_row + w, tail);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t* row = data.data() + r * words_per_row;
            if ((row[w] & bit) == 0) continue;
            xor_into(row + w, pivot + w, tail);
        }
        ++rank;
    }
    _mm256_zeroupper();
    return rank;
}

}  // namespace interlace::gf2::kernels

#endif
