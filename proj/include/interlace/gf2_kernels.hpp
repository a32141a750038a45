#pragma once

// Row-reduction kernels over GF(2). A matrix is a row-major array of
// `rows * words_per_row` 64-bit words; bit c of row r is bit (c % 64) of
// word (r * words_per_row + c / 64). Every kernel destroys its input and
// returns the rank. The scalar kernel is the reference; SIMD variants must
// agree with it bit for bit on every input.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace interlace::gf2::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Rank of a matrix whose rows fit in one word. Elimination pivots on the
/// lowest-index row with a bit in the current column.
std::size_t rank_words(std::span<std::uint64_t> rows, std::size_t cols) noexcept;

std::size_t rank_scalar(std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                        std::size_t words_per_row) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
#define INTERLACE_HAVE_AVX2_KERNEL 1
std::size_t rank_avx2(std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                      std::size_t words_per_row) noexcept;
#else
#define INTERLACE_HAVE_AVX2_KERNEL 0
#endif

/// True when the running CPU can execute `isa`.
bool cpu_supports(Isa isa) noexcept;

/// The kernel chosen for this process: the widest supported ISA, unless the
/// environment variable INTERLACE_SIMD=scalar forces the reference path.
Isa active_isa() noexcept;

/// Rank through the active kernel. Single-word rows always take rank_words.
std::size_t rank(std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                 std::size_t words_per_row) noexcept;

std::size_t rank_with(Isa isa, std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                      std::size_t words_per_row) noexcept;

}  // namespace interlace::gf2::kernels
