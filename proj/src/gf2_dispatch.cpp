#include "interlace/gf2_kernels.hpp"

#include <cstdlib>
#include <string>

namespace interlace::gf2::kernels {

std::string_view isa_name(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool cpu_supports(Isa isa) noexcept {
    switch (isa) {
        case Isa::scalar: return true;
        case Isa::avx2:
#if INTERLACE_HAVE_AVX2_KERNEL && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

namespace {

Isa detect() noexcept {
    if (const char* env = std::getenv("INTERLACE_SIMD"); env != nullptr && std::string(env) == "scalar")
        return Isa::scalar;
    return cpu_supports(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

Isa active_isa() noexcept {
    static const Isa isa = detect();
    return isa;
}

std::size_t rank_with(Isa isa, std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                      std::size_t words_per_row) noexcept {
#if INTERLACE_HAVE_AVX2_KERNEL
    if (isa == Isa::avx2) return rank_avx2(data, rows, cols, words_per_row);
#endif
    (void)isa;
    return rank_scalar(data, rows, cols, words_per_row);
}

std::size_t rank(std::span<std::uint64_t> data, std::size_t rows, std::size_t cols,
                 std::size_t words_per_row) noexcept {
    if (words_per_row == 1) return rank_words(data.first(rows), cols);
    return rank_with(active_isa(), data, rows, cols, words_per_row);
}

}  // namespace interlace::gf2::kernels
