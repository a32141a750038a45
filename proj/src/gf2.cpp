#include "interlace/gf2.hpp"

#include "interlace/error.hpp"
#include "interlace/gf2_kernels.hpp"

#include <array>

namespace interlace::gf2 {

Gf2Matrix::Gf2Matrix(std::size_t n) : n_(n), wpr_((n + 63) / 64), data_(n * ((n + 63) / 64), 0) {}

Gf2Matrix::Gf2Matrix(const std::vector<BitRow>& rows) : Gf2Matrix(rows.size()) {
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) throw PreconditionError("Gf2Matrix: row " + std::to_string(i) + " has wrong length");
        auto words = rows[i].words();
        std::copy(words.begin(), words.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * wpr_));
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                throw PreconditionError("Gf2Matrix: not symmetric at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<BitRow> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) {
        BitRow b(r.size());
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] & 1) b.set(j);
        bits.push_back(std::move(b));
    }
    return Gf2Matrix(bits);
}

std::size_t Gf2Matrix::rank() const {
    if (n_ == 0) return 0;
    if (wpr_ == 1 && n_ <= 64) {
        std::array<std::uint64_t, 64> rows{};
        std::copy(data_.begin(), data_.end(), rows.begin());
        return kernels::rank_words(std::span(rows.data(), n_), n_);
    }
    std::vector<std::uint64_t> work = data_;
    return kernels::rank(work, n_, n_, wpr_);
}

Gf2Builder::Gf2Builder(std::size_t n) : m_(n) {}

void Gf2Builder::set(std::size_t i, std::size_t j) noexcept {
    m_.data_[i * m_.wpr_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
    m_.data_[j * m_.wpr_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
}

void Gf2Builder::set_diagonal(std::size_t i) noexcept { set(i, i); }

Gf2Matrix Gf2Builder::build() && { return std::move(m_); }

std::size_t nullity(const Gf2Matrix& m) { return m.nullity(); }

Gf2Matrix bordered(const Gf2Matrix& m, std::span<const std::size_t> s, bool loop) {
    const std::size_t n = m.size();
    Gf2Builder b(n + 1);
    for (std::size_t idx : s) {
        if (idx >= n) throw PreconditionError("bordered: index " + std::to_string(idx) + " out of range");
        b.set(0, idx + 1);
    }
    if (loop) b.set_diagonal(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (m.at(i, j)) b.set(i + 1, j + 1);
    return std::move(b).build();
}

TriClassification tri_type(const Gf2Matrix& m, std::span<const std::size_t> s) {
    TriClassification t;
    t.bordered = bordered(m, s, false).nullity();
    t.plain = m.nullity();
    t.looped = bordered(m, s, true).nullity();
    const std::size_t a = t.bordered, b = t.plain, c = t.looped;
    if (b == c && a == b + 1) t.type = 1;
    else if (a == c && b == a + 1) t.type = 2;
    else if (a == b && c == a + 1) t.type = 3;
    else
        throw InternalError("tri_type: nullities (" + std::to_string(a) + "," + std::to_string(b) + "," +
                            std::to_string(c) + ") break the two-equal-plus-one pattern");
    return t;
}

}  // namespace interlace::gf2
