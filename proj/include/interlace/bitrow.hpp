#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace interlace {

/// Fixed-size dynamic bitset backed by 64-bit words. Bits past size() are
/// always zero.
class BitRow {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    BitRow() = default;
    explicit BitRow(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

    std::size_t size() const noexcept { return size_; }

    /// Grows or shrinks; new bits are zero.
    void resize(std::size_t size) {
        words_.resize((size + 63) / 64, 0);
        size_ = size;
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= bit(i); }
    void set(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~bit(i); }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= bit(i); }

    BitRow& operator^=(const BitRow& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
        return *this;
    }
    BitRow& operator&=(const BitRow& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    BitRow& operator|=(const BitRow& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    /// this &= ~other
    BitRow& subtract(const BitRow& other) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
        return *this;
    }

    friend BitRow operator^(BitRow a, const BitRow& b) noexcept { return a ^= b; }
    friend BitRow operator&(BitRow a, const BitRow& b) noexcept { return a &= b; }
    friend BitRow operator|(BitRow a, const BitRow& b) noexcept { return a |= b; }

    bool any() const noexcept {
        for (auto w : words_)
            if (w != 0) return true;
        return false;
    }
    bool none() const noexcept { return !any(); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t find_first() const noexcept { return find_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return find_from(i + 1); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const BitRow&, const BitRow&) = default;
    friend auto operator<=>(const BitRow& a, const BitRow& b) {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        return a.words_ <=> b.words_;
    }

private:
    static constexpr std::uint64_t bit(std::size_t i) noexcept { return std::uint64_t{1} << (i & 63); }

    std::size_t find_from(std::size_t i) const noexcept {
        if (i >= size_) return npos;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size()) return npos;
            w = words_[k];
        }
    }

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

}  // namespace interlace
