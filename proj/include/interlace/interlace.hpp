#pragma once

// Interlace polynomial computations. Everything that takes a label ring R
// is a template: R = MPoly gives symbolic results, R = Rational evaluates
// with numeric labels and a numeric y.

#include "interlace/bitrow.hpp"
#include "interlace/error.hpp"
#include "interlace/gf2_kernels.hpp"
#include "interlace/graph.hpp"
#include "interlace/numeric.hpp"
#include "interlace/poly.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace interlace {

enum class PolynomialKind { qlambda, qlambda2, vertex_nullity, two_variable, avdh, courcelle };

std::string_view to_string(PolynomialKind k) noexcept;

/// Symbolic-mode vertex cap: 14 for the 3^n sums, 20 for the 2^n sums.
/// INTERLACE_VERTEX_CAP overrides every kind when set to a number.
std::size_t default_vertex_cap(PolynomialKind k);

struct Limits {
    /// Unset: default_vertex_cap in symbolic mode, no cap in numeric mode.
    std::optional<std::size_t> vertex_cap;
};

/// Which graph the chi summand of the three-term recursion recurses on.
enum class ChiBranch {
    double_complement,  // ((G^w)^v) - v
    pivot,              // (((G^w)^v)^w) - v
};

namespace detail {

template <typename R>
inline constexpr bool is_symbolic = std::is_same_v<R, MPoly>;

template <typename R>
std::size_t effective_cap(PolynomialKind k, const Limits& limits) {
    if (limits.vertex_cap) return *limits.vertex_cap;
    if constexpr (is_symbolic<R>) return default_vertex_cap(k);
    return std::numeric_limits<std::size_t>::max();
}

void check_cap(PolynomialKind k, std::size_t n, std::size_t cap);

/// Sums ring elements; the MPoly specialization collects raw terms and
/// combines them once.
template <typename R>
struct SumAccumulator {
    R sum = R(0L);
    void add(const R& x) { sum += x; }
    R take() { return std::move(sum); }
};

template <>
struct SumAccumulator<MPoly> {
    std::vector<MPoly::Term> terms;
    void add(const MPoly& x) { terms.insert(terms.end(), x.terms().begin(), x.terms().end()); }
    MPoly take() { return MPoly::from_terms(std::move(terms)); }
};

/// Row-major bit-packed adjacency (loops dropped).
struct PackedAdjacency {
    std::size_t n = 0;
    std::size_t wpr = 1;
    std::vector<std::uint64_t> rows;

    std::uint64_t* row(std::size_t v) noexcept { return rows.data() + v * wpr; }
    const std::uint64_t* row(std::size_t v) const noexcept { return rows.data() + v * wpr; }
};

template <typename R>
PackedAdjacency pack(const BasicLabeledGraph<R>& g) {
    PackedAdjacency a;
    a.n = g.size();
    a.wpr = std::max<std::size_t>(1, (a.n + 63) / 64);
    a.rows.assign(a.n * a.wpr, 0);
    for (std::size_t v = 0; v < a.n; ++v) {
        auto w = g.neighbors(v).words();
        std::copy(w.begin(), w.end(), a.row(v));
    }
    return a;
}

/// Odometer over {0..top}^n with vertex n-1 fastest. Returns the lowest
/// position that changed, or n when the sequence is exhausted.
inline std::size_t odometer_step(std::vector<std::uint8_t>& digits, std::uint8_t top) noexcept {
    std::size_t i = digits.size();
    while (i > 0) {
        --i;
        if (digits[i] < top) {
            ++digits[i];
            return i;
        }
        digits[i] = 0;
    }
    return digits.size();
}

/// Sum over labeled partitions (psi class allowed or not) of the label
/// product times y^nullity(G_P). g must be loopless.
template <typename R>
R partition_sum(const BasicLabeledGraph<R>& g, const R& y, bool psi_allowed) {
    const std::size_t n = g.size();
    const PackedAdjacency adj = pack(g);
    const std::size_t wpr = adj.wpr;
    const auto top = static_cast<std::uint8_t>(psi_allowed ? 2 : 1);

    std::vector<std::uint8_t> digits(n, 0);
    std::vector<R> prefix(n + 1, R(1L));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * g.labels(i).phi;

    std::vector<SumAccumulator<R>> by_nullity(n + 1);
    std::vector<std::uint64_t> keep(wpr), scratch(n * wpr);
    for (;;) {
        std::fill(keep.begin(), keep.end(), 0);
        std::size_t kept = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (digits[v] != 0) {
                keep[v >> 6] |= std::uint64_t{1} << (v & 63);
                ++kept;
            }
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t* dst = scratch.data() + v * wpr;
            if (digits[v] == 0) {
                std::fill(dst, dst + wpr, 0);
                continue;
            }
            const std::uint64_t* src = adj.row(v);
            for (std::size_t k = 0; k < wpr; ++k) dst[k] = src[k] & keep[k];
            if (digits[v] == 2) dst[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        const std::size_t r = n == 0 ? 0 : gf2::kernels::rank(scratch, n, n, wpr);
        by_nullity[kept - r].add(prefix[n]);

        const std::size_t changed = odometer_step(digits, top);
        if (changed == n) break;
        for (std::size_t j = changed; j < n; ++j)
            prefix[j + 1] = prefix[j] * g.labels(j)[static_cast<PartClass>(digits[j])];
    }

    R result(0L);
    R ypow(1L);
    for (std::size_t k = 0; k <= n; ++k) {
        result += ypow * by_nullity[k].take();
        ypow = ypow * y;
    }
    return result;
}

/// Working copy for the recursions: packed adjacency, alive set, and for
/// each vertex the permutation that labeled local complements have applied
/// to its original labels (slot[v][c] = original class now sitting at c).
struct RecState {
    PackedAdjacency adj;
    std::vector<std::uint64_t> alive;
    std::vector<std::array<std::uint8_t, 3>> slot;

    bool is_alive(std::size_t v) const noexcept { return (alive[v >> 6] >> (v & 63)) & 1U; }
    bool isolated(std::size_t v) const noexcept {
        const std::uint64_t* r = adj.row(v);
        for (std::size_t k = 0; k < adj.wpr; ++k)
            if (r[k]) return false;
        return true;
    }
    std::size_t first_neighbor(std::size_t v) const noexcept {
        const std::uint64_t* r = adj.row(v);
        for (std::size_t k = 0; k < adj.wpr; ++k)
            if (r[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(r[k]));
        return BitRow::npos;
    }
    template <typename F>
    void for_each_neighbor(std::size_t v, F&& f) const {
        const std::uint64_t* r = adj.row(v);
        for (std::size_t k = 0; k < adj.wpr; ++k)
            for (std::uint64_t w = r[k]; w; w &= w - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
    }
    void remove(std::size_t v) noexcept {
        const std::uint64_t bit = std::uint64_t{1} << (v & 63);
        for_each_neighbor(v, [&](std::size_t a) { adj.row(a)[v >> 6] &= ~bit; });
        std::uint64_t* r = adj.row(v);
        std::fill(r, r + adj.wpr, 0);
        alive[v >> 6] &= ~bit;
    }
    void local_complement(std::size_t v) noexcept {
        const std::uint64_t* nv = adj.row(v);
        for_each_neighbor(v, [&](std::size_t a) {
            std::uint64_t* ra = adj.row(a);
            for (std::size_t k = 0; k < adj.wpr; ++k) ra[k] ^= nv[k];
            ra[a >> 6] ^= std::uint64_t{1} << (a & 63);  // undo the self toggle
            std::swap(slot[a][1], slot[a][2]);
        });
        std::swap(slot[v][0], slot[v][2]);
    }
};

template <typename R>
RecState make_state(const BasicLabeledGraph<R>& g) {
    RecState s;
    s.adj = pack(g);
    s.alive.assign(s.adj.wpr, 0);
    for (std::size_t v = 0; v < g.size(); ++v) s.alive[v >> 6] |= std::uint64_t{1} << (v & 63);
    s.slot.assign(g.size(), {0, 1, 2});
    return s;
}

enum class RecMode { three_term, three_term_pivot, two_term };

template <typename R>
R recurse(const BasicLabeledGraph<R>& g, const R& y, RecState s, RecMode mode) {
    auto label = [&](std::size_t v, PartClass c) -> const R& {
        return g.labels(v)[static_cast<PartClass>(s.slot[v][static_cast<std::size_t>(c)])];
    };
    R result(1L);
    std::size_t pick = BitRow::npos;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!s.is_alive(v)) continue;
        if (s.isolated(v)) {
            R base = label(v, PartClass::phi) + label(v, PartClass::chi) * y;
            if (mode != RecMode::two_term) base += label(v, PartClass::psi);
            result = result * base;
            s.remove(v);
        } else if (pick == BitRow::npos) {
            pick = v;
        }
    }
    if (pick == BitRow::npos) return result;
    const std::size_t v = pick;
    const std::size_t w = s.first_neighbor(v);
    const R lphi = label(v, PartClass::phi), lchi = label(v, PartClass::chi), lpsi = label(v, PartClass::psi);

    RecState s_chi = s;
    s_chi.local_complement(w);
    s_chi.local_complement(v);
    if (mode != RecMode::three_term) s_chi.local_complement(w);
    s_chi.remove(v);
    R sum = lchi * recurse(g, y, std::move(s_chi), mode);

    if (mode != RecMode::two_term && lpsi != R(0L)) {
        RecState s_psi = s;
        s_psi.local_complement(v);
        s_psi.remove(v);
        sum += lpsi * recurse(g, y, std::move(s_psi), mode);
    }
    if (lphi != R(0L)) {
        s.remove(v);
        sum += lphi * recurse(g, y, std::move(s), mode);
    }
    return result * sum;
}

template <typename R>
BasicLabeledGraph<R> simple_or_simplified(const BasicLabeledGraph<R>& g) {
    return g.has_loops() ? simplify(g) : g;
}

/// Counts[k][nu]: number of S with |S| = k and nullity(G[S]) = nu, loops of
/// g on the diagonal.
template <typename R>
std::vector<std::vector<std::uint64_t>> subset_nullity_histogram(const BasicLabeledGraph<R>& g) {
    const std::size_t n = g.size();
    const PackedAdjacency adj = pack(g);
    const std::size_t wpr = adj.wpr;
    std::vector<std::vector<std::uint64_t>> counts(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::uint8_t> digits(n, 0);
    std::vector<std::uint64_t> keep(wpr), scratch(n * wpr);
    for (;;) {
        std::fill(keep.begin(), keep.end(), 0);
        std::size_t kept = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (digits[v]) {
                keep[v >> 6] |= std::uint64_t{1} << (v & 63);
                ++kept;
            }
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t* dst = scratch.data() + v * wpr;
            if (!digits[v]) {
                std::fill(dst, dst + wpr, 0);
                continue;
            }
            const std::uint64_t* src = adj.row(v);
            for (std::size_t k = 0; k < wpr; ++k) dst[k] = src[k] & keep[k];
            if (g.looped(v)) dst[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        const std::size_t r = n == 0 ? 0 : gf2::kernels::rank(scratch, n, n, wpr);
        ++counts[kept][kept - r];
        if (odometer_step(digits, 1) == n) break;
    }
    return counts;
}

}  // namespace detail

// ------------------------------------------------------------------ Q_lambda

/// Sum over all 3^n labeled partitions. Looped inputs are simplified first.
template <typename R>
R qlambda_bruteforce(const BasicLabeledGraph<R>& g, const R& y, const Limits& limits = {}) {
    detail::check_cap(PolynomialKind::qlambda, g.size(), detail::effective_cap<R>(PolynomialKind::qlambda, limits));
    return detail::partition_sum(detail::simple_or_simplified(g), y, true);
}

/// Three-term recursion on the lowest vertex with a neighbour and its lowest
/// neighbour. Looped inputs are simplified first.
template <typename R>
R qlambda_recursive(const BasicLabeledGraph<R>& g, const R& y, const Limits& limits = {},
                    ChiBranch chi = ChiBranch::double_complement) {
    detail::check_cap(PolynomialKind::qlambda, g.size(), detail::effective_cap<R>(PolynomialKind::qlambda, limits));
    const auto s = detail::simple_or_simplified(g);
    return detail::recurse(s, y, detail::make_state(s),
                           chi == ChiBranch::pivot ? detail::RecMode::three_term_pivot
                                                   : detail::RecMode::three_term);
}

// ------------------------------------------------------------------ q_lambda

/// Sum over the 2^n psi-free labeled partitions.
template <typename R>
R q2_bruteforce(const BasicLabeledGraph<R>& g, const R& y, const Limits& limits = {}) {
    detail::check_cap(PolynomialKind::qlambda2, g.size(), detail::effective_cap<R>(PolynomialKind::qlambda2, limits));
    return detail::partition_sum(detail::simple_or_simplified(g), y, false);
}

/// Two-term pivot recursion.
template <typename R>
R q2_recursive(const BasicLabeledGraph<R>& g, const R& y, const Limits& limits = {}) {
    detail::check_cap(PolynomialKind::qlambda2, g.size(), detail::effective_cap<R>(PolynomialKind::qlambda2, limits));
    const auto s = detail::simple_or_simplified(g);
    return detail::recurse(s, y, detail::make_state(s), detail::RecMode::two_term);
}

// Symbolic conveniences with y the global indeterminate.
MPoly qlambda_bruteforce(const LabeledGraph& g, const Limits& limits = {});
MPoly qlambda_recursive(const LabeledGraph& g, const Limits& limits = {},
                        ChiBranch chi = ChiBranch::double_complement);
MPoly q2_bruteforce(const LabeledGraph& g, const Limits& limits = {});
MPoly q2_recursive(const LabeledGraph& g, const Limits& limits = {});

// ---------------------------------------------------------- specializations

/// Vertex-nullity polynomial, sum over S of (y-1)^nullity(G[S]). Loops of g
/// are diagonal entries; no simplification.
MPoly qn(const LabeledGraph& g, const Limits& limits = {});

/// Two-variable interlace polynomial in x and y, computed directly.
MPoly q_two_variable(const LabeledGraph& g, const Limits& limits = {});

/// Q_lambda with every label 1; univariate in y. Looped inputs simplified.
MPoly q_avdh(const LabeledGraph& g, const Limits& limits = {});

/// Courcelle's polynomial in x_a, y_a (per vertex), u and v.
MPoly courcelle(const LabeledGraph& g, const Limits& limits = {});

/// Loops stripped; labels phi=chi=1, psi=0 at unlooped vertices and
/// phi=psi=1, chi=0 at looped ones. Q_lambda of this graph with y -> y-1
/// is qn(g).
LabeledGraph qn_label_graph(const LabeledGraph& g);

/// Loops stripped; labels (1, x-1, 0) at unlooped vertices and (1, 0, x-1)
/// at looped ones. Q_lambda of this graph with y -> (y-1)/(x-1) is q(g).
LabeledGraph q_label_graph(const LabeledGraph& g);

/// qn through Q_lambda of qn_label_graph.
MPoly qn_via_qlambda(const LabeledGraph& g, const Limits& limits = {});

}  // namespace interlace
