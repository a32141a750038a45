#include "interlace/interlace.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

namespace interlace {

std::string_view to_string(PolynomialKind k) noexcept {
    switch (k) {
        case PolynomialKind::qlambda: return "QLambda";
        case PolynomialKind::qlambda2: return "QLambda2";
        case PolynomialKind::vertex_nullity: return "VertexNullity";
        case PolynomialKind::two_variable: return "TwoVariable";
        case PolynomialKind::avdh: return "AvdH";
        case PolynomialKind::courcelle: return "Courcelle";
    }
    return "?";
}

std::size_t default_vertex_cap(PolynomialKind k) {
    if (const char* env = std::getenv("INTERLACE_VERTEX_CAP")) {
        std::size_t value = 0;
        const std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc() && ptr == s.data() + s.size()) return value;
    }
    switch (k) {
        case PolynomialKind::vertex_nullity:
        case PolynomialKind::two_variable: return 20;
        default: return 14;
    }
}

namespace detail {

void check_cap(PolynomialKind k, std::size_t n, std::size_t cap) {
    if (n > cap)
        throw CapExceeded(std::string(to_string(k)) + ": graph too large for exhaustive symbolic expansion", n, cap);
}

}  // namespace detail

MPoly qlambda_bruteforce(const LabeledGraph& g, const Limits& limits) {
    return qlambda_bruteforce<MPoly>(g, MPoly(VarId::y()), limits);
}
MPoly qlambda_recursive(const LabeledGraph& g, const Limits& limits, ChiBranch chi) {
    return qlambda_recursive<MPoly>(g, MPoly(VarId::y()), limits, chi);
}
MPoly q2_bruteforce(const LabeledGraph& g, const Limits& limits) {
    return q2_bruteforce<MPoly>(g, MPoly(VarId::y()), limits);
}
MPoly q2_recursive(const LabeledGraph& g, const Limits& limits) {
    return q2_recursive<MPoly>(g, MPoly(VarId::y()), limits);
}

MPoly qn(const LabeledGraph& g, const Limits& limits) {
    detail::check_cap(PolynomialKind::vertex_nullity, g.size(),
                      detail::effective_cap<MPoly>(PolynomialKind::vertex_nullity, limits));
    const auto counts = detail::subset_nullity_histogram(g);
    std::vector<std::uint64_t> by_nullity(g.size() + 1, 0);
    for (const auto& row : counts)
        for (std::size_t nu = 0; nu < row.size(); ++nu) by_nullity[nu] += row[nu];
    const MPoly ym1 = MPoly(VarId::y()) - MPoly(1L);
    MPoly out;
    MPoly p(1L);
    for (std::size_t nu = 0; nu < by_nullity.size(); ++nu) {
        if (by_nullity[nu]) out += MPoly(BigInt(std::to_string(by_nullity[nu]))) * p;
        p *= ym1;
    }
    return out;
}

MPoly q_two_variable(const LabeledGraph& g, const Limits& limits) {
    detail::check_cap(PolynomialKind::two_variable, g.size(),
                      detail::effective_cap<MPoly>(PolynomialKind::two_variable, limits));
    const auto counts = detail::subset_nullity_histogram(g);
    const std::size_t n = g.size();
    const MPoly xm1 = MPoly(VarId::x()) - MPoly(1L);
    const MPoly ym1 = MPoly(VarId::y()) - MPoly(1L);
    std::vector<MPoly> xp(n + 1, MPoly(1L)), yp(n + 1, MPoly(1L));
    for (std::size_t i = 1; i <= n; ++i) {
        xp[i] = xp[i - 1] * xm1;
        yp[i] = yp[i - 1] * ym1;
    }
    MPoly out;
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t nu = 0; nu <= k; ++nu)
            if (counts[k][nu]) out += MPoly(BigInt(std::to_string(counts[k][nu]))) * xp[k - nu] * yp[nu];
    return out;
}

MPoly q_avdh(const LabeledGraph& g, const Limits& limits) {
    detail::check_cap(PolynomialKind::avdh, g.size(), detail::effective_cap<MPoly>(PolynomialKind::avdh, limits));
    const auto ones = detail::simple_or_simplified(g).map_labels([](const MPoly&) { return MPoly(1L); });
    return qlambda_recursive<MPoly>(ones, MPoly(VarId::y()), Limits{std::numeric_limits<std::size_t>::max()});
}

MPoly courcelle(const LabeledGraph& g, const Limits& limits) {
    const std::size_t n = g.size();
    detail::check_cap(PolynomialKind::courcelle, n, detail::effective_cap<MPoly>(PolynomialKind::courcelle, limits));
    const detail::PackedAdjacency adj = detail::pack(g);
    const std::size_t wpr = adj.wpr;
    std::vector<VarId> xs, ys;
    for (std::size_t v = 0; v < n; ++v) {
        xs.push_back(VarId::x_of(g.id(v)));
        ys.push_back(VarId::y_of(g.id(v)));
    }
    // digit 0: neither, 1: in A, 2: in B
    std::vector<std::uint8_t> digits(n, 0);
    std::vector<std::uint64_t> keep(wpr), scratch(n * wpr);
    std::vector<MPoly::Term> terms;
    std::vector<Monomial::Factor> factors;
    for (;;) {
        std::fill(keep.begin(), keep.end(), 0);
        std::size_t kept = 0;
        factors.clear();
        for (std::size_t v = 0; v < n; ++v) {
            if (!digits[v]) continue;
            keep[v >> 6] |= std::uint64_t{1} << (v & 63);
            ++kept;
            factors.emplace_back(digits[v] == 1 ? xs[v] : ys[v], 1);
        }
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t* dst = scratch.data() + v * wpr;
            if (!digits[v]) {
                std::fill(dst, dst + wpr, 0);
                continue;
            }
            const std::uint64_t* src = adj.row(v);
            for (std::size_t k = 0; k < wpr; ++k) dst[k] = src[k] & keep[k];
            if (g.looped(v) != (digits[v] == 2)) dst[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
        const std::size_t r = n == 0 ? 0 : gf2::kernels::rank(scratch, n, n, wpr);
        const std::size_t nu = kept - r;
        if (kept - nu) factors.emplace_back(VarId::u(), static_cast<std::uint32_t>(kept - nu));
        if (nu) factors.emplace_back(VarId::v(), static_cast<std::uint32_t>(nu));
        terms.push_back({Monomial::from_factors(factors), BigInt(1)});
        if (detail::odometer_step(digits, 2) == n) break;
    }
    return MPoly::from_terms(std::move(terms));
}

namespace {

LabeledGraph stripped_with(const LabeledGraph& g, const LabelTriple<MPoly>& unlooped, const LabelTriple<MPoly>& looped) {
    LabeledGraph out;
    for (std::size_t v = 0; v < g.size(); ++v) out.add_vertex(g.id(v), g.looped(v) ? looped : unlooped);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    return out;
}

}  // namespace

LabeledGraph qn_label_graph(const LabeledGraph& g) {
    return stripped_with(g, {MPoly(1L), MPoly(1L), MPoly(0L)}, {MPoly(1L), MPoly(0L), MPoly(1L)});
}

LabeledGraph q_label_graph(const LabeledGraph& g) {
    const MPoly xm1 = MPoly(VarId::x()) - MPoly(1L);
    return stripped_with(g, {MPoly(1L), xm1, MPoly(0L)}, {MPoly(1L), MPoly(0L), xm1});
}

MPoly qn_via_qlambda(const LabeledGraph& g, const Limits& limits) {
    const MPoly q = qlambda_recursive(qn_label_graph(g), limits);
    return substitute(q, {{VarId::y(), MPoly(VarId::y()) - MPoly(1L)}});
}

}  // namespace interlace
