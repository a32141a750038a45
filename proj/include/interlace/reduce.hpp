#pragma once

// Vertex-removing reductions that preserve Q_lambda, split labels, and the
// split-reduction evaluation pipeline.

#include "interlace/bitrow.hpp"
#include "interlace/error.hpp"
#include "interlace/gf2.hpp"
#include "interlace/graph.hpp"
#include "interlace/interlace.hpp"
#include "interlace/numeric.hpp"
#include "interlace/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace interlace {

namespace detail {

template <typename R>
BasicLabeledGraph<R> replace_labels_and_drop(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w,
                                             LabelTriple<R> labels) {
    BasicLabeledGraph<R> out = g;
    out.set_labels(v, std::move(labels));
    return out.without(w);
}

template <typename R>
R ring_pow(const R& base, std::size_t k) {
    R out(1L);
    for (std::size_t i = 0; i < k; ++i) out = out * base;
    return out;
}

template <typename R>
void require_simple(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w, const char* what) {
    if (g.has_loops()) throw PreconditionError(std::string(what) + ": graph has loops (simplify first)");
    if (v >= g.size() || w >= g.size() || v == w) throw PreconditionError(std::string(what) + ": bad vertex pair");
}

}  // namespace detail

/// v, w nonadjacent with N(v) = N(w). Removes w and relabels v.
template <typename R>
BasicLabeledGraph<R> reduce_nonadjacent_twins(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w, const R& y) {
    detail::require_simple(g, v, w, "nonadjacent twins");
    if (g.adjacent(v, w) || g.neighbors(v) != g.neighbors(w))
        throw PreconditionError("nonadjacent twins: vertices are adjacent or have different neighbourhoods");
    const auto& a = g.labels(v);
    const auto& b = g.labels(w);
    return detail::replace_labels_and_drop(
        g, v, w,
        {a.phi * b.phi + a.psi * b.psi,
         a.phi * b.chi + a.chi * b.phi + a.chi * b.chi * y + a.chi * b.psi + a.psi * b.chi,
         a.phi * b.psi + a.psi * b.phi});
}

/// v, w adjacent with N(v)-w = N(w)-v. Removes w and relabels v.
template <typename R>
BasicLabeledGraph<R> reduce_adjacent_twins(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w, const R& y) {
    detail::require_simple(g, v, w, "adjacent twins");
    BitRow nv = g.neighbors(v), nw = g.neighbors(w);
    nv.reset(w);
    nw.reset(v);
    if (!g.adjacent(v, w) || nv != nw)
        throw PreconditionError("adjacent twins: vertices are nonadjacent or have different neighbourhoods");
    const auto& a = g.labels(v);
    const auto& b = g.labels(w);
    return detail::replace_labels_and_drop(
        g, v, w,
        {a.phi * b.phi + a.chi * b.chi,
         a.phi * b.chi + a.chi * b.phi,
         a.phi * b.psi + a.chi * b.psi + a.psi * b.phi + a.psi * b.chi + a.psi * b.psi * y});
}

/// w adjacent to v and to nothing else. Removes w and relabels v. The rule
/// is not symmetric in v and w: swapping their roles gives a wrong result
/// on P3. Agrees with the split labels of ({v,w},{v}).
template <typename R>
BasicLabeledGraph<R> reduce_pendant(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w, const R& y) {
    detail::require_simple(g, v, w, "pendant");
    if (!g.adjacent(v, w) || g.degree(w) != 1) throw PreconditionError("pendant: w must be adjacent to v only");
    const auto& a = g.labels(v);
    const auto& b = g.labels(w);
    return detail::replace_labels_and_drop(
        g, v, w,
        {a.phi * b.phi + a.phi * b.chi * y + a.chi * b.chi + a.psi * b.chi + a.phi * b.psi,
         a.chi * b.phi + a.psi * b.psi,
         a.psi * b.phi + a.chi * b.psi});
}

/// w isolated, v any other vertex: v's labels absorb Q_lambda({w}).
template <typename R>
BasicLabeledGraph<R> reduce_isolated(const BasicLabeledGraph<R>& g, std::size_t w, std::size_t v, const R& y) {
    detail::require_simple(g, v, w, "isolated");
    if (g.degree(w) != 0) throw PreconditionError("isolated: w has neighbours");
    const auto& b = g.labels(w);
    const R factor = b.phi + b.chi * y + b.psi;
    const auto& a = g.labels(v);
    return detail::replace_labels_and_drop(g, v, w, {a.phi * factor, a.chi * factor, a.psi * factor});
}

// ------------------------------------------------------------------- splits

/// H replaced by one vertex adjacent exactly to T. All sets index g.
struct Split {
    BitRow h;
    BitRow s;
    BitRow t;
};

/// Throws PreconditionError naming the first violated condition.
template <typename R>
void validate_split(const BasicLabeledGraph<R>& g, const Split& sp) {
    const std::size_t n = g.size();
    if (sp.h.size() != n || sp.s.size() != n || sp.t.size() != n)
        throw PreconditionError("split: vertex sets do not match the graph");
    if (sp.h.none()) throw PreconditionError("split: H is empty");
    BitRow s_minus_h = sp.s;
    s_minus_h.subtract(sp.h);
    if (s_minus_h.any()) throw PreconditionError("split: S is not inside H");
    if ((sp.t & sp.h).any()) throw PreconditionError("split: T meets H");
    for (std::size_t a = 0; a < n; ++a) {
        if (!sp.h.test(a)) continue;
        BitRow outside = g.neighbors(a);
        outside.subtract(sp.h);
        if (sp.s.test(a)) {
            if (outside != sp.t) throw PreconditionError("split: '" + g.id(a) + "' is not adjacent to exactly T outside H");
        } else if (outside.any()) {
            throw PreconditionError("split: '" + g.id(a) + "' outside S has neighbours outside H");
        }
    }
}

/// (phi(H,S), chi(H,S), psi(H,S)) by classifying all 3^|H| labeled
/// partitions with the three-matrix nullity lemma.
template <typename R>
LabelTriple<R> split_labels(const BasicLabeledGraph<R>& h, const BitRow& s, const R& y, std::size_t cap = 12) {
    if (h.size() > cap) throw CapExceeded("split labels", h.size(), cap);
    if (h.has_loops()) throw PreconditionError("split labels: H has loops (simplify first)");
    if (s.size() != h.size()) throw PreconditionError("split labels: S does not match H");
    const std::size_t n = h.size();
    LabelTriple<R> out{R(0L), R(0L), R(0L)};
    auto p = LabeledPartition::uniform(n, PartClass::phi);
    std::vector<std::size_t> s_pos;
    do {
        s_pos.clear();
        std::size_t k = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (p[v] == PartClass::phi) continue;
            if (s.test(v)) s_pos.push_back(k);
            ++k;
        }
        const auto tri = gf2::tri_type(partition_subgraph(h, p), s_pos);
        const R weight = partition_weight(h, p);
        R term = weight * detail::ring_pow(y, tri.type == 2 ? tri.plain - 1 : tri.plain);
        if (tri.type == 1) out.phi += term;
        else if (tri.type == 2) out.chi += term;
        else out.psi += term;
    } while (p.advance());
    return out;
}

/// H contracted to one vertex with the split labels, adjacent exactly to T,
/// placed at the position of the first H vertex. Its id is "h." followed by
/// the H ids joined with '.', made unique.
template <typename R>
BasicLabeledGraph<R> split_reduce(const BasicLabeledGraph<R>& g, const Split& sp, const R& y, std::size_t cap = 12) {
    validate_split(g, sp);
    const auto h = g.induced(sp.h);
    BitRow s_local(h.size());
    std::size_t k = 0;
    sp.h.for_each([&](std::size_t v) {
        if (sp.s.test(v)) s_local.set(k);
        ++k;
    });
    auto labels = split_labels(h, s_local, y, cap);

    std::string name = "h";
    sp.h.for_each([&](std::size_t v) { name += "." + g.id(v); });
    if (g.find(name) && !sp.h.test(*g.find(name))) {
        std::size_t suffix = 1;
        while (g.find(name + "." + std::to_string(suffix))) ++suffix;
        name += "." + std::to_string(suffix);
    }

    BasicLabeledGraph<R> out;
    std::vector<std::size_t> map(g.size(), BitRow::npos);
    std::size_t hs = BitRow::npos;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (sp.h.test(v)) {
            if (hs == BitRow::npos) hs = out.add_vertex(name, labels);
            continue;
        }
        map[v] = out.add_vertex(g.id(v), g.labels(v), g.looped(v));
    }
    for (auto [a, b] : g.edges())
        if (map[a] != BitRow::npos && map[b] != BitRow::npos) out.add_edge(map[a], map[b]);
    sp.t.for_each([&](std::size_t v) { out.add_edge(hs, map[v]); });
    return out;
}

enum class SplitPreference {
    least,     // smallest |H|, then lexicographically least vertex set
    greatest,  // smallest |H|, then lexicographically greatest
};

/// A split with 2 <= |H| <= s_max leaving at least one vertex outside H.
template <typename R>
std::optional<Split> find_split(const BasicLabeledGraph<R>& g, std::size_t s_max,
                                SplitPreference pref = SplitPreference::least) {
    if (s_max < 2) throw PreconditionError("find_split: s_max must be at least 2");
    const std::size_t n = g.size();
    if (n < 3) return std::nullopt;
    std::optional<std::vector<std::size_t>> best;
    std::set<std::vector<std::size_t>> visited;

    auto better = [&](const std::vector<std::size_t>& cand) {
        if (!best) return true;
        if (cand.size() != best->size()) return cand.size() < best->size();
        return pref == SplitPreference::least ? cand < *best : cand > *best;
    };
    auto outside_of = [&](std::size_t a, const BitRow& hmask) {
        BitRow o = g.neighbors(a);
        o.subtract(hmask);
        return o;
    };

    // Grows H by the sets forced by the first boundary disagreement.
    auto search = [&](auto&& self, std::vector<std::size_t> hv) -> void {
        if (hv.size() > s_max || hv.size() >= n) return;
        if (best && hv.size() > best->size()) return;
        std::sort(hv.begin(), hv.end());
        if (!visited.insert(hv).second) return;
        BitRow hmask(n);
        for (auto v : hv) hmask.set(v);
        std::optional<std::pair<std::size_t, BitRow>> ref;
        for (auto a : hv) {
            BitRow oa = outside_of(a, hmask);
            if (oa.none()) continue;
            if (!ref) {
                ref.emplace(a, std::move(oa));
                continue;
            }
            if (oa == ref->second) continue;
            BitRow diff = oa ^ ref->second;
            for (const BitRow* add : {&diff, &ref->second, &oa}) {
                if (hv.size() + add->count() > s_max) continue;
                auto next = hv;
                add->for_each([&](std::size_t v) { next.push_back(v); });
                self(self, std::move(next));
            }
            return;
        }
        if (better(hv)) best = hv;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) search(search, std::vector<std::size_t>{a, b});
    if (!best) return std::nullopt;

    Split sp{BitRow(n), BitRow(n), BitRow(n)};
    for (auto v : *best) sp.h.set(v);
    for (auto v : *best) {
        BitRow o = outside_of(v, sp.h);
        if (o.any()) {
            sp.s.set(v);
            sp.t = o;
        }
    }
    return sp;
}

// ------------------------------------------------------------------ pipeline

struct FptOptions {
    std::size_t s_max = 4;
    /// Largest connected residual finished by the three-term recursion.
    std::size_t residual_cap = 16;
    SplitPreference preference = SplitPreference::least;
};

struct FptStats {
    std::size_t reductions = 0;
    std::size_t residual = 0;    // vertices left after the last reduction
    std::size_t evaluations = 0; // pipeline runs (more than one when interpolating)
};

/// Q_lambda of a numerically labeled graph at a numeric y: split reductions
/// until none of width s_max remains, then the recursion on each component.
Rational fpt_qlambda(const NumericGraph& g, const Rational& y, const FptOptions& options = {},
                     FptStats* stats = nullptr);

struct FptResult {
    /// A number when every indeterminate was bound; otherwise the polynomial
    /// in the one unbound indeterminate, recovered by interpolation.
    std::variant<Rational, MPoly> value;
    FptStats stats;
};

/// Specializes labels for `kind`, binds them with `bindings`, and runs
/// fpt_qlambda. q needs x bound (x != 1); Courcelle needs every x_a, y_a
/// and u bound (u != 0). The indeterminate left free (y, or v for
/// Courcelle) is recovered by interpolation at 0..n.
FptResult evaluate_fpt(const LabeledGraph& g, PolynomialKind kind, const std::map<VarId, Rational>& bindings,
                       const FptOptions& options = {});

}  // namespace interlace
