#pragma once

#include "interlace/bitrow.hpp"
#include "interlace/error.hpp"
#include "interlace/gf2.hpp"
#include "interlace/numeric.hpp"
#include "interlace/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace interlace {

/// The three classes of a labeled partition (equivalently, the three
/// transitions at a vertex of a 4-regular graph).
enum class PartClass : std::uint8_t { phi = 0, chi = 1, psi = 2 };

std::string_view to_string(PartClass c) noexcept;

template <typename R>
struct LabelTriple {
    R phi;
    R chi;
    R psi;

    const R& operator[](PartClass c) const noexcept {
        return c == PartClass::phi ? phi : (c == PartClass::chi ? chi : psi);
    }
    R& operator[](PartClass c) noexcept { return c == PartClass::phi ? phi : (c == PartClass::chi ? chi : psi); }

    friend bool operator==(const LabelTriple&, const LabelTriple&) = default;
};

/// phi_<id>, chi_<id>, psi_<id>.
LabelTriple<MPoly> natural_labels(std::string_view id);

/// Simple graph with optional loops and a label triple per vertex. Vertex ids
/// are strings; algorithms work with dense indices in insertion order.
/// Adjacency is irreflexive; loops are stored separately.
template <typename R>
class BasicLabeledGraph {
public:
    using Label = R;

    BasicLabeledGraph() = default;

    std::size_t add_vertex(std::string id, LabelTriple<R> labels, bool loop = false) {
        if (index_.contains(id)) throw PreconditionError("duplicate vertex '" + id + "'");
        const std::size_t i = ids_.size();
        index_.emplace(id, i);
        ids_.push_back(std::move(id));
        for (auto& row : adj_) row.resize(i + 1);
        adj_.emplace_back(i + 1);
        loops_.resize(i + 1);
        if (loop) loops_.set(i);
        labels_.push_back(std::move(labels));
        return i;
    }

    void add_edge(std::size_t a, std::size_t b) {
        check(a);
        check(b);
        if (a == b) throw PreconditionError("self-adjacency on '" + ids_[a] + "': use set_loop");
        adj_[a].set(b);
        adj_[b].set(a);
    }
    void add_edge(std::string_view a, std::string_view b) { add_edge(index(a), index(b)); }

    void set_loop(std::size_t v, bool looped) {
        check(v);
        loops_.set(v, looped);
    }

    void set_labels(std::size_t v, LabelTriple<R> labels) {
        check(v);
        labels_[v] = std::move(labels);
    }

    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    const std::string& id(std::size_t v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const noexcept { return ids_; }

    std::optional<std::size_t> find(std::string_view id) const {
        auto it = index_.find(std::string(id));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index(std::string_view id) const {
        if (auto i = find(id)) return *i;
        throw PreconditionError("unknown vertex '" + std::string(id) + "'");
    }

    bool adjacent(std::size_t a, std::size_t b) const noexcept { return adj_[a].test(b); }
    const BitRow& neighbors(std::size_t v) const noexcept { return adj_[v]; }
    std::size_t degree(std::size_t v) const noexcept { return adj_[v].count(); }
    bool looped(std::size_t v) const noexcept { return loops_.test(v); }
    bool has_loops() const noexcept { return loops_.any(); }
    const BitRow& loops() const noexcept { return loops_; }
    const LabelTriple<R>& labels(std::size_t v) const noexcept { return labels_[v]; }
    const std::vector<LabelTriple<R>>& all_labels() const noexcept { return labels_; }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < size(); ++a)
            adj_[a].for_each([&](std::size_t b) {
                if (a < b) out.emplace_back(a, b);
            });
        return out;
    }

    /// Toggles adjacency (a != b).
    void toggle_edge(std::size_t a, std::size_t b) noexcept {
        adj_[a].flip(b);
        adj_[b].flip(a);
    }

    /// Replaces the open neighbourhood of v by `nbrs` (v itself ignored),
    /// keeping symmetry.
    void set_neighbors(std::size_t v, const BitRow& nbrs) {
        adj_[v].for_each([&](std::size_t a) { adj_[a].reset(v); });
        adj_[v] = nbrs;
        adj_[v].reset(v);
        adj_[v].for_each([&](std::size_t a) { adj_[a].set(v); });
    }

    /// Subgraph induced by `keep` (vertex order preserved).
    BasicLabeledGraph induced(const BitRow& keep) const {
        BasicLabeledGraph out;
        std::vector<std::size_t> map(size(), BitRow::npos);
        keep.for_each([&](std::size_t v) { map[v] = out.add_vertex(ids_[v], labels_[v], looped(v)); });
        keep.for_each([&](std::size_t v) {
            adj_[v].for_each([&](std::size_t w) {
                if (v < w && map[w] != BitRow::npos) out.add_edge(map[v], map[w]);
            });
        });
        return out;
    }

    BasicLabeledGraph without(std::size_t v) const {
        check(v);
        BitRow keep(size());
        for (std::size_t i = 0; i < size(); ++i)
            if (i != v) keep.set(i);
        return induced(keep);
    }

    /// Same structure with labels mapped through f.
    template <typename F>
    auto map_labels(F&& f) const -> BasicLabeledGraph<decltype(f(std::declval<const R&>()))> {
        using S = decltype(f(std::declval<const R&>()));
        BasicLabeledGraph<S> out;
        for (std::size_t v = 0; v < size(); ++v)
            out.add_vertex(ids_[v], LabelTriple<S>{f(labels_[v].phi), f(labels_[v].chi), f(labels_[v].psi)},
                           looped(v));
        for (auto [a, b] : edges()) out.add_edge(a, b);
        return out;
    }

    friend bool operator==(const BasicLabeledGraph& a, const BasicLabeledGraph& b) {
        return a.ids_ == b.ids_ && a.adj_ == b.adj_ && a.loops_ == b.loops_ && a.labels_ == b.labels_;
    }

private:
    void check(std::size_t v) const {
        if (v >= size()) throw PreconditionError("vertex index " + std::to_string(v) + " out of range");
    }

    std::vector<std::string> ids_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<BitRow> adj_;
    BitRow loops_;
    std::vector<LabelTriple<R>> labels_;
};

using LabeledGraph = BasicLabeledGraph<MPoly>;
using NumericGraph = BasicLabeledGraph<Rational>;

/// Graph with natural symbolic labels on the given ids and edges.
LabeledGraph make_graph(const std::vector<std::string>& ids,
                        const std::vector<std::pair<std::string, std::string>>& edges);

/// Assignment of every vertex to one of phi, chi, psi.
struct LabeledPartition {
    std::vector<PartClass> cls;

    static LabeledPartition uniform(std::size_t n, PartClass c) { return {std::vector<PartClass>(n, c)}; }
    /// Base-3 digits of `code`, vertex 0 least significant.
    static LabeledPartition from_code(std::size_t n, std::uint64_t code);

    std::size_t size() const noexcept { return cls.size(); }
    PartClass operator[](std::size_t v) const noexcept { return cls[v]; }
    std::size_t count(PartClass c) const noexcept {
        return static_cast<std::size_t>(std::count(cls.begin(), cls.end(), c));
    }
    /// Steps to the next assignment in odometer order (vertex 0 fastest).
    /// Returns false after the last one, leaving the all-phi partition.
    bool advance(bool psi_allowed = true) noexcept;

    friend bool operator==(const LabeledPartition&, const LabeledPartition&) = default;
    friend auto operator<=>(const LabeledPartition&, const LabeledPartition&) = default;
};

std::string to_string(const LabeledPartition& p);

// ----------------------------------------------------------------- transforms

/// Toggles adjacency between each pair of distinct neighbours of v. Labels
/// and loops untouched.
template <typename R>
BasicLabeledGraph<R> local_complement_simple(const BasicLabeledGraph<R>& g, std::size_t v) {
    if (v >= g.size()) throw PreconditionError("local complement: vertex out of range");
    if (g.looped(v)) throw PreconditionError("local complement at looped vertex '" + g.id(v) + "'");
    BasicLabeledGraph<R> out = g;
    const BitRow& nbrs = g.neighbors(v);
    nbrs.for_each([&](std::size_t a) {
        nbrs.for_each([&](std::size_t b) {
            if (a < b) out.toggle_edge(a, b);
        });
    });
    return out;
}

/// Simple local complementation at v plus phi<->psi at v and chi<->psi at
/// each neighbour of v. Requires a loopless graph.
template <typename R>
BasicLabeledGraph<R> labeled_local_complement(const BasicLabeledGraph<R>& g, std::size_t v) {
    if (g.has_loops()) throw PreconditionError("labeled local complement needs a loopless graph (simplify first)");
    BasicLabeledGraph<R> out = local_complement_simple(g, v);
    auto lv = g.labels(v);
    std::swap(lv.phi, lv.psi);
    out.set_labels(v, std::move(lv));
    g.neighbors(v).for_each([&](std::size_t w) {
        auto lw = g.labels(w);
        std::swap(lw.chi, lw.psi);
        out.set_labels(w, std::move(lw));
    });
    return out;
}

/// Labeled pivot on the edge vw in closed form: phi<->chi at v and w,
/// toggle the pairs (a,b) with a in N(v), b in N(w), a != b, a,b not in
/// {v,w}, not both common neighbours; then exchange the neighbourhoods of
/// v and w.
template <typename R>
BasicLabeledGraph<R> labeled_pivot(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w) {
    if (g.has_loops()) throw PreconditionError("labeled pivot needs a loopless graph (simplify first)");
    if (v >= g.size() || w >= g.size() || v == w || !g.adjacent(v, w))
        throw PreconditionError("labeled pivot: vertices are not adjacent");
    BitRow nv = g.neighbors(v), nw = g.neighbors(w);
    nv.reset(w);
    nw.reset(v);
    const BitRow common = nv & nw;
    BitRow only_v = nv;
    only_v.subtract(common);
    BitRow only_w = nw;
    only_w.subtract(common);

    BasicLabeledGraph<R> out = g;
    auto toggle_between = [&](const BitRow& a_set, const BitRow& b_set) {
        a_set.for_each([&](std::size_t a) { b_set.for_each([&](std::size_t b) { out.toggle_edge(a, b); }); });
    };
    toggle_between(only_v, only_w);
    toggle_between(only_v, common);
    toggle_between(only_w, common);

    BitRow new_v = nw, new_w = nv;
    new_v.set(w);
    new_w.set(v);
    out.set_neighbors(v, new_v);
    out.set_neighbors(w, new_w);

    auto lv = g.labels(v);
    std::swap(lv.phi, lv.chi);
    out.set_labels(v, std::move(lv));
    auto lw = g.labels(w);
    std::swap(lw.phi, lw.chi);
    out.set_labels(w, std::move(lw));
    return out;
}

/// ((G^w)^v)^w by three labeled local complements. Equal to labeled_pivot.
template <typename R>
BasicLabeledGraph<R> labeled_pivot_by_composition(const BasicLabeledGraph<R>& g, std::size_t v, std::size_t w) {
    if (v >= g.size() || w >= g.size() || v == w || !g.adjacent(v, w))
        throw PreconditionError("labeled pivot: vertices are not adjacent");
    return labeled_local_complement(labeled_local_complement(labeled_local_complement(g, w), v), w);
}

/// Swaps chi and psi at every looped vertex and removes all loops.
template <typename R>
BasicLabeledGraph<R> simplify(const BasicLabeledGraph<R>& g) {
    BasicLabeledGraph<R> out = g;
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (!g.looped(v)) continue;
        auto l = g.labels(v);
        std::swap(l.chi, l.psi);
        out.set_labels(v, std::move(l));
        out.set_loop(v, false);
    }
    return out;
}

/// Stand-in for the loop-toggling local complementation G^v of looped
/// graphs: labeled local complement of the simplification. No formula here
/// depends on it.
template <typename R>
BasicLabeledGraph<R> abs_local_complement(const BasicLabeledGraph<R>& g, std::size_t v) {
    return labeled_local_complement(simplify(g), v);
}

template <typename R>
BasicLabeledGraph<R> induced(const BasicLabeledGraph<R>& g, std::span<const std::size_t> keep) {
    BitRow mask(g.size());
    for (auto v : keep) {
        if (v >= g.size()) throw PreconditionError("induced: vertex index out of range");
        mask.set(v);
    }
    return g.induced(mask);
}

/// G with loop status flipped exactly on `flip`.
template <typename R>
BasicLabeledGraph<R> toggle_loops(const BasicLabeledGraph<R>& g, std::span<const std::size_t> flip) {
    BasicLabeledGraph<R> out = g;
    for (auto v : flip) {
        if (v >= g.size()) throw PreconditionError("toggle_loops: vertex index out of range");
        out.set_loop(v, !out.looped(v));
    }
    return out;
}

// ----------------------------------------------------------------- partitions

/// Adjacency matrix of G_P: phi-class vertices removed, psi-class vertices
/// looped, chi-class vertices unlooped; rows in vertex order. Existing loops
/// of g are ignored (the partition decides the diagonal).
template <typename R>
gf2::Gf2Matrix partition_subgraph(const BasicLabeledGraph<R>& g, const LabeledPartition& p) {
    if (p.size() != g.size()) throw PreconditionError("partition is not total on the graph");
    std::vector<std::size_t> pos(g.size(), BitRow::npos);
    std::size_t k = 0;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (p[v] != PartClass::phi) pos[v] = k++;
    gf2::Gf2Builder b(k);
    for (std::size_t v = 0; v < g.size(); ++v) {
        if (pos[v] == BitRow::npos) continue;
        if (p[v] == PartClass::psi) b.set_diagonal(pos[v]);
        g.neighbors(v).for_each([&](std::size_t w) {
            if (w > v && pos[w] != BitRow::npos) b.set(pos[v], pos[w]);
        });
    }
    return std::move(b).build();
}

/// P_lambda^v: phi<->psi membership at v, chi<->psi at each neighbour of v.
template <typename R>
LabeledPartition partition_local_complement(const LabeledPartition& p, const BasicLabeledGraph<R>& g, std::size_t v) {
    if (p.size() != g.size()) throw PreconditionError("partition is not total on the graph");
    if (v >= g.size()) throw PreconditionError("partition local complement: vertex out of range");
    LabeledPartition out = p;
    if (out.cls[v] == PartClass::phi) out.cls[v] = PartClass::psi;
    else if (out.cls[v] == PartClass::psi) out.cls[v] = PartClass::phi;
    g.neighbors(v).for_each([&](std::size_t w) {
        if (out.cls[w] == PartClass::chi) out.cls[w] = PartClass::psi;
        else if (out.cls[w] == PartClass::psi) out.cls[w] = PartClass::chi;
    });
    return out;
}

/// Product of the labels selected by p.
template <typename R>
R partition_weight(const BasicLabeledGraph<R>& g, const LabeledPartition& p) {
    R w(1L);
    for (std::size_t v = 0; v < g.size(); ++v) w = w * g.labels(v)[p[v]];
    return w;
}

}  // namespace interlace
