#pragma once

// Euler systems of 4-regular graphs, encoded by double occurrence words.
//
// Trace convention. Position p of a word has an incoming half-edge in_p (end
// of the edge from position p-1) and an outgoing one out_p (start of the edge
// to position p+1), cyclically. For a vertex with positions i and j:
//   phi pairs (in_i,out_i), (in_j,out_j)   -- follow the word
//   chi pairs (in_i,out_j), (in_j,out_i)   -- the other direction-consistent pairing
//   psi pairs (in_i,in_j),  (out_i,out_j)  -- direction-inconsistent
// Two cyclically adjacent occurrences encode a loop of F; such words are
// traced by the same rule.

#include "interlace/graph.hpp"
#include "interlace/interlace.hpp"
#include "interlace/poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace interlace {

/// One of the three transitions at each vertex. Same shape as a labeled
/// partition of the interlacement graph.
using TransitionChoice = LabeledPartition;

class EulerSystem {
public:
    EulerSystem() = default;

    /// Each word is a sequence of vertex ids. Every id must occur exactly
    /// twice, in a single word; words must be nonempty. Vertices are indexed
    /// by first appearance. Natural symbolic labels. Throws PreconditionError.
    static EulerSystem from_words(const std::vector<std::vector<std::string>>& words,
                                  const std::vector<bool>& oriented = {});

    /// Each string is either comma-separated ids ("a1,b,a1,b") or, without
    /// commas, one id per character ("abab").
    static EulerSystem from_dow(const std::vector<std::string>& words, const std::vector<bool>& oriented = {});

    std::size_t size() const noexcept { return ids_.size(); }
    const std::string& id(std::size_t v) const { return ids_[v]; }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    std::optional<std::size_t> find(std::string_view id) const;
    std::size_t index(std::string_view id) const;

    const std::vector<std::vector<std::size_t>>& words() const noexcept { return words_; }
    bool oriented(std::size_t component) const { return oriented_[component]; }
    bool all_oriented() const noexcept;
    /// Vertex-free closed components left behind by detachments.
    std::size_t free_circles() const noexcept { return free_circles_; }
    /// c(F): number of connected components.
    std::size_t component_count() const noexcept { return words_.size() + free_circles_; }

    const LabelTriple<MPoly>& labels(std::size_t v) const { return labels_[v]; }
    void set_labels(std::size_t v, LabelTriple<MPoly> labels);

    /// Component index and the two positions of v in its word.
    struct Occurrence {
        std::size_t component;
        std::size_t first;
        std::size_t second;
    };
    Occurrence occurrence(std::size_t v) const;

    /// Both occurrences cyclically adjacent: v carries a loop of F.
    bool looped(std::size_t v) const;

    /// Words minimized over rotation and reversal (by id sequence), sorted;
    /// labels attached to vertices. Two systems are the same labeled Euler
    /// system of the same graph iff their keys match. Labels are encoded
    /// structurally, so keys are only comparable within one process.
    std::string canonical_key() const;

    /// Id-based words, one per line, in the DOW text format.
    std::string to_text() const;

private:
    friend struct EulerSystemAccess;
    std::vector<std::string> ids_;
    std::vector<std::vector<std::size_t>> words_;
    std::vector<bool> oriented_;
    std::vector<LabelTriple<MPoly>> labels_;
    std::size_t free_circles_ = 0;
};

/// DOW text: one component per line, ids comma-separated or single
/// characters; an optional trailing token "oriented" marks the component as
/// oriented; '#' starts a comment. Throws ParseError with line/column.
EulerSystem parse_dow_text(std::string_view text);

/// Replaces labels with those in a graph JSON document (vertices not listed
/// keep theirs; unknown ids are an error).
EulerSystem with_labels_from(const EulerSystem& c, const LabeledGraph& label_source);

bool interlaced(const EulerSystem& c, std::size_t v, std::size_t w);

/// Interlacement graph with the system's labels.
LabeledGraph interlacement(const EulerSystem& c);

enum class KappaWalk { first, second };

/// C*v: reverse one v-to-v walk (by default the segment strictly between
/// the two occurrences), phi<->psi at v, chi<->psi at vertices interlaced
/// with v.
EulerSystem kappa_transform(const EulerSystem& c, std::size_t v, KappaWalk walk = KappaWalk::first);

/// C*v*w*v. Throws PreconditionError unless v and w are interlaced.
EulerSystem transpose(const EulerSystem& c, std::size_t v, std::size_t w);

/// Number of circuits |P| of the circuit partition selected by t.
std::size_t trace_partition(const EulerSystem& c, const TransitionChoice& t);

/// Sum over all 3^n transition choices of label products times
/// y^(|P| - c(F)).
MPoly pi_generating_function(const EulerSystem& c, const Limits& limits = {});

/// Sum over the 2^n phi/chi choices. Every component must be oriented.
MPoly pi_directed(const EulerSystem& c, const Limits& limits = {});

/// Detachment at v along the given transition of C.
///   phi: delete v.
///   psi: kappa at v, then delete v.
///   chi: v interlaced with some w (lowest index): C*w*v*w, then delete v;
///        otherwise split v's word at v into two words.
/// Empty words become free circles.
EulerSystem detach(const EulerSystem& c, std::size_t v, PartClass kind);

/// Every labeled Euler system reachable from c by kappa transforms, in
/// canonical-key order. Throws CapExceeded above `vertex_cap` vertices.
std::vector<EulerSystem> euler_closure(const EulerSystem& c, std::size_t vertex_cap = 10);

/// For a system reached from natural labels: the transition of the original
/// system that this one follows at each vertex (read off its phi labels).
TransitionChoice followed_transitions(const EulerSystem& original, const EulerSystem& reached);

/// psi label zeroed at every vertex; every component marked oriented.
EulerSystem zero_for_digraph(const EulerSystem& c);

/// Zeroes the designated label at each listed vertex. Throws
/// PreconditionError for unknown or repeated vertices.
EulerSystem zero_for_T(const EulerSystem& c, const std::vector<std::pair<std::size_t, PartClass>>& t);

/// Both sides of the looped-circle-graph interpretations of q_N and q.
struct CircleInterpretation {
    LabeledGraph graph;  // interlacement graph with loops on L
    MPoly qn_graph;
    MPoly qn_circuits;
    MPoly q_graph;
    MPoly q_circuits;
    bool equal() const { return qn_graph == qn_circuits && q_graph == q_circuits; }
};

CircleInterpretation circle_interpretations(const EulerSystem& c, const std::vector<std::size_t>& looped,
                                            const Limits& limits = {});

}  // namespace interlace
