#include "interlace/fourreg.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace interlace {

struct EulerSystemAccess {
    static std::vector<std::vector<std::size_t>>& words(EulerSystem& c) { return c.words_; }
    static std::vector<bool>& oriented(EulerSystem& c) { return c.oriented_; }
    static std::size_t& free_circles(EulerSystem& c) { return c.free_circles_; }

    /// Deletes both occurrences of v and the vertex itself; a word left
    /// empty becomes a free circle.
    static void remove_vertex(EulerSystem& c, std::size_t v) {
        const auto occ = c.occurrence(v);
        auto& word = c.words_[occ.component];
        word.erase(std::remove(word.begin(), word.end(), v), word.end());
        if (word.empty()) {
            c.words_.erase(c.words_.begin() + static_cast<std::ptrdiff_t>(occ.component));
            c.oriented_.erase(c.oriented_.begin() + static_cast<std::ptrdiff_t>(occ.component));
            ++c.free_circles_;
        }
        for (auto& w : c.words_)
            for (auto& x : w)
                if (x > v) --x;
        c.ids_.erase(c.ids_.begin() + static_cast<std::ptrdiff_t>(v));
        c.labels_.erase(c.labels_.begin() + static_cast<std::ptrdiff_t>(v));
    }
};

namespace {

using Access = EulerSystemAccess;

std::vector<std::string> split_word(std::string_view text) {
    std::vector<std::string> out;
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) out.emplace_back(1, ch);
        return out;
    }
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.emplace_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// Lexicographically least id sequence among rotations and reversals.
/// Least rotation or reflection of a cyclic word of ranks.
std::vector<std::size_t> minimal_rotation(const std::vector<std::size_t>& word) {
    const std::size_t n = word.size();
    std::vector<std::size_t> best = word;
    std::vector<std::size_t> cand(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t i = 0; i < n; ++i) cand[i] = dir ? word[(r + n - i) % n] : word[(r + i) % n];
            if (cand < best) best.swap(cand);
        }
    }
    return best;
}

/// Compact structural encoding of a polynomial (process-local: uses the
/// interned variable ids).
void append_poly_key(std::string& key, const MPoly& p) {
    char buf[32];
    for (const auto& t : p.terms()) {
        if (t.coef.fits_slong_p()) {
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, t.coef.get_si());
            key.append(buf, end);
        } else {
            key += t.coef.get_str();
        }
        for (const auto& [v, e] : t.monomial.factors()) {
            key += '*';
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v.packed(), 16);
            key.append(buf, end);
            if (e != 1) {
                key += '^';
                auto [end2, ec2] = std::to_chars(buf, buf + sizeof buf, e);
                key.append(buf, end2);
            }
        }
        key += '+';
    }
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Half-edge layout for tracing: for vertex v, the global indices of
/// in/out at its two occurrences, plus the fixed edge pairing.
struct HalfEdges {
    std::size_t count = 0;
    std::vector<std::array<std::size_t, 4>> at;  // in_i, out_i, in_j, out_j
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    explicit HalfEdges(const EulerSystem& c) : at(c.size()) {
        std::vector<int> seen(c.size(), 0);
        for (const auto& word : c.words()) {
            const std::size_t base = count, len = word.size();
            for (std::size_t p = 0; p < len; ++p) {
                edges.emplace_back(base + 2 * p + 1, base + 2 * ((p + 1) % len));
                const std::size_t v = word[p];
                at[v][2 * static_cast<std::size_t>(seen[v])] = base + 2 * p;
                at[v][2 * static_cast<std::size_t>(seen[v]) + 1] = base + 2 * p + 1;
                ++seen[v];
            }
            count += 2 * len;
        }
    }

    std::size_t trace(const TransitionChoice& t, std::size_t free_circles) const {
        UnionFind uf(count);
        for (auto [a, b] : edges) uf.unite(a, b);
        for (std::size_t v = 0; v < at.size(); ++v) {
            const auto [in_i, out_i, in_j, out_j] = at[v];
            switch (t[v]) {
                case PartClass::phi:
                    uf.unite(in_i, out_i);
                    uf.unite(in_j, out_j);
                    break;
                case PartClass::chi:
                    uf.unite(in_i, out_j);
                    uf.unite(in_j, out_i);
                    break;
                case PartClass::psi:
                    uf.unite(in_i, in_j);
                    uf.unite(out_i, out_j);
                    break;
            }
        }
        std::size_t circuits = free_circles;
        for (std::size_t h = 0; h < count; ++h)
            if (uf.find(h) == h) ++circuits;
        return circuits;
    }
};

void swap_labels(LabelTriple<MPoly>& l, PartClass a, PartClass b) { std::swap(l[a], l[b]); }

}  // namespace

// ------------------------------------------------------------------ EulerSystem

EulerSystem EulerSystem::from_words(const std::vector<std::vector<std::string>>& words,
                                    const std::vector<bool>& oriented) {
    if (!oriented.empty() && oriented.size() != words.size())
        throw PreconditionError("orientation flags must match the number of words");
    EulerSystem c;
    struct Seen {
        std::size_t index;
        std::size_t word;
        int count;
    };
    std::unordered_map<std::string, Seen> seen;
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (words[k].empty()) throw PreconditionError("empty word in Euler system");
        std::vector<std::size_t> word;
        for (const auto& id : words[k]) {
            auto it = seen.find(id);
            if (it == seen.end()) {
                c.labels_.push_back(natural_labels(id));  // validates the id
                it = seen.emplace(id, Seen{c.ids_.size(), k, 0}).first;
                c.ids_.push_back(id);
            }
            if (it->second.word != k)
                throw PreconditionError("vertex '" + id + "' occurs in two different words");
            if (++it->second.count > 2) throw PreconditionError("vertex '" + id + "' occurs more than twice");
            word.push_back(it->second.index);
        }
        c.words_.push_back(std::move(word));
        c.oriented_.push_back(oriented.empty() ? false : static_cast<bool>(oriented[k]));
    }
    for (const auto& [id, info] : seen)
        if (info.count != 2) throw PreconditionError("vertex '" + id + "' occurs only once");
    return c;
}

EulerSystem EulerSystem::from_dow(const std::vector<std::string>& words, const std::vector<bool>& oriented) {
    std::vector<std::vector<std::string>> split;
    for (const auto& w : words) split.push_back(split_word(w));
    return from_words(split, oriented);
}

std::optional<std::size_t> EulerSystem::find(std::string_view id) const {
    for (std::size_t v = 0; v < ids_.size(); ++v)
        if (ids_[v] == id) return v;
    return std::nullopt;
}

std::size_t EulerSystem::index(std::string_view id) const {
    if (auto v = find(id)) return *v;
    throw PreconditionError("unknown vertex '" + std::string(id) + "'");
}

bool EulerSystem::all_oriented() const noexcept {
    return std::all_of(oriented_.begin(), oriented_.end(), [](bool b) { return b; });
}

void EulerSystem::set_labels(std::size_t v, LabelTriple<MPoly> labels) {
    if (v >= size()) throw PreconditionError("vertex index out of range");
    labels_[v] = std::move(labels);
}

EulerSystem::Occurrence EulerSystem::occurrence(std::size_t v) const {
    if (v >= size()) throw PreconditionError("vertex index " + std::to_string(v) + " out of range");
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const auto& w = words_[k];
        const auto first = std::find(w.begin(), w.end(), v);
        if (first == w.end()) continue;
        const auto second = std::find(first + 1, w.end(), v);
        return {k, static_cast<std::size_t>(first - w.begin()), static_cast<std::size_t>(second - w.begin())};
    }
    throw InternalError("vertex without occurrences");
}

bool EulerSystem::looped(std::size_t v) const {
    const auto occ = occurrence(v);
    const std::size_t len = words_[occ.component].size();
    return occ.second == occ.first + 1 || (occ.first == 0 && occ.second == len - 1);
}

std::string EulerSystem::canonical_key() const {
    // Compare words by the rank of each id in sorted id order; this is the
    // same order as comparing the id strings.
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ids_[a] < ids_[b]; });
    std::vector<std::size_t> rank(size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

    std::vector<std::pair<std::vector<std::size_t>, bool>> comps;
    comps.reserve(words_.size());
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::vector<std::size_t> w;
        w.reserve(words_[k].size());
        for (auto v : words_[k]) w.push_back(rank[v]);
        comps.emplace_back(minimal_rotation(w), oriented_[k]);
    }
    std::sort(comps.begin(), comps.end());
    std::string key;
    for (const auto& [w, o] : comps) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) key += ',';
            key += ids_[order[w[i]]];
        }
        key += o ? "+|" : "|";
    }
    key += std::to_string(free_circles_) + "#";
    for (auto v : order) {
        key += ids_[v];
        key += ':';
        append_poly_key(key, labels_[v].phi);
        key += ';';
        append_poly_key(key, labels_[v].chi);
        key += ';';
        append_poly_key(key, labels_[v].psi);
        key += '#';
    }
    return key;
}

std::string EulerSystem::to_text() const {
    const bool short_ids = std::all_of(ids_.begin(), ids_.end(), [](const auto& s) { return s.size() == 1; });
    std::string out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        for (std::size_t i = 0; i < words_[k].size(); ++i) {
            if (i && !short_ids) out += ",";
            out += ids_[words_[k][i]];
        }
        if (oriented_[k]) out += " oriented";
        out += "\n";
    }
    return out;
}

EulerSystem parse_dow_text(std::string_view text) {
    std::vector<std::vector<std::string>> words;
    std::vector<bool> oriented;
    std::size_t lineno = 0, start = 0;
    while (start <= text.size()) {
        const auto nl = text.find('\n', start);
        std::string line(text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start));
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<std::pair<std::string, std::size_t>> tokens;
        std::istringstream in(line);
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t s = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.emplace_back(line.substr(s, i - s), s + 1);
        }
        if (tokens.empty()) continue;
        if (tokens.size() > 2 || (tokens.size() == 2 && tokens[1].first != "oriented"))
            throw ParseError("expected '<word> [oriented]'", lineno, tokens[1].second);
        auto ids = split_word(tokens[0].first);
        std::size_t col = tokens[0].second;
        for (const auto& id : ids) {
            try {
                (void)VarId::phi(id);
            } catch (const PreconditionError& e) {
                throw ParseError(e.what(), lineno, col);
            }
            col += id.size() + (tokens[0].first.find(',') == std::string::npos ? 0 : 1);
        }
        words.push_back(std::move(ids));
        oriented.push_back(tokens.size() == 2);
    }
    try {
        return EulerSystem::from_words(words, oriented);
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("DOW: ") + e.what());
    }
}

EulerSystem with_labels_from(const EulerSystem& c, const LabeledGraph& label_source) {
    EulerSystem out = c;
    for (std::size_t v = 0; v < label_source.size(); ++v) {
        const auto target = c.find(label_source.id(v));
        if (!target) throw PreconditionError("label file names unknown vertex '" + label_source.id(v) + "'");
        out.set_labels(*target, label_source.labels(v));
    }
    return out;
}

// ---------------------------------------------------------------- operations

bool interlaced(const EulerSystem& c, std::size_t v, std::size_t w) {
    if (v == w) return false;
    const auto ov = c.occurrence(v), ow = c.occurrence(w);
    if (ov.component != ow.component) return false;
    const bool a = ov.first < ow.first && ow.first < ov.second;
    const bool b = ov.first < ow.second && ow.second < ov.second;
    return a != b;
}

LabeledGraph interlacement(const EulerSystem& c) {
    LabeledGraph g;
    for (std::size_t v = 0; v < c.size(); ++v) g.add_vertex(c.id(v), c.labels(v));
    for (std::size_t v = 0; v < c.size(); ++v)
        for (std::size_t w = v + 1; w < c.size(); ++w)
            if (interlaced(c, v, w)) g.add_edge(v, w);
    return g;
}

EulerSystem kappa_transform(const EulerSystem& c, std::size_t v, KappaWalk walk) {
    const auto occ = c.occurrence(v);
    EulerSystem out = c;
    auto& word = Access::words(out)[occ.component];
    const std::size_t len = word.size();
    std::vector<std::size_t> positions;
    if (walk == KappaWalk::first) {
        for (std::size_t p = occ.first + 1; p < occ.second; ++p) positions.push_back(p);
    } else {
        for (std::size_t p = occ.second + 1; p < len; ++p) positions.push_back(p);
        for (std::size_t p = 0; p < occ.first; ++p) positions.push_back(p);
    }
    for (std::size_t i = 0, j = positions.size(); i + 1 < j; ++i, --j) std::swap(word[positions[i]], word[positions[j - 1]]);

    auto lv = c.labels(v);
    swap_labels(lv, PartClass::phi, PartClass::psi);
    out.set_labels(v, std::move(lv));
    for (std::size_t w = 0; w < c.size(); ++w)
        if (interlaced(c, v, w)) {
            auto lw = c.labels(w);
            swap_labels(lw, PartClass::chi, PartClass::psi);
            out.set_labels(w, std::move(lw));
        }
    return out;
}

EulerSystem transpose(const EulerSystem& c, std::size_t v, std::size_t w) {
    if (!interlaced(c, v, w)) throw PreconditionError("transpose: vertices are not interlaced");
    return kappa_transform(kappa_transform(kappa_transform(c, v), w), v);
}

std::size_t trace_partition(const EulerSystem& c, const TransitionChoice& t) {
    if (t.size() != c.size()) throw PreconditionError("transition choice is not total");
    return HalfEdges(c).trace(t, c.free_circles());
}

namespace {

MPoly circuit_sum(const EulerSystem& c, bool psi_allowed) {
    const std::size_t n = c.size();
    const HalfEdges he(c);
    const auto base = c.component_count();
    const auto top = static_cast<std::uint8_t>(psi_allowed ? 2 : 1);
    std::vector<std::uint8_t> digits(n, 0);
    std::vector<MPoly> prefix(n + 1, MPoly(1L));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * c.labels(i).phi;
    std::vector<detail::SumAccumulator<MPoly>> by_excess(n + 2);
    TransitionChoice t = TransitionChoice::uniform(n, PartClass::phi);
    for (;;) {
        for (std::size_t v = 0; v < n; ++v) t.cls[v] = static_cast<PartClass>(digits[v]);
        const std::size_t circuits = he.trace(t, c.free_circles());
        if (circuits < base) throw InternalError("fewer circuits than components");
        by_excess.at(circuits - base).add(prefix[n]);
        const std::size_t changed = detail::odometer_step(digits, top);
        if (changed == n) break;
        for (std::size_t j = changed; j < n; ++j)
            prefix[j + 1] = prefix[j] * c.labels(j)[static_cast<PartClass>(digits[j])];
    }
    MPoly out;
    MPoly ypow(1L);
    for (auto& acc : by_excess) {
        out += ypow * acc.take();
        ypow *= MPoly(VarId::y());
    }
    return out;
}

}  // namespace

MPoly pi_generating_function(const EulerSystem& c, const Limits& limits) {
    detail::check_cap(PolynomialKind::qlambda, c.size(), detail::effective_cap<MPoly>(PolynomialKind::qlambda, limits));
    return circuit_sum(c, true);
}

MPoly pi_directed(const EulerSystem& c, const Limits& limits) {
    if (!c.all_oriented()) throw PreconditionError("directed generating function needs every component oriented");
    detail::check_cap(PolynomialKind::qlambda2, c.size(),
                      detail::effective_cap<MPoly>(PolynomialKind::qlambda2, limits));
    return circuit_sum(c, false);
}

EulerSystem detach(const EulerSystem& c, std::size_t v, PartClass kind) {
    const auto occ = c.occurrence(v);  // validates v
    switch (kind) {
        case PartClass::phi: {
            EulerSystem out = c;
            Access::remove_vertex(out, v);
            return out;
        }
        case PartClass::psi: {
            EulerSystem out = kappa_transform(c, v);
            Access::remove_vertex(out, v);
            return out;
        }
        case PartClass::chi: break;
    }
    for (std::size_t w = 0; w < c.size(); ++w)
        if (interlaced(c, v, w)) {
            EulerSystem out = kappa_transform(kappa_transform(kappa_transform(c, w), v), w);
            Access::remove_vertex(out, v);
            return out;
        }
    // Not interlaced with anything: the two v-to-v walks become circuits.
    EulerSystem out = c;
    auto& words = Access::words(out);
    auto& oriented = Access::oriented(out);
    const auto& word = c.words()[occ.component];
    std::vector<std::size_t> inner(word.begin() + static_cast<std::ptrdiff_t>(occ.first) + 1,
                                   word.begin() + static_cast<std::ptrdiff_t>(occ.second));
    std::vector<std::size_t> outer(word.begin() + static_cast<std::ptrdiff_t>(occ.second) + 1, word.end());
    outer.insert(outer.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(occ.first));
    const bool flag = c.oriented(occ.component);
    words[occ.component] = {v, v};  // placeholder, removed below
    for (auto* part : {&inner, &outer}) {
        if (part->empty()) {
            ++Access::free_circles(out);
        } else {
            words.push_back(std::move(*part));
            oriented.push_back(flag);
        }
    }
    // Drop the placeholder component and the vertex itself.
    Access::remove_vertex(out, v);
    --Access::free_circles(out);  // the placeholder word became empty
    return out;
}

std::vector<EulerSystem> euler_closure(const EulerSystem& c, std::size_t vertex_cap) {
    if (c.size() > vertex_cap) throw CapExceeded("Euler system closure", c.size(), vertex_cap);
    // Kappa transforms only permute labels, so the search runs on the tags
    // 1, 2, 3 (for phi, chi, psi of c) and maps them back at the end.
    EulerSystem tagged = c;
    for (std::size_t v = 0; v < c.size(); ++v) tagged.set_labels(v, {MPoly(1L), MPoly(2L), MPoly(3L)});
    std::unordered_map<std::string, EulerSystem> seen;
    std::queue<const EulerSystem*> todo;
    todo.push(&seen.emplace(tagged.canonical_key(), tagged).first->second);
    while (!todo.empty()) {
        const EulerSystem& cur = *todo.front();
        todo.pop();
        for (std::size_t v = 0; v < cur.size(); ++v) {
            EulerSystem next = kappa_transform(cur, v);
            auto [it, fresh] = seen.emplace(next.canonical_key(), std::move(next));
            if (fresh) todo.push(&it->second);
        }
    }
    std::map<std::string, EulerSystem> out_by_key;
    for (auto& [tag_key, sys] : seen) {
        for (std::size_t v = 0; v < sys.size(); ++v) {
            const auto& orig = c.labels(c.index(sys.id(v)));
            const MPoly* by_tag[] = {&orig.phi, &orig.chi, &orig.psi};
            const auto& l = sys.labels(v);
            auto pick = [&](const MPoly& tag) { return *by_tag[tag.constant().get_si() - 1]; };
            sys.set_labels(v, {pick(l.phi), pick(l.chi), pick(l.psi)});
        }
        auto key = sys.canonical_key();
        out_by_key.emplace(std::move(key), std::move(sys));
    }
    std::vector<EulerSystem> out;
    out.reserve(out_by_key.size());
    for (auto& [key, sys] : out_by_key) out.push_back(std::move(sys));
    return out;
}

TransitionChoice followed_transitions(const EulerSystem& original, const EulerSystem& reached) {
    TransitionChoice t = TransitionChoice::uniform(original.size(), PartClass::phi);
    for (std::size_t v = 0; v < original.size(); ++v) {
        const auto& phi_now = reached.labels(reached.index(original.id(v))).phi;
        const auto& l = original.labels(v);
        if (phi_now == l.phi) t.cls[v] = PartClass::phi;
        else if (phi_now == l.chi) t.cls[v] = PartClass::chi;
        else if (phi_now == l.psi) t.cls[v] = PartClass::psi;
        else throw PreconditionError("labels of '" + original.id(v) + "' do not identify a transition");
    }
    return t;
}

EulerSystem zero_for_digraph(const EulerSystem& c) {
    EulerSystem out = c;
    for (std::size_t v = 0; v < c.size(); ++v) {
        auto l = c.labels(v);
        l.psi = MPoly();
        out.set_labels(v, std::move(l));
    }
    for (std::size_t k = 0; k < c.words().size(); ++k) Access::oriented(out)[k] = true;
    return out;
}

EulerSystem zero_for_T(const EulerSystem& c, const std::vector<std::pair<std::size_t, PartClass>>& t) {
    EulerSystem out = c;
    std::vector<bool> used(c.size(), false);
    for (auto [v, kind] : t) {
        if (v >= c.size()) throw PreconditionError("T names a vertex outside the system");
        if (used[v]) throw PreconditionError("T assigns two transitions to '" + c.id(v) + "'");
        used[v] = true;
        auto l = c.labels(v);
        l[kind] = MPoly();
        out.set_labels(v, std::move(l));
    }
    return out;
}

CircleInterpretation circle_interpretations(const EulerSystem& c, const std::vector<std::size_t>& looped,
                                            const Limits& limits) {
    CircleInterpretation r;
    r.graph = interlacement(c);
    for (auto v : looped) {
        if (v >= c.size()) throw PreconditionError("looped vertex outside the system");
        r.graph.set_loop(v, true);
    }
    r.qn_graph = qn(r.graph, limits);
    r.q_graph = q_two_variable(r.graph, limits);

    const std::size_t n = c.size();
    const HalfEdges he(c);
    const MPoly xm1 = MPoly(VarId::x()) - MPoly(1L), ym1 = MPoly(VarId::y()) - MPoly(1L);
    // counts[k][e]: choices with |P| - c(F) = k and x-exponent e
    std::map<std::pair<std::size_t, std::size_t>, long> counts;
    std::vector<std::uint8_t> digits(n, 0);
    TransitionChoice t = TransitionChoice::uniform(n, PartClass::phi);
    for (;;) {
        std::size_t phis = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (!digits[v]) {
                t.cls[v] = PartClass::phi;
                ++phis;
            } else {
                t.cls[v] = r.graph.looped(v) ? PartClass::psi : PartClass::chi;
            }
        }
        const std::size_t k = he.trace(t, c.free_circles()) - c.component_count();
        if (n < phis + k) throw InternalError("negative exponent in the circuit form of q");
        ++counts[{k, n - phis - k}];
        if (detail::odometer_step(digits, 1) == n) break;
    }
    for (const auto& [ke, count] : counts) {
        r.qn_circuits += MPoly(count) * pow(ym1, static_cast<unsigned>(ke.first));
        r.q_circuits += MPoly(count) * pow(ym1, static_cast<unsigned>(ke.first)) * pow(xm1, static_cast<unsigned>(ke.second));
    }
    return r;
}

}  // namespace interlace
