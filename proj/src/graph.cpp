#include "interlace/graph.hpp"

namespace interlace {

std::string_view to_string(PartClass c) noexcept {
    switch (c) {
        case PartClass::phi: return "phi";
        case PartClass::chi: return "chi";
        case PartClass::psi: return "psi";
    }
    return "?";
}

LabelTriple<MPoly> natural_labels(std::string_view id) {
    return {MPoly(VarId::phi(id)), MPoly(VarId::chi(id)), MPoly(VarId::psi(id))};
}

LabeledGraph make_graph(const std::vector<std::string>& ids,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    LabeledGraph g;
    for (const auto& id : ids) g.add_vertex(id, natural_labels(id));
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    return g;
}

LabeledPartition LabeledPartition::from_code(std::size_t n, std::uint64_t code) {
    LabeledPartition p = uniform(n, PartClass::phi);
    for (std::size_t v = 0; v < n; ++v) {
        p.cls[v] = static_cast<PartClass>(code % 3);
        code /= 3;
    }
    return p;
}

bool LabeledPartition::advance(bool psi_allowed) noexcept {
    const auto top = static_cast<std::uint8_t>(psi_allowed ? 2 : 1);
    for (auto& c : cls) {
        if (static_cast<std::uint8_t>(c) < top) {
            c = static_cast<PartClass>(static_cast<std::uint8_t>(c) + 1);
            return true;
        }
        c = PartClass::phi;
    }
    return false;
}

std::string to_string(const LabeledPartition& p) {
    std::string out;
    for (auto c : p.cls) out.push_back(c == PartClass::phi ? 'f' : (c == PartClass::chi ? 'c' : 'p'));
    return out;
}

}  // namespace interlace
