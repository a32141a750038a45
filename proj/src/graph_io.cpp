#include "interlace/graph_io.hpp"

#include "json.hpp"

#include <sstream>

namespace interlace {

namespace {

std::size_t ensure_vertex(LabeledGraph& g, const std::string& id, std::size_t line, std::size_t col) {
    if (auto i = g.find(id)) return *i;
    try {
        return g.add_vertex(id, natural_labels(id));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what(), line, col);
    }
}

MPoly label_value(const nlohmann::json& j, const std::string& where) {
    if (j.is_number_integer()) return MPoly(BigInt(std::to_string(j.get<long long>()), 10));
    if (j.is_string()) {
        try {
            return parse_poly(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(where + ": " + e.what());
        }
    }
    throw ParseError(where + ": label must be a polynomial string or an integer");
}

}  // namespace

LabeledGraph parse_edgelist(std::string_view text) {
    LabeledGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::vector<std::pair<std::string, std::size_t>> tokens;  // token, column
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            tokens.emplace_back(line.substr(start, i - start), start + 1);
        }
        if (tokens.empty()) continue;
        if (tokens[0].first == "loop") {
            if (tokens.size() != 2) throw ParseError("expected 'loop <vertex>'", lineno, tokens[0].second);
            g.set_loop(ensure_vertex(g, tokens[1].first, lineno, tokens[1].second), true);
        } else if (tokens.size() == 1) {
            ensure_vertex(g, tokens[0].first, lineno, tokens[0].second);
        } else if (tokens.size() == 2) {
            const auto a = ensure_vertex(g, tokens[0].first, lineno, tokens[0].second);
            const auto b = ensure_vertex(g, tokens[1].first, lineno, tokens[1].second);
            if (a == b) throw ParseError("self-edge; use 'loop " + tokens[0].first + "'", lineno, tokens[1].second);
            g.add_edge(a, b);
        } else {
            throw ParseError("expected 'u v', 'loop u' or 'u'", lineno, tokens[2].second);
        }
    }
    return g;
}

LabeledGraph parse_graph_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; convert to line/column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string("graph JSON: ") + e.what(), line, col);
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph JSON: expected an object with a \"vertices\" array");
    LabeledGraph g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw ParseError("graph JSON: every vertex needs a string \"id\"");
        const auto id = v["id"].get<std::string>();
        LabelTriple<MPoly> labels;
        try {
            labels = natural_labels(id);
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("graph JSON: ") + e.what());
        }
        if (v.contains("labels")) {
            const auto& l = v["labels"];
            if (!l.is_object()) throw ParseError("graph JSON: labels of '" + id + "' must be an object");
            if (l.contains("phi")) labels.phi = label_value(l["phi"], "vertex '" + id + "' phi");
            if (l.contains("chi")) labels.chi = label_value(l["chi"], "vertex '" + id + "' chi");
            if (l.contains("psi")) labels.psi = label_value(l["psi"], "vertex '" + id + "' psi");
        }
        bool loop = false;
        if (v.contains("loop")) {
            if (!v["loop"].is_boolean()) throw ParseError("graph JSON: loop of '" + id + "' must be a boolean");
            loop = v["loop"].get<bool>();
        }
        try {
            g.add_vertex(id, std::move(labels), loop);
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("graph JSON: ") + e.what());
        }
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("graph JSON: \"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("graph JSON: every edge must be a pair of vertex ids");
            const auto a = g.find(e[0].get<std::string>());
            const auto b = g.find(e[1].get<std::string>());
            if (!a || !b) throw ParseError("graph JSON: edge names an undeclared vertex");
            if (*a == *b) throw ParseError("graph JSON: self-edge on '" + e[0].get<std::string>() + "'; use \"loop\"");
            g.add_edge(*a, *b);
        }
    }
    return g;
}

std::string to_graph_json(const LabeledGraph& g) {
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& l = g.labels(v);
        vertices.push_back({{"id", g.id(v)},
                            {"loop", g.looped(v)},
                            {"labels", {{"phi", to_string(l.phi)}, {"chi", to_string(l.chi)}, {"psi", to_string(l.psi)}}}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) edges.push_back({g.id(a), g.id(b)});
    return nlohmann::json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}}.dump();
}

std::string to_edgelist(const LabeledGraph& g) {
    std::string out;
    for (std::size_t v = 0; v < g.size(); ++v) out += g.id(v) + "\n";  // fixes the vertex order
    for (auto [a, b] : g.edges()) out += g.id(a) + " " + g.id(b) + "\n";
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.looped(v)) out += "loop " + g.id(v) + "\n";
    return out;
}

}  // namespace interlace
