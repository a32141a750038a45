#include "interlace/cli.hpp"

#include "interlace/error.hpp"
#include "interlace/fourreg.hpp"
#include "interlace/gf2.hpp"
#include "interlace/graph_io.hpp"
#include "interlace/interlace.hpp"
#include "interlace/reduce.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

namespace interlace::cli {

namespace {

using Value = std::variant<Rational, MPoly>;

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

PolynomialKind kind_of(const std::string& k) {
    static const std::map<std::string, PolynomialKind> kinds{
        {"qlambda", PolynomialKind::qlambda},       {"q2", PolynomialKind::qlambda2},
        {"qn", PolynomialKind::vertex_nullity},     {"q", PolynomialKind::two_variable},
        {"Qahv", PolynomialKind::avdh},             {"courcelle", PolynomialKind::courcelle},
    };
    auto it = kinds.find(k);
    if (it == kinds.end()) throw PreconditionError("unknown kind '" + k + "'");
    return it->second;
}

std::map<VarId, Rational> parse_bindings(const std::vector<std::string>& raw) {
    std::map<VarId, Rational> out;
    for (const auto& b : raw) {
        const auto eq = b.find('=');
        if (eq == std::string::npos) throw ParseError("binding '" + b + "' is not of the form var=value", 1, 1);
        VarId v = VarId::parse(b.substr(0, eq));
        out[v] = parse_rational(b.substr(eq + 1));
    }
    return out;
}

Value apply_bindings(const MPoly& p, const std::map<VarId, Rational>& bindings) {
    if (bindings.empty()) return p;
    bool all_bound = true;
    for (auto v : p.variables())
        if (!bindings.count(v)) all_bound = false;
    if (all_bound) return evaluate(p, bindings);
    std::map<VarId, MPoly> images;
    for (const auto& [v, r] : bindings) {
        if (r.get_den() != 1)
            throw PreconditionError("a partial binding needs integer values; bind every variable to use " +
                                    to_string(r));
        images[v] = MPoly(BigInt(r.get_num()));
    }
    return substitute(p, images);
}

MPoly symbolic(const LabeledGraph& g, PolynomialKind kind, bool brute) {
    switch (kind) {
    case PolynomialKind::qlambda: return brute ? qlambda_bruteforce(g) : qlambda_recursive(g);
    case PolynomialKind::qlambda2: return brute ? q2_bruteforce(g) : q2_recursive(g);
    case PolynomialKind::vertex_nullity: return brute ? qn(g) : qn_via_qlambda(g);
    case PolynomialKind::two_variable: return q_two_variable(g);
    case PolynomialKind::avdh:
        return brute ? qlambda_bruteforce(g.map_labels([](const MPoly&) { return MPoly(1L); })) : q_avdh(g);
    case PolynomialKind::courcelle: return courcelle(g);
    }
    throw InternalError("unhandled polynomial kind");
}

struct CheckResult {
    std::string name;
    std::string status;  // pass | FAIL | skipped
    std::string detail;
};

template <typename F>
CheckResult guarded(const std::string& name, F&& f) {
    try {
        auto witness = f();
        if (witness) return {name, "FAIL", *witness};
        return {name, "pass", ""};
    } catch (const CapExceeded& e) {
        return {name, "skipped", e.what()};
    }
}

std::vector<CheckResult> verify_instance(const LabeledGraph& g, const std::optional<EulerSystem>& sys) {
    using Witness = std::optional<std::string>;
    std::vector<CheckResult> out;
    const LabeledGraph s = simplify(g);
    const Limits lim{};

    out.push_back(guarded("recursive = brute-force Q_lambda", [&]() -> Witness {
        if (qlambda_recursive(s, lim) != qlambda_bruteforce(s, lim)) return "the two polynomials differ";
        return std::nullopt;
    }));
    out.push_back(guarded("Q_lambda invariant under labeled local complementation", [&]() -> Witness {
        const MPoly q = qlambda_recursive(s, lim);
        for (std::size_t v = 0; v < s.size(); ++v)
            if (qlambda_recursive(labeled_local_complement(s, v), lim) != q) return "vertex " + s.id(v);
        return std::nullopt;
    }));
    out.push_back(guarded("Q_lambda invariant under labeled pivots", [&]() -> Witness {
        const MPoly q = qlambda_recursive(s, lim);
        for (auto [a, b] : s.edges())
            if (qlambda_recursive(labeled_pivot(s, a, b), lim) != q) return "edge " + s.id(a) + " " + s.id(b);
        return std::nullopt;
    }));
    out.push_back(guarded("per-partition nullity invariance", [&]() -> Witness {
        detail::check_cap(PolynomialKind::qlambda, s.size(), default_vertex_cap(PolynomialKind::qlambda));
        auto p = LabeledPartition::uniform(s.size(), PartClass::phi);
        std::vector<LabeledGraph> complements;
        for (std::size_t v = 0; v < s.size(); ++v) complements.push_back(labeled_local_complement(s, v));
        do {
            const auto nu = gf2::nullity(partition_subgraph(s, p));
            for (std::size_t v = 0; v < s.size(); ++v)
                if (gf2::nullity(partition_subgraph(complements[v], partition_local_complement(p, s, v))) != nu)
                    return "partition " + to_string(p) + ", vertex " + s.id(v);
        } while (p.advance());
        return std::nullopt;
    }));
    out.push_back(guarded("q_N = specialized Q_lambda", [&]() -> Witness {
        if (qn(g, lim) != qn_via_qlambda(g, lim)) return "the two polynomials differ";
        return std::nullopt;
    }));

    if (!sys) return out;
    const EulerSystem& c = *sys;
    out.push_back(guarded("pi = Q_lambda of the interlacement graph", [&]() -> Witness {
        if (pi_generating_function(c, lim) != qlambda_bruteforce(interlacement(c), lim))
            return "the two polynomials differ";
        return std::nullopt;
    }));
    out.push_back(guarded("circuit count |P| - c(F) = nullity of G_P", [&]() -> Witness {
        detail::check_cap(PolynomialKind::qlambda, c.size(), default_vertex_cap(PolynomialKind::qlambda));
        const auto h = interlacement(c);
        auto t = TransitionChoice::uniform(c.size(), PartClass::phi);
        do {
            const auto circuits = trace_partition(c, t);
            if (circuits - c.component_count() != gf2::nullity(partition_subgraph(h, t)))
                return "transition " + to_string(t);
        } while (t.advance());
        return std::nullopt;
    }));
    out.push_back(guarded("pi invariant under kappa-transforms", [&]() -> Witness {
        const MPoly p = pi_generating_function(c, lim);
        for (std::size_t v = 0; v < c.size(); ++v)
            if (pi_generating_function(kappa_transform(c, v), lim) != p) return "vertex " + c.id(v);
        return std::nullopt;
    }));
    if (c.all_oriented()) {
        out.push_back(guarded("directed pi = q_lambda of the interlacement graph", [&]() -> Witness {
            if (pi_directed(c, lim) != q2_bruteforce(interlacement(c), lim)) return "the two polynomials differ";
            return std::nullopt;
        }));
    }
    return out;
}

std::string value_text(const Value& v) {
    if (auto r = std::get_if<Rational>(&v)) return to_string(*r);
    return to_string(std::get<MPoly>(v));
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const bool is_pi = config.kind == "pi" || config.kind == "pi-directed";
        if (is_pi && config.format != "dow") throw PreconditionError("kind '" + config.kind + "' needs --format dow");
        if (is_pi && config.method == "reduce") throw PreconditionError("the reduce method does not apply to pi");
        if (config.s_max < 2) throw PreconditionError("--s-max must be at least 2");

        const std::string text = read_input(config.input);
        LabeledGraph g;
        std::optional<EulerSystem> sys;
        if (config.format == "dow") {
            sys = parse_dow_text(text);
        } else if (config.format == "json") {
            g = parse_graph_json(text);
        } else if (config.format == "edgelist") {
            g = parse_edgelist(text);
        } else {
            throw PreconditionError("unknown format '" + config.format + "'");
        }
        if (config.labels) {
            const LabeledGraph src = parse_graph_json(read_input(*config.labels));
            if (sys) {
                sys = with_labels_from(*sys, src);
            } else {
                for (std::size_t v = 0; v < src.size(); ++v) g.set_labels(g.index(src.id(v)), src.labels(v));
            }
        }
        if (sys) g = interlacement(*sys);
        const auto bindings = parse_bindings(config.bindings);

        Value value;
        if (is_pi) {
            value = apply_bindings(config.kind == "pi" ? pi_generating_function(*sys) : pi_directed(*sys), bindings);
        } else if (config.method == "reduce") {
            value = evaluate_fpt(g, kind_of(config.kind), bindings, FptOptions{.s_max = config.s_max}).value;
        } else if (config.method == "bruteforce" || config.method == "recursive") {
            value = apply_bindings(symbolic(g, kind_of(config.kind), config.method == "bruteforce"), bindings);
        } else {
            throw PreconditionError("unknown method '" + config.method + "'");
        }

        std::vector<CheckResult> checks;
        if (config.verify) checks = verify_instance(g, sys);
        bool failed = false;
        for (const auto& c : checks) failed = failed || c.status == "FAIL";

        if (config.output == "json") {
            nlohmann::json doc;
            doc["kind"] = config.kind;
            doc["method"] = is_pi ? "bruteforce" : config.method;
            doc["n"] = g.size();
            if (auto r = std::get_if<Rational>(&value)) {
                doc["value"] = to_string(*r);
            } else {
                doc["polynomial"] = nlohmann::json::parse(to_json_string(std::get<MPoly>(value)));
                doc["text"] = to_string(std::get<MPoly>(value));
            }
            if (config.verify) {
                doc["verify"] = nlohmann::json::array();
                for (const auto& c : checks)
                    doc["verify"].push_back({{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
            }
            out << doc.dump(2) << "\n";
        } else {
            out << value_text(value) << "\n";
            for (const auto& c : checks) {
                out << "verify " << c.name << ": " << c.status;
                if (!c.detail.empty()) out << " (" << c.detail << ")";
                out << "\n";
            }
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        err << "n=" << g.size() << " kind=" << config.kind << " method=" << (is_pi ? "bruteforce" : config.method)
            << " time_ms=" << ms << "\n";
        if (failed) {
            for (const auto& c : checks)
                if (c.status == "FAIL") err << "verification failed: " << c.name << ": " << c.detail << "\n";
            return verification_failed;
        }
        return ok;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return cap_exceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Labeled interlace polynomials of graphs and circuit partitions of 4-regular graphs"};
    RunConfig config;
    app.add_option("-i,--input", config.input, "Input file, '-' for stdin")->required();
    app.add_option("-f,--format", config.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "json", "dow"}))
        ->capture_default_str();
    app.add_option("-k,--kind", config.kind, "Polynomial")
        ->check(CLI::IsMember({"qlambda", "q2", "qn", "q", "Qahv", "courcelle", "pi", "pi-directed"}))
        ->capture_default_str();
    app.add_option("-m,--method", config.method, "Computation method")
        ->check(CLI::IsMember({"bruteforce", "recursive", "reduce"}))
        ->capture_default_str();
    app.add_option("-b,--bind", config.bindings, "var=rational, repeatable (e.g. y=2, phi_a=1/2)");
    app.add_option("--s-max", config.s_max, "Largest split side searched by the reduce method")
        ->capture_default_str();
    app.add_option("-o,--output", config.output, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--verify", config.verify, "Cross-check the instance and report each check");
    app.add_option("--labels", config.labels, "Graph JSON supplying vertex labels");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }
    return run(config, out, err);
}

}  // namespace interlace::cli
