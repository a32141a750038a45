#include "interlace/reduce.hpp"

#include <functional>
#include <limits>

namespace interlace {

namespace {

std::vector<std::size_t> component_sizes(const NumericGraph& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::size_t count = 0;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            ++count;
            g.neighbors(v).for_each([&](std::size_t w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        sizes.push_back(count);
    }
    return sizes;
}

const Rational& bound(const std::map<VarId, Rational>& bindings, VarId v, const char* kind) {
    auto it = bindings.find(v);
    if (it == bindings.end())
        throw PreconditionError(std::string(kind) + " via split reduction needs a numeric value for " + to_string(MPoly(v)));
    return it->second;
}

}  // namespace

Rational fpt_qlambda(const NumericGraph& g, const Rational& y, const FptOptions& options, FptStats* stats) {
    NumericGraph cur = g.has_loops() ? simplify(g) : g;
    std::size_t reductions = 0;
    while (cur.size() > 2) {
        auto sp = find_split(cur, options.s_max, options.preference);
        if (!sp) break;
        cur = split_reduce(cur, *sp, y, options.s_max);
        ++reductions;
    }
    for (auto size : component_sizes(cur))
        if (size > options.residual_cap) throw CapExceeded("prime residual component after split reductions", size,
                                                           options.residual_cap);
    if (stats) {
        stats->reductions += reductions;
        stats->residual = cur.size();
        ++stats->evaluations;
    }
    return qlambda_recursive(cur, y, Limits{std::numeric_limits<std::size_t>::max()});
}

FptResult evaluate_fpt(const LabeledGraph& g, PolynomialKind kind, const std::map<VarId, Rational>& bindings,
                       const FptOptions& options) {
    FptResult result;
    const char* name = to_string(kind).data();
    const std::size_t n = g.size();

    // Numeric labels for the Q_lambda instance, and the map from the free
    // parameter t to the Q_lambda argument.
    NumericGraph labeled;
    std::function<Rational(const Rational&)> y_of;
    VarId free_var = VarId::y();

    auto bind_labels = [&](const LabeledGraph& src) {
        labeled = src.map_labels([&](const MPoly& p) { return evaluate(p, bindings); });
    };

    switch (kind) {
    case PolynomialKind::qlambda:
        bind_labels(simplify(g));
        y_of = [](const Rational& t) { return t; };
        break;
    case PolynomialKind::qlambda2: {
        bind_labels(simplify(g));
        for (std::size_t v = 0; v < labeled.size(); ++v) {
            auto l = labeled.labels(v);
            l.psi = Rational(0);
            labeled.set_labels(v, l);
        }
        y_of = [](const Rational& t) { return t; };
        break;
    }
    case PolynomialKind::avdh:
        labeled = simplify(g).map_labels([](const MPoly&) { return Rational(1); });
        y_of = [](const Rational& t) { return t; };
        break;
    case PolynomialKind::vertex_nullity:
        labeled = qn_label_graph(g).map_labels([](const MPoly& p) { return evaluate(p, {}); });
        y_of = [](const Rational& t) -> Rational { return t - 1; };
        break;
    case PolynomialKind::two_variable: {
        const Rational x = bound(bindings, VarId::x(), name);
        if (x == 1) throw PreconditionError("q via split reduction needs x != 1");
        const std::map<VarId, Rational> xb{{VarId::x(), x}};
        labeled = q_label_graph(g).map_labels([&](const MPoly& p) { return evaluate(p, xb); });
        y_of = [x](const Rational& t) { return Rational((t - 1) / (x - 1)); };
        break;
    }
    case PolynomialKind::courcelle: {
        // phi = 1, A-membership -> chi (diagonal 0 unless looped), B -> psi;
        // u^{|A u B| - nu} v^nu = (label u factors) * (v/u)^nu.
        const Rational u = bound(bindings, VarId::u(), name);
        if (u == 0) throw PreconditionError("Courcelle via split reduction needs u != 0");
        free_var = VarId::v();
        for (std::size_t a = 0; a < n; ++a) {
            const Rational xa = bound(bindings, VarId::x_of(g.id(a)), name) * u;
            const Rational ya = bound(bindings, VarId::y_of(g.id(a)), name) * u;
            labeled.add_vertex(g.id(a), g.looped(a) ? LabelTriple<Rational>{Rational(1), ya, xa}
                                                     : LabelTriple<Rational>{Rational(1), xa, ya});
        }
        for (auto [a, b] : g.edges()) labeled.add_edge(a, b);
        y_of = [u](const Rational& t) { return Rational(t / u); };
        break;
    }
    }

    auto run = [&](const Rational& t) { return fpt_qlambda(labeled, y_of(t), options, &result.stats); };

    if (auto it = bindings.find(free_var); it != bindings.end()) {
        result.value = run(it->second);
        return result;
    }
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t k = 0; k <= n; ++k) {
        const Rational t(static_cast<long>(k));
        points.emplace_back(t, run(t));
    }
    result.value = interpolate_univariate(points, n, free_var);
    return result;
}

}  // namespace interlace
