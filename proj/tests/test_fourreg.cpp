#include "doctest.h"
#include "dow_oracles.hpp"
#include "oracles.hpp"

#include "interlace/error.hpp"
#include "interlace/fourreg.hpp"
#include "interlace/interlace.hpp"

#include <set>

using namespace interlace;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

EulerSystem dow(std::vector<std::string> w) { return EulerSystem::from_dow(w); }

TransitionChoice choice(std::initializer_list<PartClass> cls) { return TransitionChoice{std::vector<PartClass>(cls)}; }

const auto f = PartClass::phi;
const auto x = PartClass::chi;
const auto s = PartClass::psi;

template <typename F>
void for_each_choice(std::size_t n, bool psi, F&& fn) {
    auto t = TransitionChoice::uniform(n, PartClass::phi);
    do fn(t);
    while (t.advance(psi));
}

}  // namespace

TEST_CASE("construction and validation") {
    const auto c = dow({"abab"});
    CHECK(c.size() == 2);
    CHECK(c.component_count() == 1);
    CHECK(interlaced(c, 0, 1));
    CHECK(!interlaced(dow({"aabb"}), 0, 1));
    CHECK(dow({"a1,b,a1,b"}).id(0) == "a1");
    CHECK_THROWS_AS(dow({"aab"}), PreconditionError);
    CHECK_THROWS_AS(dow({"ab", "ab"}), PreconditionError);
    CHECK_THROWS_AS(dow({"abab", ""}), PreconditionError);
    CHECK_THROWS_AS(dow({"aaab"}), PreconditionError);
    // a component whose only vertex carries two loops of F
    const auto loops = dow({"abab", "cc"});
    CHECK(loops.component_count() == 2);
    CHECK(loops.looped(2));
    CHECK(!loops.looped(0));
}

TEST_CASE("DOW text format") {
    const auto c = parse_dow_text("# two components\nabab oriented\nx1,y,x1,y\n");
    CHECK(c.size() == 4);
    CHECK(c.oriented(0));
    CHECK(!c.oriented(1));
    CHECK(parse_dow_text(c.to_text()).canonical_key() == c.canonical_key());
    try {
        parse_dow_text("abab\nab$ab\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    try {
        parse_dow_text("abab sideways\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 6);
    }
    CHECK_THROWS_AS(parse_dow_text("aab\n"), ParseError);
}

TEST_CASE("interlacement graphs") {
    CHECK(interlacement(dow({"abab"})) == make_graph({"a", "b"}, {{"a", "b"}}));
    CHECK(interlacement(dow({"aabb"})) == make_graph({"a", "b"}, {}));
    CHECK(interlacement(dow({"abcabc"})) == make_graph({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
}

TEST_CASE("kappa transforms") {
    const auto c = dow({"abab"});
    const auto k = kappa_transform(c, 0);
    CHECK(k.words() == c.words());
    CHECK(k.labels(0) == LabelTriple<MPoly>{P("psi_a"), P("chi_a"), P("phi_a")});
    CHECK(k.labels(1) == LabelTriple<MPoly>{P("phi_b"), P("psi_b"), P("chi_b")});

    const auto k3 = dow({"abcabc"});
    CHECK(interlacement(kappa_transform(k3, 0)) == labeled_local_complement(interlacement(k3), 0));
    CHECK(kappa_transform(kappa_transform(k3, 1), 1).canonical_key() == k3.canonical_key());
    CHECK_THROWS_AS(kappa_transform(c, 5), PreconditionError);
}

TEST_CASE("transpositions") {
    const auto c = dow({"abab"});
    const auto t = transpose(c, 0, 1);
    CHECK(interlacement(t).edges() == interlacement(c).edges());
    CHECK(t.labels(0) == LabelTriple<MPoly>{P("chi_a"), P("phi_a"), P("psi_a")});
    CHECK(t.labels(1) == LabelTriple<MPoly>{P("chi_b"), P("phi_b"), P("psi_b")});
    CHECK(transpose(t, 0, 1).canonical_key() == c.canonical_key());
    CHECK_THROWS_AS(transpose(dow({"aabb"}), 0, 1), PreconditionError);
}

TEST_CASE("trace convention on abab") {
    const auto c = dow({"abab"});
    CHECK(trace_partition(c, choice({f, f})) == 1);
    CHECK(trace_partition(c, choice({x, f})) == 2);
    CHECK(trace_partition(c, choice({s, f})) == 1);
    CHECK(trace_partition(c, choice({x, x})) == 1);
    CHECK(trace_partition(c, choice({s, s})) == 2);
    const auto loops = dow({"cc"});
    CHECK(trace_partition(loops, choice({f})) == 1);
    CHECK(trace_partition(loops, choice({x})) == 2);
    CHECK(trace_partition(loops, choice({s})) == 1);
}

TEST_CASE("union-find tracing agrees with edge walking") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : oracle::all_systems(n))
            for_each_choice(n, true, [&](const TransitionChoice& t) {
                REQUIRE(trace_partition(c, t) == oracle::walk_circuits(c, t));
            });
}

TEST_CASE("circuit partition generating function") {
    const auto c = dow({"abab"});
    CHECK(pi_generating_function(c) == qlambda_bruteforce(make_graph({"a", "b"}, {{"a", "b"}})));
    const auto c3 = dow({"abcacb"});
    CHECK(pi_generating_function(c3).size() == 27);
    CHECK(pi_generating_function(dow({"cc"})) == P("phi_c + chi_c*y + psi_c"));

    // all-ones labels: ordinary generating function of circuit counts
    auto ones = c3;
    for (std::size_t v = 0; v < 3; ++v) ones.set_labels(v, {MPoly(1L), MPoly(1L), MPoly(1L)});
    MPoly expect;
    for_each_choice(3, true, [&](const TransitionChoice& t) {
        expect += pow(MPoly(VarId::y()), static_cast<unsigned>(trace_partition(c3, t) - 1));
    });
    CHECK(pi_generating_function(ones) == expect);
}

TEST_CASE("directed generating function") {
    const auto c = EulerSystem::from_dow({"abab"}, {true});
    CHECK(pi_directed(c) == P("phi_a*phi_b + (phi_a*chi_b + chi_a*phi_b)*y + chi_a*chi_b"));
    CHECK(pi_directed(c) == q2_bruteforce(make_graph({"a", "b"}, {{"a", "b"}})));
    CHECK(pi_directed(EulerSystem::from_dow({"abcabc"}, {true})).size() == 8);
    CHECK_THROWS_AS(pi_directed(dow({"abab"})), PreconditionError);
    auto ones = EulerSystem::from_dow({"abab"}, {true});
    for (std::size_t v = 0; v < 2; ++v) ones.set_labels(v, {MPoly(VarId::phi(ones.id(v))), MPoly(0L), MPoly(0L)});
    CHECK(pi_directed(ones) == P("phi_a*phi_b"));
}

TEST_CASE("detachments") {
    const auto c = dow({"abab"});
    const auto d = detach(c, 0, PartClass::phi);
    CHECK(d.size() == 1);
    CHECK(d.component_count() == 1);
    CHECK(d.words() == std::vector<std::vector<std::size_t>>{{0, 0}});

    const auto split = detach(dow({"aabb"}), 0, PartClass::chi);
    CHECK(split.size() == 1);
    CHECK(split.component_count() == 2);
    CHECK(split.free_circles() == 1);

    const auto apart = detach(dow({"abbacc"}), 0, PartClass::chi);
    CHECK(apart.component_count() == 2);
    CHECK(apart.words().size() == 2);
}

TEST_CASE("detachment identity with the component correction") {
    const MPoly y(VarId::y());
    std::size_t literal_failures = 0, non_interlaced = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : oracle::all_systems(n)) {
            const auto pi = pi_generating_function(c);
            for (std::size_t v = 0; v < n; ++v) {
                if (c.looped(v)) continue;
                const auto fphi = detach(c, v, PartClass::phi), fchi = detach(c, v, PartClass::chi),
                           fpsi = detach(c, v, PartClass::psi);
                const auto& l = c.labels(v);
                const auto shift = fchi.component_count() - c.component_count();
                const MPoly rhs_phi_psi = l.phi * pi_generating_function(fphi) + l.psi * pi_generating_function(fpsi);
                const MPoly chi_term = l.chi * pi_generating_function(fchi);
                REQUIRE(pi == rhs_phi_psi + chi_term * pow(y, static_cast<unsigned>(shift)));
                bool v_interlaced = false;
                for (std::size_t w = 0; w < n; ++w) v_interlaced = v_interlaced || interlaced(c, v, w);
                CHECK(shift == (v_interlaced ? 0u : 1u));
                if (!v_interlaced) ++non_interlaced;
                if (pi != rhs_phi_psi + chi_term) ++literal_failures;
            }
        }
    // The uncorrected identity fails exactly when v is interlaced with nobody.
    CHECK(non_interlaced > 0);
    CHECK(literal_failures == non_interlaced);
}

TEST_CASE("interlacement, nullity and kappa properties on all small systems") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : oracle::all_systems(n)) {
            const auto g = interlacement(c);
            REQUIRE(pi_generating_function(c) == qlambda_bruteforce(g));
            for_each_choice(n, true, [&](const TransitionChoice& t) {
                REQUIRE(trace_partition(c, t) - c.component_count() == partition_subgraph(g, t).nullity());
            });
            for (std::size_t v = 0; v < n; ++v) {
                const auto k = kappa_transform(c, v);
                REQUIRE(interlacement(k) == labeled_local_complement(g, v));
                REQUIRE(pi_generating_function(k) == pi_generating_function(c));
                REQUIRE(kappa_transform(c, v, KappaWalk::second).canonical_key() == k.canonical_key());
                REQUIRE(kappa_transform(k, v).canonical_key() == c.canonical_key());
                for (std::size_t w = 0; w < n; ++w) {
                    if (!interlaced(c, v, w)) continue;
                    const auto tr = transpose(c, v, w);
                    REQUIRE(interlacement(tr) == labeled_pivot(g, v, w));
                    REQUIRE(tr.canonical_key() ==
                            kappa_transform(kappa_transform(kappa_transform(c, w), v), w).canonical_key());
                    auto dir = zero_for_digraph(c);
                    REQUIRE(pi_directed(transpose(dir, v, w)) == pi_directed(dir));
                }
            }
            const auto directed = zero_for_digraph(c);
            REQUIRE(pi_directed(directed) == q2_bruteforce(g));
            REQUIRE(pi_generating_function(directed) == pi_directed(directed));
        }
}

TEST_CASE("Kotzig closure matches the single-circuit-per-component choices") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : oracle::all_systems(n)) {
            std::set<TransitionChoice> expect;
            for_each_choice(n, true, [&](const TransitionChoice& t) {
                if (trace_partition(c, t) == c.component_count()) expect.insert(t);
            });
            const auto closure = euler_closure(c);
            std::set<TransitionChoice> got;
            std::set<std::string> keys;
            for (const auto& e : closure) {
                got.insert(followed_transitions(c, e));
                keys.insert(e.canonical_key());
                for (std::size_t v = 0; v < n; ++v) REQUIRE(keys.size() <= closure.size());
            }
            REQUIRE(got == expect);
            REQUIRE(closure.size() == expect.size());
            // closed under further transforms
            for (const auto& e : closure)
                for (std::size_t v = 0; v < n; ++v) REQUIRE(keys.contains(kappa_transform(e, v).canonical_key()));
        }
    CHECK_THROWS_AS(euler_closure(dow({"abcdefabcdef"}), 5), CapExceeded);
}

TEST_CASE("label zeroing") {
    const auto c = dow({"abcacb"});
    CHECK(zero_for_T(c, {}).canonical_key() == c.canonical_key());
    std::vector<std::pair<std::size_t, PartClass>> all_chi;
    for (std::size_t v = 0; v < c.size(); ++v) all_chi.emplace_back(v, PartClass::chi);
    MPoly expect;
    for_each_choice(3, true, [&](const TransitionChoice& t) {
        if (t.count(PartClass::chi)) return;
        MPoly term = pow(MPoly(VarId::y()), static_cast<unsigned>(trace_partition(c, t) - 1));
        for (std::size_t v = 0; v < 3; ++v) term *= c.labels(v)[t[v]];
        expect += term;
    });
    CHECK(pi_generating_function(zero_for_T(c, all_chi)) == expect);
    CHECK_THROWS_AS(zero_for_T(c, {{0, PartClass::chi}, {0, PartClass::psi}}), PreconditionError);
    CHECK_THROWS_AS(zero_for_T(c, {{9, PartClass::chi}}), PreconditionError);
}

TEST_CASE("looped circle graph interpretations") {
    const auto r = circle_interpretations(dow({"abab"}), {});
    CHECK(r.qn_graph == P("2*y"));
    CHECK(r.qn_circuits == P("2*y"));
    CHECK(r.equal());
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : oracle::all_systems(n))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                std::vector<std::size_t> loops;
                for (std::size_t v = 0; v < n; ++v)
                    if ((mask >> v) & 1U) loops.push_back(v);
                REQUIRE(circle_interpretations(c, loops).equal());
            }
}
