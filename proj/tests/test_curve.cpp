#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trinity/curve.hpp"
#include "trinity/graph.hpp"

using namespace trinity;

namespace {

// The one-crossing spherical curve (figure eight): two lobes, ends (0,1) on
// one strand and (2,3) on the other.
CurvePresentation figure_eight() { return load_curve("crossing 0 0 0 1 1\n"); }

// The standard two-crossing universe: a middle bigon between the crossings
// and a lobe hanging off each; four regions in total.
CurvePresentation two_crossing() {
    return load_curve(
        "crossing 0 1 4 4 3\n"
        "crossing 1 2 1 3 2\n");
}

}  // namespace

TEST_CASE("figure eight builds the n=2 planar trinity") {
    CurveTrinity ct = from_curve(figure_eight());
    const Trinity& t = ct.trinity;
    CHECK(validate(t).empty());
    CHECK(t.genus() == 0);
    CHECK(t.n() == 2);
    CHECK(ct.green_of_crossing.size() == 1);

    SECTION("green vertices have degree four") {
        for (VertexId g : ct.green_of_crossing) {
            CHECK(t.vertex_colors[g] == VertexColor::Green);
            CHECK(t.degree(g) == 4);
            CHECK(rotation(t, g).size() == 8);  // 4 edges alternating 4 corners
        }
    }
    SECTION("exactly one state after rooting") {
        CHECK(enumerate_states(t).size() == 1);
    }
    SECTION("the unique Kauffman state maps to the unique Tutte state") {
        auto kstates = enumerate_kauffman_states(ct, *t.outer);
        REQUIRE(kstates.size() == 1);
        State s = kauffman_to_matching(ct, kstates[0], *t.outer);
        auto all = enumerate_states(t);
        REQUIRE(all.size() == 1);
        CHECK(s == all[0]);
    }
}

TEST_CASE("curve input validation") {
    CHECK_THROWS_AS(load_curve(""), ParseError);                       // no crossings at all
    CHECK_THROWS_AS(load_curve("crossing 0 0 0 0 1\n"), ParseError);   // strand with 3 ends
    CHECK_THROWS_AS(load_curve("crossing 1 0 0 1 1\n"), ParseError);   // ids not dense
    // A disconnected pairing: two separate one-crossing curves.
    CHECK_THROWS_AS(from_curve(load_curve("crossing 0 0 0 1 1\ncrossing 1 2 2 3 3\n")), TrinityError);
}

TEST_CASE("two-crossing curve: states, Kauffman bijection, transpositions") {
    CurveTrinity ct = from_curve(two_crossing());
    const Trinity& t = ct.trinity;
    REQUIRE(validate(t).empty());
    CHECK(t.n() == 4);
    CHECK(ct.green_of_crossing.size() == 2);
    REQUIRE(t.genus() == 0);

    for (TriangleId outer : t.whites()) {
        Trinity rooted = with_outer(t, outer);
        auto kstates = enumerate_kauffman_states(ct, outer);
        auto states = enumerate_states(rooted);
        INFO("outer " << outer);
        CHECK(kstates.size() == states.size());

        std::set<State> image;
        for (auto& ks : kstates) {
            State s = kauffman_to_matching(ct, ks, outer);
            CHECK(is_state(rooted, s));
            image.insert(s);
        }
        CHECK(image.size() == kstates.size());  // injective
        std::set<State> all(states.begin(), states.end());
        CHECK(image == all);  // onto

        // Kauffman transpositions map to clock moves: states differing at
        // exactly two crossings correspond to neighbors in the transition
        // graph (one clockwise move, in one direction or the other).
        TransitionGraph g = build_graph(rooted);
        for (std::size_t i = 0; i < kstates.size(); ++i)
            for (std::size_t j = i + 1; j < kstates.size(); ++j) {
                int delta = 0;
                for (std::size_t cr = 0; cr < kstates[i].marked_gap.size(); ++cr)
                    delta += kstates[i].marked_gap[cr] != kstates[j].marked_gap[cr];
                if (delta != 2) continue;
                int a = g.node_of(kauffman_to_matching(ct, kstates[i], outer));
                int b = g.node_of(kauffman_to_matching(ct, kstates[j], outer));
                bool adjacent = false;
                for (const auto& e : g.edges)
                    if ((e.from == a && e.to == b) || (e.from == b && e.to == a)) adjacent = true;
                INFO("kauffman states " << i << "," << j);
                CHECK(adjacent);
            }
    }
}

TEST_CASE("degenerate Kauffman input is rejected") {
    CurveTrinity ct = from_curve(figure_eight());
    KauffmanState empty;  // no markers at all on a 1-crossing curve
    CHECK_THROWS_AS(kauffman_to_matching(ct, empty, *ct.trinity.outer), TrinityError);
    KauffmanState bad;
    bad.marked_gap = {7};
    CHECK_THROWS_AS(kauffman_to_matching(ct, bad, *ct.trinity.outer), TrinityError);
}
