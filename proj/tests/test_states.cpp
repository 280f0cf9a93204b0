#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "trinity/build.hpp"
#include "trinity/states.hpp"

using namespace trinity;

TEST_CASE("F has exactly the empty state") {
    Trinity f = trivial_trinity();
    auto states = enumerate_states(f);
    REQUIRE(states.size() == 1);
    CHECK(states[0].match.empty());
    CHECK(is_state(f, states[0]));
    CHECK(arrows(f, states[0])[0].empty());
}

TEST_CASE("T3 has six states") {
    Trinity t3 = smallest_toric();
    auto states = enumerate_states(t3);
    REQUIRE(states.size() == 6);
    std::set<State> uniq(states.begin(), states.end());
    CHECK(uniq.size() == 6);
    for (auto& s : states) CHECK(is_state(t3, s));

    SECTION("non-injective map is rejected") {
        State bad = states[0];
        bad.match[1] = bad.match[0];
        CHECK_FALSE(is_state(t3, bad));
    }
    SECTION("agreement with the bipartite matching oracle") {
        auto oracle = oracles::all_matchings(t3);
        CHECK(oracles::same_state_sets(states, oracle));
    }
    SECTION("arrows: one arc per white triangle, colors consistent") {
        for (auto& s : states) {
            auto by_color = arrows(t3, s);
            std::size_t total = by_color[0].size() + by_color[1].size() + by_color[2].size();
            CHECK(total == 3);
            for (int c = 0; c < 3; ++c)
                for (auto& a : by_color[c]) {
                    CHECK(t3.vertex_colors[a.head] == static_cast<VertexColor>(c));
                    CHECK(t3.edge_color(a.id) == static_cast<VertexColor>(c));
                }
        }
    }
    SECTION("state serialization round trip") {
        for (auto& s : states) {
            State back = load_state(t3, save_state(t3, s));
            CHECK(back == s);
        }
    }
}

TEST_CASE("T3 wreaths") {
    Trinity t3 = smallest_toric();
    SECTION("find_wreath yields a one-cycle wreath") {
        Wreath w = find_wreath(t3, VertexColor::Red);
        CHECK(w.k == 1);
        CHECK(w.arcs.size() == 1);  // a single loop arc covers the one red vertex
        CHECK(is_wreath(t3, w));
    }
    SECTION("each loop arc is its own wreath; extensions cover all six states") {
        DualDigraph d = dual_digraph(t3, VertexColor::Red);
        std::set<State> all;
        int wreath_count = 0;
        for (auto& a : d.arcs) {
            Wreath w{VertexColor::Red, {a.id}, 1};
            if (!is_wreath(t3, w)) continue;
            ++wreath_count;
            auto ext = extend_wreath(t3, w);
            CHECK(ext.size() == 2);  // 2^1
            for (auto& s : ext) {
                CHECK(is_state(t3, s));
                all.insert(s);
            }
        }
        CHECK(wreath_count == 3);
        CHECK(all.size() == 6);  // disjoint union over the three wreaths
    }
    SECTION("wreaths exist for all three colors") {
        for (int c = 0; c < 3; ++c) CHECK(is_wreath(t3, find_wreath(t3, static_cast<VertexColor>(c))));
    }
}

TEST_CASE("wreaths derived from states extend back to them") {
    Trinity t3 = smallest_toric();
    for (auto& s : enumerate_states(t3)) {
        auto reds = arrows(t3, s)[static_cast<int>(VertexColor::Red)];
        std::vector<EdgeId> arcs;
        for (auto& a : reds) arcs.push_back(a.id);
        DualDigraph d = dual_digraph(t3, VertexColor::Red);
        auto cycles = arc_set_cycles(d, arcs);
        bool separating = false;
        for (auto& cyc : cycles)
            if (dual_cycle_separating(t3, cyc)) separating = true;
        if (separating) continue;
        Wreath w{VertexColor::Red, arcs, static_cast<int>(cycles.size())};
        REQUIRE(is_wreath(t3, w));
        auto ext = extend_wreath(t3, w);
        CHECK(ext.size() == (std::size_t{1} << w.k));
        CHECK(std::find(ext.begin(), ext.end(), s) != ext.end());
    }
}
