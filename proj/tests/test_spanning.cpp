#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trinity/graph.hpp"
#include "trinity/spanning.hpp"

using namespace trinity;

TEST_CASE("F: one empty arborescence per color") {
    Trinity f = trivial_trinity();
    for (int c = 0; c < 3; ++c) {
        auto x = static_cast<VertexColor>(c);
        DualDigraph d = dual_digraph(f, x);
        VertexId root = f.corners(*f.outer)[f.slot_of_corner_color(*f.outer, x)];
        CHECK(count_arborescences(d, root) == 1);
        auto all = enumerate_arborescences(d, root);
        REQUIRE(all.size() == 1);
        CHECK(all[0].arcs.empty());
        CHECK(clocked_arborescence(f, x).arcs.empty());
    }
    CHECK(clocked_state(f).match.empty());
}

TEST_CASE("tree trinity theorem on sampled planar trinities") {
    PlanarSampler sampler(0xbeef);
    for (int n : {2, 3, 4, 5, 6}) {
        Trinity p = sampler.sample(n);
        auto states = enumerate_states(p);
        std::array<long long, 3> rho{};
        for (int c = 0; c < 3; ++c) {
            auto x = static_cast<VertexColor>(c);
            DualDigraph d = dual_digraph(p, x);
            VertexId root = p.corners(*p.outer)[p.slot_of_corner_color(*p.outer, x)];
            rho[c] = count_arborescences(d, root);
            auto all = enumerate_arborescences(d, root);
            CHECK(static_cast<long long>(all.size()) == rho[c]);  // determinant vs enumeration
            for (auto& a : all) {
                CHECK(is_arborescence(d, root, a.arcs));
                auto ext = extend_arborescence(p, a);
                REQUIRE(ext.has_value());
                CHECK(is_state(p, *ext));
            }
        }
        INFO("n=" << n);
        CHECK(rho[0] == rho[1]);
        CHECK(rho[1] == rho[2]);
        CHECK(rho[0] == static_cast<long long>(states.size()));
    }
}

TEST_CASE("state to arborescence to state is the identity") {
    PlanarSampler sampler(0xfeed);
    Trinity p = sampler.sample(4);
    DualDigraph d = dual_digraph(p, VertexColor::Red);
    std::set<std::vector<EdgeId>> seen;
    for (auto& s : enumerate_states(p)) {
        auto reds = arrows(p, s)[static_cast<int>(VertexColor::Red)];
        Arborescence a{VertexColor::Red, {}};
        for (auto& arc : reds) a.arcs.push_back(arc.id);
        std::sort(a.arcs.begin(), a.arcs.end());
        VertexId root = p.corners(*p.outer)[p.slot_of_corner_color(*p.outer, VertexColor::Red)];
        CHECK(is_arborescence(d, root, a.arcs));  // red arrows span (Tutte)
        CHECK(seen.insert(a.arcs).second);        // injectivity of the map
        auto ext = extend_arborescence(p, a);
        REQUIRE(ext.has_value());
        CHECK(*ext == s);
    }
}

TEST_CASE("non-arborescences are rejected") {
    PlanarSampler sampler(0xdead);
    Trinity p = sampler.sample(3);
    DualDigraph d = dual_digraph(p, VertexColor::Red);
    Arborescence junk{VertexColor::Red, {}};
    for (auto& a : d.arcs) junk.arcs.push_back(a.id);  // every arc: too many
    std::sort(junk.arcs.begin(), junk.arcs.end());
    if (junk.arcs.size() != d.nodes.size() - 1) {
        CHECK_FALSE(extend_arborescence(p, junk).has_value());
    }
}

TEST_CASE("order timeline and the greedy characterization") {
    PlanarSampler sampler(0xace);
    for (int n : {3, 4, 5}) {
        Trinity p = sampler.sample(n);
        for (int c = 0; c < 3; ++c) {
            auto x = static_cast<VertexColor>(c);
            DualDigraph d = dual_digraph(p, x);
            VertexId root = p.corners(*p.outer)[p.slot_of_corner_color(*p.outer, x)];
            EdgeId kappa = p.tri_edges[*p.outer][p.slot_of_edge_color(*p.outer, x)].edge;
            Arborescence clocked = clocked_arborescence(p, x);
            REQUIRE(is_arborescence(d, root, clocked.arcs));

            std::map<EdgeId, const DualArc*> by_id;
            for (auto& a : d.arcs) by_id[a.id] = &a;

            auto check_greedy = [&](const Arborescence& a, bool expect_clocked) {
                OrderTimeline tl = order_timeline(p, a);
                // kappa* is always the least element of the extended order.
                CHECK(tl.events.front().arc == kappa);
                CHECK(tl.events.front().kind == OrderTimeline::Event::FirstCrossing);

                std::set<EdgeId> tree(a.arcs.begin(), a.arcs.end());
                bool greedy = true;
                for (VertexId y : d.nodes) {
                    if (y == root) continue;
                    EdgeId into = -1;
                    int best_other = INT32_MAX;
                    for (auto& arc : d.arcs) {
                        if (arc.head != y) continue;
                        if (tree.count(arc.id))
                            into = arc.id;
                        else
                            best_other = std::min(best_other, tl.order_of(arc.id));
                    }
                    REQUIRE(into >= 0);
                    if (tl.order_of(into) > best_other) greedy = false;
                }
                CHECK(greedy == expect_clocked);
            };

            check_greedy(clocked, true);
            // Every other arborescence must violate the characterization.
            for (auto& a : enumerate_arborescences(d, root))
                if (a.arcs != clocked.arcs) check_greedy(a, false);
        }
    }
}

TEST_CASE("clocked state is the lattice maximum") {
    PlanarSampler sampler(0xc10c);
    for (int n : {2, 3, 4, 5}) {
        Trinity p = sampler.sample(n);
        TransitionGraph g = build_graph(p);
        REQUIRE(g.components.size() == 1);
        LatticeView lv = lattice_view(g, 0);
        State clocked = clocked_state(p);
        INFO("n=" << n << " irreducible=" << is_irreducible(p));
        CHECK(clocked == g.states[lv.max_node]);
        for (auto& [tri, dir] : empty_black_triangles(p, clocked)) CHECK(dir == MoveDir::CCW);
    }
}
