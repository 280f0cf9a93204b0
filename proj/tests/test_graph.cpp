#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "trinity/graph.hpp"
#include "trinity/verify.hpp"

using namespace trinity;

TEST_CASE("T3 transition graph: three isolated nodes and one directed 3-cycle") {
    Trinity t3 = smallest_toric();
    TransitionGraph g = build_graph(t3);
    REQUIRE(g.states.size() == 6);
    REQUIRE(g.edges.size() == 3);

    auto summary = summarize_components(g);
    CHECK(summary.isolated == 3);
    CHECK(summary.cyclic == 1);
    CHECK(summary.cyclic_sizes == std::vector<int>{3});

    std::set<MoveSite> labels;
    for (auto& e : g.edges) {
        labels.insert(e.site);
        CHECK(e.site.is_triangle());
    }
    CHECK(labels.size() == 3);

    SECTION("the cyclic component has no extrema and every state recurrent") {
        for (auto& comp : g.components) {
            if (comp.cls != ComponentClass::Cyclic) continue;
            CHECK(comp.local_minima == 0);
            CHECK(comp.local_maxima == 0);
            CHECK_THROWS_AS(lattice_view(g, g.component_of[comp.nodes[0]]), CyclicComponentError);
        }
    }
    SECTION("recurrence orders use each black triangle once") {
        for (auto& comp : g.components) {
            if (comp.cls != ComponentClass::Cyclic) continue;
            for (int v : comp.nodes) {
                auto order = recurrence_order(t3, g, v);
                REQUIRE(order.size() == 3);
                CHECK(std::set<TriangleId>(order.begin(), order.end()).size() == 3);
            }
        }
    }
    SECTION("isolated nodes form their own trivial lattices") {
        for (auto& comp : g.components) {
            if (comp.cls != ComponentClass::Acyclic) continue;
            LatticeView lv = lattice_view(g, g.component_of[comp.nodes[0]]);
            CHECK(lv.min_node == lv.max_node);
        }
    }
}

TEST_CASE("F transition graph is a single node") {
    TransitionGraph g = build_graph(trivial_trinity());
    CHECK(g.states.size() == 1);
    CHECK(g.edges.empty());
    CHECK(g.components.size() == 1);
    CHECK(g.components[0].cls == ComponentClass::Acyclic);
}

TEST_CASE("planar fixtures: connected lattices with verified theorems") {
    PlanarSampler sampler(0x1234);
    for (int n : {2, 3, 4, 5}) {
        Trinity p = sampler.sample(n);
        VerifyReport r = verify_trinity(p);
        for (auto& c : r.checks) {
            INFO("n=" << n << " check " << c.name << " " << c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("meet and join basics on a planar lattice") {
    PlanarSampler sampler(0x77);
    Trinity p = sampler.sample(4);
    TransitionGraph g = build_graph(p);
    REQUIRE(g.components.size() == 1);
    LatticeView lv = lattice_view(g, 0);
    const State& bottom = g.states[lv.min_node];
    for (auto& s : g.states) {
        CHECK(meet(g, lv, s, s) == s);
        CHECK(join(g, lv, s, s) == s);
        CHECK(meet(g, lv, bottom, s) == bottom);
        CHECK(join(g, lv, bottom, s) == s);
    }
}

TEST_CASE("phi replay reconstructs each state from the minimum") {
    PlanarSampler sampler(0x99);
    Trinity p = sampler.sample(4);
    TransitionGraph g = build_graph(p);
    LatticeView lv = lattice_view(g, 0);
    if (!is_irreducible(p)) return;  // replay via apply_move needs plain triangle sites
    for (auto& comp : g.components)
        for (int v : comp.nodes) {
            // Replay: repeatedly apply a clockwise move on a site with
            // remaining multiplicity; phi must reach zero exactly at v.
            std::vector<int> need = lv.phi[v];
            State cur = g.states[lv.min_node];
            bool progress = true;
            while (progress) {
                progress = false;
                for (auto& [tri, dir] : empty_black_triangles(p, cur)) {
                    if (dir != MoveDir::CW) continue;
                    auto it = std::find(lv.sites.begin(), lv.sites.end(), MoveSite::of_triangle(tri));
                    if (it == lv.sites.end()) continue;
                    std::size_t idx = it - lv.sites.begin();
                    if (need[idx] > 0) {
                        need[idx]--;
                        cur = apply_move(p, cur, {tri, MoveDir::CW});
                        progress = true;
                        break;
                    }
                }
            }
            CHECK(std::all_of(need.begin(), need.end(), [](int x) { return x == 0; }));
            CHECK(cur == g.states[v]);
        }
}

TEST_CASE("product theorem on explicit sums") {
    Trinity t3 = smallest_toric();
    PlanarSampler sampler(0x31337);
    Trinity p = sampler.sample(2);
    std::string why;
    CHECK(product_theorem_holds(t3, t3.blacks()[0], p, &why));
    INFO(why);

    Trinity base = sampler.sample(4);
    CHECK(product_theorem_holds(base, base.blacks()[1], p, &why));
    INFO(why);

    SECTION("product with the one-node graph is the graph itself") {
        TransitionGraph g = build_graph(t3);
        TransitionGraph unit = build_graph(trivial_trinity());
        ProductGraph prod = graph_product(g, unit);
        CHECK(prod.n1 * prod.n2 == static_cast<int>(g.states.size()));
        CHECK(prod.edges.size() == g.edges.size());
    }
    SECTION("products of acyclic graphs stay acyclic") {
        Trinity q = sampler.sample(3);
        CHECK(product_theorem_holds(q, q.blacks()[0], p, &why));
    }
}

TEST_CASE("move commutation and cancellation properties") {
    // Lemma-style properties on a fixture with enough simultaneous moves: use
    // a planar sample with several empty triangles.
    PlanarSampler sampler(0x4242);
    Trinity p = sampler.sample(5);
    if (!is_irreducible(p)) p = smallest_toric();
    TransitionGraph g = build_graph(p);

    for (auto& s : g.states) {
        auto empties = empty_black_triangles(p, s);
        std::vector<TriangleId> cw;
        for (auto& [tri, dir] : empties)
            if (dir == MoveDir::CW) cw.push_back(tri);
        // Independence: two applicable clockwise moves commute.
        for (std::size_t i = 0; i < cw.size(); ++i)
            for (std::size_t j = i + 1; j < cw.size(); ++j) {
                State ab = apply_move(p, apply_move(p, s, {cw[i], MoveDir::CW}), {cw[j], MoveDir::CW});
                State ba = apply_move(p, apply_move(p, s, {cw[j], MoveDir::CW}), {cw[i], MoveDir::CW});
                CHECK(ab == ba);
                // The second move stayed applicable in both orders; swapping
                // a ccw/cw pair is the same statement read backwards.
            }
    }
}

TEST_CASE("graph exports are well-formed") {
    Trinity t3 = smallest_toric();
    TransitionGraph g = build_graph(t3);
    std::string dot = graph_to_dot(t3, g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    std::string json = graph_to_json(t3, g);
    CHECK(json.find("\"components\"") != std::string::npos);
}
