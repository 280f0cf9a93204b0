#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "trinity/build.hpp"
#include "trinity/core.hpp"

using namespace trinity;

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex(std::string{}) == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex(std::string{"abc"}) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("trivial trinity F") {
    Trinity f = trivial_trinity();
    CHECK(f.n() == 1);
    CHECK(f.genus() == 0);
    CHECK(f.vertex_count() == 3);
    CHECK(f.edge_count() == 3);
    CHECK(validate(f).empty());
    CHECK(f.eligible_vertices().empty());  // all three vertices are roots

    SECTION("round trip") {
        Trinity f2 = load_trinity(save_trinity(f));
        CHECK(f2 == f);
    }
    SECTION("rotation has two triangles per vertex") {
        for (VertexId v = 0; v < 3; ++v) {
            auto rot = rotation(f, v);
            int tris = 0;
            for (auto& item : rot) tris += item.kind == RotationItem::Triangle;
            CHECK(tris == 2);
        }
    }
    SECTION("dual digraph is one loop per color") {
        for (int c = 0; c < 3; ++c) {
            DualDigraph d = dual_digraph(f, static_cast<VertexColor>(c));
            REQUIRE(d.nodes.size() == 1);
            REQUIRE(d.arcs.size() == 1);
            CHECK(d.arcs[0].tail == d.arcs[0].head);
        }
    }
}

TEST_CASE("smallest toric trinity") {
    Trinity t3 = smallest_toric();
    CHECK(t3.n() == 3);
    CHECK(t3.genus() == 1);
    CHECK(t3.vertex_count() == 3);
    CHECK(t3.edge_count() == 9);
    CHECK(t3.triangle_count() == 6);
    CHECK(validate(t3).empty());

    SECTION("round trip") {
        Trinity back = load_trinity(save_trinity(t3));
        CHECK(back == t3);
    }
    SECTION("red dual digraph: one node, three loops") {
        DualDigraph d = dual_digraph(t3, VertexColor::Red);
        REQUIRE(d.nodes.size() == 1);
        REQUIRE(d.arcs.size() == 3);
        for (auto& a : d.arcs) CHECK(a.tail == a.head);
    }
    SECTION("rotation around the red vertex has 12 slots") {
        auto rot = rotation(t3, 0);
        CHECK(rot.size() == 12);  // 6 triangle slots alternating with 6 edges
        int tris = 0;
        for (auto& item : rot) tris += item.kind == RotationItem::Triangle;
        CHECK(tris == 6);
    }
    SECTION("degree condition of dual digraphs") {
        for (int c = 0; c < 3; ++c) {
            DualDigraph d = dual_digraph(t3, static_cast<VertexColor>(c));
            CHECK(d.arcs.size() == 3);
            std::vector<int> in(d.nodes.size(), 0), out(d.nodes.size(), 0);
            for (auto& a : d.arcs) {
                in[d.index_of(a.head)]++;
                out[d.index_of(a.tail)]++;
            }
            CHECK(in == out);
        }
    }
}

TEST_CASE("file format errors") {
    SECTION("same-color edge rejected") {
        std::string text =
            "genus 0\nouter 1\n"
            "vertex 0 R\nvertex 1 R\nvertex 2 B\n"
            "edge 0 0 1\nedge 1 0 2\nedge 2 0 1\n"
            "triangle 0 +0 -1 -2\ntriangle 1 +1 -0 +2\n";
        CHECK_THROWS_AS(load_trinity(text), TrinityError);
    }
    SECTION("parse error on malformed line") {
        CHECK_THROWS_AS(load_trinity("vertex 0 purple\n"), ParseError);
    }
    SECTION("flipping one triangle breaks edge sides") {
        Trinity t3 = smallest_toric();
        std::swap(t3.tri_edges[0][0], t3.tri_edges[0][2]);
        for (auto& se : t3.tri_edges[0]) se.forward = !se.forward;
        CHECK_THROWS_AS(t3.finalize(), ValidationError);
    }
    SECTION("genus header must match") {
        Trinity t3 = smallest_toric();
        std::string text = save_trinity(t3);
        text.replace(text.find("genus 1"), 7, "genus 0");
        CHECK_THROWS_AS(load_trinity(text), ValidationError);
    }
}

TEST_CASE("rotation steps invert each other") {
    Trinity t3 = smallest_toric();
    for (TriangleId tr = 0; tr < t3.triangle_count(); ++tr)
        for (int j = 0; j < 3; ++j) {
            Corner c{tr, j};
            CHECK(t3.cw_next(t3.ccw_next(c)) == c);
            CHECK(t3.ccw_next(t3.cw_next(c)) == c);
            CHECK(t3.corner_vertex(t3.ccw_next(c)) == t3.corner_vertex(c));
        }
}

TEST_CASE("separation on the sphere and the torus") {
    Trinity f = trivial_trinity();
    SECTION("every embedded cycle on the sphere separates") {
        // The boundary of the black triangle of F.
        EdgeCycle c;
        for (auto& se : f.tri_edges[0]) c.steps.push_back(se);
        CHECK(is_separating(f, c));
    }
    Trinity t3 = smallest_toric();
    SECTION("a black triangle boundary on the torus separates") {
        EdgeCycle c;
        for (auto& se : t3.tri_edges[0]) c.steps.push_back(se);
        CHECK(is_separating(t3, c));
    }
    SECTION("non-cycle input is rejected") {
        EdgeCycle c;
        c.steps.push_back(t3.tri_edges[0][0]);
        CHECK_THROWS_AS(is_separating(t3, c), TrinityError);
    }
    SECTION("some embedded cycle on the torus is essential") {
        // Scan all color-complete 3-cycles; the torus must have essential ones.
        bool found_nonsep = false;
        for (EdgeId er = 0; er < t3.edge_count() && !found_nonsep; ++er) {
            if (t3.edge_color(er) != VertexColor::Red) continue;
            for (EdgeId eg = 0; eg < t3.edge_count() && !found_nonsep; ++eg) {
                if (t3.edge_color(eg) != VertexColor::Green) continue;
                for (EdgeId ev = 0; ev < t3.edge_count() && !found_nonsep; ++ev) {
                    if (t3.edge_color(ev) != VertexColor::Blue) continue;
                    EdgeCycle c;
                    auto dir = [&](EdgeId e, VertexId from) {
                        return SignedEdge{e, t3.edge_ends[e][0] == from};
                    };
                    // red: g->b, green: b->r, blue: r->g chains the cycle.
                    VertexId g = 1, b = 2, r = 0;
                    c.steps = {dir(er, g), dir(eg, b), dir(ev, r)};
                    try {
                        if (!is_separating(t3, c)) found_nonsep = true;
                    } catch (const TrinityError&) {
                    }
                }
            }
        }
        CHECK(found_nonsep);
    }
}

TEST_CASE("canonical form invariance under relabeling") {
    Trinity t3 = smallest_toric();
    CanonicalForm base = canonical_form(t3);
    CHECK(base.digest.size() == 64);

    // Relabel triangles and edges by rotation-friendly permutations.
    auto permuted = [&](const std::vector<int>& em, const std::vector<int>& tm,
                        const std::vector<int>& vm) {
        Trinity p;
        p.vertex_colors.resize(t3.vertex_count());
        for (VertexId v = 0; v < t3.vertex_count(); ++v) p.vertex_colors[vm[v]] = t3.vertex_colors[v];
        p.edge_ends.resize(t3.edge_count());
        for (EdgeId e = 0; e < t3.edge_count(); ++e)
            p.edge_ends[em[e]] = {vm[t3.edge_ends[e][0]], vm[t3.edge_ends[e][1]]};
        p.tri_edges.resize(t3.triangle_count());
        for (TriangleId tr = 0; tr < t3.triangle_count(); ++tr) {
            auto bd = t3.tri_edges[tr];
            for (auto& se : bd) se.edge = em[se.edge];
            std::rotate(bd.begin(), bd.begin() + (tr % 3), bd.end());  // rotating a boundary is harmless
            p.tri_edges[tm[tr]] = bd;
        }
        p.finalize();
        return p;
    };
    std::vector<int> em{4, 7, 2, 8, 0, 3, 5, 1, 6};
    std::vector<int> tm{3, 0, 5, 1, 4, 2};
    std::vector<int> vm{1, 2, 0};
    Trinity p = permuted(em, tm, vm);
    CHECK(validate(p).empty());
    CHECK(canonical_form(p).encoding == base.encoding);
    CHECK(canonical_form(p).digest == base.digest);

    Trinity f = trivial_trinity();
    CHECK(canonical_form(f).digest != base.digest);
}
