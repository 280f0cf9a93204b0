#include "trinity/build.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace trinity {

namespace {

Trinity make_trinity(std::vector<VertexColor> vc, std::vector<std::array<VertexId, 2>> ee,
                     std::vector<std::array<SignedEdge, 3>> te, std::optional<TriangleId> outer) {
    Trinity t;
    t.vertex_colors = std::move(vc);
    t.edge_ends = std::move(ee);
    t.tri_edges = std::move(te);
    t.outer = outer;
    t.finalize();
    return t;
}

bool connected_triangulation(const Trinity& t) {
    if (t.triangle_count() == 0) return false;
    std::vector<char> seen(t.triangle_count(), 0);
    std::queue<TriangleId> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        TriangleId cur = q.front();
        q.pop();
        for (auto& se : t.tri_edges[cur]) {
            TriangleId o = t.other_triangle(se.edge, cur);
            if (!seen[o]) {
                seen[o] = 1;
                ++cnt;
                q.push(o);
            }
        }
    }
    return cnt == t.triangle_count();
}

}  // namespace

Trinity trivial_trinity() {
    // vertices: 0 red, 1 green, 2 blue; edges: 0 red (g-b), 1 green (b-r
    // reversed storage r? stored (0,2) means red->blue), 2 blue (r-g).
    std::vector<VertexColor> vc{VertexColor::Red, VertexColor::Green, VertexColor::Blue};
    std::vector<std::array<VertexId, 2>> ee{{1, 2}, {0, 2}, {0, 1}};
    std::vector<std::array<SignedEdge, 3>> te{
        {SignedEdge{2, true}, SignedEdge{0, true}, SignedEdge{1, false}},   // black: r->g->b
        {SignedEdge{1, true}, SignedEdge{0, false}, SignedEdge{2, false}},  // white: r->b->g
    };
    return make_trinity(std::move(vc), std::move(ee), std::move(te), 1);
}

Trinity smallest_toric() {
    // One vertex per color; the square picture gives three edges of each
    // color and six triangles, blacks 0,2,5.
    std::vector<VertexColor> vc{VertexColor::Red, VertexColor::Green, VertexColor::Blue};
    std::vector<std::array<VertexId, 2>> ee{
        {1, 2}, {2, 1}, {1, 2},  // red e0..e2
        {0, 2}, {2, 0}, {0, 2},  // green e3..e5
        {1, 0}, {0, 1}, {1, 0},  // blue e6..e8
    };
    std::vector<std::array<SignedEdge, 3>> te{
        {SignedEdge{0, true}, SignedEdge{3, false}, SignedEdge{6, false}},  // t0 black
        {SignedEdge{3, true}, SignedEdge{2, false}, SignedEdge{7, false}},  // t1 white
        {SignedEdge{4, true}, SignedEdge{8, false}, SignedEdge{2, true}},   // t2 black
        {SignedEdge{1, true}, SignedEdge{6, true}, SignedEdge{4, false}},   // t3 white
        {SignedEdge{8, true}, SignedEdge{5, true}, SignedEdge{0, false}},   // t4 white
        {SignedEdge{7, true}, SignedEdge{1, false}, SignedEdge{5, false}},  // t5 black
    };
    return make_trinity(std::move(vc), std::move(ee), std::move(te), std::nullopt);
}

Trinity trinity_from_gluing(const std::array<std::vector<int>, 3>& phi, std::optional<TriangleId> outer) {
    const int n = static_cast<int>(phi[0].size());
    for (const auto& p : phi) {
        if (static_cast<int>(p.size()) != n) throw TrinityError("gluing maps differ in size");
        std::vector<char> hit(n, 0);
        for (int v : p) {
            if (v < 0 || v >= n || hit[v]) throw TrinityError("gluing map is not a bijection");
            hit[v] = 1;
        }
    }
    // Black corners: 0=red, 1=green, 2=blue; slots blue, red, green.
    // White corners: 0=red, 1=blue, 2=green; slots green, red, blue.
    const int red = static_cast<int>(VertexColor::Red);
    const int green = static_cast<int>(VertexColor::Green);
    const int blue = static_cast<int>(VertexColor::Blue);

    std::vector<int> parent(6 * n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto bc = [&](int i, int corner) { return 3 * i + corner; };
    auto wc = [&](int j, int corner) { return 3 * (n + j) + corner; };

    for (int i = 0; i < n; ++i) {
        int wr = phi[red][i], we = phi[green][i], wv = phi[blue][i];
        unite(bc(i, 1), wc(wr, 2));  // red edge: green corners
        unite(bc(i, 2), wc(wr, 1));  //           blue corners
        unite(bc(i, 2), wc(we, 1));  // green edge: blue corners
        unite(bc(i, 0), wc(we, 0));  //             red corners
        unite(bc(i, 0), wc(wv, 0));  // blue edge: red corners
        unite(bc(i, 1), wc(wv, 2));  //            green corners
    }

    auto corner_color = [&](int key) {
        int tri = key / 3, slot = key % 3;
        if (tri < n) return std::array<int, 3>{red, green, blue}[slot];
        return std::array<int, 3>{red, blue, green}[slot];
    };

    std::vector<int> vid(6 * n, -1);
    std::vector<VertexColor> vcols;
    for (int key = 0; key < 6 * n; ++key) {
        int root = find(key);
        if (vid[root] < 0) {
            vid[root] = static_cast<int>(vcols.size());
            vcols.push_back(static_cast<VertexColor>(corner_color(key)));
        }
        vid[key] = vid[root];
    }

    // Edge ids: reds i, greens n+i, blues 2n+i; endpoints follow the black
    // side traversal so blacks use every edge forward.
    std::vector<std::array<VertexId, 2>> ee(3 * n);
    for (int i = 0; i < n; ++i) {
        ee[i] = {vid[bc(i, 1)], vid[bc(i, 2)]};          // red: g -> b
        ee[n + i] = {vid[bc(i, 2)], vid[bc(i, 0)]};      // green: b -> r
        ee[2 * n + i] = {vid[bc(i, 0)], vid[bc(i, 1)]};  // blue: r -> g
    }
    std::vector<std::array<SignedEdge, 3>> te(2 * n);
    std::array<std::vector<int>, 3> inv;
    for (int c = 0; c < 3; ++c) {
        inv[c].assign(n, -1);
        for (int i = 0; i < n; ++i) inv[c][phi[c][i]] = i;
    }
    for (int i = 0; i < n; ++i)
        te[i] = {SignedEdge{2 * n + i, true}, SignedEdge{i, true}, SignedEdge{n + i, true}};
    for (int j = 0; j < n; ++j)
        te[n + j] = {SignedEdge{n + inv[green][j], false}, SignedEdge{inv[red][j], false},
                     SignedEdge{2 * n + inv[blue][j], false}};

    return make_trinity(std::move(vcols), std::move(ee), std::move(te), outer);
}

std::array<std::vector<int>, 3> gluing_of(const Trinity& t) {
    std::vector<int> black_ix(t.triangle_count(), -1), white_ix(t.triangle_count(), -1);
    for (std::size_t i = 0; i < t.blacks().size(); ++i) black_ix[t.blacks()[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < t.whites().size(); ++i) white_ix[t.whites()[i]] = static_cast<int>(i);
    std::array<std::vector<int>, 3> phi;
    for (int c = 0; c < 3; ++c) phi[c].assign(t.blacks().size(), -1);
    for (std::size_t i = 0; i < t.blacks().size(); ++i) {
        TriangleId b = t.blacks()[i];
        for (int c = 0; c < 3; ++c) {
            EdgeId e = t.tri_edges[b][t.slot_of_edge_color(b, static_cast<VertexColor>(c))].edge;
            phi[c][i] = white_ix[t.other_triangle(e, b)];
        }
    }
    return phi;
}

// --- connected sums -------------------------------------------------------------

Trinity connected_sum(const Trinity& t, TriangleId b, const Trinity& t0, SumProvenance* prov) {
    if (t.triangle_color(b) != TriangleColor::Black)
        throw TrinityError("connected_sum: attachment triangle is not black");
    if (!t0.planar() || !t0.outer) throw TrinityError("connected_sum: summand must be planar with an outer triangle");
    TriangleId outer0 = *t0.outer;

    // Boundary correspondence by color: the X-edge of b meets the X-edge of
    // t0's outer triangle; roots meet b's corners.
    std::array<EdgeId, 3> b_edge{}, o_edge{};
    std::array<VertexId, 3> b_vert{}, o_vert{};
    for (int c = 0; c < 3; ++c) {
        auto col = static_cast<VertexColor>(c);
        b_edge[c] = t.tri_edges[b][t.slot_of_edge_color(b, col)].edge;
        o_edge[c] = t0.tri_edges[outer0][t0.slot_of_edge_color(outer0, col)].edge;
        b_vert[c] = t.corners(b)[t.slot_of_corner_color(b, col)];
        o_vert[c] = t0.corners(outer0)[t0.slot_of_corner_color(outer0, col)];
    }

    SumProvenance p;
    p.base_vertex.assign(t.vertex_count(), -1);
    p.base_edge.assign(t.edge_count(), -1);
    p.base_tri.assign(t.triangle_count(), -1);
    p.part_vertex.assign(t0.vertex_count(), -1);
    p.part_edge.assign(t0.edge_count(), -1);
    p.part_tri.assign(t0.triangle_count(), -1);

    std::vector<VertexColor> vc;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        p.base_vertex[v] = static_cast<int>(vc.size());
        vc.push_back(t.vertex_colors[v]);
    }
    for (int c = 0; c < 3; ++c) p.part_vertex[o_vert[c]] = p.base_vertex[b_vert[c]];
    for (VertexId v = 0; v < t0.vertex_count(); ++v)
        if (p.part_vertex[v] < 0) {
            p.part_vertex[v] = static_cast<int>(vc.size());
            vc.push_back(t0.vertex_colors[v]);
        }

    std::vector<std::array<VertexId, 2>> ee;
    std::vector<char> part_edge_flip(t0.edge_count(), 0);
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        p.base_edge[e] = static_cast<int>(ee.size());
        ee.push_back(t.edge_ends[e]);
    }
    for (int c = 0; c < 3; ++c) {
        p.part_edge[o_edge[c]] = p.base_edge[b_edge[c]];
        // Flip when the stored endpoint orders disagree colorwise.
        part_edge_flip[o_edge[c]] = t0.vertex_colors[t0.edge_ends[o_edge[c]][0]] !=
                                    t.vertex_colors[t.edge_ends[b_edge[c]][0]];
    }
    for (EdgeId e = 0; e < t0.edge_count(); ++e)
        if (p.part_edge[e] < 0) {
            p.part_edge[e] = static_cast<int>(ee.size());
            ee.push_back({p.part_vertex[t0.edge_ends[e][0]], p.part_vertex[t0.edge_ends[e][1]]});
        }

    std::vector<std::array<SignedEdge, 3>> te;
    for (TriangleId tr = 0; tr < t.triangle_count(); ++tr) {
        if (tr == b) continue;
        p.base_tri[tr] = static_cast<int>(te.size());
        std::array<SignedEdge, 3> bd = t.tri_edges[tr];
        for (auto& se : bd) se.edge = p.base_edge[se.edge];
        te.push_back(bd);
    }
    for (TriangleId tr = 0; tr < t0.triangle_count(); ++tr) {
        if (tr == outer0) continue;
        p.part_tri[tr] = static_cast<int>(te.size());
        std::array<SignedEdge, 3> bd = t0.tri_edges[tr];
        for (auto& se : bd) {
            if (part_edge_flip[se.edge]) se.forward = !se.forward;
            se.edge = p.part_edge[se.edge];
        }
        te.push_back(bd);
    }

    std::optional<TriangleId> outer;
    if (t.outer) outer = p.base_tri[*t.outer];
    Trinity sum = make_trinity(std::move(vc), std::move(ee), std::move(te), outer);
    if (prov) *prov = std::move(p);
    return sum;
}

// --- decomposition ---------------------------------------------------------------

std::vector<SumSite> sum_sites(const Trinity& t) {
    std::vector<std::vector<EdgeId>> green_at(t.vertex_count()), blue_at(t.vertex_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        if (t.edge_color(e) == VertexColor::Green) {
            green_at[t.edge_ends[e][0]].push_back(e);
            green_at[t.edge_ends[e][1]].push_back(e);
        } else if (t.edge_color(e) == VertexColor::Blue) {
            blue_at[t.edge_ends[e][0]].push_back(e);
            blue_at[t.edge_ends[e][1]].push_back(e);
        }
    }

    std::vector<SumSite> sites;
    std::set<std::array<EdgeId, 3>> seen;
    for (EdgeId er = 0; er < t.edge_count(); ++er) {
        if (t.edge_color(er) != VertexColor::Red) continue;
        VertexId g = t.edge_ends[er][0], bl = t.edge_ends[er][1];
        if (t.vertex_colors[g] != VertexColor::Green) std::swap(g, bl);
        for (EdgeId eg : green_at[bl]) {
            VertexId r = t.edge_ends[eg][0] == bl ? t.edge_ends[eg][1] : t.edge_ends[eg][0];
            if (t.vertex_colors[r] != VertexColor::Red) continue;  // green edge not at this blue vertex
            for (EdgeId ev : blue_at[r]) {
                VertexId g2 = t.edge_ends[ev][0] == r ? t.edge_ends[ev][1] : t.edge_ends[ev][0];
                if (g2 != g) continue;
                std::array<EdgeId, 3> key{er, eg, ev};
                std::sort(key.begin(), key.end());
                if (!seen.insert(key).second) continue;

                std::vector<char> parity(t.edge_count(), 0);
                parity[er] = parity[eg] = parity[ev] = 1;
                auto coloring = two_color_triangles(t, parity);
                if (!coloring) continue;  // non-separating (toric only)
                auto& col = *coloring;

                // One side sees only black triangles across the cycle edges.
                char black_side = -1;
                bool consistent = true;
                for (EdgeId e : {er, eg, ev}) {
                    Corner f = t.side(e, true), bwd = t.side(e, false);
                    Corner black = t.triangle_color(f.tri) == TriangleColor::Black ? f : bwd;
                    if (black_side < 0)
                        black_side = col[black.tri];
                    else if (black_side != col[black.tri])
                        consistent = false;
                }
                if (!consistent)
                    throw TrinityError("sum_sites: separating 3-cycle with mixed side colors");

                std::vector<TriangleId> disk, rest;
                for (TriangleId tr = 0; tr < t.triangle_count(); ++tr)
                    (col[tr] == black_side ? disk : rest).push_back(tr);
                if (disk.size() <= 1 || rest.size() <= 1) continue;  // trivial sum
                if (t.outer && col[*t.outer] == black_side) continue;

                if (t.genus() == 1) {
                    // Only the disk side can be collapsed; check it is one.
                    std::set<VertexId> vs;
                    std::set<EdgeId> es;
                    for (TriangleId tr : disk) {
                        for (VertexId v : t.corners(tr)) vs.insert(v);
                        for (auto& se : t.tri_edges[tr]) es.insert(se.edge);
                    }
                    int chi = static_cast<int>(vs.size()) - static_cast<int>(es.size()) +
                              static_cast<int>(disk.size());
                    if (chi != 1) continue;
                }
                sites.push_back(SumSite{key, std::move(disk)});
            }
        }
    }
    std::sort(sites.begin(), sites.end(), [](const SumSite& a, const SumSite& b) {
        if (a.disk.size() != b.disk.size()) return a.disk.size() < b.disk.size();
        return std::tie(a.edges, a.disk) < std::tie(b.edges, b.disk);
    });
    return sites;
}

bool is_irreducible(const Trinity& t) { return t.n() >= 2 && sum_sites(t).empty(); }

namespace {

// Codes used while splitting: >=0 original triangle, -1 summand cap,
// -2-k marker for the k-th collapse.
struct Working {
    Trinity trinity;
    std::vector<int> tri_code, edge_code, vert_code;
};

// Chain three boundary edges (given with traversal directions) into a
// triangle boundary walk, starting from the least edge id.
std::array<SignedEdge, 3> chain_boundary(const std::vector<std::array<VertexId, 2>>& ends,
                                         std::array<SignedEdge, 3> bd) {
    std::sort(bd.begin(), bd.end(), [](const SignedEdge& a, const SignedEdge& b) { return a.edge < b.edge; });
    auto src = [&](const SignedEdge& se) { return se.forward ? ends[se.edge][0] : ends[se.edge][1]; };
    auto tgt = [&](const SignedEdge& se) { return se.forward ? ends[se.edge][1] : ends[se.edge][0]; };
    if (tgt(bd[0]) != src(bd[1])) std::swap(bd[1], bd[2]);
    if (tgt(bd[0]) != src(bd[1]) || tgt(bd[1]) != src(bd[2]) || tgt(bd[2]) != src(bd[0]))
        throw TrinityError("chain_boundary: edges do not close a triangle");
    return bd;
}

// Split w at the site: returns (rest with a marker triangle, disk with a cap).
std::pair<Working, Working> split_at(const Working& w, const SumSite& site, int marker) {
    const Trinity& t = w.trinity;
    std::vector<char> in_disk(t.triangle_count(), 0);
    for (TriangleId tr : site.disk) in_disk[tr] = 1;
    std::vector<char> boundary_edge(t.edge_count(), 0);
    for (EdgeId e : site.edges) boundary_edge[e] = 1;

    auto build = [&](bool disk_side) {
        Working out;
        std::vector<int> vmap(t.vertex_count(), -1), emap(t.edge_count(), -1), tmap(t.triangle_count(), -1);
        std::vector<VertexColor> vc;
        std::vector<std::array<VertexId, 2>> ee;
        std::vector<std::array<SignedEdge, 3>> te;

        auto keep_tri = [&](TriangleId tr) { return static_cast<bool>(in_disk[tr]) == disk_side; };
        for (VertexId v = 0; v < t.vertex_count(); ++v) {
            bool used = false;
            for (Corner c : t.corners_around(v))
                if (keep_tri(c.tri)) used = true;
            if (used) {
                vmap[v] = static_cast<int>(vc.size());
                vc.push_back(t.vertex_colors[v]);
                out.vert_code.push_back(w.vert_code[v]);
            }
        }
        for (EdgeId e = 0; e < t.edge_count(); ++e) {
            bool used = keep_tri(t.side(e, true).tri) || keep_tri(t.side(e, false).tri);
            if (used) {
                emap[e] = static_cast<int>(ee.size());
                ee.push_back({vmap[t.edge_ends[e][0]], vmap[t.edge_ends[e][1]]});
                out.edge_code.push_back(w.edge_code[e]);
            }
        }
        for (TriangleId tr = 0; tr < t.triangle_count(); ++tr) {
            if (!keep_tri(tr)) continue;
            tmap[tr] = static_cast<int>(te.size());
            std::array<SignedEdge, 3> bd = t.tri_edges[tr];
            for (auto& se : bd) se.edge = emap[se.edge];
            te.push_back(bd);
            out.tri_code.push_back(w.tri_code[tr]);
        }

        // Close the boundary: the disk side gets a white cap (its outer), the
        // other side a black marker triangle taking over the disk's signs.
        std::array<SignedEdge, 3> bd{};
        for (int i = 0; i < 3; ++i) {
            EdgeId e = site.edges[i];
            Corner fwd = t.side(e, true);
            bool disk_uses_forward = in_disk[fwd.tri];
            // The new triangle plays the absent side.
            bool forward = disk_side ? !disk_uses_forward : disk_uses_forward;
            bd[i] = SignedEdge{emap[e], forward};
        }
        bd = chain_boundary(ee, bd);
        te.push_back(bd);
        out.tri_code.push_back(disk_side ? -1 : -2 - marker);

        std::optional<TriangleId> outer;
        if (disk_side)
            outer = static_cast<TriangleId>(te.size() - 1);
        else if (t.outer)
            outer = tmap[*t.outer];
        out.trinity = make_trinity(std::move(vc), std::move(ee), std::move(te), outer);
        return out;
    };

    return {build(false), build(true)};
}

}  // namespace

SumTree decompose(const Trinity& t) {
    Working w;
    w.trinity = t;
    w.tri_code.resize(t.triangle_count());
    std::iota(w.tri_code.begin(), w.tri_code.end(), 0);
    w.edge_code.resize(t.edge_count());
    std::iota(w.edge_code.begin(), w.edge_code.end(), 0);
    w.vert_code.resize(t.vertex_count());
    std::iota(w.vert_code.begin(), w.vert_code.end(), 0);

    std::vector<Working> summands;
    while (true) {
        auto sites = sum_sites(w.trinity);
        if (sites.empty()) break;
        auto [rest, disk] = split_at(w, sites.front(), static_cast<int>(summands.size()));
        summands.push_back(std::move(disk));
        w = std::move(rest);
    }

    SumTree tree;
    auto to_node = [](Working& wk) {
        SumTree::Node node;
        node.trinity = std::move(wk.trinity);
        node.edge_to_orig = std::move(wk.edge_code);
        node.vert_to_orig = std::move(wk.vert_code);
        node.tri_to_orig.reserve(wk.tri_code.size());
        for (int code : wk.tri_code) node.tri_to_orig.push_back(code >= 0 ? code : -1);
        return std::pair(std::move(node), std::move(wk.tri_code));
    };

    std::vector<std::vector<int>> codes;
    {
        auto [node, code] = to_node(w);
        tree.nodes.push_back(std::move(node));
        codes.push_back(std::move(code));
    }
    for (auto& s : summands) {
        auto [node, code] = to_node(s);
        tree.nodes.push_back(std::move(node));
        codes.push_back(std::move(code));
    }
    for (int k = 0; k < static_cast<int>(summands.size()); ++k) {
        bool placed = false;
        for (std::size_t m = 0; m < tree.nodes.size() && !placed; ++m)
            for (std::size_t tr = 0; tr < codes[m].size() && !placed; ++tr)
                if (codes[m][tr] == -2 - k) {
                    tree.nodes[m].children.emplace_back(static_cast<TriangleId>(tr), k + 1);
                    placed = true;
                }
        if (!placed) throw TrinityError("decompose: lost a collapse marker");
    }
    for (auto& node : tree.nodes) std::sort(node.children.begin(), node.children.end());
    return tree;
}

Trinity reglue(const SumTree& tree) {
    // Children always carry smaller indices than the node holding their
    // marker, except for the core; assemble summands in increasing index
    // order, then fold everything into the core.
    std::vector<Trinity> assembled(tree.nodes.size());
    auto assemble = [&](std::size_t m) {
        Trinity cur = tree.nodes[m].trinity;
        std::vector<TriangleId> where(cur.triangle_count());
        std::iota(where.begin(), where.end(), 0);
        for (auto& [tri, child] : tree.nodes[m].children) {
            SumProvenance prov;
            cur = connected_sum(cur, where[tri], assembled[child], &prov);
            std::vector<TriangleId> next(tree.nodes[m].trinity.triangle_count(), -1);
            for (std::size_t i = 0; i < where.size(); ++i)
                if (where[i] >= 0) next[i] = prov.base_tri[where[i]];
            where = std::move(next);
        }
        return cur;
    };
    for (std::size_t m = 1; m < tree.nodes.size(); ++m) assembled[m] = assemble(m);
    return assemble(0);
}

// --- census ----------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> cycle_type_representatives(int n) {
    // One permutation per partition of n: consecutive cycles, largest first.
    std::vector<std::vector<int>> reps;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<int> perm(n);
            int base = 0;
            for (int len : parts) {
                for (int i = 0; i < len; ++i) perm[base + i] = base + (i + 1) % len;
                base += len;
            }
            reps.push_back(std::move(perm));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return reps;
}

struct CensusHit {
    std::vector<int> encoding;
    long long index;
    Trinity trinity;
};

void scan_candidates(int n, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs,
                     std::size_t lo, std::size_t hi, long long index_base,
                     std::vector<CensusHit>& out) {
    for (std::size_t i = lo; i < hi; ++i) {
        std::array<std::vector<int>, 3> phi;
        phi[0].resize(n);
        std::iota(phi[0].begin(), phi[0].end(), 0);
        phi[1] = pairs[i].first;
        phi[2] = pairs[i].second;
        Trinity t = trinity_from_gluing(phi);
        if (!connected_triangulation(t)) continue;
        if (t.vertex_count() != n) continue;  // genus 1 exactly
        CanonicalForm cf = canonical_form(t);
        out.push_back(CensusHit{std::move(cf.encoding), index_base + static_cast<long long>(i), std::move(t)});
    }
}

std::vector<Trinity> dedupe_census(std::vector<std::vector<CensusHit>> per_n) {
    std::vector<Trinity> out;
    for (auto& hits : per_n) {
        std::sort(hits.begin(), hits.end(), [](const CensusHit& a, const CensusHit& b) {
            return std::tie(a.encoding, a.index) < std::tie(b.encoding, b.index);
        });
        for (std::size_t i = 0; i < hits.size(); ++i)
            if (i == 0 || hits[i].encoding != hits[i - 1].encoding) out.push_back(std::move(hits[i].trinity));
    }
    return out;
}

}  // namespace

std::vector<Trinity> enumerate_toric_trinities(int n_max, int shard, int shard_count, int workers) {
    if (shard_count < 1 || shard < 0 || shard >= shard_count)
        throw TrinityError("enumerate_toric_trinities: bad shard spec");
    if (workers < 1) workers = 1;
    std::vector<std::vector<CensusHit>> per_n;
    long long index_base = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<int> idperm(n);
        std::iota(idperm.begin(), idperm.end(), 0);
        std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
        long long raw = 0;
        for (const auto& rep : cycle_type_representatives(n)) {
            std::vector<int> sigma = idperm;
            do {
                if (raw++ % shard_count == shard) pairs.emplace_back(rep, sigma);
            } while (std::next_permutation(sigma.begin(), sigma.end()));
        }

        std::vector<CensusHit> hits;
        if (workers == 1 || pairs.size() < 64) {
            scan_candidates(n, pairs, 0, pairs.size(), index_base, hits);
        } else {
            std::size_t chunk = (pairs.size() + workers - 1) / workers;
            std::vector<std::future<std::vector<CensusHit>>> futs;
            for (int wkr = 0; wkr < workers; ++wkr) {
                std::size_t lo = std::min(pairs.size(), wkr * chunk);
                std::size_t hi = std::min(pairs.size(), lo + chunk);
                if (lo >= hi) break;
                futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
                    std::vector<CensusHit> part;
                    scan_candidates(n, pairs, lo, hi, index_base, part);
                    return part;
                }));
            }
            for (auto& f : futs) {
                auto part = f.get();
                for (auto& h : part) hits.push_back(std::move(h));
            }
        }
        index_base += raw;
        per_n.push_back(std::move(hits));
    }
    return dedupe_census(std::move(per_n));
}

std::vector<Trinity> enumerate_toric_trinities_bruteforce(int n_max) {
    std::vector<std::vector<CensusHit>> per_n;
    long long index = 0;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<CensusHit> hits;
        std::vector<int> idperm(n);
        std::iota(idperm.begin(), idperm.end(), 0);
        std::vector<int> se = idperm;
        do {
            std::vector<int> sv = idperm;
            do {
                std::array<std::vector<int>, 3> phi{idperm, se, sv};
                Trinity t = trinity_from_gluing(phi);
                ++index;
                if (!connected_triangulation(t) || t.vertex_count() != n) continue;
                CanonicalForm cf = canonical_form(t);
                hits.push_back(CensusHit{std::move(cf.encoding), index, std::move(t)});
            } while (std::next_permutation(sv.begin(), sv.end()));
        } while (std::next_permutation(se.begin(), se.end()));
        per_n.push_back(std::move(hits));
    }
    return dedupe_census(std::move(per_n));
}

// --- random planar trinities -------------------------------------------------------

std::uint64_t PlanarSampler::next() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

Trinity PlanarSampler::sample(int n) {
    if (n < 1) throw TrinityError("PlanarSampler: n must be positive");
    while (true) {
        std::array<std::vector<int>, 3> phi;
        for (int c = 0; c < 3; ++c) {
            phi[c].resize(n);
            std::iota(phi[c].begin(), phi[c].end(), 0);
        }
        for (int c = 1; c < 3; ++c)
            for (int i = n - 1; i > 0; --i)
                std::swap(phi[c][i], phi[c][next() % (i + 1)]);
        Trinity t = trinity_from_gluing(phi, n);  // first white is the outer
        if (!connected_triangulation(t)) continue;
        if (t.vertex_count() != n + 2) continue;  // sphere
        return t;
    }
}

}  // namespace trinity
