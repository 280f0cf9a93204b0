#include "trinity/states.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace trinity {

bool is_state(const Trinity& t, const State& s) {
    const auto& whites = t.whites();
    std::size_t expect = t.eligible_vertices().size();
    std::size_t slots = 0;
    for (TriangleId w : whites)
        if (t.white_index(w) >= 0) ++slots;
    if (slots != expect || s.match.size() != slots) return false;
    std::vector<char> used(t.vertex_count(), 0);
    for (TriangleId w : whites) {
        int i = t.white_index(w);
        if (i < 0) continue;
        VertexId v = s.match[i];
        if (v < 0 || v >= t.vertex_count()) return false;
        if (t.eligible_index(v) < 0) return false;  // roots stay unmatched
        const auto& cs = t.corners(w);
        if (std::find(cs.begin(), cs.end(), v) == cs.end()) return false;
        if (used[v]) return false;
        used[v] = 1;
    }
    return true;
}

std::vector<State> enumerate_states(const Trinity& t) {
    std::vector<TriangleId> order;
    for (TriangleId w : t.whites())
        if (t.white_index(w) >= 0) order.push_back(w);

    std::vector<State> out;
    State cur;
    cur.match.assign(order.size(), -1);
    std::vector<char> used(t.vertex_count(), 0);

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == order.size()) {
            out.push_back(cur);
            return;
        }
        TriangleId w = order[i];
        std::array<VertexId, 3> cand = t.corners(w);
        std::sort(cand.begin(), cand.end());
        for (VertexId v : cand) {
            if (used[v] || t.eligible_index(v) < 0) continue;
            used[v] = 1;
            cur.match[t.white_index(w)] = v;
            self(self, i + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::optional<VertexId> matched_vertex(const Trinity& t, const State& s, TriangleId w) {
    int i = t.white_index(w);
    if (i < 0) return std::nullopt;
    return s.match[i];
}

TriangleId matched_triangle(const Trinity& t, const State& s, VertexId v) {
    for (TriangleId w : t.whites()) {
        int i = t.white_index(w);
        if (i >= 0 && s.match[i] == v) return w;
    }
    throw TrinityError("matched_triangle: vertex " + std::to_string(v) + " unmatched");
}

DualArc arrow_for(const Trinity& t, TriangleId w, VertexId v) {
    VertexColor x = t.vertex_colors[v];
    EdgeId e = t.tri_edges[w][t.slot_of_edge_color(w, x)].edge;
    TriangleId black = t.other_triangle(e, w);
    VertexId tail = t.corners(black)[t.slot_of_corner_color(black, x)];
    return DualArc{e, tail, v};
}

std::array<std::vector<DualArc>, 3> arrows(const Trinity& t, const State& s) {
    std::array<std::vector<DualArc>, 3> by_color;
    for (TriangleId w : t.whites()) {
        int i = t.white_index(w);
        if (i < 0) continue;
        VertexId v = s.match[i];
        by_color[static_cast<int>(t.vertex_colors[v])].push_back(arrow_for(t, w, v));
    }
    for (auto& arcs : by_color)
        std::sort(arcs.begin(), arcs.end(), [](const DualArc& a, const DualArc& b) { return a.id < b.id; });
    return by_color;
}

std::string save_state(const Trinity& t, const State& s) {
    std::ostringstream out;
    out << "state";
    for (TriangleId w : t.whites()) {
        int i = t.white_index(w);
        if (i >= 0) out << " " << w << ":" << s.match[i];
    }
    return out.str();
}

State load_state(const Trinity& t, const std::string& line) {
    std::istringstream in(line);
    std::string kw;
    if (!(in >> kw) || kw != "state") throw ParseError("state record must start with 'state'");
    State s;
    int slots = 0;
    for (TriangleId w : t.whites())
        if (t.white_index(w) >= 0) ++slots;
    s.match.assign(slots, -1);
    std::string tok;
    while (in >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("state pair '" + tok + "' lacks ':'");
        int w = std::stoi(tok.substr(0, colon));
        int v = std::stoi(tok.substr(colon + 1));
        if (w < 0 || w >= t.triangle_count() || t.white_index(w) < 0)
            throw ParseError("state pair names non-matchable triangle " + std::to_string(w));
        s.match[t.white_index(w)] = v;
    }
    if (!is_state(t, s)) throw ValidationError("state record is not a valid state");
    return s;
}

// --- spanning arborescences ---------------------------------------------------

bool is_arborescence(const DualDigraph& d, VertexId root, const std::vector<EdgeId>& arcs) {
    if (d.index_of(root) < 0) return false;
    std::map<EdgeId, const DualArc*> by_id;
    for (const DualArc& a : d.arcs) by_id[a.id] = &a;
    std::vector<int> indeg(d.nodes.size(), 0);
    std::vector<std::vector<const DualArc*>> out(d.nodes.size());
    for (EdgeId e : arcs) {
        auto it = by_id.find(e);
        if (it == by_id.end()) return false;
        indeg[d.index_of(it->second->head)]++;
        out[d.index_of(it->second->tail)].push_back(it->second);
    }
    if (arcs.size() + 1 != d.nodes.size()) return false;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        int want = d.nodes[i] == root ? 0 : 1;
        if (indeg[i] != want) return false;
    }
    std::vector<char> seen(d.nodes.size(), 0);
    std::queue<int> q;
    q.push(d.index_of(root));
    seen[d.index_of(root)] = 1;
    std::size_t cnt = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const DualArc* a : out[u]) {
            int h = d.index_of(a->head);
            if (!seen[h]) {
                seen[h] = 1;
                ++cnt;
                q.push(h);
            }
        }
    }
    return cnt == d.nodes.size();
}

std::optional<State> extend_arborescence(const Trinity& t, const Arborescence& a) {
    if (!t.planar() || !t.outer) throw TrinityError("extend_arborescence: planar trinity required");
    VertexColor x = a.color;
    DualDigraph d = dual_digraph(t, x);
    VertexId root = t.corners(*t.outer)[t.slot_of_corner_color(*t.outer, x)];
    if (!is_arborescence(d, root, a.arcs)) return std::nullopt;

    // The dual tree: X-colored edges not crossed by the arborescence. kappa is
    // the X-edge of the outer triangle, joining the two non-X roots.
    std::vector<char> in_arb(t.edge_count(), 0);
    for (EdgeId e : a.arcs) in_arb[e] = 1;
    EdgeId kappa = t.tri_edges[*t.outer][t.slot_of_edge_color(*t.outer, x)].edge;
    if (in_arb[kappa]) return std::nullopt;  // nothing may point to the root

    std::vector<std::vector<EdgeId>> adj(t.vertex_count());
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        if (t.edge_color(e) == x && !in_arb[e] && e != kappa) {
            adj[t.edge_ends[e][0]].push_back(e);
            adj[t.edge_ends[e][1]].push_back(e);
        }
    std::vector<EdgeId> first_edge(t.vertex_count(), -1);
    std::vector<char> reached(t.vertex_count(), 0);
    std::queue<VertexId> q;
    for (VertexId r : {std::min(t.edge_ends[kappa][0], t.edge_ends[kappa][1]),
                       std::max(t.edge_ends[kappa][0], t.edge_ends[kappa][1])}) {
        reached[r] = 1;
        q.push(r);
    }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (EdgeId e : adj[u]) {
            VertexId v = t.edge_ends[e][0] == u ? t.edge_ends[e][1] : t.edge_ends[e][0];
            if (!reached[v]) {
                reached[v] = 1;
                first_edge[v] = e;
                q.push(v);
            }
        }
    }

    auto white_of_edge = [&](EdgeId e) {
        Corner f = t.side(e, true);
        return t.triangle_color(f.tri) == TriangleColor::White ? f.tri : t.side(e, false).tri;
    };

    int slots = 0;
    for (TriangleId w : t.whites())
        if (t.white_index(w) >= 0) ++slots;
    State s;
    s.match.assign(slots, -1);
    std::map<EdgeId, const DualArc*> by_id;
    for (const DualArc& arc : d.arcs) by_id[arc.id] = &arc;
    for (EdgeId e : a.arcs) s.match[t.white_index(white_of_edge(e))] = by_id[e]->head;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        if (t.vertex_colors[v] == x || t.eligible_index(v) < 0) continue;
        if (first_edge[v] < 0) return std::nullopt;  // dual subgraph not spanning
        s.match[t.white_index(white_of_edge(first_edge[v]))] = v;
    }
    if (!is_state(t, s))
        throw TrinityError("extend_arborescence: construction produced an invalid state");
    return s;
}

// --- wreaths -------------------------------------------------------------------

std::vector<std::vector<DualArc>> arc_set_cycles(const DualDigraph& d, const std::vector<EdgeId>& arcs) {
    std::map<EdgeId, const DualArc*> by_id;
    for (const DualArc& a : d.arcs) by_id[a.id] = &a;
    std::vector<const DualArc*> in_arc(d.nodes.size(), nullptr);
    for (EdgeId e : arcs) {
        auto it = by_id.find(e);
        if (it == by_id.end()) throw TrinityError("arc_set_cycles: unknown arc " + std::to_string(e));
        int h = d.index_of(it->second->head);
        if (in_arc[h]) throw TrinityError("arc_set_cycles: two arcs share head");
        in_arc[h] = it->second;
    }
    // Walking tail-ward along unique in-arcs eventually loops.
    std::vector<int> mark(d.nodes.size(), 0);
    std::vector<std::vector<DualArc>> cycles;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        if (mark[i] || !in_arc[i]) continue;
        std::vector<int> path;
        int u = static_cast<int>(i);
        while (in_arc[u] && mark[u] == 0) {
            mark[u] = 1;
            path.push_back(u);
            u = d.index_of(in_arc[u]->tail);
        }
        auto hit = std::find(path.begin(), path.end(), u);
        if (hit != path.end()) {
            std::vector<DualArc> cyc;
            for (auto it = hit; it != path.end(); ++it) cyc.push_back(*in_arc[*it]);
            std::reverse(cyc.begin(), cyc.end());  // forward chained: head(a_i) = tail(a_{i+1})
            auto least = std::min_element(cyc.begin(), cyc.end(),
                                          [](const DualArc& a, const DualArc& b) { return a.id < b.id; });
            std::rotate(cyc.begin(), least, cyc.end());
            cycles.push_back(std::move(cyc));
        }
        for (int v : path) mark[v] = 2;
        mark[u] = 2;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front().id < b.front().id; });
    return cycles;
}

bool is_wreath(const Trinity& t, const Wreath& w) {
    DualDigraph d = dual_digraph(t, w.color);
    if (w.arcs.size() != d.nodes.size()) return false;
    std::vector<int> indeg(d.nodes.size(), 0);
    std::map<EdgeId, const DualArc*> by_id;
    for (const DualArc& a : d.arcs) by_id[a.id] = &a;
    for (EdgeId e : w.arcs) {
        auto it = by_id.find(e);
        if (it == by_id.end()) return false;
        indeg[d.index_of(it->second->head)]++;
    }
    for (int deg : indeg)
        if (deg != 1) return false;
    auto cycles = arc_set_cycles(d, w.arcs);
    if (static_cast<int>(cycles.size()) != w.k) return false;
    for (const auto& cyc : cycles)
        if (dual_cycle_separating(t, cyc)) return false;
    return true;
}

namespace {

// Lexicographically least embedded non-separating directed cycle, ordered by
// (length, arc-id sequence).
std::optional<std::vector<DualArc>> least_nonseparating_cycle(const Trinity& t, const DualDigraph& d) {
    std::vector<std::vector<const DualArc*>> out(d.nodes.size());
    for (const DualArc& a : d.arcs) out[d.index_of(a.tail)].push_back(&a);
    // d.arcs sorted by id, so branch order is ascending already.

    for (std::size_t len = 1; len <= d.nodes.size(); ++len) {
        std::vector<const DualArc*> seq;
        std::vector<char> used(d.nodes.size(), 0);
        std::optional<std::vector<DualArc>> found;

        auto rec = [&](auto&& self, int at, int start, EdgeId min_id) -> bool {
            if (seq.size() == len) {
                if (at != start) return false;
                std::vector<DualArc> cyc;
                for (auto* a : seq) cyc.push_back(*a);
                if (!dual_cycle_separating(t, cyc)) {
                    found = std::move(cyc);
                    return true;
                }
                return false;
            }
            for (const DualArc* a : out[at]) {
                if (!seq.empty() && a->id <= min_id) continue;  // first arc carries the least id
                int h = d.index_of(a->head);
                if (h != start && used[h]) continue;
                if (h == start && seq.size() + 1 != len) continue;
                seq.push_back(a);
                if (h != start) used[h] = 1;
                if (self(self, h, start, min_id)) return true;
                if (h != start) used[h] = 0;
                seq.pop_back();
            }
            return false;
        };

        for (const DualArc& first : d.arcs) {
            int tail = d.index_of(first.tail);
            int head = d.index_of(first.head);
            if (len == 1) {
                if (tail == head) {
                    std::vector<DualArc> cyc{first};
                    if (!dual_cycle_separating(t, cyc)) return cyc;
                }
                continue;
            }
            if (tail == head) continue;
            seq.assign(1, &first);
            std::fill(used.begin(), used.end(), 0);
            used[tail] = 1;
            used[head] = 1;
            if (rec(rec, head, tail, first.id)) return found;
        }
    }
    return std::nullopt;
}

}  // namespace

Wreath find_wreath(const Trinity& t, VertexColor x) {
    if (t.genus() != 1) throw TrinityError("find_wreath: toric trinity required");
    DualDigraph d = dual_digraph(t, x);
    auto cyc = least_nonseparating_cycle(t, d);
    if (!cyc) throw TrinityError("find_wreath: no non-separating directed cycle found");

    std::vector<char> covered(d.nodes.size(), 0);
    std::vector<EdgeId> arcs;
    for (const DualArc& a : *cyc) {
        covered[d.index_of(a.head)] = 1;
        arcs.push_back(a.id);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (const DualArc& a : d.arcs) {
            if (covered[d.index_of(a.tail)] && !covered[d.index_of(a.head)]) {
                covered[d.index_of(a.head)] = 1;
                arcs.push_back(a.id);
                grew = true;
                break;
            }
        }
    }
    for (char c : covered)
        if (!c) throw TrinityError("find_wreath: dual digraph not strongly connected");
    std::sort(arcs.begin(), arcs.end());
    Wreath w{x, arcs, 1};
    if (!is_wreath(t, w)) throw TrinityError("find_wreath: construction failed wreath invariants");
    return w;
}

std::vector<State> extend_wreath(const Trinity& t, const Wreath& w) {
    if (!is_wreath(t, w)) throw TrinityError("extend_wreath: not a wreath");
    DualDigraph d = dual_digraph(t, w.color);
    std::map<EdgeId, const DualArc*> by_id;
    for (const DualArc& a : d.arcs) by_id[a.id] = &a;

    auto white_of_edge = [&](EdgeId e) {
        Corner f = t.side(e, true);
        return t.triangle_color(f.tri) == TriangleColor::White ? f.tri : t.side(e, false).tri;
    };

    int slots = 0;
    for (TriangleId tw : t.whites())
        if (t.white_index(tw) >= 0) ++slots;
    State base;
    base.match.assign(slots, -1);
    std::vector<char> crossed(t.edge_count(), 0);
    for (EdgeId e : w.arcs) {
        crossed[e] = 1;
        base.match[t.white_index(white_of_edge(e))] = by_id[e]->head;
    }

    // The dual subgraph: uncrossed X-edges on the non-X vertices. Tree-hung
    // vertices peel off leaves-first; k cycles remain, two matchings each.
    std::vector<std::vector<EdgeId>> adj(t.vertex_count());
    std::vector<int> deg(t.vertex_count(), 0);
    std::vector<char> edge_alive(t.edge_count(), 0);
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        if (t.edge_color(e) == w.color && !crossed[e]) {
            edge_alive[e] = 1;
            for (VertexId v : t.edge_ends[e]) {
                adj[v].push_back(e);
                deg[v]++;
            }
        }
    std::vector<char> vertex_alive(t.vertex_count(), 0);
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        if (t.vertex_colors[v] != w.color) vertex_alive[v] = 1;

    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        if (vertex_alive[v] && deg[v] == 1) leaves.push(v);
    while (!leaves.empty()) {
        VertexId v = leaves.top();
        leaves.pop();
        if (!vertex_alive[v] || deg[v] != 1) continue;
        EdgeId f = -1;
        for (EdgeId e : adj[v])
            if (edge_alive[e]) f = e;
        base.match[t.white_index(white_of_edge(f))] = v;
        vertex_alive[v] = 0;
        edge_alive[f] = 0;
        for (VertexId u : t.edge_ends[f])
            if (vertex_alive[u] && --deg[u] == 1) leaves.push(u);
    }

    // Collect the leftover cycles, each as alternating vertex/edge lists.
    struct Loop {
        std::vector<VertexId> verts;
        std::vector<EdgeId> edges;  // edges[i] joins verts[i] and verts[i+1]
    };
    std::vector<Loop> loops;
    std::vector<char> vdone(t.vertex_count(), 0);
    for (VertexId v0 = 0; v0 < t.vertex_count(); ++v0) {
        if (!vertex_alive[v0] || vdone[v0]) continue;
        Loop loop;
        VertexId v = v0;
        EdgeId prev = -1;
        do {
            vdone[v] = 1;
            loop.verts.push_back(v);
            EdgeId next = -1;
            for (EdgeId e : adj[v])
                if (edge_alive[e] && e != prev) {
                    next = e;
                    break;
                }
            if (next < 0) throw TrinityError("extend_wreath: dual subgraph cycle broke");
            loop.edges.push_back(next);
            v = t.edge_ends[next][0] == v ? t.edge_ends[next][1] : t.edge_ends[next][0];
            prev = next;
        } while (v != v0);
        loops.push_back(std::move(loop));
    }
    std::sort(loops.begin(), loops.end(), [](const Loop& a, const Loop& b) {
        return *std::min_element(a.edges.begin(), a.edges.end()) <
               *std::min_element(b.edges.begin(), b.edges.end());
    });
    if (static_cast<int>(loops.size()) != w.k)
        throw TrinityError("extend_wreath: dual cycle count disagrees with k");

    std::vector<State> out;
    for (int mask = 0; mask < (1 << w.k); ++mask) {
        State s = base;
        for (int i = 0; i < w.k; ++i) {
            const Loop& loop = loops[i];
            std::size_t m = loop.verts.size();
            for (std::size_t j = 0; j < m; ++j) {
                EdgeId f = (mask >> i) & 1 ? loop.edges[(j + m - 1) % m] : loop.edges[j];
                s.match[t.white_index(white_of_edge(f))] = loop.verts[j];
            }
        }
        if (!is_state(t, s)) throw TrinityError("extend_wreath: produced an invalid state");
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace trinity
