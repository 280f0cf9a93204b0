#include "trinity/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace trinity {

int TransitionGraph::node_of(const State& s) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return static_cast<int>(i);
    throw TrinityError("node_of: state not in graph");
}

namespace {

void index_edges(TransitionGraph& g) {
    std::sort(g.edges.begin(), g.edges.end(), [](const TransitionGraph::Edge& a, const TransitionGraph::Edge& b) {
        if (a.from != b.from) return a.from < b.from;
        if (!(a.site == b.site)) return a.site < b.site;
        return a.to < b.to;
    });
    g.out_edges.assign(g.states.size(), {});
    g.in_edges.assign(g.states.size(), {});
    std::set<MoveSite> sites;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        g.out_edges[g.edges[i].from].push_back(static_cast<int>(i));
        g.in_edges[g.edges[i].to].push_back(static_cast<int>(i));
        sites.insert(g.edges[i].site);
    }
    g.sites.assign(sites.begin(), sites.end());
}

// Tarjan over the clockwise digraph; a node is recurrent iff its strongly
// connected component has an internal edge.
std::vector<char> recurrent_nodes(const TransitionGraph& g) {
    int n = static_cast<int>(g.states.size());
    std::vector<int> num(n, -1), low(n, 0), stack_pos(n, -1), scc_of(n, -1);
    std::vector<int> stack;
    int counter = 0, scc_count = 0;
    std::function<void(int)> dfs = [&](int v) {
        num[v] = low[v] = counter++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
        for (int ei : g.out_edges[v]) {
            int w = g.edges[ei].to;
            if (num[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (stack_pos[w] >= 0) {
                low[v] = std::min(low[v], num[w]);
            }
        }
        if (low[v] == num[v]) {
            int target = stack_pos[v];
            while (static_cast<int>(stack.size()) > target) {
                scc_of[stack.back()] = scc_count;
                stack_pos[stack.back()] = -1;
                stack.pop_back();
            }
            ++scc_count;
        }
    };
    for (int v = 0; v < n; ++v)
        if (num[v] < 0) dfs(v);
    std::vector<char> scc_rec(scc_count, 0);
    for (const auto& e : g.edges)
        if (scc_of[e.from] == scc_of[e.to]) scc_rec[scc_of[e.from]] = 1;
    std::vector<char> recurrent(n, 0);
    for (int v = 0; v < n; ++v) recurrent[v] = scc_rec[scc_of[v]];
    return recurrent;
}

}  // namespace

std::vector<TransitionGraph::Component> classify_components(const TransitionGraph& g) {
    int n = static_cast<int>(g.states.size());
    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::queue<int> q;
        q.push(v);
        comp[v] = comp_count;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int ei : g.out_edges[u])
                if (comp[g.edges[ei].to] < 0) {
                    comp[g.edges[ei].to] = comp_count;
                    q.push(g.edges[ei].to);
                }
            for (int ei : g.in_edges[u])
                if (comp[g.edges[ei].from] < 0) {
                    comp[g.edges[ei].from] = comp_count;
                    q.push(g.edges[ei].from);
                }
        }
        ++comp_count;
    }

    std::vector<char> recurrent = recurrent_nodes(g);
    std::vector<TransitionGraph::Component> comps(comp_count);
    for (int v = 0; v < n; ++v) comps[comp[v]].nodes.push_back(v);
    for (auto& c : comps) {
        bool cyclic = false;
        for (int v : c.nodes) cyclic = cyclic || recurrent[v];
        c.cls = cyclic ? ComponentClass::Cyclic : ComponentClass::Acyclic;
        for (int v : c.nodes) {
            if (g.in_edges[v].empty()) {
                ++c.local_minima;
                c.min_node = c.local_minima == 1 ? std::optional<int>(v) : std::nullopt;
            }
            if (g.out_edges[v].empty()) {
                ++c.local_maxima;
                c.max_node = c.local_maxima == 1 ? std::optional<int>(v) : std::nullopt;
            }
        }
        if (c.local_minima != 1) c.min_node.reset();
        if (c.local_maxima != 1) c.max_node.reset();
    }
    return comps;
}

namespace {

void scan_edges_direct(const Trinity& t, TransitionGraph& g) {
    std::map<State, int> index;
    for (std::size_t i = 0; i < g.states.size(); ++i) index[g.states[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < g.states.size(); ++i)
        for (auto& [tri, dir] : empty_black_triangles(t, g.states[i])) {
            if (dir != MoveDir::CW) continue;
            State next = apply_move(t, g.states[i], {tri, MoveDir::CW});
            auto it = index.find(next);
            if (it == index.end()) throw TrinityError("build_graph: move left the state set");
            g.edges.push_back({static_cast<int>(i), it->second, MoveSite::of_triangle(tri)});
        }
}

void scan_edges_by_decomposition(const Trinity& t, const SumTree& tree, TransitionGraph& g) {
    const std::size_t parts = tree.nodes.size();

    struct Factor {
        TransitionGraph graph;
        std::vector<int> vert_from_orig;           // original vertex -> factor vertex
        std::vector<MoveSite> site_of_edge;        // per factor graph edge, in original labels
    };
    std::vector<Factor> factors(parts);
    for (std::size_t k = 0; k < parts; ++k) {
        const auto& node = tree.nodes[k];
        factors[k].graph = build_graph(node.trinity);
        factors[k].vert_from_orig.assign(t.vertex_count(), -1);
        for (VertexId v = 0; v < node.trinity.vertex_count(); ++v)
            factors[k].vert_from_orig[node.vert_to_orig[v]] = v;
        for (const auto& e : factors[k].graph.edges) {
            MoveSite site = e.site;
            TriangleId b = site.is_triangle() ? site.triangle : -1;
            MoveSite mapped;
            if (b >= 0 && node.tri_to_orig[b] >= 0) {
                mapped = MoveSite::of_triangle(node.tri_to_orig[b]);
            } else if (b >= 0) {
                // A move about a collapse marker is a move about the glued
                // separating 3-cycle of the original trinity.
                std::array<EdgeId, 3> edges;
                for (int j = 0; j < 3; ++j) edges[j] = node.edge_to_orig[node.trinity.tri_edges[b][j].edge];
                mapped = MoveSite::of_cycle(edges);
            } else {
                std::array<EdgeId, 3> edges;
                for (int j = 0; j < 3; ++j) edges[j] = node.edge_to_orig[site.cycle[j]];
                mapped = MoveSite::of_cycle(edges);
            }
            factors[k].site_of_edge.push_back(mapped);
        }
    }

    std::size_t expect = 1;
    for (auto& f : factors) expect *= f.graph.states.size();
    if (expect != g.states.size())
        throw TrinityError("build_graph: state count disagrees with the factor product");

    std::vector<std::vector<int>> projection(g.states.size(), std::vector<int>(parts, -1));
    std::map<std::vector<int>, int> node_of_tuple;
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        for (std::size_t k = 0; k < parts; ++k) {
            const auto& node = tree.nodes[k];
            const Trinity& ft = node.trinity;
            State fs;
            int slots = 0;
            for (TriangleId w : ft.whites())
                if (ft.white_index(w) >= 0) ++slots;
            fs.match.assign(slots, -1);
            for (TriangleId w : ft.whites()) {
                if (ft.white_index(w) < 0) continue;
                int orig_tri = node.tri_to_orig[w];
                if (orig_tri < 0) throw TrinityError("build_graph: matchable factor white missing upstream");
                VertexId orig_match = g.states[i].match[t.white_index(orig_tri)];
                VertexId fv = factors[k].vert_from_orig[orig_match];
                if (fv < 0) throw TrinityError("build_graph: state projection crosses the decomposition");
                fs.match[ft.white_index(w)] = fv;
            }
            projection[i][k] = factors[k].graph.node_of(fs);
        }
        node_of_tuple[projection[i]] = static_cast<int>(i);
    }

    for (std::size_t i = 0; i < g.states.size(); ++i)
        for (std::size_t k = 0; k < parts; ++k) {
            const auto& fg = factors[k].graph;
            for (int ei : fg.out_edges[projection[i][k]]) {
                std::vector<int> tuple = projection[i];
                tuple[k] = fg.edges[ei].to;
                auto it = node_of_tuple.find(tuple);
                if (it == node_of_tuple.end())
                    throw TrinityError("build_graph: product edge leaves the state set");
                g.edges.push_back({static_cast<int>(i), it->second, factors[k].site_of_edge[ei]});
            }
        }
}

}  // namespace

TransitionGraph build_graph(const Trinity& t) {
    TransitionGraph g;
    g.states = enumerate_states(t);
    SumTree tree = decompose(t);
    if (tree.trivial())
        scan_edges_direct(t, g);
    else
        scan_edges_by_decomposition(t, tree, g);
    index_edges(g);
    g.components = classify_components(g);
    g.component_of.assign(g.states.size(), -1);
    for (std::size_t c = 0; c < g.components.size(); ++c)
        for (int v : g.components[c].nodes) g.component_of[v] = static_cast<int>(c);
    return g;
}

// --- lattice ---------------------------------------------------------------------

PhiVector LatticeView::phi_of(int node) const {
    if (node < 0 || node >= static_cast<int>(phi.size()) || !in_component[node])
        throw TrinityError("phi_of: node outside the component");
    PhiVector out;
    for (std::size_t i = 0; i < sites.size(); ++i) out[sites[i]] = phi[node][i];
    return out;
}

LatticeView lattice_view(const TransitionGraph& g, int component) {
    if (component < 0 || component >= static_cast<int>(g.components.size()))
        throw TrinityError("lattice_view: no such component");
    const auto& comp = g.components[component];
    if (comp.cls == ComponentClass::Cyclic)
        throw CyclicComponentError("lattice_view: component is cyclic; use recurrence analysis");
    if (!comp.min_node || !comp.max_node)
        throw TrinityError("lattice_view: acyclic component lacks unique extrema");

    LatticeView lv;
    lv.component = component;
    lv.min_node = *comp.min_node;
    lv.max_node = *comp.max_node;
    lv.sites = g.sites;
    std::map<MoveSite, int> site_index;
    for (std::size_t i = 0; i < lv.sites.size(); ++i) site_index[lv.sites[i]] = static_cast<int>(i);

    lv.in_component.assign(g.states.size(), 0);
    for (int v : comp.nodes) lv.in_component[v] = 1;
    lv.phi.assign(g.states.size(), {});
    lv.phi[lv.min_node].assign(lv.sites.size(), 0);
    std::vector<char> reached(g.states.size(), 0);
    reached[lv.min_node] = 1;
    std::queue<int> q;
    q.push(lv.min_node);
    std::size_t seen = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int ei : g.out_edges[u]) {
            const auto& e = g.edges[ei];
            std::vector<int> cand = lv.phi[u];
            cand[site_index[e.site]]++;
            if (!reached[e.to]) {
                reached[e.to] = 1;
                lv.phi[e.to] = std::move(cand);
                q.push(e.to);
                ++seen;
            } else if (lv.phi[e.to] != cand) {
                throw TrinityError("lattice_view: move multiplicities disagree along two paths");
            }
        }
    }
    if (seen != comp.nodes.size())
        throw TrinityError("lattice_view: minimum does not reach the whole component");
    for (int v : comp.nodes) lv.node_by_phi[lv.phi[v]] = v;
    return lv;
}

namespace {

State phi_lookup(const TransitionGraph& g, const LatticeView& lv, std::vector<int> target, const char* what) {
    auto it = lv.node_by_phi.find(target);
    if (it == lv.node_by_phi.end())
        throw TrinityError(std::string(what) + ": pointwise extremum is not realized by a state");
    return g.states[it->second];
}

}  // namespace

State meet(const TransitionGraph& g, const LatticeView& lv, const State& s, const State& t) {
    int a = g.node_of(s), b = g.node_of(t);
    if (!lv.in_component[a] || !lv.in_component[b]) throw TrinityError("meet: states outside the component");
    std::vector<int> m(lv.sites.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(lv.phi[a][i], lv.phi[b][i]);
    return phi_lookup(g, lv, std::move(m), "meet");
}

State join(const TransitionGraph& g, const LatticeView& lv, const State& s, const State& t) {
    int a = g.node_of(s), b = g.node_of(t);
    if (!lv.in_component[a] || !lv.in_component[b]) throw TrinityError("join: states outside the component");
    std::vector<int> m(lv.sites.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(lv.phi[a][i], lv.phi[b][i]);
    return phi_lookup(g, lv, std::move(m), "join");
}

// --- recurrence --------------------------------------------------------------------

namespace {

std::string stuck_chain_diagnostic(const Trinity& t, const State& s, const std::vector<char>& used) {
    // The chain of stuck triangles from the one-turn proof: start at a corner
    // of an unused triangle, name the triangle blocking its arrow, step to
    // that triangle's next counter-clockwise corner, repeat until it closes.
    VertexId x = -1;
    for (TriangleId b : t.blacks())
        if (!used[b]) {
            x = t.corners(b)[0];
            break;
        }
    if (x < 0) return "no unused triangle";
    std::ostringstream out;
    out << "stuck chain:";
    std::set<std::pair<VertexId, TriangleId>> seen;
    for (int guard = 0; guard < 4 * t.triangle_count(); ++guard) {
        TriangleId w = matched_triangle(t, s, x);
        Corner c = t.ccw_next(t.corner_at(w, x));
        TriangleId delta = c.tri;
        out << " x=" << x << " -> triangle " << delta;
        if (!seen.insert({x, delta}).second) break;
        x = t.corners(delta)[(c.slot + 1) % 3];
    }
    return out.str();
}

}  // namespace

std::vector<TriangleId> recurrence_order(const Trinity& t, const TransitionGraph& g, int node) {
    if (t.genus() != 1) throw TrinityError("recurrence_order: toric trinity required");
    if (!is_irreducible(t)) throw TrinityError("recurrence_order: irreducible trinity required");
    if (node < 0 || node >= static_cast<int>(g.states.size())) throw TrinityError("recurrence_order: bad node");
    if (g.components[g.component_of[node]].cls != ComponentClass::Cyclic)
        throw TrinityError("recurrence_order: state is not in a cyclic component");

    const State start = g.states[node];
    State cur = start;
    std::vector<char> used(t.triangle_count(), 0);
    std::vector<TriangleId> order;
    for (int step = 0; step < t.n(); ++step) {
        TriangleId pick = -1;
        for (auto& [tri, dir] : empty_black_triangles(t, cur))
            if (dir == MoveDir::CW && !used[tri]) {
                pick = tri;
                break;
            }
        if (pick < 0)
            throw TrinityError("recurrence_order: greedy stalled after " + std::to_string(step) + " moves; " +
                               stuck_chain_diagnostic(t, cur, used));
        used[pick] = 1;
        order.push_back(pick);
        cur = apply_move(t, cur, {pick, MoveDir::CW});
    }
    if (!(cur == start)) throw TrinityError("recurrence_order: state did not recur after n moves");
    return order;
}

// --- products -------------------------------------------------------------------------

ProductGraph graph_product(const TransitionGraph& g1, const TransitionGraph& g2) {
    ProductGraph p;
    p.n1 = static_cast<int>(g1.states.size());
    p.n2 = static_cast<int>(g2.states.size());
    for (int i = 0; i < p.n1; ++i)
        for (int j = 0; j < p.n2; ++j) {
            for (int ei : g1.out_edges[i])
                p.edges.push_back({p.node(i, j), p.node(g1.edges[ei].to, j), 0, g1.edges[ei].site});
            for (int ej : g2.out_edges[j])
                p.edges.push_back({p.node(i, j), p.node(i, g2.edges[ej].to), 1, g2.edges[ej].site});
        }
    return p;
}

// --- exports ---------------------------------------------------------------------------

std::string graph_to_json(const Trinity& t, const TransitionGraph& g) {
    nlohmann::ordered_json j;
    j["nodes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.states.size(); ++i)
        j["nodes"].push_back({{"id", i}, {"state", save_state(t, g.states[i])}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"from", e.from}, {"to", e.to}, {"triangle", site_label(e.site)}});
    j["components"] = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        nlohmann::ordered_json jc{{"id", c},
                                  {"class", g.components[c].cls == ComponentClass::Cyclic ? "cyclic" : "acyclic"},
                                  {"size", g.components[c].size()}};
        if (g.components[c].min_node) jc["min"] = *g.components[c].min_node;
        if (g.components[c].max_node) jc["max"] = *g.components[c].max_node;
        j["components"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::string graph_to_dot(const Trinity& t, const TransitionGraph& g) {
    std::ostringstream out;
    out << "digraph transitions {\n";
    // Acyclic nodes ranked by phi sum so lattices draw bottom-up.
    std::vector<long long> rank(g.states.size(), -1);
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        if (g.components[c].cls != ComponentClass::Acyclic) continue;
        LatticeView lv = lattice_view(g, static_cast<int>(c));
        for (int v : g.components[c].nodes) {
            long long sum = 0;
            for (int x : lv.phi[v]) sum += x;
            rank[v] = sum;
        }
    }
    for (std::size_t i = 0; i < g.states.size(); ++i) {
        out << "  n" << i << " [label=\"" << save_state(t, g.states[i]);
        if (rank[i] >= 0) out << "\\nphi " << rank[i];
        out << "\"];\n";
    }
    for (const auto& e : g.edges)
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << site_label(e.site) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace trinity
