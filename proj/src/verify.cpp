#include "trinity/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace trinity {

namespace {

void add(VerifyReport& r, const std::string& name, bool pass, std::string detail = "") {
    r.checks.push_back({name, pass, std::move(detail)});
}

void verify_planar(const Trinity& t, const TransitionGraph& g, const VerifyOptions& opt, VerifyReport& r) {
    // Tree Trinity Theorem: the three arborescence counts agree with each
    // other and with the number of states.
    std::array<long long, 3> rho{};
    for (int c = 0; c < 3; ++c) {
        auto x = static_cast<VertexColor>(c);
        DualDigraph d = dual_digraph(t, x);
        VertexId root = t.corners(*t.outer)[t.slot_of_corner_color(*t.outer, x)];
        rho[c] = count_arborescences(d, root);
    }
    {
        std::ostringstream det;
        det << "rho = " << rho[0] << "/" << rho[1] << "/" << rho[2] << ", states = " << g.states.size();
        add(r, "tree-trinity-counts", rho[0] == rho[1] && rho[1] == rho[2] &&
                                          rho[0] == static_cast<long long>(g.states.size()),
            det.str());
    }

    add(r, "planar-connected", g.components.size() == 1,
        std::to_string(g.components.size()) + " components");
    add(r, "planar-acyclic", !g.components.empty() && g.components[0].cls == ComponentClass::Acyclic);

    if (g.components.size() == 1 && g.components[0].cls == ComponentClass::Acyclic) {
        const auto& comp = g.components[0];
        add(r, "unique-extrema", comp.local_minima == 1 && comp.local_maxima == 1,
            std::to_string(comp.local_minima) + " minima, " + std::to_string(comp.local_maxima) + " maxima");
        LatticeView lv = lattice_view(g, 0);

        bool closure = true, distributive = true;
        if (comp.size() <= opt.distributivity_component_limit) {
            for (int a : comp.nodes) {
                for (int b : comp.nodes) {
                    std::vector<int> mn(lv.sites.size()), mx(lv.sites.size());
                    for (std::size_t i = 0; i < lv.sites.size(); ++i) {
                        mn[i] = std::min(lv.phi[a][i], lv.phi[b][i]);
                        mx[i] = std::max(lv.phi[a][i], lv.phi[b][i]);
                    }
                    if (!lv.node_by_phi.count(mn) || !lv.node_by_phi.count(mx)) closure = false;
                }
            }
            // min/max are pointwise, so distributivity is inherited; still
            // exercised through the public meet/join on all triples.
            for (int a : comp.nodes)
                for (int b : comp.nodes)
                    for (int cc : comp.nodes) {
                        const State &sa = g.states[a], &sb = g.states[b], &sc = g.states[cc];
                        State lhs = meet(g, lv, sa, join(g, lv, sb, sc));
                        State rhs = join(g, lv, meet(g, lv, sa, sb), meet(g, lv, sa, sc));
                        if (!(lhs == rhs)) distributive = false;
                    }
            add(r, "phi-closure", closure);
            add(r, "meet-join-distributive", distributive);
        } else {
            add(r, "phi-closure-sampled", [&] {
                // the extremes still have to work
                std::vector<int> mn(lv.sites.size(), 0);
                return lv.node_by_phi.count(mn) > 0;
            }());
        }

        // The clocked state is the maximum and admits no clockwise move.
        State clocked = clocked_state(t);
        add(r, "clocked-state-is-maximum", clocked == g.states[lv.max_node]);
        bool no_cw = true;
        for (auto& [tri, dir] : empty_black_triangles(t, clocked))
            if (dir == MoveDir::CW) no_cw = false;
        add(r, "clocked-state-no-cw-move", no_cw);
        bool both_starts_agree = true;
        for (int c = 0; c < 3; ++c) {
            auto x = static_cast<VertexColor>(c);
            if (!(clocked_arborescence(t, x, WalkStart::OutgoingSide).arcs ==
                  clocked_arborescence(t, x, WalkStart::IncomingSide).arcs))
                both_starts_agree = false;
        }
        add(r, "clocked-walk-start-sides-agree", both_starts_agree);
    }
}

void verify_toric(const Trinity& t, const TransitionGraph& g, VerifyReport& r) {
    bool irreducible = is_irreducible(t);

    bool extrema_ok = true, lattice_ok = true;
    for (std::size_t c = 0; c < g.components.size(); ++c) {
        const auto& comp = g.components[c];
        if (comp.cls == ComponentClass::Cyclic) {
            if (comp.local_minima != 0 || comp.local_maxima != 0) extrema_ok = false;
        } else {
            if (comp.local_minima != 1 || comp.local_maxima != 1) extrema_ok = false;
            try {
                lattice_view(g, static_cast<int>(c));
            } catch (const TrinityError&) {
                lattice_ok = false;
            }
        }
    }
    add(r, "cyclic-no-extrema-acyclic-unique-extrema", extrema_ok);
    add(r, "acyclic-components-are-lattices", lattice_ok);

    // Every state of a cyclic component is recurrent (lies on a cw cycle).
    bool recurrent_ok = true;
    for (const auto& comp : g.components) {
        if (comp.cls != ComponentClass::Cyclic) continue;
        for (int v : comp.nodes) {
            // recurrence = some cw path returns; Tarjan already encodes it in
            // the classification: a cyclic component node must sit in a
            // nontrivial scc. Re-derive cheaply: bfs forward from v must
            // reach v again.
            std::vector<char> seen(g.states.size(), 0);
            std::vector<int> stack{v};
            bool back = false;
            while (!stack.empty() && !back) {
                int u = stack.back();
                stack.pop_back();
                for (int ei : g.out_edges[u]) {
                    int w = g.edges[ei].to;
                    if (w == v) back = true;
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            if (!back) recurrent_ok = false;
        }
    }
    add(r, "cyclic-components-all-recurrent", recurrent_ok);

    if (irreducible) {
        bool one_turn_ok = true;
        std::string detail;
        for (const auto& comp : g.components) {
            if (comp.cls != ComponentClass::Cyclic) continue;
            for (int v : comp.nodes) {
                try {
                    auto order = recurrence_order(t, g, v);
                    std::set<TriangleId> uniq(order.begin(), order.end());
                    if (static_cast<int>(order.size()) != t.n() || uniq.size() != order.size())
                        one_turn_ok = false;
                } catch (const TrinityError& e) {
                    one_turn_ok = false;
                    detail = e.what();
                }
            }
        }
        add(r, "one-turn-recurrence", one_turn_ok, detail);
    }

    bool wreath_ok = true;
    std::string wreath_detail;
    try {
        for (int c = 0; c < 3; ++c) {
            Wreath w = find_wreath(t, static_cast<VertexColor>(c));
            auto ext = extend_wreath(t, w);
            if (ext.size() != (std::size_t{1} << w.k)) wreath_ok = false;
            std::set<State> uniq(ext.begin(), ext.end());
            if (uniq.size() != ext.size()) wreath_ok = false;
            for (const auto& s : ext)
                if (!is_state(t, s)) wreath_ok = false;
        }
    } catch (const TrinityError& e) {
        wreath_ok = false;
        wreath_detail = e.what();
    }
    add(r, "wreath-extension-2k", wreath_ok, wreath_detail);
}

}  // namespace

VerifyReport verify_trinity(const Trinity& t, const VerifyOptions& opt) {
    VerifyReport r;
    add(r, "invariants", validate(t).empty());
    TransitionGraph g = build_graph(t);

    // Oracle agreement between the two enumeration orders is checked in the
    // test suite; here the graph-level theorems run.
    if (t.planar())
        verify_planar(t, g, opt, r);
    else
        verify_toric(t, g, r);

    // Any clockwise cycle changes every move site equally often (checked on
    // the cyclic components' fundamental cycles via the recurrence orders for
    // irreducible inputs; subsumed above). Shared check: component sizes add
    // up.
    std::size_t total = 0;
    for (const auto& comp : g.components) total += comp.nodes.size();
    add(r, "component-sizes-sum", total == g.states.size());
    return r;
}

ComponentSummary summarize_components(const TransitionGraph& g) {
    ComponentSummary s;
    s.states = static_cast<int>(g.states.size());
    for (const auto& comp : g.components) {
        if (comp.cls == ComponentClass::Cyclic) {
            ++s.cyclic;
            s.cyclic_sizes.push_back(comp.size());
        } else if (comp.size() == 1) {
            ++s.isolated;
            ++s.acyclic;
        } else {
            ++s.acyclic;
            s.acyclic_sizes.push_back(comp.size());
        }
    }
    std::sort(s.cyclic_sizes.rbegin(), s.cyclic_sizes.rend());
    std::sort(s.acyclic_sizes.rbegin(), s.acyclic_sizes.rend());
    return s;
}

bool product_theorem_holds(const Trinity& t, TriangleId b, const Trinity& part, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    SumProvenance prov;
    Trinity sum = connected_sum(t, b, part, &prov);
    TransitionGraph gs = build_graph(sum);
    TransitionGraph g1 = build_graph(t);
    TransitionGraph g2 = build_graph(part);
    if (gs.states.size() != g1.states.size() * g2.states.size()) return fail("state counts differ");

    // Node bijection: assemble the sum state of each factor pair.
    auto assemble = [&](const State& s1, const State& s2) {
        int slots = 0;
        for (TriangleId w : sum.whites())
            if (sum.white_index(w) >= 0) ++slots;
        State s;
        s.match.assign(slots, -1);
        for (TriangleId w : t.whites()) {
            int i = t.white_index(w);
            if (i < 0) continue;
            s.match[sum.white_index(prov.base_tri[w])] = prov.base_vertex[s1.match[i]];
        }
        for (TriangleId w : part.whites()) {
            int i = part.white_index(w);
            if (i < 0) continue;
            s.match[sum.white_index(prov.part_tri[w])] = prov.part_vertex[s2.match[i]];
        }
        return s;
    };

    // Site correspondence from each factor into the sum.
    auto map_site1 = [&](const MoveSite& site) {
        if (site.is_triangle()) {
            if (site.triangle == b) {
                if (part.n() == 1) return MoveSite::of_triangle(prov.part_tri[part.blacks().front()]);
                std::array<EdgeId, 3> edges;
                for (int j = 0; j < 3; ++j) edges[j] = prov.base_edge[t.tri_edges[b][j].edge];
                return MoveSite::of_cycle(edges);
            }
            return MoveSite::of_triangle(prov.base_tri[site.triangle]);
        }
        std::array<EdgeId, 3> edges;
        for (int j = 0; j < 3; ++j) edges[j] = prov.base_edge[site.cycle[j]];
        return MoveSite::of_cycle(edges);
    };
    auto map_site2 = [&](const MoveSite& site) {
        if (site.is_triangle()) return MoveSite::of_triangle(prov.part_tri[site.triangle]);
        std::array<EdgeId, 3> edges;
        for (int j = 0; j < 3; ++j) edges[j] = prov.part_edge[site.cycle[j]];
        return MoveSite::of_cycle(edges);
    };

    ProductGraph p = graph_product(g1, g2);
    std::vector<int> sum_node(static_cast<std::size_t>(p.n1) * p.n2, -1);
    for (int i = 0; i < p.n1; ++i)
        for (int j = 0; j < p.n2; ++j)
            sum_node[p.node(i, j)] = gs.node_of(assemble(g1.states[i], g2.states[j]));

    using EdgeKey = std::tuple<int, int, MoveSite>;
    std::set<EdgeKey> expect, got;
    for (const auto& e : p.edges) {
        MoveSite site = e.side == 0 ? map_site1(e.site) : map_site2(e.site);
        expect.insert({sum_node[e.from], sum_node[e.to], site});
    }
    for (const auto& e : gs.edges) got.insert({e.from, e.to, e.site});
    if (expect != got) return fail("edge sets differ under the label correspondence");
    return true;
}

}  // namespace trinity
