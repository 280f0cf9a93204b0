#pragma once

#include "trinity/build.hpp"
#include "trinity/clockwork.hpp"
#include "trinity/states.hpp"

namespace trinity {

enum class ComponentClass : std::uint8_t { Cyclic, Acyclic };

// States as nodes (ids = deterministic enumeration order), one directed edge
// per applicable clockwise move, labeled by its site. Counter-clockwise moves
// are the implicit reverse edges. On a reducible trinity the edges come from
// the decomposition and the product theorem; moves about a glued separating
// 3-cycle carry cycle sites.
struct TransitionGraph {
    struct Edge {
        int from, to;
        MoveSite site;
        bool operator==(const Edge&) const = default;
    };
    struct Component {
        ComponentClass cls;
        std::vector<int> nodes;  // sorted node ids
        int local_minima = 0, local_maxima = 0;
        std::optional<int> min_node, max_node;  // unique extrema when acyclic

        int size() const { return static_cast<int>(nodes.size()); }
    };

    std::vector<State> states;
    std::vector<Edge> edges;  // sorted by (from, site, to)
    std::vector<MoveSite> sites;
    std::vector<int> component_of;
    std::vector<Component> components;

    std::vector<std::vector<int>> out_edges, in_edges;  // node -> edge indices

    int node_of(const State& s) const;
};

TransitionGraph build_graph(const Trinity& t);

// Recomputes the per-component classification and statistics (also run by
// build_graph; exposed as the spec's own operation).
std::vector<TransitionGraph::Component> classify_components(const TransitionGraph& g);

// --- the distributive lattice of an acyclic component --------------------------

struct LatticeView {
    int component = -1;
    int min_node = -1, max_node = -1;
    std::vector<MoveSite> sites;          // key universe, sorted
    std::vector<char> in_component;       // per graph node
    std::vector<std::vector<int>> phi;    // per member node, relative to the minimum
    std::map<std::vector<int>, int> node_by_phi;

    PhiVector phi_of(int node) const;
};

struct CyclicComponentError : TrinityError {
    using TrinityError::TrinityError;
};

// Throws CyclicComponentError on cyclic components.
LatticeView lattice_view(const TransitionGraph& g, int component);

State meet(const TransitionGraph& g, const LatticeView& lv, const State& s, const State& t);
State join(const TransitionGraph& g, const LatticeView& lv, const State& s, const State& t);

// --- one-turn recurrence (irreducible toric) -------------------------------------

// Greedy order of the paper's one-turn theorem: repeatedly change the least
// currently-clockwise unused black triangle; after n moves the state recurs.
// Throws with a stuck-triangle chain diagnostic if the greedy stalls (which
// would contradict the theorem).
std::vector<TriangleId> recurrence_order(const Trinity& t, const TransitionGraph& g, int node);

// --- products ----------------------------------------------------------------------

// Node (i, j) = i * g2-size + j; one edge per clockwise move in exactly one
// coordinate, labeled by the side and the factor's site.
struct ProductGraph {
    int n1 = 0, n2 = 0;
    struct Edge {
        int from, to;
        int side;  // 0: move in g1, 1: move in g2
        MoveSite site;
    };
    std::vector<Edge> edges;

    int node(int i, int j) const { return i * n2 + j; }
    std::pair<int, int> split(int v) const { return {v / n2, v % n2}; }
};

ProductGraph graph_product(const TransitionGraph& g1, const TransitionGraph& g2);

// --- exports -------------------------------------------------------------------------

std::string graph_to_json(const Trinity& t, const TransitionGraph& g);
std::string graph_to_dot(const Trinity& t, const TransitionGraph& g);

}  // namespace trinity
