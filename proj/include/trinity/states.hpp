#pragma once

#include <optional>

#include "trinity/core.hpp"

namespace trinity {

// A Tutte matching: match[white_index(w)] is the vertex matched to white
// triangle w. On the torus the image is every vertex; on a planar trinity the
// outer triangle is skipped and the image is every non-root vertex.
struct State {
    std::vector<VertexId> match;

    bool operator==(const State&) const = default;
    bool operator<(const State& o) const { return match < o.match; }
};

bool is_state(const Trinity& t, const State& s);

// All states, deterministically: white triangles in increasing id, candidate
// corners in increasing vertex id, backtracking with availability pruning.
std::vector<State> enumerate_states(const Trinity& t);

// The vertex matched to white triangle w, or nullopt for the outer triangle.
std::optional<VertexId> matched_vertex(const Trinity& t, const State& s, TriangleId w);
// The white triangle matched to vertex v (every eligible vertex has one).
TriangleId matched_triangle(const Trinity& t, const State& s, VertexId v);

// The arrow of a matched pair (w, v): the dual arc crossing w's X-colored
// edge, X = color of v; its head is v.
DualArc arrow_for(const Trinity& t, TriangleId w, VertexId v);

// Per-color arc sets of a state, each sorted by arc id.
std::array<std::vector<DualArc>, 3> arrows(const Trinity& t, const State& s);

// serialize: "state w:v w:v ..." sorted by white triangle id.
std::string save_state(const Trinity& t, const State& s);
State load_state(const Trinity& t, const std::string& line);

// --- spanning arborescences (planar) ----------------------------------------

struct Arborescence {
    VertexColor color;
    std::vector<EdgeId> arcs;  // sorted arc ids (= crossed trinity edges)
};

// True iff the arcs form a spanning tree of G_X* directed away from root.
bool is_arborescence(const DualDigraph& d, VertexId root, const std::vector<EdgeId>& arcs);

// Tutte's construction: extend a spanning arborescence of one color to the
// unique state containing it (dual tree paths toward the outer triangle's
// opposite edge). Returns nullopt when the arc set is not a spanning
// arborescence rooted at the color's root.
std::optional<State> extend_arborescence(const Trinity& t, const Arborescence& a);

// --- wreaths (toric) ----------------------------------------------------------

// In-degree one everywhere, and no directed cycle of the arc set is
// separating; k counts the directed cycles.
struct Wreath {
    VertexColor color;
    std::vector<EdgeId> arcs;  // sorted
    int k = 0;
};

// Directed cycles of an in-degree<=1 arc set, each as a chained arc sequence
// starting at its least arc id; cycles sorted by least arc id.
std::vector<std::vector<DualArc>> arc_set_cycles(const DualDigraph& d, const std::vector<EdgeId>& arcs);

bool is_wreath(const Trinity& t, const Wreath& w);

// Builds a wreath of the given color: the lexicographically least (length,
// arc-id sequence) embedded non-separating directed cycle of G_X*, extended
// greedily by tree arcs. Exists for every toric trinity.
Wreath find_wreath(const Trinity& t, VertexColor x);

// The 2^k states extending a wreath; choice bit i flips the i-th cycle
// (cycles ordered by least arc id). Deterministic order: bitmask ascending.
std::vector<State> extend_wreath(const Trinity& t, const Wreath& w);

}  // namespace trinity
