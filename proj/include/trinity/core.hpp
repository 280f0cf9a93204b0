#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Properly three-colored triangulations of the sphere and torus, stored as
// oriented combinatorial maps: triangle boundaries are counter-clockwise
// lists of signed edge references; the surface is whatever the gluing says.

namespace trinity {

using VertexId = int;
using EdgeId = int;
using TriangleId = int;

enum class VertexColor : std::uint8_t { Red = 0, Green = 1, Blue = 2 };
enum class TriangleColor : std::uint8_t { Black = 0, White = 1 };

char color_letter(VertexColor c);
std::optional<VertexColor> color_from_letter(char c);

// The color of an edge is the one missing from its endpoints; the color of an
// arrow/arc matches the edge it crosses.
VertexColor third_color(VertexColor a, VertexColor b);

struct SignedEdge {
    EdgeId edge = -1;
    bool forward = true;  // true: traversed first endpoint -> second

    bool operator==(const SignedEdge&) const = default;
};

// A corner of a triangle: slot j spans the boundary position whose outgoing
// edge is tri_edges[j]; its vertex is the source of that signed edge.
struct Corner {
    TriangleId tri = -1;
    int slot = -1;

    bool operator==(const Corner&) const = default;
};

struct TrinityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : TrinityError {
    using TrinityError::TrinityError;
};

struct ValidationError : TrinityError {
    using TrinityError::TrinityError;
};

class Trinity {
public:
    // Raw data; ids are dense 0-based. finalize() derives the caches below and
    // throws ValidationError on any broken invariant.
    std::vector<VertexColor> vertex_colors;
    std::vector<std::array<VertexId, 2>> edge_ends;
    std::vector<std::array<SignedEdge, 3>> tri_edges;  // counter-clockwise
    std::optional<TriangleId> outer;

    void finalize();

    int vertex_count() const { return static_cast<int>(vertex_colors.size()); }
    int edge_count() const { return static_cast<int>(edge_ends.size()); }
    int triangle_count() const { return static_cast<int>(tri_edges.size()); }

    int n() const { return n_; }
    int genus() const { return genus_; }
    bool planar() const { return genus_ == 0; }

    VertexColor edge_color(EdgeId e) const {
        return third_color(vertex_colors[edge_ends[e][0]], vertex_colors[edge_ends[e][1]]);
    }
    TriangleColor triangle_color(TriangleId t) const { return tri_colors_[t]; }
    const std::array<VertexId, 3>& corners(TriangleId t) const { return tri_corners_[t]; }

    // The triangle sides of an edge: side(e, true) traverses e forward.
    Corner side(EdgeId e, bool forward) const { return edge_sides_[e][forward ? 0 : 1]; }
    TriangleId other_triangle(EdgeId e, TriangleId t) const;

    VertexId corner_vertex(Corner c) const { return tri_corners_[c.tri][c.slot]; }
    EdgeId outgoing_edge(Corner c) const { return tri_edges[c.tri][c.slot].edge; }
    EdgeId incoming_edge(Corner c) const { return tri_edges[c.tri][(c.slot + 2) % 3].edge; }

    // One counter-clockwise step around the corner's vertex (crosses the
    // incoming edge); cw_next is its inverse.
    Corner ccw_next(Corner c) const;
    Corner cw_next(Corner c) const;

    // Corner of triangle t at vertex v; corners are distinct per triangle.
    Corner corner_at(TriangleId t, VertexId v) const;
    // Slot of the X-colored edge of triangle t.
    int slot_of_edge_color(TriangleId t, VertexColor x) const;
    // Slot of the corner of color x.
    int slot_of_corner_color(TriangleId t, VertexColor x) const;

    const std::vector<Corner>& corners_around(VertexId v) const { return rotations_[v]; }
    int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }

    // White triangles in increasing id; for planar trinities the outer
    // triangle is excluded from white_index (index -1).
    const std::vector<TriangleId>& whites() const { return whites_; }
    const std::vector<TriangleId>& blacks() const { return blacks_; }
    int white_index(TriangleId t) const { return white_index_[t]; }

    // Vertices eligible for matching: all of them on the torus, the non-roots
    // in the planar case. eligible_index is -1 for roots.
    const std::vector<VertexId>& eligible_vertices() const { return eligible_; }
    int eligible_index(VertexId v) const { return eligible_index_[v]; }
    bool is_root(VertexId v) const { return planar() && eligible_index_[v] < 0; }

    bool operator==(const Trinity& o) const {
        return vertex_colors == o.vertex_colors && edge_ends == o.edge_ends &&
               tri_edges == o.tri_edges && outer == o.outer;
    }

private:
    std::vector<std::array<VertexId, 3>> tri_corners_;
    std::vector<TriangleColor> tri_colors_;
    std::vector<std::array<Corner, 2>> edge_sides_;
    std::vector<std::vector<Corner>> rotations_;  // per vertex, ccw order
    std::vector<TriangleId> whites_, blacks_;
    std::vector<int> white_index_;
    std::vector<VertexId> eligible_;
    std::vector<int> eligible_index_;
    int n_ = 0;
    int genus_ = 0;
};

// --- validation ----------------------------------------------------------

// Structural problems (dangling ids, bad signs) throw from finalize(); the
// semantic invariants are reported here as data, one line per violation.
std::vector<std::string> validate(const Trinity& t);

// --- file format ----------------------------------------------------------

// Line-oriented text format; '#' starts a comment.
//   genus <0|1>
//   outer <triangle-id>          (required iff genus 0)
//   vertex <id> <R|G|B>
//   edge <id> <va> <vb>
//   triangle <id> <±e0> <±e1> <±e2>
Trinity load_trinity(const std::string& text);
std::string save_trinity(const Trinity& t);
Trinity load_trinity_file(const std::string& path);

int genus(const Trinity& t);

// --- rotation system -------------------------------------------------------

// The alternating edge/triangle cycle around v, counter-clockwise, starting
// from the canonically least corner: e(into corner 0), corner 0, e, corner 1,
// ... Each item is (kind, id).
struct RotationItem {
    enum Kind { Edge, Triangle } kind;
    int id;
    bool operator==(const RotationItem&) const = default;
};
std::vector<RotationItem> rotation(const Trinity& t, VertexId v);

// --- dual digraphs ----------------------------------------------------------

// G_X*: one node per X-colored vertex, one arc per X-colored edge, crossing it
// from the black side to the white side.
struct DualArc {
    EdgeId id;  // the trinity edge the arc crosses
    VertexId tail, head;
};

struct DualDigraph {
    VertexColor color;
    std::vector<VertexId> nodes;  // trinity ids, increasing
    std::vector<DualArc> arcs;    // sorted by id
    std::vector<int> node_index;  // trinity vertex id -> dense node index (-1 otherwise)

    int index_of(VertexId v) const { return node_index[v]; }
};

DualDigraph dual_digraph(const Trinity& t, VertexColor x);

// --- cycles and separation ---------------------------------------------------

// A closed walk in the 1-skeleton; forward means first->second endpoint.
struct EdgeCycle {
    std::vector<SignedEdge> steps;
};

// Throws TrinityError unless the steps form a closed walk with no repeated
// vertices. True iff cutting the surface along the cycle disconnects it,
// decided by 2-coloring triangles with a flip across exactly the cycle edges.
bool is_separating(const Trinity& t, const EdgeCycle& c);

// Shared machinery: try to 2-color triangles so that colors differ across
// edges with odd parity and agree elsewhere. Empty result = impossible.
std::optional<std::vector<char>> two_color_triangles(const Trinity& t,
                                                     const std::vector<char>& edge_parity);

// Edge-crossing parities of the closed curve traced by a directed cycle of
// dual arcs (consecutive arcs share head/tail vertices; the curve is routed
// counter-clockwise around each visited vertex).
std::vector<char> dual_cycle_parity(const Trinity& t, const std::vector<DualArc>& cycle);

// A dual-arc cycle with pairwise distinct nodes; separating iff its curve is.
bool dual_cycle_separating(const Trinity& t, const std::vector<DualArc>& cycle);

// --- canonical form ----------------------------------------------------------

// Equal encodings iff color- and orientation-preserving isomorphic (outer
// triangle respected when present): minimum over start darts of a
// breadth-first dart relabeling.
struct CanonicalForm {
    std::string digest;             // lowercase hex sha-256 of the encoding
    std::vector<int> encoding;      // the full canonical encoding
};

CanonicalForm canonical_form(const Trinity& t);
std::string canonical_digest(const Trinity& t);

// sha-256 of a byte string, lowercase hex.
std::string sha256_hex(const void* data, std::size_t len);
std::string sha256_hex(const std::string& s);

}  // namespace trinity
