#pragma once

#include "trinity/states.hpp"

namespace trinity {

// Exact number of spanning arborescences of d rooted at root (arcs away from
// the root), by the directed matrix-tree determinant in integer arithmetic.
long long count_arborescences(const DualDigraph& d, VertexId root);

// Complete duplicate-free enumeration (desk scale); independent of the
// determinant route.
std::vector<Arborescence> enumerate_arborescences(const DualDigraph& d, VertexId root);

// The greedy boundary-walk arborescence of G_X*: trace the perimeter of the
// selected subgraph counter-clockwise from the root corner of the outer
// triangle and add the first cycle-free outgoing arc each time.
Arborescence clocked_arborescence(const Trinity& t, VertexColor x);

// Walk start: the paper traces from the outgoing-edge side of the outer
// triangle's root corner ("the green side" for red); the other side must
// yield the same arborescence.
enum class WalkStart : std::uint8_t { OutgoingSide, IncomingSide };
Arborescence clocked_arborescence(const Trinity& t, VertexColor x, WalkStart start);

// The extended ordering <_A: the contour walk's event sequence over all arcs
// of G_X* — tree arcs at their first (tail-to-head) traversal, non-tree arcs
// at the first crossing of one of their ends.
struct OrderTimeline {
    struct Event {
        EdgeId arc;
        enum Kind : std::uint8_t { TreeTraversal, FirstCrossing } kind;
        bool at_tail = false;  // for crossings: whether the tail end came first
    };
    VertexColor color;
    std::vector<Event> events;

    // position of an arc in <_A (its event index)
    int order_of(EdgeId arc) const;
};

OrderTimeline order_timeline(const Trinity& t, const Arborescence& a);
OrderTimeline order_timeline(const Trinity& t, const Arborescence& a, WalkStart start);

std::string timeline_to_text(const OrderTimeline& tl);

// The union of the three clocked arborescences; the unique state without a
// clockwise move. Throws if the union is not a matching (that would refute
// the clocked-state corollary).
State clocked_state(const Trinity& t);

}  // namespace trinity
