#include "trinity/spanning.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace trinity {

long long count_arborescences(const DualDigraph& d, VertexId root) {
    int k = static_cast<int>(d.nodes.size());
    int r = d.index_of(root);
    if (r < 0) throw TrinityError("count_arborescences: root not a node of the digraph");
    int m = k - 1;
    if (m == 0) return 1;  // the empty arborescence

    // In-degree Laplacian with the root row/column removed; loops cancel.
    std::vector<std::vector<long long>> a(m, std::vector<long long>(m, 0));
    auto dense = [&](int i) { return i < r ? i : i - 1; };
    for (const DualArc& arc : d.arcs) {
        int u = d.index_of(arc.tail), v = d.index_of(arc.head);
        if (u == v) continue;
        if (v != r) a[dense(v)][dense(v)] += 1;
        if (u != r && v != r) a[dense(v)][dense(u)] -= 1;
    }

    // Bareiss fraction-free elimination.
    long long sign = 1, prev = 1;
    for (int col = 0; col < m; ++col) {
        int pivot = -1;
        for (int row = col; row < m; ++row)
            if (a[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int row = col + 1; row < m; ++row) {
            for (int j = col + 1; j < m; ++j)
                a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / prev;
            a[row][col] = 0;
        }
        prev = a[col][col];
    }
    return sign * a[m - 1][m - 1];
}

std::vector<Arborescence> enumerate_arborescences(const DualDigraph& d, VertexId root) {
    int k = static_cast<int>(d.nodes.size());
    int r = d.index_of(root);
    if (r < 0) throw TrinityError("enumerate_arborescences: root not a node");

    // Choose one incoming arc per non-root node, then keep acyclic choices.
    std::vector<std::vector<const DualArc*>> incoming(k);
    for (const DualArc& a : d.arcs)
        if (d.index_of(a.head) != r && a.tail != a.head) incoming[d.index_of(a.head)].push_back(&a);

    std::vector<int> nonroot;
    for (int i = 0; i < k; ++i)
        if (i != r) nonroot.push_back(i);

    std::vector<Arborescence> out;
    std::vector<const DualArc*> pick(k, nullptr);
    auto acyclic = [&]() {
        for (int start : nonroot) {
            int v = start, steps = 0;
            while (v != r) {
                v = d.index_of(pick[v]->tail);
                if (++steps > k) return false;
            }
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == nonroot.size()) {
            if (!acyclic()) return;
            Arborescence a{d.color, {}};
            for (int v : nonroot) a.arcs.push_back(pick[v]->id);
            std::sort(a.arcs.begin(), a.arcs.end());
            out.push_back(std::move(a));
            return;
        }
        for (const DualArc* arc : incoming[nonroot[i]]) {
            pick[nonroot[i]] = arc;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Arborescence& x, const Arborescence& y) { return x.arcs < y.arcs; });
    return out;
}

namespace {

// The contour walk of a set of arcs of G_X*, embedded via the trinity's
// rotation system. Arc ends sit at the X-corners of the two triangles of the
// arc's edge: the tail inside the black one, the head inside the white one.
// Scanning the corners around a node counter-clockwise and turning at arcs of
// the selected subgraph traces the perimeter with the subgraph on the left.
struct ContourWalk {
    const Trinity& t;
    VertexColor x;
    TriangleId outer;
    VertexId root;
    Corner start;

    ContourWalk(const Trinity& tr, VertexColor color, WalkStart side) : t(tr), x(color) {
        if (!tr.planar() || !tr.outer) throw TrinityError("contour walk: planar trinity required");
        outer = *tr.outer;
        root = tr.corners(outer)[tr.slot_of_corner_color(outer, x)];
        Corner at_outer = t.corner_at(outer, root);
        start = side == WalkStart::OutgoingSide ? at_outer : t.ccw_next(at_outer);
    }

    EdgeId arc_at(Corner c) const { return t.tri_edges[c.tri][(c.slot + 1) % 3].edge; }
    bool is_tail_end(Corner c) const { return t.triangle_color(c.tri) == TriangleColor::Black; }

    Corner head_corner(EdgeId e) const {
        Corner f = t.side(e, true), b = t.side(e, false);
        Corner white = t.triangle_color(f.tri) == TriangleColor::White ? f : b;
        return t.corner_at(white.tri, t.corners(white.tri)[t.slot_of_corner_color(white.tri, x)]);
    }
    Corner tail_corner(EdgeId e) const {
        Corner f = t.side(e, true), b = t.side(e, false);
        Corner black = t.triangle_color(f.tri) == TriangleColor::Black ? f : b;
        return t.corner_at(black.tri, t.corners(black.tri)[t.slot_of_corner_color(black.tri, x)]);
    }
    VertexId head_vertex(EdgeId e) const { return t.corner_vertex(head_corner(e)); }

    // Runs the walk; on_slot is called for every examined corner slot and
    // returns whether the walk should traverse the arc there (the arc must
    // belong to the current subgraph, or be the arc just added).
    template <class F>
    void run(F&& on_slot) {
        Corner pos = start;
        do {
            EdgeId e = arc_at(pos);
            bool tail = is_tail_end(pos);
            if (on_slot(pos, e, tail))
                pos = t.ccw_next(tail ? head_corner(e) : tail_corner(e));
            else
                pos = t.ccw_next(pos);
        } while (!(pos == start));
    }
};

}  // namespace

Arborescence clocked_arborescence(const Trinity& t, VertexColor x, WalkStart side) {
    ContourWalk walk(t, x, side);
    std::vector<char> in_tree(t.edge_count(), 0);
    std::vector<char> covered(t.vertex_count(), 0);
    covered[walk.root] = 1;
    std::size_t want = 0;
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        if (t.vertex_colors[v] == x) ++want;

    Arborescence a{x, {}};
    walk.run([&](Corner, EdgeId e, bool tail) {
        if (in_tree[e]) return true;
        if (tail && !covered[walk.head_vertex(e)]) {
            in_tree[e] = 1;
            covered[walk.head_vertex(e)] = 1;
            a.arcs.push_back(e);
            return true;  // the search continues at the arrow's terminal point
        }
        return false;
    });
    if (a.arcs.size() + 1 != want)
        throw TrinityError("clocked_arborescence: walk did not span the digraph");
    std::sort(a.arcs.begin(), a.arcs.end());
    return a;
}

Arborescence clocked_arborescence(const Trinity& t, VertexColor x) {
    return clocked_arborescence(t, x, WalkStart::OutgoingSide);
}

int OrderTimeline::order_of(EdgeId arc) const {
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].arc == arc) return static_cast<int>(i);
    throw TrinityError("order_of: arc not in timeline");
}

OrderTimeline order_timeline(const Trinity& t, const Arborescence& a, WalkStart side) {
    ContourWalk walk(t, a.color, side);
    DualDigraph d = dual_digraph(t, a.color);
    if (!is_arborescence(d, walk.root, a.arcs))
        throw TrinityError("order_timeline: arcs are not a spanning arborescence");

    std::vector<char> in_tree(t.edge_count(), 0);
    for (EdgeId e : a.arcs) in_tree[e] = 1;

    OrderTimeline tl;
    tl.color = a.color;
    std::vector<char> seen(t.edge_count(), 0);
    walk.run([&](Corner, EdgeId e, bool tail) {
        if (in_tree[e]) {
            if (tail && !seen[e]) {
                seen[e] = 1;
                tl.events.push_back({e, OrderTimeline::Event::TreeTraversal, true});
            }
            return true;
        }
        if (!seen[e]) {
            seen[e] = 1;
            tl.events.push_back({e, OrderTimeline::Event::FirstCrossing, tail});
        }
        return false;
    });
    std::size_t arcs_of_color = 0;
    for (EdgeId e = 0; e < t.edge_count(); ++e) arcs_of_color += t.edge_color(e) == a.color;
    if (tl.events.size() != arcs_of_color)
        throw TrinityError("order_timeline: walk missed arcs of the digraph");
    return tl;
}

OrderTimeline order_timeline(const Trinity& t, const Arborescence& a) {
    return order_timeline(t, a, WalkStart::OutgoingSide);
}

std::string timeline_to_text(const OrderTimeline& tl) {
    std::ostringstream out;
    for (const auto& ev : tl.events) {
        out << ev.arc << " "
            << (ev.kind == OrderTimeline::Event::TreeTraversal ? "tree-traversal" : "first-crossing");
        if (ev.kind == OrderTimeline::Event::FirstCrossing) out << (ev.at_tail ? " tail" : " head");
        out << "\n";
    }
    return out.str();
}

State clocked_state(const Trinity& t) {
    if (!t.planar() || !t.outer) throw TrinityError("clocked_state: planar trinity required");
    int slots = 0;
    for (TriangleId w : t.whites())
        if (t.white_index(w) >= 0) ++slots;
    State s;
    s.match.assign(slots, -1);

    for (int c = 0; c < 3; ++c) {
        auto x = static_cast<VertexColor>(c);
        Arborescence a = clocked_arborescence(t, x);
        DualDigraph d = dual_digraph(t, x);
        std::map<EdgeId, const DualArc*> by_id;
        for (const DualArc& arc : d.arcs) by_id[arc.id] = &arc;
        for (EdgeId e : a.arcs) {
            Corner f = t.side(e, true);
            TriangleId w = t.triangle_color(f.tri) == TriangleColor::White ? f.tri : t.side(e, false).tri;
            int wi = t.white_index(w);
            if (wi < 0 || s.match[wi] >= 0)
                throw TrinityError("clocked_state: the three clocked arborescences do not assemble");
            s.match[wi] = by_id[e]->head;
        }
    }
    if (!is_state(t, s)) throw TrinityError("clocked_state: assembled map is not a state");
    return s;
}

}  // namespace trinity
