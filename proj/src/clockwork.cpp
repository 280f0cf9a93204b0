#include "trinity/clockwork.hpp"

#include <algorithm>
#include <sstream>

namespace trinity {

MoveSite MoveSite::of_cycle(std::array<EdgeId, 3> edges) {
    std::sort(edges.begin(), edges.end());
    return MoveSite{-1, edges};
}

bool MoveSite::operator<(const MoveSite& o) const {
    if (is_triangle() != o.is_triangle()) return is_triangle();
    if (is_triangle()) return triangle < o.triangle;
    return cycle < o.cycle;
}

std::string site_label(const MoveSite& s) {
    if (s.is_triangle()) return std::to_string(s.triangle);
    return "cycle(" + std::to_string(s.cycle[0]) + "," + std::to_string(s.cycle[1]) + "," +
           std::to_string(s.cycle[2]) + ")";
}

std::optional<MoveDir> empty_class(const Trinity& t, const State& s, TriangleId black) {
    if (t.triangle_color(black) != TriangleColor::Black) throw TrinityError("empty_class: not a black triangle");
    // Clockwise pattern: the white across boundary slot j is matched to the
    // corner the slot leaves (corner j); counter-clockwise: to corner j+1.
    bool cw = true, ccw = true;
    for (int j = 0; j < 3; ++j) {
        EdgeId e = t.tri_edges[black][j].edge;
        TriangleId w = t.other_triangle(e, black);
        auto mv = matched_vertex(t, s, w);
        if (!mv) return std::nullopt;  // adjacent to the outer triangle
        if (*mv != t.corners(black)[j]) cw = false;
        if (*mv != t.corners(black)[(j + 1) % 3]) ccw = false;
        if (!cw && !ccw) return std::nullopt;
    }
    return cw ? MoveDir::CW : MoveDir::CCW;
}

std::vector<std::pair<TriangleId, MoveDir>> empty_black_triangles(const Trinity& t, const State& s) {
    std::vector<std::pair<TriangleId, MoveDir>> out;
    for (TriangleId b : t.blacks())
        if (auto cls = empty_class(t, s, b)) out.emplace_back(b, *cls);
    return out;
}

State apply_move(const Trinity& t, const State& s, const MoveEvent& m) {
    auto cls = empty_class(t, s, m.target);
    if (!cls)
        throw MoveError("move not applicable: black triangle " + std::to_string(m.target) + " is not empty");
    if (*cls != m.dir)
        throw MoveError("move not applicable: black triangle " + std::to_string(m.target) + " is " +
                        (*cls == MoveDir::CW ? "clockwise" : "counter-clockwise") + ", not " +
                        (m.dir == MoveDir::CW ? "clockwise" : "counter-clockwise"));
    State next = s;
    for (int j = 0; j < 3; ++j) {
        EdgeId e = t.tri_edges[m.target][j].edge;
        TriangleId w = t.other_triangle(e, m.target);
        int corner = m.dir == MoveDir::CW ? (j + 1) % 3 : j;
        next.match[t.white_index(w)] = t.corners(m.target)[corner];
    }
    return next;
}

PhiVector accumulate_phi(const std::vector<MoveEvent>& path) {
    PhiVector phi;
    for (const MoveEvent& m : path) phi[MoveSite::of_triangle(m.target)] += m.dir == MoveDir::CW ? 1 : -1;
    return phi;
}

std::string save_moves(const std::vector<MoveEvent>& path) {
    std::ostringstream out;
    for (const MoveEvent& m : path)
        out << (m.dir == MoveDir::CW ? "cw " : "ccw ") << m.target << "\n";
    return out.str();
}

std::vector<MoveEvent> load_moves(const std::string& text) {
    std::vector<MoveEvent> path;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        MoveEvent m;
        if (kw == "cw")
            m.dir = MoveDir::CW;
        else if (kw == "ccw")
            m.dir = MoveDir::CCW;
        else
            throw ParseError("line " + std::to_string(lineno) + ": expected cw/ccw");
        if (!(ls >> m.target)) throw ParseError("line " + std::to_string(lineno) + ": expected triangle id");
        path.push_back(m);
    }
    return path;
}

}  // namespace trinity
