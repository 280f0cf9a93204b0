#pragma once

#include <map>

#include "trinity/states.hpp"

namespace trinity {

enum class MoveDir : std::uint8_t { CW = 0, CCW = 1 };

struct MoveEvent {
    TriangleId target = -1;  // a black triangle
    MoveDir dir = MoveDir::CW;

    bool operator==(const MoveEvent&) const = default;
};

// A move site: an ordinary black triangle, or — in a reducible trinity — a
// separating 3-cycle, named by its sorted edge triple. Triangle sites order
// before cycle sites.
struct MoveSite {
    TriangleId triangle = -1;
    std::array<EdgeId, 3> cycle{-1, -1, -1};

    static MoveSite of_triangle(TriangleId t) { return MoveSite{t, {-1, -1, -1}}; }
    static MoveSite of_cycle(std::array<EdgeId, 3> edges);
    bool is_triangle() const { return triangle >= 0; }

    bool operator==(const MoveSite&) const = default;
    bool operator<(const MoveSite& o) const;
};

std::string site_label(const MoveSite& s);

// Net clockwise multiplicity per move site.
using PhiVector = std::map<MoveSite, int>;

// A black triangle is empty in s when no arrow tail lies inside it, i.e. its
// three adjacent white triangles are matched exactly to its three corners.
// That happens in one of two rotational patterns; the clockwise pattern is
// the one a clockwise move applies to (each arrow then turns one step
// counter-clockwise about its head, skipping over the triangle).
std::vector<std::pair<TriangleId, MoveDir>> empty_black_triangles(const Trinity& t, const State& s);

// Class of one black triangle if movably empty.
std::optional<MoveDir> empty_class(const Trinity& t, const State& s, TriangleId black);

struct MoveError : TrinityError {
    using TrinityError::TrinityError;
};

// Applies the move; the input state is untouched (throws MoveError when the
// target is not empty with the matching class). Exactly three matches change.
State apply_move(const Trinity& t, const State& s, const MoveEvent& m);

PhiVector accumulate_phi(const std::vector<MoveEvent>& path);

// Text form: "cw <triangle>" / "ccw <triangle>", one per line.
std::string save_moves(const std::vector<MoveEvent>& path);
std::vector<MoveEvent> load_moves(const std::string& text);

}  // namespace trinity
