#pragma once

#include "trinity/states.hpp"

namespace trinity {

// A generic immersed curve with disk complementary regions, as a connected
// 4-valent map: each crossing lists the strand at each of its four ends in
// counter-clockwise order; every strand id occurs exactly twice overall. The
// gap k of a crossing is the sector between ends k and k+1; the base gap
// names the region that will be colored red.
struct CurvePresentation {
    std::vector<std::array<int, 4>> crossings;
    int base_crossing = 0;
    int base_gap = 0;
};

// `crossing <id> <s0> <s1> <s2> <s3>`, optional `strand <id>` declarations,
// optional `base <crossing> <gap>`.
CurvePresentation load_curve(const std::string& text);

// The trinity of a curve, with the construction's provenance: green vertices
// at crossings, region vertices per checkerboard-colored face, spokes and
// segment edges, one triangle per crossing end. Spheres get the least white
// triangle as a default outer.
struct CurveTrinity {
    Trinity trinity;
    std::vector<VertexId> green_of_crossing;
    std::vector<VertexId> region_of_face;
    std::vector<std::array<int, 4>> face_of_gap;        // [crossing][gap]
    std::vector<std::array<TriangleId, 4>> triangle_at_end;  // [crossing][end]
};

CurveTrinity from_curve(const CurvePresentation& c);

// Same trinity with a different designated outer triangle.
Trinity with_outer(const Trinity& t, TriangleId w);

// A Kauffman state: the marked quadrant (gap) per crossing; regions of the
// marks are pairwise distinct and avoid the two starred regions flanking the
// chosen outer triangle.
struct KauffmanState {
    std::vector<int> marked_gap;
};

// The associated Tutte matching: a white triangle meeting its crossing's
// marked quadrant is matched to that region's vertex, every other white
// triangle to its green vertex. `outer` must be a white triangle of ct
// straddling the starred regions; the result is a state of
// with_outer(ct.trinity, outer).
State kauffman_to_matching(const CurveTrinity& ct, const KauffmanState& ks, TriangleId outer);

// All Kauffman states for the given outer (test/enumeration support).
std::vector<KauffmanState> enumerate_kauffman_states(const CurveTrinity& ct, TriangleId outer);

}  // namespace trinity
