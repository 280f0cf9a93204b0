#pragma once

#include <cstdint>
#include <functional>

#include "trinity/core.hpp"

namespace trinity {

// The spherical trinity F: one black and one white triangle, the white one
// outer. Its unique state is the empty matching.
Trinity trivial_trinity();

// The smallest toric trinity: one vertex of each color, nine edges, six
// triangles (n = 3), encoded from the standard square-with-identifications
// picture. Six states; three isolated, three on a directed cycle.
Trinity smallest_toric();

// Glue n black and n white labeled triangles side-to-side: black i's
// X-colored side meets white phi[X][i]'s X-colored side. Triangle ids: blacks
// 0..n-1, whites n..2n-1; edge ids: reds 0..n-1 (by black), greens n..2n-1,
// blues 2n..3n-1. Every trinity arises this way. Throws when the complex is
// disconnected.
Trinity trinity_from_gluing(const std::array<std::vector<int>, 3>& phi,
                            std::optional<TriangleId> outer = std::nullopt);

// Reads the gluing maps back off a trinity (phi[X][i] = dense white index
// sharing black i's X-edge, triangles in id order).
std::array<std::vector<int>, 3> gluing_of(const Trinity& t);

// --- connected sums -----------------------------------------------------------

struct SumProvenance {
    // id maps from each operand into the sum; removed triangles map to -1.
    std::vector<TriangleId> base_tri, part_tri;
    std::vector<EdgeId> base_edge, part_edge;
    std::vector<VertexId> base_vertex, part_vertex;
};

// Replace the black triangle b of t by t0 minus its outer triangle; colors
// decide the boundary identification uniquely. n grows by n(t0) - 1 and the
// genus is kept.
Trinity connected_sum(const Trinity& t, TriangleId b, const Trinity& t0,
                      SumProvenance* prov = nullptr);

// --- decomposition into the irreducible core ---------------------------------

// A separating color-complete 3-cycle usable as a summand site: the side
// whose edge-adjacent triangles are black is a disk of more than one
// triangle, the other side keeps more than one triangle (and the outer
// triangle, when present).
struct SumSite {
    std::array<EdgeId, 3> edges;       // sorted
    std::vector<TriangleId> disk;      // the summand side, sorted
};

std::vector<SumSite> sum_sites(const Trinity& t);

bool is_irreducible(const Trinity& t);

// The tree of planar summands over the irreducible core. Node 0 is the core;
// each node records, per triangle/edge/vertex of its trinity, the id in the
// decomposed trinity (-1 for created triangles: collapse markers and summand
// caps). children: (black triangle id in this node, child node index).
struct SumTree {
    struct Node {
        Trinity trinity;
        std::vector<int> tri_to_orig, edge_to_orig, vert_to_orig;
        std::vector<std::pair<TriangleId, int>> children;
    };
    std::vector<Node> nodes;

    bool trivial() const { return nodes.size() == 1; }
};

SumTree decompose(const Trinity& t);

// Re-glue a SumTree back together; isomorphic to the decomposed trinity.
Trinity reglue(const SumTree& tree);

// --- census --------------------------------------------------------------------

// Every toric trinity with n <= n_max, exactly once up to color- and
// orientation-preserving isomorphism, ordered by (n, canonical encoding).
// shard/shard_count split the raw candidate space for external parallelism
// (shard k of m keeps candidates with index % m == k); workers > 1 fans the
// candidate scan out over threads, results merged deterministically.
std::vector<Trinity> enumerate_toric_trinities(int n_max, int shard = 0, int shard_count = 1,
                                               int workers = 1);

// Test oracle: the same census through the unpruned double loop over gluing
// pairs (no conjugacy-representative pruning).
std::vector<Trinity> enumerate_toric_trinities_bruteforce(int n_max);

// Deterministic sampler of planar trinities (outer = first white triangle).
// Rejection-samples gluings of the requested size until one is a sphere.
class PlanarSampler {
public:
    explicit PlanarSampler(std::uint64_t seed) : state_(seed ? seed : 1) {}
    Trinity sample(int n);

private:
    std::uint64_t next();
    std::uint64_t state_;
};

}  // namespace trinity
