#include "trinity/curve.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace trinity {

CurvePresentation load_curve(const std::string& text) {
    CurvePresentation c;
    std::map<int, std::array<int, 4>> crossings;
    std::map<int, int> strand_uses;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool base_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "crossing") {
            int id;
            std::array<int, 4> ends{};
            if (!(ls >> id >> ends[0] >> ends[1] >> ends[2] >> ends[3]))
                throw ParseError("line " + std::to_string(lineno) + ": crossing needs id and four strand ids");
            if (!crossings.emplace(id, ends).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate crossing " + std::to_string(id));
            for (int s : ends) strand_uses[s]++;
        } else if (kw == "strand") {
            int id;
            if (!(ls >> id)) throw ParseError("line " + std::to_string(lineno) + ": strand needs an id");
            strand_uses.try_emplace(id, 0);
        } else if (kw == "base") {
            if (!(ls >> c.base_crossing >> c.base_gap) || c.base_gap < 0 || c.base_gap > 3)
                throw ParseError("line " + std::to_string(lineno) + ": base needs crossing and gap 0..3");
            base_seen = true;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
        }
    }
    if (crossings.empty()) throw ParseError("curve has no crossings");
    int expect = 0;
    for (auto& [id, ends] : crossings) {
        if (id != expect++) throw ParseError("crossing ids are not dense from 0");
        c.crossings.push_back(ends);
    }
    for (auto& [s, uses] : strand_uses)
        if (uses != 2)
            throw ParseError("strand " + std::to_string(s) + " has " + std::to_string(uses) +
                             " ends, expected 2");
    if (!base_seen) {
        c.base_crossing = 0;
        c.base_gap = 0;
    }
    if (c.base_crossing < 0 || c.base_crossing >= static_cast<int>(c.crossings.size()))
        throw ParseError("base names an unknown crossing");
    return c;
}

CurveTrinity from_curve(const CurvePresentation& c) {
    const int d = static_cast<int>(c.crossings.size());
    if (d == 0) throw TrinityError("from_curve: a curve needs at least one crossing");

    // Strand involution over ends (4c + j).
    std::map<int, std::vector<int>> ends_of_strand;
    for (int cr = 0; cr < d; ++cr)
        for (int j = 0; j < 4; ++j) ends_of_strand[c.crossings[cr][j]].push_back(4 * cr + j);
    std::vector<int> mate(4 * d, -1);
    for (auto& [s, ends] : ends_of_strand) {
        if (ends.size() != 2) throw TrinityError("from_curve: strand " + std::to_string(s) + " lacks two ends");
        mate[ends[0]] = ends[1];
        mate[ends[1]] = ends[0];
    }

    // Faces as orbits of gaps: leave through end k, arrive at the mate end
    // j', continue in gap j'-1.
    auto gap_next = [&](int gap) {
        int arrive = mate[gap];  // gap (c,k) exits via end (c,k)
        int cr = arrive / 4, j = arrive % 4;
        return 4 * cr + (j + 3) % 4;
    };
    std::vector<int> face_of(4 * d, -1);
    int faces = 0;
    for (int g0 = 0; g0 < 4 * d; ++g0) {
        if (face_of[g0] >= 0) continue;
        int g = g0;
        do {
            face_of[g] = faces;
            g = gap_next(g);
        } while (g != g0);
        ++faces;
    }

    // Connectivity of the curve.
    {
        std::vector<char> seen(d, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            int cr = q.front();
            q.pop();
            for (int j = 0; j < 4; ++j) {
                int o = mate[4 * cr + j] / 4;
                if (!seen[o]) {
                    seen[o] = 1;
                    ++cnt;
                    q.push(o);
                }
            }
        }
        if (cnt != d) throw TrinityError("from_curve: curve is disconnected");
    }
    int chi = d - 2 * d + faces;
    if (chi != 2 && chi != 0)
        throw TrinityError("from_curve: complementary regions are not disks on a sphere or torus");

    // Checkerboard 2-coloring: faces across each strand differ. The two sides
    // of the strand at end (c,j) are gaps j and j-1.
    std::vector<char> shade(faces, -1);
    shade[face_of[4 * c.base_crossing + c.base_gap]] = 0;  // red side
    std::queue<int> q;
    q.push(face_of[4 * c.base_crossing + c.base_gap]);
    std::vector<std::vector<int>> face_adj(faces);
    for (int e = 0; e < 4 * d; ++e) {
        int left = face_of[e], right = face_of[4 * (e / 4) + (e % 4 + 3) % 4];
        face_adj[left].push_back(right);
        face_adj[right].push_back(left);
    }
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (int o : face_adj[f]) {
            if (shade[o] < 0) {
                shade[o] = static_cast<char>(1 - shade[f]);
                q.push(o);
            } else if (shade[o] == shade[f]) {
                throw TrinityError("from_curve: complementary regions are not checkerboard colorable");
            }
        }
    }

    CurveTrinity ct;
    std::vector<VertexColor> vc;
    for (int cr = 0; cr < d; ++cr) {
        ct.green_of_crossing.push_back(static_cast<VertexId>(vc.size()));
        vc.push_back(VertexColor::Green);
    }
    for (int f = 0; f < faces; ++f) {
        ct.region_of_face.push_back(static_cast<VertexId>(vc.size()));
        vc.push_back(shade[f] == 0 ? VertexColor::Red : VertexColor::Blue);
    }

    // Spokes (green vertex to surrounding regions) then one segment edge per
    // strand. Spoke (c,k) gets id 4c+k; segments follow.
    std::vector<std::array<VertexId, 2>> ee(4 * d);
    for (int cr = 0; cr < d; ++cr)
        for (int k = 0; k < 4; ++k)
            ee[4 * cr + k] = {ct.green_of_crossing[cr], ct.region_of_face[face_of[4 * cr + k]]};
    std::map<int, EdgeId> segment_of_strand;
    {
        std::vector<int> strands;
        for (auto& [s, _] : ends_of_strand) strands.push_back(s);
        std::sort(strands.begin(), strands.end());
        for (int s : strands) {
            int e0 = ends_of_strand[s][0];
            int left = face_of[e0], right = face_of[4 * (e0 / 4) + (e0 % 4 + 3) % 4];
            segment_of_strand[s] = static_cast<EdgeId>(ee.size());
            ee.push_back({ct.region_of_face[right], ct.region_of_face[left]});
        }
    }

    // One triangle per crossing end j: corners green, region gap j-1, region
    // gap j; counter-clockwise boundary spoke j-1, segment, spoke j reversed.
    std::vector<std::array<SignedEdge, 3>> te;
    ct.triangle_at_end.assign(d, {-1, -1, -1, -1});
    for (int cr = 0; cr < d; ++cr)
        for (int j = 0; j < 4; ++j) {
            int gp = (j + 3) % 4;  // gap j-1
            EdgeId spoke_prev = 4 * cr + gp;
            EdgeId spoke_here = 4 * cr + j;
            EdgeId seg = segment_of_strand[c.crossings[cr][j]];
            // Segment endpoints are stored (right face, left face) of its
            // first-listed end; this end's traversal goes right -> left.
            bool fwd = ee[seg][0] == ct.region_of_face[face_of[4 * cr + gp]];
            ct.triangle_at_end[cr][j] = static_cast<TriangleId>(te.size());
            te.push_back({SignedEdge{spoke_prev, true}, SignedEdge{seg, fwd}, SignedEdge{spoke_here, false}});
        }
    ct.face_of_gap.assign(d, {});
    for (int cr = 0; cr < d; ++cr)
        for (int k = 0; k < 4; ++k) ct.face_of_gap[cr][k] = face_of[4 * cr + k];

    Trinity t;
    t.vertex_colors = std::move(vc);
    t.edge_ends = std::move(ee);
    t.tri_edges = std::move(te);
    t.finalize();
    if (t.genus() == 0) {
        t.outer = t.whites().front();
        t.finalize();
    }
    auto report = validate(t);
    if (!report.empty()) throw TrinityError("from_curve: built an invalid trinity: " + report.front());
    ct.trinity = std::move(t);
    return ct;
}

Trinity with_outer(const Trinity& t, TriangleId w) {
    if (t.genus() != 0) throw TrinityError("with_outer: planar trinity required");
    if (w < 0 || w >= t.triangle_count() || t.triangle_color(w) != TriangleColor::White)
        throw TrinityError("with_outer: not a white triangle");
    Trinity out = t;
    out.outer = w;
    out.finalize();
    return out;
}

State kauffman_to_matching(const CurveTrinity& ct, const KauffmanState& ks, TriangleId outer) {
    const int d = static_cast<int>(ct.green_of_crossing.size());
    if (static_cast<int>(ks.marked_gap.size()) != d)
        throw TrinityError("kauffman_to_matching: one marked quadrant per crossing required");
    for (int g : ks.marked_gap)
        if (g < 0 || g > 3) throw TrinityError("kauffman_to_matching: marked gap out of range");

    Trinity t = with_outer(ct.trinity, outer);

    // The marked quadrant (c, k) meets exactly the white triangles at ends k
    // and k+1 of its crossing.
    int slots = 0;
    for (TriangleId w : t.whites())
        if (t.white_index(w) >= 0) ++slots;
    State s;
    s.match.assign(slots, -1);
    for (int cr = 0; cr < d; ++cr)
        for (int j = 0; j < 4; ++j) {
            TriangleId tri = ct.triangle_at_end[cr][j];
            if (t.triangle_color(tri) != TriangleColor::White) continue;
            int mk = ks.marked_gap[cr];
            VertexId v;
            if (mk == (j + 3) % 4)
                v = ct.region_of_face[ct.face_of_gap[cr][mk]];
            else if (mk == j)
                v = ct.region_of_face[ct.face_of_gap[cr][mk]];
            else
                v = ct.green_of_crossing[cr];
            if (tri == outer) {
                if (v != ct.green_of_crossing[cr])
                    throw TrinityError("kauffman_to_matching: the outer triangle is matched by the rule");
                continue;
            }
            s.match[t.white_index(tri)] = v;
        }
    if (!is_state(t, s))
        throw TrinityError("kauffman_to_matching: markers do not induce a Tutte matching");
    return s;
}

std::vector<KauffmanState> enumerate_kauffman_states(const CurveTrinity& ct, TriangleId outer) {
    const int d = static_cast<int>(ct.green_of_crossing.size());
    const Trinity& t = ct.trinity;
    if (t.triangle_color(outer) != TriangleColor::White)
        throw TrinityError("enumerate_kauffman_states: outer must be white");

    // The starred regions are the two the outer triangle straddles.
    int star1 = -1, star2 = -1;
    for (int cr = 0; cr < d && star1 < 0; ++cr)
        for (int j = 0; j < 4; ++j)
            if (ct.triangle_at_end[cr][j] == outer) {
                star1 = ct.face_of_gap[cr][(j + 3) % 4];
                star2 = ct.face_of_gap[cr][j];
            }
    if (star1 < 0) throw TrinityError("enumerate_kauffman_states: outer not a curve triangle");

    std::vector<KauffmanState> out;
    std::vector<char> used(ct.region_of_face.size(), 0);
    KauffmanState cur;
    cur.marked_gap.assign(d, -1);
    auto rec = [&](auto&& self, int cr) -> void {
        if (cr == d) {
            out.push_back(cur);
            return;
        }
        for (int k = 0; k < 4; ++k) {
            int f = ct.face_of_gap[cr][k];
            if (f == star1 || f == star2 || used[f]) continue;
            used[f] = 1;
            cur.marked_gap[cr] = k;
            self(self, cr + 1);
            used[f] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace trinity
