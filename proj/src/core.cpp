#include "trinity/core.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

namespace trinity {

char color_letter(VertexColor c) {
    switch (c) {
        case VertexColor::Red: return 'R';
        case VertexColor::Green: return 'G';
        case VertexColor::Blue: return 'B';
    }
    return '?';
}

std::optional<VertexColor> color_from_letter(char c) {
    switch (c) {
        case 'R': return VertexColor::Red;
        case 'G': return VertexColor::Green;
        case 'B': return VertexColor::Blue;
        default: return std::nullopt;
    }
}

VertexColor third_color(VertexColor a, VertexColor b) {
    if (a == b) throw TrinityError("third_color: endpoints share a color");
    return static_cast<VertexColor>(3 - static_cast<int>(a) - static_cast<int>(b));
}

void Trinity::finalize() {
    const int nv = vertex_count(), ne = edge_count(), nt = triangle_count();
    for (auto& e : edge_ends)
        for (VertexId v : e)
            if (v < 0 || v >= nv) throw ValidationError("edge references unknown vertex " + std::to_string(v));
    for (auto& tr : tri_edges)
        for (auto& se : tr)
            if (se.edge < 0 || se.edge >= ne)
                throw ValidationError("triangle references unknown edge " + std::to_string(se.edge));
    if (outer && (*outer < 0 || *outer >= nt))
        throw ValidationError("outer references unknown triangle " + std::to_string(*outer));

    // Corner vertices: the source of each boundary slot; the walk must close.
    tri_corners_.assign(nt, {});
    for (TriangleId t = 0; t < nt; ++t) {
        for (int j = 0; j < 3; ++j) {
            const SignedEdge& se = tri_edges[t][j];
            const SignedEdge& nx = tri_edges[t][(j + 1) % 3];
            VertexId tgt = se.forward ? edge_ends[se.edge][1] : edge_ends[se.edge][0];
            VertexId src_next = nx.forward ? edge_ends[nx.edge][0] : edge_ends[nx.edge][1];
            if (tgt != src_next)
                throw ValidationError("triangle " + std::to_string(t) + " boundary does not close at slot " +
                                      std::to_string(j));
            tri_corners_[t][j] = se.forward ? edge_ends[se.edge][0] : edge_ends[se.edge][1];
        }
    }

    // Every edge on exactly two triangle sides, once per direction.
    edge_sides_.assign(ne, {Corner{}, Corner{}});
    std::vector<std::array<int, 2>> seen(ne, {0, 0});
    for (TriangleId t = 0; t < nt; ++t)
        for (int j = 0; j < 3; ++j) {
            const SignedEdge& se = tri_edges[t][j];
            int dir = se.forward ? 0 : 1;
            if (++seen[se.edge][dir] > 1)
                throw ValidationError("edge " + std::to_string(se.edge) + " traversed twice in the same direction");
            edge_sides_[se.edge][dir] = Corner{t, j};
        }
    for (EdgeId e = 0; e < ne; ++e)
        if (seen[e][0] != 1 || seen[e][1] != 1)
            throw ValidationError("edge " + std::to_string(e) + " is not on exactly two triangle sides");

    // Triangle colors from the corner-color cyclic order. Corners must carry
    // all three colors; black reads red->green->blue counter-clockwise.
    tri_colors_.assign(nt, TriangleColor::Black);
    for (TriangleId t = 0; t < nt; ++t) {
        int mask = 0;
        for (VertexId v : tri_corners_[t]) mask |= 1 << static_cast<int>(vertex_colors[v]);
        if (mask != 7)
            throw ValidationError("triangle " + std::to_string(t) + " corners do not carry all three colors");
        int r = 0;
        while (vertex_colors[tri_corners_[t][r]] != VertexColor::Red) ++r;
        VertexColor after_red = vertex_colors[tri_corners_[t][(r + 1) % 3]];
        tri_colors_[t] = (after_red == VertexColor::Green) ? TriangleColor::Black : TriangleColor::White;
    }

    // Rotation system: corners around each vertex must form one ccw cycle.
    std::vector<std::vector<Corner>> at_vertex(nv);
    for (TriangleId t = 0; t < nt; ++t)
        for (int j = 0; j < 3; ++j) at_vertex[tri_corners_[t][j]].push_back(Corner{t, j});
    rotations_.assign(nv, {});
    for (VertexId v = 0; v < nv; ++v) {
        if (at_vertex[v].empty()) throw ValidationError("isolated vertex " + std::to_string(v));
        Corner start = *std::min_element(at_vertex[v].begin(), at_vertex[v].end(), [](Corner a, Corner b) {
            return std::tie(a.tri, a.slot) < std::tie(b.tri, b.slot);
        });
        Corner c = start;
        do {
            rotations_[v].push_back(c);
            c = ccw_next(c);
            if (corner_vertex(c) != v)
                throw ValidationError("rotation around vertex " + std::to_string(v) + " leaves the vertex");
            if (rotations_[v].size() > at_vertex[v].size())
                throw ValidationError("rotation around vertex " + std::to_string(v) + " does not close");
        } while (!(c == start));
        if (rotations_[v].size() != at_vertex[v].size())
            throw ValidationError("corners around vertex " + std::to_string(v) +
                                  " split into several rotation cycles");
    }

    whites_.clear();
    blacks_.clear();
    for (TriangleId t = 0; t < nt; ++t)
        (tri_colors_[t] == TriangleColor::White ? whites_ : blacks_).push_back(t);
    n_ = static_cast<int>(whites_.size());

    int chi = nv - ne + nt;
    if ((2 - chi) % 2 != 0) throw ValidationError("odd Euler characteristic");
    genus_ = (2 - chi) / 2;

    white_index_.assign(nt, -1);
    eligible_index_.assign(nv, -1);
    eligible_.clear();
    std::array<bool, 3> root_mask{false, false, false};
    std::vector<bool> is_root_v(nv, false);
    if (genus_ == 0 && outer && tri_colors_[*outer] == TriangleColor::White)
        for (VertexId v : tri_corners_[*outer]) is_root_v[v] = true;
    int wi = 0;
    for (TriangleId t : whites_)
        if (!(genus_ == 0 && outer && t == *outer)) white_index_[t] = wi++;
    for (VertexId v = 0; v < nv; ++v)
        if (!is_root_v[v]) {
            eligible_index_[v] = static_cast<int>(eligible_.size());
            eligible_.push_back(v);
        }
    (void)root_mask;
}

TriangleId Trinity::other_triangle(EdgeId e, TriangleId t) const {
    TriangleId a = edge_sides_[e][0].tri, b = edge_sides_[e][1].tri;
    if (a == t) return b;
    if (b == t) return a;
    throw TrinityError("other_triangle: triangle not on edge");
}

Corner Trinity::ccw_next(Corner c) const {
    const SignedEdge& in = tri_edges[c.tri][(c.slot + 2) % 3];
    return edge_sides_[in.edge][in.forward ? 1 : 0];
}

Corner Trinity::cw_next(Corner c) const {
    const SignedEdge& out = tri_edges[c.tri][c.slot];
    Corner o = edge_sides_[out.edge][out.forward ? 1 : 0];
    return Corner{o.tri, (o.slot + 1) % 3};
}

Corner Trinity::corner_at(TriangleId t, VertexId v) const {
    for (int j = 0; j < 3; ++j)
        if (tri_corners_[t][j] == v) return Corner{t, j};
    throw TrinityError("corner_at: vertex not on triangle");
}

int Trinity::slot_of_corner_color(TriangleId t, VertexColor x) const {
    for (int j = 0; j < 3; ++j)
        if (vertex_colors[tri_corners_[t][j]] == x) return j;
    throw TrinityError("slot_of_corner_color: color missing");
}

int Trinity::slot_of_edge_color(TriangleId t, VertexColor x) const {
    // The edge at slot j misses the color of corner j+2.
    return (slot_of_corner_color(t, x) + 1) % 3;
}

// --- validation ----------------------------------------------------------

std::vector<std::string> validate(const Trinity& t) {
    std::vector<std::string> report;
    auto bad = [&](const std::string& s) { report.push_back(s); };

    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        auto [a, b] = t.edge_ends[e];
        if (t.vertex_colors[a] == t.vertex_colors[b])
            bad("edge-coloring: edge " + std::to_string(e) + " joins two " +
                std::string(1, color_letter(t.vertex_colors[a])) + " vertices " + std::to_string(a) + "," +
                std::to_string(b));
    }

    // Count agreement: blacks = whites = red = green = blue edges = n.
    std::array<int, 3> edge_by_color{0, 0, 0};
    bool colorable = report.empty();
    if (colorable)
        for (EdgeId e = 0; e < t.edge_count(); ++e) edge_by_color[static_cast<int>(t.edge_color(e))]++;
    int nb = static_cast<int>(t.blacks().size()), nw = static_cast<int>(t.whites().size());
    if (nb != nw) bad("counts: " + std::to_string(nb) + " black vs " + std::to_string(nw) + " white triangles");
    if (colorable)
        for (int c = 0; c < 3; ++c)
            if (edge_by_color[c] != nw)
                bad(std::string("counts: ") + color_letter(static_cast<VertexColor>(c)) + "-edge count " +
                    std::to_string(edge_by_color[c]) + " differs from n=" + std::to_string(nw));

    // Connectivity over triangle adjacency.
    if (t.triangle_count() > 0) {
        std::vector<char> seen(t.triangle_count(), 0);
        std::queue<TriangleId> q;
        q.push(0);
        seen[0] = 1;
        int cnt = 1;
        while (!q.empty()) {
            TriangleId cur = q.front();
            q.pop();
            for (auto& se : t.tri_edges[cur]) {
                TriangleId o = t.other_triangle(se.edge, cur);
                if (!seen[o]) {
                    seen[o] = 1;
                    ++cnt;
                    q.push(o);
                }
            }
        }
        if (cnt != t.triangle_count()) bad("surface: triangulation is disconnected");
    }

    if (t.genus() != 0 && t.genus() != 1)
        bad("euler: genus " + std::to_string(t.genus()) + " outside {0,1}");
    if (t.genus() == 0) {
        if (!t.outer)
            bad("outer: genus-0 trinity lacks an outer triangle");
        else if (t.triangle_color(*t.outer) != TriangleColor::White)
            bad("outer: triangle " + std::to_string(*t.outer) + " is not white");
    } else if (t.outer) {
        bad("outer: toric trinity must not designate an outer triangle");
    }
    return report;
}

int genus(const Trinity& t) { return t.genus(); }

// --- file format ----------------------------------------------------------

namespace {

struct RawLines {
    std::optional<int> genus;
    std::optional<TriangleId> outer;
    std::map<int, VertexColor> vertices;
    std::map<int, std::array<VertexId, 2>> edges;
    std::map<int, std::array<SignedEdge, 3>> triangles;
};

SignedEdge parse_signed(const std::string& tok, int lineno) {
    if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-'))
        throw ParseError("line " + std::to_string(lineno) + ": signed edge reference expected, got '" + tok + "'");
    try {
        return SignedEdge{std::stoi(tok.substr(1)), tok[0] == '+'};
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad edge id '" + tok + "'");
    }
}

}  // namespace

Trinity load_trinity(const std::string& text) {
    RawLines raw;
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
        auto want_int = [&](const char* what) {
            long long x;
            if (!(ls >> x)) throw ParseError("line " + std::to_string(lineno) + ": expected " + what);
            return static_cast<int>(x);
        };
        if (kw == "genus") {
            raw.genus = want_int("genus value");
        } else if (kw == "outer") {
            raw.outer = want_int("outer triangle id");
        } else if (kw == "vertex") {
            int id = want_int("vertex id");
            std::string col;
            if (!(ls >> col) || col.size() != 1 || !color_from_letter(col[0]))
                throw ParseError("line " + std::to_string(lineno) + ": vertex color must be R, G or B");
            if (!raw.vertices.emplace(id, *color_from_letter(col[0])).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate vertex id " + std::to_string(id));
        } else if (kw == "edge") {
            int id = want_int("edge id");
            int a = want_int("endpoint"), b = want_int("endpoint");
            if (!raw.edges.emplace(id, std::array<VertexId, 2>{a, b}).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate edge id " + std::to_string(id));
        } else if (kw == "triangle") {
            int id = want_int("triangle id");
            std::array<SignedEdge, 3> bd;
            for (auto& se : bd) {
                std::string tok;
                if (!(ls >> tok)) throw ParseError("line " + std::to_string(lineno) + ": triangle needs three edges");
                se = parse_signed(tok, lineno);
            }
            if (!raw.triangles.emplace(id, bd).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate triangle id " + std::to_string(id));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
        }
        std::string extra;
        if (ls >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    }

    auto check_dense = [](const auto& m, const char* what) {
        int expect = 0;
        for (auto& [id, _] : m)
            if (id != expect++) throw ParseError(std::string(what) + " ids are not dense from 0");
    };
    check_dense(raw.vertices, "vertex");
    check_dense(raw.edges, "edge");
    check_dense(raw.triangles, "triangle");

    Trinity t;
    for (auto& [_, c] : raw.vertices) t.vertex_colors.push_back(c);
    for (auto& [_, e] : raw.edges) t.edge_ends.push_back(e);
    for (auto& [_, b] : raw.triangles) t.tri_edges.push_back(b);
    t.outer = raw.outer;
    t.finalize();

    auto report = validate(t);
    if (!report.empty()) throw ValidationError("invariant violation: " + report.front());
    if (raw.genus && *raw.genus != t.genus())
        throw ValidationError("invariant violation: header claims genus " + std::to_string(*raw.genus) +
                              " but the surface has genus " + std::to_string(t.genus()));
    return t;
}

std::string save_trinity(const Trinity& t) {
    std::ostringstream out;
    out << "genus " << t.genus() << "\n";
    if (t.outer) out << "outer " << *t.outer << "\n";
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        out << "vertex " << v << " " << color_letter(t.vertex_colors[v]) << "\n";
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        out << "edge " << e << " " << t.edge_ends[e][0] << " " << t.edge_ends[e][1] << "\n";
    for (TriangleId tr = 0; tr < t.triangle_count(); ++tr) {
        out << "triangle " << tr;
        for (auto& se : t.tri_edges[tr]) out << " " << (se.forward ? '+' : '-') << se.edge;
        out << "\n";
    }
    return out.str();
}

Trinity load_trinity_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_trinity(buf.str());
}

// --- rotation system -------------------------------------------------------

std::vector<RotationItem> rotation(const Trinity& t, VertexId v) {
    std::vector<RotationItem> out;
    for (Corner c : t.corners_around(v)) {
        out.push_back({RotationItem::Edge, t.incoming_edge(c)});
        out.push_back({RotationItem::Triangle, c.tri});
    }
    return out;
}

// --- dual digraphs -----------------------------------------------------------

DualDigraph dual_digraph(const Trinity& t, VertexColor x) {
    DualDigraph d;
    d.color = x;
    d.node_index.assign(t.vertex_count(), -1);
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        if (t.vertex_colors[v] == x) {
            d.node_index[v] = static_cast<int>(d.nodes.size());
            d.nodes.push_back(v);
        }
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        if (t.edge_color(e) != x) continue;
        Corner fwd = t.side(e, true), bwd = t.side(e, false);
        Corner black = t.triangle_color(fwd.tri) == TriangleColor::Black ? fwd : bwd;
        Corner white = t.triangle_color(fwd.tri) == TriangleColor::Black ? bwd : fwd;
        VertexId tail = t.corners(black.tri)[t.slot_of_corner_color(black.tri, x)];
        VertexId head = t.corners(white.tri)[t.slot_of_corner_color(white.tri, x)];
        d.arcs.push_back(DualArc{e, tail, head});
    }
    return d;
}

// --- cycles and separation ---------------------------------------------------

std::optional<std::vector<char>> two_color_triangles(const Trinity& t, const std::vector<char>& edge_parity) {
    std::vector<char> color(t.triangle_count(), -1);
    std::queue<TriangleId> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        TriangleId cur = q.front();
        q.pop();
        for (auto& se : t.tri_edges[cur]) {
            TriangleId o = t.other_triangle(se.edge, cur);
            char want = static_cast<char>(color[cur] ^ edge_parity[se.edge]);
            if (color[o] < 0) {
                color[o] = want;
                q.push(o);
            } else if (color[o] != want) {
                return std::nullopt;
            }
        }
    }
    return color;
}

bool is_separating(const Trinity& t, const EdgeCycle& c) {
    if (c.steps.empty()) throw TrinityError("is_separating: empty cycle");
    std::vector<char> vseen(t.vertex_count(), 0);
    VertexId start =
        c.steps.front().forward ? t.edge_ends[c.steps.front().edge][0] : t.edge_ends[c.steps.front().edge][1];
    VertexId cur = start;
    std::vector<char> parity(t.edge_count(), 0);
    for (auto& se : c.steps) {
        auto [a, b] = t.edge_ends[se.edge];
        VertexId from = se.forward ? a : b, to = se.forward ? b : a;
        if (from != cur) throw TrinityError("is_separating: steps do not chain");
        if (vseen[from]) throw TrinityError("is_separating: cycle revisits vertex " + std::to_string(from));
        vseen[from] = 1;
        if (parity[se.edge]) throw TrinityError("is_separating: cycle reuses edge " + std::to_string(se.edge));
        parity[se.edge] = 1;
        cur = to;
    }
    if (cur != start) throw TrinityError("is_separating: walk does not close");
    return two_color_triangles(t, parity).has_value();
}

std::vector<char> dual_cycle_parity(const Trinity& t, const std::vector<DualArc>& cycle) {
    std::vector<char> parity(t.edge_count(), 0);
    const std::size_t k = cycle.size();
    for (std::size_t i = 0; i < k; ++i) {
        const DualArc& a = cycle[i];
        const DualArc& b = cycle[(i + 1) % k];
        if (a.head != b.tail) throw TrinityError("dual cycle: arcs do not chain");
        parity[a.id] ^= 1;
        // Route around the shared vertex from the white triangle of a to the
        // black triangle of b, counter-clockwise, crossing the fan edges.
        Corner wf = t.side(a.id, true), wb = t.side(a.id, false);
        Corner white = t.triangle_color(wf.tri) == TriangleColor::White ? wf : wb;
        Corner bf = t.side(b.id, true), bb = t.side(b.id, false);
        Corner black = t.triangle_color(bf.tri) == TriangleColor::Black ? bf : bb;
        Corner cur = t.corner_at(white.tri, a.head);
        Corner stop = t.corner_at(black.tri, b.tail);
        int guard = 0;
        while (!(cur == stop)) {
            parity[t.incoming_edge(cur)] ^= 1;
            cur = t.ccw_next(cur);
            if (++guard > 2 * t.degree(a.head)) throw TrinityError("dual cycle: fan walk does not close");
        }
    }
    return parity;
}

bool dual_cycle_separating(const Trinity& t, const std::vector<DualArc>& cycle) {
    return two_color_triangles(t, dual_cycle_parity(t, cycle)).has_value();
}

// --- canonical form -----------------------------------------------------------

namespace {

// Darts are triangle slots; sigma advances inside the triangle, alpha flips
// across the edge.
struct DartMaps {
    std::vector<int> sigma, alpha, corner_color, edge_color;
};

DartMaps dart_maps(const Trinity& t) {
    const int nd = 3 * t.triangle_count();
    DartMaps m;
    m.sigma.resize(nd);
    m.alpha.resize(nd);
    m.corner_color.resize(nd);
    m.edge_color.resize(nd);
    for (TriangleId tr = 0; tr < t.triangle_count(); ++tr)
        for (int j = 0; j < 3; ++j) {
            int d = 3 * tr + j;
            m.sigma[d] = 3 * tr + (j + 1) % 3;
            const SignedEdge& se = t.tri_edges[tr][j];
            Corner o = t.side(se.edge, !se.forward);
            m.alpha[d] = 3 * o.tri + o.slot;
            m.corner_color[d] = static_cast<int>(t.vertex_colors[t.corners(tr)[j]]);
            m.edge_color[d] = static_cast<int>(t.edge_color(se.edge));
        }
    return m;
}

std::vector<int> encode_from(const Trinity& t, const DartMaps& m, int start) {
    const int nd = 3 * t.triangle_count();
    std::vector<int> number(nd, -1);
    std::vector<int> order;
    order.reserve(nd);
    number[start] = 0;
    order.push_back(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int d = order[i];
        for (int nb : {m.sigma[d], m.alpha[d]})
            if (number[nb] < 0) {
                number[nb] = static_cast<int>(order.size());
                order.push_back(nb);
            }
    }
    std::vector<int> enc;
    enc.reserve(3 * nd + 4);
    enc.push_back(t.genus());
    enc.push_back(t.n());
    enc.push_back(nd);
    if (t.outer) {
        int best = nd;
        for (int j = 0; j < 3; ++j) best = std::min(best, number[3 * *t.outer + j]);
        enc.push_back(best);
    } else {
        enc.push_back(-1);
    }
    for (int d : order) {
        enc.push_back(number[m.sigma[d]]);
        enc.push_back(number[m.alpha[d]]);
        enc.push_back(m.corner_color[d]);
    }
    return enc;
}

}  // namespace

CanonicalForm canonical_form(const Trinity& t) {
    if (t.triangle_count() == 0) throw TrinityError("canonical_form: empty trinity");
    DartMaps m = dart_maps(t);
    // Start darts: red corners of black triangles — one orbit representative
    // class preserved by any color/orientation isomorphism.
    std::optional<std::vector<int>> best;
    for (TriangleId b : t.blacks()) {
        int d = 3 * b + t.slot_of_corner_color(b, VertexColor::Red);
        std::vector<int> enc = encode_from(t, m, d);
        if (!best || enc < *best) best = std::move(enc);
    }
    CanonicalForm cf;
    cf.encoding = std::move(*best);
    std::string bytes;
    bytes.reserve(cf.encoding.size() * 4);
    for (int x : cf.encoding) {
        std::uint32_t u = static_cast<std::uint32_t>(x);
        for (int s = 0; s < 4; ++s) bytes.push_back(static_cast<char>((u >> (8 * s)) & 0xff));
    }
    cf.digest = sha256_hex(bytes);
    return cf;
}

std::string canonical_digest(const Trinity& t) { return canonical_form(t).digest; }

// --- sha-256 -------------------------------------------------------------------

namespace {

constexpr std::uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
    0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
    0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
    0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
    0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, int s) { return (x >> s) | (x << (32 - s)); }

}  // namespace

std::string sha256_hex(const void* data, std::size_t len) {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::vector<std::uint8_t> msg(static_cast<const std::uint8_t*>(data),
                                  static_cast<const std::uint8_t*>(data) + len);
    msg.push_back(0x80);
    while (msg.size() % 64 != 56) msg.push_back(0);
    std::uint64_t bits = static_cast<std::uint64_t>(len) * 8;
    for (int s = 7; s >= 0; --s) msg.push_back(static_cast<std::uint8_t>((bits >> (8 * s)) & 0xff));

    for (std::size_t off = 0; off < msg.size(); off += 64) {
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(msg[off + 4 * i]) << 24) | (std::uint32_t(msg[off + 4 * i + 1]) << 16) |
                   (std::uint32_t(msg[off + 4 * i + 2]) << 8) | std::uint32_t(msg[off + 4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], k = h[7];
        for (int i = 0; i < 64; ++i) {
            std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = k + s1 + ch + kSha256K[i] + w[i];
            std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = s0 + maj;
            k = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += k;
    }

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint32_t x : h)
        for (int s = 28; s >= 0; s -= 4) out.push_back(hex[(x >> s) & 0xf]);
    return out;
}

std::string sha256_hex(const std::string& s) { return sha256_hex(s.data(), s.size()); }

}  // namespace trinity
