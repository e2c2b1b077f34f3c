#include "ckforge/families.hh"

#include <algorithm>
#include <map>

namespace ckforge {

namespace {

struct EdgeRow {
    const char* id;
    const char* src;
    const char* dst;
};

struct LabeledEdgeRow {
    const char* id;
    const char* src;
    const char* dst;
    std::vector<const char*> aliases;
};

Vertex vx(const char* id, Color c) { return Vertex{id, c, Layer::none}; }

Edge ed(const std::string& id, const std::string& src, const std::string& dst,
        bool directed) {
    Edge e;
    e.src = src;
    e.dst = dst;
    e.color = Color::none;
    e.directed = directed;
    e.id = id;
    return e;
}

// ==================== undirected square family ====================

// 2x2 lattice plus one diagonal
ColoredGraph sq2_fixture() {
    std::vector<Vertex> vs = {vx("u", Color::red), vx("v", Color::blue),
                              vx("k", Color::green), vx("w", Color::blue)};
    static const EdgeRow rows[] = {
        {"e", "u", "v"}, {"h", "v", "k"}, {"f", "u", "w"},
        {"g", "w", "k"}, {"j", "u", "k"},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) es.push_back(ed(r.id, r.src, r.dst, false));
    return make_graph(vs, es);
}

// sq2 core plus four border vertices; the figure reuses the label p for two
// edges, so the second becomes p2
ColoredGraph sq3_fixture() {
    std::vector<Vertex> vs = {vx("u", Color::red),   vx("v", Color::blue),
                              vx("k", Color::green), vx("w", Color::blue),
                              vx("l", Color::red),   vx("m", Color::red),
                              vx("n", Color::green), vx("o", Color::green)};
    static const EdgeRow rows[] = {
        {"e", "u", "v"}, {"h", "v", "k"},  {"f", "u", "w"}, {"g", "w", "k"},
        {"n", "n", "m"}, {"m", "n", "w"},  {"o", "l", "w"}, {"p", "l", "o"},
        {"r", "m", "v"}, {"p2", "o", "v"}, {"j", "u", "k"},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) es.push_back(ed(r.id, r.src, r.dst, false));
    return make_graph(vs, es);
}

// no figure exists past n=3; each growth step adds a red pair and a green
// pair attached like the n=3 border (three edges each: the previous border
// vertex of the opposite color, one blue corner, one far corner)
ColoredGraph sq_grown(int n) {
    ColoredGraph g = sq3_fixture();
    std::string pl = "l", pm = "m", pn = "n", po = "o";
    int eid = 1;
    auto add_edge = [&](const std::string& a, const std::string& b) {
        g.edges.push_back(ed("x" + std::to_string(eid++), a, b, false));
    };
    for (int t = 2; t <= n - 2; ++t) {
        std::string sl = "l" + std::to_string(t);
        std::string sm = "m" + std::to_string(t);
        std::string sn = "n" + std::to_string(t);
        std::string so = "o" + std::to_string(t);
        g.vertices.push_back(vx(sl.c_str(), Color::red));
        g.vertices.push_back(vx(sm.c_str(), Color::red));
        g.vertices.push_back(vx(sn.c_str(), Color::green));
        g.vertices.push_back(vx(so.c_str(), Color::green));
        add_edge(sl, po);
        add_edge(sl, "w");
        add_edge(sl, "k");
        add_edge(sm, pn);
        add_edge(sm, "v");
        add_edge(sm, "k");
        add_edge(sn, pm);
        add_edge(sn, "w");
        add_edge(sn, "u");
        add_edge(so, pl);
        add_edge(so, "v");
        add_edge(so, "u");
        pl = sl;
        pm = sm;
        pn = sn;
        po = so;
    }
    return make_graph(g.vertices, g.edges);
}

// ==================== directed square family ====================

ColoredGraph sq3d_fixture() {
    std::vector<Vertex> vs = {vx("v1", Color::blue),  vx("v2", Color::blue),
                              vx("v3", Color::red),   vx("v4", Color::green),
                              vx("v5", Color::red),   vx("v6", Color::green),
                              vx("v7", Color::green), vx("v8", Color::red)};
    static const EdgeRow rows[] = {
        {"e1", "v4", "v2"},  {"e2", "v5", "v6"},  {"e3", "v6", "v5"},
        {"e4", "v8", "v7"},  {"e5", "v7", "v8"},  {"e6", "v3", "v2"},
        {"e7", "v3", "v7"},  {"e8", "v6", "v3"},  {"e9", "v4", "v8"},
        {"e10", "v5", "v4"}, {"e11", "v8", "v2"}, {"e12", "v7", "v2"},
        {"e13", "v1", "v5"}, {"e14", "v1", "v6"}, {"e15", "v1", "v4"},
        {"e16", "v1", "v3"}, {"e17", "v7", "v5"}, {"e18", "v5", "v7"},
        {"e19", "v1", "v7"}, {"e20", "v1", "v8"}, {"e21", "v8", "v6"},
        {"e22", "v6", "v8"}, {"e23", "v5", "v2"}, {"e24", "v6", "v2"},
        {"e25", "v4", "v3"}, {"e26", "v3", "v4"},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) es.push_back(ed(r.id, r.src, r.dst, true));
    return make_graph(vs, es);
}

ColoredGraph sq4d_fixture() {
    std::vector<Vertex> vs = {
        vx("v1", Color::blue),  vx("v2", Color::blue),
        vx("v3", Color::blue),  vx("v4", Color::blue),
        vx("v5", Color::green), vx("v6", Color::red),
        vx("v7", Color::red),   vx("v8", Color::red),
        vx("v9", Color::green), vx("v10", Color::green),
        vx("v11", Color::red),  vx("v12", Color::green)};
    static const EdgeRow rows[] = {
        {"e1", "v2", "v6"},    {"e2", "v2", "v10"},   {"e3", "v2", "v9"},
        {"e4", "v9", "v4"},    {"e5", "v9", "v7"},    {"e6", "v7", "v9"},
        {"e7", "v10", "v6"},   {"e8", "v1", "v8"},    {"e9", "v1", "v11"},
        {"e10", "v10", "v8"},  {"e11", "v8", "v10"},  {"e12", "v7", "v5"},
        {"e13", "v8", "v3"},   {"e14", "v9", "v3"},   {"e15", "v12", "v4"},
        {"e16", "v12", "v7"},  {"e17", "v10", "v11"}, {"e18", "v10", "v3"},
        {"e19", "v6", "v3"},   {"e20", "v11", "v3"},  {"e21", "v12", "v3"},
        {"e22", "v12", "v11"}, {"e23", "v11", "v12"}, {"e24", "v5", "v4"},
        {"e25", "v2", "v8"},   {"e26", "v2", "v7"},   {"e27", "v2", "v5"},
        {"e28", "v2", "v11"},  {"e29", "v2", "v12"},  {"e30", "v6", "v4"},
        {"e31", "v6", "v9"},   {"e32", "v5", "v3"},   {"e33", "v7", "v3"},
        {"e34", "v8", "v5"},   {"e35", "v7", "v4"},   {"e36", "v11", "v4"},
        {"e37", "v9", "v11"},  {"e38", "v12", "v8"},  {"e39", "v1", "v12"},
        {"e40", "v1", "v10"},  {"e41", "v1", "v5"},   {"e42", "v1", "v6"},
        {"e43", "v9", "v8"},   {"e44", "v8", "v9"},   {"e45", "v1", "v9"},
        {"e46", "v1", "v7"},   {"e47", "v7", "v10"},  {"e48", "v10", "v7"},
        {"e49", "v8", "v4"},   {"e50", "v10", "v4"},  {"e51", "v5", "v6"},
        {"e52", "v6", "v5"},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) es.push_back(ed(r.id, r.src, r.dst, true));
    return make_graph(vs, es);
}

// no figure exists past n=4; approximate the fixture pattern — source fans,
// sink fans, a two-sided red/green matching — and let validate_sq report how
// far the result lands from the stated counts
ColoredGraph sqd_grown(int n) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    int eid = 1;
    auto add_edge = [&](const std::string& a, const std::string& b) {
        es.push_back(ed("e" + std::to_string(eid++), a, b, true));
    };
    for (int i = 1; i <= n - 2; ++i)
        vs.push_back(vx(("a" + std::to_string(i)).c_str(), Color::blue));
    for (int i = 1; i <= n - 2; ++i)
        vs.push_back(vx(("z" + std::to_string(i)).c_str(), Color::blue));
    for (int i = 1; i <= n; ++i)
        vs.push_back(vx(("r" + std::to_string(i)).c_str(), Color::red));
    for (int i = 1; i <= n; ++i)
        vs.push_back(vx(("g" + std::to_string(i)).c_str(), Color::green));
    for (int i = 1; i <= n - 2; ++i) {
        std::string a = "a" + std::to_string(i);
        for (int j = 1; j <= n; ++j) {
            add_edge(a, "r" + std::to_string(j));
            add_edge(a, "g" + std::to_string(j));
        }
    }
    for (int i = 1; i <= n; ++i) {
        std::string r = "r" + std::to_string(i);
        std::string ga = "g" + std::to_string(i);
        std::string gb = "g" + std::to_string(i % n + 1);
        add_edge(r, ga);
        add_edge(ga, r);
        add_edge(r, gb);
        add_edge(gb, r);
    }
    for (int i = 1; i <= n - 2; ++i) {
        std::string z = "z" + std::to_string(i);
        for (int j = 1; j <= n; ++j) {
            add_edge("r" + std::to_string(j), z);
            add_edge("g" + std::to_string(j), z);
        }
    }
    return make_graph(vs, es);
}

// ==================== grid-index digraphs ====================

ColoredGraph gpi2_fixture() {
    std::vector<Vertex> vs = {vx("u", Color::none), vx("v", Color::none),
                              vx("k", Color::none), vx("w", Color::none)};
    static const EdgeRow rows[] = {
        {"e", "u", "v"}, {"f", "u", "w"}, {"h", "v", "k"},
        {"g", "w", "k"}, {"i", "v", "w"}, {"j", "w", "v"},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) es.push_back(ed(r.id, r.src, r.dst, true));
    return make_graph(vs, es);
}

// many arrows carry several names at once (one per listed path using them);
// the first name is the stored id, the rest are aliases. fourteen more
// arrows carry plain numerals.
ColoredGraph gpi3_fixture() {
    std::vector<Vertex> vs;
    for (const char* id :
         {"e11", "e12", "e13", "e21", "e22", "e23", "e31", "e32", "e33"})
        vs.push_back(vx(id, Color::none));
    static const std::vector<LabeledEdgeRow> rows = {
        {"j5", "e21", "e22", {}},
        {"g6", "e22", "e23", {"f6"}},
        {"e3", "e21", "e31", {"f3"}},
        {"g1", "e11", "e21", {"h1"}},
        {"i8", "e23", "e33", {"e8", "j8", "h8"}},
        {"1", "e31", "e33", {}},
        {"i1", "e11", "e31", {}},
        {"g3", "e12", "e13", {"h3"}},
        {"14", "e13", "e33", {}},
        {"13", "e12", "e32", {}},
        {"7", "e13", "e23", {}},
        {"e6", "e22", "e32", {"h6", "i6", "j6"}},
        {"e1", "e11", "e12", {"f1"}},
        {"j1", "e11", "e13", {}},
        {"i5", "e12", "e22", {}},
        {"12", "e21", "e23", {}},
        {"g8", "e32", "e33", {"f8"}},
        {"10", "e22", "e31", {}},
        {"g5", "e31", "e22", {"h5"}},
        {"g4", "e13", "e31", {"h4", "j2"}},
        {"e4", "e31", "e13", {"f4", "i2"}},
        {"i3", "e13", "e21", {}},
        {"8", "e21", "e13", {}},
        {"g2", "e21", "e12", {"h2", "i4"}},
        {"e2", "e12", "e21", {"f2", "j4"}},
        {"9", "e22", "e13", {}},
        {"e5", "e13", "e22", {"f5"}},
        {"e7", "e32", "e23", {"h7", "i7", "j7"}},
        {"g7", "e23", "e32", {"f7"}},
        {"2", "e13", "e32", {}},
        {"3", "e32", "e13", {}},
        {"5", "e23", "e31", {}},
        {"4", "e31", "e23", {}},
        {"11", "e31", "e32", {}},
        {"6", "e12", "e31", {}},
        {"j3", "e31", "e12", {}},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) {
        Edge e = ed(r.id, r.src, r.dst, true);
        for (const char* a : r.aliases) e.aliases.push_back(a);
        es.push_back(e);
    }
    return make_graph(vs, es);
}

}  // namespace

ColoredGraph build_sq(int n) {
    if (n < 2) throw graph_error("build_sq: n must be >= 2");
    if (n == 2) return sq2_fixture();
    if (n == 3) return sq3_fixture();
    return sq_grown(n);
}

ColoredGraph orient_sq(int n) {
    if (n < 3) throw graph_error("orient_sq: n must be >= 3");
    if (n == 3) return sq3d_fixture();
    if (n == 4) return sq4d_fixture();
    return sqd_grown(n);
}

ColoredGraph gpi_graph(int n) {
    if (n == 2) return gpi2_fixture();
    if (n == 3) return gpi3_fixture();
    throw graph_error("gpi_graph: only n = 2 and n = 3 are available");
}

ColoredGraph commutant_sq3d() {
    std::vector<Vertex> vs = {vx("v1", Color::blue),  vx("v2", Color::blue),
                              vx("v3", Color::red),   vx("v4", Color::green),
                              vx("v5", Color::red),   vx("v6", Color::green),
                              vx("v7", Color::green), vx("v8", Color::red)};
    // the figure numbers its arrows c1..c9 skipping c3
    static const EdgeRow rows[] = {
        {"c1", "v3", "v5"}, {"c2", "v4", "v6"}, {"c4", "v5", "v8"},
        {"c5", "v6", "v7"}, {"c6", "v7", "v4"}, {"c7", "v8", "v3"},
        {"c8", "v2", "v2"}, {"c9", "v1", "v1"},
    };
    std::vector<Edge> es;
    for (const auto& r : rows) es.push_back(ed(r.id, r.src, r.dst, true));
    return make_graph(vs, es);
}

std::vector<std::vector<int>> adjacency(const ColoredGraph& g,
                                        const VertexOrdering& ord) {
    if (ord.size() != g.vertices.size())
        throw graph_error("adjacency: ordering does not match vertex count");
    std::map<std::string, int> pos;
    for (size_t i = 0; i < ord.size(); ++i) {
        if (!g.has_vertex(ord[i]))
            throw graph_error("adjacency: unknown vertex in ordering: " +
                              ord[i]);
        if (!pos.emplace(ord[i], static_cast<int>(i)).second)
            throw graph_error("adjacency: duplicate vertex in ordering: " +
                              ord[i]);
    }
    size_t n = ord.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const Edge& e : g.edges) {
        int a = pos.at(e.src), b = pos.at(e.dst);
        m[a][b] = 1;
        if (!e.directed) m[b][a] = 1;
    }
    return m;
}

std::optional<VertexOrdering> find_matrix_ordering(
    const ColoredGraph& g, const std::vector<std::vector<int>>& target) {
    size_t n = g.vertices.size();
    if (target.size() != n || n > 12) return std::nullopt;
    for (const auto& row : target)
        if (row.size() != n) return std::nullopt;

    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    std::map<std::string, int> idx;
    for (size_t i = 0; i < n; ++i) idx[g.vertices[i].id] = static_cast<int>(i);
    for (const Edge& e : g.edges) {
        adj[idx[e.src]][idx[e.dst]] = 1;
        if (!e.directed) adj[idx[e.dst]][idx[e.src]] = 1;
    }

    // out/in degree must match the target row/column sums exactly
    std::vector<int> vout(n, 0), vin(n, 0), tout(n, 0), tin(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            vout[i] += adj[i][j];
            vin[j] += adj[i][j];
            tout[i] += target[i][j];
            tin[j] += target[i][j];
        }

    std::vector<int> choice(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, size_t p) -> bool {
        if (p == n) return true;
        for (size_t v = 0; v < n; ++v) {
            if (used[v] || vout[v] != tout[p] || vin[v] != tin[p]) continue;
            bool ok = adj[v][v] == target[p][p];
            for (size_t q = 0; ok && q < p; ++q)
                ok = adj[v][choice[q]] == target[p][q] &&
                     adj[choice[q]][v] == target[q][p];
            if (!ok) continue;
            choice[p] = static_cast<int>(v);
            used[v] = true;
            if (self(self, p + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    VertexOrdering ord(n);
    for (size_t p = 0; p < n; ++p) ord[p] = g.vertices[choice[p]].id;
    return ord;
}

std::vector<std::string> validate_sq(const ColoredGraph& g, int n,
                                     bool directed) {
    std::vector<std::string> out;
    auto note = [&](const std::string& s) { out.push_back(s); };
    size_t want_v = 4 * static_cast<size_t>(n - 1);
    if (g.vertices.size() != want_v)
        note("vertex count " + std::to_string(g.vertices.size()) +
             " != " + std::to_string(want_v));
    if (directed) {
        size_t want_e = 26 * static_cast<size_t>(n - 2);
        if (g.edges.size() != want_e)
            note("edge count " + std::to_string(g.edges.size()) +
                 " != " + std::to_string(want_e));
        size_t want_t = static_cast<size_t>(n - 2);
        if (sinks(g).size() != want_t)
            note("sink count " + std::to_string(sinks(g).size()) +
                 " != " + std::to_string(want_t));
        if (sources(g).size() != want_t)
            note("source count " + std::to_string(sources(g).size()) +
                 " != " + std::to_string(want_t));
    }
    // the construction rules ask for n vertices of each color, which even
    // the figures do not meet (blue falls short); reported as advisory only
    std::map<Color, int> cc;
    for (const Vertex& v : g.vertices) cc[v.color]++;
    for (Color c : {Color::red, Color::green, Color::blue})
        if (cc[c] != n)
            note("advisory: " + std::string(color_name(c)) + " count " +
                 std::to_string(cc[c]) + " != " + std::to_string(n));
    return out;
}

// ==================== fixture data ====================

std::vector<std::vector<int>> a3d_printed() {
    static const char* rows[] = {"01111110", "00100101", "01000011",
                                 "00101101", "01010011", "00010011",
                                 "00001101", "00000000"};
    std::vector<std::vector<int>> m;
    for (const char* r : rows) {
        std::vector<int> row;
        for (const char* p = r; *p; ++p) row.push_back(*p - '0');
        m.push_back(row);
    }
    return m;
}

VertexOrdering a3d_printed_ordering() {
    return {"v1", "v3", "v4", "v5", "v6", "v7", "v8", "v2"};
}

std::vector<std::pair<std::string, std::string>> sq3d_letter_map() {
    return {{"u", "v4"}, {"v", "v2"}, {"k", "v3"}, {"w", "v1"},
            {"l", "v8"}, {"m", "v5"}, {"n", "v7"}, {"o", "v6"}};
}

std::vector<std::vector<std::string>> sq3d_listed_paths() {
    static const char* rows[] = {
        "w o l n m u k v", "w m n l o k u v", "w k u l o m n v",
        "w u k n m o l v", "w n m u l o k v", "w n m o k u l v",
        "w k n m u l o v", "w l n m o k u v", "w o k n m u l v",
        "w u l n m o k v", "w l o k n m u v", "w k u l n m o v",
        "w u l o k n m v", "w o k u l n m v", "w m u l o k n v",
        "w m o k u l n v", "w u l o k n m v", "w u k n l o m v",
        "w m u l o k n v", "w m u k n l o v", "w n m u l o k v",
        "w o m u k n l v", "w k n m u l o v", "w l o m u k n v",
        "w o k n m u l v", "w n l o m u k v", "w l o k n m u v",
        "w k n l o m u v",
    };
    std::vector<std::vector<std::string>> out;
    for (const char* r : rows) {
        std::vector<std::string> path;
        std::string cur;
        for (const char* p = r;; ++p) {
            if (*p == ' ' || *p == '\0') {
                path.push_back(cur);
                cur.clear();
                if (*p == '\0') break;
            } else {
                cur.push_back(*p);
            }
        }
        out.push_back(path);
    }
    return out;
}

std::vector<std::vector<std::string>> gpi3_listed_paths() {
    return {
        {"e11", "e12", "e21", "e31", "e13", "e22", "e32", "e23", "e33"},
        {"e11", "e12", "e21", "e31", "e13", "e22", "e23", "e32", "e33"},
        {"e11", "e21", "e12", "e13", "e31", "e22", "e23", "e32", "e33"},
        {"e11", "e21", "e12", "e13", "e31", "e22", "e32", "e23", "e33"},
        {"e11", "e31", "e13", "e21", "e12", "e22", "e32", "e23", "e33"},
        {"e11", "e13", "e31", "e12", "e21", "e22", "e32", "e23", "e33"},
    };
}

}  // namespace ckforge
