#include "ckforge/graph.hh"

#include <algorithm>
#include <sstream>

namespace ckforge {

const char* color_name(Color c) {
    switch (c) {
        case Color::none: return "none";
        case Color::red: return "red";
        case Color::green: return "green";
        case Color::blue: return "blue";
        case Color::black: return "black";
    }
    return "none";
}

Color color_from_name(const std::string& s) {
    if (s == "none" || s.empty()) return Color::none;
    if (s == "red") return Color::red;
    if (s == "green") return Color::green;
    if (s == "blue") return Color::blue;
    if (s == "black") return Color::black;
    throw graph_error("unknown color: " + s);
}

std::pair<std::string, std::string> Edge::endpoints_canonical() const {
    if (directed || src <= dst) return {src, dst};
    return {dst, src};
}

bool ColoredGraph::has_vertex(const std::string& id) const {
    return vertex_index(id) >= 0;
}

int ColoredGraph::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

const Vertex* ColoredGraph::find_vertex(const std::string& id) const {
    int i = vertex_index(id);
    return i < 0 ? nullptr : &vertices[i];
}

const Edge* ColoredGraph::find_edge_by_label(const std::string& label) const {
    for (const Edge& e : edges) {
        if (e.id == label) return &e;
        for (const std::string& a : e.aliases)
            if (a == label) return &e;
    }
    return nullptr;
}

std::vector<std::vector<int>> ColoredGraph::adjacency_counts() const {
    size_t n = vertices.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const Edge& e : edges) {
        int i = vertex_index(e.src), j = vertex_index(e.dst);
        m[i][j] += 1;
        if (!e.directed && i != j) m[j][i] += 1;
    }
    return m;
}

ColoredGraph make_graph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    std::set<std::string> seen;
    for (const Vertex& v : vertices) {
        if (!seen.insert(v.id).second)
            throw graph_error("duplicate vertex id: " + v.id);
    }
    for (const Edge& e : edges) {
        if (!seen.count(e.src)) throw graph_error("unknown endpoint: " + e.src);
        if (!seen.count(e.dst)) throw graph_error("unknown endpoint: " + e.dst);
    }
    ColoredGraph g;
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    return g;
}

bool is_null_graph(const ColoredGraph& g) {
    if (!g.edges.empty()) return false;
    for (const Vertex& v : g.vertices)
        if (v.color != Color::black) return false;
    return true;
}

namespace {

// edge identity for set-union semantics: endpoints (canonical), color, direction
struct EdgeKey {
    std::string a, b;
    Color color;
    bool directed;
    bool operator<(const EdgeKey& o) const {
        return std::tie(a, b, color, directed) <
               std::tie(o.a, o.b, o.color, o.directed);
    }
    bool operator==(const EdgeKey& o) const {
        return std::tie(a, b, color, directed) ==
               std::tie(o.a, o.b, o.color, o.directed);
    }
};

EdgeKey key_of(const Edge& e) {
    auto [a, b] = e.endpoints_canonical();
    return {a, b, e.color, e.directed};
}

void union_vertices(const ColoredGraph& g, std::vector<Vertex>& out,
                    std::set<std::string>& have) {
    for (const Vertex& v : g.vertices) {
        if (have.insert(v.id).second) {
            out.push_back(v);
        } else {
            for (const Vertex& w : out) {
                if (w.id == v.id && w.color != v.color)
                    throw graph_error("vertex " + v.id +
                                      " appears with two colors");
            }
        }
    }
}

void union_edges(const ColoredGraph& g, std::vector<Edge>& out,
                 std::set<EdgeKey>& have) {
    for (const Edge& e : g.edges)
        if (have.insert(key_of(e)).second) out.push_back(e);
}

bool monochromatic(const ColoredGraph& g, const Edge& e) {
    const Vertex* a = g.find_vertex(e.src);
    const Vertex* b = g.find_vertex(e.dst);
    if (!a || !b || a->color != b->color) return false;
    return a->color == Color::red || a->color == Color::green ||
           a->color == Color::blue;
}

}  // namespace

ColoredGraph overlay(const ColoredGraph& g1, const ColoredGraph& g2) {
    ColoredGraph out;
    std::set<std::string> have_v;
    union_vertices(g1, out.vertices, have_v);
    union_vertices(g2, out.vertices, have_v);
    std::set<EdgeKey> have_e;
    union_edges(g1, out.edges, have_e);
    union_edges(g2, out.edges, have_e);
    return out;
}

ColoredGraph connect(const ColoredGraph& g1, const ColoredGraph& g2, bool cross) {
    // a null left operand acts as identity: the result is the right operand as-is
    if (is_null_graph(g1)) return g2;
    ColoredGraph merged = overlay(g1, g2);
    if (cross) {
        std::set<EdgeKey> have;
        for (const Edge& e : merged.edges) have.insert(key_of(e));
        for (const Vertex& a : g1.vertices)
            for (const Vertex& b : g2.vertices) {
                if (a.id == b.id) continue;
                Edge e{a.id, b.id, Color::none, true, "", {}};
                if (have.insert(key_of(e)).second) merged.edges.push_back(e);
            }
    }
    ColoredGraph out;
    out.vertices = merged.vertices;
    for (const Edge& e : merged.edges)
        if (!monochromatic(merged, e)) out.edges.push_back(e);
    return out;
}

ColoredGraph normalize(const ColoredGraph& g) {
    std::set<std::string> touched;
    for (const Edge& e : g.edges) {
        touched.insert(e.src);
        touched.insert(e.dst);
    }
    ColoredGraph out;
    for (const Vertex& v : g.vertices)
        if (touched.count(v.id)) out.vertices.push_back(v);
    out.edges = g.edges;
    return out;
}

ColoredGraph underlying_undirected(const ColoredGraph& g) {
    ColoredGraph out;
    out.vertices = g.vertices;
    std::set<std::pair<std::string, std::string>> have;
    for (const Edge& e : g.edges) {
        auto a = std::min(e.src, e.dst);
        auto b = std::max(e.src, e.dst);
        if (have.insert({a, b}).second) {
            Edge u = e;
            u.src = a;
            u.dst = b;
            u.directed = false;
            out.edges.push_back(u);
        }
    }
    return out;
}

std::map<std::string, Degree> degrees(const ColoredGraph& g) {
    std::map<std::string, Degree> d;
    for (const Vertex& v : g.vertices) d[v.id];
    for (const Edge& e : g.edges) {
        if (e.directed) {
            d[e.src].out += 1;
            d[e.dst].in += 1;
        } else {
            d[e.src].out += 1;
            d[e.src].in += 1;
            if (e.dst != e.src) {
                d[e.dst].out += 1;
                d[e.dst].in += 1;
            }
        }
    }
    return d;
}

std::set<std::string> sources(const ColoredGraph& g) {
    std::set<std::string> out;
    for (auto& [id, d] : degrees(g))
        if (d.in == 0) out.insert(id);
    return out;
}

std::set<std::string> sinks(const ColoredGraph& g) {
    std::set<std::string> out;
    for (auto& [id, d] : degrees(g))
        if (d.out == 0) out.insert(id);
    return out;
}

bool graph_equal(const ColoredGraph& a, const ColoredGraph& b) {
    std::map<std::string, std::pair<Color, Layer>> va, vb;
    for (const Vertex& v : a.vertices) va[v.id] = {v.color, v.layer};
    for (const Vertex& v : b.vertices) vb[v.id] = {v.color, v.layer};
    if (va != vb) return false;
    std::multiset<EdgeKey> ea, eb;
    for (const Edge& e : a.edges) ea.insert(key_of(e));
    for (const Edge& e : b.edges) eb.insert(key_of(e));
    return ea == eb;
}

std::string to_dot(const ColoredGraph& g, const std::string& name) {
    bool any_directed = false;
    for (const Edge& e : g.edges) any_directed |= e.directed;
    std::ostringstream os;
    os << (any_directed ? "digraph " : "graph ") << name << " {\n";
    for (const Vertex& v : g.vertices) {
        os << "  \"" << v.id << "\"";
        if (v.color != Color::none)
            os << " [color=" << color_name(v.color) << "]";
        os << ";\n";
    }
    const char* arrow = any_directed ? " -> " : " -- ";
    for (const Edge& e : g.edges) {
        os << "  \"" << e.src << "\"" << arrow << "\"" << e.dst << "\"";
        std::string attrs;
        if (!e.id.empty()) attrs += "label=\"" + e.id + "\"";
        if (e.color != Color::none) {
            if (!attrs.empty()) attrs += ", ";
            attrs += std::string("color=") + color_name(e.color);
        }
        if (any_directed && !e.directed) {
            if (!attrs.empty()) attrs += ", ";
            attrs += "dir=none";
        }
        if (!attrs.empty()) os << " [" << attrs << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace ckforge
