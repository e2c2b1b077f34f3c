#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckforge {

enum class Color { none, red, green, blue, black };

const char* color_name(Color c);
Color color_from_name(const std::string& s);  // throws on unknown name

enum class Layer { none, outer, inner };

struct Vertex {
    std::string id;
    Color color = Color::none;
    Layer layer = Layer::none;
};

struct Edge {
    std::string src;
    std::string dst;
    Color color = Color::none;
    bool directed = true;
    std::string id;                      // optional label, "" if unnamed
    std::vector<std::string> aliases;    // alternative labels for the same edge

    // undirected edges compare with canonical endpoint order
    std::pair<std::string, std::string> endpoints_canonical() const;
};

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// colored multigraph; vertices and edges keep insertion order
struct ColoredGraph {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    bool has_vertex(const std::string& id) const;
    int vertex_index(const std::string& id) const;  // -1 if absent
    const Vertex* find_vertex(const std::string& id) const;
    const Edge* find_edge_by_label(const std::string& label) const;  // id or alias

    // (i,j) entry counts of the directed adjacency under insertion order
    std::vector<std::vector<int>> adjacency_counts() const;
};

// validated constructor: rejects duplicate vertex ids and dangling endpoints
ColoredGraph make_graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

// the null graph: no edges, every vertex black (the empty graph qualifies)
bool is_null_graph(const ColoredGraph& g);

// vertex-set union by id, edge-set union; same id with two colors is an error
ColoredGraph overlay(const ColoredGraph& g1, const ColoredGraph& g2);

// union, then drop every edge whose endpoints share a color in {red, green, blue};
// a null left operand returns the right operand unchanged.
// cross=true additionally inserts all directed edges g1-vertices -> g2-vertices
// before the filter.
ColoredGraph connect(const ColoredGraph& g1, const ColoredGraph& g2, bool cross = false);

// drop vertices of total degree zero
ColoredGraph normalize(const ColoredGraph& g);

// forget directions; parallel/oppositely-directed duplicates collapse to one edge
ColoredGraph underlying_undirected(const ColoredGraph& g);

std::set<std::string> sources(const ColoredGraph& g);  // in-degree 0
std::set<std::string> sinks(const ColoredGraph& g);    // out-degree 0

struct Degree {
    int in = 0;
    int out = 0;
};
std::map<std::string, Degree> degrees(const ColoredGraph& g);

// structural equality: same vertex set (id,color,layer) and same edge multiset
bool graph_equal(const ColoredGraph& a, const ColoredGraph& b);

// DOT rendering with color attributes; deterministic output
std::string to_dot(const ColoredGraph& g, const std::string& name = "g");

}  // namespace ckforge
