#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "ckforge/graph.hh"
#include "doctest.h"

using namespace ckforge;

namespace {

Edge de(const std::string& src, const std::string& dst,
        const std::string& id = "") {
    Edge e;
    e.src = src;
    e.dst = dst;
    e.id = id;
    return e;
}

// small random colored digraphs for the algebra properties
ColoredGraph random_graph(std::mt19937& rng) {
    static const Color colors[] = {Color::none, Color::red, Color::green,
                                   Color::blue, Color::black};
    std::uniform_int_distribution<int> nv(1, 6), pick_color(0, 4),
        coin(0, 1);
    int n = nv(rng);
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) {
        // ids drawn from a shared pool so overlays actually collide
        std::string id = "q" + std::to_string(rng() % 8);
        bool dup = false;
        for (const Vertex& v : vs) dup |= v.id == id;
        if (dup) continue;
        vs.push_back({id, colors[pick_color(rng)], Layer::none});
    }
    // key-unique edges: overlay treats identical endpoints+color+direction
    // as the same edge, so duplicates would break the identity laws
    std::vector<Edge> es;
    std::set<std::tuple<std::string, std::string, int, bool>> have;
    std::uniform_int_distribution<int> ne(0, 8);
    int m = ne(rng);
    for (int i = 0; i < m && !vs.empty(); ++i) {
        Edge e;
        e.src = vs[rng() % vs.size()].id;
        e.dst = vs[rng() % vs.size()].id;
        e.color = colors[pick_color(rng)];
        e.directed = coin(rng) == 1;
        auto [a, b] = e.endpoints_canonical();
        if (have.insert({a, b, static_cast<int>(e.color), e.directed}).second)
            es.push_back(e);
    }
    return make_graph(vs, es);
}

// vertex colors consistent across two random graphs: repaint by id hash
void harmonize(ColoredGraph& g) {
    static const Color colors[] = {Color::none, Color::red, Color::green,
                                   Color::blue, Color::black};
    for (Vertex& v : g.vertices)
        v.color = colors[std::hash<std::string>{}(v.id) % 5];
}

ColoredGraph seeded(unsigned seed) {
    std::mt19937 rng(seed);
    ColoredGraph g = random_graph(rng);
    harmonize(g);
    return g;
}

}  // namespace

TEST_CASE("make_graph validates vertex ids and endpoints") {
    std::vector<Vertex> vs = {{"a", Color::red, Layer::none},
                              {"b", Color::blue, Layer::none}};
    CHECK_NOTHROW(make_graph(vs, {de("a", "b")}));
    CHECK_THROWS_AS(make_graph(vs, {de("a", "c")}), graph_error);
    CHECK_THROWS_AS(make_graph(vs, {de("c", "b")}), graph_error);
    std::vector<Vertex> dup = {{"a", Color::red, Layer::none},
                               {"a", Color::red, Layer::none}};
    CHECK_THROWS_AS(make_graph(dup, {}), graph_error);
}

TEST_CASE("null graph: no edges and only black vertices") {
    CHECK(is_null_graph(make_graph({}, {})));
    CHECK(is_null_graph(make_graph({{"a", Color::black, Layer::none}}, {})));
    CHECK_FALSE(is_null_graph(make_graph({{"a", Color::red, Layer::none}}, {})));
    ColoredGraph g = make_graph({{"a", Color::black, Layer::none}},
                                {de("a", "a")});
    CHECK_FALSE(is_null_graph(g));
}

TEST_CASE("overlay is commutative and associative with empty identity") {
    ColoredGraph empty;
    for (unsigned seed = 0; seed < 1000; ++seed) {
        ColoredGraph a = seeded(3 * seed), b = seeded(3 * seed + 1),
                     c = seeded(3 * seed + 2);
        CHECK(graph_equal(overlay(a, b), overlay(b, a)));
        CHECK(graph_equal(overlay(overlay(a, b), c), overlay(a, overlay(b, c))));
        CHECK(graph_equal(overlay(a, empty), a));
        CHECK(graph_equal(overlay(empty, a), a));
        CHECK(graph_equal(overlay(a, a), a));
    }
}

TEST_CASE("overlay rejects one id under two colors") {
    ColoredGraph a = make_graph({{"x", Color::red, Layer::none}}, {});
    ColoredGraph b = make_graph({{"x", Color::blue, Layer::none}}, {});
    CHECK_THROWS_AS(overlay(a, b), graph_error);
}

TEST_CASE("connect drops same-colored red/green/blue edges, keeps black") {
    for (unsigned seed = 0; seed < 300; ++seed) {
        ColoredGraph a = seeded(7000 + 2 * seed), b = seeded(7001 + 2 * seed);
        ColoredGraph out = connect(a, b);
        for (const Edge& e : out.edges) {
            const Vertex* p = out.find_vertex(e.src);
            const Vertex* q = out.find_vertex(e.dst);
            REQUIRE(p != nullptr);
            REQUIRE(q != nullptr);
            if (p->color == q->color)
                CHECK((p->color == Color::none || p->color == Color::black));
        }
    }
    // black-black edges survive the filter
    ColoredGraph bb = make_graph({{"a", Color::black, Layer::none},
                                  {"b", Color::black, Layer::none}},
                                 {de("a", "b")});
    ColoredGraph other = make_graph({{"c", Color::red, Layer::none}}, {});
    CHECK(connect(bb, other).edges.size() == 1);
}

TEST_CASE("connect with a null left operand returns the right operand as-is") {
    ColoredGraph null_g =
        make_graph({{"z", Color::black, Layer::none}}, {});
    // right operand deliberately has a removable monochromatic edge and an
    // isolated vertex: identity must not touch either
    ColoredGraph g = make_graph({{"a", Color::red, Layer::none},
                                 {"b", Color::red, Layer::none},
                                 {"c", Color::blue, Layer::none}},
                                {de("a", "b")});
    ColoredGraph out = connect(null_g, g);
    CHECK(to_dot(out) == to_dot(g));
    CHECK(connect(ColoredGraph{}, g).edges.size() == 1);
}

TEST_CASE("connect with a null right operand only applies the filter") {
    ColoredGraph blue2 = make_graph({{"a", Color::blue, Layer::none},
                                     {"b", Color::blue, Layer::none}},
                                    {de("a", "b")});
    ColoredGraph out = connect(blue2, ColoredGraph{});
    CHECK(out.vertices.size() == 2);
    CHECK(out.edges.empty());
    // with nothing to filter the right identity holds on the nose
    ColoredGraph mixed = make_graph({{"a", Color::red, Layer::none},
                                     {"b", Color::blue, Layer::none}},
                                    {de("a", "b")});
    CHECK(graph_equal(connect(mixed, ColoredGraph{}), mixed));
}

TEST_CASE("connect cross mode inserts directed cross edges before filtering") {
    ColoredGraph a = make_graph({{"a", Color::red, Layer::none}}, {});
    ColoredGraph b = make_graph({{"b", Color::blue, Layer::none},
                                 {"c", Color::red, Layer::none}},
                                {});
    ColoredGraph out = connect(a, b, true);
    REQUIRE(out.edges.size() == 1);  // a->c is red/red and gets dropped
    CHECK(out.edges[0].src == "a");
    CHECK(out.edges[0].dst == "b");
    CHECK(out.edges[0].directed);
    // without cross mode nothing connects the two sides
    CHECK(connect(a, b).edges.empty());
}

TEST_CASE("normalize drops isolated vertices and is idempotent") {
    ColoredGraph g = make_graph({{"a", Color::red, Layer::none},
                                 {"b", Color::blue, Layer::none},
                                 {"c", Color::green, Layer::none}},
                                {de("a", "b")});
    ColoredGraph n1 = normalize(g);
    CHECK(n1.vertices.size() == 2);
    CHECK(graph_equal(normalize(n1), n1));
    for (unsigned seed = 0; seed < 200; ++seed) {
        ColoredGraph r = seeded(90000 + seed);
        CHECK(graph_equal(normalize(normalize(r)), normalize(r)));
    }
}

TEST_CASE("underlying_undirected collapses direction and duplicates") {
    ColoredGraph g = make_graph({{"a", Color::none, Layer::none},
                                 {"b", Color::none, Layer::none}},
                                {de("a", "b"), de("b", "a")});
    ColoredGraph u = underlying_undirected(g);
    CHECK(u.edges.size() == 1);
    CHECK_FALSE(u.edges[0].directed);
}

TEST_CASE("degrees, sources and sinks on a small digraph") {
    ColoredGraph g = make_graph({{"a", Color::none, Layer::none},
                                 {"b", Color::none, Layer::none},
                                 {"c", Color::none, Layer::none}},
                                {de("a", "b"), de("b", "c")});
    auto d = degrees(g);
    CHECK(d["a"].out == 1);
    CHECK(d["a"].in == 0);
    CHECK(d["b"].in == 1);
    CHECK(d["b"].out == 1);
    CHECK(sources(g) == std::set<std::string>{"a"});
    CHECK(sinks(g) == std::set<std::string>{"c"});
}

TEST_CASE("graph_equal ignores storage order") {
    ColoredGraph a = make_graph({{"x", Color::red, Layer::none},
                                 {"y", Color::blue, Layer::none}},
                                {de("x", "y")});
    ColoredGraph b = make_graph({{"y", Color::blue, Layer::none},
                                 {"x", Color::red, Layer::none}},
                                {de("x", "y")});
    CHECK(graph_equal(a, b));
}

TEST_CASE("to_dot output is deterministic and readable") {
    ColoredGraph g = make_graph({{"a", Color::red, Layer::none},
                                 {"b", Color::blue, Layer::none}},
                                {de("a", "b", "e1")});
    std::string s = to_dot(g);
    CHECK(s == to_dot(g));
    CHECK(s.find("digraph") != std::string::npos);
    CHECK(s.find("label=\"e1\"") != std::string::npos);
    CHECK(s.find("color=red") != std::string::npos);
}

TEST_CASE("color names round-trip") {
    for (Color c : {Color::none, Color::red, Color::green, Color::blue,
                    Color::black})
        CHECK(color_from_name(color_name(c)) == c);
    CHECK_THROWS_AS(color_from_name("mauve"), graph_error);
}
