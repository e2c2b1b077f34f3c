#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ckforge/families.hh"
#include "doctest.h"

using namespace ckforge;

namespace {

bool has_directed_edge(const ColoredGraph& g, const std::string& a,
                       const std::string& b) {
    for (const Edge& e : g.edges)
        if (e.directed && e.src == a && e.dst == b) return true;
    return false;
}

bool valid_directed_path(const ColoredGraph& g,
                         const std::vector<std::string>& path) {
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!has_directed_edge(g, path[i], path[i + 1])) return false;
    return true;
}

std::vector<std::string> hard_violations(const std::vector<std::string>& v) {
    std::vector<std::string> out;
    for (const std::string& s : v)
        if (s.rfind("advisory:", 0) != 0) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("undirected family fixtures have the figure counts") {
    ColoredGraph s2 = build_sq(2);
    CHECK(s2.vertices.size() == 4);
    CHECK(s2.edges.size() == 5);
    CHECK(s2.find_vertex("u")->color == Color::red);
    CHECK(s2.find_vertex("v")->color == Color::blue);
    CHECK(s2.find_vertex("k")->color == Color::green);
    CHECK(s2.find_vertex("w")->color == Color::blue);

    ColoredGraph s3 = build_sq(3);
    CHECK(s3.vertices.size() == 8);
    CHECK(s3.edges.size() == 11);
    // border vertices come in a red pair and a green pair
    CHECK(s3.find_vertex("l")->color == Color::red);
    CHECK(s3.find_vertex("m")->color == Color::red);
    CHECK(s3.find_vertex("n")->color == Color::green);
    CHECK(s3.find_vertex("o")->color == Color::green);
    std::multiset<int> degs;
    for (auto& [id, d] : degrees(s3)) degs.insert(d.in);  // undirected: in==out
    CHECK(degs == std::multiset<int>{2, 2, 2, 2, 3, 3, 4, 4});

    CHECK_THROWS_AS(build_sq(1), graph_error);
}

TEST_CASE("grown undirected family keeps the vertex-count rule") {
    for (int n = 4; n <= 7; ++n) {
        ColoredGraph g = build_sq(n);
        CHECK(g.vertices.size() == 4u * (n - 1));
        CHECK(g.edges.size() == 11u + 12u * (n - 3));
    }
}

TEST_CASE("directed fixture n=3 matches the figure") {
    ColoredGraph g = orient_sq(3);
    CHECK(g.vertices.size() == 8);
    CHECK(g.edges.size() == 26);
    CHECK(sources(g) == std::set<std::string>{"v1"});
    CHECK(sinks(g) == std::set<std::string>{"v2"});
    CHECK(underlying_undirected(g).edges.size() == 21);
    CHECK(hard_violations(validate_sq(g, 3, true)).empty());
    // blue endpoints, red/green middle
    CHECK(g.find_vertex("v1")->color == Color::blue);
    CHECK(g.find_vertex("v2")->color == Color::blue);
    int reds = 0, greens = 0;
    for (const Vertex& v : g.vertices) {
        reds += v.color == Color::red;
        greens += v.color == Color::green;
    }
    CHECK(reds == 3);
    CHECK(greens == 3);
}

TEST_CASE("directed fixture n=4 matches the figure") {
    ColoredGraph g = orient_sq(4);
    CHECK(g.vertices.size() == 12);
    CHECK(g.edges.size() == 52);
    CHECK(sources(g) == std::set<std::string>{"v1", "v2"});
    CHECK(sinks(g) == std::set<std::string>{"v3", "v4"});
    CHECK(underlying_undirected(g).edges.size() == 46);
    CHECK(hard_violations(validate_sq(g, 4, true)).empty());
}

TEST_CASE("grown directed family reports its distance from the stated counts") {
    ColoredGraph g = orient_sq(5);
    CHECK(g.vertices.size() == 16);  // 4(n-1) holds
    CHECK(sources(g).size() == 3);   // n-2 holds
    CHECK(sinks(g).size() == 3);
    // the stated edge count 26(n-2) is not met by the generated pattern;
    // the validator must say so rather than hide it
    auto hard = hard_violations(validate_sq(g, 5, true));
    REQUIRE(hard.size() == 1);
    CHECK(hard[0].find("edge count") != std::string::npos);
    CHECK_THROWS_AS(orient_sq(2), graph_error);
}

TEST_CASE("grid digraph n=2 matches the listed edge set") {
    ColoredGraph g = gpi_graph(2);
    CHECK(g.vertices.size() == 4);
    CHECK(g.edges.size() == 6);
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"u", "v"}, {"u", "w"}, {"v", "k"}, {"w", "k"}, {"v", "w"},
             {"w", "v"}})
        CHECK(has_directed_edge(g, a, b));
    CHECK(sources(g) == std::set<std::string>{"u"});
    CHECK(sinks(g) == std::set<std::string>{"k"});
    CHECK_THROWS_AS(gpi_graph(4), graph_error);
}

TEST_CASE("grid digraph n=3: counts, endpoints, labels") {
    ColoredGraph g = gpi_graph(3);
    CHECK(g.vertices.size() == 9);
    CHECK(g.edges.size() == 36);
    CHECK(sources(g) == std::set<std::string>{"e11"});
    CHECK(sinks(g) == std::set<std::string>{"e33"});
    // all fourteen numeral labels resolve
    for (int i = 1; i <= 14; ++i)
        CHECK(g.find_edge_by_label(std::to_string(i)) != nullptr);
    // multi-labeled edges are stored once and reachable through any alias
    const Edge* byid = g.find_edge_by_label("g6");
    const Edge* byalias = g.find_edge_by_label("f6");
    REQUIRE(byid != nullptr);
    CHECK(byid == byalias);
}

TEST_CASE("grid digraph n=3 realizes each listed path label-by-label") {
    ColoredGraph g = gpi_graph(3);
    auto paths = gpi3_listed_paths();
    REQUIRE(paths.size() == 6);
    const std::string prefixes = "efghij";
    for (size_t p = 0; p < paths.size(); ++p) {
        const auto& path = paths[p];
        REQUIRE(path.size() == 9);
        // Hamiltonian: covers every vertex once
        std::set<std::string> seen(path.begin(), path.end());
        CHECK(seen.size() == 9);
        CHECK(valid_directed_path(g, path));
        // the k-th step of the p-th path is labeled <letter><k>
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            std::string label = prefixes[p] + std::to_string(k + 1);
            const Edge* e = g.find_edge_by_label(label);
            REQUIRE_MESSAGE(e != nullptr, "missing label ", label);
            CHECK(e->src == path[k]);
            CHECK(e->dst == path[k + 1]);
        }
    }
    // the six paths are pairwise distinct
    std::set<std::vector<std::string>> uniq(paths.begin(), paths.end());
    CHECK(uniq.size() == 6);
}

TEST_CASE("commuting-candidate graph is a permutation graph") {
    ColoredGraph g = commutant_sq3d();
    CHECK(g.vertices.size() == 8);
    CHECK(g.edges.size() == 8);
    for (auto& [id, d] : degrees(g)) {
        CHECK(d.in == 1);
        CHECK(d.out == 1);
    }
    // cycle structure: two 3-cycles and two fixed points
    std::map<std::string, std::string> next;
    for (const Edge& e : g.edges) next[e.src] = e.dst;
    auto cycle_len = [&](const std::string& start) {
        int len = 0;
        std::string cur = start;
        do {
            cur = next[cur];
            ++len;
        } while (cur != start);
        return len;
    };
    CHECK(cycle_len("v1") == 1);
    CHECK(cycle_len("v2") == 1);
    CHECK(cycle_len("v3") == 3);
    CHECK(cycle_len("v4") == 3);
    std::set<std::string> c1 = {"v3", next["v3"], next[next["v3"]]};
    CHECK(c1 == std::set<std::string>{"v3", "v5", "v8"});
    std::set<std::string> c2 = {"v4", next["v4"], next[next["v4"]]};
    CHECK(c2 == std::set<std::string>{"v4", "v6", "v7"});
}

TEST_CASE("adjacency under the pinned order reproduces the printed matrix") {
    ColoredGraph g = orient_sq(3);
    auto m = adjacency(g, a3d_printed_ordering());
    CHECK(m == a3d_printed());
    // out-degree multiset read off the rows
    std::multiset<int> sums;
    for (const auto& row : m) {
        int s = 0;
        for (int x : row) s += x;
        sums.insert(s);
    }
    CHECK(sums == std::multiset<int>{0, 3, 3, 3, 3, 4, 4, 6});
}

TEST_CASE("adjacency rejects bad orderings") {
    ColoredGraph g = gpi_graph(2);
    CHECK_THROWS_AS(adjacency(g, {"u", "v"}), graph_error);
    CHECK_THROWS_AS(adjacency(g, {"u", "v", "k", "x"}), graph_error);
    CHECK_THROWS_AS(adjacency(g, {"u", "v", "k", "k"}), graph_error);
}

TEST_CASE("adjacency commutes with vertex relabeling") {
    ColoredGraph g = orient_sq(3);
    VertexOrdering base;
    for (const Vertex& v : g.vertices) base.push_back(v.id);
    auto a = adjacency(g, base);
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> perm(base.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
        std::shuffle(perm.begin(), perm.end(), rng);
        VertexOrdering ord;
        for (int p : perm) ord.push_back(base[p]);
        auto b = adjacency(g, ord);
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = 0; j < perm.size(); ++j)
                CHECK(b[i][j] == a[perm[i]][perm[j]]);
    }
}

TEST_CASE("ordering search recovers an order producing the printed matrix") {
    ColoredGraph g = orient_sq(3);
    auto found = find_matrix_ordering(g, a3d_printed());
    REQUIRE(found.has_value());
    CHECK(adjacency(g, *found) == a3d_printed());
    // and fails cleanly on an unreachable target
    auto zero = std::vector<std::vector<int>>(8, std::vector<int>(8, 0));
    CHECK_FALSE(find_matrix_ordering(g, zero).has_value());
}

TEST_CASE("connect on the small square fixture is a no-op") {
    // no two adjacent vertices share a color, so the filter removes nothing
    ColoredGraph s2 = build_sq(2);
    CHECK(graph_equal(connect(s2, s2), s2));
    ColoredGraph s3 = build_sq(3);
    CHECK(graph_equal(connect(s3, s3), s3));
}

TEST_CASE("family closure under overlay/connect is reported, not asserted") {
    // combining two family members rarely lands back on the stated counts;
    // the validator's job is to say how far off the result is
    ColoredGraph a = build_sq(3), b = build_sq(4);
    ColoredGraph over = overlay(a, b), conn = connect(a, b);
    auto vo = validate_sq(over, 4, false);
    auto vc = validate_sq(conn, 4, false);
    for (const std::string& s : vo) MESSAGE("overlay(sq3, sq4): ", s);
    for (const std::string& s : vc) MESSAGE("connect(sq3, sq4): ", s);
    CHECK(over.vertices.size() >= b.vertices.size());
}

TEST_CASE("letter path listing translates into valid directed paths") {
    ColoredGraph g = orient_sq(3);
    std::map<std::string, std::string> to_v;
    for (auto& [letter, v] : sq3d_letter_map()) to_v[letter] = v;
    REQUIRE(to_v.size() == 8);
    auto listed = sq3d_listed_paths();
    REQUIRE(listed.size() == 28);
    std::set<std::vector<std::string>> distinct;
    for (const auto& lp : listed) {
        REQUIRE(lp.size() == 8);
        std::vector<std::string> path;
        for (const std::string& letter : lp) path.push_back(to_v.at(letter));
        std::set<std::string> seen(path.begin(), path.end());
        CHECK(seen.size() == 8);  // Hamiltonian over the 8 vertices
        CHECK(valid_directed_path(g, path));
        CHECK(path.front() == "v1");
        CHECK(path.back() == "v2");
        distinct.insert(path);
    }
    // the listing repeats six entries verbatim
    CHECK(distinct.size() == 22);
}
