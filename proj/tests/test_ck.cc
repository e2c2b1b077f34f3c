#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "ckforge/ck.hh"
#include "ckforge/families.hh"

using namespace ckforge;

namespace {

// compact expected-verdict rows: p = pass, f = fail, d = defines, u = unresolved
struct RV {
    const char* subject;
    char v;
};

Verdict want(char c) {
    switch (c) {
        case 'p': return Verdict::pass;
        case 'f': return Verdict::fail;
        case 'd': return Verdict::defines;
        default: return Verdict::unresolved;
    }
}

void check_rows(const std::vector<RelationRow>& rows,
                const std::vector<RV>& expect) {
    REQUIRE(rows.size() == expect.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CAPTURE(i);
        CAPTURE(rows[i].subject);
        CAPTURE(rows[i].note);
        CHECK(rows[i].subject == expect[i].subject);
        CHECK(rows[i].verdict == want(expect[i].v));
    }
}

const RelationRow* find_row(const std::vector<RelationRow>& rows,
                            const std::string& subject) {
    for (const auto& r : rows)
        if (r.subject == subject) return &r;
    return nullptr;
}

SeriesOperator one_term(long long rs, long long ro, long long cs,
                        long long co) {
    return make_series({make_progression(rs, ro, cs, co)});
}

// directed cycle a1 -> a2 -> ... -> ak -> a1
ColoredGraph cycle_graph(const std::vector<std::string>& ids) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (const auto& id : ids) vs.push_back({id, Color::black, Layer::none});
    for (size_t i = 0; i < ids.size(); ++i) {
        Edge e;
        e.src = ids[i];
        e.dst = ids[(i + 1) % ids.size()];
        e.id = "c" + std::to_string(i + 1);
        es.push_back(e);
    }
    return make_graph(std::move(vs), std::move(es));
}

}  // namespace

// ==================== the 26-isometry family ====================

TEST_CASE("26-isometry family: full report on the oriented 3-square") {
    ColoredGraph g = orient_sq(3);
    CKReport rep = ck_verify_series(g, sq3d_series_family());

    CHECK(rep.diagnostics.empty());

    check_rows(rep.edge_rows,
               {{"e1", 'd'},  {"e2", 'd'},  {"e3", 'd'},  {"e4", 'd'},
                {"e5", 'd'},  {"e6", 'p'},  {"e7", 'f'},  {"e8", 'd'},
                {"e9", 'f'},  {"e10", 'd'}, {"e11", 'p'}, {"e12", 'p'},
                {"e13", 'f'}, {"e14", 'f'}, {"e15", 'p'}, {"e16", 'p'},
                {"e17", 'f'}, {"e18", 'f'}, {"e19", 'f'}, {"e20", 'f'},
                {"e21", 'f'}, {"e22", 'f'}, {"e23", 'p'}, {"e24", 'p'},
                {"e25", 'p'}, {"e26", 'p'}});

    // inferred projections, one residue class each
    CHECK(find_row(rep.edge_rows, "e1")->note == "P_v2 := {8j}");
    CHECK(find_row(rep.edge_rows, "e2")->note == "P_v6 := {8j-4}");
    CHECK(find_row(rep.edge_rows, "e3")->note == "P_v5 := {8j-3}");
    CHECK(find_row(rep.edge_rows, "e4")->note == "P_v7 := {8j-1}");
    CHECK(find_row(rep.edge_rows, "e5")->note == "P_v8 := {8j-2}");
    CHECK(find_row(rep.edge_rows, "e8")->note == "P_v3 := {8j-6}");
    CHECK(find_row(rep.edge_rows, "e10")->note == "P_v4 := {8j-5}");

    check_rows(rep.vertex_rows,
               {{"v1", 'd'}, {"v2", 'p'}, {"v3", 'f'}, {"v4", 'f'},
                {"v5", 'f'}, {"v6", 'f'}, {"v7", 'f'}, {"v8", 'f'}});

    // v1 is the unique source: its projection is defined by the union of
    // the six rows it emits
    CHECK(find_row(rep.vertex_rows, "v1")->note ==
          "P_v1 := {48j-47} u {48j-46} u {48j-45} u {48j-44} u {48j-43} u "
          "{48j-42}");
    CHECK(find_row(rep.vertex_rows, "v2")->note == "sink: nothing to emit");
    CHECK(find_row(rep.vertex_rows, "v3")->note ==
          "summands e6/e7 share index 2");
    CHECK(find_row(rep.vertex_rows, "v4")->note ==
          "summands e1/e9 share index 35");
    CHECK(find_row(rep.vertex_rows, "v5")->note ==
          "summands e10/e23 share index 44");
    CHECK(find_row(rep.vertex_rows, "v6")->note ==
          "summands e3/e8 share index 29");

    // matrix form: every checkable row fails for this family
    check_rows(rep.matrix_rows,
               {{"e2", 'f'},  {"e3", 'f'},  {"e4", 'f'},  {"e5", 'f'},
                {"e7", 'f'},  {"e8", 'f'},  {"e9", 'f'},  {"e10", 'f'},
                {"e13", 'f'}, {"e14", 'f'}, {"e15", 'f'}, {"e16", 'f'},
                {"e17", 'f'}, {"e18", 'f'}, {"e19", 'f'}, {"e20", 'f'},
                {"e21", 'f'}, {"e22", 'f'}, {"e25", 'f'}, {"e26", 'f'}});

    CHECK(rep.orthogonality.verdict == Verdict::fail);
    const std::string& note = rep.orthogonality.note;
    for (const char* frag :
         {"P_v1/P_v3 share index 2", "P_v1/P_v4 share index 3",
          "P_v1/P_v5 share index 5", "P_v1/P_v6 share index 4",
          "P_v1/P_v8 share index 6", "ran e1/e9 share index 35",
          "ran e1/e15 share index 3", "ran e1/e25 share index 19",
          "ran e2/e3 share index 29", "ran e2/e8 share index 29",
          "ran e3/e8 share index 29", "ran e4/e20 share index 6",
          "ran e5/e22 share index 55", "ran e6/e7 share index 2",
          "ran e6/e14 share index 2", "ran e7/e14 share index 2",
          "ran e8/e19 share index 5", "ran e8/e24 share index 77",
          "ran e10/e17 share index 92", "ran e10/e23 share index 44",
          "ran e11/e22 share index 87", "ran e21/e22 share index 23"}) {
        CAPTURE(frag);
        CHECK(note.find(frag) != std::string::npos);
    }
    // exactly those 22 collisions
    CHECK(std::count(note.begin(), note.end(), ';') == 21);

    CHECK_FALSE(rep.clean());
    // 26 + 8 + 20 + 1 verdicts
    CHECK(rep.verdict_vector().size() == 55);
}

// ==================== the printed 72-entry family ====================

TEST_CASE("printed family on the order-3 path graph: verdicts") {
    ColoredGraph g = gpi_graph(3);
    CKReport rep = ck_verify_series(g, gpi3_series_family());

    check_rows(rep.edge_rows,
               {{"j5", 'd'}, {"g6", 'd'}, {"e3", 'd'}, {"g1", 'd'},
                {"i8", 'd'}, {"1", 'p'},  {"i1", 'p'}, {"g3", 'd'},
                {"14", 'p'}, {"13", 'd'}, {"7", 'f'},  {"e6", 'p'},
                {"e1", 'd'}, {"j1", 'p'}, {"i5", 'p'}, {"12", 'f'},
                {"g8", 'p'}, {"10", 'u'}, {"g5", 'p'}, {"g4", 'p'},
                {"e4", 'p'}, {"i3", 'p'}, {"8", 'p'},  {"g2", 'p'},
                {"e2", 'p'}, {"9", 'p'},  {"e5", 'p'}, {"e7", 'f'},
                {"g7", 'f'}, {"2", 'p'},  {"3", 'p'},  {"5", 'p'},
                {"4", 'f'},  {"11", 'p'}, {"6", 'p'},  {"j3", 'p'}});

    CHECK(find_row(rep.edge_rows, "j5")->note == "P_e22 := {8j-4}");
    CHECK(find_row(rep.edge_rows, "g6")->note == "P_e23 := {8j-5}");
    CHECK(find_row(rep.edge_rows, "e3")->note == "P_e31 := {8j-2}");
    CHECK(find_row(rep.edge_rows, "g1")->note == "P_e21 := {8j-1}");
    CHECK(find_row(rep.edge_rows, "i8")->note == "P_e33 := {8j-7}");
    CHECK(find_row(rep.edge_rows, "g3")->note == "P_e13 := {8j-3}");
    CHECK(find_row(rep.edge_rows, "13")->note == "P_e32 := {8j-5}");
    CHECK(find_row(rep.edge_rows, "e1")->note == "P_e12 := {8j}");

    check_rows(rep.vertex_rows,
               {{"e11", 'd'}, {"e12", 'f'}, {"e13", 'p'}, {"e21", 'p'},
                {"e22", 'u'}, {"e23", 'f'}, {"e31", 'f'}, {"e32", 'p'},
                {"e33", 'p'}});
    // the four source rows of e11 merge into one residue class mod 8
    CHECK(find_row(rep.vertex_rows, "e11")->note == "P_e11 := {8j-7}");
    CHECK(find_row(rep.vertex_rows, "e22")->note ==
          "no assignment for edge 10");
    CHECK(find_row(rep.vertex_rows, "e33")->note == "sink: nothing to emit");

    check_rows(rep.matrix_rows,
               {{"j5", 'u'}, {"g6", 'f'}, {"e3", 'f'}, {"g1", 'p'},
                {"i1", 'f'}, {"g3", 'p'}, {"13", 'p'}, {"7", 'f'},
                {"e6", 'p'}, {"e1", 'f'}, {"j1", 'p'}, {"i5", 'u'},
                {"12", 'f'}, {"10", 'u'}, {"g5", 'u'}, {"g4", 'f'},
                {"e4", 'p'}, {"i3", 'p'}, {"8", 'p'},  {"g2", 'f'},
                {"e2", 'p'}, {"9", 'p'},  {"e5", 'u'}, {"e7", 'f'},
                {"g7", 'f'}, {"2", 'p'},  {"3", 'p'},  {"5", 'f'},
                {"4", 'f'},  {"11", 'p'}, {"6", 'f'},  {"j3", 'f'}});

    CHECK(rep.orthogonality.verdict == Verdict::fail);
    const std::string& note = rep.orthogonality.note;
    for (const char* frag :
         {"P_e11/P_e33 share index 1", "P_e23/P_e32 share index 3",
          "ran 14/13 share index 229", "ran 13/7 share index 29",
          "ran 13/g4 share index 109", "ran 13/i3 share index 69",
          "ran 13/e5 share index 149", "ran 13/2 share index 189",
          "ran 3/4 share index 19"}) {
        CAPTURE(frag);
        CHECK(note.find(frag) != std::string::npos);
    }
    CHECK(std::count(note.begin(), note.end(), ';') == 8);

    CHECK_FALSE(rep.clean());
}

TEST_CASE("printed family: diagnostics catch the published slips") {
    ColoredGraph g = gpi_graph(3);
    CKReport rep = ck_verify_series(g, gpi3_series_family());

    REQUIRE(rep.diagnostics.size() == 38);

    int benign = 0, conflict = 0, missing = 0, unknown = 0;
    for (const auto& d : rep.diagnostics) {
        switch (d.kind) {
            case Diagnostic::Kind::benign_duplicate: ++benign; break;
            case Diagnostic::Kind::conflict: ++conflict; break;
            case Diagnostic::Kind::missing_edge: ++missing; break;
            case Diagnostic::Kind::unknown_label: ++unknown; break;
        }
    }
    CHECK(benign == 36);
    CHECK(conflict == 1);
    CHECK(missing == 1);
    CHECK(unknown == 0);

    // alias spellings resolve onto their edges in print order
    static const struct {
        const char* label;
        const char* edge;
    } dups[] = {
        {"f1", "e1"}, {"h1", "g1"}, {"h2", "g2"}, {"i4", "g2"}, {"f2", "e2"},
        {"j4", "e2"}, {"f3", "e3"}, {"h3", "g3"}, {"i4", "g2"}, {"j4", "e2"},
        {"g4", "g4"}, {"h4", "g4"}, {"j2", "g4"}, {"e4", "e4"}, {"f4", "e4"},
        {"i2", "e4"}, {"f5", "e5"}, {"h5", "g5"}, {"h6", "e6"}, {"i6", "e6"},
        {"j6", "e6"}, {"f6", "g6"}, {"i6", "e6"}, {"j6", "e6"}, {"h7", "e7"},
        {"i7", "e7"}, {"j7", "e7"}, {"f7", "g7"}, {"i7", "e7"}, {"j7", "e7"},
        {"h8", "i8"}, {"i8", "i8"}, {"j8", "i8"}, {"f8", "g8"}, {"i8", "i8"},
        {"j8", "i8"},
    };
    size_t di = 0;
    for (const auto& d : rep.diagnostics) {
        if (d.kind != Diagnostic::Kind::benign_duplicate) continue;
        REQUIRE(di < 36);
        CAPTURE(di);
        CHECK(d.label == dups[di].label);
        CHECK(d.edge == dups[di].edge);
        ++di;
    }
    CHECK(di == 36);

    // the one genuine redefinition: label 5, second formula dropped
    const Diagnostic* conf = nullptr;
    const Diagnostic* miss = nullptr;
    for (const auto& d : rep.diagnostics) {
        if (d.kind == Diagnostic::Kind::conflict) conf = &d;
        if (d.kind == Diagnostic::Kind::missing_edge) miss = &d;
    }
    REQUIRE(conf != nullptr);
    CHECK(conf->label == "5");
    CHECK(conf->edge == "5");
    CHECK(conf->detail ==
          "conflicting operator; kept E_{24j-6,8j-2}, ignored E_{32j-4,8j-2}");

    REQUIRE(miss != nullptr);
    CHECK(miss->edge == "10");
    CHECK(diagnostic_to_string(*miss) == "missing assignment for edge 10");

    // strict mode refuses the gap instead of reporting it
    CHECK_THROWS_AS(ck_verify_series(g, gpi3_series_family(), true), ck_error);
    CHECK_NOTHROW(ck_verify_series(orient_sq(3), sq3d_series_family(), true));
}

// ==================== truncated backend agreement ====================

TEST_CASE("truncated backend at N=384 matches the exact backend") {
    ColoredGraph sq = orient_sq(3);
    ColoredGraph pi = gpi_graph(3);
    CKSeriesFamily f1 = sq3d_series_family();
    CKSeriesFamily f2 = gpi3_series_family();

    CKReport a1 = ck_verify_series(sq, f1);
    CKReport b1 = ck_verify_truncated(sq, f1, 384);
    CHECK(a1.verdict_vector() == b1.verdict_vector());
    CHECK(a1.diagnostics.size() == b1.diagnostics.size());

    CKReport a2 = ck_verify_series(pi, f2);
    CKReport b2 = ck_verify_truncated(pi, f2, 384);
    CHECK(a2.verdict_vector() == b2.verdict_vector());
    CHECK(a2.diagnostics.size() == b2.diagnostics.size());

    // row subjects line up one-for-one as well
    REQUIRE(a2.matrix_rows.size() == b2.matrix_rows.size());
    for (size_t i = 0; i < a2.matrix_rows.size(); ++i)
        CHECK(a2.matrix_rows[i].subject == b2.matrix_rows[i].subject);
}

TEST_CASE("truncation window must cover twice the largest step") {
    ColoredGraph pi = gpi_graph(3);
    CKSeriesFamily fam = gpi3_series_family();  // largest step 48
    CHECK_THROWS_AS(ck_verify_truncated(pi, fam, 95), ck_error);
    CHECK_NOTHROW(ck_verify_truncated(pi, fam, 96));
}

// ==================== small series families ====================

TEST_CASE("loop vertex with the identity-like series satisfies everything") {
    ColoredGraph g = cycle_graph({"w"});
    CKSeriesFamily fam;
    fam.assignments.push_back({"c1", one_term(1, 0, 1, 0)});

    CKReport rep = ck_verify_series(g, fam);
    CHECK(rep.clean());
    REQUIRE(rep.edge_rows.size() == 1);
    CHECK(rep.edge_rows[0].verdict == Verdict::defines);
    REQUIRE(rep.vertex_rows.size() == 1);
    CHECK(rep.vertex_rows[0].verdict == Verdict::pass);
    REQUIRE(rep.matrix_rows.size() == 1);
    CHECK(rep.matrix_rows[0].verdict == Verdict::pass);
    CHECK(rep.orthogonality.verdict == Verdict::pass);

    // with the projection supplied explicitly the row is a check, not a
    // definition
    fam.projections.push_back({"w", make_diagonal({{1, 1}})});
    CKReport rp = ck_verify_series(g, fam);
    CHECK(rp.edge_rows[0].verdict == Verdict::pass);
    CHECK(rp.clean());

    // and a wrong explicit projection is caught on both relations
    fam.projections[0].second = make_diagonal({{2, 2}});
    CKReport rw = ck_verify_series(g, fam);
    CHECK(rw.edge_rows[0].verdict == Verdict::fail);
    CHECK(rw.vertex_rows[0].verdict == Verdict::fail);
}

TEST_CASE("unknown labels and non-isometries are reported, not dropped") {
    ColoredGraph g = cycle_graph({"a", "b"});  // c1: a->b, c2: b->a
    CKSeriesFamily fam;
    fam.assignments.push_back({"zz", one_term(1, 0, 1, 0)});
    // rows 2j and 2j+2 collide at 4
    fam.assignments.push_back(
        {"c1", make_series({make_progression(2, 0, 2, 0),
                            make_progression(2, 2, 2, -1)})});
    fam.assignments.push_back({"c2", one_term(2, -1, 2, 0)});

    CKReport rep = ck_verify_series(g, fam);
    REQUIRE(rep.diagnostics.size() == 1);
    CHECK(rep.diagnostics[0].kind == Diagnostic::Kind::unknown_label);
    CHECK(rep.diagnostics[0].label == "zz");

    const RelationRow* r1 = find_row(rep.edge_rows, "c1");
    REQUIRE(r1 != nullptr);
    CHECK(r1->verdict == Verdict::fail);
    CHECK(r1->note == "not a partial isometry: row collision at 4");
    // the vertex emitting c1 cannot be summed
    CHECK(find_row(rep.vertex_rows, "a")->verdict == Verdict::unresolved);
    CHECK_FALSE(rep.clean());
}

// ==================== Laurent families ====================

TEST_CASE("printed finite assignment: loops fail the vertex-sum relation") {
    ColoredGraph g = commutant_sq3d();
    CKReport rep = ck_verify_laurent(g, commutant_literal_family());

    CHECK(rep.diagnostics.empty());
    check_rows(rep.edge_rows,
               {{"c1", 'd'}, {"c2", 'd'}, {"c4", 'd'}, {"c5", 'd'},
                {"c6", 'd'}, {"c7", 'd'}, {"c8", 'd'}, {"c9", 'd'}});
    check_rows(rep.vertex_rows,
               {{"v1", 'f'}, {"v2", 'f'}, {"v3", 'p'}, {"v4", 'p'},
                {"v5", 'p'}, {"v6", 'p'}, {"v7", 'p'}, {"v8", 'p'}});
    check_rows(rep.matrix_rows,
               {{"c1", 'p'}, {"c2", 'p'}, {"c4", 'p'}, {"c5", 'p'},
                {"c6", 'p'}, {"c7", 'p'}, {"c8", 'f'}, {"c9", 'f'}});
    CHECK(rep.orthogonality.verdict == Verdict::fail);
    CHECK_FALSE(rep.clean());

    // dimension guard
    CKLaurentFamily bad = commutant_literal_family();
    bad.k = 2;
    CHECK_THROWS_AS(ck_verify_laurent(g, bad), ck_error);
}

TEST_CASE("canonical cycle family on the commutant graph passes everything") {
    ColoredGraph g = commutant_sq3d();
    CKLaurentFamily fam = canonical_cycle_family(g);

    CHECK(fam.k == 8);
    REQUIRE(fam.assignments.size() == 8);
    REQUIRE(fam.projections.size() == 8);

    // blocks: cycle v3->v5->v8 at positions 1..3, cycle v4->v6->v7 at
    // 4..6, loops at v1 (7) and v2 (8); closing edges carry z
    auto find_op = [&](const std::string& label) -> const LaurentMatrix* {
        for (const auto& a : fam.assignments)
            if (a.label == label) return &a.op;
        return nullptr;
    };
    CHECK(laurent_eq(*find_op("c1"), lm_unit(8, 1, 2)));
    CHECK(laurent_eq(*find_op("c4"), lm_unit(8, 2, 3)));
    CHECK(laurent_eq(*find_op("c7"), lm_unit(8, 3, 1, lp_z())));
    CHECK(laurent_eq(*find_op("c2"), lm_unit(8, 4, 5)));
    CHECK(laurent_eq(*find_op("c5"), lm_unit(8, 5, 6)));
    CHECK(laurent_eq(*find_op("c6"), lm_unit(8, 6, 4, lp_z())));
    CHECK(laurent_eq(*find_op("c9"), lm_unit(8, 7, 7, lp_z())));
    CHECK(laurent_eq(*find_op("c8"), lm_unit(8, 8, 8, lp_z())));

    CKReport rep = ck_verify_laurent(g, fam);
    CHECK(rep.clean());
    CHECK(rep.orthogonality.verdict == Verdict::pass);
    for (const auto& r : rep.edge_rows) CHECK(r.verdict == Verdict::pass);
    for (const auto& r : rep.vertex_rows) CHECK(r.verdict == Verdict::pass);
    for (const auto& r : rep.matrix_rows) CHECK(r.verdict == Verdict::pass);
}

TEST_CASE("canonical families for small cycle unions") {
    // single loop: the 1x1 block [z]
    ColoredGraph loop = cycle_graph({"w"});
    CKLaurentFamily lf = canonical_cycle_family(loop);
    CHECK(lf.k == 1);
    REQUIRE(lf.assignments.size() == 1);
    CHECK(laurent_eq(lf.assignments[0].op, lm_unit(1, 1, 1, lp_z())));
    CHECK(ck_verify_laurent(loop, lf).clean());

    // directed 2-cycle: M_2 block, z on the closing edge
    ColoredGraph two = cycle_graph({"a", "b"});
    CKLaurentFamily tf = canonical_cycle_family(two);
    CHECK(tf.k == 2);
    CHECK(laurent_eq(tf.assignments[0].op, lm_unit(2, 1, 2)));
    CHECK(laurent_eq(tf.assignments[1].op, lm_unit(2, 2, 1, lp_z())));
    CHECK(ck_verify_laurent(two, tf).clean());

    // the family fails cleanly off the cycle-union domain
    CHECK_THROWS_AS(canonical_cycle_family(orient_sq(3)), ck_error);
    CHECK_THROWS_AS(canonical_cycle_family(build_sq(3)), ck_error);
}

TEST_CASE("three-cycle with hand-placed units passes all relations") {
    // u1 -> u3 -> u2 -> u1 with S on each edge chosen so that S*S matches
    // the projection at the head
    std::vector<Vertex> vs = {{"u1", Color::black, Layer::none},
                              {"u2", Color::black, Layer::none},
                              {"u3", Color::black, Layer::none}};
    Edge e1, e2, e3;
    e1.src = "u2"; e1.dst = "u1"; e1.id = "e1";
    e2.src = "u3"; e2.dst = "u2"; e2.id = "e2";
    e3.src = "u1"; e3.dst = "u3"; e3.id = "e3";
    ColoredGraph g = make_graph(vs, {e1, e2, e3});

    CKLaurentFamily fam;
    fam.k = 3;
    fam.assignments.push_back({"e1", lm_unit(3, 2, 1)});
    fam.assignments.push_back({"e2", lm_unit(3, 3, 2)});
    fam.assignments.push_back({"e3", lm_unit(3, 1, 3, lp_z())});

    CKReport rep = ck_verify_laurent(g, fam);
    CHECK(rep.clean());
    CHECK(rep.orthogonality.verdict == Verdict::pass);
}

// ==================== structure strings ====================

TEST_CASE("structure string lists blocks by descending cycle length") {
    CHECK(structure_string(commutant_sq3d()) ==
          "M_3(C(T)) ⊕ M_3(C(T)) ⊕ C(T) ⊕ C(T)");
    CHECK(structure_string(cycle_graph({"w"})) == "C(T)");

    // two 2-cycles
    ColoredGraph a = cycle_graph({"a1", "a2"});
    ColoredGraph b = cycle_graph({"b1", "b2"});
    // rename b's edges to avoid duplicate ids after overlay
    b.edges[0].id = "d1";
    b.edges[1].id = "d2";
    ColoredGraph ab = overlay(a, b);
    CHECK(structure_string(ab) == "M_2(C(T)) ⊕ M_2(C(T))");

    CHECK_THROWS_AS(structure_string(gpi_graph(3)), ck_error);
}

// ==================== index-range bookkeeping ====================

TEST_CASE("family index ranges follow the published recurrence") {
    TheoremRanges r2 = theorem_ranges(2);
    CHECK(r2.h == 3);
    CHECK(r2.i_max == 6);
    CHECK(r2.d_min == 0);
    CHECK(r2.d_max == 2);

    TheoremRanges r3 = theorem_ranges(3);
    CHECK(r3.h == 8);
    CHECK(r3.i_max == 36);
    CHECK(r3.d_max == 7);
    CHECK(r3.e_of(2) == 16);
    CHECK(r3.e_of(3) == 24);
    CHECK(r3.e_of(6) == 48);
    CHECK(r3.a_max(2) == 16);

    CHECK(theorem_ranges(5).h == 24);

    // recurrence equals the closed form n^2 - 1
    for (long long n = 2; n <= 12; ++n)
        CHECK(theorem_ranges(n).h == n * n - 1);

    CHECK_THROWS_AS(theorem_ranges(1), ck_error);
    CHECK_THROWS_AS(theorem_ranges(0), ck_error);
}

// ==================== report plumbing ====================

TEST_CASE("verdict labels and report predicates") {
    CHECK(verdict_label(Verdict::pass) == "pass");
    CHECK(verdict_label(Verdict::fail) == "fail");
    CHECK(verdict_label(Verdict::defines) == "defines");
    CHECK(verdict_label(Verdict::unresolved) == "unresolved");

    CKReport rep;
    rep.orthogonality = {"orthogonality", Verdict::pass, ""};
    CHECK(rep.clean());
    CHECK(rep.verdict_vector() == std::vector<Verdict>{Verdict::pass});

    rep.edge_rows.push_back({"x", Verdict::defines, ""});
    rep.vertex_rows.push_back({"v", Verdict::unresolved, ""});
    CHECK(rep.clean());  // defines/unresolved are not failures by themselves

    rep.diagnostics.push_back(
        {Diagnostic::Kind::benign_duplicate, "b", "x", "same"});
    CHECK(rep.clean());
    rep.diagnostics.push_back({Diagnostic::Kind::missing_edge, "", "y", ""});
    CHECK_FALSE(rep.clean());
}
