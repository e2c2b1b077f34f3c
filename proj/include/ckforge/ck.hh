#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ckforge/graph.hh"
#include "ckforge/laurent.hh"
#include "ckforge/series.hh"

// verification of Cuntz-Krieger families over a directed colored graph.
// a family assigns one operator per edge; the verifier checks, per edge,
// that S*S equals the projection at the head vertex ("domain" rows), per
// vertex, that the projection equals the orthogonal sum of SS* over the
// edges it emits ("vertex-sum" rows), and the classical matrix form
// S_e*S_e = sum over edges f leaving the head of e of S_f S_f* ("matrix"
// rows), plus mutual orthogonality of all projections involved.
//
// projections may be supplied explicitly; otherwise the first assigned
// edge into a vertex defines its projection ("defines" rows) and the
// remaining edges are consistency checks against it.

namespace ckforge {

struct ck_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ==================== report ====================

enum class Verdict { pass, fail, defines, unresolved };

std::string verdict_label(Verdict v);

struct RelationRow {
    std::string subject;  // edge label or vertex id
    Verdict verdict = Verdict::pass;
    std::string note;     // evidence: defining set, collision index, ...

    bool operator==(const RelationRow&) const = default;
};

struct Diagnostic {
    enum class Kind { benign_duplicate, conflict, missing_edge, unknown_label };

    Kind kind = Kind::benign_duplicate;
    std::string label;  // the label as written in the family ("" for missing)
    std::string edge;   // resolved edge id ("" for unknown labels)
    std::string detail;

    bool operator==(const Diagnostic&) const = default;
};

std::string diagnostic_to_string(const Diagnostic& d);

struct CKReport {
    std::vector<RelationRow> edge_rows;    // one per graph edge, graph order
    std::vector<RelationRow> vertex_rows;  // one per vertex (sinks included)
    std::vector<RelationRow> matrix_rows;  // per edge whose head is not a sink
    RelationRow orthogonality;             // subject "orthogonality"
    std::vector<Diagnostic> diagnostics;

    // all verdicts in report order: edges, vertices, matrix rows, orthogonality
    std::vector<Verdict> verdict_vector() const;

    // no fail verdict and no conflict/missing/unknown diagnostic
    bool clean() const;
};

// ==================== series families ====================

struct SeriesAssignment {
    std::string label;  // edge id or alias, as written
    SeriesOperator op;
};

struct CKSeriesFamily {
    std::vector<SeriesAssignment> assignments;  // kept in listing order
    // optional explicit projections; vertices not listed fall back to
    // inference from incoming edges
    std::vector<std::pair<std::string, DiagonalSet>> projections;
};

// exact backend: diagonal sets in canonical form, equality is decidable.
// duplicate labels resolving to the same edge are reported (identical
// operator: benign; different: conflict, first assignment kept). edges
// with no assignment yield unresolved rows, or throw when strict.
CKReport ck_verify_series(const ColoredGraph& g, const CKSeriesFamily& fam,
                          bool strict = false);

// truncation backend: operators materialized as finite 0/1 matrices on
// indices <= n, comparisons restricted to the per-comparison safe corner.
// requires n >= 2 * (largest progression step in the family).
CKReport ck_verify_truncated(const ColoredGraph& g, const CKSeriesFamily& fam,
                             long long n, bool strict = false);

// ==================== Laurent-matrix families ====================

struct LaurentAssignment {
    std::string label;
    LaurentMatrix op;
};

struct CKLaurentFamily {
    long long k = 0;  // common matrix dimension
    std::vector<LaurentAssignment> assignments;
    std::vector<std::pair<std::string, LaurentMatrix>> projections;
};

// same report layout as the series backend, with exact Laurent-polynomial
// arithmetic; all matrices must share the family dimension k
CKReport ck_verify_laurent(const ColoredGraph& g, const CKLaurentFamily& fam,
                           bool strict = false);

// for a graph whose weakly-connected components are all simple directed
// cycles: one block per component (descending cycle length, then earliest
// vertex), matrix units along the cycle, a single z on the closing edge,
// explicit diagonal-unit projections. the result passes every relation.
CKLaurentFamily canonical_cycle_family(const ColoredGraph& g);

// direct-sum decomposition by cycle length, e.g. "M_3(C(T)) (+) C(T)"
// rendered with the UTF-8 circled plus; loops contribute "C(T)"
std::string structure_string(const ColoredGraph& g);

// ==================== family-size bookkeeping ====================

// index ranges of the generic isometry family over the n-th grid-path
// graph: column step h = n^2 - 1 (via the recurrence h_{n+1} = h_n + 2n + 1,
// h_2 = 3), family size i_max = (n^3 + n^2)(n - 1)/2, column offset
// D in {0..n^2-2}, row step E = out_degree * h, row offset A in {0..E}
struct TheoremRanges {
    long long n = 0;
    long long h = 0;
    long long i_max = 0;
    long long d_min = 0;
    long long d_max = 0;

    long long e_of(long long out_degree) const { return out_degree * h; }
    long long a_max(long long out_degree) const { return e_of(out_degree); }
};

TheoremRanges theorem_ranges(long long n);  // requires n >= 2

// ==================== published fixture families ====================

// the 26-isometry family on orient_sq(3), labels e1..e26
CKSeriesFamily sq3d_series_family();

// the 72-entry printed list for gpi_graph(3), alias labels and the two
// published slips (one label defined twice with different operators, one
// edge never assigned) preserved verbatim
CKSeriesFamily gpi3_series_family();

// the finite matrix-unit assignment printed for commutant_sq3d() (k = 3,
// no z factors); its loop edges fail the vertex-sum relation
CKLaurentFamily commutant_literal_family();

}  // namespace ckforge
