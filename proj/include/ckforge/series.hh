#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ckforge {

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ==================== progression terms ====================

// one arithmetic progression of matrix units on l^2(N):
//   sum over j >= 1 of E_{row_step*j + row_offset, col_step*j + col_offset}
// steps are >= 1 and both index progressions stay >= 1 from j = 1 on
struct ProgressionPair {
    long long row_step = 1;
    long long row_offset = 0;
    long long col_step = 1;
    long long col_offset = 0;

    long long row_at(long long j) const { return row_step * j + row_offset; }
    long long col_at(long long j) const { return col_step * j + col_offset; }

    auto operator<=>(const ProgressionPair&) const = default;
};

// build a term whose index variable starts at j = jmin; the stored form folds
// jmin away so every term starts at j = 1. throws series_error when a step is
// < 1 or an index would drop below 1.
ProgressionPair make_progression(long long row_step, long long row_offset,
                                 long long col_step, long long col_offset,
                                 long long jmin = 1);

// finite sum of progression terms; kept sorted. no two terms may generate the
// same (row, col) pair -- make_series rejects overlapping terms, so every
// operator here is an honest 0/1 matrix.
struct SeriesOperator {
    std::vector<ProgressionPair> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const SeriesOperator&) const = default;
};

SeriesOperator make_series(std::vector<ProgressionPair> terms);

// swap the row/col progression of every term
SeriesOperator series_adjoint(const SeriesOperator& s);

// matrix-unit product: E_{a,b} E_{c,d} = [b == c] E_{a,d}. for every term
// pair the matching index set col_S(j) == row_T(k) is solved by extended gcd;
// the solutions form a single progression, so the product is again a series.
SeriesOperator series_mul(const SeriesOperator& s, const SeriesOperator& t);

// e.g. "E_{16j-13,8j}"; multi-term series joined by " + ", empty series "0"
std::string term_to_string(const ProgressionPair& t);
std::string series_to_string(const SeriesOperator& s);

struct IsometryCheck {
    bool ok = true;
    std::string note;  // e.g. "row collision at 4" when not an isometry
};

// a series is a partial isometry exactly when all row indices are pairwise
// distinct and all column indices are pairwise distinct across terms
IsometryCheck series_is_partial_isometry(const SeriesOperator& s);

// ==================== diagonal index sets ====================

// the infinite tail {first, first + step, first + 2*step, ...}
struct DiagonalRay {
    long long step = 1;
    long long first = 1;
    auto operator<=>(const DiagonalRay&) const = default;
};

// finite union of rays plus finitely many isolated indices. make_diagonal
// normalizes to a canonical form (minimal eventual period, maximal rays,
// leftover low indices as points), so == decides set equality for values
// built through it.
struct DiagonalSet {
    std::vector<DiagonalRay> rays;   // sorted by (first mod step ... ) -- canonical
    std::vector<long long> points;   // sorted, disjoint from the rays

    bool empty() const { return rays.empty() && points.empty(); }
    bool operator==(const DiagonalSet&) const = default;
};

DiagonalSet make_diagonal(std::vector<DiagonalRay> rays,
                          std::vector<long long> points = {});

bool diagonal_eq(const DiagonalSet& a, const DiagonalSet& b);
DiagonalSet diagonal_union(const DiagonalSet& a, const DiagonalSet& b);
bool diagonal_contains(const DiagonalSet& d, long long x);

// smallest index lying in both sets, when one exists
std::optional<long long> diagonal_common(const DiagonalSet& a,
                                         const DiagonalSet& b);

// e.g. "{8j} u {8j-4}" or "{4j} u {2, 5}"; "{}" when empty
std::string diagonal_to_string(const DiagonalSet& d);

// support of S*S (column indices) / SS* (row indices); both require a
// partial isometry and throw series_error otherwise
DiagonalSet domain_diagonal(const SeriesOperator& s);
DiagonalSet range_diagonal(const SeriesOperator& s);

// support of a diagonal projection: every term must have identical row and
// column progressions
DiagonalSet diagonal_of(const SeriesOperator& s);

// ==================== truncation backend ====================

using SparseUnits = std::set<std::pair<long long, long long>>;

long long series_max_step(const SeriesOperator& s);

// all matrix units with both indices <= n
SparseUnits truncate_series(const SeriesOperator& s, long long n);

SparseUnits sparse_adjoint(const SparseUnits& a);
SparseUnits sparse_mul(const SparseUnits& a, const SparseUnits& b);
SparseUnits sparse_clip(const SparseUnits& a, long long bound);

// largest corner size b such that every entry of s*t with both indices <= b
// is guaranteed to survive in truncate(s, n) * truncate(t, n)
long long product_safe_bound(const SeriesOperator& s, const SeriesOperator& t,
                             long long n);

}  // namespace ckforge
