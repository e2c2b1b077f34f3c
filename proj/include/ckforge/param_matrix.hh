#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ckforge {

struct matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ==================== scalar types ====================

// c0 + cp*p + cq*q with integer coefficients; equality is coefficient-wise
struct AffineExpr {
    long long c0 = 0, cp = 0, cq = 0;
    bool operator==(const AffineExpr&) const = default;
    auto operator<=>(const AffineExpr&) const = default;
    bool is_zero() const { return c0 == 0 && cp == 0 && cq == 0; }
    bool is_constant() const { return cp == 0 && cq == 0; }
};

AffineExpr operator+(const AffineExpr& a, const AffineExpr& b);
AffineExpr operator-(const AffineExpr& a, const AffineExpr& b);
AffineExpr operator*(long long s, const AffineExpr& a);
long long eval(const AffineExpr& a, long long p, long long q);
std::string to_string(const AffineExpr& a);

// a product of two affine factors lands in the fixed monomial basis
// {1, p, q, p^2, p*q, q^2}
struct BilinearExpr {
    long long c1 = 0, cp = 0, cq = 0, cpp = 0, cpq = 0, cqq = 0;
    bool operator==(const BilinearExpr&) const = default;
    bool is_zero() const;
};

BilinearExpr operator+(const BilinearExpr& a, const BilinearExpr& b);
BilinearExpr operator-(const BilinearExpr& a, const BilinearExpr& b);
BilinearExpr mul(const AffineExpr& a, const AffineExpr& b);
long long eval(const BilinearExpr& a, long long p, long long q);

// ==================== matrices ====================

struct ParamMatrix {
    int n = 0;
    std::vector<std::vector<AffineExpr>> entries;  // n rows of n
    bool is_constant() const;
};

// validates squareness
ParamMatrix make_param_matrix(std::vector<std::vector<AffineExpr>> entries);

using IntMatrix = std::vector<std::vector<long long>>;

ParamMatrix from_int(const IntMatrix& m);
IntMatrix specialize(const ParamMatrix& m, long long p, long long q);

using BilinearMatrix = std::vector<std::vector<BilinearExpr>>;

// exact products; throws matrix_error on dimension mismatch
BilinearMatrix param_mul(const ParamMatrix& a, const ParamMatrix& b);
BilinearMatrix commutator(const ParamMatrix& a, const ParamMatrix& b);
bool all_zero(const BilinearMatrix& m);

// ==================== commutation solving ====================

// affine expressions required to vanish, deduplicated up to sign
struct ConstraintSet {
    std::vector<AffineExpr> items;
    void add(const AffineExpr& e);
};

struct SolveReport {
    ConstraintSet constraints;  // every nonzero entry of AC - CA
    bool consistent = true;
    std::string description;  // "all parameters free", "p = q",
                              // "p = 2, q = 1", or "inconsistent"
};

// first argument must be parameter-free
SolveReport solve_commutation(const ParamMatrix& a, const ParamMatrix& c);

// ==================== exhaustive 0/1 search ====================

struct CommutantSearchOptions {
    bool row_col_sums_one = false;  // restrict to permutation-like matrices
    bool fix_first_last = false;    // pin both corner diagonal entries to 1
};

// all 0/1 matrices commuting with a (0/1, n <= 10), sorted row-major;
// throws matrix_error beyond the size bound or on non-0/1 input
std::vector<IntMatrix> search_01_commutants(const IntMatrix& a,
                                            const CommutantSearchOptions& opts);

// ==================== fixtures ====================

// parametrized candidate commutant for the adjacency of the 26-edge oriented
// square graph, rows and columns ordered (v1, v3, v4, v5, v6, v7, v8, v2)
ParamMatrix commutant_a3d();

// that adjacency itself, same ordering, as plain integers
IntMatrix a3d_matrix();

}  // namespace ckforge
