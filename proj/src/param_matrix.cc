#include "ckforge/param_matrix.hh"

#include <algorithm>
#include <numeric>

#include "ckforge/families.hh"

namespace ckforge {

// ==================== scalar arithmetic ====================

AffineExpr operator+(const AffineExpr& a, const AffineExpr& b) {
    return {a.c0 + b.c0, a.cp + b.cp, a.cq + b.cq};
}

AffineExpr operator-(const AffineExpr& a, const AffineExpr& b) {
    return {a.c0 - b.c0, a.cp - b.cp, a.cq - b.cq};
}

AffineExpr operator*(long long s, const AffineExpr& a) {
    return {s * a.c0, s * a.cp, s * a.cq};
}

long long eval(const AffineExpr& a, long long p, long long q) {
    return a.c0 + a.cp * p + a.cq * q;
}

std::string to_string(const AffineExpr& a) {
    std::string out;
    auto term = [&](long long c, const char* var) {
        if (c == 0) return;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long m = c < 0 ? -c : c;
        if (m != 1 || !*var) out += std::to_string(m);
        out += var;
    };
    term(a.c0, "");
    term(a.cp, "p");
    term(a.cq, "q");
    return out.empty() ? "0" : out;
}

bool BilinearExpr::is_zero() const {
    return c1 == 0 && cp == 0 && cq == 0 && cpp == 0 && cpq == 0 && cqq == 0;
}

BilinearExpr operator+(const BilinearExpr& a, const BilinearExpr& b) {
    return {a.c1 + b.c1,   a.cp + b.cp,   a.cq + b.cq,
            a.cpp + b.cpp, a.cpq + b.cpq, a.cqq + b.cqq};
}

BilinearExpr operator-(const BilinearExpr& a, const BilinearExpr& b) {
    return {a.c1 - b.c1,   a.cp - b.cp,   a.cq - b.cq,
            a.cpp - b.cpp, a.cpq - b.cpq, a.cqq - b.cqq};
}

BilinearExpr mul(const AffineExpr& a, const AffineExpr& b) {
    return {a.c0 * b.c0,
            a.c0 * b.cp + a.cp * b.c0,
            a.c0 * b.cq + a.cq * b.c0,
            a.cp * b.cp,
            a.cp * b.cq + a.cq * b.cp,
            a.cq * b.cq};
}

long long eval(const BilinearExpr& a, long long p, long long q) {
    return a.c1 + a.cp * p + a.cq * q + a.cpp * p * p + a.cpq * p * q +
           a.cqq * q * q;
}

// ==================== matrices ====================

bool ParamMatrix::is_constant() const {
    for (const auto& row : entries)
        for (const AffineExpr& e : row)
            if (!e.is_constant()) return false;
    return true;
}

ParamMatrix make_param_matrix(std::vector<std::vector<AffineExpr>> entries) {
    ParamMatrix m;
    m.n = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != m.n)
            throw matrix_error("make_param_matrix: matrix must be square");
    m.entries = std::move(entries);
    return m;
}

ParamMatrix from_int(const IntMatrix& m) {
    std::vector<std::vector<AffineExpr>> rows;
    for (const auto& r : m) {
        std::vector<AffineExpr> row;
        for (long long v : r) row.push_back({v, 0, 0});
        rows.push_back(std::move(row));
    }
    return make_param_matrix(std::move(rows));
}

IntMatrix specialize(const ParamMatrix& m, long long p, long long q) {
    IntMatrix out(m.n, std::vector<long long>(m.n, 0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out[i][j] = eval(m.entries[i][j], p, q);
    return out;
}

BilinearMatrix param_mul(const ParamMatrix& a, const ParamMatrix& b) {
    if (a.n != b.n) throw matrix_error("param_mul: dimension mismatch");
    BilinearMatrix out(a.n, std::vector<BilinearExpr>(a.n));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            BilinearExpr acc;
            for (int k = 0; k < a.n; ++k)
                acc = acc + mul(a.entries[i][k], b.entries[k][j]);
            out[i][j] = acc;
        }
    return out;
}

BilinearMatrix commutator(const ParamMatrix& a, const ParamMatrix& b) {
    BilinearMatrix ab = param_mul(a, b), ba = param_mul(b, a);
    for (size_t i = 0; i < ab.size(); ++i)
        for (size_t j = 0; j < ab.size(); ++j) ab[i][j] = ab[i][j] - ba[i][j];
    return ab;
}

bool all_zero(const BilinearMatrix& m) {
    for (const auto& row : m)
        for (const BilinearExpr& e : row)
            if (!e.is_zero()) return false;
    return true;
}

// ==================== commutation solving ====================

void ConstraintSet::add(const AffineExpr& e) {
    if (e.is_zero()) return;
    AffineExpr neg = -1LL * e;
    for (const AffineExpr& have : items)
        if (have == e || have == neg) return;
    items.push_back(e);
}

namespace {

struct Rat {
    long long num = 0, den = 1;
};

Rat make_rat(long long num, long long den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string rat_str(const Rat& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// divide out the content and make the first nonzero coefficient positive
AffineExpr primitive(AffineExpr e) {
    long long g = std::gcd(std::gcd(e.c0 < 0 ? -e.c0 : e.c0,
                                    e.cp < 0 ? -e.cp : e.cp),
                           e.cq < 0 ? -e.cq : e.cq);
    if (g > 1) e = {e.c0 / g, e.cp / g, e.cq / g};
    long long lead = e.cp != 0 ? e.cp : (e.cq != 0 ? e.cq : e.c0);
    if (lead < 0) e = -1LL * e;
    return e;
}

}  // namespace

SolveReport solve_commutation(const ParamMatrix& a, const ParamMatrix& c) {
    if (!a.is_constant())
        throw matrix_error("solve_commutation: first factor must be parameter-free");
    if (a.n != c.n) throw matrix_error("solve_commutation: dimension mismatch");

    SolveReport rep;
    // AC - CA stays affine because a is constant
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            AffineExpr acc;
            for (int k = 0; k < a.n; ++k) {
                acc = acc + a.entries[i][k].c0 * c.entries[k][j];
                acc = acc - a.entries[k][j].c0 * c.entries[i][k];
            }
            rep.constraints.add(acc);
        }

    // integer row reduction over the (cp, cq, c0) coefficient vectors
    std::vector<AffineExpr> rows;
    for (const AffineExpr& e : rep.constraints.items) rows.push_back(primitive(e));

    auto eliminate = [&](size_t pivot, auto coeff) {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot || coeff(rows[r]) == 0) continue;
            rows[r] = coeff(rows[pivot]) * rows[r] - coeff(rows[r]) * rows[pivot];
            rows[r] = primitive(rows[r]);
        }
    };

    size_t pivot_p = rows.size(), pivot_q = rows.size();
    for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r].cp != 0) {
            pivot_p = r;
            break;
        }
    if (pivot_p < rows.size())
        eliminate(pivot_p, [](const AffineExpr& e) { return e.cp; });
    for (size_t r = 0; r < rows.size(); ++r)
        if (r != pivot_p && rows[r].cq != 0) {
            pivot_q = r;
            break;
        }
    if (pivot_q < rows.size())
        eliminate(pivot_q, [](const AffineExpr& e) { return e.cq; });

    for (size_t r = 0; r < rows.size(); ++r) {
        if (r == pivot_p || r == pivot_q) continue;
        if (rows[r].c0 != 0) rep.consistent = false;
    }

    if (!rep.consistent) {
        rep.description = "inconsistent";
        return rep;
    }
    if (pivot_p < rows.size() && pivot_q < rows.size()) {
        const AffineExpr &ep = rows[pivot_p], &eq = rows[pivot_q];
        rep.description = "p = " + rat_str(make_rat(-ep.c0, ep.cp)) +
                          ", q = " + rat_str(make_rat(-eq.c0, eq.cq));
        return rep;
    }
    if (pivot_p < rows.size()) {
        const AffineExpr& e = rows[pivot_p];  // cp > 0 after normalization
        if (e.cq == 0) {
            rep.description = "p = " + rat_str(make_rat(-e.c0, e.cp));
        } else if (e.cp == 1 && e.cq == -1 && e.c0 == 0) {
            rep.description = "p = q";
        } else if (e.cp == 1 && e.cq == 1 && e.c0 == 0) {
            rep.description = "p = -q";
        } else {
            rep.description = to_string(AffineExpr{0, e.cp, e.cq}) + " = " +
                              std::to_string(-e.c0);
        }
        return rep;
    }
    if (pivot_q < rows.size()) {
        const AffineExpr& e = rows[pivot_q];
        rep.description = "q = " + rat_str(make_rat(-e.c0, e.cq));
        return rep;
    }
    rep.description = "all parameters free";
    return rep;
}

// ==================== exhaustive 0/1 search ====================

namespace {

bool int_commutes(const IntMatrix& a, const IntMatrix& c) {
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long ac = 0, ca = 0;
            for (int k = 0; k < n; ++k) {
                ac += a[i][k] * c[k][j];
                ca += c[i][k] * a[k][j];
            }
            if (ac != ca) return false;
        }
    return true;
}

// fill row by row; verify every commutator row whose inputs are complete
void search_rows(const IntMatrix& a, const CommutantSearchOptions& opts,
                 IntMatrix& c, int row, std::vector<IntMatrix>& out) {
    int n = static_cast<int>(a.size());
    if (row == n) {
        if (int_commutes(a, c)) out.push_back(c);
        return;
    }
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        for (int j = 0; j < n; ++j) c[row][j] = (bits >> j) & 1;
        if (opts.fix_first_last) {
            if (row == 0 && c[0][0] != 1) continue;
            if (row == n - 1 && c[n - 1][n - 1] != 1) continue;
        }
        // partial check: rows r of AC and CA are both known once every
        // k with a[r][k] = 1 is already filled
        bool ok = true;
        for (int r = 0; r <= row && ok; ++r) {
            bool ready = true;
            for (int k = row + 1; k < n; ++k) ready = ready && a[r][k] == 0;
            if (!ready) continue;
            for (int j = 0; j < n && ok; ++j) {
                long long ac = 0, ca = 0;
                for (int k = 0; k <= row; ++k) ac += a[r][k] * c[k][j];
                for (int k = 0; k < n; ++k) ca += c[r][k] * a[k][j];
                ok = ac == ca;
            }
        }
        if (ok) search_rows(a, opts, c, row + 1, out);
    }
}

}  // namespace

std::vector<IntMatrix> search_01_commutants(const IntMatrix& a,
                                            const CommutantSearchOptions& opts) {
    int n = static_cast<int>(a.size());
    if (n > 10) throw matrix_error("search_01_commutants: more than 10 rows");
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n)
            throw matrix_error("search_01_commutants: matrix must be square");
        for (long long v : row)
            if (v != 0 && v != 1)
                throw matrix_error("search_01_commutants: entries must be 0 or 1");
    }

    std::vector<IntMatrix> out;
    if (n == 0) return out;

    if (opts.row_col_sums_one) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (opts.fix_first_last && (perm[0] != 0 || perm[n - 1] != n - 1))
                continue;
            // C[i][perm[i]] = 1: commuting means a[i][k] = a[perm[i]][perm[k]]
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int k = 0; k < n && ok; ++k)
                    ok = a[i][k] == a[perm[i]][perm[k]];
            if (!ok) continue;
            IntMatrix c(n, std::vector<long long>(n, 0));
            for (int i = 0; i < n; ++i) c[i][perm[i]] = 1;
            out.push_back(c);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        IntMatrix c(n, std::vector<long long>(n, 0));
        search_rows(a, opts, c, 0, out);
    }

    std::sort(out.begin(), out.end());
    return out;
}

// ==================== fixtures ====================

ParamMatrix commutant_a3d() {
    const AffineExpr Z{0, 0, 0}, O{1, 0, 0};
    const AffineExpr P{0, 1, 0}, Q{0, 0, 1};
    const AffineExpr MP{1, -1, 0}, MQ{1, 0, -1};  // 1-p, 1-q
    return make_param_matrix({
        {O, Z, Z, Z, Z, Z, Z, Z},
        {Z, Z, Z, P, Z, Z, MP, Z},
        {Z, Z, Z, Z, Q, MQ, Z, Z},
        {Z, MP, Z, Z, Z, Z, P, Z},
        {Z, Z, MQ, Z, Z, Q, Z, Z},
        {Z, Z, Q, Z, MQ, Z, Z, Z},
        {Z, P, Z, MP, Z, Z, Z, Z},
        {Z, Z, Z, Z, Z, Z, Z, O},
    });
}

IntMatrix a3d_matrix() {
    auto rows = adjacency(orient_sq(3), a3d_printed_ordering());
    IntMatrix out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace ckforge
