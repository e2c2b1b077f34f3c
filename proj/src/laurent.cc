#include "ckforge/laurent.hh"

namespace ckforge {

// ==================== polynomials ====================

namespace {

void lp_accum(LaurentPoly& a, long long exponent, long long coefficient) {
    if (coefficient == 0) return;
    auto it = a.coeffs.find(exponent);
    if (it == a.coeffs.end()) {
        a.coeffs[exponent] = coefficient;
        return;
    }
    it->second += coefficient;
    if (it->second == 0) a.coeffs.erase(it);
}

}  // namespace

LaurentPoly lp_const(long long c) {
    LaurentPoly p;
    if (c != 0) p.coeffs[0] = c;
    return p;
}

LaurentPoly lp_z(long long exponent, long long coefficient) {
    LaurentPoly p;
    if (coefficient != 0) p.coeffs[exponent] = coefficient;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs) lp_accum(out, e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.coeffs) lp_accum(out, e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) lp_accum(out, ea + eb, ca * cb);
    return out;
}

LaurentPoly poly_adjoint(const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, c] : a.coeffs) out.coeffs[-e] = c;
    return out;
}

std::string lp_to_string(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    // highest power first
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
        long long e = it->first, c = it->second;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long mag = c < 0 ? -c : c;
        if (mag != 1 || e == 0) out += std::to_string(mag);
        if (e != 0) {
            out += "z";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

// ==================== matrices ====================

namespace {

void require_square(const LaurentMatrix& a) {
    if ((long long)a.entries.size() != a.k)
        throw laurent_error("laurent matrix: row count != k");
    for (const auto& row : a.entries)
        if ((long long)row.size() != a.k)
            throw laurent_error("laurent matrix: column count != k");
}

void require_same(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_square(a);
    require_square(b);
    if (a.k != b.k) throw laurent_error("laurent matrix: dimension mismatch");
}

}  // namespace

LaurentMatrix lm_zero(long long k) {
    if (k < 1) throw laurent_error("laurent matrix: k must be >= 1");
    LaurentMatrix m;
    m.k = k;
    m.entries.assign(k, std::vector<LaurentPoly>(k));
    return m;
}

LaurentMatrix lm_identity(long long k) {
    LaurentMatrix m = lm_zero(k);
    for (long long i = 0; i < k; ++i) m.entries[i][i] = lp_const(1);
    return m;
}

LaurentMatrix lm_unit(long long k, long long r, long long c,
                      const LaurentPoly& v) {
    if (r < 1 || r > k || c < 1 || c > k)
        throw laurent_error("laurent matrix: unit index out of range");
    LaurentMatrix m = lm_zero(k);
    m.entries[r - 1][c - 1] = v;
    return m;
}

LaurentMatrix laurent_add(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_same(a, b);
    LaurentMatrix out = lm_zero(a.k);
    for (long long i = 0; i < a.k; ++i)
        for (long long j = 0; j < a.k; ++j)
            out.entries[i][j] = a.entries[i][j] + b.entries[i][j];
    return out;
}

LaurentMatrix laurent_sub(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_same(a, b);
    LaurentMatrix out = lm_zero(a.k);
    for (long long i = 0; i < a.k; ++i)
        for (long long j = 0; j < a.k; ++j)
            out.entries[i][j] = a.entries[i][j] - b.entries[i][j];
    return out;
}

LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_same(a, b);
    LaurentMatrix out = lm_zero(a.k);
    for (long long i = 0; i < a.k; ++i)
        for (long long j = 0; j < a.k; ++j) {
            LaurentPoly acc;
            for (long long l = 0; l < a.k; ++l)
                acc = acc + a.entries[i][l] * b.entries[l][j];
            out.entries[i][j] = acc;
        }
    return out;
}

LaurentMatrix laurent_adjoint(const LaurentMatrix& a) {
    require_square(a);
    LaurentMatrix out = lm_zero(a.k);
    for (long long i = 0; i < a.k; ++i)
        for (long long j = 0; j < a.k; ++j)
            out.entries[j][i] = poly_adjoint(a.entries[i][j]);
    return out;
}

bool laurent_eq(const LaurentMatrix& a, const LaurentMatrix& b) {
    require_same(a, b);
    return a.entries == b.entries;
}

bool lm_is_zero(const LaurentMatrix& a) {
    require_square(a);
    for (const auto& row : a.entries)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

bool lm_is_projection(const LaurentMatrix& a) {
    return laurent_eq(a, laurent_adjoint(a)) && laurent_eq(a, laurent_mul(a, a));
}

}  // namespace ckforge
