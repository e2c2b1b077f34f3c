#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckforge {

struct laurent_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ==================== laurent polynomials ====================

// integer laurent polynomial in z; only nonzero coefficients are stored, so
// == is exact equality. the involution sends z to z^-1 (coefficients are
// integers and stay put).
struct LaurentPoly {
    std::map<long long, long long> coeffs;  // exponent -> coefficient

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly lp_const(long long c);
LaurentPoly lp_z(long long exponent = 1, long long coefficient = 1);

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_adjoint(const LaurentPoly& a);

// "0", "1", "z", "z^-1", "2z^3 - z + 1" style rendering
std::string lp_to_string(const LaurentPoly& a);

// ==================== matrices over laurent polynomials ====================

struct LaurentMatrix {
    long long k = 0;
    std::vector<std::vector<LaurentPoly>> entries;  // k x k

    bool operator==(const LaurentMatrix&) const = default;
};

LaurentMatrix lm_zero(long long k);
LaurentMatrix lm_identity(long long k);
// matrix unit v * E_{r,c} with 1-based indices
LaurentMatrix lm_unit(long long k, long long r, long long c,
                      const LaurentPoly& v = lp_const(1));

LaurentMatrix laurent_add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix laurent_sub(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b);
// conjugate transpose: entries transposed and z inverted
LaurentMatrix laurent_adjoint(const LaurentMatrix& a);
bool laurent_eq(const LaurentMatrix& a, const LaurentMatrix& b);

bool lm_is_zero(const LaurentMatrix& a);
// projection test: a == a* == a^2
bool lm_is_projection(const LaurentMatrix& a);

}  // namespace ckforge
