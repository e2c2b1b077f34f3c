#include "ckforge/series.hh"

#include <algorithm>
#include <map>
#include <numeric>

namespace ckforge {

namespace {

// ==================== integer helpers ====================

long long floor_div(long long a, long long b) {
    // b > 0
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

long long ceil_div(long long a, long long b) {
    // b > 0
    return -floor_div(-a, b);
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g
struct Egcd {
    long long g, x, y;
};

Egcd egcd(long long a, long long b) {
    if (b == 0) return {a, 1, 0};
    Egcd r = egcd(b, a % b);
    return {r.g, r.y, r.x - (a / b) * r.y};
}

// smallest x >= max(f1, f2) with x == f1 (mod s1) and x == f2 (mod s2)
std::optional<long long> crt_min_common(long long s1, long long f1,
                                        long long s2, long long f2) {
    long long g = std::gcd(s1, s2);
    if ((f2 - f1) % g != 0) return std::nullopt;
    long long l = s1 / g * s2;
    long long m2 = s2 / g;
    Egcd e = egcd(s1 / g, m2);  // e.x inverts s1/g modulo m2
    long long t = (((f2 - f1) / g) % m2) * (e.x % m2) % m2;
    if (t < 0) t += m2;
    long long x = f1 + s1 * t;  // x == f1 mod s1, x == f2 mod s2, x >= f1
    long long m = std::max(f1, f2);
    if (x < m) x += ceil_div(m - x, l) * l;
    return x;
}

// do two progression terms generate a common (row, col) pair?
bool terms_overlap(const ProgressionPair& u, const ProgressionPair& v) {
    // rows equal: u.rs*j - v.rs*k = v.ro - u.ro
    long long a = u.row_step, b = v.row_step, c = v.row_offset - u.row_offset;
    long long g = std::gcd(a, b);
    if (c % g != 0) return false;
    Egcd e = egcd(a, b);
    long long j0 = e.x * (c / g);
    long long k0 = -e.y * (c / g);
    // j = j0 + (b/g)t, k = k0 + (a/g)t; now require cols equal as well
    long long big_a = u.col_step * (b / g) - v.col_step * (a / g);
    long long big_b = v.col_step * k0 + v.col_offset - u.col_step * j0 -
                      u.col_offset;
    if (big_a == 0) {
        if (big_b != 0) return false;
        return true;  // whole ray matches; large t gives j, k >= 1
    }
    if (big_b % big_a != 0) return false;
    long long t = big_b / big_a;
    return j0 + (b / g) * t >= 1 && k0 + (a / g) * t >= 1;
}

}  // namespace

// ==================== series construction ====================

ProgressionPair make_progression(long long row_step, long long row_offset,
                                 long long col_step, long long col_offset,
                                 long long jmin) {
    if (row_step < 1 || col_step < 1)
        throw series_error("make_progression: steps must be >= 1");
    ProgressionPair p;
    p.row_step = row_step;
    p.row_offset = row_offset + row_step * (jmin - 1);
    p.col_step = col_step;
    p.col_offset = col_offset + col_step * (jmin - 1);
    if (p.row_at(1) < 1 || p.col_at(1) < 1)
        throw series_error("make_progression: indices must stay >= 1");
    return p;
}

SeriesOperator make_series(std::vector<ProgressionPair> terms) {
    std::sort(terms.begin(), terms.end());
    for (size_t i = 0; i < terms.size(); ++i)
        for (size_t j = i + 1; j < terms.size(); ++j)
            if (terms_overlap(terms[i], terms[j]))
                throw series_error(
                    "make_series: terms generate a common matrix unit");
    SeriesOperator s;
    s.terms = std::move(terms);
    return s;
}

SeriesOperator series_adjoint(const SeriesOperator& s) {
    std::vector<ProgressionPair> out;
    out.reserve(s.terms.size());
    for (const auto& t : s.terms) {
        ProgressionPair p;
        p.row_step = t.col_step;
        p.row_offset = t.col_offset;
        p.col_step = t.row_step;
        p.col_offset = t.row_offset;
        out.push_back(p);
    }
    return make_series(std::move(out));
}

SeriesOperator series_mul(const SeriesOperator& s, const SeriesOperator& t) {
    std::vector<ProgressionPair> out;
    for (const auto& u : s.terms) {
        for (const auto& w : t.terms) {
            // match u's columns against w's rows:
            //   u.cs*j + u.co = w.rs*k + w.ro over j, k >= 1
            long long a = u.col_step, b = w.row_step;
            long long c = w.row_offset - u.col_offset;
            long long g = std::gcd(a, b);
            if (c % g != 0) continue;
            Egcd e = egcd(a, b);
            long long j0 = e.x * (c / g);
            long long k0 = -e.y * (c / g);
            long long bg = b / g, ag = a / g;
            long long tmin =
                std::max(ceil_div(1 - j0, bg), ceil_div(1 - k0, ag));
            out.push_back(make_progression(
                u.row_step * bg, u.row_step * j0 + u.row_offset,
                w.col_step * ag, w.col_step * k0 + w.col_offset, tmin));
        }
    }
    return make_series(std::move(out));
}

IsometryCheck series_is_partial_isometry(const SeriesOperator& s) {
    std::optional<long long> worst;
    bool worst_is_row = true;
    auto scan = [&](bool rows) {
        for (size_t i = 0; i < s.terms.size(); ++i) {
            for (size_t j = i + 1; j < s.terms.size(); ++j) {
                const auto& u = s.terms[i];
                const auto& v = s.terms[j];
                auto hit = rows ? crt_min_common(u.row_step, u.row_at(1),
                                                 v.row_step, v.row_at(1))
                                : crt_min_common(u.col_step, u.col_at(1),
                                                 v.col_step, v.col_at(1));
                if (hit && (!worst || *hit < *worst)) {
                    worst = *hit;
                    worst_is_row = rows;
                }
            }
        }
    };
    scan(true);
    scan(false);
    if (!worst) return {true, ""};
    return {false, std::string(worst_is_row ? "row" : "column") +
                       " collision at " + std::to_string(*worst)};
}

// ==================== diagonal sets ====================

namespace {

constexpr long long kMaxModulus = 1000000;

std::vector<long long> divisors_ascending(long long n) {
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// canonical form: minimal eventual period L, one tail per eventually-full
// residue class, leftover low indices as points
DiagonalSet normalize(const std::vector<DiagonalRay>& rays_in,
                      const std::vector<long long>& points_in) {
    std::set<long long> pts(points_in.begin(), points_in.end());
    DiagonalSet out;
    if (rays_in.empty()) {
        out.points.assign(pts.begin(), pts.end());
        return out;
    }

    long long big_l = 1;
    for (const auto& r : rays_in) {
        big_l = big_l / std::gcd(big_l, r.step) * r.step;
        if (big_l > kMaxModulus)
            throw series_error("diagonal normalization: step lcm too large");
    }

    // expand every ray to modulus big_l, keeping the least first per residue
    std::map<long long, long long> tails;  // residue mod big_l -> first
    for (const auto& r : rays_in) {
        for (long long i = 0; i < big_l / r.step; ++i) {
            long long f = r.first + r.step * i;
            long long res = f % big_l;
            auto it = tails.find(res);
            if (it == tails.end() || f < it->second) tails[res] = f;
        }
    }

    for (;;) {
        // absorb points: drop covered ones, extend tails downward
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
                long long p = *it;
                auto t = tails.find(p % big_l);
                if (t == tails.end()) continue;
                if (p >= t->second || p == t->second - big_l) {
                    if (p < t->second) t->second = p;
                    pts.erase(p);
                    changed = true;
                    break;
                }
            }
        }

        // try to shrink the modulus
        long long shrunk = 0;
        for (long long d : divisors_ascending(big_l)) {
            if (d == big_l) break;
            bool ok = true;
            for (long long r = 0; ok && r < d; ++r) {
                std::vector<long long> firsts;
                for (long long q = r; q < big_l; q += d) {
                    auto it = tails.find(q);
                    if (it != tails.end()) firsts.push_back(it->second);
                }
                if (firsts.empty()) continue;
                if ((long long)firsts.size() != big_l / d) {
                    ok = false;
                    break;
                }
                long long m = *std::min_element(firsts.begin(), firsts.end());
                for (long long f : firsts)
                    if (f != m + (f - m) % big_l) {
                        ok = false;
                        break;
                    }
            }
            if (ok) {
                shrunk = d;
                break;
            }
        }
        if (!shrunk) break;
        std::map<long long, long long> merged;
        for (const auto& [res, f] : tails) {
            long long r = res % shrunk;
            auto it = merged.find(r);
            if (it == merged.end() || f < it->second) merged[r] = f;
        }
        tails = std::move(merged);
        big_l = shrunk;
    }

    for (const auto& [res, f] : tails) out.rays.push_back({big_l, f});
    std::sort(out.rays.begin(), out.rays.end(),
              [](const DiagonalRay& a, const DiagonalRay& b) {
                  return a.first < b.first;
              });
    out.points.assign(pts.begin(), pts.end());
    return out;
}

}  // namespace

DiagonalSet make_diagonal(std::vector<DiagonalRay> rays,
                          std::vector<long long> points) {
    for (const auto& r : rays)
        if (r.step < 1 || r.first < 1)
            throw series_error("make_diagonal: rays need step >= 1, first >= 1");
    for (long long p : points)
        if (p < 1) throw series_error("make_diagonal: indices must be >= 1");
    return normalize(rays, points);
}

bool diagonal_eq(const DiagonalSet& a, const DiagonalSet& b) {
    return make_diagonal(a.rays, a.points) == make_diagonal(b.rays, b.points);
}

DiagonalSet diagonal_union(const DiagonalSet& a, const DiagonalSet& b) {
    std::vector<DiagonalRay> rays = a.rays;
    rays.insert(rays.end(), b.rays.begin(), b.rays.end());
    std::vector<long long> pts = a.points;
    pts.insert(pts.end(), b.points.begin(), b.points.end());
    return make_diagonal(std::move(rays), std::move(pts));
}

bool diagonal_contains(const DiagonalSet& d, long long x) {
    if (std::binary_search(d.points.begin(), d.points.end(), x)) return true;
    for (const auto& r : d.rays)
        if (x >= r.first && (x - r.first) % r.step == 0) return true;
    return false;
}

std::optional<long long> diagonal_common(const DiagonalSet& a,
                                         const DiagonalSet& b) {
    std::optional<long long> best;
    auto offer = [&](long long x) {
        if (!best || x < *best) best = x;
    };
    for (long long p : a.points)
        if (diagonal_contains(b, p)) offer(p);
    for (long long p : b.points)
        if (diagonal_contains(a, p)) offer(p);
    for (const auto& ra : a.rays)
        for (const auto& rb : b.rays) {
            auto hit = crt_min_common(ra.step, ra.first, rb.step, rb.first);
            if (hit) offer(*hit);
        }
    return best;
}

namespace {

std::string affine_text(long long step, long long off) {
    std::string out = step == 1 ? "j" : std::to_string(step) + "j";
    if (off > 0) out += "+" + std::to_string(off);
    if (off < 0) out += std::to_string(off);
    return out;
}

}  // namespace

std::string term_to_string(const ProgressionPair& t) {
    return "E_{" + affine_text(t.row_step, t.row_offset) + "," +
           affine_text(t.col_step, t.col_offset) + "}";
}

std::string series_to_string(const SeriesOperator& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& t : s.terms) {
        if (!out.empty()) out += " + ";
        out += term_to_string(t);
    }
    return out;
}

std::string diagonal_to_string(const DiagonalSet& d) {
    if (d.empty()) return "{}";
    std::string out;
    auto sep = [&]() {
        if (!out.empty()) out += " u ";
    };
    for (const auto& r : d.rays) {
        sep();
        long long off = r.first - r.step;
        out += "{" + std::to_string(r.step) + "j";
        if (off > 0) out += "+" + std::to_string(off);
        if (off < 0) out += std::to_string(off);
        out += "}";
    }
    if (!d.points.empty()) {
        sep();
        out += "{";
        for (size_t i = 0; i < d.points.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(d.points[i]);
        }
        out += "}";
    }
    return out;
}

DiagonalSet domain_diagonal(const SeriesOperator& s) {
    IsometryCheck c = series_is_partial_isometry(s);
    if (!c.ok)
        throw series_error("domain_diagonal: not a partial isometry (" +
                           c.note + ")");
    std::vector<DiagonalRay> rays;
    for (const auto& t : s.terms) rays.push_back({t.col_step, t.col_at(1)});
    return make_diagonal(std::move(rays));
}

DiagonalSet range_diagonal(const SeriesOperator& s) {
    IsometryCheck c = series_is_partial_isometry(s);
    if (!c.ok)
        throw series_error("range_diagonal: not a partial isometry (" + c.note +
                           ")");
    std::vector<DiagonalRay> rays;
    for (const auto& t : s.terms) rays.push_back({t.row_step, t.row_at(1)});
    return make_diagonal(std::move(rays));
}

DiagonalSet diagonal_of(const SeriesOperator& s) {
    IsometryCheck c = series_is_partial_isometry(s);
    if (!c.ok)
        throw series_error("diagonal_of: not a partial isometry (" + c.note +
                           ")");
    std::vector<DiagonalRay> rays;
    for (const auto& t : s.terms) {
        if (t.row_step != t.col_step || t.row_offset != t.col_offset)
            throw series_error("diagonal_of: operator is not diagonal");
        rays.push_back({t.row_step, t.row_at(1)});
    }
    return make_diagonal(std::move(rays));
}

// ==================== truncation backend ====================

long long series_max_step(const SeriesOperator& s) {
    long long m = 1;
    for (const auto& t : s.terms)
        m = std::max({m, t.row_step, t.col_step});
    return m;
}

SparseUnits truncate_series(const SeriesOperator& s, long long n) {
    SparseUnits out;
    for (const auto& t : s.terms)
        for (long long j = 1; t.row_at(j) <= n && t.col_at(j) <= n; ++j)
            out.insert({t.row_at(j), t.col_at(j)});
    return out;
}

SparseUnits sparse_adjoint(const SparseUnits& a) {
    SparseUnits out;
    for (const auto& [r, c] : a) out.insert({c, r});
    return out;
}

SparseUnits sparse_mul(const SparseUnits& a, const SparseUnits& b) {
    std::map<long long, std::vector<long long>> by_row;  // of b
    for (const auto& [r, c] : b) by_row[r].push_back(c);
    SparseUnits out;
    for (const auto& [r, c] : a) {
        auto it = by_row.find(c);
        if (it == by_row.end()) continue;
        for (long long z : it->second) out.insert({r, z});
    }
    return out;
}

SparseUnits sparse_clip(const SparseUnits& a, long long bound) {
    SparseUnits out;
    for (const auto& [r, c] : a)
        if (r <= bound && c <= bound) out.insert({r, c});
    return out;
}

long long product_safe_bound(const SeriesOperator& s, const SeriesOperator& t,
                             long long n) {
    long long b = n;
    for (const auto& u : s.terms) {
        // rows of s*t coming from u need u's column (the matched index) <= n
        long long jmax = floor_div(n - u.col_offset, u.col_step);
        b = std::min(b, jmax >= 1 ? u.row_at(jmax) : 0);
    }
    for (const auto& w : t.terms) {
        long long jmax = floor_div(n - w.row_offset, w.row_step);
        b = std::min(b, jmax >= 1 ? w.col_at(jmax) : 0);
    }
    return std::max(b, 0LL);
}

}  // namespace ckforge
