#include "ckforge/ck.hh"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace ckforge {

// ==================== report plumbing ====================

std::string verdict_label(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::defines: return "defines";
        case Verdict::unresolved: return "unresolved";
    }
    return "?";
}

std::string diagnostic_to_string(const Diagnostic& d) {
    switch (d.kind) {
        case Diagnostic::Kind::benign_duplicate:
            return "duplicate label " + d.label + " for edge " + d.edge + ": " +
                   d.detail;
        case Diagnostic::Kind::conflict:
            return "conflict at edge " + d.edge + " (label " + d.label +
                   "): " + d.detail;
        case Diagnostic::Kind::missing_edge:
            return "missing assignment for edge " + d.edge;
        case Diagnostic::Kind::unknown_label:
            return "unknown label " + d.label +
                   (d.detail.empty() ? "" : ": " + d.detail);
    }
    return "?";
}

std::vector<Verdict> CKReport::verdict_vector() const {
    std::vector<Verdict> out;
    for (const auto& r : edge_rows) out.push_back(r.verdict);
    for (const auto& r : vertex_rows) out.push_back(r.verdict);
    for (const auto& r : matrix_rows) out.push_back(r.verdict);
    out.push_back(orthogonality.verdict);
    return out;
}

bool CKReport::clean() const {
    for (Verdict v : verdict_vector())
        if (v == Verdict::fail) return false;
    for (const auto& d : diagnostics)
        if (d.kind != Diagnostic::Kind::benign_duplicate) return false;
    return true;
}

// ==================== backend calculi ====================
// the three backends share one verification skeleton; each supplies the
// operator/projection arithmetic it is exact in. Diag is whatever stands
// for "support of a diagonal projection" in that calculus.

namespace {

// exact congruence arithmetic on canonical diagonal sets
struct ExactCalc {
    using Op = SeriesOperator;
    using Diag = DiagonalSet;
    using Proj = DiagonalSet;

    bool op_eq(const Op& a, const Op& b) const { return a == b; }
    std::string show_op(const Op& a) const { return series_to_string(a); }
    IsometryCheck isometry(const Op& a) const {
        return series_is_partial_isometry(a);
    }
    Diag dom(const Op& a) const { return domain_diagonal(a); }
    Diag ran(const Op& a) const { return range_diagonal(a); }
    Diag to_diag(const Proj& p) const { return p; }
    bool eq(const Diag& a, const Diag& b) const { return diagonal_eq(a, b); }
    std::optional<std::string> overlap(const Diag& a, const Diag& b) const {
        auto hit = diagonal_common(a, b);
        if (!hit) return std::nullopt;
        return "share index " + std::to_string(*hit);
    }
    Diag unite(const std::vector<Diag>& parts) const {
        Diag out = parts.front();
        for (size_t i = 1; i < parts.size(); ++i)
            out = diagonal_union(out, parts[i]);
        return out;
    }
    std::string show(const Diag& d) const { return diagonal_to_string(d); }
};

// finite 0/1 matrices on indices <= n. a truncated term is only trusted up
// to the last index it materialized, so every support carries its own
// validity bound and comparisons are restricted to the smaller bound.
struct CornerCalc {
    long long n = 0;

    using Op = SeriesOperator;
    struct Diag {
        std::set<long long> idx;
        long long bound = 0;
    };
    using Proj = DiagonalSet;

    bool op_eq(const Op& a, const Op& b) const { return a == b; }
    std::string show_op(const Op& a) const { return series_to_string(a); }

    IsometryCheck isometry(const Op& a) const {
        std::map<long long, int> rows, cols;
        for (const auto& t : a.terms)
            for (long long j = 1; t.row_at(j) <= n && t.col_at(j) <= n; ++j) {
                ++rows[t.row_at(j)];
                ++cols[t.col_at(j)];
            }
        std::optional<long long> rw, cw;
        for (const auto& [r, c] : rows)
            if (c > 1) { rw = r; break; }
        for (const auto& [r, c] : cols)
            if (c > 1) { cw = r; break; }
        if (!rw && !cw) return {true, ""};
        bool row_first = rw && (!cw || *rw <= *cw);
        long long at = row_first ? *rw : *cw;
        return {false, std::string(row_first ? "row" : "column") +
                           " collision at " + std::to_string(at)};
    }

    Diag project(const Op& a, bool cols) const {
        Diag out;
        out.bound = n;
        for (const auto& t : a.terms) {
            long long last = 0, j = 1;
            for (; t.row_at(j) <= n && t.col_at(j) <= n; ++j) {
                long long x = cols ? t.col_at(j) : t.row_at(j);
                out.idx.insert(x);
                last = x;
            }
            out.bound = std::min(out.bound, last);
        }
        return out;
    }
    Diag dom(const Op& a) const { return project(a, true); }
    Diag ran(const Op& a) const { return project(a, false); }

    Diag to_diag(const Proj& p) const {
        Diag out;
        out.bound = n;  // an explicit set loses nothing to truncation
        for (const auto& r : p.rays)
            for (long long x = r.first; x <= n; x += r.step) out.idx.insert(x);
        for (long long x : p.points)
            if (x <= n) out.idx.insert(x);
        return out;
    }

    static std::set<long long> clip(const Diag& d, long long b) {
        return {d.idx.begin(), d.idx.upper_bound(b)};
    }
    bool eq(const Diag& a, const Diag& b) const {
        long long bd = std::min(a.bound, b.bound);
        return clip(a, bd) == clip(b, bd);
    }
    std::optional<std::string> overlap(const Diag& a, const Diag& b) const {
        long long bd = std::min(a.bound, b.bound);
        for (long long x : a.idx) {
            if (x > bd) break;
            if (b.idx.count(x)) return "share index " + std::to_string(x);
        }
        return std::nullopt;
    }
    Diag unite(const std::vector<Diag>& parts) const {
        Diag out;
        out.bound = n;
        for (const auto& p : parts) out.bound = std::min(out.bound, p.bound);
        for (const auto& p : parts) {
            auto cl = clip(p, out.bound);
            out.idx.insert(cl.begin(), cl.end());
        }
        return out;
    }
    std::string show(const Diag&) const { return ""; }
};

// exact Laurent-polynomial matrix arithmetic
struct LaurentCalc {
    long long k = 0;

    using Op = LaurentMatrix;
    using Diag = LaurentMatrix;
    using Proj = LaurentMatrix;

    bool op_eq(const Op& a, const Op& b) const { return laurent_eq(a, b); }
    std::string show_op(const Op&) const { return ""; }
    IsometryCheck isometry(const Op& a) const {
        Op aa = laurent_adjoint(a);
        if (laurent_eq(laurent_mul(laurent_mul(a, aa), a), a)) return {true, ""};
        return {false, "S S* S != S"};
    }
    Diag dom(const Op& a) const { return laurent_mul(laurent_adjoint(a), a); }
    Diag ran(const Op& a) const { return laurent_mul(a, laurent_adjoint(a)); }
    Diag to_diag(const Proj& p) const { return p; }
    bool eq(const Diag& a, const Diag& b) const { return laurent_eq(a, b); }
    std::optional<std::string> overlap(const Diag& a, const Diag& b) const {
        if (lm_is_zero(laurent_mul(a, b))) return std::nullopt;
        return "overlap";
    }
    Diag unite(const std::vector<Diag>& parts) const {
        Diag out = parts.front();
        for (size_t i = 1; i < parts.size(); ++i)
            out = laurent_add(out, parts[i]);
        return out;
    }
    std::string show(const Diag&) const { return ""; }
};

// ==================== shared verification skeleton ====================

template <class Calc, class Family>
CKReport verify_impl(const ColoredGraph& g, const Family& fam, bool strict,
                     const Calc& calc) {
    using Diag = typename Calc::Diag;

    CKReport rep;
    const int nv = (int)g.vertices.size();
    const int ne = (int)g.edges.size();

    // positional view: report subjects, label resolution, incidence lists
    std::vector<std::string> eid(ne);
    std::map<std::string, int> by_label;
    for (int i = 0; i < ne; ++i) {
        const Edge& e = g.edges[i];
        eid[i] = e.id.empty() ? "#" + std::to_string(i) : e.id;
        if (!e.id.empty()) by_label.emplace(e.id, i);
        for (const auto& a : e.aliases) by_label.emplace(a, i);
    }
    std::vector<std::vector<int>> outgoing(nv), incoming(nv);
    std::vector<int> esrc(ne), edst(ne);
    for (int i = 0; i < ne; ++i) {
        esrc[i] = g.vertex_index(g.edges[i].src);
        edst[i] = g.vertex_index(g.edges[i].dst);
        outgoing[esrc[i]].push_back(i);
        incoming[edst[i]].push_back(i);
    }
    auto vid = [&](int v) { return g.vertices[v].id; };

    // resolve the assignment list onto edges; first assignment wins
    std::vector<const typename Calc::Op*> op(ne, nullptr);
    for (const auto& a : fam.assignments) {
        auto it = by_label.find(a.label);
        if (it == by_label.end()) {
            rep.diagnostics.push_back({Diagnostic::Kind::unknown_label, a.label,
                                       "", "no edge with this id or alias"});
            continue;
        }
        int e = it->second;
        if (op[e]) {
            if (calc.op_eq(*op[e], a.op)) {
                rep.diagnostics.push_back(
                    {Diagnostic::Kind::benign_duplicate, a.label, eid[e],
                     "same operator as the first assignment"});
            } else {
                std::string kept = calc.show_op(*op[e]);
                std::string detail =
                    kept.empty()
                        ? "conflicting operator; keeping the first assignment"
                        : "conflicting operator; kept " + kept + ", ignored " +
                              calc.show_op(a.op);
                rep.diagnostics.push_back(
                    {Diagnostic::Kind::conflict, a.label, eid[e], detail});
            }
        } else {
            op[e] = &a.op;
        }
    }
    for (int e = 0; e < ne; ++e)
        if (!op[e]) {
            if (strict)
                throw ck_error("missing edge assignment: " + eid[e]);
            rep.diagnostics.push_back(
                {Diagnostic::Kind::missing_edge, "", eid[e], ""});
        }

    // screen for partial isometries; only those produce usable projections
    std::vector<char> usable(ne, 0);
    std::vector<std::string> iso_note(ne);
    std::vector<std::optional<Diag>> dom(ne), ran(ne);
    for (int e = 0; e < ne; ++e) {
        if (!op[e]) continue;
        IsometryCheck c = calc.isometry(*op[e]);
        usable[e] = c.ok;
        iso_note[e] = c.note;
        if (c.ok) {
            dom[e] = calc.dom(*op[e]);
            ran[e] = calc.ran(*op[e]);
        }
    }

    // projection table: explicit entries first, the rest inferred from the
    // first usable incoming edge
    std::vector<std::optional<Diag>> P(nv);
    std::vector<int> rep_edge(nv, -1);
    for (const auto& [name, proj] : fam.projections) {
        int v = g.vertex_index(name);
        if (v < 0) {
            rep.diagnostics.push_back({Diagnostic::Kind::unknown_label, name,
                                       "", "no vertex with this id"});
            continue;
        }
        P[v] = calc.to_diag(proj);
    }
    for (int v = 0; v < nv; ++v) {
        if (P[v]) continue;
        for (int e : incoming[v])
            if (usable[e]) {
                rep_edge[v] = e;
                P[v] = dom[e];
                break;
            }
    }

    // domain rows: S*S against the projection at the head vertex
    for (int e = 0; e < ne; ++e) {
        RelationRow row{eid[e], Verdict::pass, ""};
        if (!op[e]) {
            row.verdict = Verdict::unresolved;
            row.note = "no assignment";
        } else if (!usable[e]) {
            row.verdict = Verdict::fail;
            row.note = "not a partial isometry: " + iso_note[e];
        } else {
            int v = edst[e];
            if (rep_edge[v] == e) {
                row.verdict = Verdict::defines;
                std::string s = calc.show(*dom[e]);
                row.note = s.empty() ? "defines P_" + vid(v)
                                     : "P_" + vid(v) + " := " + s;
            } else if (calc.eq(*dom[e], *P[v])) {
                row.verdict = Verdict::pass;
            } else {
                row.verdict = Verdict::fail;
                std::string s = calc.show(*dom[e]);
                row.note = s.empty() ? "domain != P_" + vid(v)
                                     : "domain " + s + " != P_" + vid(v) +
                                           " " + calc.show(*P[v]);
            }
        }
        rep.edge_rows.push_back(std::move(row));
    }

    // vertex-sum rows: P_v against the orthogonal sum of SS* over emitted
    // edges; a source vertex with no explicit projection defines P_v here
    for (int v = 0; v < nv; ++v) {
        RelationRow row{vid(v), Verdict::pass, ""};
        const auto& grp = outgoing[v];
        if (grp.empty()) {
            row.note = "sink: nothing to emit";
            rep.vertex_rows.push_back(std::move(row));
            continue;
        }
        int bad = -1;
        bool bad_iso = false;
        for (int e : grp)
            if (!op[e] || !usable[e]) {
                bad = e;
                bad_iso = op[e] != nullptr;
                break;
            }
        if (bad >= 0) {
            row.verdict = Verdict::unresolved;
            row.note = bad_iso
                           ? "edge " + eid[bad] + " is not a partial isometry"
                           : "no assignment for edge " + eid[bad];
            rep.vertex_rows.push_back(std::move(row));
            continue;
        }
        std::optional<std::string> clash;
        for (size_t a = 0; a < grp.size() && !clash; ++a)
            for (size_t b = a + 1; b < grp.size() && !clash; ++b) {
                auto w = calc.overlap(*ran[grp[a]], *ran[grp[b]]);
                if (w)
                    clash = "summands " + eid[grp[a]] + "/" + eid[grp[b]] +
                            " " + *w;
            }
        if (clash) {
            row.verdict = Verdict::fail;
            row.note = *clash;
            rep.vertex_rows.push_back(std::move(row));
            continue;
        }
        std::vector<Diag> parts;
        for (int e : grp) parts.push_back(*ran[e]);
        Diag sum = calc.unite(parts);
        if (!P[v]) {
            row.verdict = Verdict::defines;
            std::string s = calc.show(sum);
            row.note = s.empty() ? "defines P_" + vid(v)
                                 : "P_" + vid(v) + " := " + s;
            P[v] = std::move(sum);
        } else if (calc.eq(sum, *P[v])) {
            row.verdict = Verdict::pass;
        } else {
            row.verdict = Verdict::fail;
            std::string s = calc.show(sum);
            row.note = s.empty() ? "sum of ranges != P_" + vid(v)
                                 : "sum of ranges " + s + " != P_" + vid(v) +
                                       " " + calc.show(*P[v]);
        }
        rep.vertex_rows.push_back(std::move(row));
    }

    // matrix rows: the classical form S_e*S_e = sum of S_f S_f* over edges
    // f emitted by the head of e; skipped when the head is a sink
    for (int e = 0; e < ne; ++e) {
        int v = edst[e];
        if (outgoing[v].empty()) continue;
        RelationRow row{eid[e], Verdict::pass, ""};
        if (!op[e]) {
            row.verdict = Verdict::unresolved;
            row.note = "no assignment";
        } else if (!usable[e]) {
            row.verdict = Verdict::unresolved;
            row.note = "not a partial isometry: " + iso_note[e];
        } else {
            const auto& grp = outgoing[v];
            int bad = -1;
            bool bad_iso = false;
            for (int f : grp)
                if (!op[f] || !usable[f]) {
                    bad = f;
                    bad_iso = op[f] != nullptr;
                    break;
                }
            if (bad >= 0) {
                row.verdict = Verdict::unresolved;
                row.note = bad_iso ? "edge " + eid[bad] +
                                         " is not a partial isometry"
                                   : "no assignment for edge " + eid[bad];
            } else {
                std::optional<std::string> clash;
                for (size_t a = 0; a < grp.size() && !clash; ++a)
                    for (size_t b = a + 1; b < grp.size() && !clash; ++b) {
                        auto w = calc.overlap(*ran[grp[a]], *ran[grp[b]]);
                        if (w)
                            clash = "summands " + eid[grp[a]] + "/" +
                                    eid[grp[b]] + " " + *w;
                    }
                if (clash) {
                    row.verdict = Verdict::fail;
                    row.note = *clash;
                } else {
                    std::vector<Diag> parts;
                    for (int f : grp) parts.push_back(*ran[f]);
                    Diag sum = calc.unite(parts);
                    if (calc.eq(*dom[e], sum)) {
                        row.verdict = Verdict::pass;
                    } else {
                        row.verdict = Verdict::fail;
                        std::string s = calc.show(*dom[e]);
                        row.note = s.empty()
                                       ? "domain != sum of ranges at " + vid(v)
                                       : "domain " + s + " != sum " +
                                             calc.show(sum);
                    }
                }
            }
        }
        rep.matrix_rows.push_back(std::move(row));
    }

    // orthogonality: all projections pairwise disjoint, all ranges pairwise
    // disjoint
    std::vector<std::string> collisions;
    for (int a = 0; a < nv; ++a) {
        if (!P[a]) continue;
        for (int b = a + 1; b < nv; ++b) {
            if (!P[b]) continue;
            auto w = calc.overlap(*P[a], *P[b]);
            if (w)
                collisions.push_back("P_" + vid(a) + "/P_" + vid(b) + " " + *w);
        }
    }
    for (int a = 0; a < ne; ++a) {
        if (!usable[a]) continue;
        for (int b = a + 1; b < ne; ++b) {
            if (!usable[b]) continue;
            auto w = calc.overlap(*ran[a], *ran[b]);
            if (w)
                collisions.push_back("ran " + eid[a] + "/" + eid[b] + " " + *w);
        }
    }
    rep.orthogonality.subject = "orthogonality";
    if (collisions.empty()) {
        rep.orthogonality.verdict = Verdict::pass;
    } else {
        rep.orthogonality.verdict = Verdict::fail;
        std::string note;
        for (const auto& c : collisions) {
            if (!note.empty()) note += "; ";
            note += c;
        }
        rep.orthogonality.note = std::move(note);
    }
    return rep;
}

}  // namespace

// ==================== entry points ====================

CKReport ck_verify_series(const ColoredGraph& g, const CKSeriesFamily& fam,
                          bool strict) {
    return verify_impl(g, fam, strict, ExactCalc{});
}

CKReport ck_verify_truncated(const ColoredGraph& g, const CKSeriesFamily& fam,
                             long long n, bool strict) {
    long long maxstep = 0;
    for (const auto& a : fam.assignments)
        maxstep = std::max(maxstep, series_max_step(a.op));
    for (const auto& [name, proj] : fam.projections)
        for (const auto& r : proj.rays) maxstep = std::max(maxstep, r.step);
    if (n < 2 * maxstep)
        throw ck_error("truncation too small: N = " + std::to_string(n) +
                       " < 2 * max step = " + std::to_string(2 * maxstep));
    return verify_impl(g, fam, strict, CornerCalc{n});
}

CKReport ck_verify_laurent(const ColoredGraph& g, const CKLaurentFamily& fam,
                           bool strict) {
    for (const auto& a : fam.assignments)
        if (a.op.k != fam.k)
            throw ck_error("dimension mismatch: edge " + a.label + " has k=" +
                           std::to_string(a.op.k) + ", family k=" +
                           std::to_string(fam.k));
    for (const auto& [name, proj] : fam.projections)
        if (proj.k != fam.k)
            throw ck_error("dimension mismatch: projection " + name +
                           " has k=" + std::to_string(proj.k) + ", family k=" +
                           std::to_string(fam.k));
    return verify_impl(g, fam, strict, LaurentCalc{fam.k});
}

// ==================== cycle-union model ====================

namespace {

struct CycleComp {
    std::vector<int> verts;  // traversal order, starting at the earliest vertex
    std::vector<int> edges;  // edges[i] goes verts[i] -> verts[(i+1) % len]
};

// decompose a graph whose components are simple directed cycles; sorted by
// descending length, then earliest start vertex
std::vector<CycleComp> cycle_components(const ColoredGraph& g) {
    const int nv = (int)g.vertices.size();
    const int ne = (int)g.edges.size();
    if (nv == 0) throw ck_error("not a union of directed cycles: empty graph");
    std::vector<int> out_edge(nv, -1), indeg(nv, 0);
    for (int i = 0; i < ne; ++i) {
        const Edge& e = g.edges[i];
        if (!e.directed)
            throw ck_error("not a union of directed cycles: undirected edge " +
                           (e.id.empty() ? "#" + std::to_string(i) : e.id));
        int s = g.vertex_index(e.src);
        if (out_edge[s] >= 0)
            throw ck_error("not a union of directed cycles: vertex " + e.src +
                           " has out-degree > 1");
        out_edge[s] = i;
        ++indeg[g.vertex_index(e.dst)];
    }
    for (int v = 0; v < nv; ++v)
        if (out_edge[v] < 0 || indeg[v] != 1)
            throw ck_error("not a union of directed cycles: vertex " +
                           g.vertices[v].id + " has in/out-degree != 1");

    // scanning in vertex order reaches every component at its earliest vertex
    std::vector<char> seen(nv, 0);
    std::vector<CycleComp> comps;
    for (int v0 = 0; v0 < nv; ++v0) {
        if (seen[v0]) continue;
        CycleComp c;
        int v = v0;
        do {
            seen[v] = 1;
            c.verts.push_back(v);
            c.edges.push_back(out_edge[v]);
            v = g.vertex_index(g.edges[out_edge[v]].dst);
        } while (v != v0);
        comps.push_back(std::move(c));
    }
    std::stable_sort(comps.begin(), comps.end(),
                     [](const CycleComp& a, const CycleComp& b) {
                         return a.verts.size() > b.verts.size();
                     });
    return comps;
}

}  // namespace

CKLaurentFamily canonical_cycle_family(const ColoredGraph& g) {
    auto comps = cycle_components(g);
    const int nv = (int)g.vertices.size();

    std::vector<long long> pos(nv, 0);
    long long next = 1;
    for (const auto& c : comps)
        for (int v : c.verts) pos[v] = next++;

    CKLaurentFamily fam;
    fam.k = nv;
    for (const auto& c : comps) {
        const size_t len = c.verts.size();
        for (size_t i = 0; i < len; ++i) {
            int e = c.edges[i];
            long long p = pos[c.verts[i]];
            long long q = pos[c.verts[(i + 1) % len]];
            // the edge returning to the start carries the circle variable
            bool closing = i + 1 == len;
            std::string label = g.edges[e].id.empty()
                                    ? "#" + std::to_string(e)
                                    : g.edges[e].id;
            fam.assignments.push_back(
                {label, lm_unit(nv, p, q, closing ? lp_z() : lp_const(1))});
        }
    }
    for (int v = 0; v < nv; ++v)
        fam.projections.push_back(
            {g.vertices[v].id, lm_unit(nv, pos[v], pos[v])});
    return fam;
}

std::string structure_string(const ColoredGraph& g) {
    auto comps = cycle_components(g);
    std::string out;
    for (const auto& c : comps) {
        if (!out.empty()) out += " ⊕ ";
        size_t len = c.verts.size();
        out += len == 1 ? "C(T)" : "M_" + std::to_string(len) + "(C(T))";
    }
    return out;
}

// ==================== family-size bookkeeping ====================

TheoremRanges theorem_ranges(long long n) {
    if (n < 2) throw ck_error("theorem_ranges: n must be >= 2");
    TheoremRanges r;
    r.n = n;
    r.h = 3;  // h_2; then h_{m+1} = h_m + 2m + 1, closing to n^2 - 1
    for (long long m = 2; m < n; ++m) r.h += 2 * m + 1;
    r.i_max = (n * n * n + n * n) * (n - 1) / 2;
    r.d_min = 0;
    r.d_max = n * n - 2;
    return r;
}

// ==================== published fixture families ====================

namespace {

SeriesOperator one_term(long long rs, long long ro, long long cs,
                        long long co) {
    return make_series({make_progression(rs, ro, cs, co)});
}

}  // namespace

CKSeriesFamily sq3d_series_family() {
    // (label, row step, row offset, col offset); every column step is 8
    static const struct {
        const char* label;
        long long rs, ro, co;
    } rows[] = {
        {"e1", 16, -13, 0},  {"e2", 32, -3, -4},   {"e3", 32, -3, -3},
        {"e4", 24, -18, -1}, {"e5", 24, -17, -2},  {"e6", 48, -46, 0},
        {"e7", 48, -46, 0},  {"e8", 24, -19, -6},  {"e9", 24, -13, -1},
        {"e10", 24, -4, -5}, {"e11", 24, -9, 0},   {"e12", 24, -10, 0},
        {"e13", 48, -47, -4}, {"e14", 48, -46, -3}, {"e15", 48, -45, -5},
        {"e16", 48, -44, -6}, {"e17", 32, -4, -2},  {"e18", 24, -2, -4},
        {"e19", 48, -43, -2}, {"e20", 48, -42, -1}, {"e21", 24, -1, -3},
        {"e22", 32, -9, -1},  {"e23", 32, -20, 0},  {"e24", 32, -19, 0},
        {"e25", 24, -5, -6},  {"e26", 24, -6, -5},
    };
    CKSeriesFamily fam;
    for (const auto& r : rows)
        fam.assignments.push_back({r.label, one_term(r.rs, r.ro, 8, r.co)});
    return fam;
}

CKSeriesFamily gpi3_series_family() {
    // the published list in print order. duplicate labels and the second,
    // different definition of S_5 are kept verbatim; edge 10 never appears.
    static const struct {
        const char* label;
        long long rs, ro, co;
    } rows[] = {
        {"e1", 32, -31, 0},  {"f1", 32, -31, 0},
        {"g1", 32, -23, -1}, {"h1", 32, -23, -1},
        {"i1", 32, -7, -2},
        {"j1", 32, -15, -3},
        {"g2", 40, -25, 0},  {"h2", 40, -25, 0},  {"i4", 40, -25, 0},
        {"e2", 40, -32, -1}, {"f2", 40, -32, -1}, {"j4", 40, -32, -1},
        {"j2", 48, -35, -2},
        {"i2", 48, -42, -3},
        {"j3", 48, -10, 0},
        {"i3", 48, -27, -1},
        {"e3", 40, -33, -2}, {"f3", 40, -33, -2},
        {"g3", 40, -24, -3}, {"h3", 40, -24, -3},
        {"i4", 40, -25, 0},
        {"j4", 40, -32, -1},
        {"g4", 48, -35, -2}, {"h4", 48, -35, -2}, {"j2", 48, -35, -2},
        {"e4", 48, -42, -3}, {"f4", 48, -42, -3}, {"i2", 48, -42, -3},
        {"e5", 48, -43, -4}, {"f5", 48, -43, -4},
        {"g5", 48, -34, -4}, {"h5", 48, -34, -4},
        {"i5", 40, -8, -4},
        {"j5", 40, -1, -4},
        {"e6", 32, -28, -5}, {"h6", 32, -28, -5}, {"i6", 32, -28, -5},
        {"j6", 32, -28, -5},
        {"g6", 24, -14, -5}, {"f6", 24, -14, -5},
        {"i6", 32, -28, -5}, {"j6", 32, -28, -5},
        {"e7", 24, -21, -6}, {"h7", 24, -21, -6}, {"i7", 24, -21, -6},
        {"j7", 24, -21, -6},
        {"g7", 32, -20, -6}, {"f7", 32, -20, -6},
        {"i7", 24, -21, -6},
        {"j7", 24, -21, -6},
        {"e8", 24, -22, -7}, {"h8", 24, -22, -7}, {"i8", 24, -22, -7},
        {"j8", 24, -22, -7},
        {"g8", 24, -13, -7}, {"f8", 24, -13, -7},
        {"i8", 24, -22, -7},
        {"j8", 24, -22, -7},
        {"1", 48, -2, -7},   {"14", 48, -11, -7}, {"4", 48, -29, -7},
        {"7", 48, -19, -6},  {"12", 40, -9, -6},
        {"2", 48, -3, -5},   {"11", 48, -26, -5}, {"13", 40, -11, -5},
        {"3", 24, -5, -3},   {"8", 40, -17, -3},  {"9", 32, -12, -3},
        {"5", 24, -6, -2},   {"6", 40, -16, -2},
        {"5", 32, -4, -2},
    };
    CKSeriesFamily fam;
    for (const auto& r : rows)
        fam.assignments.push_back({r.label, one_term(r.rs, r.ro, 8, r.co)});
    return fam;
}

CKLaurentFamily commutant_literal_family() {
    CKLaurentFamily fam;
    fam.k = 3;
    static const struct {
        const char* label;
        long long r, c;
    } rows[] = {
        {"c1", 3, 1}, {"c2", 3, 1}, {"c4", 1, 2}, {"c5", 1, 2},
        {"c7", 2, 3}, {"c6", 2, 3}, {"c8", 1, 3}, {"c9", 1, 3},
    };
    for (const auto& r : rows)
        fam.assignments.push_back({r.label, lm_unit(3, r.r, r.c)});
    return fam;
}

}  // namespace ckforge
