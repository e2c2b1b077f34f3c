#include "ckforge/io.hh"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ckforge {

using json = nlohmann::ordered_json;

// ==================== ordering ====================

bool natural_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        char x = a[i], y = b[j];
        bool dx = std::isdigit(static_cast<unsigned char>(x)) != 0;
        bool dy = std::isdigit(static_cast<unsigned char>(y)) != 0;
        if (dx && dy) {
            // compare whole digit runs by value (leading zeros stripped)
            size_t si = i, sj = j;
            while (si < a.size() && a[si] == '0') ++si;
            while (sj < b.size() && b[sj] == '0') ++sj;
            size_t ei = si, ej = sj;
            while (ei < a.size() &&
                   std::isdigit(static_cast<unsigned char>(a[ei])))
                ++ei;
            while (ej < b.size() &&
                   std::isdigit(static_cast<unsigned char>(b[ej])))
                ++ej;
            if (ei - si != ej - sj) return ei - si < ej - sj;
            int cmp = a.compare(si, ei - si, b, sj, ej - sj);
            if (cmp != 0) return cmp < 0;
            // equal values: fewer leading zeros first, then move on
            if (si - i != sj - j) return si - i < sj - j;
            i = ei;
            j = ej;
            continue;
        }
        if (x != y) return x < y;
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

// ==================== helpers ====================

namespace {

json parse(const std::string& text) {
    json v = json::parse(text, nullptr, false);
    if (v.is_discarded()) throw io_error("invalid JSON input");
    return v;
}

const json& need(const json& v, const char* key) {
    auto it = v.find(key);
    if (it == v.end())
        throw io_error(std::string("missing key \"") + key + "\"");
    return *it;
}

std::string dump(const json& v) { return v.dump(2) + "\n"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

}  // namespace

// ==================== graphs ====================

std::string graph_to_json(const ColoredGraph& g) {
    json out;
    out["vertices"] = json::array();
    for (const Vertex& v : g.vertices) {
        json jv;
        jv["id"] = v.id;
        jv["color"] = color_name(v.color);
        if (v.layer == Layer::outer) jv["layer"] = "outer";
        if (v.layer == Layer::inner) jv["layer"] = "inner";
        out["vertices"].push_back(jv);
    }
    out["edges"] = json::array();
    for (const Edge& e : g.edges) {
        json je;
        je["src"] = e.src;
        je["dst"] = e.dst;
        je["directed"] = e.directed;
        if (e.color != Color::none) je["color"] = color_name(e.color);
        if (!e.id.empty()) je["id"] = e.id;
        if (!e.aliases.empty()) je["aliases"] = e.aliases;
        out["edges"].push_back(je);
    }
    return dump(out);
}

ColoredGraph graph_from_json(const std::string& text) {
    json v = parse(text);
    std::vector<Vertex> vs;
    for (const json& jv : need(v, "vertices")) {
        Vertex vert;
        vert.id = need(jv, "id").get<std::string>();
        if (jv.contains("color"))
            vert.color = color_from_name(jv["color"].get<std::string>());
        if (jv.contains("layer")) {
            std::string l = jv["layer"].get<std::string>();
            if (l == "outer") vert.layer = Layer::outer;
            else if (l == "inner") vert.layer = Layer::inner;
            else throw io_error("unknown layer: " + l);
        }
        vs.push_back(std::move(vert));
    }
    std::vector<Edge> es;
    for (const json& je : need(v, "edges")) {
        Edge e;
        e.src = need(je, "src").get<std::string>();
        e.dst = need(je, "dst").get<std::string>();
        if (je.contains("directed")) e.directed = je["directed"].get<bool>();
        if (je.contains("color"))
            e.color = color_from_name(je["color"].get<std::string>());
        if (je.contains("id")) e.id = je["id"].get<std::string>();
        if (je.contains("aliases"))
            e.aliases = je["aliases"].get<std::vector<std::string>>();
        es.push_back(std::move(e));
    }
    return make_graph(std::move(vs), std::move(es));
}

// ==================== series families ====================

namespace {

json terms_to_json(const SeriesOperator& op) {
    json terms = json::array();
    for (const ProgressionPair& t : op.terms) {
        json jt;
        jt["rowStep"] = t.row_step;
        jt["rowOffset"] = t.row_offset;
        jt["colStep"] = t.col_step;
        jt["colOffset"] = t.col_offset;
        terms.push_back(jt);
    }
    return terms;
}

SeriesOperator terms_from_json(const json& terms) {
    std::vector<ProgressionPair> ts;
    for (const json& jt : terms)
        ts.push_back(make_progression(need(jt, "rowStep").get<long long>(),
                                      need(jt, "rowOffset").get<long long>(),
                                      need(jt, "colStep").get<long long>(),
                                      need(jt, "colOffset").get<long long>()));
    return make_series(std::move(ts));
}

json diagonal_to_json(const DiagonalSet& d) {
    json out;
    out["rays"] = json::array();
    for (const DiagonalRay& r : d.rays) {
        json jr;
        jr["step"] = r.step;
        jr["first"] = r.first;
        out["rays"].push_back(jr);
    }
    out["points"] = d.points;
    return out;
}

DiagonalSet diagonal_from_json(const json& v) {
    std::vector<DiagonalRay> rays;
    if (v.contains("rays"))
        for (const json& jr : v["rays"])
            rays.push_back({need(jr, "step").get<long long>(),
                            need(jr, "first").get<long long>()});
    std::vector<long long> points;
    if (v.contains("points"))
        points = v["points"].get<std::vector<long long>>();
    return make_diagonal(std::move(rays), std::move(points));
}

}  // namespace

std::string series_family_to_json(const CKSeriesFamily& f) {
    json out;
    bool dup = false;
    {
        std::set<std::string> seen;
        for (const auto& a : f.assignments)
            if (!seen.insert(a.label).second) dup = true;
    }
    if (dup) {
        // listing order with repeats preserved
        json arr = json::array();
        for (const auto& a : f.assignments) {
            json ja;
            ja["label"] = a.label;
            ja["terms"] = terms_to_json(a.op);
            arr.push_back(ja);
        }
        out["edges"] = arr;
    } else {
        json obj = json::object();
        for (const auto& a : f.assignments)
            obj[a.label] = json{{"terms", terms_to_json(a.op)}};
        out["edges"] = obj;
    }
    if (!f.projections.empty()) {
        json pr = json::object();
        for (const auto& [vertex, diag] : f.projections)
            pr[vertex] = diagonal_to_json(diag);
        out["projections"] = pr;
    }
    return dump(out);
}

CKSeriesFamily series_family_from_json(const std::string& text) {
    json v = parse(text);
    CKSeriesFamily fam;
    const json& edges = need(v, "edges");
    if (edges.is_array()) {
        for (const json& ja : edges)
            fam.assignments.push_back(
                {need(ja, "label").get<std::string>(),
                 terms_from_json(need(ja, "terms"))});
    } else {
        for (auto it = edges.begin(); it != edges.end(); ++it)
            fam.assignments.push_back(
                {it.key(), terms_from_json(need(it.value(), "terms"))});
    }
    if (v.contains("projections"))
        for (auto it = v["projections"].begin(); it != v["projections"].end();
             ++it)
            fam.projections.push_back({it.key(), diagonal_from_json(*it)});
    return fam;
}

// ==================== Laurent families ====================

namespace {

json laurent_matrix_to_json(const LaurentMatrix& m) {
    json entries = json::object();
    for (long long r = 1; r <= m.k; ++r)
        for (long long c = 1; c <= m.k; ++c) {
            const LaurentPoly& p = m.entries[r - 1][c - 1];
            if (p.is_zero()) continue;
            json cell = json::object();
            for (const auto& [exp, coeff] : p.coeffs)
                cell[std::to_string(exp)] = coeff;
            entries["(" + std::to_string(r) + "," + std::to_string(c) + ")"] =
                cell;
        }
    return json{{"entries", entries}};
}

LaurentMatrix laurent_matrix_from_json(const json& v, long long k) {
    LaurentMatrix m = lm_zero(k);
    if (!v.contains("entries")) return m;
    for (auto it = v["entries"].begin(); it != v["entries"].end(); ++it) {
        long long r = 0, c = 0;
        if (std::sscanf(it.key().c_str(), "(%lld,%lld)", &r, &c) != 2)
            throw io_error("bad matrix-entry key: " + it.key());
        if (r < 1 || r > k || c < 1 || c > k)
            throw io_error("matrix-entry key out of range: " + it.key());
        LaurentPoly p;
        for (auto ce = it->begin(); ce != it->end(); ++ce) {
            long long coeff = ce->get<long long>();
            if (coeff != 0) p.coeffs[std::stoll(ce.key())] = coeff;
        }
        m.entries[r - 1][c - 1] = std::move(p);
    }
    return m;
}

}  // namespace

std::string laurent_family_to_json(const CKLaurentFamily& f) {
    json out;
    out["k"] = f.k;
    json obj = json::object();
    for (const auto& a : f.assignments) obj[a.label] = laurent_matrix_to_json(a.op);
    out["edges"] = obj;
    if (!f.projections.empty()) {
        json pr = json::object();
        for (const auto& [vertex, m] : f.projections)
            pr[vertex] = laurent_matrix_to_json(m);
        out["projections"] = pr;
    }
    return dump(out);
}

CKLaurentFamily laurent_family_from_json(const std::string& text) {
    json v = parse(text);
    CKLaurentFamily fam;
    fam.k = need(v, "k").get<long long>();
    if (fam.k < 1) throw io_error("laurent family needs k >= 1");
    const json& edges = need(v, "edges");
    for (auto it = edges.begin(); it != edges.end(); ++it)
        fam.assignments.push_back(
            {it.key(), laurent_matrix_from_json(it.value(), fam.k)});
    if (v.contains("projections"))
        for (auto it = v["projections"].begin(); it != v["projections"].end();
             ++it)
            fam.projections.push_back(
                {it.key(), laurent_matrix_from_json(*it, fam.k)});
    return fam;
}

bool family_json_is_laurent(const std::string& text) {
    json v = parse(text);
    return v.is_object() && v.contains("k");
}

// ==================== matrices ====================

std::string int_matrix_to_json(const IntMatrix& m) {
    json out;
    out["n"] = m.size();
    json rows = json::array();
    for (const auto& r : m) rows.push_back(r);
    out["rows"] = rows;
    return dump(out);
}

std::string param_matrix_to_json(const ParamMatrix& m) {
    json out;
    out["n"] = m.n;
    json rows = json::array();
    for (const auto& row : m.entries) {
        json jr = json::array();
        for (const AffineExpr& e : row) {
            if (e.is_constant())
                jr.push_back(e.c0);
            else
                jr.push_back(json{{"c0", e.c0}, {"cp", e.cp}, {"cq", e.cq}});
        }
        rows.push_back(jr);
    }
    out["rows"] = rows;
    return dump(out);
}

ParamMatrix param_matrix_from_json(const std::string& text) {
    json v = parse(text);
    long long n = need(v, "n").get<long long>();
    std::vector<std::vector<AffineExpr>> entries;
    for (const json& jr : need(v, "rows")) {
        std::vector<AffineExpr> row;
        for (const json& je : jr) {
            AffineExpr e;
            if (je.is_number_integer()) {
                e.c0 = je.get<long long>();
            } else if (je.is_object()) {
                if (je.contains("c0")) e.c0 = je["c0"].get<long long>();
                if (je.contains("cp")) e.cp = je["cp"].get<long long>();
                if (je.contains("cq")) e.cq = je["cq"].get<long long>();
            } else {
                throw io_error("matrix entries must be integers or objects");
            }
            row.push_back(e);
        }
        entries.push_back(std::move(row));
    }
    if (static_cast<long long>(entries.size()) != n)
        throw io_error("matrix row count disagrees with n");
    for (const auto& r : entries)
        if (static_cast<long long>(r.size()) != n)
            throw io_error("matrix is not square");
    return make_param_matrix(std::move(entries));
}

// ==================== reports ====================

namespace {

std::vector<RelationRow> sorted_rows(std::vector<RelationRow> rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const RelationRow& a, const RelationRow& b) {
                         return natural_less(a.subject, b.subject);
                     });
    return rows;
}

json rows_to_json(const std::vector<RelationRow>& rows) {
    json arr = json::array();
    for (const RelationRow& r : sorted_rows(rows)) {
        json jr;
        jr["subject"] = r.subject;
        jr["verdict"] = verdict_label(r.verdict);
        jr["note"] = r.note;
        arr.push_back(jr);
    }
    return arr;
}

Verdict verdict_from_label(const std::string& s) {
    if (s == "pass") return Verdict::pass;
    if (s == "fail") return Verdict::fail;
    if (s == "defines") return Verdict::defines;
    if (s == "unresolved") return Verdict::unresolved;
    throw io_error("unknown verdict: " + s);
}

const char* kind_name(Diagnostic::Kind k) {
    switch (k) {
        case Diagnostic::Kind::benign_duplicate: return "benign_duplicate";
        case Diagnostic::Kind::conflict: return "conflict";
        case Diagnostic::Kind::missing_edge: return "missing_edge";
        case Diagnostic::Kind::unknown_label: return "unknown_label";
    }
    return "unknown_label";
}

Diagnostic::Kind kind_from_name(const std::string& s) {
    if (s == "benign_duplicate") return Diagnostic::Kind::benign_duplicate;
    if (s == "conflict") return Diagnostic::Kind::conflict;
    if (s == "missing_edge") return Diagnostic::Kind::missing_edge;
    if (s == "unknown_label") return Diagnostic::Kind::unknown_label;
    throw io_error("unknown diagnostic kind: " + s);
}

std::vector<RelationRow> rows_from_json(const json& arr) {
    std::vector<RelationRow> rows;
    for (const json& jr : arr)
        rows.push_back({need(jr, "subject").get<std::string>(),
                        verdict_from_label(need(jr, "verdict").get<std::string>()),
                        need(jr, "note").get<std::string>()});
    return rows;
}

}  // namespace

std::string report_to_json(const CKReport& r) {
    json out;
    out["edgeRows"] = rows_to_json(r.edge_rows);
    out["vertexRows"] = rows_to_json(r.vertex_rows);
    out["matrixRows"] = rows_to_json(r.matrix_rows);
    if (!r.orthogonality.subject.empty()) {
        json jo;
        jo["subject"] = r.orthogonality.subject;
        jo["verdict"] = verdict_label(r.orthogonality.verdict);
        jo["note"] = r.orthogonality.note;
        out["orthogonality"] = jo;
    }
    json diags = json::array();
    for (const Diagnostic& d : r.diagnostics) {
        json jd;
        jd["kind"] = kind_name(d.kind);
        jd["label"] = d.label;
        jd["edge"] = d.edge;
        jd["detail"] = d.detail;
        diags.push_back(jd);
    }
    out["diagnostics"] = diags;
    out["clean"] = r.clean();
    return dump(out);
}

CKReport report_from_json(const std::string& text) {
    json v = parse(text);
    CKReport r;
    if (v.contains("edgeRows")) r.edge_rows = rows_from_json(v["edgeRows"]);
    if (v.contains("vertexRows"))
        r.vertex_rows = rows_from_json(v["vertexRows"]);
    if (v.contains("matrixRows"))
        r.matrix_rows = rows_from_json(v["matrixRows"]);
    if (v.contains("orthogonality")) {
        const json& jo = v["orthogonality"];
        r.orthogonality = {
            need(jo, "subject").get<std::string>(),
            verdict_from_label(need(jo, "verdict").get<std::string>()),
            need(jo, "note").get<std::string>()};
    }
    if (v.contains("diagnostics"))
        for (const json& jd : v["diagnostics"])
            r.diagnostics.push_back(
                {kind_from_name(need(jd, "kind").get<std::string>()),
                 need(jd, "label").get<std::string>(),
                 need(jd, "edge").get<std::string>(),
                 need(jd, "detail").get<std::string>()});
    return r;
}

namespace {

void csv_rows(std::ostream& os, const char* section,
              const std::vector<RelationRow>& rows) {
    for (const RelationRow& r : sorted_rows(rows))
        os << section << ',' << csv_field(r.subject) << ','
           << verdict_label(r.verdict) << ',' << csv_field(r.note) << '\n';
}

std::string report_to_csv(const CKReport& r) {
    std::ostringstream os;
    os << "section,subject,verdict,note\n";
    csv_rows(os, "edge", r.edge_rows);
    csv_rows(os, "vertex", r.vertex_rows);
    csv_rows(os, "matrix", r.matrix_rows);
    if (!r.orthogonality.subject.empty())
        os << "orthogonality," << csv_field(r.orthogonality.subject) << ','
           << verdict_label(r.orthogonality.verdict) << ','
           << csv_field(r.orthogonality.note) << '\n';
    for (const Diagnostic& d : r.diagnostics)
        os << "diagnostic," << csv_field(d.edge.empty() ? d.label : d.edge)
           << ',' << kind_name(d.kind) << ','
           << csv_field(diagnostic_to_string(d)) << '\n';
    return os.str();
}

void text_rows(std::ostream& os, const std::vector<RelationRow>& rows) {
    for (const RelationRow& r : sorted_rows(rows)) {
        os << "  " << r.subject << ": " << verdict_label(r.verdict);
        if (!r.note.empty()) os << "  " << r.note;
        os << '\n';
    }
}

std::string report_to_text(const CKReport& r) {
    std::ostringstream os;
    os << "domain relations (S*S = projection at the head):\n";
    text_rows(os, r.edge_rows);
    os << "vertex sums (projection = sum of emitted ranges):\n";
    text_rows(os, r.vertex_rows);
    os << "matrix-form rows:\n";
    text_rows(os, r.matrix_rows);
    if (!r.orthogonality.subject.empty()) {
        os << "orthogonality: " << verdict_label(r.orthogonality.verdict);
        if (!r.orthogonality.note.empty()) os << "  " << r.orthogonality.note;
        os << '\n';
    }
    if (!r.diagnostics.empty()) {
        os << "diagnostics:\n";
        for (const Diagnostic& d : r.diagnostics)
            os << "  " << diagnostic_to_string(d) << '\n';
    }
    int fails = 0;
    for (Verdict v : r.verdict_vector())
        if (v == Verdict::fail) ++fails;
    os << "result: "
       << (r.clean() ? "clean" : std::to_string(fails) + " failing rows")
       << '\n';
    return os.str();
}

}  // namespace

std::string render_report(const CKReport& r, const std::string& format) {
    if (format == "json") return report_to_json(r);
    if (format == "csv") return report_to_csv(r);
    if (format == "text") return report_to_text(r);
    throw io_error("unsupported report format: " + format);
}

// ==================== ledgers ====================

std::string ledger_to_json(const ClaimLedger& l) {
    json out;
    json arr = json::array();
    for (const ClaimEntry& e : l.entries) {
        json je;
        je["id"] = e.id;
        je["stated"] = e.stated;
        je["computed"] = e.computed;
        je["verdict"] = verdict_name(e.verdict);
        je["note"] = e.note;
        arr.push_back(je);
    }
    out["entries"] = arr;
    return dump(out);
}

ClaimLedger ledger_from_json(const std::string& text) {
    json v = parse(text);
    ClaimLedger l;
    for (const json& je : need(v, "entries")) {
        ClaimEntry e;
        e.id = need(je, "id").get<std::string>();
        e.stated = need(je, "stated").get<std::string>();
        e.computed = need(je, "computed").get<std::string>();
        std::string verdict = need(je, "verdict").get<std::string>();
        if (verdict == "match") e.verdict = ClaimVerdict::match;
        else if (verdict == "mismatch") e.verdict = ClaimVerdict::mismatch;
        else if (verdict == "not-applicable")
            e.verdict = ClaimVerdict::not_applicable;
        else throw io_error("unknown ledger verdict: " + verdict);
        e.note = need(je, "note").get<std::string>();
        l.entries.push_back(std::move(e));
    }
    return l;
}

std::string render_ledger(const ClaimLedger& l, const std::string& format) {
    if (format == "json") return ledger_to_json(l);
    if (format == "csv") {
        std::ostringstream os;
        os << "id,stated,computed,verdict,note\n";
        for (const ClaimEntry& e : l.entries)
            os << csv_field(e.id) << ',' << csv_field(e.stated) << ','
               << csv_field(e.computed) << ',' << verdict_name(e.verdict)
               << ',' << csv_field(e.note) << '\n';
        return os.str();
    }
    if (format == "text") {
        std::ostringstream os;
        for (const ClaimEntry& e : l.entries) {
            os << e.id << ": stated " << e.stated << ", computed "
               << e.computed << " -> " << verdict_name(e.verdict);
            if (!e.note.empty()) os << "  (" << e.note << ")";
            os << '\n';
        }
        return os.str();
    }
    throw io_error("unsupported ledger format: " + format);
}

// ==================== files ====================

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot write " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

}  // namespace ckforge
