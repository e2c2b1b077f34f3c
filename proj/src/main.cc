#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckforge/analysis.hh"
#include "ckforge/ck.hh"
#include "ckforge/families.hh"
#include "ckforge/graph.hh"
#include "ckforge/io.hh"
#include "ckforge/param_matrix.hh"

using namespace ckforge;
using json = nlohmann::ordered_json;

namespace {

// default output directory for commands that pick their own file names
std::string out_dir() {
    const char* env = std::getenv("CKFORGE_OUT_DIR");
    return (env && *env) ? env : ".";
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

// ==================== generate ====================

struct GenerateOpts {
    std::string family;
    int n = 3;
    std::string out;
    std::string dot;
};

int run_generate(const GenerateOpts& o) {
    ColoredGraph g;
    if (o.family == "sq") g = build_sq(o.n);
    else if (o.family == "sq_d") g = orient_sq(o.n);
    else if (o.family == "gpi") g = gpi_graph(o.n);
    else if (o.family == "commutant") g = commutant_sq3d();
    else {
        std::cerr << "unknown family: " << o.family
                  << " (expected sq, sq_d, gpi, commutant)\n";
        return 1;
    }
    emit(graph_to_json(g), o.out);
    if (!o.dot.empty()) write_file(o.dot, to_dot(g, o.family));
    return 0;
}

// ==================== analyze ====================

struct AnalyzeOpts {
    std::string in;
    bool hamiltonian = false;
    bool chromatic = false;
    bool connectivity = false;
    std::string ledger;
    std::string out;
};

int run_analyze(const AnalyzeOpts& o) {
    ColoredGraph g = graph_from_json(read_file(o.in));
    bool all = !o.hamiltonian && !o.chromatic && !o.connectivity;

    json out;
    {
        json jg;
        jg["vertices"] = g.vertices.size();
        jg["edges"] = g.edges.size();
        jg["sources"] = sources(g);
        jg["sinks"] = sinks(g);
        out["graph"] = jg;
    }
    if (all || o.hamiltonian) {
        HamiltonianReport rep = hamiltonian_paths(g, false);
        long long oracle = hamiltonian_count_oracle(g);
        json jh;
        jh["count"] = rep.count;
        jh["oracle"] = oracle;
        jh["agrees"] = rep.count == oracle;
        jh["groupedBySource"] = rep.grouped_by_source;
        out["hamiltonian"] = jh;
    }
    if (all || o.chromatic) {
        VertexColoring vc = chromatic_number_vertex(g);
        EdgeColoring ec = chromatic_index(g);
        json jc;
        jc["vertexNumber"] = vc.count;
        jc["witness"] = vc.color_of;
        jc["index"] = ec.count;
        out["chromatic"] = jc;
    }
    if (all || o.connectivity)
        out["connectivity"] = vertex_connectivity(g);

    emit(out.dump(2) + "\n", o.out);
    if (!o.ledger.empty())
        write_file(o.ledger, ledger_to_json(claim_ledger(4)));
    return 0;
}

// ==================== commutant ====================

struct CommutantOpts {
    std::string in;
    bool stochastic = false;
    bool params = false;
};

int run_commutant(const CommutantOpts& o) {
    std::string text = read_file(o.in);

    if (o.params) {
        // input holds both matrices: {"A": {...}, "C": {...}}
        json v = json::parse(text, nullptr, false);
        if (v.is_discarded() || !v.contains("A") || !v.contains("C")) {
            std::cerr << "--params expects {\"A\":{\"n\",\"rows\"},"
                         "\"C\":{\"n\",\"rows\"}}\n";
            return 1;
        }
        ParamMatrix a = param_matrix_from_json(v["A"].dump());
        ParamMatrix c = param_matrix_from_json(v["C"].dump());
        SolveReport rep = solve_commutation(a, c);

        json out;
        out["solution"] = rep.description;
        out["consistent"] = rep.consistent;
        json cs = json::array();
        for (const AffineExpr& e : rep.constraints.items)
            cs.push_back(to_string(e));
        out["constraints"] = cs;

        // specialize at the extreme solutions and re-verify by integer
        // multiplication
        json specs = json::array();
        for (long long s : {0LL, 1LL}) {
            IntMatrix ci = specialize(c, s, s);
            BilinearMatrix comm = commutator(a, from_int(ci));
            json js;
            js["p"] = s;
            js["q"] = s;
            js["commutes"] = all_zero(comm);
            js["matrix"] = json::parse(int_matrix_to_json(ci));
            specs.push_back(js);
        }
        out["specializations"] = specs;
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    ParamMatrix a = param_matrix_from_json(text);
    if (!a.is_constant()) {
        std::cerr << "commutant search needs a parameter-free matrix; "
                     "use --params to solve constraints instead\n";
        return 1;
    }
    CommutantSearchOptions opts;
    opts.row_col_sums_one = o.stochastic;
    std::vector<IntMatrix> found =
        search_01_commutants(specialize(a, 0, 0), opts);

    json out;
    out["n"] = a.n;
    out["count"] = found.size();
    json arr = json::array();
    for (const IntMatrix& m : found)
        arr.push_back(json::parse(int_matrix_to_json(m)));
    out["commutants"] = arr;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ==================== verify-ck ====================

struct VerifyOpts {
    std::string graph;
    std::string family;
    std::string backend = "exact";
    long long n = 384;
    std::string report;
};

int run_verify(const VerifyOpts& o) {
    ColoredGraph g = graph_from_json(read_file(o.graph));
    std::string ftext = read_file(o.family);

    CKReport rep;
    if (family_json_is_laurent(ftext)) {
        rep = ck_verify_laurent(g, laurent_family_from_json(ftext));
    } else {
        CKSeriesFamily fam = series_family_from_json(ftext);
        if (o.backend == "exact")
            rep = ck_verify_series(g, fam);
        else if (o.backend == "truncated")
            rep = ck_verify_truncated(g, fam, o.n);
        else {
            std::cerr << "unknown backend: " << o.backend
                      << " (expected exact or truncated)\n";
            return 1;
        }
    }

    std::string text = report_to_json(rep);
    if (o.report.empty()) {
        std::cout << text;
    } else {
        write_file(o.report, text);
        std::cout << (rep.clean() ? "verification clean\n"
                                  : "verification found failures\n");
    }
    return rep.clean() ? 0 : 2;
}

// ==================== ledger / report ====================

struct LedgerOpts {
    int nmax = 4;
    std::string out;
    std::string format = "json";
};

int run_ledger(const LedgerOpts& o) {
    ClaimLedger l = claim_ledger(o.nmax);
    std::string path = o.out;
    if (path.empty()) {
        std::string ext = o.format == "json" ? "json"
                          : o.format == "csv" ? "csv"
                                              : "txt";
        path = out_dir() + "/ledger." + ext;
    }
    write_file(path, render_ledger(l, o.format));
    std::cout << "ledger written to " << path << "\n";
    return 0;
}

struct ReportOpts {
    std::string in;
    std::string format = "text";
    std::string out;
};

int run_report(const ReportOpts& o) {
    std::string text = read_file(o.in);
    json v = json::parse(text, nullptr, false);
    if (v.is_discarded()) throw io_error("invalid JSON input");
    std::string rendered;
    if (v.contains("entries"))
        rendered = render_ledger(ledger_from_json(text), o.format);
    else
        rendered = render_report(report_from_json(text), o.format);
    emit(rendered, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact colored-graph families, combinatorial claim checking, and "
        "Cuntz-Krieger relation verification"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* cgen = app.add_subcommand("generate", "construct a named graph");
    cgen->add_option("--family", gen.family, "sq | sq_d | gpi | commutant")
        ->required();
    cgen->add_option("--n", gen.n, "family size parameter");
    cgen->add_option("--out", gen.out, "graph JSON path (default stdout)");
    cgen->add_option("--dot", gen.dot, "also write DOT here");

    AnalyzeOpts an;
    CLI::App* can = app.add_subcommand(
        "analyze", "hamiltonian / chromatic / connectivity analysis");
    can->add_option("--in", an.in, "graph JSON path")->required();
    can->add_flag("--hamiltonian", an.hamiltonian, "count hamiltonian paths");
    can->add_flag("--chromatic", an.chromatic, "chromatic number and index");
    can->add_flag("--connectivity", an.connectivity, "vertex connectivity");
    can->add_option("--ledger", an.ledger, "also write the claim ledger here");
    can->add_option("--out", an.out, "result JSON path (default stdout)");

    CommutantOpts co;
    CLI::App* cco = app.add_subcommand(
        "commutant", "0/1 commutant search or parametrized solving");
    cco->add_option("--in", co.in, "matrix JSON path")->required();
    cco->add_flag("--stochastic", co.stochastic,
                  "restrict to row/column sums one");
    cco->add_flag("--params", co.params,
                  "input {\"A\",\"C\"}: solve the commutation constraints");

    VerifyOpts vo;
    CLI::App* cvo = app.add_subcommand(
        "verify-ck", "check a family against the graph-algebra relations");
    cvo->add_option("--graph", vo.graph, "graph JSON path")->required();
    cvo->add_option("--family", vo.family, "family JSON path")->required();
    cvo->add_option("--backend", vo.backend, "exact | truncated");
    cvo->add_option("--N", vo.n, "truncation window (truncated backend)");
    cvo->add_option("--report", vo.report, "report JSON path (default stdout)");

    LedgerOpts lo;
    CLI::App* clo =
        app.add_subcommand("ledger", "write the numeric-claim ledger");
    clo->add_option("--nmax", lo.nmax, "largest family size (3 or 4)")
        ->check(CLI::Range(3, 4));
    clo->add_option("--out", lo.out,
                    "output path (default ledger.<ext> in $CKFORGE_OUT_DIR)");
    clo->add_option("--format", lo.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    ReportOpts ro;
    CLI::App* cro = app.add_subcommand(
        "report", "re-render a report or ledger JSON file");
    cro->add_option("--in", ro.in, "report/ledger JSON path")->required();
    cro->add_option("--format", ro.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cro->add_option("--out", ro.out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cgen->parsed()) return run_generate(gen);
        if (can->parsed()) return run_analyze(an);
        if (cco->parsed()) return run_commutant(co);
        if (cvo->parsed()) return run_verify(vo);
        if (clo->parsed()) return run_ledger(lo);
        if (cro->parsed()) return run_report(ro);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
