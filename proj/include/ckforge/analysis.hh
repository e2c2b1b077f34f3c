#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckforge/graph.hh"

namespace ckforge {

// ==================== hamiltonian paths ====================

struct HamiltonianReport {
    long long count = 0;
    // filled only when emit_paths was requested
    std::optional<std::vector<std::vector<std::string>>> paths;
    // start vertex -> number of paths starting there (nonzero entries only)
    std::map<std::string, long long> grouped_by_source;
};

// exhaustive bitmask backtracking over all ordered start/end pairs;
// <= 24 vertices
HamiltonianReport hamiltonian_paths(const ColoredGraph& g, bool emit_paths);

// independent check: subset dynamic program over (visited-set, end) states;
// <= 20 vertices
long long hamiltonian_count_oracle(const ColoredGraph& g);

// count source->sink paths after deleting every *other* source and sink;
// the total under this looser convention is what some stated path counts
// appear to assume on graphs where the strict count is zero
std::map<std::pair<std::string, std::string>, long long>
hamiltonian_pair_counts(const ColoredGraph& g);

// ==================== closed-form claims ====================

long long formula_edges(int n);          // 1 + (n-1)(4n-3)
long long formula_hpaths_remark(int n);  // 10n + (2n-1)(2n-9)
long long formula_hpaths_claim(int n);   // 7(n+1) + 188(n-3)

// ==================== colorings and connectivity ====================

struct VertexColoring {
    int count = 0;
    std::map<std::string, int> color_of;  // vertex id -> 0..count-1
};

struct EdgeColoring {
    int count = 0;
    // canonical endpoint pair of the underlying undirected edge -> color
    std::map<std::pair<std::string, std::string>, int> color_of;
};

// exact minimum proper vertex coloring of the underlying undirected graph;
// <= 16 vertices
VertexColoring chromatic_number_vertex(const ColoredGraph& g);

// exact minimum proper edge coloring of the underlying undirected graph;
// <= 60 underlying edges
EdgeColoring chromatic_index(const ColoredGraph& g);

// minimum vertex cut of the underlying undirected graph via max-flow on the
// vertex-split network; 0 if disconnected, n-1 for complete graphs
int vertex_connectivity(const ColoredGraph& g);

// ==================== claim ledger ====================

enum class ClaimVerdict { match, mismatch, not_applicable };

const char* verdict_name(ClaimVerdict v);

struct ClaimEntry {
    std::string id;
    std::string stated;    // the value the text asserts
    std::string computed;  // what the exact tools produce
    ClaimVerdict verdict = ClaimVerdict::not_applicable;
    std::string note;  // context: which fixture, which convention, caveats
};

struct ClaimLedger {
    std::vector<ClaimEntry> entries;
    const ClaimEntry* find(const std::string& id) const;
};

// evaluates every stated numeric claim up to family size nmax (3 or 4)
// against the exact tools; verdicts are informational and never throw
ClaimLedger claim_ledger(int nmax);

}  // namespace ckforge
