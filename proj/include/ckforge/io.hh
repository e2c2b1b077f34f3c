#pragma once

#include <stdexcept>
#include <string>

#include "ckforge/analysis.hh"
#include "ckforge/ck.hh"
#include "ckforge/graph.hh"
#include "ckforge/param_matrix.hh"

namespace ckforge {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "e2" sorts before "e10": digit runs compare by value, the rest bytewise
bool natural_less(const std::string& a, const std::string& b);

// ==================== graphs ====================

// {"vertices":[{"id","color","layer"?}],
//  "edges":[{"src","dst","directed","color"?,"id"?,"aliases"?}]}
std::string graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const std::string& text);

// ==================== operator families ====================

// {"edges":{label:{"terms":[{"rowStep","rowOffset","colStep","colOffset"}]}},
//  "projections"?:{vertex:{"rays":[{"step","first"}],"points":[..]}}}
// a family with repeated labels serializes "edges" as a list of
// {"label",...} objects instead, so nothing collapses; both forms parse.
std::string series_family_to_json(const CKSeriesFamily& f);
CKSeriesFamily series_family_from_json(const std::string& text);

// {"k":3,"edges":{label:{"entries":{"(r,c)":{exponent:coefficient}}}},
//  "projections"?:{vertex:{"entries":...}}}
std::string laurent_family_to_json(const CKLaurentFamily& f);
CKLaurentFamily laurent_family_from_json(const std::string& text);

// families are distinguished by the presence of the "k" key
bool family_json_is_laurent(const std::string& text);

// ==================== integer / parametrized matrices ====================

// {"n":8,"rows":[[...]]}; entries are plain integers where constant and
// {"c0","cp","cq"} objects otherwise; parsing accepts any mix
std::string int_matrix_to_json(const IntMatrix& m);
std::string param_matrix_to_json(const ParamMatrix& m);
ParamMatrix param_matrix_from_json(const std::string& text);

// ==================== reports and ledgers ====================

// rows are sorted by subject (natural order) so output is byte-stable;
// diagnostics keep their scan order, which is part of their meaning
std::string report_to_json(const CKReport& r);
CKReport report_from_json(const std::string& text);

// format is one of json, csv, text
std::string render_report(const CKReport& r, const std::string& format);

std::string ledger_to_json(const ClaimLedger& l);
ClaimLedger ledger_from_json(const std::string& text);
std::string render_ledger(const ClaimLedger& l, const std::string& format);

// ==================== files ====================

std::string read_file(const std::string& path);  // throws io_error
void write_file(const std::string& path, const std::string& text);

}  // namespace ckforge
