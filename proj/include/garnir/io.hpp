#pragma once

#include <garnir/omega.hpp>
#include <garnir/presentation.hpp>

#include <json.hpp>

#include <ostream>
#include <string>

namespace garnir {

using ordered_json = nlohmann::ordered_json;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline ordered_json to_json(const Partition& p) {
    ordered_json a = ordered_json::array();
    for (int part : p.parts()) a.push_back(part);
    return a;
}

inline ordered_json columns_json(const ColumnTabloid& t) {
    ordered_json cols = ordered_json::array();
    for (const auto& col : t.columns()) {
        ordered_json c = ordered_json::array();
        for (int e : col) c.push_back(e);
        cols.push_back(std::move(c));
    }
    return cols;
}

// --- zero-tuple scans ------------------------------------------------------

/// Header n,m,l,i and one row per zero tuple; byte-stable across runs.
inline void write_scan_csv(const ScanResult& result, std::ostream& out) {
    out << "n,m,l,i\n";
    for (const auto& z : result.zeros)
        out << z.n << ',' << z.m << ',' << z.l << ',' << z.i << '\n';
}

inline std::string scan_summary(const ScanResult& result) {
    std::string s = std::to_string(result.triples.size()) +
                    " triples with zeros; " +
                    std::to_string(result.triples_with_count(1)) +
                    " with one zero; " +
                    std::to_string(result.triples_with_count(2)) + " with two";
    long long more = 0;
    for (const auto& t : result.triples)
        if (t.zero_count > 2) ++more;
    if (more > 0) s += "; " + std::to_string(more) + " with more";
    return s;
}

inline ordered_json scan_to_json(const ScanResult& result) {
    ordered_json j;
    j["claim"] = "parameters (n,m,l,i) with i < m whose eigenvalue vanishes";
    j["n_max"] = result.n_max;
    j["domain"] = result.ell_lt_m ? "l<m" : "l<=m";
    j["total_triples"] = result.total_triples;
    ordered_json zeros = ordered_json::array();
    for (const auto& z : result.zeros)
        zeros.push_back({{"n", z.n}, {"m", z.m}, {"l", z.l}, {"i", z.i}});
    j["zeros"] = std::move(zeros);
    ordered_json triples = ordered_json::array();
    for (const auto& t : result.triples)
        triples.push_back(
            {{"n", t.n}, {"m", t.m}, {"l", t.l}, {"zeros", t.zero_count}});
    j["triples"] = std::move(triples);
    return j;
}

// --- eigenvalue tables -----------------------------------------------------

inline ordered_json omega_to_json(const OmegaTable& table, int l) {
    ordered_json j;
    j["claim"] = "scalar action on each irreducible component of the "
                 "two-column tabloid space";
    j["n"] = table.n();
    j["m"] = table.m();
    j["l"] = l;
    ordered_json values = ordered_json::array();
    for (int i = 0; i <= table.m(); ++i)
        values.push_back({{"i", i}, {"omega", to_string(table.value(l, i))}});
    j["values"] = std::move(values);
    return j;
}

// --- operator matrices -----------------------------------------------------

/// "row col value" per line, columns in order, rows ascending inside each
/// column. Indices are 0-based.
inline void write_matrix_triplets(const OperatorMatrix& op, std::ostream& out) {
    for (int c = 0; c < op.dim(); ++c)
        for (const auto& e : op.column(c))
            out << e.row << ' ' << c << ' ' << e.value << '\n';
}

inline ordered_json matrix_to_json(const OperatorMatrix& op,
                                   bool with_basis = false) {
    ordered_json j;
    j["dim"] = op.dim();
    ordered_json entries = ordered_json::array();
    for (int c = 0; c < op.dim(); ++c)
        for (const auto& e : op.column(c))
            entries.push_back({e.row, c, e.value});
    j["entries"] = std::move(entries);
    if (with_basis) {
        ordered_json basis = ordered_json::array();
        for (int k = 0; k < op.basis().size(); ++k)
            basis.push_back(columns_json(op.basis().at(k)));
        j["basis"] = std::move(basis);
    }
    return j;
}

// --- verdicts --------------------------------------------------------------

inline ordered_json to_json(const PresentationVerdict& v) {
    ordered_json j;
    j["claim"] = "the quotient by the symmetrized exchange relations is the "
                 "Specht module iff every eigenvalue below the top component "
                 "is nonzero";
    j["shape"] = to_json(v.shape);
    j["lhat"] = v.lhat;
    j["predicted"] = v.predicted;
    j["observed"] = v.observed;
    j["dim_m"] = to_string(v.dim_m);
    j["specht_dim"] = to_string(v.specht_dim);
    j["relation_rank"] = to_string(v.relation_rank);
    j["quotient_dim"] = to_string(v.quotient_dim);
    return j;
}

inline ordered_json to_json(const KernelCheckReport& r) {
    ordered_json j;
    j["claim"] = "kernel dimension equals the dimension sum of the "
                 "zero-eigenvalue components";
    j["n"] = r.n;
    j["m"] = r.m;
    j["l"] = r.l;
    j["zero_components"] = r.zero_components;
    j["expected_kernel"] = to_string(r.expected_kernel);
    j["actual_kernel"] = to_string(r.actual_kernel);
    j["ok"] = r.ok;
    return j;
}

}  // namespace garnir
