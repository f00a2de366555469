#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cartan/analysis.hpp"
#include "cartan/bilinear.hpp"
#include "cartan/errors.hpp"
#include "cartan/factorization.hpp"
#include "cartan/linalg.hpp"
#include "cartan/scalar.hpp"

namespace cartan {

// A problem file, still mode-neutral: every entry kept as a string. The
// matrix is the matrix of T with respect to the declared basis (canonical
// when absent); basis rows are basis vectors in canonical coordinates.
struct ProblemDoc {
    int p = 0;
    int q = 0;
    std::vector<std::vector<std::string>> matrix; // empty when absent
    std::optional<std::vector<std::vector<std::string>>> basis;
    std::string mode = "exact";
    std::optional<double> tolerance;
    std::optional<std::vector<std::vector<std::string>>> reflectors;
};

namespace detail {

inline std::string json_entry_to_string(const nlohmann::json& j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    if (j.is_number_float()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
        return buf;
    }
    throw parse_error("matrix entries must be strings or numbers");
}

inline std::vector<std::vector<std::string>> string_table(const nlohmann::json& j,
                                                          const char* what) {
    if (!j.is_array())
        throw parse_error(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<std::string>> out;
    for (const auto& row : j) {
        if (!row.is_array())
            throw parse_error(std::string(what) + " must be an array of arrays");
        std::vector<std::string> r;
        for (const auto& e : row)
            r.push_back(json_entry_to_string(e));
        out.push_back(std::move(r));
    }
    return out;
}

inline void check_table_shape(const std::vector<std::vector<std::string>>& t, int rows,
                              int cols, const char* what) {
    if (static_cast<int>(t.size()) != rows)
        throw parse_error(std::string(what) + ": expected " + std::to_string(rows) + " rows");
    for (const auto& r : t)
        if (static_cast<int>(r.size()) != cols)
            throw parse_error(std::string(what) + ": expected " + std::to_string(cols) +
                              " entries per row");
}

} // namespace detail

inline ProblemDoc problem_from_json(const nlohmann::json& j) {
    if (!j.is_object())
        throw parse_error("problem file must be a JSON object");
    if (!j.contains("signature") || !j["signature"].is_object())
        throw parse_error("missing signature object {\"p\": ..., \"q\": ...}");
    ProblemDoc doc;
    const auto& sig = j["signature"];
    if (!sig.contains("p") || !sig.contains("q") || !sig["p"].is_number_integer() ||
        !sig["q"].is_number_integer())
        throw parse_error("signature needs integer fields p and q");
    doc.p = sig["p"].get<int>();
    doc.q = sig["q"].get<int>();
    if (doc.p < 0 || doc.q < 0 || doc.p + doc.q < 1)
        throw parse_error("signature needs p, q >= 0 and p + q >= 1");
    const int n = doc.p + doc.q;

    if (j.contains("matrix")) {
        doc.matrix = detail::string_table(j["matrix"], "matrix");
        detail::check_table_shape(doc.matrix, n, n, "matrix");
    }
    if (j.contains("basis")) {
        doc.basis = detail::string_table(j["basis"], "basis");
        detail::check_table_shape(*doc.basis, n, n, "basis");
    }
    if (j.contains("reflectors")) {
        doc.reflectors = detail::string_table(j["reflectors"], "reflectors");
        for (const auto& r : *doc.reflectors)
            if (static_cast<int>(r.size()) != n)
                throw parse_error("reflectors: expected " + std::to_string(n) +
                                  " coordinates per vector");
    }
    if (j.contains("mode")) {
        doc.mode = j["mode"].get<std::string>();
        if (doc.mode != "exact" && doc.mode != "float")
            throw parse_error("mode must be \"exact\" or \"float\"");
    }
    if (j.contains("tolerance")) {
        if (j["tolerance"].is_number())
            doc.tolerance = j["tolerance"].get<double>();
        else if (j["tolerance"].is_string())
            doc.tolerance = std::strtod(j["tolerance"].get<std::string>().c_str(), nullptr);
        else
            throw parse_error("tolerance must be a number");
        if (*doc.tolerance <= 0.0)
            throw parse_error("tolerance must be positive");
    }
    return doc;
}

inline ProblemDoc parse_problem_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw parse_error("input is not valid JSON");
    return problem_from_json(j);
}

// The document realized over a concrete scalar type.
template <class S>
struct Problem {
    Signature sig;
    std::optional<Matrix<S>> matrix;
    std::optional<std::vector<Vector<S>>> basis_rows;
    std::optional<std::vector<Vector<S>>> reflectors;
    double tolerance = default_tolerance;
};

namespace detail {

template <class S>
Matrix<S> parse_matrix(const std::vector<std::vector<std::string>>& t, double tol) {
    Matrix<S> m(static_cast<int>(t.size()), static_cast<int>(t[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            auto v = parse_scalar<S>(t[static_cast<size_t>(i)][static_cast<size_t>(j)], tol);
            if (!v)
                throw parse_error("bad entry \"" + t[static_cast<size_t>(i)][static_cast<size_t>(j)] +
                                  "\" at row " + std::to_string(i + 1) + ", column " +
                                  std::to_string(j + 1));
            m(i, j) = *v;
        }
    return m;
}

template <class S>
std::vector<Vector<S>> parse_rows(const std::vector<std::vector<std::string>>& t, double tol) {
    std::vector<Vector<S>> out;
    for (const auto& row : t) {
        Vector<S> v(static_cast<int>(row.size()));
        for (int i = 0; i < v.size(); ++i) {
            auto x = parse_scalar<S>(row[static_cast<size_t>(i)], tol);
            if (!x)
                throw parse_error("bad entry \"" + row[static_cast<size_t>(i)] + "\"");
            v[i] = *x;
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

template <class S>
Problem<S> realize(const ProblemDoc& doc) {
    Problem<S> p;
    p.sig = Signature(doc.p, doc.q);
    p.tolerance = doc.tolerance.value_or(default_tolerance);
    double tol = is_exact_v<S> ? 0.0 : p.tolerance;
    if (!doc.matrix.empty())
        p.matrix = detail::parse_matrix<S>(doc.matrix, tol);
    if (doc.basis)
        p.basis_rows = detail::parse_rows<S>(*doc.basis, tol);
    if (doc.reflectors)
        p.reflectors = detail::parse_rows<S>(*doc.reflectors, tol);
    return p;
}

template <class S>
nlohmann::json vector_to_json(const Vector<S>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i)
        out.push_back(to_display(v[i]));
    return out;
}

template <class S>
nlohmann::json matrix_to_json(const Matrix<S>& m) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(to_display(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

// Full report file. Echoes enough of the problem (signature, mode, matrix,
// effective basis, reflectors) that the report itself is a valid input to
// the verify command.
template <class S>
nlohmann::json report_to_json(const DecompositionReport<S>& rep, const ProblemDoc& doc,
                              const OrthogonalBasis<S>& basis) {
    nlohmann::json out;
    out["signature"] = {{"p", doc.p}, {"q", doc.q}};
    out["mode"] = doc.mode;
    if (doc.mode == "float")
        out["tolerance"] = doc.tolerance.value_or(default_tolerance);
    out["matrix"] = matrix_to_json(rep.sequence.source.matrix());
    nlohmann::json basis_rows = nlohmann::json::array();
    for (const auto& w : basis.vectors())
        basis_rows.push_back(vector_to_json(w));
    out["basis"] = std::move(basis_rows);

    nlohmann::json refl = nlohmann::json::array();
    for (const auto& r : rep.sequence.reflectors)
        refl.push_back(vector_to_json(r));
    out["reflectors"] = std::move(refl);

    nlohmann::json hh = nlohmann::json::array();
    for (const auto& m : rep.householder_matrices)
        hh.push_back(matrix_to_json(m));
    out["householder_matrices"] = std::move(hh);

    out["achieved_count"] = rep.achieved_count;
    out["grade_lower_bound"] = rep.grade_lower_bound;
    out["kernel_dim"] = rep.kernel.kernel_dim;
    out["kernel_form"] = to_string(rep.kernel.kernel_form);
    out["kernel_nondegenerate"] = rep.kernel.nondegenerate();
    out["perp_dim"] = rep.kernel.perp_dim;
    out["recomposition_ok"] = rep.recomposition_ok;
    out["artinian_branches"] = rep.sequence.artinian_branches;
    out["minimality_certified"] = rep.minimality_certified;
    out["warnings"] = rep.warnings;
    return out;
}

template <class S>
std::string report_to_text(const DecompositionReport<S>& rep, const ProblemDoc& doc) {
    std::string out;
    out += "signature: R^{" + std::to_string(doc.p) + "," + std::to_string(doc.q) + "}  mode: " +
           doc.mode + "\n";
    out += "reflectors (" + std::to_string(rep.achieved_count) + "):\n";
    for (int i = 0; i < rep.achieved_count; ++i)
        out += "  r" + std::to_string(i + 1) + " = " +
               rep.sequence.reflectors[static_cast<size_t>(i)].str() + "\n";
    out += "achieved_count: " + std::to_string(rep.achieved_count) + "\n";
    out += "grade_lower_bound: " + std::to_string(rep.grade_lower_bound) + "\n";
    out += "kernel: dim " + std::to_string(rep.kernel.kernel_dim) + ", " +
           to_string(rep.kernel.kernel_form) + ", perp_dim " +
           std::to_string(rep.kernel.perp_dim) + "\n";
    out += std::string("recomposition: ") + (rep.recomposition_ok ? "ok" : "MISMATCH") + "\n";
    out += "artinian_branches: " + std::to_string(rep.sequence.artinian_branches) + "\n";
    out += std::string("minimality_certified: ") + (rep.minimality_certified ? "true" : "false") +
           "\n";
    for (const auto& w : rep.warnings)
        out += "warning: " + w + "\n";
    return out;
}

} // namespace cartan
