// Command-line front end: decompose orthogonal transformations of R^{p,q}
// into hyperplane reflections, verify reflector lists, print Householder
// matrices, and fuzz the factorization on random reflection products.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cartan/cartan.hpp"

namespace {

using namespace cartan;

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_mismatch = 3;
constexpr int exit_internal = 4;

struct CommonOpts {
    std::string input = "-";
    std::string format = "text";
    std::string mode; // empty: take the file's mode
    double tol = 0.0; // 0: take the file's tolerance
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemDoc load_doc(const CommonOpts& opt) {
    ProblemDoc doc = parse_problem_text(read_input(opt.input));
    if (!opt.mode.empty())
        doc.mode = opt.mode;
    if (opt.tol > 0.0)
        doc.tolerance = opt.tol;
    return doc;
}

void emit(const std::string& text) { std::cout << text; }

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// The effective setting the factorization runs over: the declared basis if
// it is already orthogonal with invertible vectors, otherwise its
// orthogonalization, with the matrix rewritten accordingly.
template <class S>
struct Prepared {
    OrthogonalBasis<S> basis;
    Matrix<S> matrix; // over `basis`
    bool basis_changed = false;
};

template <class S>
Prepared<S> prepare(const Problem<S>& p) {
    if (!p.matrix)
        throw parse_error("this command needs a matrix");
    const Signature& sig = p.sig;
    if (!p.basis_rows)
        return {OrthogonalBasis<S>::canonical(sig), *p.matrix, false};
    if (OrthogonalBasis<S>::admissible(*p.basis_rows, sig))
        return {OrthogonalBasis<S>::from_vectors(*p.basis_rows, sig), *p.matrix, false};

    Basis<S> declared = Basis<S>::from_vectors(*p.basis_rows, sig);
    OrthogonalBasis<S> ortho = orthogonalize(declared);
    const int n = sig.dim();
    Matrix<S> pb(n, n);
    for (int j = 0; j < n; ++j)
        pb.set_column(j, declared[j]);
    auto pb_inv = inverse(pb);
    if (!pb_inv)
        throw singular_error("declared basis is not invertible");
    Matrix<S> canonical = pb * *p.matrix * *pb_inv;
    Matrix<S> rewritten(n, n);
    for (int j = 0; j < n; ++j)
        rewritten.set_column(j, ortho.coordinates(canonical * ortho[j]));
    return {std::move(ortho), std::move(rewritten), true};
}

template <class S>
int run_decompose(const ProblemDoc& doc, const CommonOpts& opt) {
    Problem<S> p = realize<S>(doc);
    Prepared<S> prep = prepare(p);
    auto map = OrthogonalMap<S>::over_basis(prep.matrix, prep.basis);
    DecompositionReport<S> rep = build_report(map);
    if (prep.basis_changed)
        rep.warnings.push_back("declared basis was not orthogonal; factorization ran over "
                               "its orthogonalization (reported as basis)");
    if (opt.format == "json")
        emit_json(report_to_json(rep, doc, prep.basis));
    else
        emit(report_to_text(rep, doc));
    return exit_ok;
}

// Matrix of phi_{r_1} o ... o phi_{r_m} with respect to an arbitrary
// independent declared basis (rows of `basis_rows`).
template <class S>
Matrix<S> composition_over_basis(const std::vector<Vector<S>>& reflectors,
                                 const std::optional<std::vector<Vector<S>>>& basis_rows,
                                 const Signature& sig) {
    const int n = sig.dim();
    Matrix<S> canonical(n, n);
    for (int j = 0; j < n; ++j) {
        Vector<S> v = Vector<S>::unit(n, j);
        for (auto it = reflectors.rbegin(); it != reflectors.rend(); ++it)
            v = reflect(*it, v, sig);
        canonical.set_column(j, v);
    }
    if (!basis_rows)
        return canonical;
    Matrix<S> pb(n, n);
    for (int j = 0; j < n; ++j)
        pb.set_column(j, (*basis_rows)[static_cast<size_t>(j)]);
    auto pb_inv = inverse(pb);
    if (!pb_inv)
        throw singular_error("declared basis is not invertible");
    return *pb_inv * canonical * pb;
}

template <class S>
int run_verify(const ProblemDoc& doc, const CommonOpts& opt, bool show_householder) {
    Problem<S> p = realize<S>(doc);
    if (!p.matrix)
        throw parse_error("verify needs a matrix");
    if (!p.reflectors)
        throw parse_error("verify needs a reflectors list");
    for (const auto& r : *p.reflectors)
        if (!is_invertible_vector(r, p.sig))
            throw singular_error("reflector " + r.str() + " is not invertible");

    Matrix<S> got = composition_over_basis(*p.reflectors, p.basis_rows, p.sig);
    const Matrix<S>& want = *p.matrix;

    std::optional<std::pair<int, int>> mismatch;
    for (int i = 0; i < want.rows() && !mismatch; ++i)
        for (int j = 0; j < want.cols(); ++j)
            if (got(i, j) != want(i, j)) {
                mismatch = {i, j};
                break;
            }

    nlohmann::json out;
    out["match"] = !mismatch;
    out["reflector_count"] = static_cast<int>(p.reflectors->size());
    if (mismatch) {
        out["first_mismatch"] = {{"row", mismatch->first + 1},
                                 {"column", mismatch->second + 1},
                                 {"expected", to_display(want(mismatch->first, mismatch->second))},
                                 {"actual", to_display(got(mismatch->first, mismatch->second))}};
    }
    if (show_householder) {
        if (!p.basis_rows) {
            auto basis = OrthogonalBasis<S>::canonical(p.sig);
            nlohmann::json hh = nlohmann::json::array();
            for (const auto& r : *p.reflectors)
                hh.push_back(matrix_to_json(householder_matrix(r, basis)));
            out["householder_matrices"] = std::move(hh);
        } else if (OrthogonalBasis<S>::admissible(*p.basis_rows, p.sig)) {
            auto basis = OrthogonalBasis<S>::from_vectors(*p.basis_rows, p.sig);
            nlohmann::json hh = nlohmann::json::array();
            for (const auto& r : *p.reflectors)
                hh.push_back(matrix_to_json(householder_matrix(r, basis)));
            out["householder_matrices"] = std::move(hh);
        } else {
            throw parse_error("householder matrices need an orthogonal basis");
        }
    }

    if (opt.format == "json") {
        emit_json(out);
    } else {
        if (mismatch)
            emit("verify: FAIL at row " + std::to_string(mismatch->first + 1) + ", column " +
                 std::to_string(mismatch->second + 1) + ": expected " +
                 to_display(want(mismatch->first, mismatch->second)) + ", composition gives " +
                 to_display(got(mismatch->first, mismatch->second)) + "\n");
        else
            emit("verify: PASS (" + std::to_string(p.reflectors->size()) +
                 " reflectors reproduce the matrix)\n");
        if (out.contains("householder_matrices"))
            emit(out["householder_matrices"].dump(2) + "\n");
    }
    return mismatch ? exit_mismatch : exit_ok;
}

template <class S>
int run_householder(const ProblemDoc& doc, const CommonOpts& opt) {
    Problem<S> p = realize<S>(doc);
    if (!p.reflectors)
        throw parse_error("householder needs a reflectors list");
    OrthogonalBasis<S> basis = p.basis_rows
                                   ? OrthogonalBasis<S>::from_vectors(*p.basis_rows, p.sig)
                                   : OrthogonalBasis<S>::canonical(p.sig);
    nlohmann::json hh = nlohmann::json::array();
    for (const auto& r : *p.reflectors)
        hh.push_back(matrix_to_json(householder_matrix(r, basis)));
    if (opt.format == "json") {
        emit_json(nlohmann::json{{"householder_matrices", hh}});
    } else {
        for (size_t i = 0; i < p.reflectors->size(); ++i) {
            emit("reflector r" + std::to_string(i + 1) + " = " + (*p.reflectors)[i].str() + "\n");
            emit(householder_matrix((*p.reflectors)[i], basis).str() + "\n");
        }
    }
    return exit_ok;
}

nlohmann::json fuzz_case_json(const Signature& sig, const GeneratedMap<Rational>& gen) {
    nlohmann::json j;
    j["signature"] = {{"p", sig.p}, {"q", sig.q}};
    j["mode"] = "exact";
    j["matrix"] = matrix_to_json(gen.matrix);
    nlohmann::json refl = nlohmann::json::array();
    for (const auto& r : gen.reflectors)
        refl.push_back(vector_to_json(r));
    j["reflectors"] = std::move(refl);
    return j;
}

int run_fuzz(const Signature& sig, int count, int max_reflections, std::uint64_t seed) {
    using S = Rational;
    const int n = sig.dim();
    if (max_reflections > n)
        throw parse_error("max-reflections must be at most p+q");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> klen(0, max_reflections);
    long artinian_total = 0;
    int passed = 0;
    for (int case_index = 0; case_index < count; ++case_index) {
        GeneratedMap<S> gen = random_reflection_product<S>(rng, sig, klen(rng));
        std::string failure;
        try {
            auto map = OrthogonalMap<S>::canonical(gen.matrix, sig);
            ReflectionSequence<S> seq = decompose(map);
            artinian_total += seq.artinian_branches;
            if (seq.count() > n)
                failure = "reflection count exceeds p+q";
            else if (recompose(seq) != map.matrix())
                failure = "recomposition mismatch";
            else if (grade_lower_bound(seq) > seq.count())
                failure = "grade bound exceeds achieved count";
        } catch (const error& e) {
            failure = e.what();
        }
        if (!failure.empty()) {
            std::cerr << "fuzz: case " << case_index << " FAILED (" << failure << "), seed "
                      << seed << "\n";
            std::cerr << fuzz_case_json(sig, gen).dump(2) << "\n";
            return exit_internal;
        }
        ++passed;
    }
    std::cout << "fuzz: signature (" << sig.p << "," << sig.q << "), " << count << " cases, "
              << passed << " passed, artinian_branches " << artinian_total << ", seed " << seed
              << "\n";
    return exit_ok;
}

int dispatch_exit(const error& e) {
    if (dynamic_cast<const internal_error*>(&e)) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    if (dynamic_cast<const orthogonality_error*>(&e)) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_mismatch;
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartan-Dieudonne factorization of orthogonal transformations of R^{p,q}"};
    app.require_subcommand(1);

    CommonOpts opt;
    bool show_householder = false;
    int fuzz_p = 2, fuzz_q = 2, fuzz_count = 100, fuzz_max = -1;
    std::uint64_t fuzz_seed = 1;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("input", opt.input, "problem file (JSON), or - for stdin");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--mode", opt.mode, "scalar mode override")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--tol", opt.tol, "zero-test tolerance (float mode)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* cmd_decompose = app.add_subcommand("decompose", "factor a matrix into reflections");
    add_common(cmd_decompose, true);
    CLI::App* cmd_verify = app.add_subcommand("verify", "check a reflector list against a matrix");
    add_common(cmd_verify, true);
    cmd_verify->add_flag("--householder", show_householder, "include per-reflector matrices");
    CLI::App* cmd_householder =
        app.add_subcommand("householder", "print the matrix of each reflector");
    add_common(cmd_householder, true);
    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "randomized factorization round trips");
    cmd_fuzz->add_option("--p", fuzz_p, "positive part of the signature")->required();
    cmd_fuzz->add_option("--q", fuzz_q, "negative part of the signature")->required();
    cmd_fuzz->add_option("--count", fuzz_count, "number of cases");
    cmd_fuzz->add_option("--max-reflections", fuzz_max, "largest composition length (default p+q)");
    cmd_fuzz->add_option("--seed", fuzz_seed, "RNG seed");
    add_common(cmd_fuzz, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cmd_fuzz)) {
            Signature sig(fuzz_p, fuzz_q);
            if (fuzz_max < 0)
                fuzz_max = sig.dim();
            // The fuzz assertions (exact recomposition, hard count bound)
            // are exact-arithmetic properties; the factorization's internal
            // divisions amplify roundoff past any a-priori tolerance on
            // adversarial random products, so a float run cannot honestly
            // certify them.
            if (opt.mode == "float")
                throw parse_error("fuzz checks exact-arithmetic properties; "
                                  "float mode is for decompose/verify/householder");
            return run_fuzz(sig, fuzz_count, fuzz_max, fuzz_seed);
        }
        ProblemDoc doc = load_doc(opt);
        const bool use_float = doc.mode == "float";
        if (app.got_subcommand(cmd_decompose))
            return use_float ? run_decompose<Approx>(doc, opt) : run_decompose<Rational>(doc, opt);
        if (app.got_subcommand(cmd_verify))
            return use_float ? run_verify<Approx>(doc, opt, show_householder)
                             : run_verify<Rational>(doc, opt, show_householder);
        return use_float ? run_householder<Approx>(doc, opt)
                         : run_householder<Rational>(doc, opt);
    } catch (const error& e) {
        return dispatch_exit(e);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }
}
