#pragma once

// Frozen data for the R^{2,3} worked example used across the test suite:
// the transformation T, its two reflection factorizations (canonical basis
// and the orthogonal basis W), and the matrices of every reflector.

#include <sstream>
#include <string>
#include <vector>

#include "cartan/cartan.hpp"

namespace golden {

using cartan::Matrix;
using cartan::OrthogonalBasis;
using cartan::Rational;
using cartan::Signature;
using cartan::Vector;

inline Vector<Rational> vec(const std::string& entries) {
    std::istringstream in(entries);
    std::vector<Rational> out;
    std::string tok;
    while (in >> tok)
        out.push_back(*Rational::parse(tok));
    return Vector<Rational>(std::move(out));
}

inline Matrix<Rational> mat(const std::vector<std::string>& rows) {
    std::vector<Vector<Rational>> parsed;
    for (const auto& r : rows)
        parsed.push_back(vec(r));
    Matrix<Rational> m(static_cast<int>(parsed.size()), parsed.front().size());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = parsed[static_cast<size_t>(i)][j];
    return m;
}

inline const Signature sig23{2, 3};

inline Matrix<Rational> t_e() {
    return mat({"1 5 4 3 0", "-5 1 3 -4 0", "4 3 1 5 0", "3 -4 -5 1 0", "0 0 0 0 -1"});
}

// Reflectors of the canonical-basis factorization T = phi_c1 ... phi_c5.
// The algorithm emits the difference vector -2 e5 in the first slot; the
// hand-picked representative e5 gives the same reflection.
inline Vector<Rational> c1() { return vec("0 0 0 0 1"); }
inline Vector<Rational> c1_emitted() { return vec("0 0 0 0 -2"); }
inline Vector<Rational> c2() { return vec("2 -5 4 3 0"); }
inline Vector<Rational> c3() { return vec("1 0 0 0 0"); }
inline Vector<Rational> c4() { return vec("0 25/2 -7 -23/2 0"); }
inline Vector<Rational> c5() { return vec("0 0 -18/25 24/25 0"); }

inline Matrix<Rational> a1() {
    return mat({"1 0 0 0 0", "0 1 0 0 0", "0 0 1 0 0", "0 0 0 1 0", "0 0 0 0 -1"});
}
inline Matrix<Rational> a2() {
    return mat({"-1 5 4 3 0", "5 -23/2 -10 -15/2 0", "-4 10 9 6 0", "-3 15/2 6 11/2 0",
                "0 0 0 0 1"});
}
inline Matrix<Rational> a3() {
    return mat({"-1 0 0 0 0", "0 1 0 0 0", "0 0 1 0 0", "0 0 0 1 0", "0 0 0 0 1"});
}
inline Matrix<Rational> a4() {
    return mat({"1 0 0 0 0", "0 27/2 7 23/2 0", "0 -7 -73/25 -161/25 0",
                "0 -23/2 -161/25 -479/50 0", "0 0 0 0 1"});
}
inline Matrix<Rational> a5() {
    return mat({"1 0 0 0 0", "0 1 0 0 0", "0 0 7/25 24/25 0", "0 0 24/25 -7/25 0",
                "0 0 0 0 1"});
}

// The orthogonal basis W = {e3+e4-e5, e1+e2, e3+e4+2e5, e3-e4, e1-e2}.
inline std::vector<Vector<Rational>> w_vectors() {
    return {vec("0 0 1 1 -1"), vec("1 1 0 0 0"), vec("0 0 1 1 2"), vec("0 0 1 -1 0"),
            vec("1 -1 0 0 0")};
}
inline OrthogonalBasis<Rational> w_basis() {
    return OrthogonalBasis<Rational>::from_vectors(w_vectors(), sig23);
}
inline Vector<Rational> w_gram_diagonal() { return vec("-3 2 -6 -2 2"); }

inline Vector<Rational> d1() { return vec("7 -1 5 -5 2"); }
inline Vector<Rational> d2() { return vec("26 -8 22 -16 6"); }
inline Vector<Rational> d3() { return vec("-5 5 -7 1 -6"); }

inline Matrix<Rational> b1() {
    return mat({"51/2 -7/2 -35/2 35/2 -7", "-7/2 3/2 5/2 -5/2 1", "35/2 -5/2 -23/2 25/2 -5",
                "-35/2 5/2 25/2 -23/2 5", "7 -1 -5 5 -1"});
}
inline Matrix<Rational> b2() {
    return mat({"347/9 -104/9 -286/9 208/9 -26/3", "-104/9 41/9 88/9 -64/9 8/3",
                "286/9 -88/9 -233/9 176/9 -22/3", "-208/9 64/9 176/9 -119/9 16/3",
                "26/3 -8/3 -22/3 16/3 -1"});
}
inline Matrix<Rational> b3() {
    return mat({"43/18 -25/18 -35/18 5/18 -5/3", "-25/18 43/18 35/18 -5/18 5/3",
                "35/18 -35/18 -31/18 7/18 -7/3", "-5/18 5/18 7/18 17/18 1/3",
                "5/3 -5/3 -7/3 1/3 -1"});
}

inline Matrix<Rational> c_mat1() {
    return mat({"1/3 -2 4/3 10/3 -8/3", "3 10 -6 -15 12", "2/3 2 -1/3 -10/3 8/3",
                "5 15 -10 -24 20", "4 12 -8 -20 17"});
}
inline Matrix<Rational> c_mat2() {
    return mat({"1 0 0 0 0", "0 10 -9 -19 17", "0 3 -2 -19/3 17/3", "0 19 -19 -352/9 323/9",
                "0 17 -17 -323/9 298/9"});
}
inline Matrix<Rational> c_mat3() {
    return mat({"1 0 0 0 0", "0 1 0 0 0", "0 0 -2 -4/3 5/3", "0 0 -4 -7/9 20/9",
                "0 0 -5 -20/9 34/9"});
}

inline Matrix<Rational> t_w() {
    return mat({"1/3 2 4/3 -10/3 8/3", "3 1 3 4 -5", "2/3 1 -1/3 -5/3 4/3", "5 4 5 1 -3",
                "4 5 4 -3 1"});
}

// Exact nullspace of T - I (independently derived): a totally null plane.
inline std::vector<Vector<Rational>> kernel_basis() {
    return {vec("3/5 -4/5 1 0 0"), vec("-4/5 -3/5 0 1 0")};
}

} // namespace golden
