#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cartan/bilinear.hpp"
#include "cartan/clifford.hpp"
#include "cartan/errors.hpp"
#include "cartan/factorization.hpp"
#include "cartan/scalar.hpp"

namespace cartan {

namespace detail {

template <class S>
S make_small_scalar(long num, long den, double tolerance) {
    if constexpr (is_exact_v<S>) {
        (void)tolerance;
        return S(num, den);
    } else {
        return S(static_cast<double>(num) / static_cast<double>(den), tolerance);
    }
}

} // namespace detail

// Random vector with small rational coordinates (numerators in [-4, 4],
// denominators in {1, 2}), redrawn until invertible. Isotropic draws are
// possible over the integer grid, so retries are bounded.
template <class S>
Vector<S> random_invertible_vector(std::mt19937_64& rng, const Signature& sig,
                                   double tolerance = default_tolerance,
                                   int max_retries = 64) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 2);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        Vector<S> v(sig.dim());
        for (int i = 0; i < sig.dim(); ++i)
            v[i] = detail::make_small_scalar<S>(num(rng), den(rng), tolerance);
        if (is_invertible_vector(v, sig))
            return v;
    }
    throw singular_error("no invertible vector after bounded retries");
}

template <class S>
struct GeneratedMap {
    std::vector<Vector<S>> reflectors;
    Matrix<S> matrix; // canonical coordinates
};

// Canonical matrix of phi_{s_1} o ... o phi_{s_k} for k random reflectors.
template <class S>
GeneratedMap<S> random_reflection_product(std::mt19937_64& rng, const Signature& sig, int k,
                                          double tolerance = default_tolerance) {
    GeneratedMap<S> out{{}, Matrix<S>::identity(sig.dim())};
    for (int i = 0; i < k; ++i)
        out.reflectors.push_back(random_invertible_vector<S>(rng, sig, tolerance));
    const int n = sig.dim();
    for (int j = 0; j < n; ++j) {
        Vector<S> v = Vector<S>::unit(n, j);
        for (auto it = out.reflectors.rbegin(); it != out.reflectors.rend(); ++it)
            v = reflect(*it, v, sig);
        out.matrix.set_column(j, v);
    }
    return out;
}

// True when every basis vector moves by a nonzero isotropic amount, i.e.
// the pivot search of the factorization comes up empty at the top level.
template <class S>
bool no_basis_pivot(const Matrix<S>& m, const OrthogonalBasis<S>& basis) {
    const Signature& sig = basis.signature();
    for (int j = 0; j < basis.dim(); ++j) {
        Vector<S> diff = basis.from_coordinates(m.column(j)) - basis[j];
        if (diff.is_zero() || !is_zero(square(diff, sig)))
            return false;
    }
    return true;
}

struct ArtinianFind {
    std::vector<Vector<Rational>> reflectors; // composition order
    Matrix<Rational> matrix;                  // canonical coordinates
};

// Deterministic brute-force search over R^{2,2} for a reflection product
// with no basis pivot. Pool: primitive invertible vectors with entries in
// {-1, 0, 1}; candidates are pairs of two-reflection products, prefiltered
// by trace (all four differences isotropic forces trace 4). Two-reflection
// products alone can never qualify, so four reflectors is the first size
// that can succeed.
inline std::optional<ArtinianFind> search_artinian_map_2_2() {
    const Signature sig(2, 2);
    const int n = 4;
    using R = Rational;

    std::vector<Vector<R>> pool;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c)
                for (int d = -1; d <= 1; ++d) {
                    Vector<R> v{R(a), R(b), R(c), R(d)};
                    if (v.is_zero() || is_zero(square(v, sig)))
                        continue;
                    // sign-normalize: first nonzero entry positive
                    for (int i = 0; i < n; ++i) {
                        if (is_zero(v[i]))
                            continue;
                        if (v[i] < R(0))
                            v = -v;
                        break;
                    }
                    bool seen = false;
                    for (const auto& u : pool)
                        if (u == v) {
                            seen = true;
                            break;
                        }
                    if (!seen)
                        pool.push_back(v);
                }

    auto reflection_matrix = [&](const Vector<R>& s) {
        Matrix<R> m(n, n);
        for (int j = 0; j < n; ++j)
            m.set_column(j, reflect(s, Vector<R>::unit(n, j), sig));
        return m;
    };

    struct TwoProduct {
        Matrix<R> matrix;
        Vector<R> a, b;
    };
    std::vector<TwoProduct> twos;
    std::set<std::string> seen;
    for (const auto& a : pool)
        for (const auto& b : pool) {
            Matrix<R> m = reflection_matrix(a) * reflection_matrix(b);
            if (seen.insert(m.str()).second)
                twos.push_back({std::move(m), a, b});
        }

    const OrthogonalBasis<R> basis = OrthogonalBasis<R>::canonical(sig);
    for (const auto& left : twos) {
        for (const auto& right : twos) {
            R trace(0);
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < n; ++t)
                    trace += left.matrix(i, t) * right.matrix(t, i);
            if (trace != R(4))
                continue;
            Matrix<R> m = left.matrix * right.matrix;
            if (no_basis_pivot(m, basis))
                return ArtinianFind{{left.a, left.b, right.a, right.b}, std::move(m)};
        }
    }
    return std::nullopt;
}

} // namespace cartan
