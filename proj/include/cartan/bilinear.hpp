#pragma once

#include <utility>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/linalg.hpp"
#include "cartan/scalar.hpp"

namespace cartan {

// Signature (p, q) of the scalar product space R^{p,q}:
// B(x, y) = sum_{i<p} x_i y_i - sum_{p<=i<p+q} x_i y_i in canonical coordinates.
struct Signature {
    int p = 0;
    int q = 0;

    Signature() = default;
    Signature(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0 || p + q < 1)
            throw dimension_error("signature needs p, q >= 0 and p + q >= 1");
    }

    int dim() const { return p + q; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

template <class S>
S scalar_product(const Vector<S>& x, const Vector<S>& y, const Signature& sig) {
    if (x.size() != sig.dim() || y.size() != sig.dim())
        throw dimension_error("vector does not match signature dimension");
    S acc = S(0);
    for (int i = 0; i < sig.p; ++i)
        acc += x[i] * y[i];
    for (int i = sig.p; i < sig.dim(); ++i)
        acc -= x[i] * y[i];
    return acc;
}

template <class S>
S square(const Vector<S>& x, const Signature& sig) {
    return scalar_product(x, x, sig);
}

struct Isotropy {
    bool isotropic = false;
    bool zero_vector = false; // degenerate input: the zero vector is flagged, not an error
};

template <class S>
Isotropy isotropy(const Vector<S>& x, const Signature& sig) {
    if (x.is_zero())
        return {true, true};
    return {is_zero(square(x, sig)), false};
}

template <class S>
bool is_isotropic(const Vector<S>& x, const Signature& sig) {
    return isotropy(x, sig).isotropic;
}

template <class S>
bool is_invertible_vector(const Vector<S>& x, const Signature& sig) {
    auto iso = isotropy(x, sig);
    return !iso.zero_vector && !iso.isotropic;
}

// diag(1, ..., 1, -1, ..., -1), the matrix of B in canonical coordinates.
template <class S>
Matrix<S> metric_matrix(const Signature& sig) {
    Matrix<S> a(sig.dim(), sig.dim());
    for (int i = 0; i < sig.dim(); ++i)
        a(i, i) = i < sig.p ? S(1) : S(-1);
    return a;
}

template <class S>
Matrix<S> gram_matrix(const std::vector<Vector<S>>& vectors, const Signature& sig) {
    const int n = static_cast<int>(vectors.size());
    Matrix<S> g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g(i, j) = scalar_product(vectors[i], vectors[j], sig);
            g(j, i) = g(i, j);
        }
    return g;
}

// Q^t A Q = A in canonical coordinates.
template <class S>
bool is_orthogonal_map(const Matrix<S>& q, const Signature& sig) {
    if (q.rows() != sig.dim() || q.cols() != sig.dim())
        return false;
    Matrix<S> a = metric_matrix<S>(sig);
    return q.transpose() * a * q == a;
}

// M^t G M = G for a map expressed over a basis with Gram matrix G.
template <class S>
bool preserves_gram(const Matrix<S>& m, const Matrix<S>& gram) {
    return m.transpose() * gram * m == gram;
}

// Largest |(Q^t A Q - A)_{ij}|, for diagnostics on rejected input.
template <class S>
S orthogonality_defect(const Matrix<S>& m, const Matrix<S>& gram) {
    Matrix<S> diff = m.transpose() * gram * m - gram;
    S worst = S(0);
    for (int i = 0; i < diff.rows(); ++i)
        for (int j = 0; j < diff.cols(); ++j) {
            S mag = abs_value(diff(i, j));
            if (worst < mag)
                worst = mag;
        }
    return worst;
}

// An ordered linearly independent family spanning R^{p,q}, held in canonical
// coordinates, with its Gram matrix cached.
template <class S>
class Basis {
public:
    static Basis from_vectors(std::vector<Vector<S>> vectors, const Signature& sig) {
        const int n = sig.dim();
        if (static_cast<int>(vectors.size()) != n)
            throw dimension_error("basis must have p+q vectors");
        Matrix<S> cols(n, n);
        for (int j = 0; j < n; ++j)
            cols.set_column(j, vectors[j]);
        if (is_zero(determinant(cols)))
            throw singular_error("basis vectors are linearly dependent");
        return Basis(std::move(vectors), sig);
    }

    static Basis canonical(const Signature& sig) {
        std::vector<Vector<S>> vs;
        vs.reserve(static_cast<size_t>(sig.dim()));
        for (int i = 0; i < sig.dim(); ++i)
            vs.push_back(Vector<S>::unit(sig.dim(), i));
        return Basis(std::move(vs), sig);
    }

    const std::vector<Vector<S>>& vectors() const { return vectors_; }
    const Vector<S>& operator[](int i) const { return vectors_[static_cast<size_t>(i)]; }
    const Matrix<S>& gram() const { return gram_; }
    const Signature& signature() const { return sig_; }
    int dim() const { return sig_.dim(); }

protected:
    Basis(std::vector<Vector<S>> vectors, const Signature& sig)
        : vectors_(std::move(vectors)), sig_(sig), gram_(gram_matrix(vectors_, sig)) {}

    std::vector<Vector<S>> vectors_;
    Signature sig_;
    Matrix<S> gram_;
};

// A basis that is pairwise B-orthogonal with every vector non-isotropic;
// the form the factorization algorithm works over.
template <class S>
class OrthogonalBasis : public Basis<S> {
public:
    static OrthogonalBasis from_vectors(std::vector<Vector<S>> vectors, const Signature& sig) {
        return OrthogonalBasis(Basis<S>::from_vectors(std::move(vectors), sig));
    }

    static OrthogonalBasis canonical(const Signature& sig) {
        return OrthogonalBasis(Basis<S>::canonical(sig));
    }

    static bool admissible(const std::vector<Vector<S>>& vectors, const Signature& sig) {
        Matrix<S> g = gram_matrix(vectors, sig);
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                if (i == j && is_zero(g(i, i)))
                    return false;
                if (i != j && !is_zero(g(i, j)))
                    return false;
            }
        return true;
    }

    // w_i^2, the nonzero diagonal Gram entries.
    const S& vector_square(int i) const { return this->gram_(i, i); }

    // Coordinates of a canonical-coordinate vector with respect to this
    // basis, via orthogonal projection: coords_i = B(v, w_i) / w_i^2.
    Vector<S> coordinates(const Vector<S>& v) const {
        const int n = this->dim();
        Vector<S> out(n);
        for (int i = 0; i < n; ++i)
            out[i] = scalar_product(v, this->vectors_[i], this->sig_) / vector_square(i);
        return out;
    }

    Vector<S> from_coordinates(const Vector<S>& coords) const {
        const int n = this->dim();
        if (coords.size() != n)
            throw dimension_error("coordinate size mismatch");
        Vector<S> out(n);
        for (int i = 0; i < n; ++i)
            out += coords[i] * this->vectors_[i];
        return out;
    }

private:
    explicit OrthogonalBasis(Basis<S> b) : Basis<S>(std::move(b)) { validate(); }

    void validate() const {
        const Matrix<S>& g = this->gram_;
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) {
                if (i == j && is_zero(g(i, i)))
                    throw singular_error("orthogonal basis has an isotropic vector");
                if (i != j && !is_zero(g(i, j)))
                    throw singular_error("basis is not orthogonal");
            }
    }
};

// Gram-Schmidt adapted to indefinite forms. Vectors are processed in input
// order; when a residual is isotropic it is repaired by adding the residual
// of the smallest later input with a nonzero product against it (one exists
// by non-degeneracy), using r + u, or r - u if r + u is still isotropic --
// at least one of the two is invertible.
template <class S>
OrthogonalBasis<S> orthogonalize(const Basis<S>& basis) {
    const Signature sig = basis.signature();
    const int n = basis.dim();

    std::vector<Vector<S>> accepted;
    std::vector<S> squares;
    auto residual = [&](const Vector<S>& v) {
        Vector<S> r = v;
        for (size_t j = 0; j < accepted.size(); ++j)
            r -= (scalar_product(r, accepted[j], sig) / squares[j]) * accepted[j];
        return r;
    };

    for (int i = 0; i < n; ++i) {
        Vector<S> r = residual(basis[i]);
        if (r.is_zero())
            throw singular_error("dependent input to orthogonalize");
        if (is_zero(square(r, sig))) {
            int partner = -1;
            Vector<S> u(n);
            for (int t = i + 1; t < n; ++t) {
                u = residual(basis[t]);
                if (!is_zero(scalar_product(r, u, sig))) {
                    partner = t;
                    break;
                }
            }
            if (partner < 0)
                throw singular_error("dependent input to orthogonalize");
            Vector<S> repaired = r + u;
            if (is_zero(square(repaired, sig)))
                repaired = r - u;
            r = std::move(repaired);
        }
        squares.push_back(square(r, sig));
        accepted.push_back(std::move(r));
    }
    return OrthogonalBasis<S>::from_vectors(std::move(accepted), sig);
}

} // namespace cartan
