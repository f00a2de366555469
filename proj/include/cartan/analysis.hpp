#pragma once

#include <string>
#include <vector>

#include "cartan/bilinear.hpp"
#include "cartan/clifford.hpp"
#include "cartan/errors.hpp"
#include "cartan/factorization.hpp"
#include "cartan/linalg.hpp"

namespace cartan {

// Matrix of the reflection phi_s with respect to an orthogonal basis
// {w_1, ..., w_n} with nonzero squares:
//   entry (l, j), l != j:  -2 B(s,w_j) B(s,w_l) / (s^2 w_l^2)
//   entry (j, j):          -(1/s^2) (B(s,w_j)^2/w_j^2 - sum_{i != j} B(s,w_i)^2/w_i^2)
template <class S>
Matrix<S> householder_matrix(const Vector<S>& s, const OrthogonalBasis<S>& basis) {
    const Signature& sig = basis.signature();
    const int n = basis.dim();
    S s2 = square(s, sig);
    if (s.is_zero() || is_zero(s2))
        throw singular_error("householder matrix needs an invertible vector");

    std::vector<S> beta, ratio; // B(s, w_i) and B(s, w_i)^2 / w_i^2
    beta.reserve(static_cast<size_t>(n));
    ratio.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        beta.push_back(scalar_product(s, basis[i], sig));
        ratio.push_back(beta.back() * beta.back() / basis.vector_square(i));
    }

    Matrix<S> m(n, n);
    for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
            if (l == j)
                continue;
            m(l, j) = S(-2) * beta[j] * beta[l] / (s2 * basis.vector_square(l));
        }
        S off_sum = S(0);
        for (int i = 0; i < n; ++i)
            if (i != j)
                off_sum += ratio[i];
        m(j, j) = -(ratio[j] - off_sum) / s2;
    }
    return m;
}

// Grade of the algebra product of the reflectors: no factorization of the
// same transformation can be shorter than this.
template <class S>
int grade_lower_bound(const std::vector<Vector<S>>& reflectors, const Signature& sig) {
    if (reflectors.empty())
        return 0;
    Multivector<S> product = Multivector<S>::scalar(S(1), sig);
    for (const auto& r : reflectors)
        product = product * Multivector<S>::from_vector(r, sig);
    if (product.is_zero())
        throw internal_error("zero versor product from invertible reflectors");
    return product.grade();
}

template <class S>
int grade_lower_bound(const ReflectionSequence<S>& seq) {
    return grade_lower_bound(seq.reflectors, seq.source.signature());
}

enum class FormClass {
    nondegenerate,
    degenerate,
    undetermined, // float mode: Gram determinant within tolerance of zero
};

inline const char* to_string(FormClass f) {
    switch (f) {
    case FormClass::nondegenerate: return "nondegenerate";
    case FormClass::degenerate: return "degenerate";
    default: return "undetermined";
    }
}

template <class S>
struct KernelInfo {
    int kernel_dim = 0;
    FormClass kernel_form = FormClass::nondegenerate;
    int perp_dim = 0;                  // n - kernel_dim
    std::vector<Vector<S>> kernel_basis; // canonical coordinates

    bool nondegenerate() const { return kernel_form == FormClass::nondegenerate; }
};

// Exact nullspace of T - I together with the classification of the
// restriction of B to it.
template <class S>
KernelInfo<S> kernel_analysis(const OrthogonalMap<S>& m) {
    const int n = m.dim();
    Matrix<S> shifted = m.matrix() - Matrix<S>::identity(n);
    std::vector<Vector<S>> coords = nullspace(std::move(shifted));

    KernelInfo<S> info;
    info.kernel_dim = static_cast<int>(coords.size());
    info.perp_dim = n - info.kernel_dim;
    for (const auto& c : coords)
        info.kernel_basis.push_back(m.basis().from_coordinates(c));

    if (info.kernel_dim == 0) {
        info.kernel_form = FormClass::nondegenerate;
        return info;
    }
    S det = determinant(gram_matrix(info.kernel_basis, m.signature()));
    if constexpr (is_exact_v<S>) {
        info.kernel_form = is_zero(det) ? FormClass::degenerate : FormClass::nondegenerate;
    } else {
        info.kernel_form = is_zero(det) ? FormClass::undetermined : FormClass::nondegenerate;
    }
    return info;
}

template <class S>
struct DecompositionReport {
    ReflectionSequence<S> sequence;
    std::vector<Matrix<S>> householder_matrices; // one per reflector, over the declared basis
    bool recomposition_ok = false;
    int grade_lower_bound = 0;
    int achieved_count = 0;
    KernelInfo<S> kernel;
    bool minimality_certified = false;
    std::vector<std::string> warnings;
};

// Decompose, verify the result two ways (reflection recomposition and the
// product of the Householder matrices), and attach the grade and kernel
// analysis.
template <class S>
DecompositionReport<S> build_report(const OrthogonalMap<S>& m) {
    DecompositionReport<S> rep{decompose(m), {}, false, 0, 0, {}, false, {}};
    const int n = m.dim();

    rep.achieved_count = rep.sequence.count();
    rep.recomposition_ok = recompose(rep.sequence) == m.matrix();
    if (!rep.recomposition_ok)
        throw internal_error("recomposition does not reproduce the source matrix");

    Matrix<S> product = Matrix<S>::identity(n);
    for (const auto& r : rep.sequence.reflectors) {
        rep.householder_matrices.push_back(householder_matrix(r, m.basis()));
        product = product * rep.householder_matrices.back();
    }
    if (product != m.matrix())
        throw internal_error("householder matrix product does not reproduce the source matrix");

    rep.grade_lower_bound = grade_lower_bound(rep.sequence);
    rep.kernel = kernel_analysis(m);

    // Certify minimality only when the grade bound is attained, or the
    // kernel is provably non-degenerate and the count matches its perp
    // dimension; otherwise just report bound and count.
    rep.minimality_certified =
        rep.grade_lower_bound == rep.achieved_count ||
        (rep.kernel.nondegenerate() && rep.achieved_count == n - rep.kernel.kernel_dim);
    if (rep.kernel.kernel_form == FormClass::undetermined)
        rep.warnings.push_back("kernel non-degeneracy undetermined at the working tolerance");
    return rep;
}

} // namespace cartan
