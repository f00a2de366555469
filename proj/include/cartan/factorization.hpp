#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartan/bilinear.hpp"
#include "cartan/clifford.hpp"
#include "cartan/errors.hpp"
#include "cartan/linalg.hpp"

namespace cartan {

// An orthogonal transformation given by its matrix with respect to an
// orthogonal non-isotropic basis (columns = coordinates of the images of
// the basis vectors). Construction validates M^t G M = G.
template <class S>
class OrthogonalMap {
public:
    static OrthogonalMap over_basis(Matrix<S> matrix, OrthogonalBasis<S> basis) {
        const int n = basis.dim();
        if (matrix.rows() != n || matrix.cols() != n)
            throw dimension_error("map matrix does not match basis dimension");
        if (!preserves_gram(matrix, basis.gram()))
            throw orthogonality_error(
                "matrix does not preserve the bilinear form; max defect entry = " +
                to_display(orthogonality_defect(matrix, basis.gram())));
        return OrthogonalMap(std::move(matrix), std::move(basis));
    }

    static OrthogonalMap canonical(Matrix<S> matrix, const Signature& sig) {
        return over_basis(std::move(matrix), OrthogonalBasis<S>::canonical(sig));
    }

    static OrthogonalMap identity(OrthogonalBasis<S> basis) {
        int n = basis.dim();
        return OrthogonalMap(Matrix<S>::identity(n), std::move(basis));
    }

    const Signature& signature() const { return basis_.signature(); }
    const OrthogonalBasis<S>& basis() const { return basis_; }
    const Matrix<S>& matrix() const { return matrix_; }
    int dim() const { return basis_.dim(); }

    // T(w_j) in canonical coordinates.
    const Vector<S>& image(int j) const { return images_[static_cast<size_t>(j)]; }

    // The matrix of T in canonical coordinates.
    Matrix<S> canonical_matrix() const {
        const int n = dim();
        Matrix<S> p(n, n), q(n, n);
        for (int j = 0; j < n; ++j) {
            p.set_column(j, basis_[j]);
            q.set_column(j, images_[static_cast<size_t>(j)]);
        }
        auto pinv = inverse(p);
        if (!pinv)
            throw internal_error("basis matrix not invertible");
        return q * *pinv;
    }

    // The same transformation after left-composing with the reflection phi_s:
    // images become phi_s(T(w_j)).
    OrthogonalMap left_reflect(const Vector<S>& s) const {
        const int n = dim();
        std::vector<Vector<S>> images;
        images.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            images.push_back(reflect(s, image(j), signature()));
        Matrix<S> m(n, n);
        for (int j = 0; j < n; ++j)
            m.set_column(j, basis_.coordinates(images[static_cast<size_t>(j)]));
        return over_basis(std::move(m), basis_);
    }

private:
    OrthogonalMap(Matrix<S> matrix, OrthogonalBasis<S> basis)
        : basis_(std::move(basis)), matrix_(std::move(matrix)) {
        const int n = basis_.dim();
        images_.reserve(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j)
            images_.push_back(basis_.from_coordinates(matrix_.column(j)));
    }

    OrthogonalBasis<S> basis_;
    Matrix<S> matrix_;
    std::vector<Vector<S>> images_;
};

enum class StepKind { identity, single, pair };

// One round of the factorization at a pivot basis vector w:
//   identity      M(w) = w                         no reflector
//   single        c = M(w) - w invertible          phi_c
//   pair          c isotropic, d = M(w) + w        phi_w after phi_d
// In all three cases composing the step's reflections after M fixes w.
template <class S>
struct ReflectionStep {
    StepKind kind;
    int pivot;
    // Reflectors in composition order; {} / {c} / {d, w}.
    std::vector<Vector<S>> reflectors;
};

template <class S>
struct ReflectionSequence {
    // T = phi_{r_1} o phi_{r_2} o ... o phi_{r_m}.
    std::vector<Vector<S>> reflectors;
    std::vector<ReflectionStep<S>> steps;
    OrthogonalMap<S> source;
    // Rounds where no pivot existed and the pair construction was forced.
    int artinian_branches = 0;
    // n for the pivoting algorithm, 2n for the fixed-order one.
    int bound = 0;

    int count() const { return static_cast<int>(reflectors.size()); }
};

template <class S>
ReflectionStep<S> step_reflector(const OrthogonalMap<S>& m, int pivot) {
    const Signature& sig = m.signature();
    const Vector<S>& w = m.basis()[pivot];
    if (!is_invertible_vector(w, sig))
        throw singular_error("pivot basis vector is isotropic");
    Vector<S> diff = m.image(pivot) - w;
    if (diff.is_zero())
        return {StepKind::identity, pivot, {}};
    if (!is_zero(square(diff, sig)))
        return {StepKind::single, pivot, {std::move(diff)}};
    Vector<S> sum = m.image(pivot) + w;
    if (is_zero(square(sum, sig)))
        throw internal_error("both M(w) - w and M(w) + w isotropic at a non-isotropic pivot");
    return {StepKind::pair, pivot, {std::move(sum), w}};
}

// Smallest remaining index j with M(w_j) = w_j or (M(w_j) - w_j)^2 != 0.
template <class S>
std::optional<int> find_pivot(const OrthogonalMap<S>& m, const std::vector<int>& remaining) {
    const Signature& sig = m.signature();
    for (int j : remaining) {
        Vector<S> diff = m.image(j) - m.basis()[j];
        if (diff.is_zero() || !is_zero(square(diff, sig)))
            return j;
    }
    return std::nullopt;
}

// The obstruction case: every remaining basis vector moves by a nonzero
// isotropic amount, so no single reflection can fix one.
template <class S>
bool detect_artinian(const OrthogonalMap<S>& m, const std::vector<int>& remaining) {
    return !find_pivot(m, remaining).has_value();
}

struct ArtinianEvent {
    int pivot = 0;         // index where the pair construction was forced
    int remaining_dim = 0; // should be even when the obstruction is genuine
    bool det_plus_one = false;
};

namespace detail {

// Determinant of M restricted to the span of the remaining basis vectors
// (an invariant subspace at the time the branch fires).
template <class S>
S restricted_determinant(const OrthogonalMap<S>& m, const std::vector<int>& remaining) {
    const int k = static_cast<int>(remaining.size());
    Matrix<S> sub(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            sub(a, b) = m.matrix()(remaining[static_cast<size_t>(a)], remaining[static_cast<size_t>(b)]);
    return determinant(std::move(sub));
}

template <class S>
OrthogonalMap<S> apply_step(const ReflectionStep<S>& step, const OrthogonalMap<S>& m) {
    OrthogonalMap<S> out = m;
    // Left-compose the step's reflections in application order: a pair
    // {d, w} applies phi_d first, then phi_w.
    for (const auto& r : step.reflectors)
        out = out.left_reflect(r);
    return out;
}

template <class S>
ReflectionSequence<S> decompose_impl(const OrthogonalMap<S>& input, bool pivot_search,
                                     std::vector<ArtinianEvent>* events) {
    const int n = input.dim();
    ReflectionSequence<S> seq{{}, {}, input, 0, pivot_search ? n : 2 * n};

    OrthogonalMap<S> current = input;
    std::vector<int> remaining(static_cast<size_t>(n));
    std::iota(remaining.begin(), remaining.end(), 0);

    while (!remaining.empty()) {
        int j = remaining.front();
        if (pivot_search) {
            if (auto piv = find_pivot(current, remaining)) {
                j = *piv;
            } else {
                ++seq.artinian_branches;
                if (events) {
                    S det = restricted_determinant(current, remaining);
                    events->push_back({j, static_cast<int>(remaining.size()), det == S(1)});
                }
            }
        }
        ReflectionStep<S> step = step_reflector(current, j);
        current = apply_step(step, current);
        if (current.image(j) != current.basis()[j])
            throw internal_error("step failed to fix its pivot");
        for (const auto& r : step.reflectors)
            seq.reflectors.push_back(r);
        seq.steps.push_back(std::move(step));
        std::erase(remaining, j);
    }

    if (!current.matrix().is_identity())
        throw internal_error("nonidentity residue after processing every basis vector");
    if (seq.count() > seq.bound)
        throw internal_error("reflection count " + std::to_string(seq.count()) +
                             " exceeds bound " + std::to_string(seq.bound));
    return seq;
}

} // namespace detail

// Factor an orthogonal transformation into at most p+q hyperplane
// reflections: repeatedly fix a pivot basis vector, taking the pair
// construction at the smallest remaining index whenever no pivot exists.
template <class S>
ReflectionSequence<S> decompose(const OrthogonalMap<S>& m,
                                std::vector<ArtinianEvent>* events = nullptr) {
    return detail::decompose_impl(m, true, events);
}

// The weak variant: fixed processing order, no pivot search, at most 2(p+q)
// reflections.
template <class S>
ReflectionSequence<S> decompose_weak(const OrthogonalMap<S>& m) {
    return detail::decompose_impl(m, false, nullptr);
}

// Matrix (over the source basis) of phi_{r_1} o ... o phi_{r_m}.
template <class S>
Matrix<S> recompose(const ReflectionSequence<S>& seq) {
    const auto& basis = seq.source.basis();
    const Signature& sig = seq.source.signature();
    const int n = basis.dim();
    Matrix<S> out(n, n);
    for (int j = 0; j < n; ++j) {
        Vector<S> v = basis[j];
        for (auto it = seq.reflectors.rbegin(); it != seq.reflectors.rend(); ++it)
            v = reflect(*it, v, sig);
        out.set_column(j, basis.coordinates(v));
    }
    return out;
}

} // namespace cartan
