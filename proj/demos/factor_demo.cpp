// Build an orthogonal transformation of R^{2,3} as a product of three
// reflections, factor it back over two different orthogonal bases, and
// print what the analysis layer can certify about the result.

#include <iostream>

#include "cartan/cartan.hpp"

using namespace cartan;
using R = Rational;

namespace {

Vector<R> vec5(long a, long b, long c, long d, long e) {
    return Vector<R>{R(a), R(b), R(c), R(d), R(e)};
}

void describe(const char* label, const DecompositionReport<R>& rep) {
    std::cout << label << "\n";
    std::cout << "  reflectors: " << rep.achieved_count
              << ", grade lower bound: " << rep.grade_lower_bound
              << ", minimality certified: " << (rep.minimality_certified ? "yes" : "no")
              << "\n";
    for (const auto& r : rep.sequence.reflectors)
        std::cout << "    " << r.str() << "\n";
}

} // namespace

int main() {
    const Signature sig(2, 3);

    // three reflections with small integer reflectors
    std::vector<Vector<R>> factors{vec5(7, -1, 5, -5, 2), vec5(26, -8, 22, -16, 6),
                                   vec5(-5, 5, -7, 1, -6)};
    const int n = sig.dim();
    Matrix<R> t(n, n);
    for (int j = 0; j < n; ++j) {
        Vector<R> v = Vector<R>::unit(n, j);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            v = reflect(*it, v, sig);
        t.set_column(j, v);
    }
    std::cout << "T =\n" << t.str() << "\n\n";

    // over the canonical basis the pivot search runs into the isotropic
    // obstruction and needs five reflections
    auto canonical = build_report(OrthogonalMap<R>::canonical(t, sig));
    describe("canonical basis:", canonical);
    std::cout << "  artinian branches taken: " << canonical.sequence.artinian_branches << "\n\n";

    // over a basis adapted to the map, three suffice and the grade bound
    // certifies that three is minimal
    auto w = OrthogonalBasis<R>::from_vectors(
        {vec5(0, 0, 1, 1, -1), vec5(1, 1, 0, 0, 0), vec5(0, 0, 1, 1, 2), vec5(0, 0, 1, -1, 0),
         vec5(1, -1, 0, 0, 0)},
        sig);
    Matrix<R> over_w(n, n);
    for (int j = 0; j < n; ++j)
        over_w.set_column(j, w.coordinates(t * w[j]));
    auto adapted = build_report(OrthogonalMap<R>::over_basis(over_w, w));
    describe("adapted basis:", adapted);

    // the two factorizations are the same transformation: their versor
    // products agree up to a scalar
    auto lambda = versors_proportional(
        Versor<R>::of(canonical.sequence.reflectors, sig),
        Versor<R>::of(adapted.sequence.reflectors, sig));
    if (lambda)
        std::cout << "\nversor products proportional, ratio " << lambda->str() << "\n";
    return 0;
}
