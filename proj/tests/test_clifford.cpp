#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cartan/clifford.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace cartan;
using golden::vec;
using R = Rational;
using MV = Multivector<R>;

namespace {

Vector<R> random_vector(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 2);
    Vector<R> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = R(num(rng), den(rng));
    return v;
}

Vector<R> random_invertible(std::mt19937_64& rng, const Signature& sig) {
    for (;;) {
        Vector<R> v = random_vector(rng, sig.dim());
        if (is_invertible_vector(v, sig))
            return v;
    }
}

MV random_multivector(std::mt19937_64& rng, const Signature& sig) {
    std::uniform_int_distribution<long> coeff(-3, 3);
    MV m(sig);
    for (Blade b = 0; b < (Blade(1) << sig.dim()); ++b)
        if (std::uniform_int_distribution<int>(0, 3)(rng) == 0)
            m.add_term(b, R(coeff(rng)));
    return m;
}

std::vector<Signature> small_signatures(int max_dim) {
    std::vector<Signature> out;
    for (int n = 1; n <= max_dim; ++n)
        for (int p = 0; p <= n; ++p)
            out.emplace_back(p, n - p);
    return out;
}

} // namespace

TEST_CASE("blade products", "[clifford]") {
    Signature sig = golden::sig23;
    auto p = blade_product(0b00001, 0b00001, sig); // e1 e1
    CHECK(p.sign == 1);
    CHECK(p.blade == 0u);
    p = blade_product(0b10000, 0b10000, sig); // e5 e5
    CHECK(p.sign == -1);
    CHECK(p.blade == 0u);
    p = blade_product(0b00010, 0b00001, sig); // e2 e1 = -e1 e2
    CHECK(p.sign == -1);
    CHECK(p.blade == 0b00011u);
}

TEST_CASE("blade product agrees with the bubble-sort sign", "[clifford][property]") {
    for (const auto& sig : small_signatures(5)) {
        const Blade count = Blade(1) << sig.dim();
        for (Blade a = 0; a < count; ++a)
            for (Blade b = 0; b < count; ++b) {
                auto lib = blade_product(a, b, sig);
                auto [sign, blade] = oracles::naive_blade_product(a, b, sig);
                REQUIRE(lib.sign == sign);
                REQUIRE(lib.blade == blade);
            }
    }
}

TEST_CASE("generator relations", "[clifford]") {
    for (const auto& sig : small_signatures(5)) {
        for (int i = 0; i < sig.dim(); ++i) {
            MV ei = MV::from_vector(Vector<R>::unit(sig.dim(), i), sig);
            CHECK(ei * ei == MV::scalar(i < sig.p ? R(1) : R(-1), sig));
            for (int j = 0; j < sig.dim(); ++j) {
                if (i == j)
                    continue;
                MV ej = MV::from_vector(Vector<R>::unit(sig.dim(), j), sig);
                CHECK((ei * ej + ej * ei).is_zero());
            }
        }
    }
}

TEST_CASE("geometric product basics", "[clifford]") {
    Signature s10(1, 0);
    MV one = MV::scalar(R(1), s10);
    MV e1 = MV::from_vector(vec("1"), s10);
    CHECK(((one + e1) * (one - e1)).is_zero());
}

TEST_CASE("contraction identity: vw + wv = 2B(v,w)", "[clifford][property]") {
    std::mt19937_64 rng(42);
    for (const auto& sig : small_signatures(5)) {
        for (int rep = 0; rep < 25; ++rep) {
            Vector<R> v = random_vector(rng, sig.dim());
            Vector<R> w = random_vector(rng, sig.dim());
            MV lhs = MV::from_vector(v, sig) * MV::from_vector(w, sig) +
                     MV::from_vector(w, sig) * MV::from_vector(v, sig);
            CHECK(lhs == MV::scalar(R(2) * scalar_product(v, w, sig), sig));
        }
    }
}

TEST_CASE("associativity over blade triples and random multivectors", "[clifford][property]") {
    for (const auto& sig : small_signatures(4)) {
        const Blade count = Blade(1) << sig.dim();
        for (Blade a = 0; a < count; ++a)
            for (Blade b = 0; b < count; ++b)
                for (Blade c = 0; c < count; ++c) {
                    auto ab = blade_product(a, b, sig);
                    auto bc = blade_product(b, c, sig);
                    auto left = blade_product(ab.blade, c, sig);
                    auto right = blade_product(a, bc.blade, sig);
                    REQUIRE(left.blade == right.blade);
                    REQUIRE(ab.sign * left.sign == bc.sign * right.sign);
                }
    }
    std::mt19937_64 rng(4242);
    for (const auto& sig : {Signature(3, 3), Signature(2, 4), Signature(5, 1)}) {
        for (int rep = 0; rep < 10; ++rep) {
            MV a = random_multivector(rng, sig);
            MV b = random_multivector(rng, sig);
            MV c = random_multivector(rng, sig);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("grades", "[clifford]") {
    Signature sig = golden::sig23;
    CHECK(MV::scalar(R(5), sig).grade() == 0);
    MV e123 = MV::from_vector(vec("1 0 0 0 0"), sig) * MV::from_vector(vec("0 1 0 0 0"), sig) *
              MV::from_vector(vec("0 0 1 0 0"), sig);
    CHECK(e123.grade() == 3);
    CHECK_THROWS_AS(MV(sig).grade(), singular_error);

    MV c_product = MV::scalar(R(1), sig);
    for (const auto& v : {golden::c1(), golden::c2(), golden::c3(), golden::c4(), golden::c5()})
        c_product = c_product * MV::from_vector(v, sig);
    CHECK(c_product.grade() == 3);
}

TEST_CASE("grade parts", "[clifford]") {
    Signature s20(2, 0);
    MV m = MV::scalar(R(1), s20);
    m.add_term(0b01, R(1)); // e1
    m.add_term(0b11, R(1)); // e1 e2
    CHECK(m.grade_part(1) == MV::from_vector(vec("1 0"), s20));
    CHECK(m.grade_part(0) == MV::scalar(R(1), s20));
    MV e12(s20);
    e12.add_term(0b11, R(1));
    CHECK(e12.grade_part(0).is_zero());

    // the parts sum back to the whole
    MV total(s20);
    for (int r = 0; r <= 2; ++r)
        total += m.grade_part(r);
    CHECK(total == m);
}

TEST_CASE("d1 d2 d3 equals 6 c1 c2 c3 c4 c5", "[clifford][golden]") {
    Signature sig = golden::sig23;
    MV d_product = MV::scalar(R(1), sig);
    for (const auto& v : {golden::d1(), golden::d2(), golden::d3()})
        d_product = d_product * MV::from_vector(v, sig);
    MV c_product = MV::scalar(R(1), sig);
    for (const auto& v : {golden::c1(), golden::c2(), golden::c3(), golden::c4(), golden::c5()})
        c_product = c_product * MV::from_vector(v, sig);
    CHECK(d_product == R(6) * c_product);
    CHECK(d_product.grade() == 3);
    CHECK(!d_product.grade_part(3).is_zero());
}

TEST_CASE("vector inverses", "[clifford]") {
    Signature sig = golden::sig23;
    auto check_inverse = [&](const Vector<R>& s, const Vector<R>& expected) {
        MV inv = vector_inverse(s, sig);
        CHECK(inv == MV::from_vector(expected, sig));
        CHECK(MV::from_vector(s, sig) * inv == MV::scalar(R(1), sig));
    };
    check_inverse(vec("1 0 0 0 0"), vec("1 0 0 0 0"));
    check_inverse(vec("0 0 0 0 1"), vec("0 0 0 0 -1"));
    check_inverse(vec("2 0 0 0 0"), vec("1/2 0 0 0 0"));
    CHECK_THROWS_AS(vector_inverse(vec("1 0 0 1 0"), sig), singular_error);
    CHECK_THROWS_AS(vector_inverse(Vector<R>(5), sig), singular_error);
}

TEST_CASE("reflections", "[clifford]") {
    Signature sig = golden::sig23;
    Vector<R> e1 = vec("1 0 0 0 0"), e2 = vec("0 1 0 0 0"), e3 = vec("0 0 1 0 0");
    CHECK(reflect(e1, e1, sig) == -e1);
    CHECK(reflect(e1, e2, sig) == e2);
    CHECK(reflect(golden::c5(), e3, sig) == vec("0 0 7/25 24/25 0"));
    CHECK_THROWS_AS(reflect(vec("1 0 0 1 0"), e1, sig), singular_error);
}

TEST_CASE("closed form equals sandwich product", "[clifford][property]") {
    std::mt19937_64 rng(777);
    for (const auto& sig : small_signatures(5)) {
        for (int rep = 0; rep < 40; ++rep) {
            Vector<R> s = random_invertible(rng, sig);
            Vector<R> x = random_vector(rng, sig.dim());
            CHECK(reflect(s, x, sig) == reflect_sandwich(s, x, sig));
        }
    }
}

TEST_CASE("reflection properties", "[clifford][property]") {
    std::mt19937_64 rng(2024);
    for (const auto& sig : small_signatures(5)) {
        for (int rep = 0; rep < 25; ++rep) {
            Vector<R> s = random_invertible(rng, sig);
            Vector<R> x = random_vector(rng, sig.dim());
            Vector<R> y = random_vector(rng, sig.dim());
            // isometry
            CHECK(scalar_product(reflect(s, x, sig), reflect(s, y, sig), sig) ==
                  scalar_product(x, y, sig));
            // involution
            CHECK(reflect(s, reflect(s, x, sig), sig) == x);
            // scale invariance of the hyperplane
            R lambda(std::uniform_int_distribution<long>(1, 7)(rng),
                     std::uniform_int_distribution<long>(1, 3)(rng));
            if (std::uniform_int_distribution<int>(0, 1)(rng))
                lambda = -lambda;
            CHECK(reflect(lambda * s, x, sig) == reflect(s, x, sig));
        }
    }
}

TEST_CASE("versor application", "[clifford]") {
    Signature sig = golden::sig23;
    Vector<R> e5 = vec("0 0 0 0 1");
    CHECK(apply_versor(Versor<R>::identity(sig), e5) == e5);
    CHECK(apply_versor(Versor<R>::of({e5}, sig), e5) == -e5);

    auto v = Versor<R>::of({golden::d1(), golden::d2(), golden::d3()}, sig);
    Matrix<R> te = golden::t_e();
    for (int j = 0; j < 5; ++j) {
        CHECK(apply_versor(v, Vector<R>::unit(5, j)) == te.column(j));
        CHECK(apply_versor_sandwich(v, Vector<R>::unit(5, j)) == te.column(j));
    }
    CHECK_THROWS_AS(Versor<R>::of({vec("1 0 0 1 0")}, sig), singular_error);
}

TEST_CASE("versor proportionality", "[clifford]") {
    Signature sig = golden::sig23;
    Vector<R> e1 = vec("1 0 0 0 0"), e2 = vec("0 1 0 0 0");
    auto lambda = versors_proportional(Versor<R>::of({e1}, sig),
                                       Versor<R>::of({R(2) * e1}, sig));
    REQUIRE(lambda);
    CHECK(*lambda == R(1, 2));

    auto d_vs_c = versors_proportional(
        Versor<R>::of({golden::d1(), golden::d2(), golden::d3()}, sig),
        Versor<R>::of({golden::c1(), golden::c2(), golden::c3(), golden::c4(), golden::c5()},
                      sig));
    REQUIRE(d_vs_c);
    CHECK(*d_vs_c == R(6));

    CHECK_FALSE(versors_proportional(Versor<R>::of({e1}, sig), Versor<R>::of({e2}, sig)));
}

TEST_CASE("versor grade against the span of its factors", "[clifford][property]") {
    // The grade never exceeds the factor count or the span dimension, has
    // the parity of the factor count, and attains k exactly when the k
    // factors are independent (the grade-k part is their wedge).
    std::mt19937_64 rng(31337);
    for (const auto& sig : small_signatures(5)) {
        for (int rep = 0; rep < 20; ++rep) {
            int k = std::uniform_int_distribution<int>(1, sig.dim())(rng);
            std::vector<Vector<R>> factors;
            for (int i = 0; i < k; ++i)
                factors.push_back(random_invertible(rng, sig));
            auto v = Versor<R>::of(factors, sig);
            REQUIRE(!v.product().is_zero());
            int g = v.product().grade();
            CHECK(g <= k);
            CHECK(g % 2 == k % 2);
            Matrix<R> stacked(k, sig.dim());
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < sig.dim(); ++j)
                    stacked(i, j) = factors[static_cast<size_t>(i)][j];
            int r = rank(stacked);
            CHECK(g <= r);
            if (r == k)
                CHECK(g == k);
        }
    }
}

TEST_CASE("strict vector conversion", "[clifford]") {
    Signature s20(2, 0);
    MV m = MV::from_vector(vec("1 2"), s20);
    CHECK(m.to_vector() == vec("1 2"));
    m.add_term(0b11, R(1));
    CHECK_THROWS_AS(m.to_vector(), internal_error);
}

TEST_CASE("dimension guard", "[clifford]") {
    CHECK_THROWS_AS(MV(Signature(17, 0)), dimension_error);
}
