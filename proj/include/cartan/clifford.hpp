#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartan/bilinear.hpp"
#include "cartan/errors.hpp"
#include "cartan/linalg.hpp"

namespace cartan {

// Basis blades of the universal Clifford algebra R_{p,q} are indexed by
// subsets of {1, ..., n} packed into a bitmask: bit i-1 set means the
// generator e_i is a factor. Mask 0 is the scalar blade.
using Blade = std::uint32_t;

inline constexpr int max_clifford_dim = 16;

inline int blade_grade(Blade b) { return std::popcount(b); }

struct BladeProduct {
    int sign; // +1 or -1
    Blade blade;
};

// e_A e_B = sign * e_{A xor B}. The sign counts the transpositions needed
// to interleave the factors (for each generator of B, the generators of A
// strictly above it) times the metric signs of the squared generators.
inline BladeProduct blade_product(Blade a, Blade b, const Signature& sig) {
    int swaps = 0;
    for (Blade x = a >> 1; x != 0; x >>= 1)
        swaps += std::popcount(x & b);
    int sign = (swaps & 1) ? -1 : 1;
    Blade common = a & b;
    while (common) {
        int i = std::countr_zero(common);
        if (i >= sig.p)
            sign = -sign;
        common &= common - 1;
    }
    return {sign, a ^ b};
}

// Sparse multivector in canonical form: no stored coefficient is zero.
template <class S>
class Multivector {
public:
    explicit Multivector(const Signature& sig) : sig_(sig) {
        if (sig.dim() > max_clifford_dim)
            throw dimension_error("clifford algebra limited to 16 generators");
    }

    static Multivector scalar(const S& value, const Signature& sig) {
        Multivector m(sig);
        m.add_term(0, value);
        return m;
    }

    static Multivector from_vector(const Vector<S>& x, const Signature& sig) {
        if (x.size() != sig.dim())
            throw dimension_error("vector does not match signature dimension");
        Multivector m(sig);
        for (int i = 0; i < x.size(); ++i)
            m.add_term(Blade(1) << i, x[i]);
        return m;
    }

    const Signature& signature() const { return sig_; }
    const std::map<Blade, S>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    S coefficient(Blade b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? S(0) : it->second;
    }

    void add_term(Blade b, const S& coeff) {
        if (is_zero_coeff(coeff))
            return;
        auto [it, inserted] = terms_.try_emplace(b, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero_coeff(it->second))
                terms_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o) {
        check_sig(o);
        for (const auto& [b, c] : o.terms_)
            add_term(b, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        check_sig(o);
        for (const auto& [b, c] : o.terms_)
            add_term(b, -c);
        return *this;
    }
    friend Multivector operator+(Multivector a, const Multivector& b) { a += b; return a; }
    friend Multivector operator-(Multivector a, const Multivector& b) { a -= b; return a; }

    Multivector operator-() const {
        Multivector r(sig_);
        for (const auto& [b, c] : terms_)
            r.terms_.emplace(b, -c);
        return r;
    }

    friend Multivector operator*(const S& k, const Multivector& m) {
        Multivector r(m.sig_);
        for (const auto& [b, c] : m.terms_)
            r.add_term(b, k * c);
        return r;
    }

    // The geometric product, extended bilinearly from blade_product.
    friend Multivector operator*(const Multivector& a, const Multivector& b) {
        a.check_sig(b);
        Multivector r(a.sig_);
        for (const auto& [ba, ca] : a.terms_)
            for (const auto& [bb, cb] : b.terms_) {
                BladeProduct p = blade_product(ba, bb, a.sig_);
                S coeff = ca * cb;
                r.add_term(p.blade, p.sign < 0 ? -coeff : coeff);
            }
        return r;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.sig_ != b.sig_)
            return false;
        for (const auto& [blade, c] : a.terms_)
            if (c != b.coefficient(blade))
                return false;
        for (const auto& [blade, c] : b.terms_)
            if (c != a.coefficient(blade))
                return false;
        return true;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    Multivector grade_part(int r) const {
        Multivector out(sig_);
        for (const auto& [b, c] : terms_)
            if (blade_grade(b) == r)
                out.terms_.emplace(b, c);
        return out;
    }

    // Largest r with a nonzero grade-r part; undefined for the zero element.
    int grade() const {
        if (terms_.empty())
            throw singular_error("grade of the zero multivector is undefined");
        int g = 0;
        for (const auto& [b, c] : terms_)
            g = std::max(g, blade_grade(b));
        return g;
    }

    // Strict conversion back to a vector: any term outside grade 1 that
    // survives the scalar zero test signals an upstream bug.
    Vector<S> to_vector() const {
        Vector<S> out(sig_.dim());
        for (const auto& [b, c] : terms_) {
            if (blade_grade(b) != 1)
                throw internal_error("multivector is not a vector: grade " +
                                     std::to_string(blade_grade(b)) + " term present");
            out[std::countr_zero(b)] = c;
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [b, c] : terms_) {
            if (!out.empty())
                out += " + ";
            out += to_display(c);
            if (b) {
                out += " e{";
                bool first = true;
                for (int i = 0; i < sig_.dim(); ++i)
                    if (b & (Blade(1) << i)) {
                        if (!first)
                            out += ",";
                        out += std::to_string(i + 1);
                        first = false;
                    }
                out += "}";
            }
        }
        return out;
    }

private:
    static bool is_zero_coeff(const S& c) { return cartan::is_zero(c); }
    void check_sig(const Multivector& o) const {
        if (sig_ != o.sig_)
            throw dimension_error("multivector signature mismatch");
    }

    Signature sig_;
    std::map<Blade, S> terms_;
};

// s^{-1} = s / B(s, s), defined exactly when s is invertible.
template <class S>
Multivector<S> vector_inverse(const Vector<S>& s, const Signature& sig) {
    S s2 = square(s, sig);
    if (s.is_zero() || is_zero(s2))
        throw singular_error("vector is isotropic or zero, not invertible");
    return (S(1) / s2) * Multivector<S>::from_vector(s, sig);
}

// Reflection through the hyperplane orthogonal to s, by the closed form
// x - (2 B(x,s) / s^2) s. Agrees with the sandwich product -s x s^{-1}.
template <class S>
Vector<S> reflect(const Vector<S>& s, const Vector<S>& x, const Signature& sig) {
    S s2 = square(s, sig);
    if (s.is_zero() || is_zero(s2))
        throw singular_error("reflection vector must be invertible");
    S factor = S(2) * scalar_product(x, s, sig) / s2;
    return x - factor * s;
}

// The same reflection computed inside the algebra.
template <class S>
Vector<S> reflect_sandwich(const Vector<S>& s, const Vector<S>& x, const Signature& sig) {
    Multivector<S> sm = Multivector<S>::from_vector(s, sig);
    Multivector<S> xm = Multivector<S>::from_vector(x, sig);
    Multivector<S> result = -(sm * xm * vector_inverse(s, sig));
    return result.to_vector();
}

// Ordered product of invertible vectors. Acts on vectors through the
// composition of the factor reflections.
template <class S>
class Versor {
public:
    static Versor identity(const Signature& sig) { return Versor({}, sig); }

    static Versor of(std::vector<Vector<S>> factors, const Signature& sig) {
        for (const auto& f : factors)
            if (!is_invertible_vector(f, sig))
                throw singular_error("versor factor is not invertible");
        return Versor(std::move(factors), sig);
    }

    const std::vector<Vector<S>>& factors() const { return factors_; }
    const Multivector<S>& product() const { return product_; }
    const Signature& signature() const { return sig_; }
    int parity() const { return static_cast<int>(factors_.size()) % 2; }

private:
    Versor(std::vector<Vector<S>> factors, const Signature& sig)
        : factors_(std::move(factors)), sig_(sig), product_(Multivector<S>::scalar(S(1), sig)) {
        for (const auto& f : factors_)
            product_ = product_ * Multivector<S>::from_vector(f, sig_);
    }

    std::vector<Vector<S>> factors_;
    Signature sig_;
    Multivector<S> product_;
};

// phi_{s_1} ( phi_{s_2} ( ... phi_{s_k}(x) ... ) ).
template <class S>
Vector<S> apply_versor(const Versor<S>& v, const Vector<S>& x) {
    Vector<S> out = x;
    const auto& fs = v.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it)
        out = reflect(*it, out, v.signature());
    return out;
}

// (-1)^k s_1 ... s_k x s_k^{-1} ... s_1^{-1}, evaluated in the algebra.
template <class S>
Vector<S> apply_versor_sandwich(const Versor<S>& v, const Vector<S>& x) {
    const Signature& sig = v.signature();
    Multivector<S> m = v.product() * Multivector<S>::from_vector(x, sig);
    const auto& fs = v.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it)
        m = m * vector_inverse(*it, sig);
    if (v.parity() == 1)
        m = -m;
    return m.to_vector();
}

// Two versors represent the same transformation exactly when their algebra
// products are proportional; returns the ratio product(u) = lambda * product(v).
template <class S>
std::optional<S> versors_proportional(const Versor<S>& u, const Versor<S>& v) {
    const Multivector<S>& pu = u.product();
    const Multivector<S>& pv = v.product();
    if (pu.is_zero() || pv.is_zero())
        throw singular_error("versor product is zero");
    auto [blade, cv] = *pv.terms().begin();
    S cu = pu.coefficient(blade);
    if (is_zero(cu))
        return std::nullopt;
    S lambda = cu / cv;
    if (pu != lambda * pv)
        return std::nullopt;
    return lambda;
}

} // namespace cartan
