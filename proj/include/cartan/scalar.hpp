#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include "cartan/errors.hpp"

namespace cartan {

// Arbitrary-precision rational, always in canonical form (reduced fraction,
// positive denominator). The default scalar of the library: every derived
// quantity below stays bit-exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) {
        if (den == 0)
            throw singular_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(from_canonical{}, -v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (sgn(o.v_) == 0)
            throw singular_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    int sign() const { return sgn(v_); }

    // "a/b", or just "a" for integers.
    std::string str() const { return v_.get_str(); }

    double to_double() const { return v_.get_d(); }

    // Accepts an optionally signed integer or integer fraction "a/b" with
    // b != 0. Anything else (decimals included) is rejected.
    static std::optional<Rational> parse(std::string_view text);

private:
    struct from_canonical {};
    Rational(from_canonical, mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.sign() == 0; }
inline Rational abs_value(const Rational& x) { return x.sign() < 0 ? -x : x; }
inline std::string to_display(const Rational& x) { return x.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace detail

inline std::optional<Rational> Rational::parse(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty())
        return std::nullopt;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!detail::all_digits(num) || !detail::all_digits(den))
        return std::nullopt;
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (sgn(d) == 0)
        return std::nullopt;
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

// Machine real carrying the comparison tolerance it was ingested with.
// Equality and the zero test are tolerance-aware: |a - b| <= max tolerance.
// Values built from integer constants carry tolerance 0, so combining them
// with ingested data inherits the data's tolerance.
struct Approx {
    double value = 0.0;
    double tolerance = 0.0;

    Approx() = default;
    Approx(long n) : value(static_cast<double>(n)) {}
    Approx(int n) : value(static_cast<double>(n)) {}
    Approx(double v, double tol) : value(v), tolerance(tol) {
        if (tol < 0.0)
            throw error("negative tolerance");
    }

    Approx operator-() const { return Approx(-value, tolerance); }

    Approx& operator+=(const Approx& o) { value += o.value; join(o); return *this; }
    Approx& operator-=(const Approx& o) { value -= o.value; join(o); return *this; }
    Approx& operator*=(const Approx& o) { value *= o.value; join(o); return *this; }
    Approx& operator/=(const Approx& o) {
        if (o.value == 0.0)
            throw singular_error("division by zero");
        value /= o.value;
        join(o);
        return *this;
    }

    friend Approx operator+(Approx a, const Approx& b) { a += b; return a; }
    friend Approx operator-(Approx a, const Approx& b) { a -= b; return a; }
    friend Approx operator*(Approx a, const Approx& b) { a *= b; return a; }
    friend Approx operator/(Approx a, const Approx& b) { a /= b; return a; }

    friend bool operator==(const Approx& a, const Approx& b) {
        return std::abs(a.value - b.value) <= std::max(a.tolerance, b.tolerance);
    }
    friend bool operator!=(const Approx& a, const Approx& b) { return !(a == b); }
    friend bool operator<(const Approx& a, const Approx& b) { return a.value < b.value; }
    friend bool operator<=(const Approx& a, const Approx& b) { return a.value <= b.value; }
    friend bool operator>(const Approx& a, const Approx& b) { return a.value > b.value; }
    friend bool operator>=(const Approx& a, const Approx& b) { return a.value >= b.value; }

private:
    void join(const Approx& o) { tolerance = std::max(tolerance, o.tolerance); }
};

inline bool is_zero(const Approx& x) { return std::abs(x.value) <= x.tolerance; }
inline Approx abs_value(const Approx& x) { return Approx(std::abs(x.value), x.tolerance); }
inline std::string to_display(const Approx& x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x.value);
    return buf;
}

inline constexpr double default_tolerance = 1e-9;

template <class S>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

template <class S>
std::optional<S> parse_scalar(std::string_view text, double tolerance);

template <>
inline std::optional<Rational> parse_scalar<Rational>(std::string_view text, double) {
    return Rational::parse(text);
}

template <>
inline std::optional<Approx> parse_scalar<Approx>(std::string_view text, double tolerance) {
    if (auto r = Rational::parse(text))
        return Approx(r->to_double(), tolerance);
    std::string buf(detail::trim(text));
    if (buf.empty())
        return std::nullopt;
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size())
        return std::nullopt;
    return Approx(v, tolerance);
}

} // namespace cartan
