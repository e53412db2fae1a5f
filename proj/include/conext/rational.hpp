#pragma once

// Exact scalars: arbitrary-precision rationals and the ordered field Q(sqrt 2).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conext {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// Reduced fraction num/den with den > 0. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& v) : q_(v) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q);

    /// Accepts "p", "-p", "p/q". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    double to_double() const { return q_.get_d(); }
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// a += b * c without temporaries.
    void add_product(const Rational& b, const Rational& c);
    /// a -= b * c without temporaries.
    void sub_product(const Rational& b, const Rational& c);

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// a + b*sqrt(2) with a, b rational.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadScalar(long a) : a_(a) {}                 // NOLINT(google-explicit-constructor)
    QuadScalar(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
    QuadScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadScalar sqrt2() { return {Rational(0), Rational(1)}; }

    /// Accepts "p/q", "r/s r2", "p/q + r/s r2", "p/q - r/s r2", "-r2", "r2".
    static QuadScalar parse(std::string_view text);

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }

    /// Exact sign of a + b*sqrt(2) as a real number.
    int sign() const;
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// a - b*sqrt(2)
    QuadScalar conjugate() const { return {a_, -b_}; }
    /// (a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2
    Rational norm() const { return a_ * a_ - Rational(2) * b_ * b_; }

    double to_double() const;
    std::string str() const;

    QuadScalar operator-() const { return {-a_, -b_}; }
    QuadScalar& operator+=(const QuadScalar& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadScalar& operator-=(const QuadScalar& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o);

    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
    friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
    friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) = default;
    friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    void add_product(const QuadScalar& x, const QuadScalar& y) { *this += x * y; }
    void sub_product(const QuadScalar& x, const QuadScalar& y) { *this -= x * y; }

private:
    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

using RationalVector = std::vector<Rational>;

/// Scale v by a positive factor so that it becomes a primitive integer vector
/// (integer entries with gcd 1). The zero vector is returned unchanged.
RationalVector primitive(const RationalVector& v);

Rational dot(const RationalVector& a, const RationalVector& b);

std::string to_string(const RationalVector& v);

}  // namespace conext

template <>
struct std::hash<conext::Rational> {
    std::size_t operator()(const conext::Rational& r) const noexcept;
};
