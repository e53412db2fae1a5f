#include "conext/rational.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace conext {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!is_digits(body)) {
        throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    std::string tmp(s.front() == '+' ? s.substr(1) : s);
    return mpz_class(tmp, 10);
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    if (q_.get_den() == 0) throw DivisionByZero();
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (text.empty()) throw ParseError("empty rational");
        return Rational(parse_integer(text, text));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (num.empty() || !is_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num, text), d);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

void Rational::add_product(const Rational& b, const Rational& c) {
    if (b.is_zero() || c.is_zero()) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), b.q_.get_mpq_t(), c.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
}

void Rational::sub_product(const Rational& b, const Rational& c) {
    if (b.is_zero() || c.is_zero()) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), b.q_.get_mpq_t(), c.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// ---------------------------------------------------------------------------

int QuadScalar::sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // Opposite signs: the term with the larger square wins. a^2 == 2 b^2 has
    // no nonzero rational solution.
    const auto lhs = a_ * a_;
    const auto rhs = Rational(2) * b_ * b_;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    Rational a = a_ * o.a_;
    a.add_product(Rational(2) * b_, o.b_);
    Rational b = a_ * o.b_;
    b.add_product(b_, o.a_);
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
    const Rational n = o.norm();
    if (n.is_zero()) throw DivisionByZero();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

double QuadScalar::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(2.0); }

std::string QuadScalar::str() const {
    if (b_.is_zero()) return a_.str();
    if (a_.is_zero()) return b_.str() + " r2";
    if (b_.sign() < 0) return a_.str() + " - " + (-b_).str() + " r2";
    return a_.str() + " + " + b_.str() + " r2";
}

QuadScalar QuadScalar::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    if (tokens.empty()) throw ParseError("empty quadratic scalar");

    QuadScalar out;
    int pending_sign = 1;
    bool expect_term = true;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (!expect_term) {
            if (t == "+") pending_sign = 1;
            else if (t == "-") pending_sign = -1;
            else throw ParseError("expected '+' or '-' in '" + std::string(text) + "'");
            expect_term = true;
            continue;
        }
        Rational coeff(1);
        bool radical = false;
        if (t == "r2" || t == "-r2" || t == "+r2") {
            if (t == "-r2") coeff = Rational(-1);
            radical = true;
        } else {
            coeff = Rational::parse(t);
            if (i + 1 < tokens.size() && tokens[i + 1] == "r2") {
                radical = true;
                ++i;
            }
        }
        if (pending_sign < 0) coeff = -coeff;
        if (radical) out.b_ += coeff;
        else out.a_ += coeff;
        expect_term = false;
        pending_sign = 1;
    }
    if (expect_term) throw ParseError("dangling operator in '" + std::string(text) + "'");
    return out;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.str(); }

// ---------------------------------------------------------------------------

RationalVector primitive(const RationalVector& v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) {
        if (!x.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
    }
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        mpz_class n = x.num() * (lcm_den / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    if (g == 0) return v;
    RationalVector out;
    out.reserve(v.size());
    for (auto& n : ints) out.emplace_back(mpz_class(n / g));
    return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
    return s;
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

}  // namespace conext

std::size_t std::hash<conext::Rational>::operator()(const conext::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
}
