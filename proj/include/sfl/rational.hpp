#pragma once

/// Exact rational arithmetic over arbitrary-precision integers.
///
/// Every quantity in this library (surgery coefficients, slopes, matrix
/// entries, theta values) is an exact rational; nothing is ever rounded.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sfl {

using Integer = boost::multiprecision::cpp_int;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Reduced fraction num/den with den > 0.  Construction canonicalizes, so
/// two equal values always have identical representations.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
    Rational(long long n, long long d) : num_(n), den_(d) { reduce(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }

    /// Largest integer <= *this.
    Integer floor() const {
        Integer q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }
    Integer ceil() const { return -(-*this).floor(); }
    Rational frac() const { return *this - Rational(floor()); }

    Rational inverse() const {
        if (num_ == 0) throw std::domain_error("Rational: division by zero");
        return num_ > 0 ? Rational(raw(), den_, num_) : Rational(raw(), -den_, -num_);
    }

    Rational operator-() const { return Rational(raw(), -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        Integer l = a.num_ * b.den_, r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

    /// Compact form: "5", "-3/8".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }
    /// Explicit form with denominator always present: "5/1", "-3/8".
    std::string str_exact() const { return num_.str() + "/" + den_.str(); }

    /// Accepts "p/q" or a bare integer "n".
    static Rational parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct raw {};  // tag: skip reduction for values already canonical
    Rational(raw, Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        Integer g = int_gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Integer num_, den_;
};

inline Integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal");
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9')
            throw std::invalid_argument("bad integer literal: " + std::string(s));
    return Integer(std::string(s));
}

inline Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s));
    return Rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

}  // namespace sfl
