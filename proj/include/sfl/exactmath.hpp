#pragma once

/// Negative continued fractions, modular inverses, and slopes in the Farey
/// graph.  These are the arithmetic primitives everything else reduces to.

#include "sfl/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sfl {

/// Coefficients of a negative continued fraction
///
///   [a0, a1, ..., ak] = a0 - 1/(a1 - 1/(... - 1/ak))
///
/// stored with positive entries.  The canonical expansion has every a_i >= 2
/// and is unique.  Surgery coefficients also use a relaxed head a0 >= 1
/// (tail still >= 2); such expansions carry the flag below.
struct NegCF {
    std::vector<Integer> coeffs;
    bool relaxed_head = false;

    std::size_t size() const { return coeffs.size(); }
    const Integer& operator[](std::size_t i) const { return coeffs[i]; }
};

/// Evaluate [c0, ..., ck] right to left.  Throws on an intermediate zero
/// (the expansion would describe a degenerate surgery).
inline Rational cf_eval(const std::vector<Integer>& coeffs) {
    if (coeffs.empty()) throw std::domain_error("cf_eval: empty expansion");
    Rational v(coeffs.back());
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        if (v.is_zero())
            throw std::domain_error("cf_eval: zero intermediate value");
        v = Rational(coeffs[i]) - v.inverse();
    }
    return v;
}

inline Rational cf_eval(const NegCF& c) { return cf_eval(c.coeffs); }

/// Canonical expansion of x > 1: all entries >= 2.  Terminates because the
/// denominator strictly drops at each step.
inline NegCF cf_expand(const Rational& x) {
    if (x <= Rational(1))
        throw std::domain_error("cf_expand: argument must exceed 1, got " + x.str());
    NegCF out;
    Rational v = x;
    for (;;) {
        Integer a = v.ceil();
        out.coeffs.push_back(a);
        if (v.is_integer()) break;
        v = (Rational(a) - v).inverse();  // v' = 1/(a - v) > 1
    }
    return out;
}

/// Relaxed expansion of x > 0: head entry a0 = ceil(x) >= 1, tail canonical.
/// Used for surgery-chain heads, where a0 = 1 is legitimate.
inline NegCF cf_expand_relaxed(const Rational& x) {
    if (!x.is_positive())
        throw std::domain_error("cf_expand_relaxed: argument must be positive");
    NegCF out;
    out.relaxed_head = true;
    Integer a = x.ceil();
    out.coeffs.push_back(a);
    if (Rational(a) != x) {
        NegCF tail = cf_expand((Rational(a) - x).inverse());
        out.coeffs.insert(out.coeffs.end(), tail.coeffs.begin(), tail.coeffs.end());
    }
    return out;
}

/// Sum of (a_i - 3) over the canonical expansion of x > 1.  Invariant under
/// the final-entry 2-expansions that relate a fraction to its mirror.
inline Integer i_invariant(const Rational& x) {
    Integer s = 0;
    for (const Integer& a : cf_expand(x).coeffs) s += a - 3;
    return s;
}

/// Inverse of q modulo p, normalized to (0, p).  Requires gcd(q, p) = 1.
inline Integer mod_inverse(const Integer& q, const Integer& p) {
    if (p < 2) throw std::domain_error("mod_inverse: modulus must exceed 1");
    Integer r0 = p, r1 = q % p, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += p;
    while (r1 != 0) {
        Integer k = r0 / r1;
        r0 -= k * r1; std::swap(r0, r1);
        s0 -= k * s1; std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    s0 %= p;
    if (s0 < 0) s0 += p;
    return s0;
}

/// A vertex of the Farey graph: a slope b/a in Q union {infinity}, stored
/// reduced with a >= 0 and infinity as 1/0.  Two slopes span an edge when
/// |ad - bc| = 1.
class FareySlope {
public:
    FareySlope() : num_(0), den_(1) {}
    FareySlope(Integer b, Integer a) : num_(std::move(b)), den_(std::move(a)) { normalize(); }
    explicit FareySlope(const Rational& r) : num_(r.num()), den_(r.den()) {}

    static FareySlope infinity() { return FareySlope(1, 0); }

    bool is_infinite() const { return den_ == 0; }
    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    Rational value() const {
        if (is_infinite()) throw std::domain_error("FareySlope: infinite slope has no value");
        return Rational(num_, den_);
    }

    friend bool operator==(const FareySlope& a, const FareySlope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        return num_.str() + "/" + den_.str();
    }

    /// Accepts "b/a", a bare integer, or "inf".
    static FareySlope parse(std::string_view s) {
        if (s == "inf" || s == "-inf") return infinity();
        Rational r = Rational::parse(s);
        return FareySlope(r.num(), r.den());
    }

    friend std::ostream& operator<<(std::ostream& os, const FareySlope& s) {
        return os << s.str();
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (den_ == 0) {
            if (num_ == 0) throw std::domain_error("FareySlope: 0/0 is not a slope");
            num_ = 1;
            return;
        }
        if (num_ == 0) { den_ = 1; return; }
        Integer g = int_gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Integer num_, den_;  // slope num_/den_, den_ >= 0
};

/// Farey sum (mediant) of two slopes, reduced.
inline FareySlope farey_sum(const FareySlope& a, const FareySlope& b) {
    return FareySlope(a.num() + b.num(), a.den() + b.den());
}

/// Edge test in the Farey graph: |ad - bc| = 1.
inline bool has_edge(const FareySlope& x, const FareySlope& y) {
    Integer d = x.den() * y.num() - x.num() * y.den();
    return d == 1 || d == -1;
}

}  // namespace sfl
