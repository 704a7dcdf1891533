#pragma once

/// Dense exact linear algebra for intersection forms: LU solves, inverses,
/// determinants, and the inertia (signature) of a symmetric matrix via
/// congruence diagonalization.  Everything is over Rational, so signatures
/// and determinants are exact, never floating point.

#include "sfl/rational.hpp"

#include <cstddef>
#include <numeric>
#include <vector>

namespace sfl {

class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// PA = LU with row pivoting on the first nonzero entry.  Exact arithmetic
/// needs no stability pivoting; zero multipliers are skipped, which keeps
/// tree-shaped intersection forms close to linear cost per solve.
class LuFactorization {
public:
    explicit LuFactorization(const RationalMatrix& m)
        : lu_(m), perm_(m.rows()), det_sign_(1), singular_(false) {
        if (m.rows() != m.cols())
            throw std::domain_error("LuFactorization: matrix must be square");
        std::iota(perm_.begin(), perm_.end(), std::size_t{0});
        const std::size_t n = lu_.rows();
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t piv = k;
            while (piv < n && lu_(piv, k).is_zero()) ++piv;
            if (piv == n) { singular_ = true; continue; }
            if (piv != k) {
                for (std::size_t j = 0; j < n; ++j) std::swap(lu_(piv, j), lu_(k, j));
                std::swap(perm_[piv], perm_[k]);
                det_sign_ = -det_sign_;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                if (lu_(i, k).is_zero()) continue;
                Rational f = lu_(i, k) / lu_(k, k);
                lu_(i, k) = f;
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (!lu_(k, j).is_zero()) lu_(i, j) -= f * lu_(k, j);
                }
            }
        }
    }

    bool singular() const { return singular_; }

    Rational det() const {
        if (singular_) return Rational(0);
        Rational d(det_sign_);
        for (std::size_t k = 0; k < lu_.rows(); ++k) d *= lu_(k, k);
        return d;
    }

    std::vector<Rational> solve(const std::vector<Rational>& rhs) const {
        const std::size_t n = lu_.rows();
        if (singular_) throw std::domain_error("solve: singular matrix");
        if (rhs.size() != n) throw std::domain_error("solve: size mismatch");
        std::vector<Rational> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = rhs[perm_[i]];
            for (std::size_t j = 0; j < i; ++j)
                if (!lu_(i, j).is_zero() && !y[j].is_zero()) y[i] -= lu_(i, j) * y[j];
        }
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j)
                if (!lu_(i, j).is_zero() && !y[j].is_zero()) y[i] -= lu_(i, j) * y[j];
            y[i] /= lu_(i, i);
        }
        return y;
    }

private:
    RationalMatrix lu_;
    std::vector<std::size_t> perm_;
    int det_sign_;
    bool singular_;
};

inline Rational det(const RationalMatrix& m) { return LuFactorization(m).det(); }

inline RationalMatrix inverse(const RationalMatrix& m) {
    LuFactorization lu(m);
    if (lu.singular()) throw std::domain_error("inverse: singular matrix");
    const std::size_t n = m.rows();
    RationalMatrix out(n, n);
    std::vector<Rational> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = Rational(1);
        std::vector<Rational> col = lu.solve(e);
        e[j] = Rational(0);
        for (std::size_t i = 0; i < n; ++i) out(i, j) = std::move(col[i]);
    }
    return out;
}

/// Counts of positive, negative, and zero eigenvalues of a symmetric matrix,
/// computed by exact congruence diagonalization (Sylvester's law).
struct Inertia {
    long positive = 0;
    long negative = 0;
    long nullity = 0;

    long signature() const { return positive - negative; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric rational matrix.  When no nonzero diagonal pivot
/// remains but the block is nonzero, an off-diagonal entry b gives a
/// hyperbolic plane [[0, b], [b, 0]] contributing one positive and one
/// negative eigenvalue; its Schur complement is eliminated exactly.
inline Inertia inertia(const RationalMatrix& m) {
    if (!m.is_symmetric())
        throw std::domain_error("inertia: matrix must be symmetric");
    RationalMatrix a = m;
    std::vector<std::size_t> act(a.rows());
    std::iota(act.begin(), act.end(), std::size_t{0});
    Inertia res;
    while (!act.empty()) {
        std::size_t pos = act.size();
        for (std::size_t t = 0; t < act.size(); ++t)
            if (!a(act[t], act[t]).is_zero()) { pos = t; break; }
        if (pos < act.size()) {
            std::size_t i = act[pos];
            const Rational piv = a(i, i);
            (piv.is_positive() ? res.positive : res.negative) += 1;
            act.erase(act.begin() + static_cast<std::ptrdiff_t>(pos));
            for (std::size_t u : act) {
                if (a(u, i).is_zero()) continue;
                Rational f = a(u, i) / piv;
                for (std::size_t v : act)
                    if (!a(i, v).is_zero()) a(u, v) -= f * a(i, v);
            }
            continue;
        }
        // No diagonal pivot: look for a hyperbolic pair.
        std::size_t pi = act.size(), pj = act.size();
        for (std::size_t t = 0; t < act.size() && pi == act.size(); ++t)
            for (std::size_t u = t + 1; u < act.size(); ++u)
                if (!a(act[t], act[u]).is_zero()) { pi = t; pj = u; break; }
        if (pi == act.size()) {  // remaining block is zero
            res.nullity += static_cast<long>(act.size());
            break;
        }
        std::size_t i = act[pi], j = act[pj];
        const Rational b = a(i, j);
        res.positive += 1;
        res.negative += 1;
        act.erase(act.begin() + static_cast<std::ptrdiff_t>(pj));
        act.erase(act.begin() + static_cast<std::ptrdiff_t>(pi));
        for (std::size_t u : act) {
            if (a(u, i).is_zero() && a(u, j).is_zero()) continue;
            for (std::size_t v : act) {
                Rational corr = (a(u, i) * a(j, v) + a(u, j) * a(i, v)) / b;
                if (!corr.is_zero()) a(u, v) -= corr;
            }
        }
    }
    return res;
}

}  // namespace sfl
