#pragma once

/// Tight contact structures on a stabilized diagram, their rotation
/// vectors, and the theta invariant.
///
/// A vertex with capacity c contributes rotation numbers -c, -c + 2, ..., c;
/// a full rotation vector picks one entry per vertex, and the canonical
/// structure takes every entry at its capacity.  For a filling X with the
/// handlebody structure J determined by a rotation vector,
///
///   theta = c1(X, J)^2 - 2 chi(X) - 3 sigma(X),
///
/// an invariant of the contact structure on the boundary.  A structure
/// filled by a rational homology ball has theta = -2.

#include "sfl/plumbing.hpp"

#include <functional>
#include <vector>

namespace sfl {

using RotationVector = std::vector<Integer>;

inline constexpr long long kDefaultEnumerationCap = 10'000'000;

inline RotationVector canonical_rotation(const StabilizedDiagram& d) {
    RotationVector rot;
    rot.reserve(d.size());
    for (const auto& v : d.vertices) rot.push_back(v.capacity);
    return rot;
}

inline bool valid_rotation(const StabilizedDiagram& d, const RotationVector& rot) {
    if (rot.size() != d.size()) return false;
    for (std::size_t i = 0; i < rot.size(); ++i) {
        const Integer& c = d.vertices[i].capacity;
        if (rot[i] > c || rot[i] < -c) return false;
        if ((rot[i] - c) % 2 != 0) return false;
    }
    return true;
}

/// Lazy enumeration of all rotation vectors of a diagram in lexicographic
/// order (vertex 0 most significant, entries ascending from -capacity).
/// Random access by index keeps batch sweeps deterministic under chunking.
class StructureEnumeration {
public:
    explicit StructureEnumeration(const StabilizedDiagram& d) {
        caps_.reserve(d.size());
        for (const auto& v : d.vertices) caps_.push_back(v.capacity);
    }

    Integer count() const {
        Integer c = 1;
        for (const Integer& cap : caps_) c *= cap + 1;
        return c;
    }

    RotationVector at(Integer idx) const {
        if (idx < 0 || idx >= count())
            throw std::domain_error("StructureEnumeration: index out of range");
        RotationVector rot(caps_.size());
        for (std::size_t i = caps_.size(); i-- > 0;) {
            Integer radix = caps_[i] + 1;
            Integer digit = idx % radix;
            idx /= radix;
            rot[i] = -caps_[i] + 2 * digit;
        }
        return rot;
    }

    template <class F>
    void for_each(F&& f) const {
        RotationVector rot;
        rot.reserve(caps_.size());
        for (const Integer& c : caps_) rot.push_back(-c);
        for (;;) {
            f(const_cast<const RotationVector&>(rot));
            std::size_t i = caps_.size();
            while (i-- > 0) {
                if (rot[i] < caps_[i]) {
                    rot[i] += 2;
                    for (std::size_t j = i + 1; j < caps_.size(); ++j) rot[j] = -caps_[j];
                    break;
                }
                if (i == 0) return;
            }
        }
    }

    std::vector<RotationVector> materialize(const Integer& cap = Integer(kDefaultEnumerationCap)) const {
        Integer n = count();
        if (n > cap)
            throw std::domain_error("StructureEnumeration: " + n.str() +
                                    " structures exceed the materialization cap " + cap.str());
        std::vector<RotationVector> out;
        out.reserve(static_cast<std::size_t>(n));
        for_each([&](const RotationVector& r) { out.push_back(r); });
        return out;
    }

private:
    std::vector<Integer> caps_;
};

inline StructureEnumeration enumerate_structures(const StabilizedDiagram& d) {
    return StructureEnumeration(d);
}

/// Caches the intersection data of a diagram and evaluates theta on many
/// rotation vectors.  c1^2 = r^T Q^{-1} r is computed through the integer
/// adjugate, so per-vector work is pure integer arithmetic.
class ThetaContext {
public:
    explicit ThetaContext(const StabilizedDiagram& d) : data_(intersection_data(d)) {
        if (data_.nullity != 0)
            throw std::domain_error("theta: intersection form is degenerate (nullity " +
                                    std::to_string(data_.nullity) + ")");
        const std::size_t n = data_.form.rows();
        RationalMatrix inv = inverse(data_.form);
        det_int_ = data_.determinant.num();
        adj_.assign(n * n, Integer(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rational scaled = inv(i, j) * data_.determinant;
                adj_[i * n + j] = scaled.num();  // adjugate entries are integers
            }
    }

    const IntersectionData& data() const { return data_; }

    Rational c1_squared(const RotationVector& rot) const {
        const std::size_t n = data_.form.rows();
        if (rot.size() != n) throw std::domain_error("theta: rotation vector length mismatch");
        Integer acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (rot[i] == 0) continue;
            Integer row = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (rot[j] != 0) row += adj_[i * n + j] * rot[j];
            acc += rot[i] * row;
        }
        return Rational(acc, det_int_);
    }

    Rational theta(const RotationVector& rot) const {
        return c1_squared(rot) - Rational(Integer(2 * data_.chi)) -
               Rational(static_cast<long long>(3 * data_.sigma));
    }

private:
    IntersectionData data_;
    std::vector<Integer> adj_;
    Integer det_int_;
};

inline Rational theta(const StabilizedDiagram& d, const RotationVector& rot) {
    return ThetaContext(d).theta(rot);
}

enum class ConsistencyClass { Consistent, MostlyConsistent, Inconsistent };

inline const char* consistency_name(ConsistencyClass c) {
    switch (c) {
        case ConsistencyClass::Consistent: return "consistent";
        case ConsistencyClass::MostlyConsistent: return "mostly-consistent";
        default: return "inconsistent";
    }
}

namespace detail {
/// Sign of a fully stabilized vertex: +1/-1 at its capacity, 0 when the
/// capacity is zero (no stabilizations), anything else is mixed.
inline int vertex_sign(const Integer& cap, const Integer& rot, bool& mixed) {
    if (cap == 0) return 0;
    if (rot == cap) return 1;
    if (rot == -cap) return -1;
    mixed = true;
    return 0;
}
}  // namespace detail

/// Consistent: one sign epsilon realizes every entry as epsilon * capacity.
/// Mostly consistent: each leg (and the center) is pure on its own but the
/// signs disagree.  Inconsistent: some vertex is neither at capacity nor
/// vacuous, or a leg mixes signs.
inline ConsistencyClass classify_consistency(const StabilizedDiagram& d, const RotationVector& rot) {
    if (!d.is_star())
        throw std::domain_error("classify_consistency: diagram has no designated center");
    if (!valid_rotation(d, rot))
        throw std::domain_error("classify_consistency: invalid rotation vector");
    bool mixed = false;
    std::vector<int> unit_signs;
    int center_sign = detail::vertex_sign(
        d.vertices[static_cast<std::size_t>(d.center)].capacity,
        rot[static_cast<std::size_t>(d.center)], mixed);
    if (center_sign != 0) unit_signs.push_back(center_sign);
    for (const auto& leg : d.legs) {
        int leg_sign = 0;
        for (int v : leg) {
            int s = detail::vertex_sign(d.vertices[static_cast<std::size_t>(v)].capacity,
                                        rot[static_cast<std::size_t>(v)], mixed);
            if (mixed) return ConsistencyClass::Inconsistent;
            if (s == 0) continue;
            if (leg_sign == 0) leg_sign = s;
            else if (leg_sign != s) return ConsistencyClass::Inconsistent;
        }
        if (leg_sign != 0) unit_signs.push_back(leg_sign);
    }
    if (mixed) return ConsistencyClass::Inconsistent;
    for (std::size_t i = 1; i < unit_signs.size(); ++i)
        if (unit_signs[i] != unit_signs[0]) return ConsistencyClass::MostlyConsistent;
    return ConsistencyClass::Consistent;
}

/// Closed form for the canonical theta of the lens space L(p, q):
/// -(I(p/q) + (2 + q + q*)/p) with q q* = 1 mod p.
inline Rational theta_lens_closed(const Integer& p, const Integer& q) {
    if (p < 2 || q < 1 || q >= p || int_gcd(p, q) != 1)
        throw std::domain_error("theta_lens_closed: need coprime 0 < q < p");
    Integer qs = mod_inverse(q, p);
    return -(Rational(i_invariant(Rational(p, q))) + Rational(2 + q + qs, p));
}

struct PrismTheta {
    Rational theta;
    Rational c1_squared;
};

/// Closed form for the canonical theta of the prism manifold D(p, q),
/// q >= 2: with p/q = [a0, ..., ak] and L = [ak, ..., a1, a0 - 1],
///   c1^2 = 2k + 3 - (a0 + ... + ak) - 1/L,   theta = 1 - I(p/q) - 1/L.
inline PrismTheta theta_prism_closed(const Integer& p, const Integer& q) {
    if (q < 2 || p <= q || int_gcd(p, q) != 1)
        throw std::domain_error("theta_prism_closed: need coprime 1 < q < p");
    NegCF cf = cf_expand(Rational(p, q));
    const std::size_t k = cf.size() - 1;
    std::vector<Integer> rev(cf.coeffs.rbegin(), cf.coeffs.rend());
    rev.back() -= 1;
    Rational tail = cf_eval(rev).inverse();
    Integer sum = 0;
    for (const Integer& a : cf.coeffs) sum += a;
    PrismTheta out;
    out.c1_squared = Rational(Integer(2 * k + 3) - sum) - tail;
    out.theta = Rational(1) - Rational(i_invariant(Rational(p, q))) - tail;
    return out;
}

enum class TorusSurgeryCase {
    ReciprocalInteger,  // coefficient -1/n
    NegativeInteger,    // coefficient -n
};

/// Canonical theta of -1/n or -n surgery on the (p, q) torus knot.
inline Rational theta_torus_closed(const Integer& p, const Integer& q, const Integer& n,
                                   TorusSurgeryCase which) {
    if (p < 2 || q <= p || int_gcd(p, q) != 1)
        throw std::domain_error("theta_torus_closed: need coprime 1 < p < q");
    if (n < 1) throw std::domain_error("theta_torus_closed: need n >= 1");
    Integer g = p * q - p - q;
    if (which == TorusSurgeryCase::ReciprocalInteger)
        return Rational(-n * g * g + n - 2);
    Integer t = g + n - 1;
    return -Rational(t * t, n) - Rational(1);
}

}  // namespace sfl
