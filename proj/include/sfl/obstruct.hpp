#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sfl/contact.hpp"
#include "sfl/qhb.hpp"

namespace sfl {

// ---------------------------------------------------------------------------
// O-membership: fractions p/q with p = m^2 and q = mh - 1 for coprime
// 0 < h < m.  These are exactly the lens parameters whose canonical structure
// admits a rational homology ball filling.
// ---------------------------------------------------------------------------

inline std::optional<std::pair<Integer, Integer>> o_membership(const Integer& p,
                                                               const Integer& q) {
    if (p < 2 || q < 1 || q >= p || int_gcd(p, q) != 1)
        throw std::domain_error("o_membership: need coprime 0 < q < p");
    Integer m = boost::multiprecision::sqrt(p);
    if (m * m != p) return std::nullopt;
    if ((q + 1) % m != 0) return std::nullopt;
    Integer h = (q + 1) / m;
    if (h <= 0 || h >= m || int_gcd(m, h) != 1) return std::nullopt;
    return std::make_pair(m, h);
}

// ---------------------------------------------------------------------------
// L-space recognition for central weight -1.
// ---------------------------------------------------------------------------

enum class LSpaceStatus { LSpace, NotLSpace, Unknown };

inline const char* lspace_status_name(LSpaceStatus s) {
    switch (s) {
        case LSpaceStatus::LSpace: return "L-space";
        case LSpaceStatus::NotLSpace: return "not an L-space";
        default: return "unknown";
    }
}

/// L-space test for Y(-1; r1, r2, r3): an L-space when the multiplier sum is
/// at least 3/2 or the two largest multipliers sum to at least 1; not an
/// L-space when the sum is below 1; unresolved in between.
inline LSpaceStatus lspace_status(const SeifertData& s) {
    if (s.e0 != -1)
        throw std::domain_error("lspace_status: defined for central weight -1 only");
    Rational sum = s.r[0] + s.r[1] + s.r[2];
    if (sum >= Rational(3, 2) || s.r[0] + s.r[1] >= Rational(1)) return LSpaceStatus::LSpace;
    if (sum < Rational(1)) return LSpaceStatus::NotLSpace;
    return LSpaceStatus::Unknown;
}

// ---------------------------------------------------------------------------
// Spherical-manifold plumbing graphs.
// ---------------------------------------------------------------------------

enum class SphericalKind { T3, T27, I49 };

inline const char* spherical_name(SphericalKind k) {
    switch (k) {
        case SphericalKind::T3: return "T3";
        case SphericalKind::T27: return "T27";
        default: return "I49";
    }
}

namespace detail {

inline StabilizedDiagram star_from_weights(Integer center,
                                           const std::vector<std::vector<Integer>>& legs,
                                           bool flag_center = false) {
    StabilizedDiagram d;
    Integer ccap = flag_center ? Integer(0) : plumbing_capacity(center);
    d.vertices.push_back({std::move(center), std::move(ccap)});
    d.center = 0;
    d.center_capacity_flagged = flag_center;
    for (const auto& ws : legs) {
        std::vector<int> leg;
        int prev = 0;
        for (const Integer& w : ws) {
            int id = static_cast<int>(d.vertices.size());
            d.vertices.push_back({w, plumbing_capacity(w)});
            d.edges.emplace_back(prev, id);
            leg.push_back(id);
            prev = id;
        }
        if (!leg.empty()) d.legs.push_back(std::move(leg));
    }
    return d;
}

}  // namespace detail

/// The tetrahedral and icosahedral spherical manifolds used as regression
/// anchors: three-legged stars pinned by their canonical theta values.
inline StabilizedDiagram spherical_graph(SphericalKind kind) {
    switch (kind) {
        case SphericalKind::T3:
            return detail::star_from_weights(Integer(-2), {{-2, -2}, {-2}, {-3}});
        case SphericalKind::T27:
            return detail::star_from_weights(Integer(-6), {{-2, -2}, {-2}, {-3}});
        default:
            return detail::star_from_weights(Integer(-3), {{-2, -2}, {-2}, {-5}});
    }
}

/// Prism-manifold plumbing D(p, q): the chain of p/q = [a0, ..., ak] with two
/// extra -2 vertices attached at the -a0 end.  Stored as a star centered at
/// -a0 whose legs are the two -2 leaves and the -a1 ... -ak chain.
inline StabilizedDiagram prism_graph(const Integer& p, const Integer& q) {
    if (q < 2 || p <= q || int_gcd(p, q) != 1)
        throw std::domain_error("prism_graph: need coprime p > q >= 2");
    NegCF cf = cf_expand(Rational(p, q));
    std::vector<Integer> chain;
    for (std::size_t i = 1; i < cf.size(); ++i) chain.push_back(-cf[i]);
    return detail::star_from_weights(-cf[0], {{-2}, {-2}, chain});
}

// ---------------------------------------------------------------------------
// Nonnegative-center surgery presentation.  For e0 >= 0 the tight structures
// are classified through a diagram with a zero-framed central curve and legs
// expanding -1/s1, -1/s2, -1/s3 where s1 = e0 + r1 absorbs the central
// weight.  The central vertex carries no stabilization choice and leg signs
// alone determine the consistency class; the diagram is not a Legendrian
// surgery picture, so no theta is attached to it.
// ---------------------------------------------------------------------------

inline StabilizedDiagram nonneg_diagram(const SeifertData& s) {
    if (s.e0 < 0) throw std::domain_error("nonneg_diagram: need central weight >= 0");
    std::array<Rational, 3> slopes{Rational(s.e0) + s.r[0], s.r[1], s.r[2]};
    std::vector<std::vector<Integer>> legs;
    for (const Rational& x : slopes) {
        std::vector<Integer> ws;
        if (x < Rational(1)) {
            for (const Integer& a : cf_expand(x.inverse()).coeffs) ws.push_back(-a);
        } else {
            // -1/x = [-1] followed by the expansion of x/(x-1) negated
            ws.push_back(Integer(-1));
            for (const Integer& a : cf_expand(x / (x - Rational(1))).coeffs) ws.push_back(-a);
        }
        legs.push_back(std::move(ws));
    }
    return detail::star_from_weights(Integer(0), legs, /*flag_center=*/true);
}

// ---------------------------------------------------------------------------
// Fillable-example generator: cabling construction over a fiber knot.
// ---------------------------------------------------------------------------

struct FillingConstruction {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> data;
};

/// A generated manifold together with its filling recipe.  The filling is
/// the trace of a single two-handle attached to S^1 x D^3 along a cable that
/// wraps m times in the homology of the solid-torus neighborhood, so the
/// trace has chi = 1, vanishing signature, and torsion first Chern class.
struct FillableExample {
    SeifertData seifert;
    Integer cable_m;                          // cable type (m, -h)
    Integer cable_h;
    Integer stabilizations;                   // k added stabilizations on the companion
    std::pair<Integer, Integer> companion;    // fiber knot type of q/p
    Rational companion_surgery;               // coefficient on the companion
    Integer cable_surgery;                    // integer coefficient on the cable, -(mh+1)
    Integer trace_chi;
    long trace_sigma = 0;
    Rational trace_c1_squared;

    Rational theta() const {
        return trace_c1_squared - Rational(2) * Rational(trace_chi) -
               Rational(3) * Rational(Integer(trace_sigma));
    }

    FillingConstruction construction() const {
        FillingConstruction c;
        c.kind = "cable-trace";
        c.data = {
            {"cable", "(" + cable_m.str() + ", " + Integer(-cable_h).str() + ")"},
            {"stabilizations", stabilizations.str()},
            {"companion-fiber", "(" + companion.first.str() + ", " + companion.second.str() + ")"},
            {"companion-surgery", companion_surgery.str_exact()},
            {"cable-surgery", cable_surgery.str()},
            {"trace-theta", theta().str_exact()},
        };
        return c;
    }
};

/// Build the fillable example attached to x = q/p in (0, 1), cable type
/// (m, -h), and k extra stabilizations: the normalized Seifert form of the
/// surgery triple (p/q, -p/q, m^2/(k m^2 + m h + 1)).
inline FillableExample generate_fillable(const Rational& x, const Integer& m, const Integer& h,
                                         const Integer& k) {
    if (!x.is_positive() || x >= Rational(1))
        throw std::domain_error("generate_fillable: fraction must lie in (0, 1)");
    if (x.num() == 1)
        throw std::domain_error("generate_fillable: fraction 1/n gives a lens space");
    if (h <= 0 || h >= m || int_gcd(m, h) != 1)
        throw std::domain_error("generate_fillable: need coprime 0 < h < m");
    if (k < 0) throw std::domain_error("generate_fillable: stabilization count must be >= 0");

    const Integer q = x.num(), p = x.den();
    Rational slot(m * m, k * m * m + m * h + 1);
    FillableExample out;
    out.seifert = normalize_seifert(Integer(0), {Rational(p, q), -Rational(p, q), slot});
    out.cable_m = m;
    out.cable_h = h;
    out.stabilizations = k;
    out.companion = fiber_knot_type(x);
    out.cable_surgery = -(m * h + 1);
    out.companion_surgery = -Rational(k * m * m + m * h + 1, m * m);
    // Slope transfer: an integral coefficient c on the (m, -h) cable reaches
    // the companion as c/m^2, shifted by one per added stabilization.
    if (out.companion_surgery != Rational(out.cable_surgery, m * m) - Rational(k))
        throw std::logic_error("generate_fillable: slope transfer identity failed");
    out.trace_chi = 1;
    out.trace_sigma = 0;
    out.trace_c1_squared = Rational(0);
    return out;
}

// ---------------------------------------------------------------------------
// Fillability verdicts.
// ---------------------------------------------------------------------------

enum class FillStatus { Fillable, NotFillable, Candidate, Unknown };

inline const char* fill_status_name(FillStatus s) {
    switch (s) {
        case FillStatus::Fillable: return "Fillable";
        case FillStatus::NotFillable: return "NotFillable";
        case FillStatus::Candidate: return "Candidate";
        default: return "Unknown";
    }
}

// Rule tags name the obstruction or construction a verdict rests on.
inline constexpr const char* kRuleThetaFilter = "rhb-theta-filter";
inline constexpr const char* kRuleCanonicalMinimum = "canonical-theta-minimum";
inline constexpr const char* kRuleCensus = "plumbing-census";
inline constexpr const char* kRuleSplitting = "mixed-torus-splitting";
inline constexpr const char* kRuleConsistencyOpen = "consistency-open";
inline constexpr const char* kRuleSeifertRange = "seifert-invariant-range";
inline constexpr const char* kRuleLensBall = "lens-canonical-ball";
inline constexpr const char* kRuleSpherical = "spherical-obstruction";
inline constexpr const char* kRuleTorusOpen = "torus-surgery-open";
inline constexpr const char* kRuleScope = "outside-decision-scope";
inline constexpr const char* kRuleNonQhs = "not-rational-homology-sphere";

struct StructureVerdict {
    std::optional<RotationVector> rotation;  // absent on aggregate rows
    std::string structure_class;
    std::optional<Rational> theta;
    FillStatus status = FillStatus::Unknown;
    std::string rule;
    std::string reason;
    std::optional<FillingConstruction> construction;
};

struct VerdictReport {
    std::string input;
    std::vector<StructureVerdict> structures;
    std::vector<std::string> notes;
};

struct VerdictOptions {
    bool enumerate_all = false;
    Integer cap = Integer(kDefaultEnumerationCap);
};

namespace detail {

inline std::string rotation_str(const RotationVector& rot) {
    std::string s = "(";
    for (std::size_t i = 0; i < rot.size(); ++i) {
        if (i) s += ", ";
        s += rot[i].str();
    }
    return s + ")";
}

/// Distinct rotation vectors in which every vertex sits at a signed capacity,
/// signs uniform on the center and on each leg: the representatives of the
/// consistent and mostly consistent classes.  Ordered consistent first.
inline std::vector<RotationVector> sign_class_representatives(const StabilizedDiagram& d) {
    std::vector<RotationVector> reps;
    std::set<RotationVector> seen;
    const std::size_t nlegs = d.legs.size();
    for (unsigned bits = 0; bits < (1u << (nlegs + 1)); ++bits) {
        RotationVector rot(d.size());
        int csign = (bits & 1u) ? -1 : 1;
        rot[static_cast<std::size_t>(d.center)] =
            Integer(csign) * d.vertices[static_cast<std::size_t>(d.center)].capacity;
        for (std::size_t l = 0; l < nlegs; ++l) {
            int sign = (bits & (1u << (l + 1))) ? -1 : 1;
            for (int v : d.legs[l])
                rot[static_cast<std::size_t>(v)] =
                    Integer(sign) * d.vertices[static_cast<std::size_t>(v)].capacity;
        }
        if (seen.insert(rot).second) reps.push_back(std::move(rot));
    }
    std::stable_sort(reps.begin(), reps.end(),
                     [&](const RotationVector& a, const RotationVector& b) {
                         auto rank = [&](const RotationVector& r) {
                             switch (classify_consistency(d, r)) {
                                 case ConsistencyClass::Consistent: return 0;
                                 case ConsistencyClass::MostlyConsistent: return 1;
                                 default: return 2;
                             }
                         };
                         return rank(a) < rank(b);
                     });
    return reps;
}

inline void guard_enumeration(const StructureEnumeration& e, const VerdictOptions& opts) {
    if (e.count() > opts.cap)
        throw std::domain_error("enumeration cap exceeded: " + e.count().str() +
                                " structures over cap " + opts.cap.str());
}

}  // namespace detail

/// Verdicts for a lens space L(p, q): the canonical pair is fillable exactly
/// when p/q has the square form, and nothing else ever reaches theta = -2.
inline VerdictReport filling_verdict_lens(const Integer& p, const Integer& q,
                                          const VerdictOptions& opts = {}) {
    VerdictReport rep;
    rep.input = "L(" + p.str() + ", " + q.str() + ")";
    auto o = o_membership(p, q);
    Integer qs = mod_inverse(q, p);
    if (qs != q) {
        auto o_alt = o_membership(p, qs);
        if (static_cast<bool>(o) != static_cast<bool>(o_alt))
            rep.notes.push_back("square-form test differs between q and its inverse " + qs.str());
    }
    StabilizedDiagram chain = lens_chain(p, q);
    ThetaContext ctx(chain);
    RotationVector can = canonical_rotation(chain);
    Rational theta_can = ctx.theta(can);

    if (o) {
        FillingConstruction c;
        c.kind = "lens-ball";
        c.data = {{"m", o->first.str()}, {"h", o->second.str()}};
        for (int sign : {1, -1}) {
            RotationVector rot = can;
            if (sign < 0)
                for (auto& x : rot) x = -x;
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = "consistent";
            v.theta = theta_can;
            v.status = FillStatus::Fillable;
            v.rule = kRuleLensBall;
            v.reason = sign > 0 ? "square-form parameters admit the standard ball filling"
                                : "orientation twin of the canonical structure";
            v.construction = c;
            rep.structures.push_back(std::move(v));
        }
    }
    StructureEnumeration en(chain);
    if (opts.enumerate_all) {
        detail::guard_enumeration(en, opts);
        RotationVector neg = can;
        for (auto& x : neg) x = -x;
        en.for_each([&](const RotationVector& rot) {
            if (o && (rot == can || rot == neg)) return;
            Rational th = ctx.theta(rot);
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = consistency_name(classify_consistency(chain, rot));
            v.theta = th;
            if (th != Rational(-2)) {
                v.status = FillStatus::NotFillable;
                v.rule = kRuleThetaFilter;
                v.reason = "theta = " + th.str() + " differs from -2";
            } else {
                v.status = FillStatus::Unknown;
                v.rule = kRuleScope;
                v.reason = "theta = -2 outside the decided cases";
            }
            rep.structures.push_back(std::move(v));
        });
    } else if (o) {
        StructureVerdict v;
        v.structure_class = "non-canonical";
        v.status = FillStatus::NotFillable;
        v.rule = kRuleCanonicalMinimum;
        v.reason = "canonical strictly minimizes theta, so every other structure has theta > -2";
        rep.structures.push_back(std::move(v));
    } else {
        StructureVerdict v;
        v.structure_class = "all";
        v.theta = theta_can;
        v.status = FillStatus::NotFillable;
        v.rule = kRuleThetaFilter;
        v.reason = "parameters lack the square form; canonical theta = " + theta_can.str() +
                   " and no structure reaches -2";
        rep.structures.push_back(std::move(v));
    }
    rep.notes.push_back("structures on the chain: " + en.count().str());
    return rep;
}

namespace detail {

/// Rows for a diagram in which no structure is fillable: one canonical row
/// with its theta and one aggregate (or a full enumeration).
inline void push_all_not_fillable(VerdictReport& rep, const StabilizedDiagram& d,
                                  const char* rule, const std::string& reason,
                                  const VerdictOptions& opts) {
    ThetaContext ctx(d);
    StructureEnumeration en(d);
    if (opts.enumerate_all) {
        guard_enumeration(en, opts);
        en.for_each([&](const RotationVector& rot) {
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = consistency_name(classify_consistency(d, rot));
            v.theta = ctx.theta(rot);
            v.status = FillStatus::NotFillable;
            v.rule = rule;
            v.reason = reason;
            rep.structures.push_back(std::move(v));
        });
    } else {
        RotationVector can = canonical_rotation(d);
        StructureVerdict v;
        v.rotation = can;
        v.structure_class = "consistent";
        v.theta = ctx.theta(can);
        v.status = FillStatus::NotFillable;
        v.rule = rule;
        v.reason = reason;
        rep.structures.push_back(std::move(v));
        StructureVerdict rest;
        rest.structure_class = "non-canonical";
        rest.status = FillStatus::NotFillable;
        rest.rule = rule;
        rest.reason = reason;
        rep.structures.push_back(std::move(rest));
    }
    rep.notes.push_back("structures on the diagram: " + en.count().str());
}

}  // namespace detail

/// Verdicts for the prism manifold D(p, q): no structure is ever filled by a
/// rational homology ball (theta bound when a smooth ball could exist, smooth
/// obstruction otherwise).
inline VerdictReport filling_verdict_prism(const Integer& p, const Integer& q,
                                           const VerdictOptions& opts = {}) {
    VerdictReport rep;
    rep.input = "D(" + p.str() + ", " + q.str() + ")";
    PrismTheta pt = theta_prism_closed(p, q);
    detail::push_all_not_fillable(
        rep, prism_graph(p, q), kRuleSpherical,
        "prism manifolds admit no rational-ball filling; canonical theta = " + pt.theta.str(),
        opts);
    return rep;
}

/// Verdicts for the pinned tetrahedral/icosahedral manifolds: never fillable.
inline VerdictReport filling_verdict_spherical(SphericalKind kind,
                                               const VerdictOptions& opts = {}) {
    VerdictReport rep;
    rep.input = spherical_name(kind);
    StabilizedDiagram d = spherical_graph(kind);
    Rational theta_can = ThetaContext(d).theta(canonical_rotation(d));
    detail::push_all_not_fillable(rep, d, kRuleSpherical,
                                  "canonical theta = " + theta_can.str() +
                                      " exceeds -2 and is the strict minimum",
                                  opts);
    return rep;
}

/// Verdicts for r-surgery on the (p, q) torus knot, r < 0, presented by the
/// stabilized chain: inconsistent structures split along a mixed torus, and
/// the consistent pair survives only if its theta equals -2.
inline VerdictReport filling_verdict_torus(const Integer& p, const Integer& q, const Rational& r,
                                           const VerdictOptions& opts = {}) {
    VerdictReport rep;
    rep.input = "surgery on T(" + p.str() + ", " + q.str() + ") with coefficient " + r.str();
    StabilizedDiagram chain = torus_surgery_chain(p, q, r);
    ThetaContext ctx(chain);
    RotationVector can = canonical_rotation(chain);
    Rational theta_can = ctx.theta(can);
    rep.notes.push_back("Seifert form: " + torus_surgery_seifert(p, q, r).str());

    auto consistent_row = [&](int sign) {
        RotationVector rot = can;
        if (sign < 0)
            for (auto& x : rot) x = -x;
        StructureVerdict v;
        v.rotation = rot;
        v.structure_class = "consistent";
        v.theta = theta_can;
        if (theta_can != Rational(-2)) {
            v.status = FillStatus::NotFillable;
            v.rule = kRuleThetaFilter;
            v.reason = "consistent theta = " + theta_can.str() + " differs from -2";
        } else {
            v.status = FillStatus::Candidate;
            v.rule = kRuleTorusOpen;
            v.reason = "consistent theta = -2; existence of a rational-ball filling is open";
        }
        return v;
    };
    rep.structures.push_back(consistent_row(1));
    RotationVector neg = can;
    for (auto& x : neg) x = -x;
    if (neg != can) rep.structures.push_back(consistent_row(-1));

    StructureEnumeration en(chain);
    if (opts.enumerate_all) {
        detail::guard_enumeration(en, opts);
        en.for_each([&](const RotationVector& rot) {
            if (rot == can || rot == neg) return;
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = "inconsistent";
            v.theta = ctx.theta(rot);
            v.status = FillStatus::NotFillable;
            v.rule = kRuleSplitting;
            v.reason = "mixed stabilization signs split any filling along a mixed torus";
            rep.structures.push_back(std::move(v));
        });
    } else if (en.count() > 2) {
        StructureVerdict v;
        v.structure_class = "inconsistent";
        v.status = FillStatus::NotFillable;
        v.rule = kRuleSplitting;
        v.reason = "mixed stabilization signs split any filling along a mixed torus";
        rep.structures.push_back(std::move(v));
    }
    rep.notes.push_back("structures on the chain: " + en.count().str());
    return rep;
}

/// Brieskorn wrapper: the sphere with parameters (p, q, pqn+1) is -1/n
/// surgery on the (p, q) torus knot.
inline VerdictReport filling_verdict_brieskorn(const Integer& p, const Integer& q,
                                               const Integer& n,
                                               const VerdictOptions& opts = {}) {
    if (n < 1) throw std::domain_error("filling_verdict_brieskorn: need n >= 1");
    VerdictReport rep = filling_verdict_torus(p, q, Rational(-1, n), opts);
    rep.notes.insert(rep.notes.begin(), "Brieskorn sphere Sigma(" + p.str() + ", " + q.str() +
                                            ", " + Integer(p * q * n + 1).str() + ")");
    return rep;
}

namespace detail {

/// Census flow shared by central weights <= -2: matched diagrams fill only
/// at the canonical pair; unmatched ones depend on the central weight.
inline void census_rows(VerdictReport& rep, const StabilizedDiagram& d,
                        const std::vector<QhbMatch>& matches, const VerdictOptions& opts) {
    ThetaContext ctx(d);
    RotationVector can = canonical_rotation(d);
    Rational theta_can = ctx.theta(can);
    FillingConstruction c;
    c.kind = "plumbing-census";
    {
        std::string assign;
        for (const auto& [k, v] : matches.front().assignment) {
            if (!assign.empty()) assign += ", ";
            assign += std::string(1, k) + " = " + v.str();
        }
        c.data = {{"family", matches.front().id}, {"assignment", assign}};
    }
    if (matches.size() > 1) {
        std::string all = "matched families:";
        for (const auto& m : matches) all += " " + m.id;
        rep.notes.push_back(all);
    }
    for (int sign : {1, -1}) {
        RotationVector rot = can;
        if (sign < 0)
            for (auto& x : rot) x = -x;
        StructureVerdict v;
        v.rotation = rot;
        v.structure_class = "consistent";
        v.theta = theta_can;
        v.status = FillStatus::Fillable;
        v.rule = kRuleCensus;
        v.reason = sign > 0 ? "plumbing matches a census family, so the canonical structure "
                              "bounds a rational homology ball"
                            : "orientation twin of the canonical structure";
        v.construction = c;
        rep.structures.push_back(std::move(v));
        if (sign > 0 && rot == RotationVector(rot.size(), Integer(0))) break;  // zero vector
    }
    StructureEnumeration en(d);
    if (opts.enumerate_all) {
        guard_enumeration(en, opts);
        RotationVector neg = can;
        for (auto& x : neg) x = -x;
        en.for_each([&](const RotationVector& rot) {
            if (rot == can || rot == neg) return;
            Rational th = ctx.theta(rot);
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = consistency_name(classify_consistency(d, rot));
            v.theta = th;
            if (th != Rational(-2)) {
                v.status = FillStatus::NotFillable;
                v.rule = kRuleThetaFilter;
                v.reason = "theta = " + th.str() + " differs from -2";
            } else {
                v.status = FillStatus::Unknown;
                v.rule = kRuleScope;
                v.reason = "theta = -2 off the canonical pair is outside the decided cases";
            }
            rep.structures.push_back(std::move(v));
        });
    } else if (en.count() > 2) {
        StructureVerdict v;
        v.structure_class = "non-canonical";
        v.status = FillStatus::NotFillable;
        v.rule = kRuleCanonicalMinimum;
        v.reason = "canonical strictly minimizes theta, so every other structure has theta > -2";
        rep.structures.push_back(std::move(v));
    }
    rep.notes.push_back("structures on the diagram: " + en.count().str());
}

}  // namespace detail

/// Verdicts for a small Seifert fibered space.  Dispatches on the central
/// weight: census matching for e0 <= -2, the L-space consistency filter for
/// e0 = -2, the multiplier-range obstruction for e0 = -1, and the
/// consistency classes of the nonnegative-center presentation for e0 >= 0.
inline VerdictReport filling_verdict(const SeifertData& s,
                                     const std::vector<QhbFamily>& families,
                                     const VerdictOptions& opts = {}) {
    VerdictReport rep;
    rep.input = s.str();
    if (euler_sum(s) == 0) {
        StructureVerdict v;
        v.structure_class = "all";
        v.status = FillStatus::Unknown;
        v.rule = kRuleNonQhs;
        v.reason = "multiplier sum cancels the central weight: not a rational homology sphere";
        rep.structures.push_back(std::move(v));
        return rep;
    }

    if (s.e0 <= -2) {
        StabilizedDiagram d = seifert_to_plumbing(s);
        std::vector<QhbMatch> matches = qhb_match(d, families);
        if (!matches.empty()) {
            detail::census_rows(rep, d, matches, opts);
            return rep;
        }
        if (s.e0 <= -3) {
            std::string reason =
                s.e0 < -4 ? "central weight below the census range, so no structure bounds "
                            "a rational homology ball"
                          : "plumbing matches no census family, so no structure bounds a "
                            "rational homology ball";
            detail::push_all_not_fillable(rep, d, kRuleCensus, reason, opts);
            return rep;
        }
        // e0 = -2, not in the census: decide through the reversed orientation.
        SeifertData rev = orientation_reverse(s);
        LSpaceStatus ls = lspace_status(rev);
        rep.notes.push_back("orientation reverse " + rev.str() + " is " + lspace_status_name(ls));
        ThetaContext ctx(d);
        std::vector<RotationVector> reps = detail::sign_class_representatives(d);
        std::set<RotationVector> rep_set(reps.begin(), reps.end());
        bool lspace = ls == LSpaceStatus::LSpace;
        for (const RotationVector& rot : reps) {
            ConsistencyClass cls = classify_consistency(d, rot);
            Rational th = ctx.theta(rot);
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = consistency_name(cls);
            v.theta = th;
            if (th != Rational(-2)) {
                v.status = FillStatus::NotFillable;
                v.rule = kRuleThetaFilter;
                v.reason = "theta = " + th.str() + " differs from -2";
            } else if (lspace && cls != ConsistencyClass::Inconsistent) {
                v.status = FillStatus::Candidate;
                v.rule = kRuleConsistencyOpen;
                v.reason = "consistency filter passes and theta = -2; existence is open";
            } else {
                v.status = FillStatus::Unknown;
                v.rule = kRuleScope;
                v.reason = "theta = -2 outside the decided cases";
            }
            rep.structures.push_back(std::move(v));
        }
        StructureEnumeration en(d);
        if (opts.enumerate_all) {
            detail::guard_enumeration(en, opts);
            en.for_each([&](const RotationVector& rot) {
                if (rep_set.count(rot)) return;
                Rational th = ctx.theta(rot);
                StructureVerdict v;
                v.rotation = rot;
                v.structure_class = consistency_name(classify_consistency(d, rot));
                v.theta = th;
                if (lspace) {
                    v.status = FillStatus::NotFillable;
                    v.rule = kRuleSplitting;
                    v.reason = "mixed stabilization signs split any filling along a mixed torus";
                } else if (th != Rational(-2)) {
                    v.status = FillStatus::NotFillable;
                    v.rule = kRuleThetaFilter;
                    v.reason = "theta = " + th.str() + " differs from -2";
                } else {
                    v.status = FillStatus::Unknown;
                    v.rule = kRuleScope;
                    v.reason = "theta = -2 outside the decided cases";
                }
                rep.structures.push_back(std::move(v));
            });
        } else if (en.count() > Integer(static_cast<long long>(reps.size()))) {
            StructureVerdict v;
            v.structure_class = "inconsistent";
            if (lspace) {
                v.status = FillStatus::NotFillable;
                v.rule = kRuleSplitting;
                v.reason = "mixed stabilization signs split any filling along a mixed torus";
            } else {
                Inertia in = inertia(ctx.data().form);
                Rational theta_can = ctx.theta(canonical_rotation(d));
                if (in.positive == 0 && in.nullity == 0 && theta_can >= Rational(-2)) {
                    v.status = FillStatus::NotFillable;
                    v.rule = kRuleCanonicalMinimum;
                    v.reason = "canonical theta = " + theta_can.str() +
                               " is the strict minimum, so the rest stay above -2";
                } else {
                    v.status = FillStatus::Unknown;
                    v.rule = kRuleScope;
                    v.reason = "no decision theorem covers this case";
                }
            }
            rep.structures.push_back(std::move(v));
        }
        rep.notes.push_back("structures on the diagram: " + en.count().str());
        return rep;
    }

    if (s.e0 == -1) {
        Rational sum = s.r[0] + s.r[1] + s.r[2];
        Rational two = s.r[0] + s.r[1];
        StructureVerdict v;
        v.structure_class = "all";
        if (sum > Rational(1) && two < Rational(1)) {
            v.status = FillStatus::NotFillable;
            v.rule = kRuleSeifertRange;
            v.reason = "multipliers satisfy r1+r2+r3 > 1 > r1+r2: no structure bounds a "
                       "rational homology ball";
        } else {
            v.status = FillStatus::Unknown;
            v.rule = kRuleScope;
            v.reason = sum <= Rational(1)
                           ? "multiplier sum at most 1: outside the decided range"
                           : "two largest multipliers reach 1: outside the decided range";
            rep.notes.push_back("L-space status: " + std::string(lspace_status_name(
                                    lspace_status(s))));
        }
        rep.structures.push_back(std::move(v));
        return rep;
    }

    // e0 >= 0: consistency classes of the nonnegative-center presentation.
    StabilizedDiagram nd = nonneg_diagram(s);
    std::vector<RotationVector> reps = detail::sign_class_representatives(nd);
    std::set<RotationVector> rep_set(reps.begin(), reps.end());
    for (const RotationVector& rot : reps) {
        ConsistencyClass cls = classify_consistency(nd, rot);
        StructureVerdict v;
        v.rotation = rot;
        v.structure_class = consistency_name(cls);
        v.status = FillStatus::Candidate;
        v.rule = kRuleConsistencyOpen;
        v.reason = cls == ConsistencyClass::Consistent
                       ? "consistency filter passes; a filling, if one exists, is unique"
                       : "consistency filter passes; existence is open";
        rep.structures.push_back(std::move(v));
    }
    StructureEnumeration en(nd);
    if (opts.enumerate_all) {
        detail::guard_enumeration(en, opts);
        en.for_each([&](const RotationVector& rot) {
            if (rep_set.count(rot)) return;
            StructureVerdict v;
            v.rotation = rot;
            v.structure_class = consistency_name(classify_consistency(nd, rot));
            v.status = FillStatus::NotFillable;
            v.rule = kRuleSplitting;
            v.reason = "mixed stabilization signs split any filling along a mixed torus";
            rep.structures.push_back(std::move(v));
        });
    } else if (en.count() > Integer(static_cast<long long>(reps.size()))) {
        StructureVerdict v;
        v.structure_class = "inconsistent";
        v.status = FillStatus::NotFillable;
        v.rule = kRuleSplitting;
        v.reason = "mixed stabilization signs split any filling along a mixed torus";
        rep.structures.push_back(std::move(v));
    }
    rep.notes.push_back("no theta is attached: the nonnegative-center presentation is not a "
                        "Legendrian surgery diagram");
    rep.notes.push_back("structures on the diagram: " + en.count().str());
    return rep;
}

inline VerdictReport filling_verdict(const SeifertData& s, const VerdictOptions& opts = {}) {
    return filling_verdict(s, default_qhb_families(), opts);
}

}  // namespace sfl
