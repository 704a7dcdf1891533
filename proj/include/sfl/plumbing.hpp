#pragma once

/// Seifert invariants, plumbing trees with stabilization capacities, and
/// their intersection data.
///
/// A small Seifert fibered space Y(e0; r1, r2, r3) with each ri in (0, 1) is
/// stored with the multipliers sorted descending, so equal spaces have equal
/// representations.  Its standard plumbing is the star with central weight
/// e0 and one leg per multiplier carrying the negated continued fraction
/// expansion of 1/ri.  Each vertex also records how many stabilizations the
/// corresponding unknot admits (|weight| - 2 for plumbing vertices; surgery
/// chains may carry a larger explicit head capacity).

#include "sfl/exactmath.hpp"
#include "sfl/matrix.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sfl {

struct SeifertData {
    Integer e0;
    std::array<Rational, 3> r;  // sorted descending, each in (0, 1)

    friend bool operator==(const SeifertData&, const SeifertData&) = default;

    std::string str() const {
        return "Y(" + e0.str() + "; " + r[0].str() + ", " + r[1].str() + ", " + r[2].str() + ")";
    }
};

inline SeifertData make_seifert(Integer e0, std::array<Rational, 3> r) {
    for (const auto& x : r)
        if (!x.is_positive() || x >= Rational(1))
            throw std::domain_error("make_seifert: multipliers must lie in (0, 1)");
    std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return SeifertData{std::move(e0), std::move(r)};
}

/// Normal form of (e; x1, ..., xn): each slot sheds its integer part into
/// the central coefficient, and integer slots are absorbed entirely.
/// Exactly three fractional multipliers must survive.
inline SeifertData normalize_seifert(Integer e, const std::vector<Rational>& slots) {
    std::array<Rational, 3> r;
    std::size_t got = 0;
    for (const auto& x : slots) {
        Integer fl = x.floor();
        Rational frac = x - Rational(fl);
        e += fl;
        if (frac.is_zero()) continue;  // integer slot: absorbed
        if (got == 3)
            throw std::domain_error("normalize_seifert: more than three singular fibers");
        r[got++] = frac;
    }
    if (got != 3)
        throw std::domain_error("normalize_seifert: need exactly three non-integer multipliers");
    return make_seifert(std::move(e), std::move(r));
}

/// e0 + r1 + r2 + r3.  Zero exactly when Y is not a rational homology
/// sphere; the rational Euler number of the fibration is its negation.
inline Rational euler_sum(const SeifertData& s) {
    return Rational(s.e0) + s.r[0] + s.r[1] + s.r[2];
}

/// The same space with reversed orientation: Y(-e0 - 3; 1 - r3, 1 - r2, 1 - r1).
inline SeifertData orientation_reverse(const SeifertData& s) {
    return normalize_seifert(-s.e0, {-s.r[0], -s.r[1], -s.r[2]});
}

/// The knot type (q, -q') of the fiber in the surgery description of the
/// fibration over S1 x S2 with multiplier q/p: q' is determined by
/// p'q - q'p = 1 with 0 < p' < p.
inline std::pair<Integer, Integer> fiber_knot_type(const Rational& x) {
    if (!x.is_positive() || x >= Rational(1))
        throw std::domain_error("fiber_knot_type: multiplier must lie in (0, 1)");
    const Integer q = x.num(), p = x.den();
    if (q == 1) return {Integer(1), Integer(0)};  // unknotted fiber
    Integer pp = mod_inverse(q, p);
    Integer qp = (pp * q - 1) / p;
    return {q, -qp};
}

/// Seifert form of r-surgery on the (p, q) torus knot, r < 0:
/// Y(-1; (p - q*)/p, (q - p*)/q, 1/(pq - r)) with q* q = 1 mod p and
/// p* p = 1 mod q.
inline SeifertData torus_surgery_seifert(const Integer& p, const Integer& q, const Rational& r) {
    if (p < 2 || q <= p || int_gcd(p, q) != 1)
        throw std::domain_error("torus_surgery_seifert: need coprime 1 < p < q");
    if (!r.is_negative())
        throw std::domain_error("torus_surgery_seifert: surgery coefficient must be negative");
    Integer qs = mod_inverse(q % p, p);
    Integer ps = mod_inverse(p % q, q);
    Rational third = (Rational(p) * Rational(q) - r).inverse();
    return make_seifert(Integer(-1), {Rational(p - qs, p), Rational(q - ps, q), third});
}

struct DiagramVertex {
    Integer weight;
    Integer capacity;  // number of stabilizations the unknot admits
};

/// A plumbing tree (or surgery chain) whose vertices carry stabilization
/// capacities.  Star-shaped diagrams record their center and legs, each leg
/// listed from the center outward.
struct StabilizedDiagram {
    std::vector<DiagramVertex> vertices;
    std::vector<std::pair<int, int>> edges;
    int center = -1;                      // -1: no designated center
    std::vector<std::vector<int>> legs;   // vertex ids, center outward
    bool center_capacity_flagged = false; // central weight > -2: capacity not meaningful

    std::size_t size() const { return vertices.size(); }
    bool is_star() const { return center >= 0; }
};

namespace detail {
inline void check_tree(const StabilizedDiagram& d) {
    const std::size_t n = d.vertices.size();
    if (n == 0) throw std::domain_error("diagram: empty");
    if (d.edges.size() + 1 != n) throw std::domain_error("diagram: not a tree");
    std::vector<int> seen(n, 0);
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : d.edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
            throw std::domain_error("diagram: edge endpoint out of range");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++cnt;
                stack.push_back(w);
            }
    }
    if (cnt != n) throw std::domain_error("diagram: not connected");
}

inline Integer plumbing_capacity(const Integer& w) {
    Integer c = (w < 0 ? -w : w) - 2;
    return c < 0 ? Integer(0) : c;
}
}  // namespace detail

/// Star plumbing of Y(e0; r1, r2, r3): center e0, legs from the canonical
/// expansions of 1/ri with negated entries.  For e0 > -2 the central
/// capacity is stored as 0 and flagged: such diagrams are still valid
/// intersection data but do not present the tight structures.
inline StabilizedDiagram seifert_to_plumbing(const SeifertData& s) {
    StabilizedDiagram d;
    Integer ccap = s.e0 <= -2 ? -s.e0 - 2 : Integer(0);
    d.vertices.push_back({s.e0, ccap});
    d.center = 0;
    d.center_capacity_flagged = s.e0 > -2;
    for (const auto& ri : s.r) {
        NegCF cf = cf_expand(ri.inverse());
        std::vector<int> leg;
        int prev = 0;
        for (const Integer& a : cf.coeffs) {
            int id = static_cast<int>(d.vertices.size());
            d.vertices.push_back({-a, a - 2});
            d.edges.emplace_back(prev, id);
            leg.push_back(id);
            prev = id;
        }
        d.legs.push_back(std::move(leg));
    }
    return d;
}

/// Linear chain presenting the lens space L(p, q): weights -a_i from
/// p/q = [a0, ..., ak], capacities a_i - 2.  Stored as a star with the
/// head as center so consistency classification applies.
inline StabilizedDiagram lens_chain(const Integer& p, const Integer& q) {
    if (p < 2 || q < 1 || q >= p || int_gcd(p, q) != 1)
        throw std::domain_error("lens_chain: need coprime 0 < q < p");
    NegCF cf = cf_expand(Rational(p, q));
    StabilizedDiagram d;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        d.vertices.push_back({-cf[i], cf[i] - 2});
        if (i > 0) d.edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    d.center = 0;
    std::vector<int> tail;
    for (std::size_t i = 1; i < cf.size(); ++i) tail.push_back(static_cast<int>(i));
    if (!tail.empty()) d.legs.push_back(std::move(tail));
    return d;
}

/// Chain presenting contact r-surgery, r = -[a0, ..., ak] with a0 >= 1:
/// weights -a_i, head capacity a0 - 1 + extra_head, tail capacities a_i - 2.
/// The extra head capacity accounts for the Thurston-Bennequin number of a
/// nontrivial surgery knot (pq - p - q for a torus knot).
inline StabilizedDiagram surgery_chain(const NegCF& cf, const Integer& extra_head = Integer(0)) {
    if (cf.size() == 0) throw std::domain_error("surgery_chain: empty expansion");
    StabilizedDiagram d;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        Integer cap = i == 0 ? Integer(cf[0] - 1 + extra_head) : Integer(cf[i] - 2);
        if (cap < 0) throw std::domain_error("surgery_chain: negative head capacity");
        d.vertices.push_back({-cf[i], cap});
        if (i > 0) d.edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    d.center = 0;
    std::vector<int> tail;
    for (std::size_t i = 1; i < cf.size(); ++i) tail.push_back(static_cast<int>(i));
    if (!tail.empty()) d.legs.push_back(std::move(tail));
    return d;
}

/// Surgery chain for r-surgery on the (p, q) torus knot, r < 0: the head is
/// the torus knot with capacity pq - p - q + a0 - 1.
inline StabilizedDiagram torus_surgery_chain(const Integer& p, const Integer& q, const Rational& r) {
    if (p < 2 || q <= p || int_gcd(p, q) != 1)
        throw std::domain_error("torus_surgery_chain: need coprime 1 < p < q");
    if (!r.is_negative())
        throw std::domain_error("torus_surgery_chain: surgery coefficient must be negative");
    return surgery_chain(cf_expand_relaxed(-r), p * q - p - q);
}

struct IntersectionData {
    RationalMatrix form;  // weights on the diagonal, 1 per tree edge
    Integer chi;          // Euler characteristic of the trace, vertices + 1
    long sigma = 0;       // signature of the form
    long nullity = 0;
    Rational determinant;
};

inline RationalMatrix intersection_form(const StabilizedDiagram& d) {
    detail::check_tree(d);
    const std::size_t n = d.size();
    RationalMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = Rational(d.vertices[i].weight);
    for (auto [a, b] : d.edges) {
        q(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = Rational(1);
        q(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = Rational(1);
    }
    return q;
}

inline IntersectionData intersection_data(const StabilizedDiagram& d) {
    IntersectionData out;
    out.form = intersection_form(d);
    out.chi = Integer(static_cast<long long>(d.size())) + 1;
    Inertia in = inertia(out.form);
    out.sigma = in.signature();
    out.nullity = in.nullity;
    out.determinant = det(out.form);
    return out;
}

/// v^T Q^{-1} v for an integer vector v: the square of the first Chern class
/// of the handlebody structure whose rotation numbers are v.
inline Rational quadratic_form(const StabilizedDiagram& d, const std::vector<Integer>& v) {
    RationalMatrix q = intersection_form(d);
    if (v.size() != q.rows())
        throw std::domain_error("quadratic_form: vector length mismatch");
    LuFactorization lu(q);
    if (lu.singular())
        throw std::domain_error("quadratic_form: intersection form is degenerate");
    std::vector<Rational> rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = Rational(v[i]);
    std::vector<Rational> x = lu.solve(rhs);
    Rational acc(0);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) acc += rhs[i] * x[i];
    return acc;
}

/// Text format, one diagram per stream.  Star form:
///   center -2
///   leg -2 -2
///   leg -3
/// General form:
///   vertex 0 -2
///   vertex 1 -3
///   edge 0 1
/// Lines starting with # are comments.  Capacities are |weight| - 2.
inline StabilizedDiagram parse_plumbing(std::istream& in) {
    StabilizedDiagram d;
    bool star_form = false, general_form = false;
    std::string line;
    std::vector<std::pair<long long, Integer>> pending_vertices;
    std::vector<std::pair<long long, long long>> pending_edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "center") {
            std::string w;
            if (!(ls >> w)) throw std::domain_error("plumbing: center needs a weight");
            if (!d.vertices.empty())
                throw std::domain_error("plumbing: center must be the first directive");
            star_form = true;
            Integer weight = parse_integer(w);
            d.vertices.push_back({weight, detail::plumbing_capacity(weight)});
        } else if (tok == "leg") {
            if (!star_form)
                throw std::domain_error("plumbing: leg before center");
            std::vector<Integer> ws;
            std::string w;
            while (ls >> w) ws.push_back(parse_integer(w));
            if (ws.empty()) throw std::domain_error("plumbing: empty leg");
            std::vector<int> leg;
            int prev = 0;
            for (const Integer& weight : ws) {
                int id = static_cast<int>(d.vertices.size());
                d.vertices.push_back({weight, detail::plumbing_capacity(weight)});
                d.edges.emplace_back(prev, id);
                leg.push_back(id);
                prev = id;
            }
            d.legs.push_back(std::move(leg));
        } else if (tok == "vertex") {
            general_form = true;
            long long id;
            std::string w;
            if (!(ls >> id >> w)) throw std::domain_error("plumbing: vertex needs id and weight");
            pending_vertices.emplace_back(id, parse_integer(w));
        } else if (tok == "edge") {
            general_form = true;
            long long a, b;
            if (!(ls >> a >> b)) throw std::domain_error("plumbing: edge needs two ids");
            pending_edges.emplace_back(a, b);
        } else {
            throw std::domain_error("plumbing: unknown directive '" + tok + "'");
        }
    }
    if (star_form && general_form)
        throw std::domain_error("plumbing: cannot mix star and vertex/edge forms");
    if (general_form) {
        std::sort(pending_vertices.begin(), pending_vertices.end());
        for (std::size_t i = 0; i < pending_vertices.size(); ++i) {
            if (pending_vertices[i].first != static_cast<long long>(i))
                throw std::domain_error("plumbing: vertex ids must be 0..n-1");
            d.vertices.push_back({pending_vertices[i].second,
                                  detail::plumbing_capacity(pending_vertices[i].second)});
        }
        for (auto [a, b] : pending_edges)
            d.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        detail::check_tree(d);
        // Recover a star shape when there is a unique branch vertex.
        std::vector<std::vector<int>> adj(d.size());
        for (auto [a, b] : d.edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        int branch = -1;
        bool unique = true;
        for (std::size_t i = 0; i < d.size(); ++i)
            if (adj[i].size() >= 3) {
                if (branch >= 0) unique = false;
                branch = static_cast<int>(i);
            }
        if (branch >= 0 && unique) {
            d.center = branch;
            for (int first : adj[static_cast<std::size_t>(branch)]) {
                std::vector<int> leg;
                int prev = branch, cur = first;
                for (;;) {
                    leg.push_back(cur);
                    int next = -1;
                    for (int w : adj[static_cast<std::size_t>(cur)])
                        if (w != prev) next = w;
                    if (next < 0) break;
                    prev = cur;
                    cur = next;
                }
                d.legs.push_back(std::move(leg));
            }
        }
    } else {
        if (d.vertices.empty() || !star_form)
            throw std::domain_error("plumbing: no diagram in input");
        d.center = 0;
        detail::check_tree(d);
    }
    return d;
}

inline std::string format_plumbing(const StabilizedDiagram& d) {
    std::ostringstream out;
    if (d.is_star() && !d.legs.empty()) {
        out << "center " << d.vertices[static_cast<std::size_t>(d.center)].weight.str() << "\n";
        for (const auto& leg : d.legs) {
            out << "leg";
            for (int v : leg) out << ' ' << d.vertices[static_cast<std::size_t>(v)].weight.str();
            out << "\n";
        }
    } else {
        for (std::size_t i = 0; i < d.size(); ++i)
            out << "vertex " << i << ' ' << d.vertices[i].weight.str() << "\n";
        for (auto [a, b] : d.edges) out << "edge " << a << ' ' << b << "\n";
    }
    return out.str();
}

}  // namespace sfl
