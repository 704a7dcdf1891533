#include <sstream>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sfl/sfl.hpp"

using namespace sfl;

namespace {

Rational rat(long long n, long long d) { return Rational(n, d); }

}  // namespace

TEST_CASE("seifert normal form") {
    SeifertData s = normalize_seifert(Integer(0), {rat(4, 3), rat(-4, 3), rat(9, 31)});
    REQUIRE(s.e0 == Integer(-1));
    REQUIRE(s.r[0] == rat(2, 3));
    REQUIRE(s.r[1] == rat(1, 3));
    REQUIRE(s.r[2] == rat(9, 31));
    REQUIRE(s.str() == "Y(-1; 2/3, 1/3, 9/31)");

    // Idempotent on already-normal data.
    SeifertData t = normalize_seifert(s.e0, {s.r[0], s.r[1], s.r[2]});
    REQUIRE(t == s);

    // Integer slots are absorbed into the central coefficient.
    SeifertData u = normalize_seifert(Integer(1),
                                      {rat(2, 1), rat(1, 2), rat(1, 3), rat(-1, 1), rat(1, 4)});
    REQUIRE(u.e0 == Integer(2));
    REQUIRE(u.r[0] == rat(1, 2));

    REQUIRE_THROWS_AS(normalize_seifert(Integer(0), {rat(1, 2), rat(1, 3)}), std::domain_error);
    REQUIRE_THROWS_AS(
        normalize_seifert(Integer(0), {rat(1, 2), rat(1, 3), rat(1, 4), rat(1, 5)}),
        std::domain_error);
    REQUIRE_THROWS_AS(normalize_seifert(Integer(3), {rat(1, 1), rat(2, 1), rat(5, 1)}),
                      std::domain_error);
}

TEST_CASE("make_seifert sorts and validates") {
    SeifertData s = make_seifert(Integer(-2), {rat(1, 3), rat(2, 3), rat(1, 2)});
    REQUIRE(s.r[0] == rat(2, 3));
    REQUIRE(s.r[1] == rat(1, 2));
    REQUIRE(s.r[2] == rat(1, 3));

    REQUIRE_THROWS_AS(make_seifert(Integer(0), {rat(1, 2), rat(1, 2), rat(1, 1)}),
                      std::domain_error);
    REQUIRE_THROWS_AS(make_seifert(Integer(0), {rat(1, 2), rat(1, 2), rat(0, 1)}),
                      std::domain_error);
    REQUIRE_THROWS_AS(make_seifert(Integer(0), {rat(1, 2), rat(1, 2), rat(-1, 3)}),
                      std::domain_error);
}

TEST_CASE("euler sum and orientation reversal") {
    SeifertData t3 = make_seifert(Integer(-2), {rat(2, 3), rat(1, 2), rat(1, 3)});
    REQUIRE(euler_sum(t3) == rat(-1, 2));

    // Reversal matches Y(-e0 - 3; 1 - r3, 1 - r2, 1 - r1).
    SeifertData rev = orientation_reverse(t3);
    REQUIRE(rev == make_seifert(Integer(-1), {rat(2, 3), rat(1, 2), rat(1, 3)}));

    std::vector<SeifertData> samples = {
        t3,
        make_seifert(Integer(-1), {rat(4, 5), rat(1, 6), rat(1, 10)}),
        make_seifert(Integer(-5), {rat(1, 2), rat(1, 3), rat(1, 7)}),
        make_seifert(Integer(2), {rat(1, 2), rat(1, 2), rat(1, 4)}),
    };
    for (const SeifertData& s : samples) {
        SeifertData r = orientation_reverse(s);
        REQUIRE(r == make_seifert(Integer(-s.e0 - 3),
                                  {Rational(1) - s.r[2], Rational(1) - s.r[1],
                                   Rational(1) - s.r[0]}));
        REQUIRE(orientation_reverse(r) == s);
        REQUIRE(euler_sum(r) == -euler_sum(s));
    }
}

TEST_CASE("fiber knot types") {
    REQUIRE(fiber_knot_type(rat(1, 2)) == std::make_pair(Integer(1), Integer(0)));
    REQUIRE(fiber_knot_type(rat(1, 7)) == std::make_pair(Integer(1), Integer(0)));
    REQUIRE(fiber_knot_type(rat(2, 3)) == std::make_pair(Integer(2), Integer(-1)));
    REQUIRE(fiber_knot_type(rat(9, 31)) == std::make_pair(Integer(9), Integer(-2)));
    REQUIRE_THROWS_AS(fiber_knot_type(rat(3, 2)), std::domain_error);
    REQUIRE_THROWS_AS(fiber_knot_type(rat(-1, 2)), std::domain_error);

    // (q, -q') satisfies p'q - q'p = 1 for the recovered p' in (0, p).
    for (long long p = 2; p <= 40; ++p)
        for (long long q = 2; q < p; ++q) {
            if (int_gcd(Integer(q), Integer(p)) != 1) continue;
            auto [kq, mqp] = fiber_knot_type(rat(q, p));
            Integer pp = mod_inverse(Integer(q), Integer(p));
            REQUIRE(kq == Integer(q));
            REQUIRE(pp * kq + mqp * Integer(p) == Integer(1));
        }
}

TEST_CASE("torus knot surgery in seifert form") {
    REQUIRE(torus_surgery_seifert(Integer(2), Integer(3), Rational(-1)) ==
            make_seifert(Integer(-1), {rat(1, 2), rat(1, 3), rat(1, 7)}));
    REQUIRE(torus_surgery_seifert(Integer(2), Integer(5), Rational(-1)) ==
            make_seifert(Integer(-1), {rat(1, 2), rat(2, 5), rat(1, 11)}));

    REQUIRE_THROWS_AS(torus_surgery_seifert(Integer(2), Integer(4), Rational(-1)),
                      std::domain_error);
    REQUIRE_THROWS_AS(torus_surgery_seifert(Integer(3), Integer(2), Rational(-1)),
                      std::domain_error);
    REQUIRE_THROWS_AS(torus_surgery_seifert(Integer(2), Integer(3), Rational(1)),
                      std::domain_error);
}

TEST_CASE("star plumbing of a seifert space") {
    SeifertData t3 = make_seifert(Integer(-2), {rat(2, 3), rat(1, 2), rat(1, 3)});
    StabilizedDiagram d = seifert_to_plumbing(t3);
    REQUIRE(d.is_star());
    REQUIRE(d.center == 0);
    REQUIRE_FALSE(d.center_capacity_flagged);
    REQUIRE(d.size() == 5);
    REQUIRE(d.vertices[0].weight == Integer(-2));
    REQUIRE(d.vertices[0].capacity == Integer(0));
    REQUIRE(d.legs.size() == 3);

    // Legs carry the negated expansions of 1/r_i: [-2,-2], [-2], [-3].
    std::vector<std::vector<long long>> expect{{-2, -2}, {-2}, {-3}};
    for (std::size_t i = 0; i < 3; ++i) {
        REQUIRE(d.legs[i].size() == expect[i].size());
        for (std::size_t j = 0; j < expect[i].size(); ++j) {
            const DiagramVertex& v = d.vertices[static_cast<std::size_t>(d.legs[i][j])];
            REQUIRE(v.weight == Integer(expect[i][j]));
            REQUIRE(v.capacity == detail::plumbing_capacity(v.weight));
        }
    }

    // Center capacity is |e0| - 2 for e0 <= -2 and flagged above that.
    StabilizedDiagram deep = seifert_to_plumbing(
        make_seifert(Integer(-5), {rat(1, 2), rat(1, 3), rat(1, 7)}));
    REQUIRE(deep.vertices[0].capacity == Integer(3));
    REQUIRE_FALSE(deep.center_capacity_flagged);

    StabilizedDiagram flat = seifert_to_plumbing(
        make_seifert(Integer(0), {rat(1, 2), rat(1, 3), rat(1, 7)}));
    REQUIRE(flat.center_capacity_flagged);
    REQUIRE(flat.vertices[0].capacity == Integer(0));
}

TEST_CASE("lens chains") {
    StabilizedDiagram d = lens_chain(Integer(8), Integer(3));
    REQUIRE(d.size() == 2);
    REQUIRE(d.vertices[0].weight == Integer(-3));
    REQUIRE(d.vertices[1].weight == Integer(-3));
    REQUIRE(d.vertices[0].capacity == Integer(1));
    REQUIRE(d.is_star());
    REQUIRE(d.legs.size() == 1);

    REQUIRE_THROWS_AS(lens_chain(Integer(4), Integer(2)), std::domain_error);
    REQUIRE_THROWS_AS(lens_chain(Integer(3), Integer(3)), std::domain_error);
    REQUIRE_THROWS_AS(lens_chain(Integer(1), Integer(1)), std::domain_error);

    // |det| recovers the order p of the first homology, with sign (-1)^n.
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (int_gcd(Integer(q), Integer(p)) != 1) continue;
            StabilizedDiagram c = lens_chain(Integer(p), Integer(q));
            Rational dt = det(intersection_form(c));
            REQUIRE(abs(dt) == Rational(p));
            REQUIRE(dt.is_negative() == (c.size() % 2 == 1));
        }
}

TEST_CASE("surgery chains") {
    // Coefficient -1 on the (2,3) torus knot: one vertex, capacity
    // a0 - 1 + (pq - p - q) = 0 + 1.
    StabilizedDiagram tref = torus_surgery_chain(Integer(2), Integer(3), Rational(-1));
    REQUIRE(tref.size() == 1);
    REQUIRE(tref.vertices[0].weight == Integer(-1));
    REQUIRE(tref.vertices[0].capacity == Integer(1));

    // Coefficient -3/2 on (2,5): weights [-2,-2], capacities [4, 0].
    StabilizedDiagram t25 = torus_surgery_chain(Integer(2), Integer(5), rat(-3, 2));
    REQUIRE(t25.size() == 2);
    REQUIRE(t25.vertices[0].weight == Integer(-2));
    REQUIRE(t25.vertices[1].weight == Integer(-2));
    REQUIRE(t25.vertices[0].capacity == Integer(4));
    REQUIRE(t25.vertices[1].capacity == Integer(0));

    REQUIRE_THROWS_AS(torus_surgery_chain(Integer(2), Integer(3), Rational(1)),
                      std::domain_error);
    REQUIRE_THROWS_AS(surgery_chain(NegCF{}), std::domain_error);

    // A plain unknot chain keeps head capacity a0 - 1.
    NegCF plain = cf_expand_relaxed(rat(7, 5));
    StabilizedDiagram chain = surgery_chain(plain);
    REQUIRE(chain.vertices[0].capacity == plain.coeffs[0] - 1);
    for (std::size_t i = 1; i < chain.size(); ++i)
        REQUIRE(chain.vertices[i].capacity == plain.coeffs[i] - 2);
}

TEST_CASE("intersection data") {
    SeifertData t3 = make_seifert(Integer(-2), {rat(2, 3), rat(1, 2), rat(1, 3)});
    IntersectionData data = intersection_data(seifert_to_plumbing(t3));
    REQUIRE(data.chi == Integer(6));
    REQUIRE(data.sigma == -5);
    REQUIRE(data.nullity == 0);
    REQUIRE(data.determinant == Rational(-9));

    // Degenerate forms are reported, not rejected.
    std::vector<std::vector<Integer>> legs(4, std::vector<Integer>{Integer(-2)});
    IntersectionData deg = intersection_data(detail::star_from_weights(Integer(-2), legs));
    REQUIRE(deg.nullity == 1);
    REQUIRE(deg.determinant == Rational(0));
    REQUIRE_THROWS_AS(quadratic_form(detail::star_from_weights(Integer(-2), legs),
                                     std::vector<Integer>(5, Integer(0))),
                      std::domain_error);

    // Malformed diagrams are rejected by the tree check.
    StabilizedDiagram cyc;
    cyc.vertices = {{Integer(-2), Integer(0)}, {Integer(-2), Integer(0)}};
    cyc.edges = {{0, 1}, {1, 0}};
    REQUIRE_THROWS_AS(intersection_form(cyc), std::domain_error);

    StabilizedDiagram split;
    split.vertices = {{Integer(-2), Integer(0)}, {Integer(-2), Integer(0)},
                      {Integer(-2), Integer(0)}};
    split.edges = {{0, 1}, {0, 1}};
    REQUIRE_THROWS_AS(intersection_form(split), std::domain_error);
}

TEST_CASE("plumbing text format round trips") {
    SeifertData t3 = make_seifert(Integer(-2), {rat(2, 3), rat(1, 2), rat(1, 3)});
    StabilizedDiagram d = seifert_to_plumbing(t3);
    std::string text = format_plumbing(d);
    REQUIRE(text == "center -2\nleg -2 -2\nleg -2\nleg -3\n");

    std::istringstream in(text);
    StabilizedDiagram back = parse_plumbing(in);
    REQUIRE(format_plumbing(back) == text);
    REQUIRE(back.is_star());
    REQUIRE(intersection_data(back).determinant == Rational(-9));

    // General form reconstructs the star around a unique branch vertex.
    std::istringstream gen(
        "# a star written as an explicit tree\n"
        "vertex 0 -2\nvertex 1 -2\nvertex 2 -2\nvertex 3 -2\nvertex 4 -3\n"
        "edge 1 0\nedge 1 2\nedge 1 3\nedge 1 4\n");
    StabilizedDiagram g = parse_plumbing(gen);
    REQUIRE(g.is_star());
    REQUIRE(g.center == 1);
    REQUIRE(g.legs.size() == 4);

    // A bare chain has no branch vertex and stays centerless.
    std::istringstream chain("vertex 0 -3\nvertex 1 -3\nedge 0 1\n");
    StabilizedDiagram c = parse_plumbing(chain);
    REQUIRE_FALSE(c.is_star());
    REQUIRE(format_plumbing(c) == "vertex 0 -3\nvertex 1 -3\nedge 0 1\n");
}

TEST_CASE("plumbing parser rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        REQUIRE_THROWS_AS(parse_plumbing(in), std::domain_error);
    };
    reject("");
    reject("leg -2\n");
    reject("center -2\nvertex 0 -2\n");
    reject("center -2\ncenter -3\n");
    reject("center -2\nleg\n");
    reject("center\n");
    reject("orbit -2\n");
    reject("vertex 0 -2\nvertex 2 -3\nedge 0 2\n");
    reject("vertex 0 -2\nvertex 1 -3\n");
    reject("vertex 0 -2\nvertex 1 -3\nedge 0 5\n");
}
