#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sfl/sfl.hpp"

using namespace sfl;

namespace {

Rational rat(long long n, long long d) { return Rational(n, d); }

/// No row may claim fillability (or candidacy) while exhibiting a theta
/// different from -2.
void check_coherence(const VerdictReport& rep) {
    for (const StructureVerdict& v : rep.structures) {
        if (v.status == FillStatus::Fillable || v.status == FillStatus::Candidate) {
            if (v.theta) REQUIRE(*v.theta == Rational(-2));
        }
        REQUIRE_FALSE(v.rule.empty());
        REQUIRE_FALSE(v.reason.empty());
    }
}

bool all_not_fillable(const VerdictReport& rep) {
    for (const StructureVerdict& v : rep.structures)
        if (v.status != FillStatus::NotFillable) return false;
    return !rep.structures.empty();
}

}  // namespace

TEST_CASE("square-form membership") {
    REQUIRE(o_membership(Integer(4), Integer(1)) ==
            std::make_pair(Integer(2), Integer(1)));
    REQUIRE(o_membership(Integer(9), Integer(5)) ==
            std::make_pair(Integer(3), Integer(2)));
    REQUIRE(o_membership(Integer(9), Integer(2)) ==
            std::make_pair(Integer(3), Integer(1)));
    REQUIRE_FALSE(o_membership(Integer(8), Integer(3)).has_value());
    REQUIRE_FALSE(o_membership(Integer(9), Integer(4)).has_value());
    REQUIRE_FALSE(o_membership(Integer(16), Integer(9)).has_value());

    REQUIRE_THROWS_AS(o_membership(Integer(4), Integer(2)), std::domain_error);
    REQUIRE_THROWS_AS(o_membership(Integer(4), Integer(4)), std::domain_error);
    REQUIRE_THROWS_AS(o_membership(Integer(1), Integer(1)), std::domain_error);
}

TEST_CASE("square form is exactly the theta = -2 locus for lens spaces") {
    for (long long p = 2; p <= 150; ++p)
        for (long long q = 1; q < p; ++q) {
            if (int_gcd(Integer(q), Integer(p)) != 1) continue;
            bool square = o_membership(Integer(p), Integer(q)).has_value();
            bool reaches = theta_lens_closed(Integer(p), Integer(q)) == Rational(-2);
            REQUIRE(square == reaches);

            if (square) {
                auto [m, h] = *o_membership(Integer(p), Integer(q));
                REQUIRE(m * m == Integer(p));
                REQUIRE(m * h - 1 == Integer(q));
                // The inverse parameter lies in the set too, with h -> m - h.
                Integer qs = mod_inverse(Integer(q), Integer(p));
                auto alt = o_membership(Integer(p), qs);
                REQUIRE(alt.has_value());
                REQUIRE(alt->first == m);
                REQUIRE(alt->second == (qs == Integer(q) ? h : m - h));
            }
        }
}

TEST_CASE("l-space recognition at central weight -1") {
    REQUIRE(lspace_status(make_seifert(Integer(-1), {rat(1, 2), rat(1, 3), rat(1, 7)})) ==
            LSpaceStatus::NotLSpace);
    REQUIRE(lspace_status(make_seifert(Integer(-1), {rat(4, 5), rat(3, 5), rat(1, 10)})) ==
            LSpaceStatus::LSpace);  // two largest reach 1
    REQUIRE(lspace_status(make_seifert(Integer(-1), {rat(2, 3), rat(1, 2), rat(1, 2)})) ==
            LSpaceStatus::LSpace);  // sum reaches 3/2
    REQUIRE(lspace_status(make_seifert(Integer(-1), {rat(1, 2), rat(1, 3), rat(1, 4)})) ==
            LSpaceStatus::Unknown);

    REQUIRE(std::string(lspace_status_name(LSpaceStatus::LSpace)) == "L-space");
    REQUIRE(std::string(lspace_status_name(LSpaceStatus::NotLSpace)) == "not an L-space");
    REQUIRE(std::string(lspace_status_name(LSpaceStatus::Unknown)) == "unknown");

    REQUIRE_THROWS_AS(lspace_status(make_seifert(Integer(-2), {rat(1, 2), rat(1, 3), rat(1, 7)})),
                      std::domain_error);
}

TEST_CASE("spherical and prism graphs") {
    StabilizedDiagram t3 = spherical_graph(SphericalKind::T3);
    REQUIRE(t3.vertices[0].weight == Integer(-2));
    REQUIRE(t3.size() == 5);
    REQUIRE(t3.legs.size() == 3);

    // T27 shares the leg pattern with a deeper center; I49 ends in -5.
    REQUIRE(spherical_graph(SphericalKind::T27).vertices[0].weight == Integer(-6));
    StabilizedDiagram i49 = spherical_graph(SphericalKind::I49);
    REQUIRE(i49.vertices[0].weight == Integer(-3));
    REQUIRE(i49.vertices[i49.size() - 1].weight == Integer(-5));

    REQUIRE(std::string(spherical_name(SphericalKind::T3)) == "T3");
    REQUIRE(std::string(spherical_name(SphericalKind::T27)) == "T27");
    REQUIRE(std::string(spherical_name(SphericalKind::I49)) == "I49");

    // D(11, 3): center -4 from 11/3 = [4, 3], two -2 leaves, chain leg -3.
    StabilizedDiagram d11 = prism_graph(Integer(11), Integer(3));
    REQUIRE(d11.vertices[0].weight == Integer(-4));
    REQUIRE(d11.legs.size() == 3);
    REQUIRE(d11.legs[0].size() == 1);
    REQUIRE(d11.legs[1].size() == 1);
    REQUIRE(d11.legs[2].size() == 1);
    REQUIRE(d11.vertices[static_cast<std::size_t>(d11.legs[2][0])].weight == Integer(-3));

    REQUIRE_THROWS_AS(prism_graph(Integer(11), Integer(1)), std::domain_error);
    REQUIRE_THROWS_AS(prism_graph(Integer(3), Integer(3)), std::domain_error);
    REQUIRE_THROWS_AS(prism_graph(Integer(6), Integer(4)), std::domain_error);
}

TEST_CASE("nonnegative-center presentation") {
    SeifertData s = make_seifert(Integer(1), {rat(1, 2), rat(1, 2), rat(1, 4)});
    StabilizedDiagram d = nonneg_diagram(s);
    REQUIRE(d.center_capacity_flagged);
    REQUIRE(d.vertices[0].weight == Integer(0));
    REQUIRE(d.vertices[0].capacity == Integer(0));
    REQUIRE(d.legs.size() == 3);

    // Legs encode -1/s_i: s_1 = e0 + r1 = 3/2 gets the [-1, -3] expansion.
    std::array<Rational, 3> slopes{Rational(s.e0) + s.r[0], s.r[1], s.r[2]};
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Integer> ws;
        for (int v : d.legs[i]) ws.push_back(d.vertices[static_cast<std::size_t>(v)].weight);
        REQUIRE(cf_eval(ws) == -slopes[i].inverse());
    }
    REQUIRE(d.vertices[static_cast<std::size_t>(d.legs[0][0])].weight == Integer(-1));

    // All-fractional slopes avoid the -1 head entirely.
    StabilizedDiagram flat =
        nonneg_diagram(make_seifert(Integer(0), {rat(2, 3), rat(2, 5), rat(1, 4)}));
    std::array<Rational, 3> fslopes{rat(2, 3), rat(2, 5), rat(1, 4)};
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Integer> ws;
        for (int v : flat.legs[i])
            ws.push_back(flat.vertices[static_cast<std::size_t>(v)].weight);
        REQUIRE(cf_eval(ws) == -fslopes[i].inverse());
        REQUIRE(ws[0] != Integer(-1));
    }

    REQUIRE_THROWS_AS(
        nonneg_diagram(make_seifert(Integer(-1), {rat(1, 2), rat(1, 3), rat(1, 7)})),
        std::domain_error);
}

TEST_CASE("fillable example generator") {
    FillableExample ex = generate_fillable(rat(3, 4), Integer(3), Integer(1), Integer(3));
    REQUIRE(ex.seifert == make_seifert(Integer(-1), {rat(2, 3), rat(1, 3), rat(9, 31)}));
    REQUIRE(ex.companion == std::make_pair(Integer(3), Integer(-2)));
    REQUIRE(ex.cable_surgery == Integer(-4));
    REQUIRE(ex.companion_surgery == rat(-31, 9));
    REQUIRE(ex.theta() == Rational(-2));

    FillingConstruction c = ex.construction();
    REQUIRE(c.kind == "cable-trace");
    REQUIRE(c.data[0] == std::make_pair(std::string("cable"), std::string("(3, -1)")));
    REQUIRE(c.data[1] == std::make_pair(std::string("stabilizations"), std::string("3")));
    REQUIRE(c.data[2] ==
            std::make_pair(std::string("companion-fiber"), std::string("(3, -2)")));
    REQUIRE(c.data[3] ==
            std::make_pair(std::string("companion-surgery"), std::string("-31/9")));
    REQUIRE(c.data[4] == std::make_pair(std::string("cable-surgery"), std::string("-4")));
    REQUIRE(c.data[5] == std::make_pair(std::string("trace-theta"), std::string("-2/1")));

    FillableExample flat = generate_fillable(rat(2, 5), Integer(3), Integer(1), Integer(0));
    REQUIRE(flat.seifert == make_seifert(Integer(1), {rat(1, 2), rat(1, 2), rat(1, 4)}));
    REQUIRE(flat.companion == std::make_pair(Integer(2), Integer(-1)));

    REQUIRE_THROWS_AS(generate_fillable(rat(1, 3), Integer(3), Integer(1), Integer(0)),
                      std::domain_error);
    REQUIRE_THROWS_AS(generate_fillable(rat(5, 4), Integer(3), Integer(1), Integer(0)),
                      std::domain_error);
    REQUIRE_THROWS_AS(generate_fillable(rat(3, 4), Integer(3), Integer(3), Integer(0)),
                      std::domain_error);
    REQUIRE_THROWS_AS(generate_fillable(rat(3, 4), Integer(4), Integer(2), Integer(0)),
                      std::domain_error);
    REQUIRE_THROWS_AS(generate_fillable(rat(3, 4), Integer(3), Integer(1), Integer(-1)),
                      std::domain_error);
}

TEST_CASE("generator agrees with seifert normalization on a grid") {
    for (long long p = 2; p <= 7; ++p)
        for (long long q = 2; q < p; ++q) {
            if (int_gcd(Integer(q), Integer(p)) != 1) continue;
            for (long long m = 2; m <= 5; ++m)
                for (long long h = 1; h < m; ++h) {
                    if (int_gcd(Integer(m), Integer(h)) != 1) continue;
                    for (long long k = 0; k <= 4; ++k) {
                        FillableExample ex = generate_fillable(rat(q, p), Integer(m),
                                                               Integer(h), Integer(k));
                        SeifertData expect = normalize_seifert(
                            Integer(0),
                            {rat(p, q), -rat(p, q),
                             Rational(Integer(m * m), Integer(k * m * m + m * h + 1))});
                        REQUIRE(ex.seifert == expect);
                        REQUIRE(ex.theta() == Rational(-2));
                        REQUIRE(euler_sum(ex.seifert) != Rational(0));
                    }
                }
        }
}

TEST_CASE("lens verdicts") {
    VerdictReport fill = filling_verdict_lens(Integer(9), Integer(5));
    REQUIRE(fill.input == "L(9, 5)");
    REQUIRE(fill.structures.size() == 3);
    REQUIRE(fill.structures[0].status == FillStatus::Fillable);
    REQUIRE(fill.structures[0].rule == std::string(kRuleLensBall));
    REQUIRE(fill.structures[0].structure_class == "consistent");
    REQUIRE(*fill.structures[0].theta == Rational(-2));
    REQUIRE(fill.structures[0].construction.has_value());
    REQUIRE(fill.structures[0].construction->kind == "lens-ball");
    REQUIRE(fill.structures[0].construction->data[0] ==
            std::make_pair(std::string("m"), std::string("3")));
    REQUIRE(fill.structures[0].construction->data[1] ==
            std::make_pair(std::string("h"), std::string("2")));
    REQUIRE(fill.structures[1].status == FillStatus::Fillable);
    REQUIRE(fill.structures[2].structure_class == "non-canonical");
    REQUIRE(fill.structures[2].status == FillStatus::NotFillable);
    REQUIRE(fill.structures[2].rule == std::string(kRuleCanonicalMinimum));
    REQUIRE_FALSE(fill.structures[2].rotation.has_value());
    check_coherence(fill);

    VerdictReport none = filling_verdict_lens(Integer(8), Integer(3));
    REQUIRE(none.structures.size() == 1);
    REQUIRE(none.structures[0].structure_class == "all");
    REQUIRE(none.structures[0].status == FillStatus::NotFillable);
    REQUIRE(none.structures[0].rule == std::string(kRuleThetaFilter));
    REQUIRE(*none.structures[0].theta == Rational(-1));
    check_coherence(none);

    VerdictOptions all;
    all.enumerate_all = true;
    VerdictReport full = filling_verdict_lens(Integer(9), Integer(5), all);
    REQUIRE(full.structures.size() == 4);  // 2 fillable + 2 enumerated
    int fillable = 0;
    for (const auto& v : full.structures)
        if (v.status == FillStatus::Fillable) ++fillable;
    REQUIRE(fillable == 2);
    check_coherence(full);

    VerdictOptions tiny;
    tiny.enumerate_all = true;
    tiny.cap = Integer(3);
    REQUIRE_THROWS_AS(filling_verdict_lens(Integer(9), Integer(5), tiny), std::domain_error);
}

TEST_CASE("prism and spherical verdicts") {
    VerdictReport prism = filling_verdict_prism(Integer(11), Integer(3));
    REQUIRE(prism.input == "D(11, 3)");
    REQUIRE(all_not_fillable(prism));
    REQUIRE(prism.structures.size() == 2);
    REQUIRE(prism.structures[0].rule == std::string(kRuleSpherical));
    REQUIRE(*prism.structures[0].theta == rat(-3, 8));

    for (SphericalKind kind : {SphericalKind::T3, SphericalKind::T27, SphericalKind::I49}) {
        VerdictReport rep = filling_verdict_spherical(kind);
        REQUIRE(all_not_fillable(rep));
        REQUIRE(rep.structures[0].rule == std::string(kRuleSpherical));
        check_coherence(rep);
    }
    REQUIRE(filling_verdict_spherical(SphericalKind::T3).structures[0].theta ==
            rat(22, 9));
}

TEST_CASE("torus surgery and brieskorn verdicts") {
    VerdictReport open_case = filling_verdict_torus(Integer(2), Integer(3), Rational(-1));
    REQUIRE(open_case.structures.size() == 2);
    for (const auto& v : open_case.structures) {
        REQUIRE(v.status == FillStatus::Candidate);
        REQUIRE(v.rule == std::string(kRuleTorusOpen));
        REQUIRE(*v.theta == Rational(-2));
        REQUIRE(v.structure_class == "consistent");
    }
    REQUIRE(open_case.notes[0] == "Seifert form: Y(-1; 1/2, 1/3, 1/7)");
    check_coherence(open_case);

    VerdictReport closed_case = filling_verdict_torus(Integer(2), Integer(5), Rational(-1));
    REQUIRE(all_not_fillable(closed_case));
    REQUIRE(closed_case.structures.size() == 3);
    REQUIRE(closed_case.structures[0].rule == std::string(kRuleThetaFilter));
    REQUIRE(closed_case.structures[2].structure_class == "inconsistent");
    REQUIRE(closed_case.structures[2].rule == std::string(kRuleSplitting));
    check_coherence(closed_case);

    VerdictReport bries = filling_verdict_brieskorn(Integer(2), Integer(5), Integer(1));
    REQUIRE(bries.notes[0] == "Brieskorn sphere Sigma(2, 5, 11)");
    REQUIRE(all_not_fillable(bries));
    REQUIRE_THROWS_AS(filling_verdict_brieskorn(Integer(2), Integer(5), Integer(0)),
                      std::domain_error);

    // Sigma(2, 3, 7) = -1/1 on T(2, 3) stays open; theta confirms -2.
    VerdictReport sigma237 = filling_verdict_brieskorn(Integer(2), Integer(3), Integer(1));
    REQUIRE(sigma237.structures[0].status == FillStatus::Candidate);
}

TEST_CASE("seifert dispatcher: census matches") {
    // Y(-2; 1/2, 1/3, 1/6) is the q = 0 member of two census families.
    VerdictReport rep = filling_verdict(make_seifert(Integer(-2), {rat(1, 2), rat(1, 3), rat(1, 6)}));
    REQUIRE(rep.structures.size() == 3);
    REQUIRE(rep.structures[0].status == FillStatus::Fillable);
    REQUIRE(rep.structures[0].rule == std::string(kRuleCensus));
    REQUIRE(*rep.structures[0].theta == Rational(-2));
    REQUIRE(rep.structures[0].construction->kind == "plumbing-census");
    REQUIRE(rep.structures[0].construction->data[0] ==
            std::make_pair(std::string("family"), std::string("star2-c")));
    REQUIRE(rep.structures[0].construction->data[1] ==
            std::make_pair(std::string("assignment"), std::string("q = 0")));
    REQUIRE(rep.structures[1].status == FillStatus::Fillable);
    REQUIRE(rep.structures[2].status == FillStatus::NotFillable);
    REQUIRE(rep.structures[2].rule == std::string(kRuleCanonicalMinimum));
    bool multi = false;
    for (const std::string& n : rep.notes)
        if (n == "matched families: star2-c star2-g") multi = true;
    REQUIRE(multi);
    check_coherence(rep);

    // Y(-4; 1/3, 1/3, 1/3) is the origin of the four-legged family.
    VerdictReport deep =
        filling_verdict(make_seifert(Integer(-4), {rat(1, 3), rat(1, 3), rat(1, 3)}));
    REQUIRE(deep.structures.size() == 3);
    REQUIRE(deep.structures[0].status == FillStatus::Fillable);
    REQUIRE(deep.structures[0].construction->data[0] ==
            std::make_pair(std::string("family"), std::string("star4-a")));
    REQUIRE(deep.structures[0].construction->data[1] ==
            std::make_pair(std::string("assignment"), std::string("p = 0, q = 0, r = 0")));
    check_coherence(deep);
}

TEST_CASE("seifert dispatcher: deep centers without census match") {
    VerdictReport rep =
        filling_verdict(make_seifert(Integer(-5), {rat(1, 2), rat(1, 3), rat(1, 7)}));
    REQUIRE(all_not_fillable(rep));
    REQUIRE(rep.structures[0].rule == std::string(kRuleCensus));
    REQUIRE(rep.structures[0].reason.find("below the census range") != std::string::npos);

    VerdictReport mid =
        filling_verdict(make_seifert(Integer(-3), {rat(1, 2), rat(1, 3), rat(1, 7)}));
    REQUIRE(all_not_fillable(mid));
    REQUIRE(mid.structures[0].reason.find("matches no census family") != std::string::npos);
}

TEST_CASE("seifert dispatcher: central weight -2 without census match") {
    // Reverse is an L-space: representatives filtered by theta, the rest
    // split along a mixed torus.
    VerdictReport ls =
        filling_verdict(make_seifert(Integer(-2), {rat(3, 4), rat(1, 2), rat(1, 4)}));
    bool note_found = false;
    for (const std::string& n : ls.notes)
        if (n.find("L-space") != std::string::npos) note_found = true;
    REQUIRE(note_found);
    int candidates = 0;
    for (const auto& v : ls.structures) {
        if (v.structure_class == "inconsistent") {
            REQUIRE(v.status == FillStatus::NotFillable);
            REQUIRE(v.rule == std::string(kRuleSplitting));
        }
        if (v.status == FillStatus::Candidate) {
            ++candidates;
            REQUIRE(v.rule == std::string(kRuleConsistencyOpen));
            REQUIRE(*v.theta == Rational(-2));
        }
        if (v.theta && *v.theta != Rational(-2)) REQUIRE(v.status == FillStatus::NotFillable);
    }
    REQUIRE(candidates <= 4);
    check_coherence(ls);

    // Reverse undecided and the form negative definite: the aggregate falls
    // back to canonical minimality.  The diagram needs a vertex of capacity
    // at least two, otherwise every rotation is its own representative and
    // no aggregate row is emitted.
    VerdictReport nls =
        filling_verdict(make_seifert(Integer(-2), {rat(5, 7), rat(4, 7), rat(4, 7)}));
    REQUIRE(nls.structures.back().structure_class == "inconsistent");
    REQUIRE(nls.structures.back().status == FillStatus::NotFillable);
    REQUIRE(nls.structures.back().rule == std::string(kRuleCanonicalMinimum));
    check_coherence(nls);

    // Indefinite form (positive total euler number): honestly unknown.
    VerdictReport indef =
        filling_verdict(make_seifert(Integer(-2), {rat(6, 7), rat(5, 7), rat(4, 7)}));
    REQUIRE(indef.structures.back().structure_class == "inconsistent");
    REQUIRE(indef.structures.back().status == FillStatus::Unknown);
    REQUIRE(indef.structures.back().rule == std::string(kRuleScope));
    check_coherence(indef);
}

TEST_CASE("seifert dispatcher: central weight -1") {
    VerdictReport range =
        filling_verdict(make_seifert(Integer(-1), {rat(4, 5), rat(1, 6), rat(1, 10)}));
    REQUIRE(range.structures.size() == 1);
    REQUIRE(range.structures[0].structure_class == "all");
    REQUIRE(range.structures[0].status == FillStatus::NotFillable);
    REQUIRE(range.structures[0].rule == std::string(kRuleSeifertRange));

    // Boundary case r1 + r2 = 1 stays out of the decided range.
    VerdictReport edge =
        filling_verdict(make_seifert(Integer(-1), {rat(4, 5), rat(1, 5), rat(1, 10)}));
    REQUIRE(edge.structures[0].status == FillStatus::Unknown);
    REQUIRE(edge.structures[0].rule == std::string(kRuleScope));
    REQUIRE(edge.structures[0].reason.find("reach 1") != std::string::npos);

    VerdictReport low =
        filling_verdict(make_seifert(Integer(-1), {rat(1, 2), rat(1, 3), rat(1, 8)}));
    REQUIRE(low.structures[0].status == FillStatus::Unknown);
    REQUIRE(low.structures[0].reason.find("at most 1") != std::string::npos);
    bool lnote = false;
    for (const std::string& n : low.notes)
        if (n == "L-space status: not an L-space") lnote = true;
    REQUIRE(lnote);
}

TEST_CASE("seifert dispatcher: nonnegative central weight") {
    VerdictReport rep =
        filling_verdict(make_seifert(Integer(1), {rat(1, 2), rat(1, 2), rat(1, 4)}));
    int candidates = 0, consistent = 0;
    for (const auto& v : rep.structures) {
        REQUIRE_FALSE(v.theta.has_value());  // presentation carries no theta
        if (v.status == FillStatus::Candidate) {
            ++candidates;
            REQUIRE(v.rule == std::string(kRuleConsistencyOpen));
            if (v.structure_class == "consistent") {
                ++consistent;
                REQUIRE(v.reason.find("unique") != std::string::npos);
            }
        } else {
            REQUIRE(v.status == FillStatus::NotFillable);
            REQUIRE(v.rule == std::string(kRuleSplitting));
        }
    }
    REQUIRE(candidates == 4);
    REQUIRE(consistent == 2);
    bool note = false;
    for (const std::string& n : rep.notes)
        if (n.find("no theta is attached") != std::string::npos) note = true;
    REQUIRE(note);
}

TEST_CASE("seifert dispatcher: non rational homology spheres") {
    VerdictReport rep =
        filling_verdict(make_seifert(Integer(-2), {rat(2, 3), rat(2, 3), rat(2, 3)}));
    REQUIRE(rep.structures.size() == 1);
    REQUIRE(rep.structures[0].status == FillStatus::Unknown);
    REQUIRE(rep.structures[0].rule == std::string(kRuleNonQhs));
    REQUIRE(rep.structures[0].structure_class == "all");
}

TEST_CASE("verdict coherence across branches with full enumeration") {
    VerdictOptions all;
    all.enumerate_all = true;
    std::vector<SeifertData> samples = {
        make_seifert(Integer(-2), {rat(1, 2), rat(1, 3), rat(1, 6)}),
        make_seifert(Integer(-2), {rat(3, 4), rat(1, 2), rat(1, 4)}),
        make_seifert(Integer(-3), {rat(1, 2), rat(1, 3), rat(1, 7)}),
        make_seifert(Integer(-5), {rat(1, 2), rat(1, 3), rat(1, 7)}),
        make_seifert(Integer(1), {rat(1, 2), rat(1, 2), rat(1, 4)}),
    };
    for (const SeifertData& s : samples) {
        VerdictReport rep = filling_verdict(s, all);
        check_coherence(rep);
        // Full enumeration rows carry explicit rotation vectors except any
        // aggregate produced by a non-enumerating branch.
        Integer rows(0);
        for (const auto& v : rep.structures)
            if (v.rotation) rows += 1;
        REQUIRE(rows > 0);
    }
}

TEST_CASE("json serialization shapes") {
    REQUIRE(json_rational(rat(-3, 8)).get<std::string>() == "-3/8");
    REQUIRE(json_rational(Rational(2)).get<std::string>() == "2/1");

    RotationVector rot{Integer(1), Integer(-2)};
    REQUIRE(json_rotation(rot).dump() == "[1,-2]");

    VerdictReport rep = filling_verdict_lens(Integer(9), Integer(5));
    Json j = json_verdict(rep);
    REQUIRE(j["input"] == "L(9, 5)");
    REQUIRE(j["structures"].size() == 3);
    REQUIRE(j["structures"][0]["rotation"].is_array());
    REQUIRE(j["structures"][0]["theta"] == "-2/1");
    REQUIRE(j["structures"][0]["status"] == "Fillable");
    std::string just = j["structures"][0]["justification"].get<std::string>();
    REQUIRE(just.rfind("lens-canonical-ball: ", 0) == 0);
    REQUIRE(j["structures"][0]["construction"]["kind"] == "lens-ball");
    REQUIRE(j["structures"][0]["construction"]["m"] == "3");
    REQUIRE_FALSE(j["structures"][2].contains("rotation"));
    REQUIRE_FALSE(j["structures"][2].contains("theta"));
    REQUIRE(j.contains("notes"));

    // Deterministic dumps.
    REQUIRE(dump_json(j) == dump_json(json_verdict(filling_verdict_lens(Integer(9), Integer(5)))));
    REQUIRE(dump_json(j).back() == '\n');

    SeifertData s = make_seifert(Integer(-1), {rat(2, 3), rat(1, 3), rat(9, 31)});
    Json js = json_seifert(s);
    REQUIRE(js["seifert"] == "Y(-1; 2/3, 1/3, 9/31)");
    REQUIRE(js["e0"] == -1);
    REQUIRE(js["multipliers"][0] == "2/3");

    std::vector<QhbMatch> ms{{"star2-c", {{'q', Integer(0)}}}};
    Json jm = json_qhb_matches("test", ms);
    REQUIRE(jm["matches"][0]["family"] == "star2-c");
    REQUIRE(jm["matches"][0]["assignment"]["q"] == 0);

    FillableExample ex = generate_fillable(rat(3, 4), Integer(3), Integer(1), Integer(3));
    Json jc = json_construction(ex.construction());
    REQUIRE(jc["kind"] == "cable-trace");
    REQUIRE(jc["companion-surgery"] == "-31/9");
}
