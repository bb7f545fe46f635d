#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "maxarc/census.hpp"

using namespace maxarc;

namespace {

std::set<int> exponents(const Field& F, const std::vector<Elem>& ts) {
    std::set<int> out;
    for (Elem t : ts) out.insert(t.bits == 0 ? -1 : F.dlog(t));
    return out;
}

Arc base_arc(const Plane& P) {
    const Field& F = P.field();
    return denniston_arc(
        P, F.one(),
        AdditiveSubgroup::from_elements(
            F, {F.one(), F.generator(), F.add(F.one(), F.generator())}));
}

}  // namespace

TEST_CASE("published t-table rows, one spot check per case") {
    Field F(5);
    Elem w = F.generator();
    // lambda0 = k+1, sigma = 1
    CHECK(exponents(F, solve_t_values(F, w, w, 0, ThetaCase::map_l_plus_1,
                                      TraceConditions::published_pg32)) ==
          std::set<int>{-1, 8, 22, 21, 11, 30, 6, 15});
    // lambda0 = k, sigma = 2
    CHECK(exponents(F, solve_t_values(F, w, w, 1, ThetaCase::map_l,
                                      TraceConditions::published_pg32)) ==
          std::set<int>{-1, 20, 30, 24, 10, 14, 18, 23});
    // lambda0 = 1, sigma = 8
    CHECK(exponents(F, solve_t_values(F, w, w, 3, ThetaCase::fix_c1,
                                      TraceConditions::published_pg32)) ==
          std::set<int>{-1, 2, 1, 19, 0, 5, 18, 11});
}

TEST_CASE("solver returns q/4 values from two distinct hyperplanes") {
    for (int h : {5, 7}) {
        Field F(h);
        Elem k = F.generator();
        for (auto which : {ThetaCase::map_l_plus_1, ThetaCase::map_l, ThetaCase::fix_c1})
            for (int sigma = 0; sigma < h; ++sigma) {
                TraceConditionSystem sys = build_trace_system(F, k, k, sigma, which);
                if (sys.degenerate) {
                    CHECK((which == ThetaCase::fix_c1 && sigma == 0));
                    continue;
                }
                CHECK(sys.n1 != sys.n2);
                auto ts = solve_t_values(F, k, k, sigma, which);
                CHECK(ts.size() == F.order() / 4);
            }
    }
}

TEST_CASE("geometric t-values admit the extension, exhaustively at q = 32") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    Arc d1 = base_arc(P);
    for (auto which : {ThetaCase::map_l_plus_1, ThetaCase::map_l, ThetaCase::fix_c1}) {
        for (int sigma = (which == ThetaCase::fix_c1 ? 1 : 0); sigma < 5; ++sigma) {
            Elem lambda0 = which == ThetaCase::map_l_plus_1 ? F.add(w, F.one())
                           : which == ThetaCase::map_l     ? w
                                                           : F.one();
            for (Elem t : solve_t_values(F, w, w, sigma, which)) {
                Collineation theta = theta_family(F, lambda0, t, sigma);
                // first moved conic that is not the lambda0 one
                Conic source = lambda0 == F.one() ? Conic{F.one(), F.one(), w}
                                                  : Conic{F.one(), F.one(), F.one()};
                Conic image = to_conic(F, apply(F, theta, source));
                Arc k8 = extend_by_conic(P, d1, image);
                REQUIRE(verify_maximal_arc(P, k8.points).ok);
            }
        }
    }
}

TEST_CASE("pairing groups t-values by extension") {
    Field F(5);
    Elem w = F.generator();
    auto ts = solve_t_values(F, w, w, 0, ThetaCase::map_l_plus_1);
    auto pairs = pair_t_values(F, F.add(w, F.one()), 0, ts);
    CHECK(pairs.size() == ts.size() / 2);
    std::set<std::pair<int, int>> got;
    for (auto& [a, b] : pairs)
        got.insert({a.bits == 0 ? -1 : F.dlog(a), b.bits == 0 ? -1 : F.dlog(b)});
    CHECK(got == std::set<std::pair<int, int>>{{-1, 22}, {8, 21}, {11, 30}, {6, 15}});

    // a mangled set has no perfect matching
    ts.pop_back();
    CHECK_THROWS(pair_t_values(F, F.add(w, F.one()), 0, ts));
}

TEST_CASE("census totals, uniqueness and classification flags") {
    Field F(5);
    Plane P(F);
    Arc d1 = base_arc(P);
    DisjointConicCensus census = disjoint_conic_census(P, d1);
    CHECK(census.d_conics.size() == 28);
    CHECK(census.m_conics.size() == 84);
    CHECK(census.cells.size() == 14);
    for (const auto& cell : census.cells) {
        int denniston_pairs = 0;
        for (const auto& pr : cell.pairs) {
            denniston_pairs += pr.denniston_pencil;
            CHECK(pr.denniston_pencil == pr.denniston_infline);
        }
        CHECK(denniston_pairs == 1);  // exactly one pair extends inside the pencil
    }
    auto arcs = mathon_8arcs_through(P, d1, census);
    CHECK(arcs.size() == 21);
}

TEST_CASE("pencil counting and degree-4 classification") {
    Field F(5);
    CHECK(count_pencil_4arcs(F) == 155);
    CHECK(classify_denniston4(F) == 1);
    // arcs through a fixed conic: 3(2h+1) with 2h+1 = 5. The subgroups
    // {0,1,b,b+1} with b outside {0,1} each show up for b and b+1.
    std::set<std::pair<uint32_t, uint32_t>> through_c1;
    for (uint32_t b = 2; b < 32; ++b) through_c1.insert({std::min(b, b ^ 1u), std::max(b, b ^ 1u)});
    CHECK(through_c1.size() == 15);
    CHECK(through_c1.size() == 3 * 5);
}

TEST_CASE("class-count formula") {
    Mathon8Formula f5 = mathon8_class_count_formula(5);
    REQUIRE(f5.applicable);
    CHECK(f5.denniston4_classes == 1);
    CHECK(f5.class_count == 3);

    Mathon8Formula f11 = mathon8_class_count_formula(11);
    REQUIRE(f11.applicable);
    CHECK(f11.denniston4_classes == 31);
    CHECK(f11.class_count == 577065);

    CHECK_FALSE(mathon8_class_count_formula(7).applicable);
    CHECK_FALSE(mathon8_class_count_formula(9).applicable);
    CHECK_FALSE(mathon8_class_count_formula(3).applicable);
}

TEST_CASE("full degree-8 classification at q = 32") {
    Field F(5);
    Plane P(F);
    Mathon8Classification cls = classify_mathon8(P);
    CHECK(cls.arcs.size() == 21);
    CHECK(cls.forms.size() == 3);
    CHECK(cls.representatives.size() == 3);
    REQUIRE(cls.formula.applicable);
    CHECK(cls.formula.class_count == cls.forms.size());
    CHECK_FALSE(cls.outside_theorem_hypotheses);

    Field F7(7);
    Plane P7(F7);
    CHECK_THROWS(classify_mathon8(P7));  // scale guard without force
}

TEST_CASE("the PG(2,32) reproduction is green and documents the erratum") {
    Field F(5);
    Plane P(F);
    Pg32Report rep = reproduce_pg32(P);
    CHECK(rep.mismatches.empty());
    CHECK(rep.checks.size() >= 25);
    CHECK(rep.notes.size() == 4);  // the four published third-table rows
    CHECK(rep.arcs.size() == 21);
    CHECK(rep.class_forms.size() == 3);

    auto j = nlohmann::json::parse(rep.report_json);
    CHECK(j.at("schema") == "maxarc/1");
    CHECK(j.at("census").at("denniston_conics") == 28);
    CHECK(j.at("census").at("mathon_conics") == 84);
    CHECK(j.at("arcs").size() == 21);
}

TEST_CASE("census rejects arcs outside the standard position") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    // a 4-arc in the standard pencil that misses C_1
    Arc off = denniston_arc(P, F.one(),
                            AdditiveSubgroup::from_elements(F, {w, F.exp(2), F.add(w, F.exp(2))}));
    CHECK_THROWS(disjoint_conic_census(P, off));
}

TEST_CASE("isomorphism testing across construction routes") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    std::vector<Elem> basis{F.one(), w, F.exp(9)};
    Arc m1 = mathon_exponent_arc(P, 12, 15, 4, basis);
    Arc m2 = mathon_exponent_arc(P, 5, 25, 14, basis);
    CHECK_FALSE(are_isomorphic(P, m1, m2));

    std::mt19937 rng(7);
    Mat3 m;
    do {
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.m[r][c] = Elem{static_cast<uint32_t>(rng() % 32)};
    } while (mat_det(F, m).bits == 0);
    Collineation g{m, 3};
    CHECK(are_isomorphic(P, m1, apply_arc(P, g, m1)));

    // every degree-4 Denniston arc of PG(2,32) is isomorphic to every other
    Arc d1 = base_arc(P);
    Arc d2 = denniston_arc(
        P, F.one(), AdditiveSubgroup::from_elements(F, {F.exp(3), F.exp(9), F.add(F.exp(3), F.exp(9))}));
    Elem alpha2 = F.one();
    for (uint32_t a = 2; a < 32; ++a)
        if (F.trace(Elem{a}) == 1) {
            alpha2 = Elem{a};
            break;
        }
    Arc d3 = denniston_arc(
        P, alpha2, AdditiveSubgroup::from_elements(F, {F.exp(5), F.exp(22), F.add(F.exp(5), F.exp(22))}));
    CHECK(are_isomorphic(P, d1, d2));
    CHECK(are_isomorphic(P, d1, d3));

    CHECK(automorphism_order(P, d1) == 66);
    Field F7(7);
    Plane P7(F7);
    Arc d128 = denniston_arc(
        P7, F7.one(),
        AdditiveSubgroup::from_elements(F7, {F7.one(), F7.generator(),
                                             F7.add(F7.one(), F7.generator())}));
    CHECK(automorphism_order(P7, d128) == 2 * (128 + 1));
}

TEST_CASE("classification is stable under enumeration order") {
    Field F(5);
    Plane P(F);
    Arc d1 = base_arc(P);
    DisjointConicCensus census = disjoint_conic_census(P, d1);
    std::set<std::string> forward, shuffled;
    for (const Arc& arc : mathon_8arcs_through(P, d1, census)) forward.insert(canonical_form(P, arc));
    std::mt19937 rng(2);
    std::shuffle(census.m_conics.begin(), census.m_conics.end(), rng);
    for (const Arc& arc : mathon_8arcs_through(P, d1, census)) shuffled.insert(canonical_form(P, arc));
    CHECK(forward == shuffled);
    CHECK(forward.size() == 3);
}

TEST_CASE("degree-4 arcs spanning pencils in a rotated frame") {
    Field F(5);
    Plane P(F);
    // two disjoint conics with different pencil parameters still span one
    // pencil; the arc is Denniston in a rotated frame
    std::mt19937 rng(31);
    int done = 0;
    Arc d1 = base_arc(P);
    while (done < 5) {
        Conic a{Elem{static_cast<uint32_t>(rng() % 32)}, Elem{static_cast<uint32_t>(rng() % 32)},
                Elem{static_cast<uint32_t>(1 + rng() % 31)}};
        Conic b{Elem{static_cast<uint32_t>(rng() % 32)}, Elem{static_cast<uint32_t>(rng() % 32)},
                Elem{static_cast<uint32_t>(1 + rng() % 31)}};
        if (!conic_admissible(F, a) || !conic_admissible(F, b)) continue;
        if (a.lambda == b.lambda || !trace_disjoint(F, a, b)) continue;
        if (a.alpha == b.alpha && a.beta == b.beta) continue;  // want mixed parameters
        Arc m = extend_by_conic(P, mathon_arc(P, {a}), b);
        REQUIRE(m.degree == 4);
        CHECK(are_isomorphic(P, m, d1));        // unique class at q = 32
        CHECK(automorphism_order(P, m) == 66);
        ++done;
    }
}
