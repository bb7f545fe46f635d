#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "maxarc/arc.hpp"
#include "maxarc/canonical.hpp"

using namespace maxarc;

namespace {

AdditiveSubgroup span2(const Field& F, Elem a, Elem b) {
    return AdditiveSubgroup::from_elements(F, {a, b, F.add(a, b)});
}

Conic random_admissible(const Field& F, std::mt19937& rng) {
    for (;;) {
        Conic c{Elem{static_cast<uint32_t>(rng() % F.order())}, Elem{static_cast<uint32_t>(rng() % F.order())}, Elem{static_cast<uint32_t>(1 + rng() % (F.order() - 1))}};
        if (conic_admissible(F, c)) return c;
    }
}

}  // namespace

TEST_CASE("additive subgroups") {
    Field F(5);
    Elem w = F.generator();
    AdditiveSubgroup A = span2(F, F.one(), w);
    CHECK(A.elements.size() == 4);
    CHECK(A.dimension() == 2);
    CHECK(A.basis().size() == 2);
    CHECK_THROWS(AdditiveSubgroup::from_elements(F, {F.one(), w}));  // not closed
    AdditiveSubgroup trivial = AdditiveSubgroup::from_elements(F, {w});
    CHECK(trivial.elements.size() == 2);
}

TEST_CASE("Denniston arcs in PG(2,32)") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    Arc d1 = denniston_arc(P, F.one(), span2(F, F.one(), w));
    CHECK(d1.degree == 4);
    CHECK(d1.points.size() == 100);
    VerifyResult v = verify_maximal_arc(P, d1.points);
    CHECK(v.ok);
    CHECK(v.degree == 4);
    CHECK(v.histogram[0] == 232);
    CHECK(v.histogram[4] == 825);

    // degree-2 hyperoval from a one-dimensional subgroup
    Arc hyp = denniston_arc(P, F.one(), AdditiveSubgroup::from_elements(F, {w}));
    CHECK(hyp.degree == 2);
    CHECK(hyp.points.size() == 34);
    CHECK(verify_maximal_arc(P, hyp.points).ok);

    CHECK_THROWS(denniston_arc(P, F.zero(), span2(F, F.one(), w)));  // Tr(alpha) = 0
}

TEST_CASE("the degree-4 arc of PG(2,8) dualizes to a hyperoval") {
    Field F(3);
    Plane P(F);
    Elem g = F.generator();
    Arc d = denniston_arc(P, F.one(), span2(F, F.one(), g));
    CHECK(d.degree == 4);
    CHECK(d.points.size() == 28);
    CHECK(verify_maximal_arc(P, d.points).ok);
    Arc dual = dual_arc(P, d);
    CHECK(dual.degree == 2);
    CHECK(dual.points.size() == 10);  // q + 2, a hyperoval
    VerifyResult v = verify_maximal_arc(P, dual.points);
    CHECK(v.ok);
    CHECK(v.degree == 2);
}

TEST_CASE("closed set check") {
    Field F(5);
    Elem w = F.generator();
    std::vector<Conic> pencil;
    for (Elem l : {F.one(), w, F.add(F.one(), w)}) pencil.push_back(Conic{F.one(), F.one(), l});
    CHECK(closed_set_check(F, pencil).ok);

    // dropping one member of a closed 7-set leaves a witness pair
    Plane P(F);
    Arc m3 = mathon_exponent_arc(P, 6, 19, 8, {F.one(), w, F.exp(9)});
    std::vector<Conic> six(m3.conics.begin(), m3.conics.end() - 1);
    ClosedSetCheck check = closed_set_check(F, six);
    CHECK_FALSE(check.ok);
    CHECK(check.i >= 0);
    CHECK(check.j >= 0);
    CHECK(compose(F, six[check.i], six[check.j]) == m3.conics.back());

    std::vector<Conic> dup = {pencil[0], Conic{F.exp(3), F.exp(2), F.one()}};
    CHECK_FALSE(closed_set_check(F, dup).ok);  // repeated lambda
    std::vector<Conic> bad_trace = {Conic{F.one(), F.zero(), F.one()}};
    CHECK_FALSE(closed_set_check(F, bad_trace).ok);
}

TEST_CASE("Mathon arcs from explicit sets and exponent form") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();

    Arc single = mathon_arc(P, {Conic{F.one(), F.one(), F.one()}});
    CHECK(single.degree == 2);
    CHECK(verify_maximal_arc(P, single.points).ok);

    std::vector<Elem> basis{F.one(), w, F.exp(9)};
    for (auto [k, l, m] : {std::array<int, 3>{12, 15, 4}, {5, 25, 14}, {6, 19, 8}}) {
        Arc arc = mathon_exponent_arc(P, k, l, m, basis);
        CHECK(arc.degree == 8);
        VerifyResult v = verify_maximal_arc(P, arc.points);
        CHECK(v.ok);
        CHECK(v.histogram[0] == 100);
        CHECK(v.histogram[8] == 957);
    }

    // the published seven-conic set
    std::vector<Conic> seven = {
        Conic{F.one(), F.one(), F.one()},        Conic{F.one(), F.one(), w},
        Conic{F.one(), F.one(), F.exp(18)},      Conic{F.one(), F.exp(12), F.exp(25)},
        Conic{F.one(), F.exp(6), F.exp(21)},     Conic{F.one(), F.exp(18), F.exp(16)},
        Conic{F.one(), F.exp(20), F.exp(9)}};
    Arc published = mathon_arc(P, seven);
    CHECK(published.degree == 8);
    CHECK(verify_maximal_arc(P, published.points).ok);
    Arc m3 = mathon_exponent_arc(P, 6, 19, 8, basis);
    CHECK(published.points == m3.points);
}

TEST_CASE("verification rejects non-arcs with a witness line") {
    Field F(5);
    Plane P(F);
    std::mt19937 rng(71);
    std::set<uint32_t> random_pts;
    while (random_pts.size() < 100) random_pts.insert(rng() % P.point_count());
    VerifyResult v = verify_maximal_arc(P, {random_pts.begin(), random_pts.end()});
    CHECK_FALSE(v.ok);
    CHECK(v.offending_line.has_value());

    Arc d1 = denniston_arc(P, F.one(), span2(F, F.one(), F.generator()));
    std::vector<uint32_t> chopped(d1.points.begin(), d1.points.end() - 1);
    VerifyResult v2 = verify_maximal_arc(P, chopped);
    CHECK_FALSE(v2.ok);

    CHECK_FALSE(verify_maximal_arc(P, {}).ok);
}

TEST_CASE("extension: algebra when the frame fits, synthetic otherwise") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    Arc d1 = denniston_arc(P, F.one(), span2(F, F.one(), w));

    // one conic + a disjoint conic: the unique degree-4 arc through both
    Arc base = mathon_arc(P, {Conic{F.one(), F.one(), F.one()}});
    Arc four = extend_by_conic(P, base, Conic{F.one(), F.one(), w});
    CHECK(four.degree == 4);
    CHECK(four.points == d1.points);

    // extending inside the pencil keeps Denniston type
    Arc eight = extend_by_conic(P, d1, Conic{F.one(), F.one(), F.exp(9)});
    CHECK(eight.degree == 8);
    CHECK(verify_maximal_arc(P, eight.points).ok);
    CHECK(infinity_data(P, eight).denniston);

    // the worked PG(2,32) extension
    Arc k = extend_by_conic(P, d1, Conic{F.one(), F.exp(12), F.exp(25)});
    CHECK(k.degree == 8);
    CHECK(k.adapted());
    CHECK(verify_maximal_arc(P, k.points).ok);

    // a frame-incompatible disjoint conic goes through the synthetic path
    Collineation theta = theta_family(F, F.one(), F.exp(2), 1);
    Conic moved = to_conic(F, apply(F, theta, Conic{F.one(), F.one(), w}));
    REQUIRE(F.trace(F.mul(moved.alpha, moved.beta)) == 0);
    Arc synth = extend_by_conic(P, d1, moved);
    CHECK(synth.degree == 8);
    CHECK_FALSE(synth.adapted());
    CHECK(verify_maximal_arc(P, synth.points).ok);
    CHECK(closed_set_check(F, synth.conics).ok);

    // rejections
    CHECK_THROWS(extend_by_conic(P, d1, Conic{F.one(), F.one(), w}));  // lambda collision
    CHECK_THROWS(extend_by_conic(P, d1, Conic{F.one(), F.one(), F.add(w, F.one())}));
    Field F8(3);
    Plane P8(F8);
    Arc d8 = denniston_arc(P8, F8.one(), span2(F8, F8.one(), F8.generator()));
    CHECK_THROWS(extend_by_conic(P8, d8, Conic{F8.one(), F8.one(), F8.exp(3)}));  // d = q/2
}

TEST_CASE("external lines and the secant census") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    Arc d1 = denniston_arc(P, F.one(), span2(F, F.one(), w));
    Conic ctheta{F.one(), F.exp(12), F.exp(25)};

    Line ext = find_external_line(P, d1, ctheta);
    auto in = std::vector<uint8_t>(P.point_count(), 0);
    for (uint32_t r : d1.points) in[r] = 1;
    for (uint32_t r : conic_point_ranks(P, ctheta)) in[r] = 1;
    for (uint32_t pr : P.points_on(P.line_rank(ext))) CHECK_FALSE(in[pr]);

    SecantCensus census = secant_census(P, d1, ctheta);
    CHECK(census.secants_m == 825);
    CHECK(census.externals_m == 232);
    CHECK(census.c_only == 132);
    CHECK(census.secants_mc == 957);
    CHECK(census.secants_mc == census.secants_m + census.c_only);
    CHECK(census.secants_mc < 1057);
}

TEST_CASE("dual arcs") {
    Field F(5);
    Plane P(F);
    Arc d1 = denniston_arc(P, F.one(), span2(F, F.one(), F.generator()));
    Arc dual = dual_arc(P, d1);
    CHECK(dual.points.size() == 232);
    CHECK(dual.degree == 8);
    VerifyResult v = verify_maximal_arc(P, dual.points);
    CHECK(v.ok);
    CHECK(v.degree == 8);
    Arc dd = dual_arc(P, dual);
    CHECK(dd.points == d1.points);
}

TEST_CASE("Fano structure of degree-8 arcs") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    Arc m3 = mathon_exponent_arc(P, 6, 19, 8, {F.one(), w, F.exp(9)});
    FanoStructure fano = fano_decomposition(F, m3);
    // each two subarcs share one conic, each conic lies in three subarcs
    std::array<int, 7> in_count{};
    for (const auto& t : fano.subarcs)
        for (int x : t) ++in_count[x];
    for (int x : in_count) CHECK(x == 3);

    // a degree-8 Denniston arc has the same combinatorics
    std::vector<Elem> three = {F.one(), w, F.exp(2)};
    Arc den8 = denniston_arc(P, F.one(), AdditiveSubgroup::from_elements(
                                             F, {F.one(), w, F.exp(2), F.add(F.one(), w),
                                                 F.add(F.one(), F.exp(2)), F.add(w, F.exp(2)),
                                                 F.add(F.add(F.one(), w), F.exp(2))}));
    CHECK(den8.degree == 8);
    FanoStructure fano8 = fano_decomposition(F, den8);
    InfinityData info8 = infinity_data(P, den8, fano8);
    CHECK(info8.denniston);
    CHECK(info8.lines[0] == pencil_infinity_line(F));

    CHECK_THROWS(fano_decomposition(F, denniston_arc(P, F.one(), span2(F, F.one(), w))));
}

TEST_CASE("infinity data and the elation involution of a proper 8-arc") {
    Field F(5);
    Plane P(F);
    Elem w = F.generator();
    Arc d1 = denniston_arc(P, F.one(), span2(F, F.one(), w));
    // the raw theta image with sigma = 4, t = w^2 keeps the concurrency
    // point at (0,1,0)
    Arc k = extend_by_conic(P, d1, Conic{F.exp(12), F.one(), F.exp(21)});
    InfinityData info = infinity_data(P, k);
    CHECK_FALSE(info.denniston);
    REQUIRE(info.center.has_value());
    CHECK(*info.center == Point{F.zero(), F.one(), F.zero()});
    std::set<uint32_t> distinct;
    for (const Line& l : info.lines) distinct.insert(P.line_rank(l));
    CHECK(distinct.size() == 7);

    Collineation iota = elation_involution(P, k);
    // involution with the stated center and axis
    Point probe = P.point_at(321);
    CHECK(apply(F, compose(F, iota, iota), probe) == probe);
    Line axis = P.join(P.point_at(*k.nucleus), *info.center);
    for (uint32_t pr : P.points_on(P.line_rank(axis)))
        CHECK(apply(F, iota, P.point_at(pr)) == P.point_at(pr));
    for (const Conic& c : k.conics) CHECK(to_conic(F, apply(F, iota, c)) == c);

    // equivariance of the concurrency point
    std::mt19937 rng(73);
    for (int i = 0; i < 10; ++i) {
        Mat3 m;
        do {
            for (int r = 0; r < 3; ++r)
                for (int cc = 0; cc < 3; ++cc) m.m[r][cc] = Elem{static_cast<uint32_t>(rng() % 32)};
        } while (mat_det(F, m).bits == 0);
        Collineation g{m, static_cast<int>(rng() % 5)};
        Arc kg = apply_arc(P, g, k);
        InfinityData ig = infinity_data(P, kg);
        REQUIRE(ig.center.has_value());
        CHECK(*ig.center == apply(F, g, *info.center));
    }
}

TEST_CASE("constructed arcs verify at q = 128") {
    Field F(7);
    Plane P(F);
    Elem g = F.generator();
    Arc d = denniston_arc(P, F.one(), span2(F, F.one(), g));
    CHECK(d.points.size() == 388);
    VerifyResult v = verify_maximal_arc(P, d.points);
    CHECK(v.ok);
    CHECK(v.degree == 4);
    CHECK(v.histogram[0] == (128 + 1) * (128 / 4 - 1) + 1);
}

TEST_CASE("two disjoint conics lie in exactly one degree-4 arc") {
    // exhaust third-conic candidates: only the composition closes the set
    Field F(3);
    Plane P(F);
    std::vector<Conic> all;
    for (uint32_t a = 0; a < 8; ++a)
        for (uint32_t b = 0; b < 8; ++b)
            for (uint32_t l = 1; l < 8; ++l)
                if (conic_admissible(F, Conic{Elem{a}, Elem{b}, Elem{l}}))
                    all.push_back(Conic{Elem{a}, Elem{b}, Elem{l}});
    int pairs_checked = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].lambda == all[j].lambda || !trace_disjoint(F, all[i], all[j])) continue;
            int closing = 0;
            for (const Conic& cand : all) {
                if (cand == all[i] || cand == all[j]) continue;
                if (closed_set_check(F, {all[i], all[j], cand}).ok) ++closing;
            }
            REQUIRE(closing == 1);
            ++pairs_checked;
        }
    CHECK(pairs_checked > 500);

    Field F32(5);
    std::mt19937 rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        Conic a = random_admissible(F32, rng), b = random_admissible(F32, rng);
        if (a.lambda == b.lambda || !trace_disjoint(F32, a, b)) {
            --trial;
            continue;
        }
        Conic third = compose(F32, a, b);
        int closing = 0;
        for (uint32_t aa = 0; aa < 32; ++aa)
            for (uint32_t bb = 0; bb < 32; ++bb)
                for (uint32_t ll = 1; ll < 32; ++ll) {
                    Conic cand{Elem{aa}, Elem{bb}, Elem{ll}};
                    if (!conic_admissible(F32, cand) || cand == a || cand == b) continue;
                    if (closed_set_check(F32, {a, b, cand}).ok) {
                        ++closing;
                        REQUIRE(cand == third);
                    }
                }
        REQUIRE(closing == 1);
    }
}

TEST_CASE("line-classification formulas across q and d") {
    // secants to M, externals to M, lines on C only, secants to the union
    for (auto [h, dims] : std::vector<std::pair<int, std::vector<int>>>{
             {3, {1}}, {4, {1, 2}}, {5, {1, 2, 3}}}) {
        Field F(h);
        Plane P(F);
        const long q = static_cast<long>(F.order());
        for (int dim : dims) {
            std::vector<Elem> gens;
            for (int i = 0; i < dim; ++i) gens.push_back(F.exp(i));  // 1, w, w^2
            std::vector<Elem> elems;
            for (uint32_t mask = 1; mask < (1u << dim); ++mask) {
                Elem s{0};
                for (int i = 0; i < dim; ++i)
                    if (mask & (1u << i)) s = F.add(s, gens[i]);
                elems.push_back(s);
            }
            Elem alpha = F.one();
            for (uint32_t a = 1; a < F.order(); ++a)
                if (F.trace(Elem{a}) == 1) {
                    alpha = Elem{a};
                    break;
                }
            Arc m = denniston_arc(P, alpha, AdditiveSubgroup::from_elements(F, elems));
            const long d = m.degree;
            REQUIRE(2 * d < q);  // Lemma hypothesis d < q/2

            // first admissible conic disjoint from M, in canonical order
            std::vector<uint8_t> in(P.point_count(), 0);
            for (uint32_t r : m.points) in[r] = 1;
            bool found = false;
            Conic c{F.zero(), F.zero(), F.zero()};
            for (uint32_t a = 0; a < F.order() && !found; ++a)
                for (uint32_t b = 0; b < F.order() && !found; ++b)
                    for (uint32_t l = 1; l < F.order() && !found; ++l) {
                        Conic cand{Elem{a}, Elem{b}, Elem{l}};
                        if (!conic_admissible(F, cand)) continue;
                        bool hit = false;
                        for (uint32_t r : conic_point_ranks(P, cand)) hit = hit || in[r];
                        if (!hit) {
                            c = cand;
                            found = true;
                        }
                    }
            REQUIRE(found);

            SecantCensus sc = secant_census(P, m, c);
            CHECK(sc.secants_m == (d - 1) * q * q / d + (2 * d - 1) * q / d + 1);
            CHECK(sc.externals_m == (q + 1) * (q / d - 1) + 1);
            CHECK(sc.c_only == q * q / (2 * d) + q / (2 * d));
            CHECK(sc.secants_mc == (2 * d - 1) * q * q / (2 * d) + (4 * d - 1) * q / (2 * d) + 1);
            CHECK(sc.secants_mc < q * q + q + 1);
        }
    }
}

TEST_CASE("composition is associative inside a closed set") {
    Field F(5);
    Plane P(F);
    Arc m3 = mathon_exponent_arc(P, 6, 19, 8, {F.one(), F.generator(), F.exp(9)});
    const auto& cs = m3.conics;
    int checked = 0;
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            for (std::size_t k = 0; k < cs.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                Conic ij = compose(F, cs[i], cs[j]);
                Conic jk = compose(F, cs[j], cs[k]);
                if (ij.lambda == cs[k].lambda || jk.lambda == cs[i].lambda) continue;
                REQUIRE(compose(F, ij, cs[k]) == compose(F, cs[i], jk));
                ++checked;
            }
    CHECK(checked > 100);
}
