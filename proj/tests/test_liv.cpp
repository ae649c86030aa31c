#include <doctest.h>

#include "gapvogel/errors.hpp"
#include "gapvogel/liv.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

Cycle cyc(const RingPtr& r, std::initializer_list<std::pair<long, std::vector<std::string>>> parts) {
    Cycle out(r);
    for (const auto& [m, gens] : parts) {
        Ideal p(r, Ps(r, gens));
        out.add(PrimeComponent(p, *dimension(p)), m);
    }
    return out;
}

const Point origin2{0, 0};

}  // namespace

TEST_CASE("local intersection numbers") {
    auto r = ring({"x", "y"});
    CHECK(local_intersection_number(cyc(r, {{1, {"y"}}}), P(r, "x^2"), origin2) == 2);
    CHECK(local_intersection_number(cyc(r, {{3, {"y"}}}), P(r, "x^2"), origin2) == 6);
    CHECK_FALSE(local_intersection_number(cyc(r, {{1, {"y"}}}), P(r, "y"), origin2).has_value());
    CHECK(local_intersection_number(cyc(r, {{1, {"y-1"}}}), P(r, "x"), origin2) == 0);

    // parameterize u = s, x = -2 s^2 / 3: -2 s (4 s^4 / 9) vanishes to order 5
    auto r5 = ring({"u", "v", "w", "x", "y"});
    CHECK(local_intersection_number(cyc(r5, {{1, {"3*x+2*u^2", "v", "w", "y"}}}), P(r5, "-2*u*x^2"),
                                    Point(5, Scalar(0))) == 5);
}

TEST_CASE("gap ratios") {
    auto r = ring({"x", "y"});
    Rng rng(0);
    auto f = Ps(r, {"x^2", "x*y"});
    auto X = whole_space(r);

    auto contained = gap_ratios(f, P(r, "y"), X, origin2, rng);
    REQUIRE(contained.ratios.size() == 1);
    CHECK_FALSE(contained.ratios[0].against_g.has_value());
    CHECK(contained.max_ratio == 0);

    auto two = gap_ratios(f, P(r, "x+y"), X, origin2, rng);
    REQUIRE(two.ratios.size() == 1);
    CHECK(two.ratios[0].against_f == 2);
    CHECK(two.ratios[0].against_g == 1);
    CHECK(two.max_ratio == 2);

    auto away = gap_ratios(f, P(r, "x"), X, Point{0, 1}, rng);
    CHECK(away.ratios.empty());
    CHECK(away.max_ratio == 0);

    CHECK_THROWS_AS(gap_ratios(f, P(r, "x-1"), X, origin2, rng), Error);
}

TEST_CASE("non-rational points are refused") {
    auto r = ring({"x", "y"});
    try {
        point_of(Ideal(r, Ps(r, {"x^2-2", "y"})));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonRationalPoint);
    }
    CHECK(point_of(Ideal(r, Ps(r, {"2*x-1", "y+3"}))) == Point{Scalar(1, 2), Scalar(-3)});
}

TEST_CASE("LIV formulas on the planar family") {
    auto r = ring({"x", "y"});
    auto f = Ps(r, {"x^2", "x*y"});
    auto X = whole_space(r);
    int asserted = 0;
    for (const char* gs : {"y", "x+y"}) {
        const Polynomial g = P(r, gs);
        for (long a : {1L, 2L, -3L})
            for (unsigned j = 1; j <= 5; ++j) {
                Rng rng(100 + j);
                LivReport rep = liv_check(f, g, X, origin2, a, j, rng);
                if (!rep.j_above_max) continue;
                ++asserted;
                INFO("g = " << gs << ", a = " << a << ", j = " << j);
                CHECK(rep.g_proper);
                CHECK(rep.sets_equal);
                CHECK(rep.dimension_drops);
                CHECK(rep.h_defined);
                CHECK(rep.delta0_identity);
                CHECK(rep.higher_identities);
                CHECK(rep.pi_hat1_identity);
                CHECK(rep.min_inequality);
                // independent local length of h = (xy, x^2 + a g^j) at the origin
                long oracle = brute_force_local_length(r, rep.h, j + 3);
                CHECK(oracle == static_cast<long>(j) + 2);
                CHECK(rep.delta0_h == cyc(r, {{oracle, {"x", "y"}}}));
            }
    }
    CHECK(asserted == 15 + 9);
}

TEST_CASE("LIV bookkeeping flags") {
    auto r = ring({"x", "y"});
    Rng rng(5);
    auto f = Ps(r, {"x^2", "x*y"});
    auto rep = liv_check(f, P(r, "x+y"), whole_space(r), origin2, 1, 2, rng);
    CHECK(rep.j_at_least_max);
    CHECK_FALSE(rep.j_above_max);
    CHECK_FALSE(rep.sufficient_bound);
    auto rep3 = liv_check(f, P(r, "y"), whole_space(r), origin2, 1, 3, rng);
    CHECK(rep3.sufficient_bound);

    // g vanishing on Delta^1 = V(x) breaks the hypothesis
    auto bad = liv_check(f, P(r, "x"), whole_space(r), origin2, 1, 2, rng);
    CHECK_FALSE(bad.g_proper);
    CHECK_FALSE(bad.hypotheses());
}

TEST_CASE("restriction lemma") {
    auto r = ring({"x", "y"});
    auto f = Ps(r, {"x^2", "x*y"});
    auto X = whole_space(r);
    for (const char* gs : {"y", "x+y"})
        for (long a : {1L, 2L, -3L})
            for (unsigned j = 1; j <= 5; ++j) {
                const Polynomial g = P(r, gs);
                if (std::string(gs) == "x+y" && j <= 2) continue;
                Rng rng(j);
                INFO("g = " << gs << ", a = " << a << ", j = " << j);
                auto rep = restriction_check(f, f[0] + g.pow(j) * Scalar(a), X, origin2, rng);
                CHECK(rep.preconditions);
                CHECK(rep.holds());
                CHECK(rep.delta0_identity);
                CHECK(rep.pi_hat_identities);
                CHECK(rep.delta_identities);
            }

    Rng rng(9);
    auto direct = restriction_check(f, P(r, "x+y"), X, origin2, rng);
    CHECK(direct.preconditions);
    CHECK(direct.holds());

    // V(y) contains Pi^1 = V(y): not proper, and V(xy, y) is larger than V(f, y)
    auto improper = restriction_check(f, P(r, "y"), X, origin2, rng);
    CHECK(improper.pi1_pure);
    CHECK_FALSE(improper.pi1_proper);
    CHECK_FALSE(improper.sets_equal);
    CHECK(improper.part_i_consistent);
    CHECK_FALSE(improper.preconditions);
}

TEST_CASE("reverse estimation") {
    auto r = ring({"x", "y"});
    auto f = Ps(r, {"x^2", "x*y"});
    Rng rng(4);
    auto est = liv_reverse_estimate(f, P(r, "x+y"), whole_space(r), origin2, 1, 1, 5, rng);
    CHECK(est.delta1_dot_g == 1);
    CHECK(est.c == 1);
    REQUIRE(est.rows.size() == 5);
    for (const auto& row : est.rows) {
        auto gens = Ps(r, {"x*y", "x^2+(x+y)^" + std::to_string(row.j)});
        CHECK(row.delta0_h == brute_force_local_length(r, gens, row.j + 3));
    }
    for (std::size_t k = 2; k < est.rows.size(); ++k) CHECK(est.rows[k].difference == 1);
    REQUIRE(est.certified_from.has_value());
    CHECK(*est.certified_from <= 3);
    CHECK(est.delta0_f == 2);

    auto iso = liv_reverse_estimate(Ps(r, {"x", "y"}), P(r, "x"), whole_space(r), origin2, 1, 1, 4, rng);
    CHECK(iso.delta1_dot_g == 0);
    for (std::size_t k = 1; k < iso.rows.size(); ++k) CHECK(iso.rows[k].difference == 0);
    CHECK(iso.delta0_f == 1);

    // a = -1 cancels x^2 against (x+y)^2 on V(y) at j = 2
    auto exc = liv_reverse_estimate(f, P(r, "x+y"), whole_space(r), origin2, -1, 1, 5, rng);
    CHECK_FALSE(exc.rows[1].sets_equal);
    REQUIRE(exc.certified_from.has_value());
    CHECK(exc.delta0_f == 2);
}

TEST_CASE("cylinder lemma") {
    Rng rng(6);
    auto r1 = ring({"x"});
    auto line = cylinder_check(Ps(r1, {"x"}), whole_space(r1), Point{0}, 1, 2, rng);
    CHECK(line.holds());
    const CylinderLevel* top = nullptr;
    for (const auto& L : line.levels)
        if (L.i == 1) top = &L;
    REQUIRE(top);
    CHECK(top->lhs == cyc(line.ring, {{1, {"x+t^2"}}}));

    auto r = ring({"x", "y"});
    for (unsigned j : {1u, 2u}) {
        auto rep = cylinder_check(Ps(r, {"x^2", "x*y"}), whole_space(r), origin2, 1, j, rng);
        CHECK(rep.holds());
        CHECK(rep.levels.size() == 3);
    }

    auto zero = cylinder_check(Ps(r1, {"0"}), whole_space(r1), Point{0}, 1, 1, rng);
    for (const auto& L : zero.levels) {
        CHECK(L.lhs.is_zero());
        CHECK(L.equal);
    }
}
