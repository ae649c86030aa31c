#include <doctest.h>

#include "gapvogel/blowup.hpp"
#include "gapvogel/errors.hpp"
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

PrimeComponent plane(const RingPtr& r) { return PrimeComponent(Ideal(r), static_cast<int>(r->nvars())); }

}  // namespace

TEST_CASE("blow-up charts") {
    auto r = ring({"x", "y"});
    Rng rng(0);
    auto pt = blowup_charts(Ps(r, {"x", "y"}), plane(r), rng);
    REQUIRE(pt.size() == 2);
    const RingPtr& R2 = pt[1].ring;
    CHECK(pt[1].total_ideal == Ideal(R2, Ps(R2, {"w1-1", "x-w0*y"})));
    CHECK(pt[1].exceptional == cyc(R2, {{1, {"w1-1", "x", "y"}}}));
    CHECK(pt[0].exceptional == cyc(R2, {{1, {"w0-1", "x", "y"}}}));

    auto two = blowup_charts(Ps(r, {"x^2", "x*y"}), plane(r), rng);
    CHECK(two[0].total_ideal == Ideal(R2, Ps(R2, {"w0-1", "y-w1*x"})));
    CHECK(two[0].exceptional == cyc(R2, {{2, {"w0-1", "x", "y"}}}));

    auto r1 = ring({"x"});
    for (const auto& c : blowup_charts(Ps(r1, {"x", "x-1"}), plane(r1), rng)) CHECK(c.exceptional.is_zero());

    CHECK_THROWS_AS(blowup_charts(Ps(r, {"0", "0"}), plane(r), rng), Error);
}

TEST_CASE("chart overlaps agree") {
    auto r = ring({"x", "y"});
    Rng rng(1);
    CHECK(charts_compatible(Ps(r, {"x", "y"}), plane(r), rng));
    CHECK(charts_compatible(Ps(r, {"x^2", "x*y"}), plane(r), rng));
    auto r3 = ring({"x", "y", "z"});
    CHECK(charts_compatible(Ps(r3, {"x*y", "y*z", "x*z"}), plane(r3), rng));
}

TEST_CASE("flag properness") {
    auto r = ring({"x", "y"});
    Rng rng(2);
    for (auto gens : std::vector<std::vector<std::string>>{{"x", "y"}, {"x^2", "x*y"}, {"x", "x*y"}})
        for (const auto& fc : proper_flag_check(Ps(r, gens), plane(r), rng)) {
            CHECK(fc.e_proper);
            CHECK(fc.bl_proper);
        }
    // E = V(x) x [1:0] lies inside the flag w1 = 0
    auto bad = proper_flag_check(Ps(r, {"x", "x^2"}), plane(r), rng);
    REQUIRE(bad.size() == 2);
    CHECK_FALSE(bad[0].e_proper);
    CHECK(bad[1].e_proper);
}

TEST_CASE("push-forward degree") {
    auto r = ring({"x", "y"});
    Rng rng(3);
    const RingPtr R2 = blowup_ring(r, 2);
    BlowupChart chart{0, R2, Ideal(R2), Cycle(R2), Cycle(R2)};
    Cycle C = cyc(R2, {{1, {"w0-1", "w1^2-x", "y"}}});
    CHECK(push_forward(C, chart, r, rng) == cyc(r, {{2, {"y"}}}));
    // a component that contracts pushes forward to zero
    CHECK(push_forward(cyc(R2, {{1, {"w0-1", "x", "y"}}}), chart, r, rng).is_zero());
    // components also visible on an earlier chart are skipped
    BlowupChart second{1, R2, Ideal(R2), Cycle(R2), Cycle(R2)};
    CHECK(push_forward(cyc(R2, {{1, {"w1-1", "w0-y", "x"}}}), second, r, rng).is_zero());
    CHECK(push_forward(cyc(R2, {{1, {"w1-1", "w0", "x"}}}), second, r, rng) == cyc(r, {{1, {"x"}}}));
}

TEST_CASE("Segre-Vogel relation") {
    auto r = ring({"x", "y"});
    Rng rng(4);
    auto X = whole_space(r);
    auto pt = segre_vogel_check(Ps(r, {"x", "y"}), X, rng);
    CHECK(pt.hypothesis);
    CHECK(pt.holds());
    REQUIRE(pt.levels.size() == 2);
    CHECK(pt.levels[1].i == 0);
    CHECK(pt.levels[1].pushed_e == cyc(r, {{1, {"x", "y"}}}));
    CHECK(pt.levels[1].pushed_bl == cyc(r, {{1, {"y"}}}));
    CHECK(pt.levels[0].pushed_bl == X);

    auto two = segre_vogel_check(Ps(r, {"x^2", "x*y"}), X, rng);
    CHECK(two.holds());
    CHECK(two.levels[0].pushed_e == cyc(r, {{1, {"x"}}}));
    CHECK(two.levels[1].pushed_e == cyc(r, {{2, {"x", "y"}}}));

    auto weighted = segre_vogel_check(Ps(r, {"x^2", "x*y"}), X * 3, rng);
    CHECK(weighted.holds());
    CHECK(weighted.levels[1].pushed_e == cyc(r, {{6, {"x", "y"}}}));

    // flag hypothesis fails; E pushes forward to V(x) while Delta^1 = 2V(x)
    auto bad = segre_vogel_check(Ps(r, {"x", "x^2"}), X, rng);
    CHECK_FALSE(bad.hypothesis);
    CHECK_FALSE(bad.holds());
    CHECK(bad.levels[0].pushed_e == cyc(r, {{1, {"x"}}}));
    CHECK(bad.levels[0].delta == cyc(r, {{2, {"x"}}}));
}

TEST_CASE("Vogel reorganization") {
    auto r = ring({"x", "y"});
    Rng rng(5);
    auto fixed = vogel_reorganization(Ps(r, {"x", "x^2"}), whole_space(r), rng);
    CHECK(fixed.attempts >= 1);
    auto rep = segre_vogel_check(fixed.tuple, whole_space(r), rng);
    CHECK(rep.hypothesis);
    CHECK(rep.holds());
}
