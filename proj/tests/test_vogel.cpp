#include <doctest.h>

#include <chrono>

#include "gapvogel/errors.hpp"
#include "gapvogel/ideal_ops.hpp"
#include "gapvogel/vogel.hpp"
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

Tuple five_var(const RingPtr& r) {
    return Ps(r, {"-2*u*x^2", "-2*v*x^2", "-2*w*x^2", "-3*x^2 - 2*x*(u^2+v^2+w^2)", "2*y"});
}

}  // namespace

TEST_CASE("normalize_tuple") {
    auto r = ring({"x", "y"});
    CHECK(normalize_tuple(Ps(r, {"x", "y", "x+y"}), 2) == Ps(r, {"y", "x+y"}));
    CHECK(normalize_tuple(Ps(r, {"x"}), 2) == Ps(r, {"x", "x"}));
    CHECK(normalize_tuple(Ps(r, {"x", "y"}), 2) == Ps(r, {"x", "y"}));
    CHECK(normalize_tuple(Ps(r, {"x", "y"}), 4) == Ps(r, {"x", "x", "x", "y"}));
}

TEST_CASE("gap schemes") {
    auto r = ring({"x", "y"});
    Ideal X(r);
    auto f = Ps(r, {"x^2", "x*y"});
    CHECK(gap_scheme(f, X, 2, 1, GapFlavor::Modified) == Ideal(r, Ps(r, {"y"})));
    CHECK(gap_scheme(f, X, 2, 2, GapFlavor::Plain).is_zero());
    CHECK(gap_scheme(f, X, 2, 0, GapFlavor::Plain).is_unit());

    auto r5 = ring({"u", "v", "w", "x", "y"});
    Ideal plain = gap_scheme(five_var(r5), Ideal(r5), 5, 1, GapFlavor::Plain);
    CHECK(*dimension(plain) == 1);
    CHECK(same_variety(plain, Ideal(r5, Ps(r5, {"3*x+2*u^2", "v", "w", "y"}))));
}

TEST_CASE("five-variable golden tower") {
    auto r = ring({"u", "v", "w", "x", "y"});
    Rng rng(0);
    auto t0 = std::chrono::steady_clock::now();
    VogelTower T = vogel_tower(five_var(r), whole_space(r), rng);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("five-variable tower in " << secs << " s");
    CHECK(secs < 10.0);
    CHECK(T.correct_dimension());
    CHECK(T.pi_hat(5) == whole_space(r));
    CHECK(T.pi_hat(4) == cyc(r, {{1, {"y"}}}));
    CHECK(T.pi_hat(3) == cyc(r, {{1, {"3*x+2*(u^2+v^2+w^2)", "y"}}}));
    CHECK(T.pi_hat(2) == cyc(r, {{1, {"3*x+2*(u^2+v^2)", "w", "y"}}}));
    CHECK(T.pi_hat(1) == cyc(r, {{1, {"3*x+2*u^2", "v", "w", "y"}}}));
    CHECK(T.pi_hat(0).is_zero());
    CHECK(T.delta(5).is_zero());
    CHECK(T.delta(4).is_zero());
    CHECK(T.delta(3) == cyc(r, {{1, {"x", "y"}}}));
    CHECK(T.delta(2) == cyc(r, {{2, {"u^2+v^2+w^2", "x", "y"}}}));
    CHECK(T.delta(1) == cyc(r, {{2, {"u^2+v^2", "w", "x", "y"}}}));
    CHECK(T.delta(0) == cyc(r, {{5, {"u", "v", "w", "x", "y"}}}));

    auto sets = vogel_sets(five_var(r), whole_space(r));
    REQUIRE(sets.size() == 6);
    CHECK(sets[0].components.empty());
    CHECK(sets[1].components.empty());
    CHECK(same_variety(sets[2].support, Ideal(r, Ps(r, {"x", "y"}))));
    CHECK(same_variety(sets[3].support, Ideal(r, Ps(r, {"u^2+v^2+w^2", "x", "y"}))));
    CHECK(same_variety(sets[4].support, Ideal(r, Ps(r, {"u^2+v^2", "w", "x", "y"}))));
    CHECK(same_variety(sets[5].support, Ideal(r, Ps(r, {"u", "v", "w", "x", "y"}))));

    auto rep = check_dimensionality(five_var(r), whole_space(r));
    CHECK(rep.i_holds);
    CHECK(rep.ii_holds);
    CHECK(rep.iii_holds);
    CHECK(rep.iv_holds);
}

TEST_CASE("two-generator planar tower") {
    auto r = ring({"x", "y"});
    Rng rng(1);
    auto f = Ps(r, {"x^2", "x*y"});
    VogelTower T = vogel_tower(f, whole_space(r), rng);
    CHECK(T.delta(1) == cyc(r, {{1, {"x"}}}));
    CHECK(T.pi_hat(1) == cyc(r, {{1, {"y"}}}));
    CHECK(T.delta(0) == cyc(r, {{2, {"x", "y"}}}));
    // Delta^0 length against the quotient Q[x,y]/(y, x^2)
    CHECK(*quotient_dimension(Ideal(r, Ps(r, {"y", "x^2"}))) == 2);
    // M-weighting
    VogelTower T3 = vogel_tower(f, whole_space(r) * 3, rng);
    CHECK(T3.delta(0) == T.delta(0) * 3);
}

TEST_CASE("identically zero tuple") {
    auto r = ring({"x"});
    Rng rng(0);
    VogelTower T = vogel_tower(Ps(r, {"0", "0"}), whole_space(r), rng);
    CHECK(T.delta(1) == whole_space(r));
    CHECK(T.pi_hat(1).is_zero());
    CHECK(T.delta(0).is_zero());
    CHECK(T.pi_hat(0).is_zero());
}

TEST_CASE("isolated zero") {
    auto r = ring({"x", "y"});
    Rng rng(0);
    auto f = Ps(r, {"x", "y"});
    VogelTower T = vogel_tower(f, whole_space(r), rng);
    CHECK(T.delta(2).is_zero());
    CHECK(T.delta(1).is_zero());
    CHECK(T.delta(0) == cyc(r, {{1, {"x", "y"}}}));
    auto sets = vogel_sets(f, whole_space(r));
    REQUIRE(sets.size() == 3);
    CHECK(sets[0].components.empty());
    CHECK(sets[1].components.empty());
    CHECK(sets[2].components.size() == 1);
    auto rep = check_dimensionality(f, whole_space(r));
    CHECK((rep.i_holds && rep.ii_holds && rep.iii_holds && rep.iv_holds));
}

TEST_CASE("vogel sets cover |M| meet V(f)") {
    auto r = ring({"x", "y"});
    auto f = Ps(r, {"x^2", "x*y"});
    std::vector<Ideal> ps;
    for (const auto& S : vogel_sets(f, whole_space(r)))
        for (const auto& c : S.components) ps.push_back(c.prime);
    CHECK(same_variety(intersect(ps, r), Ideal(r, f)));

    auto r5 = ring({"u", "v", "w", "x", "y"});
    ps.clear();
    for (const auto& S : vogel_sets(five_var(r5), whole_space(r5)))
        for (const auto& c : S.components) ps.push_back(c.prime);
    CHECK(same_variety(intersect(ps, r5), Ideal(r5, five_var(r5))));
}

TEST_CASE("degenerate tuple") {
    auto r = ring({"x", "y", "z"});
    auto f = Ps(r, {"y", "x*z", "x*y"});
    Rng rng(7);
    bool thrown = false;
    try {
        vogel_tower(f, whole_space(r), rng);
    } catch (const CorrectDimensionViolated& e) {
        thrown = true;
        CHECK(e.level() == 2);
        CHECK(e.object() == "Pi^2");
    }
    CHECK(thrown);

    auto rep = check_dimensionality(f, whole_space(r));
    CHECK_FALSE(rep.i_holds);
    CHECK_FALSE(rep.ii_holds);
    CHECK_FALSE(rep.iii_holds);
    CHECK(rep.implications_hold());

    TowerOptions opt;
    opt.mode = TowerMode::AutoReorganize;
    Rng rng2(7);
    VogelTower T = vogel_tower(f, whole_space(r), rng2, opt);
    REQUIRE(T.reorganization.has_value());
    CHECK(T.correct_dimension());
    auto rep2 = check_dimensionality(T.reorganization->tuple, whole_space(r));
    CHECK((rep2.i_holds && rep2.ii_holds && rep2.iii_holds && rep2.iv_holds));
    // the supports of the Vogel cycles still cover V(f)
    std::vector<Ideal> ps;
    for (int i = 0; i <= 3; ++i) {
        const Cycle D = T.delta(i);
        for (const auto& t : D.terms()) ps.push_back(t.comp.prime);
    }
    CHECK(same_variety(intersect(ps, r), Ideal(r, f)));
}

TEST_CASE("reorganize a repeated entry") {
    auto r = ring({"x"});
    Rng rng(3);
    auto res = reorganize(Ps(r, {"x", "x"}), whole_space(r), rng);
    const auto& a = res.coefficients.back();
    CHECK(a[0] + a[1] != 0);
    CHECK(Ideal(r, {res.tuple.back()}) == Ideal(r, Ps(r, {"x"})));
    CHECK(res.attempts >= 1);
}

TEST_CASE("invalid M") {
    auto r = ring({"x", "y"});
    Rng rng(0);
    Cycle M = cyc(r, {{1, {"x"}}, {-1, {"y"}}});
    CHECK_THROWS_AS(vogel_tower(Ps(r, {"x", "y"}), M, rng), Error);
}

TEST_CASE("tower over a curve component") {
    auto r = ring({"x", "y"});
    Rng rng(0);
    Cycle M = cyc(r, {{2, {"y - x^2"}}});
    VogelTower T = vogel_tower(Ps(r, {"y"}), M, rng);
    // y restricted to the parabola vanishes to order 2 at the origin
    CHECK(T.delta(0) == cyc(r, {{4, {"x", "y"}}}));
}

TEST_CASE("reorganized five-variable tuple") {
    auto r = ring({"u", "v", "w", "x", "y"});
    Rng rng(11);
    VogelTower T = vogel_tower(five_var(r), whole_space(r), rng);
    auto res = reorganize(five_var(r), whole_space(r), rng);
    Rng rng2(12);
    VogelTower T2 = vogel_tower(res.tuple, whole_space(r), rng2);
    CHECK(T2.correct_dimension());
    for (int i : {0, 2, 3, 4, 5}) {
        INFO("i = " << i << ": " << T.delta(i).to_string() << " vs " << T2.delta(i).to_string());
        CHECK(T2.delta(i) == T.delta(i));
    }
    // Delta^1 is the cone u^2+v^2+w^2 = 0 cut by a plane that depends on the tuple.
    const Cycle D1 = T2.delta(1);
    REQUIRE(D1.size() == 1);
    CHECK(D1.terms()[0].mult == 2);
    CHECK(D1.terms()[0].comp.dim == 1);
    const Ideal& q = D1.terms()[0].comp.prime;
    CHECK(q.contains(P(r, "u^2+v^2+w^2")));
    CHECK(q.contains(P(r, "x")));
    CHECK(q.contains(P(r, "y")));
}

TEST_CASE("one bad slice value does not change the tower") {
    // with seed 4242 the first two slice probes of one component disagree
    auto r = ring({"x", "y", "z"});
    auto f = Ps(r, {"-2*y*z-3*y", "2*x*y-y^2+x", "y*z+x", "x^2-z^2+x"});
    Rng a(0), b(4242);
    VogelTower Ta = vogel_tower(f, whole_space(r), a);
    VogelTower Tb = vogel_tower(f, whole_space(r), b);
    for (int i = 0; i <= 3; ++i) {
        CHECK(Ta.pi_hat(i) == Tb.pi_hat(i));
        CHECK(Ta.delta(i) == Tb.delta(i));
    }
}
