#include <doctest.h>

#include "gapvogel/cycles.hpp"
#include "gapvogel/errors.hpp"
#include "gapvogel/ideal_ops.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal(r, Ps(r, gens)); }

PrimeComponent comp(const RingPtr& r, const std::vector<std::string>& gens) {
    Ideal p = I(r, gens);
    return PrimeComponent(p, *dimension(p));
}

std::vector<std::string> keys(const std::vector<PrimeComponent>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.key);
    return out;
}

}  // namespace

TEST_CASE("dimension") {
    auto r2 = ring({"x", "y"});
    CHECK(dimension(I(r2, {"x", "y"})) == 0);
    CHECK(dimension(I(r2, {"x*y"})) == 1);
    CHECK(dimension(I(r2, {"x", "x-1"})) == std::nullopt);
    CHECK(dimension(Ideal(r2)) == 2);
    auto r5 = ring({"u", "v", "w", "x", "y"});
    CHECK(dimension(I(r5, {"3*x+2*(u^2+v^2+w^2)", "y"})) == 3);
}

TEST_CASE("minimal primes") {
    auto r2 = ring({"x", "y"});
    CHECK(keys(minimal_primes(I(r2, {"x*y"}))) == keys({comp(r2, {"x"}), comp(r2, {"y"})}));
    CHECK(minimal_primes(Ideal::unit(r2)).empty());
    CHECK(keys(minimal_primes(I(r2, {"x^2", "x*y"}))) == keys({comp(r2, {"x"})}));
    auto r5 = ring({"u", "v", "w", "x", "y"});
    CHECK(keys(minimal_primes(I(r5, {"u^2+v^2+w^2", "x", "y"}))) == keys({comp(r5, {"u^2+v^2+w^2", "x", "y"})}));
    CHECK(keys(minimal_primes(I(r5, {"3*x+2*u^2", "v", "w", "y", "u*x^2"}))) ==
          keys({comp(r5, {"u", "v", "w", "x", "y"})}));
    // four conjugate points forming one Q-point, and a pair that splits along y = x and y = -x
    auto field = minimal_primes(I(r2, {"x^2-2", "y^2-3"}));
    REQUIRE(field.size() == 1);
    CHECK(*quotient_dimension(field[0].prime) == 4);
    auto mp = minimal_primes(I(r2, {"x^2-2", "y^2-2"}));
    CHECK(mp.size() == 2);
    for (const auto& c : mp) CHECK(c.dim == 0);
    // twisted cubic intersected with a plane
    auto r3 = ring({"x", "y", "z"});
    auto tc = minimal_primes(I(r3, {"y-x^2", "z-x^3"}));
    CHECK(tc.size() == 1);
    auto cone = minimal_primes(I(r3, {"x^2+y^2-z^2", "z-1"}));
    CHECK(cone.size() == 1);
    CHECK(cone[0].dim == 1);
    auto split = minimal_primes(I(r3, {"x^2-y^2", "z"}));
    CHECK(split.size() == 2);
    // positive-dimensional prime not caught by linear elimination
    auto pd = minimal_primes(I(r3, {"x*z-y^2", "x^3-y*z"}));
    for (const auto& c : pd) CHECK(c.dim == 1);
}

TEST_CASE("presentation independence") {
    auto r3 = ring({"x", "y", "z"});
    auto a = minimal_primes(I(r3, {"x*y", "y*z"}));
    auto b = minimal_primes(I(r3, {"x*y+y*z", "y*z", "x*y*z+x*y"}));
    CHECK(keys(a) == keys(b));
}

TEST_CASE("local lengths") {
    Rng rng(1);
    auto r2 = ring({"x", "y"});
    CHECK(local_length(I(r2, {"x^2"}), comp(r2, {"x"}), rng) == 2);
    CHECK(local_length(I(r2, {"x", "y"}), comp(r2, {"x", "y"}), rng) == 1);
    auto r5 = ring({"u", "v", "w", "x", "y"});
    CHECK(local_length(I(r5, {"3*x+2*(u^2+v^2+w^2)", "y", "w*x^2"}), comp(r5, {"u^2+v^2+w^2", "x", "y"}), rng) == 2);
    CHECK(local_length(I(r5, {"3*x+2*u^2", "v", "w", "y", "u*x^2"}), comp(r5, {"u", "v", "w", "x", "y"}), rng) == 5);
    // non-rational zero-dimensional prime: (x^2-2)^2 gives length 2 at the conjugate pair
    CHECK(local_length(I(r2, {"(x^2-2)^2", "y"}), comp(r2, {"x^2-2", "y"}), rng) == 2);
    CHECK(length_at_point(I(r2, {"x*y", "x^2+y^3"}), {0, 0}) == 5);
    CHECK(length_at_point(I(r2, {"x-1", "y"}), {0, 0}) == 0);
    CHECK_THROWS_AS(length_at_point(I(r2, {"x*y"}), {0, 0}), Error);
}

TEST_CASE("m-adic lengths agree with brute-force linear algebra") {
    auto r2 = ring({"x", "y"});
    for (int j = 1; j <= 5; ++j) {
        auto gens = Ps(r2, {"x*y", "x^2+y^" + std::to_string(j)});
        long expected = brute_force_length(r2, gens, static_cast<unsigned>(j + 3));
        CHECK(expected == j + 2);
        CHECK(length_at_point(Ideal(r2, gens), {0, 0}) == expected);
    }
}

TEST_CASE("length additivity on zero-dimensional ideals") {
    Rng rng(2);
    auto r2 = ring({"x", "y"});
    for (auto gens : std::vector<std::vector<std::string>>{
             {"x^2-y", "y^2-1"}, {"(x-1)^2*(x+2)", "y^2-x"}, {"x^3-2", "y-x^2"}, {"x*y-1", "x^2+y^2-3"}}) {
        Ideal J = I(r2, gens);
        long total = 0;
        for (const auto& p : minimal_primes(J))
            total += local_length(J, p, rng) * static_cast<long>(*quotient_dimension(p.prime));
        CHECK(total == static_cast<long>(*quotient_dimension(J)));
    }
}

TEST_CASE("cycle of a scheme") {
    Rng rng(3);
    auto r2 = ring({"x", "y"});
    CHECK(cycle_of_scheme(I(r2, {"x*y"}), rng) == Cycle::of(comp(r2, {"x"})) + Cycle::of(comp(r2, {"y"})));
    CHECK(cycle_of_scheme(I(r2, {"x^2", "x*y"}), rng) == Cycle::of(comp(r2, {"x"})));
    auto r5 = ring({"u", "v", "w", "x", "y"});
    Cycle c = cycle_of_scheme(I(r5, {"3*x+2*(u^2+v^2)", "w", "y", "v*x^2"}), rng);
    CHECK(c == Cycle::of(comp(r5, {"3*x+2*u^2", "v", "w", "y"})) + Cycle::of(comp(r5, {"u^2+v^2", "w", "x", "y"}), 2));
    // positive-dimensional multiplicity through slicing
    auto r3 = ring({"x", "y", "z"});
    CHECK(cycle_of_scheme(I(r3, {"(x^2+y^2-1)^3", "z^2"}), rng) == Cycle::of(comp(r3, {"x^2+y^2-1", "z"}), 6));
    // removing W commutes with taking cycles
    Ideal J = I(r2, {"x^2*y", "x*y^2"});
    Ideal W = I(r2, {"x"});
    CHECK(cycle_of_scheme(gap_sheaf(J, W), rng) == cycle_not(cycle_of_scheme(J, rng), W));
}

TEST_CASE("cycle operations") {
    Rng rng(4);
    auto r2 = ring({"x", "y"});
    Cycle lx = Cycle::of(comp(r2, {"x"})), ly = Cycle::of(comp(r2, {"y"}));
    CHECK(cycle_not(lx + ly, I(r2, {"x"})) == ly);
    CHECK(cycle_not(lx + ly, Ideal::unit(r2)) == lx + ly);
    CHECK(cycle_not(lx + ly, I(r2, {"x", "y"})) == lx + ly);
    CHECK(intersect_hypersurface(ly, P(r2, "x^2"), rng) == Cycle::of(comp(r2, {"x", "y"}), 2));
    CHECK_THROWS_AS(intersect_hypersurface(ly, P(r2, "y"), rng), Error);
    auto [in0, out0] = split_by_variety(lx + ly, Ideal(r2));
    CHECK(in0 == lx + ly);
    CHECK(out0.is_zero());
    auto [in1, out1] = split_by_variety(lx + ly, Ideal::unit(r2));
    CHECK(in1.is_zero());
    CHECK(out1 == lx + ly);
    CHECK(purity_check(lx + ly, 1));
    CHECK_FALSE(purity_check(lx + Cycle::of(comp(r2, {"x", "y"})), 1));
    CHECK(support(lx * 2) == I(r2, {"x"}));
    CHECK(support(Cycle(r2)).is_unit());
    auto r5 = ring({"u", "v", "w", "x", "y"});
    Cycle whole = Cycle::of(PrimeComponent(Ideal(r5), 5));
    CHECK(intersect_hypersurface(whole, P(r5, "2*y"), rng) == Cycle::of(comp(r5, {"y"})));
    Cycle t = intersect_hypersurface(Cycle::of(comp(r5, {"y"})), P(r5, "-3*x^2-2*x*(u^2+v^2+w^2)"), rng);
    CHECK(t == Cycle::of(comp(r5, {"3*x+2*(u^2+v^2+w^2)", "y"})) + Cycle::of(comp(r5, {"x", "y"})));
    // C . V(f) is additive
    Cycle a = lx + ly * 3;
    Polynomial f = P(r2, "x+y^2-1");
    CHECK(intersect_hypersurface(a, f, rng) ==
          intersect_hypersurface(lx, f, rng) + intersect_hypersurface(ly, f, rng) * 3);
}
