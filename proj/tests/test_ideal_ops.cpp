#include <doctest.h>

#include "gapvogel/ideal_ops.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

Ideal I(const RingPtr& r, const std::vector<std::string>& gens) { return Ideal(r, Ps(r, gens)); }

}  // namespace

TEST_CASE("gap sheaf examples") {
    auto r = ring({"x", "y"});
    CHECK(gap_sheaf(I(r, {"x^2*y"}), I(r, {"y"})) == I(r, {"x^2"}));
    CHECK(gap_sheaf(I(r, {"x"}), I(r, {"x"})).is_unit());
    auto b = ring({"x", "y", "w0", "w1"});
    CHECK(gap_sheaf(I(b, {"w0*y-w1*x"}), I(b, {"x", "y"})) == I(b, {"w0*y-w1*x"}));
    // only the radical of W matters
    CHECK(gap_sheaf(I(r, {"x^2", "x*y"}), I(r, {"x^3", "y^2"})) == gap_sheaf(I(r, {"x^2", "x*y"}), I(r, {"x", "y"})));
}

TEST_CASE("quotient and saturation") {
    auto r = ring({"x", "y"});
    CHECK(quotient(I(r, {"x*y"}), I(r, {"x"})) == I(r, {"y"}));
    CHECK(saturate(I(r, {"x^2", "x*y"}), I(r, {"x", "y"})) == I(r, {"x"}));
    Ideal J = I(r, {"x^3-y", "x*y^2"});
    CHECK(quotient(J, Ideal::unit(r)) == J);
    CHECK(saturate(J, Ideal::unit(r)) == J);
    CHECK(saturate(J, Ideal(r)).is_unit());
    // quotient by x^2 contains quotient by x
    Ideal q1 = quotient(J, I(r, {"x"}));
    Ideal q2 = quotient(J, I(r, {"x^2"}));
    CHECK(q2.contains(q1));
    CHECK(saturate(J, I(r, {"x"})).contains(q2));
}

TEST_CASE("intersection and product") {
    auto r = ring({"x", "y"});
    CHECK(intersect(I(r, {"x"}), I(r, {"y"})) == I(r, {"x*y"}));
    CHECK(intersect(I(r, {"x^2", "y"}), I(r, {"x", "y^2"})) == I(r, {"x^2", "x*y", "y^2"}));
    CHECK(ideal_product(I(r, {"x", "y"}), I(r, {"x", "y"})) == I(r, {"x^2", "x*y", "y^2"}));
    CHECK(ideal_sum(I(r, {"x"}), I(r, {"y"})) == I(r, {"x", "y"}));
}

TEST_CASE("radical membership and varieties") {
    auto r = ring({"x", "y"});
    CHECK(radical_member(P(r, "x"), I(r, {"x^2"})));
    CHECK_FALSE(radical_member(P(r, "y"), I(r, {"x^2"})));
    CHECK(radical_member(P(r, "x+y"), I(r, {"x^2", "y^2"})));
    CHECK(same_variety(I(r, {"x^2"}), I(r, {"x"})));
    CHECK_FALSE(same_variety(I(r, {"x"}), I(r, {"y"})));
    CHECK(same_variety(I(r, {"x*y", "x^2+y^3"}), I(r, {"x", "y"})));
    CHECK(variety_contained(I(r, {"x", "y"}), I(r, {"x*y"})));
    CHECK_FALSE(variety_contained(I(r, {"x*y"}), I(r, {"x", "y"})));
}

TEST_CASE("gap sheaf laws on random instances") {
    auto r = ring({"x", "y", "z"});
    std::mt19937_64 gen(3);
    for (int trial = 0; trial < 12; ++trial) {
        Ideal A(r, {random_poly(r, gen, 3, 3), random_poly(r, gen, 2, 2)});
        Ideal B(r, {random_poly(r, gen, 2, 2)});
        Ideal W(r, {random_poly(r, gen, 2, 2)});
        Ideal Z = W.with(random_poly(r, gen, 1, 2));
        Ideal Y(r, {random_poly(r, gen, 2, 2)});
        Ideal AW = gap_sheaf(A, W);
        CHECK(AW == gap_sheaf(gap_sheaf(A, Z), W));
        CHECK(gap_sheaf(A + B, W) == gap_sheaf(gap_sheaf(A, Z) + B, W));
        CHECK(gap_sheaf(A, intersect(W, Y)) == gap_sheaf(AW, Y));
        CHECK(gap_sheaf(AW, W) == AW);
        CHECK(AW.contains(A));
        Polynomial f = random_poly(r, gen, 2, 2), g = random_poly(r, gen, 2, 2);
        Ideal Wg = A.with(g);
        CHECK(gap_sheaf(A.with(f * g), Wg) == gap_sheaf(A.with(f), Wg));
    }
}

TEST_CASE("intersection of a union with a hypersurface away from W") {
    // (A meet B) + C minus W equals B + C minus W when V(A + C) lies in W
    auto r = ring({"x", "y"});
    Ideal A = I(r, {"x"}), B = I(r, {"y-x^2"}), C = I(r, {"y"}), W = I(r, {"x", "y"});
    CHECK(gap_sheaf(intersect(A, B) + C, W) == gap_sheaf(B + C, W));
}
