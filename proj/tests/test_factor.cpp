#include <doctest.h>

#include <algorithm>

#include "gapvogel/factor.hpp"
#include "gapvogel/upoly.hpp"
#include "test_util.hpp"

using namespace testutil;

namespace {

std::vector<std::string> factor_strings(const Polynomial& p) {
    std::vector<std::string> out;
    for (const Factor& f : factor(p).factors)
        out.push_back(f.p.to_string() + "^" + std::to_string(f.multiplicity));
    return out;
}

}  // namespace

TEST_CASE("univariate factorization over Z") {
    using upoly::ZPoly;
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    auto f = upoly::factor(ZPoly{-1, 0, 0, 0, 1});
    CHECK(f.size() == 3);
    // x^4 + 1 is irreducible over Q but splits mod every prime
    auto g = upoly::factor(ZPoly{1, 0, 0, 0, 1});
    CHECK(g.size() == 1);
    // (2x+3)^2 (x^2-2)
    ZPoly a{3, 2}, b{-2, 0, 1};
    auto h = upoly::factor(upoly::mul(upoly::mul(a, a), b));
    REQUIRE(h.size() == 2);
    CHECK(h[0].first == a);
    CHECK(h[0].second == 2);
    CHECK(h[1].second == 1);
}

TEST_CASE("univariate factorization recovers random products") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        upoly::ZPoly prod{1};
        int nf = 1 + static_cast<int>(gen() % 4);
        for (int k = 0; k < nf; ++k) {
            int d = 1 + static_cast<int>(gen() % 4);
            upoly::ZPoly q(d + 1);
            for (auto& c : q) c = static_cast<long>(gen() % 11) - 5;
            q[d] = 1 + static_cast<long>(gen() % 3);
            prod = upoly::mul(prod, q);
        }
        upoly::ZPoly back{1};
        for (auto& [f, e] : upoly::factor(prod))
            for (unsigned k = 0; k < e; ++k) back = upoly::mul(back, f);
        CHECK(upoly::primitive(back) == upoly::primitive(prod));
    }
}

TEST_CASE("multivariate factorization") {
    auto r = ring({"x", "y", "u", "v", "w"});
    auto fs = factor_strings(P(r, "x^2-1"));
    std::sort(fs.begin(), fs.end());
    CHECK(fs == std::vector<std::string>{"x+1^1", "x-1^1"});
    CHECK(is_irreducible(P(r, "u^2+v^2+w^2")));
    CHECK(is_irreducible(P(r, "x^2+y^2")));
    CHECK(is_irreducible(P(r, "3*x+2*u^2")));
    CHECK_FALSE(is_irreducible(P(r, "x*y")));
    CHECK_FALSE(is_irreducible(P(r, "7")));
    auto f = factor(P(r, "(x+y)^2*(x-y)"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.expand(r) == P(r, "(x+y)^2*(x-y)"));
    auto g = factor(P(r, "-2*x^3*y"));
    CHECK(g.unit == -2);
    CHECK(g.expand(r) == P(r, "-2*x^3*y"));
    auto h = factor(P(r, "1/2*(x^2-y^2)*(u*v-w^2)"));
    CHECK(h.factors.size() == 3);
    CHECK(h.expand(r) == P(r, "1/2*(x^2-y^2)*(u*v-w^2)"));
}

TEST_CASE("multivariate factorization recovers random products") {
    auto r = ring({"x", "y", "z"});
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = random_poly(r, gen, 2, 3);
        Polynomial b = random_poly(r, gen, 2, 3);
        if (a.is_constant() || b.is_constant()) continue;
        Polynomial prod = a * b;
        Factorization f = factor(prod);
        CHECK(f.expand(r) == prod);
        for (const Factor& fac : f.factors) CHECK(is_irreducible(fac.p));
        // every nonconstant factor of a divides the product of the found factors' powers
        std::size_t count = 0;
        for (const Factor& fac : f.factors) count += fac.multiplicity;
        CHECK(count >= 2);
    }
}
