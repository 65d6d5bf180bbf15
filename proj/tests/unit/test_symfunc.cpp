#include <doctest.h>

#include <random>

#include "csf/canonical.hpp"
#include "csf/dnc.hpp"
#include "csf/oracle.hpp"
#include "csf/symfunc.hpp"
#include "support.hpp"

using namespace csf;

namespace {

SymFunc power(std::string_view text)
{
    return parse_text(text);
}

}  // namespace

TEST_SUITE("symfunc")
{
    TEST_CASE("star monomials in the power basis")
    {
        CHECK(star_monomial_to_power(1) == power("p(1)"));
        CHECK(star_monomial_to_power(2) == power("p(1,1) - p(2)"));
        CHECK(star_monomial_to_power(3) == power("p(1,1,1) - 2 p(2,1) + p(3)"));
        CHECK(star_monomial_to_power(3) == power_csf(Forest::path(3)));
        CHECK(star_monomial_to_power(7) == power_csf(Forest::star(7)));
    }

    TEST_CASE("to_power")
    {
        CHECK(to_power(parse_text("st(1,1)")) == power("p(1,1)"));
        CHECK(to_power(fixture::expansion("dnc_example")) ==
              power_csf(fixture::tree("dnc_example")));
        const SymFunc sum = to_power(parse_text("st(2,2) - st(3,1) + st(4)"));
        CHECK(sum == power_csf(Forest::path(4)));
    }

    TEST_CASE("to_star")
    {
        CHECK(to_star(power("p(1,1,1) - 2 p(2,1) + p(3)")) == parse_text("st(3)"));
        CHECK(to_star(power_csf(Forest::path(4))) == parse_text("st(2,2) - st(3,1) + st(4)"));
    }

    TEST_CASE("basis change round trips on random integer vectors")
    {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> coeff(-20, 20);
        for (int n = 1; n <= 10; ++n) {
            for (int rep = 0; rep < 5; ++rep) {
                SymFunc f(Basis::star, n);
                for (const auto& lambda : partitions_of(n))
                    if (rng() % 3 == 0)
                        f.add_term(lambda, coeff(rng));
                CHECK(to_star(to_power(f)) == f);
                SymFunc g(Basis::power, n);
                for (const auto& lambda : partitions_of(n))
                    if (rng() % 3 == 0)
                        g.add_term(lambda, coeff(rng));
                CHECK(to_power(to_star(g)) == g);
            }
        }
    }

    TEST_CASE("multiplication")
    {
        CHECK(parse_text("st(2)") * parse_text("st(2)") == parse_text("st(2,2)"));
        const SymFunc f = fixture::expansion("spider");
        CHECK(f * SymFunc::unit(Basis::star) == f);
        CHECK_THROWS(f * SymFunc::unit(Basis::power));
        // CSF of a disjoint union is the product.
        const Forest two = Forest::disjoint_union(Forest::star(2), Forest::star(2));
        CHECK(star_expand(two) == star_expand(Forest::star(2)) * star_expand(Forest::star(2)));
        CHECK(to_power(star_expand(two)) == power_csf(two));
    }

    TEST_CASE("arithmetic")
    {
        const SymFunc f = fixture::expansion("dnc_example");
        CHECK((f + scale(f, -1)).is_zero());
        CHECK(f.coefficient(P({6, 1})) == -2);
        CHECK(f.coefficient(P({3, 2, 2})) == 0);
        CHECK(f.size() == 6);
        CHECK_THROWS(f + parse_text("st(3)"));
        CHECK_THROWS(f + to_power(f));
        SymFunc g(Basis::star, 3);
        CHECK_THROWS(g.add_term(P({2, 1, 1}), 1));
        g.add_term(P({2, 1}), 1);
        g.add_term(P({2, 1}), -1);
        CHECK(g.is_zero());
    }

    TEST_CASE("evaluation at ones")
    {
        const Forest p4 = Forest::path(4);
        CHECK(evaluate_at_ones(star_expand(p4), 3) == 24);
        CHECK(evaluate_at_ones(star_expand(Forest::star(3)), 2) == 2);
        for (int n = 2; n <= 8; ++n) {
            for (const auto& t : enumerate_trees(n)) {
                const SymFunc f = star_expand(t);
                CHECK(evaluate_at_ones(f, 1) == 0);
                for (int k = 2; k <= 4; ++k) {
                    Integer want = k;
                    for (int i = 1; i < n; ++i)
                        want *= k - 1;
                    CHECK(evaluate_at_ones(f, k) == want);
                    CHECK(evaluate_at_ones(to_power(f), k) == want);
                }
            }
        }
    }

    TEST_CASE("text form")
    {
        const SymFunc f = fixture::expansion("dnc_example");
        CHECK(to_text(f) == "-st(4,2,1) + st(4,3) + st(5,1,1) + st(5,2) - 2 st(6,1) + st(7)");
        CHECK(parse_text(to_text(f)) == f);
        CHECK(parse_text("1/2 p(2) - 3*p(1,1)").coefficient(P({2})) == Rational(1, 2));
        CHECK(to_text(SymFunc(Basis::star, 4)) == "0");
        CHECK(parse_text("0", 4).is_zero());
        CHECK_THROWS(parse_text("st(2) + p(1,1)"));
        CHECK_THROWS(parse_text("st(2) + st(3)"));
        CHECK_THROWS(parse_text("2 q(2)"));
    }

    TEST_CASE("json form")
    {
        const SymFunc f = fixture::expansion("spider");
        const nlohmann::json j = f;
        CHECK(j["basis"] == "star");
        CHECK(j["n"] == 7);
        CHECK(j["terms"].size() == 9);
        CHECK(symfunc_from_json(j) == f);
        CHECK_THROWS(symfunc_from_json(nlohmann::json{{"basis", "star"}}));
    }
}

TEST_SUITE("oracle")
{
    TEST_CASE("subset expansion")
    {
        CHECK(power_csf(Forest::path(3)) == power("p(1,1,1) - 2 p(2,1) + p(3)"));
        CHECK(power_csf(Forest(1)) == power("p(1)"));
        const Edge triangle[] = {{1, 2}, {2, 3}, {1, 3}};
        CHECK(power_csf(3, triangle) == power("p(1,1,1) - 3 p(2,1) + 2 p(3)"));
        CHECK(power_csf(fixture::tree("dnc_example")) ==
              to_power(star_expand(fixture::tree("dnc_example"))));
    }

    TEST_CASE("coloring counts")
    {
        CHECK(chromatic_count(Forest::star(3), 2) == 2);
        CHECK(chromatic_count(Forest::path(4), 3) == 24);
        CHECK(chromatic_count(Forest::path(5), 1) == 0);
        CHECK(chromatic_count(Forest(3), 2) == 8);
        // brute force over all colorings
        const Forest t = fixture::tree("spider");
        for (int k = 1; k <= 3; ++k) {
            int count = 0;
            std::vector<int> color(8, 0);
            int total = 1;
            for (int i = 0; i < 7; ++i)
                total *= k;
            for (int code = 0; code < total; ++code) {
                int c = code;
                for (int v = 1; v <= 7; ++v, c /= k)
                    color[v] = c % k;
                bool proper = true;
                for (const Edge& e : t.edges())
                    proper = proper && color[e.u] != color[e.v];
                count += proper;
            }
            CHECK(chromatic_count(t, k) == count);
        }
    }
}
