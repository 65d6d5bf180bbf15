#include <doctest.h>

#include "csf/canonical.hpp"
#include "csf/dnc.hpp"
#include "csf/oracle.hpp"
#include "support.hpp"

using namespace csf;

TEST_SUITE("dnc")
{
    TEST_CASE("worked expansions")
    {
        CHECK(star_expand(fixture::tree("dnc_example")) == fixture::expansion("dnc_example"));
        CHECK(star_expand(fixture::tree("spider")) == fixture::expansion("spider"));
        CHECK(star_expand(fixture::tree("adjacency10")) == fixture::expansion("adjacency10"));
        CHECK(star_expand(fixture::tree("diam4_17")) == fixture::expansion("diam4_17"));
        CHECK(fixture::expansion("diam4_17").size() == 36);
        CHECK(fixture::expansion("adjacency10").size() == 15);
    }

    TEST_CASE("star forests are basis elements")
    {
        const Forest f = Forest::disjoint_union(
            Forest::disjoint_union(Forest::star(9), Forest::star(2)), Forest(1));
        CHECK(star_expand(f) == parse_text("st(9,2,1)"));
        CHECK(star_expand(Forest(1)) == parse_text("st(1)"));
    }

    TEST_CASE("cycles are rejected at construction")
    {
        CHECK_THROWS_AS(Forest(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
    }

    TEST_CASE("edge selection is canonical")
    {
        const Forest t = fixture::tree("dnc_example");
        const Edge e = select_internal_edge(t);
        CHECK(is_internal_edge(t, e));
        CHECK_THROWS(select_internal_edge(Forest::star(4)));
    }

    TEST_CASE("expansion does not depend on the edge order")
    {
        auto first = [](const Forest&, std::span<const Edge> e) { return e.front(); };
        auto last = [](const Forest&, std::span<const Edge> e) { return e.back(); };
        for (int n = 1; n <= 8; ++n) {
            for (const auto& t : enumerate_trees(n)) {
                const SymFunc f = star_expand(t);
                CHECK(star_expand_with(t, first) == f);
                CHECK(star_expand_with(t, last) == f);
            }
        }
    }

    TEST_CASE("one DNC step")
    {
        const Forest t = fixture::tree("dnc_example");
        const SymFunc f = star_expand(t);
        for (const Edge& e : internal_edges(t)) {
            CHECK(star_expand(delete_edge(t, e)) - star_expand(dot_contract(t, e)) +
                      star_expand(leaf_contract(t, e).forest) ==
                  f);
        }
        // leaf edges are neutral
        const Edge leaf{1, 2};
        CHECK(star_expand(leaf_contract(t, leaf).forest) == f);
        CHECK(star_expand(delete_edge(t, leaf)) == star_expand(dot_contract(t, leaf)));
    }

    TEST_CASE("trace of the 7-vertex example")
    {
        const auto [f, trace] = star_expand_traced(fixture::tree("dnc_example"));
        CHECK(f == fixture::expansion("dnc_example"));
        const auto stats = trace.shape_stats();
        REQUIRE(stats.count(P({6, 1})));
        CHECK(stats.at(P({6, 1})).paths == 2);
        CHECK(stats.at(P({6, 1})).dot_counts == std::set<int>{1});
        CHECK(stats.at(P({7})).paths == 1);
        CHECK(stats.at(P({7})).dot_counts == std::set<int>{0});
        CHECK(trace.expansion_from_paths() == f);
        CHECK(trace.leaves().size() == 7);   // 2 + 1 + one path for each other term

        const std::string dot = trace.to_dot();
        CHECK(dot.rfind("digraph", 0) == 0);
        CHECK(dot.find("->") != std::string::npos);
    }

    TEST_CASE("hook coefficients")
    {
        const Forest t = fixture::tree("dnc_example");
        CHECK(hook_coefficient_predicted(t, 1) == -2);
        CHECK(hook_coefficient_predicted(t, 0) == 1);
        CHECK(hook_coefficient_predicted(fixture::tree("spider"), 1) == -3);
        CHECK(fixture::expansion("spider").coefficient(P({6, 1})) == -3);
        for (const auto& tree : enumerate_trees(8))
            CHECK(hook_coefficient_predicted(tree, 0) == 1);
    }

    TEST_CASE("memo cache")
    {
        StarExpander x;
        const SymFunc a = x.expand(fixture::tree("diam4_17"));
        CHECK(x.cache_size() > 0);
        x.clear();
        CHECK(x.cache_size() == 0);
        CHECK(x.expand(fixture::tree("diam4_17")) == a);
    }
}
