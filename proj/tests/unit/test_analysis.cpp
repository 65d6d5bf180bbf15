#include <doctest.h>

#include "csf/analysis.hpp"
#include "csf/canonical.hpp"
#include "csf/dnc.hpp"
#include "support.hpp"

using namespace csf;

namespace {

std::vector<std::pair<std::vector<int>, int>> pairs_of(const SymFunc& f)
{
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& p : adjacency_multisets(f))
        out.emplace_back(p.multiset, static_cast<int>(p.coeff));
    return out;
}

}  // namespace

TEST_SUITE("analysis")
{
    TEST_CASE("leading partition")
    {
        CHECK(leading_partition(fixture::expansion("dnc_example")) ==
              std::pair<Partition, Integer>{P({4, 2, 1}), -1});
        CHECK(leading_partition(fixture::expansion("spider")) ==
              std::pair<Partition, Integer>{P({2, 2, 2, 1}), -2});
        CHECK(leading_partition(parse_text("st(6)")) == std::pair<Partition, Integer>{P({6}), 1});
        CHECK_THROWS(leading_partition(SymFunc(Basis::star, 3)));
        CHECK_THROWS(leading_partition(parse_text("p(2)")));
    }

    TEST_CASE("predicted leading term")
    {
        CHECK(predicted_leading(fixture::tree("dnc_example")) ==
              std::pair<Partition, Integer>{P({4, 2, 1}), -1});
        CHECK(predicted_leading(fixture::tree("spider")) ==
              std::pair<Partition, Integer>{P({2, 2, 2, 1}), -2});
        const Forest stars = Forest::disjoint_union(Forest::star(3), Forest::star(2));
        CHECK(predicted_leading(stars) == std::pair<Partition, Integer>{P({3, 2}), 1});
    }

    TEST_CASE("adjacency multisets")
    {
        using V = std::vector<std::pair<std::vector<int>, int>>;
        CHECK(pairs_of(fixture::expansion("dnc_example")) == V{{{2, 1}, 1}, {{4, 1}, 1}});
        CHECK(pairs_of(fixture::expansion("adjacency10")) == V{{{3, 2}, 2}, {{3, 3}, 1}});
        CHECK(pairs_of(parse_text("st(5)")).empty());
        CHECK(extracted_adjacencies(fixture::expansion("adjacency10")) ==
              std::vector<std::pair<int, int>>{{3, 2}, {3, 2}, {3, 3}});
        CHECK(structural_adjacencies(fixture::tree("adjacency10")) ==
              extracted_adjacencies(fixture::expansion("adjacency10")));
    }

    TEST_CASE("N(p)")
    {
        const SymFunc f = fixture::expansion("diam4_17");
        CHECK(n_of_p(f, 4) == 4);
        CHECK(n_of_p(f, 5) == 1);
        CHECK(n_of_p(f, 3) == 2);
        CHECK(n_of_p(parse_text("st(7)"), 7) == 0);
        CHECK_THROWS(n_of_p(f, 6));
    }

    TEST_CASE("internal component orders")
    {
        CHECK(internal_component_orders(fixture::expansion("diam4_17")) == std::vector<int>{4});
        // extended bi-star: only the deep vertex's singleton
        CHECK(internal_component_orders(fixture::expansion("dnc_example")) == std::vector<int>{1});
        const Forest bistar(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
        CHECK(internal_component_orders(star_expand(bistar)).empty());
        CHECK(structural_internal_orders(bistar).empty());
        CHECK(structural_internal_orders(fixture::tree("diam4_17")) == std::vector<int>{4});
    }

    TEST_CASE("internal component orders on the figure tree")
    {
        const Forest t = fixture::tree("internal_subgraph");
        REQUIRE(deep_vertices(t).empty());
        auto got = internal_component_orders(star_expand(t));
        CHECK(got == structural_internal_orders(t));
        CHECK(got == std::vector<int>{4, 3, 2});
    }

    TEST_CASE("hook check")
    {
        for (int n = 1; n <= 8; ++n)
            for (const auto& t : enumerate_trees(n))
                CHECK(hook_check(star_expand(t), t));
        CHECK_FALSE(hook_check(fixture::expansion("spider"), fixture::tree("dnc_example")));
    }

    TEST_CASE("report json")
    {
        const auto report = analyze(fixture::expansion("adjacency10"));
        CHECK(report.within_guarantee);
        const auto j = to_json(report);
        CHECK(j["leading"] == nlohmann::json::array({3, 3, 2, 2}));
        CHECK(j["leading_coeff"] == "1");
        CHECK(j["pairs"].size() == 2);
        CHECK(j["pairs"][0]["E"] == nlohmann::json::array({3, 2}));
        CHECK(j["pairs"][0]["coeff"] == "2");
        CHECK(j["N"]["3"] == "4");
        CHECK(j["N"]["2"] == "2");
        CHECK_FALSE(analyze(fixture::expansion("spider")).within_guarantee);
    }

    TEST_CASE("deep vertex neighbours")
    {
        CHECK(deep_vertex_neighbor_orders(fixture::tree("spider")) == std::vector<int>{2, 2, 2});
        CHECK_THROWS(deep_vertex_neighbor_orders(Forest::star(4)));
    }
}
