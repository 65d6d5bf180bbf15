#include <doctest.h>

#include <sstream>

#include "csf/partition.hpp"
#include "csf/scalar.hpp"
#include "support.hpp"

using namespace csf;

TEST_SUITE("partition")
{
    TEST_CASE("from_multiset sorts decreasingly")
    {
        CHECK(Partition::from_multiset({1, 4, 2}).to_string() == "(4,2,1)");
        CHECK(Partition::from_multiset({}).empty());
        CHECK(Partition::from_multiset({3, 3, 2, 2}) == P({3, 3, 2, 2}));
        CHECK(P({5, 4, 3, 3, 2}).degree() == 17);
        CHECK_THROWS_AS(Partition::from_multiset({2, 0}), std::invalid_argument);
        CHECK_THROWS_AS(Partition::from_multiset({-1}), std::invalid_argument);
    }

    TEST_CASE("parse")
    {
        CHECK(Partition::parse("(4,2,1)") == P({4, 2, 1}));
        CHECK(Partition::parse("[1, 2, 4]") == P({4, 2, 1}));
        CHECK(Partition::parse("()").empty());
        CHECK_THROWS(Partition::parse("(4,x)"));
    }

    TEST_CASE("lexicographic order")
    {
        CHECK(lex_compare(P({4, 2, 1}), P({4, 3})) == std::strong_ordering::less);
        CHECK(lex_compare(P({7}), P({7})) == std::strong_ordering::equal);
        CHECK(lex_compare(P({2, 2, 2, 1}), P({3, 2, 1, 1})) == std::strong_ordering::less);
        CHECK_THROWS_AS(lex_compare(P({3}), P({2, 2})), std::invalid_argument);
    }

    TEST_CASE("multiset difference")
    {
        CHECK(multiset_difference(P({4, 2, 1}), P({4, 3})) == std::vector<int>{2, 1});
        CHECK(multiset_difference(P({4, 2, 1}), P({4, 2, 1})).empty());
        CHECK(multiset_difference(P({3, 3, 2, 2}), P({6, 2, 2})) == std::vector<int>{3, 3});
    }

    TEST_CASE("multiplicity")
    {
        const auto lead = P({5, 4, 3, 3, 2});
        CHECK(lead.multiplicity(3) == 2);
        CHECK(lead.multiplicity(4) == 1);
        CHECK(P({7}).multiplicity(1) == 0);
    }

    TEST_CASE("union and removal")
    {
        CHECK(partition_union(P({4, 2}), P({1})) == P({4, 2, 1}));
        CHECK(partition_union(P({}), P({3})) == P({3}));
        CHECK(partition_union(P({3, 2}), P({3, 2})) == P({3, 3, 2, 2}));
        CHECK(remove_part(P({3, 3, 2}), 3) == P({3, 2}));
        CHECK_THROWS(remove_part(P({3, 2}), 4));
    }

    TEST_CASE("partitions_of counts and order")
    {
        // p(n) for n = 0..10
        const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
        for (int n = 0; n <= 10; ++n) {
            const auto all = partitions_of(n);
            CHECK(all.size() == static_cast<std::size_t>(expected[n]));
            CHECK(std::is_sorted(all.begin(), all.end()));
        }
        CHECK(partitions_of(4).front() == P({1, 1, 1, 1}));
        CHECK(partitions_of(4).back() == P({4}));
    }

    TEST_CASE("json and hashing")
    {
        nlohmann::json j = P({3, 1});
        CHECK(j.dump() == "[3,1]");
        CHECK(j.get<Partition>() == P({3, 1}));
        CHECK(nlohmann::json("(2,2)").get<Partition>() == P({2, 2}));
        CHECK(std::hash<Partition>{}(P({2, 1})) == std::hash<Partition>{}(P({1, 2})));
        std::ostringstream os;
        os << P({2, 1, 1});
        CHECK(os.str() == "(2,1,1)");
    }
}

TEST_SUITE("scalar")
{
    TEST_CASE("rationals")
    {
        CHECK(to_decimal(parse_rational("-7/4")) == "-7/4");
        CHECK(to_decimal(parse_rational("12")) == "12");
        CHECK(to_integer(parse_rational("6/2")) == 3);
        CHECK_THROWS_AS(to_integer(parse_rational("1/2")), std::domain_error);
        CHECK_THROWS(parse_rational("abc"));
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(3, 5) == 0);
        CHECK(binomial(60, 30) == Integer("118264581564861424"));
    }
}
