// Acceptance checks AC1..AC9. One line per criterion; exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <string>

#include "csf/analysis.hpp"
#include "csf/canonical.hpp"
#include "csf/dnc.hpp"
#include "csf/graph_io.hpp"
#include "csf/harness.hpp"
#include "csf/reconstruct.hpp"

using namespace csf;

namespace {

// Pinned parameters.
constexpr std::uint64_t seed = 20240601;
constexpr int ac2_max_n = 9;
constexpr std::size_t ac2_trees = 95;
constexpr int ac3_max_n = 10;
constexpr int ac4_max_n = 10;
constexpr int ac5_max_n = 12;
constexpr int ac6_max_n = 13;
constexpr int ac7_max_n = 12;
constexpr int ac8_max_n = 8;
constexpr int ac8_random = 500;
constexpr int ac9_max_n = 8;

// Wall-clock budgets in seconds.
constexpr double ac1_budget = 1;
constexpr double ac2_budget = 30;
constexpr double ac3_budget = 60;
constexpr double ac6_budget = 300;
constexpr double ac7_budget = 600;
constexpr double no_budget = 1e9;

std::string read_fixture(const std::string& name)
{
    std::ifstream in(std::string(CSF_FIXTURE_DIR) + "/" + name);
    return {std::istreambuf_iterator<char>(in), {}};
}

Forest fixture_tree(const std::string& name)
{
    return parse_edge_list(read_fixture(name + ".edges"));
}

SymFunc fixture_csf(const std::string& name)
{
    return parse_text(read_fixture(name + ".st"));
}

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failed = 0;

void criterion(const char* id, const char* title, double budget,
               const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < budget;
    const bool ok = out.ok && in_time;
    failed += !ok;
    std::string timing = std::to_string(secs);
    timing = timing.substr(0, timing.find('.') + 3) + " s";
    if (budget < no_budget)
        timing += " (budget " + std::to_string(static_cast<int>(budget)) + " s" +
                  (in_time ? ")" : ", EXCEEDED)");
    std::printf("%s %s  %s: %s [%s]\n", id, ok ? "PASS" : "FAIL", title, out.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
}

Outcome from_report(const VerificationReport& r, const std::string& extra = "")
{
    std::string detail = std::to_string(r.trees_checked) + " trees, n " +
                         std::to_string(r.min_n) + ".." + std::to_string(r.max_n) + ", " +
                         std::to_string(r.failures.size()) + " failures" + extra;
    if (!r.failures.empty())
        detail += "; first: " + r.failures.front().tree + " " + r.failures.front().property;
    return {r.passed(), detail};
}

}  // namespace

int main()
{
    criterion("AC1", "worked fixtures", ac1_budget, [] {
        struct Case {
            const char* name;
            std::size_t terms;
        };
        const Case cases[] = {{"dnc_example", 6}, {"spider", 9}, {"adjacency10", 15},
                              {"diam4_17", 36}};
        int exact = 0;
        std::string sizes;
        for (const auto& c : cases) {
            const SymFunc want = fixture_csf(c.name);
            const SymFunc got = star_expand(fixture_tree(c.name));
            exact += got == want && want.size() == c.terms;
            sizes += (sizes.empty() ? "" : ",") + std::to_string(got.size());
        }
        const auto spider_lead = leading_partition(fixture_csf("spider"));
        const bool lead_ok = spider_lead.first == Partition::from_multiset({2, 2, 2, 1}) &&
                             spider_lead.second == -2;
        return Outcome{exact == 4 && lead_ok, std::to_string(exact) + "/4 exact, terms " + sizes};
    });

    criterion("AC2", "oracle equivalence", ac2_budget, [] {
        const auto r = run_suite("oracle", ac2_max_n, seed);
        auto out = from_report(r);
        out.ok = out.ok && r.trees_checked == ac2_trees;
        return out;
    });

    criterion("AC3", "leading term", ac3_budget,
              [] { return from_report(run_suite("lead", ac3_max_n, seed)); });

    criterion("AC4", "hook coefficients", no_budget,
              [] { return from_report(run_suite("hooks", ac4_max_n, seed)); });

    criterion("AC5", "adjacencies and internal orders", no_budget, [] {
        std::size_t in_scope = 0;
        for (int n = 1; n <= ac5_max_n; ++n)
            for (const auto& t : enumerate_trees(n)) {
                const int d = diameter(t);
                in_scope += (d == 4 || d == 5) && deep_vertices(t).empty();
            }
        const auto r = run_suite("adjacency", ac5_max_n, seed);
        auto out = from_report(r, ", " + std::to_string(in_scope) + " of diameter 4-5 without deep vertices");
        out.ok = out.ok && in_scope > 0;
        return out;
    });

    criterion("AC6", "reconstruction round trip", ac6_budget, [] {
        const auto r = run_suite("reconstruct", ac6_max_n, seed);
        std::size_t in_scope = 0;
        for (int n = 1; n <= ac6_max_n; ++n)
            for (const auto& t : enumerate_trees(n))
                in_scope += diameter(t) <= 5;

        const auto a = reconstruct(fixture_csf("diam4_17"));
        const bool ok17 = a.verified && is_isomorphic(a.tree, fixture_tree("diam4_17"));
        const Forest t36 = fixture_tree("distinct36");
        const SymFunc f36 = star_expand(t36);
        bool table = leading_partition(f36).first ==
                     Partition::from_multiset({9, 7, 6, 5, 4, 3, 2});
        for (auto mu : {"(16,6,5,4,3,2)", "(15,7,5,4,3,2)", "(11,9,7,4,3,2)", "(10,9,7,5,3,2)",
                        "(9,7,7,6,5,2)", "(9,7,6,6,5,3)"})
            table = table && f36.coefficient(Partition::parse(mu)) == 1;
        table = table && adjacency_multisets(f36).size() == 6;
        const auto b = reconstruct(f36);
        const bool ok36 = table && b.verified && is_isomorphic(b.tree, t36);

        auto out = from_report(r, ", " + std::to_string(in_scope) + " of diameter <= 5; 17-vertex " +
                                      (ok17 ? "ok" : "MISMATCH") + ", 36-vertex " +
                                      (ok36 ? "ok" : "MISMATCH"));
        out.ok = out.ok && ok17 && ok36;
        return out;
    });

    criterion("AC7", "conjecture census", ac7_budget, [] {
        const auto c = conjecture_census(ac7_max_n);
        return Outcome{c.collisions.empty(),
                       std::to_string(c.total_trees) + " trees, n <= " + std::to_string(ac7_max_n) +
                           ", " + std::to_string(c.collisions.size()) + " collisions"};
    });

    criterion("AC8", "edge order and DNC step", no_budget, [] {
        SuiteOptions opt;
        opt.random_trees = ac8_random;
        return from_report(run_suite("edge-order", ac8_max_n, seed, opt),
                           ", incl. " + std::to_string(ac8_random) + " random (seed " +
                               std::to_string(seed) + ")");
    });

    criterion("AC9", "trace consistency", no_budget,
              [] { return from_report(run_suite("trace", ac9_max_n, seed)); });

    std::printf("%d of 9 criteria failed\n", failed);
    return failed;
}
