#include "csf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "csf/analysis.hpp"
#include "csf/canonical.hpp"
#include "csf/dnc.hpp"
#include "csf/oracle.hpp"
#include "csf/reconstruct.hpp"

namespace csf {

int enumeration_cap(int fallback)
{
    if (const char* env = std::getenv("CSF_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("CSF_MAX_N is not an integer: ") + env);
        }
    }
    return fallback;
}

namespace {

using Check = std::function<void(const Forest&, std::vector<Failure>&)>;

template <class T>
std::string str(const T& value)
{
    std::ostringstream os;
    os << value;
    return os.str();
}

std::string pairs_str(const std::vector<std::pair<int, int>>& pairs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < pairs.size(); ++i)
        out += (i ? " {" : "{") + std::to_string(pairs[i].first) + "," +
               std::to_string(pairs[i].second) + "}";
    return out + "]";
}

std::string ints_str(const std::vector<int>& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + "]";
}

void fail(std::vector<Failure>& out, const Forest& t, std::string property, std::string expected,
          std::string actual)
{
    out.push_back({describe(t), std::move(property), std::move(expected), std::move(actual)});
}

/// Runs `check` on every tree, spread over worker threads. Each thread has
/// its own star-expansion cache; failures are merged and sorted.
std::vector<Failure> for_each_tree(const std::vector<Forest>& trees, const Check& check,
                                   unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(trees.size(), 1));
    std::vector<Failure> all;
    std::mutex lock;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        std::vector<Failure> mine;
        for (std::size_t i = next++; i < trees.size(); i = next++) {
            try {
                check(trees[i], mine);
            } catch (const std::exception& e) {
                fail(mine, trees[i], "no exception", "-", e.what());
            }
        }
        std::lock_guard guard(lock);
        all.insert(all.end(), mine.begin(), mine.end());
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(work);
    }
    std::sort(all.begin(), all.end());
    return all;
}

// --- per-tree checks --------------------------------------------------------

void check_oracle(const Forest& t, std::vector<Failure>& out)
{
    const SymFunc expected = power_csf(t);
    const SymFunc actual = to_power(star_expand(t));
    if (actual != expected)
        fail(out, t, "to_power(star_expand) == subset expansion", to_text(expected),
             to_text(actual));
}

void check_lead(const Forest& t, std::vector<Failure>& out)
{
    const auto [lambda, c] = leading_partition(star_expand(t));
    const auto [want_lambda, want_c] = predicted_leading(t);
    if (lambda != want_lambda)
        fail(out, t, "leading partition == lambda_LC", want_lambda.to_string(),
             lambda.to_string());
    if (c != want_c)
        fail(out, t, "leading coefficient == (-1)^m prod(deg-1)", to_decimal(want_c),
             to_decimal(c));
}

void check_hooks(const Forest& t, std::vector<Failure>& out)
{
    const SymFunc f = star_expand(t);
    const int n = t.order();
    for (int m = 0; m <= n - 1; ++m) {
        std::vector<int> parts(m, 1);
        parts.push_back(n - m);
        const Partition hook = Partition::from_multiset(std::move(parts));
        const Rational want(hook_coefficient_predicted(t, m));
        if (f.coefficient(hook) != want)
            fail(out, t, "hook coefficient " + hook.to_string(), to_decimal(want),
                 to_decimal(f.coefficient(hook)));
    }
}

bool no_deep_vertices(const Forest& t)
{
    return deep_vertices(t).empty();
}

std::vector<int> extracted_internal_orders(const SymFunc& f)
{
    auto orders = internal_component_orders(f);
    std::erase(orders, 1);
    return orders;
}

void check_internal_orders(const Forest& t, const SymFunc& f, std::vector<Failure>& out)
{
    const auto want = structural_internal_orders(t);
    const auto got = extracted_internal_orders(f);
    if (got != want)
        fail(out, t, "{p : N(p) > m_p} == orders in internal subgraph", ints_str(want),
             ints_str(got));
}

void check_adjacency(const Forest& t, std::vector<Failure>& out)
{
    const int d = diameter(t);
    if ((d != 4 && d != 5) || !no_deep_vertices(t))
        return;
    const SymFunc f = star_expand(t);
    const auto want = structural_adjacencies(t);
    const auto got = extracted_adjacencies(f);
    if (got != want)
        fail(out, t, "adjacency multisets == structural adjacencies", pairs_str(want),
             pairs_str(got));
    check_internal_orders(t, f, out);
}

void check_internal(const Forest& t, std::vector<Failure>& out)
{
    if (!no_deep_vertices(t) || internal_edges(t).empty())
        return;
    check_internal_orders(t, star_expand(t), out);
}

void check_reconstruct(const Forest& t, std::vector<Failure>& out)
{
    if (diameter(t) > 5)
        return;
    try {
        const auto result = reconstruct(star_expand(t));
        if (!result.verified)
            fail(out, t, "reconstruction verified", "true", "false");
        if (!is_isomorphic(result.tree, t))
            fail(out, t, "reconstruction isomorphic to input", canonical_form(t),
                 canonical_form(result.tree));
    } catch (const ReconstructionError& e) {
        fail(out, t, "reconstruction succeeds", "a tree", e.what());
    }
}

void check_edge_order(const Forest& t, std::uint64_t seed, std::vector<Failure>& out)
{
    const SymFunc reference = star_expand(t);
    const std::string canon = canonical_form(t);
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(canon));

    const std::pair<const char*, EdgeChooser> choosers[] = {
        {"first internal edge", [](const Forest&, std::span<const Edge> e) { return e.front(); }},
        {"last internal edge", [](const Forest&, std::span<const Edge> e) { return e.back(); }},
        {"random internal edge",
         [&rng](const Forest&, std::span<const Edge> e) {
             return e[std::uniform_int_distribution<std::size_t>(0, e.size() - 1)(rng)];
         }},
    };
    for (const auto& [name, choose] : choosers) {
        const SymFunc got = star_expand_with(t, choose);
        if (got != reference)
            fail(out, t, std::string("edge order invariance (") + name + ")", to_text(reference),
                 to_text(got));
    }

    // Relabeling must not matter either.
    std::vector<Vertex> perm(t.order() + 1);
    for (int v = 0; v <= t.order(); ++v)
        perm[v] = v;
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    const SymFunc relabeled = star_expand_with(
        t.relabeled(perm), [](const Forest&, std::span<const Edge> e) { return e.front(); });
    if (relabeled != reference)
        fail(out, t, "relabeling invariance", to_text(reference), to_text(relabeled));

    for (const Edge& e : internal_edges(t)) {
        const SymFunc step = star_expand(delete_edge(t, e)) - star_expand(dot_contract(t, e)) +
                             star_expand(leaf_contract(t, e).forest);
        if (step != reference)
            fail(out, t, "DNC identity at edge " + str(e), to_text(reference), to_text(step));
    }
}

void check_trace(const Forest& t, std::vector<Failure>& out)
{
    const auto [f, trace] = star_expand_traced(t);
    const SymFunc reference = star_expand(t);
    if (f != reference)
        fail(out, t, "traced expansion == memoized expansion", to_text(reference), to_text(f));
    const auto stats = trace.shape_stats();
    for (const auto& [lambda, s] : stats) {
        if (s.dot_counts.size() != 1) {
            std::vector<int> counts(s.dot_counts.begin(), s.dot_counts.end());
            fail(out, t, "one dot count per shape " + lambda.to_string(), "single value",
                 ints_str(counts));
            continue;
        }
        const int m = *s.dot_counts.begin();
        const Integer predicted = (m % 2 ? -1 : 1) * Integer(s.paths);
        if (Rational(predicted) != reference.coefficient(lambda))
            fail(out, t, "(-1)^m |S_lambda| == c_lambda for " + lambda.to_string(),
                 to_decimal(reference.coefficient(lambda)), to_decimal(predicted));
    }
    for (const auto& [lambda, c] : reference.terms()) {
        if (!stats.count(lambda))
            fail(out, t, "every term has a path: " + lambda.to_string(), to_decimal(c), "0");
    }
}

std::vector<Forest> trees_up_to(int max_n)
{
    std::vector<Forest> out;
    for (int n = 1; n <= max_n; ++n) {
        const auto& level = enumerate_trees(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

VerificationReport run_one(const std::string& name, int max_n, std::uint64_t seed,
                           const SuiteOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = name;
    report.max_n = max_n;

    Check check;
    int random_default = 0;
    if (name == "oracle")
        check = check_oracle;
    else if (name == "lead")
        check = check_lead;
    else if (name == "hooks")
        check = check_hooks;
    else if (name == "adjacency")
        check = check_adjacency;
    else if (name == "internal")
        check = check_internal;
    else if (name == "reconstruct")
        check = check_reconstruct;
    else if (name == "edge-order") {
        check = [seed](const Forest& t, std::vector<Failure>& out) {
            check_edge_order(t, seed, out);
        };
        random_default = 500;
    } else if (name == "trace")
        check = check_trace;
    else
        throw std::invalid_argument("unknown suite: " + name);

    auto trees = trees_up_to(max_n);
    const int random = options.random_trees < 0 ? random_default : options.random_trees;
    if (random > 0) {
        if (max_n + 2 > enumeration_cap(max_n + 2))
            throw std::out_of_range("random trees would exceed CSF_MAX_N");
        std::mt19937_64 rng(seed);
        for (int i = 0; i < random; ++i)
            trees.push_back(random_tree(max_n + 1 + i % 2, rng));
        report.max_n = max_n + 2;
    }
    report.trees_checked = trees.size();
    report.failures = for_each_tree(trees, check, options.threads);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"oracle",      "lead",       "hooks",
                                                "adjacency",   "internal",   "reconstruct",
                                                "edge-order",  "trace",      "all"};
    return names;
}

VerificationReport run_suite(std::string_view name, int max_n, std::uint64_t seed,
                             const SuiteOptions& options)
{
    if (max_n < 1)
        throw std::invalid_argument("max_n must be at least 1");
    const int cap = enumeration_cap(16);
    if (max_n > cap)
        throw std::out_of_range("max_n = " + std::to_string(max_n) +
                                " exceeds the enumeration cap " + std::to_string(cap));
    if (name != "all")
        return run_one(std::string(name), max_n, seed, options);

    const auto start = std::chrono::steady_clock::now();
    VerificationReport total;
    total.suite = "all";
    total.max_n = max_n;
    for (const auto& suite : suite_names()) {
        if (suite == "all")
            continue;
        auto part = run_one(suite, max_n, seed, options);
        total.max_n = std::max(total.max_n, part.max_n);
        total.trees_checked += part.trees_checked;
        for (auto& f : part.failures) {
            f.property = suite + ": " + f.property;
            total.failures.push_back(std::move(f));
        }
    }
    std::sort(total.failures.begin(), total.failures.end());
    total.elapsed = std::chrono::steady_clock::now() - start;
    return total;
}

nlohmann::json to_json(const VerificationReport& report, bool with_elapsed)
{
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"tree", f.tree},
                            {"property", f.property},
                            {"expected", f.expected},
                            {"actual", f.actual}});
    nlohmann::json out{{"suite", report.suite},
                       {"n_range", {report.min_n, report.max_n}},
                       {"trees_checked", report.trees_checked},
                       {"passed", report.passed()},
                       {"failures", std::move(failures)}};
    if (with_elapsed)
        out["elapsed_seconds"] = report.elapsed.count();
    return out;
}

// --- census -----------------------------------------------------------------

namespace {

constexpr std::string_view store_format = "csf-census";

std::unordered_map<std::string, CensusRecord> load_store(const std::filesystem::path& path)
{
    std::unordered_map<std::string, CensusRecord> records;
    std::ifstream in(path);
    if (!in)
        return records;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " +
                                     e.what());
        }
        if (line_no == 1) {
            if (j.value("format", "") != store_format ||
                j.value("version", 0) != census_store_version)
                throw std::runtime_error(path.string() +
                                         ": not a census store of a supported version");
            continue;
        }
        CensusRecord r{j.at("canonical").get<std::string>(), j.at("n").get<int>(),
                       symfunc_from_json(j.at("expansion"))};
        records.emplace(r.canonical, std::move(r));
    }
    return records;
}

}  // namespace

CensusReport conjecture_census(int max_n, const std::optional<std::filesystem::path>& store)
{
    const int cap = enumeration_cap(12);
    if (max_n > cap)
        throw std::out_of_range("census max_n = " + std::to_string(max_n) +
                                " exceeds the configured bound " + std::to_string(cap));
    CensusReport report;
    report.max_n = max_n;

    std::unordered_map<std::string, CensusRecord> stored;
    std::ofstream append;
    if (store) {
        const bool fresh = !std::filesystem::exists(*store) || std::filesystem::file_size(*store) == 0;
        stored = load_store(*store);
        append.open(*store, std::ios::app);
        if (!append)
            throw std::runtime_error("cannot open census store " + store->string());
        if (fresh)
            append << nlohmann::json{{"format", store_format}, {"version", census_store_version}}
                          .dump()
                   << '\n';
    }

    StarExpander expander;
    for (int n = 1; n <= max_n; ++n) {
        // Keyed by the expansion text; equal CSFs give equal text.
        std::map<std::string, std::vector<std::string>> groups;
        std::map<std::string, SymFunc> by_text;
        const auto& trees = enumerate_trees(n);
        for (const Forest& t : trees) {
            const std::string canon = canonical_form(t);
            SymFunc f(Basis::star, n);
            if (auto it = stored.find(canon); it != stored.end()) {
                f = it->second.expansion;
                ++report.reused_records;
            } else {
                f = expander.expand(t);
                if (append) {
                    append << nlohmann::json{{"canonical", canon}, {"n", n}, {"expansion", f}}.dump()
                           << '\n';
                }
            }
            const std::string key = to_text(f);
            groups[key].push_back(canon);
            by_text.emplace(key, std::move(f));
        }
        expander.clear();
        report.trees_per_n[n] = trees.size();
        report.total_trees += trees.size();
        for (auto& [key, forms] : groups) {
            if (forms.size() < 2)
                continue;
            std::sort(forms.begin(), forms.end());
            report.collisions.push_back({n, std::move(forms), by_text.at(key)});
        }
    }
    return report;
}

nlohmann::json to_json(const CensusReport& report)
{
    nlohmann::json per_n = nlohmann::json::object();
    for (const auto& [n, count] : report.trees_per_n)
        per_n[std::to_string(n)] = count;
    nlohmann::json collisions = nlohmann::json::array();
    for (const auto& c : report.collisions)
        collisions.push_back(
            {{"n", c.n}, {"canonical_forms", c.canonical_forms}, {"expansion", to_text(c.expansion)}});
    return {{"max_n", report.max_n},
            {"trees_per_n", std::move(per_n)},
            {"total_trees", report.total_trees},
            {"collisions", std::move(collisions)}};
}

}  // namespace csf
