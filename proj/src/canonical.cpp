#include "csf/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace csf {

namespace {

/// Centers of the tree spanned by `members` (one or two vertices).
std::vector<Vertex> tree_centers(const Forest& f, const std::vector<Vertex>& members)
{
    if (members.size() <= 2)
        return members;
    std::vector<int> remaining_degree(f.order() + 1, 0);
    std::vector<Vertex> layer;
    for (Vertex v : members) {
        remaining_degree[v] = f.degree(v);
        if (remaining_degree[v] <= 1)
            layer.push_back(v);
    }
    std::size_t left = members.size();
    while (left > 2) {
        left -= layer.size();
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : f.neighbors(v)) {
                if (--remaining_degree[w] == 1)
                    next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

struct RootedCodes {
    std::vector<std::string> code;   // per vertex, relative to the chosen root
};

const std::string& encode_rooted(const Forest& f, Vertex v, Vertex parent, RootedCodes& rc)
{
    std::vector<const std::string*> kids;
    for (Vertex w : f.neighbors(v)) {
        if (w != parent)
            kids.push_back(&encode_rooted(f, w, v, rc));
    }
    std::sort(kids.begin(), kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& out = rc.code[v];
    out.clear();
    out.push_back('(');
    for (const std::string* k : kids)
        out += *k;
    out.push_back(')');
    return out;
}

struct ComponentCode {
    std::string code;
    Vertex root = 0;
    RootedCodes codes;
};

ComponentCode encode_component(const Forest& f, const std::vector<Vertex>& members)
{
    const auto centers = tree_centers(f, members);
    ComponentCode best;
    for (Vertex c : centers) {
        ComponentCode candidate;
        candidate.codes.code.resize(f.order() + 1);
        candidate.root = c;
        candidate.code = encode_rooted(f, c, 0, candidate.codes);
        if (best.root == 0 || candidate.code < best.code)
            best = std::move(candidate);
    }
    return best;
}

void assign_preorder(const Forest& f, Vertex v, Vertex parent, const RootedCodes& rc,
                     std::vector<Vertex>& label, Vertex& next)
{
    label[v] = next++;
    std::vector<Vertex> kids;
    for (Vertex w : f.neighbors(v)) {
        if (w != parent)
            kids.push_back(w);
    }
    std::stable_sort(kids.begin(), kids.end(),
                     [&](Vertex a, Vertex b) { return rc.code[a] < rc.code[b]; });
    for (Vertex w : kids)
        assign_preorder(f, w, v, rc, label, next);
}

}  // namespace

Canonization canonize(const Forest& f)
{
    std::vector<ComponentCode> comps;
    for (const auto& members : f.components())
        comps.push_back(encode_component(f, members));
    std::stable_sort(comps.begin(), comps.end(),
                     [](const ComponentCode& a, const ComponentCode& b) { return a.code < b.code; });

    Canonization out;
    out.label.assign(f.order() + 1, 0);
    Vertex next = 1;
    for (const auto& comp : comps) {
        out.code += comp.code;
        assign_preorder(f, comp.root, 0, comp.codes, out.label, next);
    }
    out.forest = f.relabeled(out.label);
    return out;
}

std::string canonical_form(const Forest& f)
{
    std::vector<std::string> codes;
    for (const auto& members : f.components())
        codes.push_back(encode_component(f, members).code);
    std::sort(codes.begin(), codes.end());
    std::string out;
    for (const auto& c : codes)
        out += c;
    return out;
}

bool is_isomorphic(const Forest& a, const Forest& b)
{
    return a.order() == b.order() && a.edge_count() == b.edge_count() &&
           canonical_form(a) == canonical_form(b);
}

std::vector<Forest> enumerate_trees(int n)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_trees requires n >= 1");

    static std::mutex mutex;
    static std::vector<std::vector<Forest>> cache{{}, {Forest(1)}};
    std::lock_guard lock(mutex);

    // Every tree on k vertices is a tree on k - 1 vertices plus one leaf, so
    // growing each class by a leaf at every vertex reaches all classes.
    while (static_cast<int>(cache.size()) <= n) {
        const int k = static_cast<int>(cache.size());
        std::map<std::string, Forest> classes;
        for (const Forest& smaller : cache[k - 1]) {
            for (Vertex v = 1; v < k; ++v) {
                std::vector<Edge> edges(smaller.edges().begin(), smaller.edges().end());
                edges.emplace_back(v, k);
                Canonization c = canonize(Forest(k, std::move(edges)));
                classes.try_emplace(std::move(c.code), std::move(c.forest));
            }
        }
        std::vector<Forest> reps;
        reps.reserve(classes.size());
        for (auto& [code, tree] : classes)
            reps.push_back(std::move(tree));
        cache.push_back(std::move(reps));
    }
    return cache[n];
}

Forest prufer_decode(std::span<const int> sequence, int n)
{
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
        throw std::invalid_argument("Prüfer sequence must have length n - 2 with n >= 2");
    std::vector<int> degree(n + 1, 1);
    for (int x : sequence) {
        if (x < 1 || x > n)
            throw std::invalid_argument("Prüfer entry out of range");
        ++degree[x];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int x : sequence) {
        Vertex leaf = 1;
        while (degree[leaf] != 1)
            ++leaf;
        edges.emplace_back(leaf, x);
        --degree[leaf];
        --degree[x];
    }
    Vertex a = 0, b = 0;
    for (Vertex v = 1; v <= n; ++v) {
        if (degree[v] == 1)
            (a == 0 ? a : b) = v;
    }
    edges.emplace_back(a, b);
    return Forest(n, std::move(edges));
}

Forest random_tree(int n, std::mt19937_64& rng)
{
    if (n == 1)
        return Forest(1);
    if (n == 2)
        return Forest::path(2);
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> seq(n - 2);
    for (int& x : seq)
        x = pick(rng);
    return prufer_decode(seq, n);
}

}  // namespace csf
