#include "csf/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace csf {

Partition::Partition(std::vector<int> sorted_parts)
    : parts_(std::move(sorted_parts)),
      degree_(std::accumulate(parts_.begin(), parts_.end(), 0))
{
}

Partition Partition::from_multiset(std::vector<int> values)
{
    for (int v : values) {
        if (v < 1)
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(v));
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

Partition Partition::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    std::string_view body = trim(text);
    if (body.size() < 2 || !((body.front() == '(' && body.back() == ')') ||
                             (body.front() == '[' && body.back() == ']')))
        throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));

    std::vector<int> values;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view token = trim(body.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed partition part '" + std::string(token) +
                                        "' in '" + std::string(text) + "'");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body = trim(body.substr(comma + 1));
        if (body.empty())
            throw std::invalid_argument("trailing comma in '" + std::string(text) + "'");
    }
    return from_multiset(std::move(values));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

std::strong_ordering lex_compare(const Partition& a, const Partition& b)
{
    if (a.degree() != b.degree())
        throw std::invalid_argument("lex_compare: partitions " + a.to_string() + " and " +
                                    b.to_string() + " have different degrees");
    return a <=> b;
}

std::vector<int> multiset_difference(const Partition& a, const Partition& b)
{
    // Both inputs are sorted decreasingly, so a merge walk suffices.
    std::vector<int> out;
    auto ap = a.parts();
    auto bp = b.parts();
    std::size_t i = 0, j = 0;
    while (i < ap.size()) {
        if (j == bp.size() || ap[i] > bp[j]) {
            out.push_back(ap[i++]);
        } else if (ap[i] < bp[j]) {
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return out;
}

Partition partition_union(const Partition& a, const Partition& b)
{
    std::vector<int> merged;
    merged.reserve(a.length() + b.length());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(merged), std::greater<>());
    return Partition::from_multiset(std::move(merged));
}

Partition remove_part(const Partition& a, int part)
{
    std::vector<int> values(a.parts().begin(), a.parts().end());
    auto it = std::find(values.begin(), values.end(), part);
    if (it == values.end())
        throw std::invalid_argument("remove_part: " + std::to_string(part) + " is not a part of " +
                                    a.to_string());
    values.erase(it);
    return Partition::from_multiset(std::move(values));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition::from_multiset(prefix));
        return;
    }
    // Smaller leading parts come first in lexicographic order.
    for (int part = 1; part <= std::min(remaining, max_part); ++part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative degree");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << p.to_string();
}

void to_json(nlohmann::json& j, const Partition& p)
{
    j = nlohmann::json::array();
    for (int part : p.parts())
        j.push_back(part);
}

void from_json(const nlohmann::json& j, Partition& p)
{
    if (j.is_string()) {
        p = Partition::parse(j.get<std::string>());
        return;
    }
    if (!j.is_array())
        throw std::invalid_argument("partition JSON must be an array of integers");
    std::vector<int> values;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("partition JSON must be an array of integers");
        values.push_back(v.get<int>());
    }
    p = Partition::from_multiset(std::move(values));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int part : p.parts()) {
        h ^= static_cast<std::size_t>(part);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace csf
