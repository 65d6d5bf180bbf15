#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace csf {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions are the index set of every basis used here, so they are plain
/// values with structural equality, a total hash, and an ordering. The
/// built-in ordering (`<=>`) compares the part sequences lexicographically,
/// which coincides with the lexicographic order on partitions of a fixed
/// degree; use `lex_compare` when the degrees must agree.
class Partition {
public:
    Partition() = default;

    /// Sorts `values` into weakly decreasing order. Throws
    /// `std::invalid_argument` on a non-positive value.
    static Partition from_multiset(std::vector<int> values);

    /// Parses "(4,2,1)", "[4,2,1]" or "()" (whitespace tolerated).
    static Partition parse(std::string_view text);

    std::span<const int> parts() const noexcept { return parts_; }
    int degree() const noexcept { return degree_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// Number of parts equal to `i`.
    int multiplicity(int i) const;

    bool contains(int part) const { return multiplicity(part) > 0; }

    /// Canonical text rendering, e.g. "(4,2,1)".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

private:
    explicit Partition(std::vector<int> sorted_parts);

    std::vector<int> parts_;
    int degree_ = 0;
};

/// Lexicographic order on partitions of the same degree. Throws
/// `std::invalid_argument` when the degrees differ.
std::strong_ordering lex_compare(const Partition& a, const Partition& b);

/// Multiset difference: the multiplicity of i in the result is
/// max(m_i(a) - m_i(b), 0). Returned weakly decreasing.
std::vector<int> multiset_difference(const Partition& a, const Partition& b);

/// Multiset union of the parts of `a` and `b`.
Partition partition_union(const Partition& a, const Partition& b);

/// `a` with one copy of `part` removed. Throws if `part` is absent.
Partition remove_part(const Partition& a, int part);

/// All partitions of n, in increasing lexicographic order.
std::vector<Partition> partitions_of(int n);

std::ostream& operator<<(std::ostream& os, const Partition& p);

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace csf

template <>
struct std::hash<csf::Partition> : csf::PartitionHash {};
