#pragma once

#include <fstream>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>

#include "csf/graph_io.hpp"
#include "csf/symfunc.hpp"

namespace fixture {

inline std::string read(const std::string& name)
{
    std::ifstream in(std::string(CSF_FIXTURE_DIR) + "/" + name);
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    return {std::istreambuf_iterator<char>(in), {}};
}

inline csf::Forest tree(const std::string& name)
{
    return csf::parse_edge_list(read(name + ".edges"));
}

inline csf::SymFunc expansion(const std::string& name)
{
    return csf::parse_text(read(name + ".st"));
}

}  // namespace fixture

inline csf::Partition P(std::initializer_list<int> parts)
{
    return csf::Partition::from_multiset(std::vector<int>(parts));
}
