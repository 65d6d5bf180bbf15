#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "csf/forest.hpp"

namespace csf {

/// Malformed input; `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Reads the edge-list format: one "u v" pair per line (1-based labels),
/// '#' comments and blank lines ignored, and an optional "n=<k>" header line
/// fixing the vertex count (otherwise the largest label). Non-forests are
/// rejected.
Forest read_edge_list(std::istream& in);
Forest parse_edge_list(std::string_view text);

/// Writes the "n=<k>" header followed by one edge per line.
std::string write_edge_list(const Forest& f);

/// graph6 encoding (n <= 62) of the forest's adjacency matrix.
std::string to_graph6(const Forest& f);
Forest from_graph6(std::string_view text);

}  // namespace csf
