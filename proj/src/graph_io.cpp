#include "csf/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace csf {

namespace {

std::string_view trim(std::string_view s)
{
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view token, int& value)
{
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Forest read_edge_list(std::istream& in)
{
    std::vector<Edge> edges;
    int declared_n = -1;
    int max_label = 0;
    int line_no = 0;
    std::string line;
    std::vector<int> root;
    auto find = [&](int x) {
        while (root[x] != x)
            x = root[x] = root[root[x]];
        return x;
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view body = line;
        if (auto hash = body.find('#'); hash != std::string_view::npos)
            body = body.substr(0, hash);
        body = trim(body);
        if (body.empty())
            continue;

        if (body.rfind("n=", 0) == 0) {
            int n = 0;
            if (!parse_int(trim(body.substr(2)), n) || n < 0)
                throw ParseError(line_no, "bad vertex-count header '" + std::string(body) + "'");
            if (declared_n >= 0)
                throw ParseError(line_no, "duplicate vertex-count header");
            declared_n = n;
            continue;
        }

        std::istringstream tokens{std::string(body)};
        std::string a, b, extra;
        tokens >> a >> b;
        int u = 0, v = 0;
        if (a.empty() || b.empty() || (tokens >> extra) || !parse_int(a, u) || !parse_int(b, v))
            throw ParseError(line_no, "expected 'u v', got '" + std::string(body) + "'");
        if (u < 1 || v < 1)
            throw ParseError(line_no, "vertex labels are 1-based");
        if (u == v)
            throw ParseError(line_no, "loop at vertex " + std::to_string(u));
        if (declared_n >= 0 && std::max(u, v) > declared_n)
            throw ParseError(line_no, "label " + std::to_string(std::max(u, v)) +
                                          " exceeds n=" + std::to_string(declared_n));
        max_label = std::max({max_label, u, v});
        if (static_cast<int>(root.size()) <= max_label) {
            const int old = static_cast<int>(root.size());
            root.resize(max_label + 1);
            for (int x = old; x <= max_label; ++x)
                root[x] = x;
        }
        int ru = find(u), rv = find(v);
        if (ru == rv)
            throw ParseError(line_no, "edge " + std::to_string(u) + " " + std::to_string(v) +
                                          " repeats an edge or closes a cycle");
        root[ru] = rv;
        edges.emplace_back(u, v);
    }

    const int n = declared_n >= 0 ? declared_n : max_label;
    if (max_label > n)
        throw ParseError(0, "edge uses label " + std::to_string(max_label) + " but n=" +
                                std::to_string(n));
    try {
        return Forest(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

Forest parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_edge_list(in);
}

std::string write_edge_list(const Forest& f)
{
    std::string out = "n=" + std::to_string(f.order()) + "\n";
    for (const Edge& e : f.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

std::string to_graph6(const Forest& f)
{
    const int n = f.order();
    if (n > 62)
        throw std::invalid_argument("graph6 writer supports n <= 62");
    std::string out(1, static_cast<char>(63 + n));
    int bit = 0;
    int acc = 0;
    // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (f.has_edge(Edge(i + 1, j + 1)) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bit = acc = 0;
            }
        }
    }
    if (bit) {
        acc <<= 6 - bit;
        out.push_back(static_cast<char>(63 + acc));
    }
    return out;
}

Forest from_graph6(std::string_view text)
{
    text = trim(text);
    if (text.rfind(">>graph6<<", 0) == 0)
        text.remove_prefix(10);
    if (text.empty())
        throw ParseError(0, "empty graph6 string");
    for (char c : text) {
        if (c < 63 || c > 126)
            throw ParseError(0, "invalid graph6 character");
    }
    const int n = text[0] - 63;
    if (n == 63)
        throw ParseError(0, "graph6 strings with n > 62 are not supported");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (text.size() != 1 + (bits + 5) / 6)
        throw ParseError(0, "graph6 length does not match vertex count");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(i + 1, j + 1);
        }
    }
    try {
        return Forest(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace csf
