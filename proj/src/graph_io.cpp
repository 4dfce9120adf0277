#include "ehh/graph_io.hpp"

#include "ehh/errors.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace ehh {

GraphFormat parse_format(std::string_view name)
{
    if (name == "edgelist")
        return GraphFormat::edgelist;
    if (name == "dimacs")
        return GraphFormat::dimacs;
    throw ParameterError("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long number(std::string_view tok, std::size_t line)
{
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace

Graph parse_graph(std::string_view text, GraphFormat format)
{
    const bool dimacs = format == GraphFormat::dimacs;
    const long long base = dimacs ? 1 : 0;
    std::optional<GraphBuilder> builder;
    long long n = 0, m = 0, seen = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        auto tok = tokens(line);
        if (tok.empty() || (dimacs && tok[0] == "c"))
            continue;
        if (!builder) {
            std::size_t need = dimacs ? 4 : 3;
            if (tok[0] != "p" || tok.size() != need)
                throw ParseError(line_no, dimacs ? "expected 'p edge <n> <m>'" : "expected 'p <n> <m>'");
            n = number(tok[need - 2], line_no);
            m = number(tok[need - 1], line_no);
            if (n < 0 || m < 0 || n > (1 << 24))
                throw ParseError(line_no, "bad header counts");
            builder.emplace(static_cast<int>(n));
            continue;
        }
        std::size_t first = 0;
        if (dimacs) {
            if (tok[0] != "e")
                throw ParseError(line_no, "expected 'e <u> <v>'");
            first = 1;
        }
        if (tok.size() != first + 2)
            throw ParseError(line_no, "expected an edge '<u> <v>'");
        long long u = number(tok[first], line_no) - base;
        long long v = number(tok[first + 1], line_no) - base;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line_no, "vertex id out of range");
        if (u == v)
            throw ParseError(line_no, "self-loop");
        if (builder->has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(line_no, "duplicate edge");
        if (++seen > m)
            throw ParseError(line_no, "more edges than announced");
        builder->add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!builder)
        throw ParseError(line_no, "missing header");
    if (seen != m)
        throw ParseError(line_no, "announced " + std::to_string(m) + " edges, found " + std::to_string(seen));
    return std::move(*builder).build();
}

std::string emit_graph(const Graph& g, GraphFormat format)
{
    std::ostringstream out;
    auto edges = g.edges();
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    } else {
        out << "p " << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << u << ' ' << v << '\n';
    }
    return out.str();
}

} // namespace ehh
