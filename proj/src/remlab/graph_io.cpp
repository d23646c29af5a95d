#include "remlab/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace remlab {

namespace {

std::istream & need_line(std::istream & in, std::string & line, const char * what)
{
    if (!std::getline(in, line))
        throw IoError(std::string("unexpected end of input while reading ") + what);
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    return in;
}

std::uint64_t parse_count(std::istringstream & fields, const std::string & line)
{
    long long value = -1;
    if (!(fields >> value) || value < 0)
        throw IoError("malformed line: '" + line + "'");
    return static_cast<std::uint64_t>(value);
}

void expect_end(std::istringstream & fields, const std::string & line)
{
    std::string extra;
    if (fields >> extra)
        throw IoError("trailing data on line: '" + line + "'");
}

} // namespace

Graph read_edge_list(std::istream & in)
{
    std::string line;
    need_line(in, line, "header");
    std::istringstream header(line);
    auto n = parse_count(header, line);
    auto m = parse_count(header, line);
    expect_end(header, line);
    if (n > kMaxVertices)
        throw IoError("graph order " + std::to_string(n) + " exceeds the cap of " + std::to_string(kMaxVertices));

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        need_line(in, line, "edge list");
        std::istringstream fields(line);
        auto u = parse_count(fields, line);
        auto v = parse_count(fields, line);
        expect_end(fields, line);
        if (u >= n || v >= n)
            throw IoError("edge endpoint out of range: '" + line + "'");
        edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    }
    try {
        return Graph(n, edges);
    }
    catch (const InvalidArgument & e) {
        throw IoError(e.what());
    }
}

void write_edge_list(std::ostream & out, const Graph & g)
{
    out << to_edge_list_text(g);
}

std::string to_edge_list_text(const Graph & g)
{
    std::string text = std::to_string(g.order()) + ' ' + std::to_string(g.size()) + '\n';
    for (const auto & e : g.edges())
        text += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    return text;
}

Graph read_edge_list_file(const std::filesystem::path & path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list_file(const std::filesystem::path & path, const Graph & g)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    write_edge_list(out, g);
}

VertexPartition read_partition(std::istream & in, std::size_t n)
{
    VertexPartition p(n);
    std::map<std::string, VertexPartition::PartId> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        std::istringstream fields(line);
        auto v = parse_count(fields, line);
        std::string name;
        if (!(fields >> name))
            throw IoError("missing part name: '" + line + "'");
        expect_end(fields, line);
        if (v >= n)
            throw IoError("partition vertex out of range: '" + line + "'");
        if (name == "-")
            continue;
        auto [it, inserted] = ids.try_emplace(name, 0);
        if (inserted)
            it->second = p.add_part(name);
        p.assign(static_cast<Vertex>(v), it->second);
    }
    return p;
}

void write_partition(std::ostream & out, const VertexPartition & p)
{
    for (std::size_t v = 0; v < p.order(); ++v) {
        auto part = p.part_of(static_cast<Vertex>(v));
        out << v << ' ' << (part == VertexPartition::kUnassigned ? std::string("-") : p.name(part)) << '\n';
    }
}

VertexPartition read_partition_file(const std::filesystem::path & path, std::size_t n)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string());
    return read_partition(in, n);
}

void write_partition_file(const std::filesystem::path & path, const VertexPartition & p)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    write_partition(out, p);
}

std::vector<std::vector<Vertex>> read_copies(std::istream & in)
{
    std::vector<std::vector<Vertex>> copies;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::vector<Vertex> copy;
        long long v = 0;
        while (fields >> v) {
            if (v < 0)
                throw IoError("negative vertex in copies file: '" + line + "'");
            copy.push_back(static_cast<Vertex>(v));
        }
        if (!fields.eof())
            throw IoError("malformed copies line: '" + line + "'");
        copies.push_back(std::move(copy));
    }
    return copies;
}

void write_copies(std::ostream & out, const std::vector<std::vector<Vertex>> & copies)
{
    for (const auto & copy : copies) {
        for (std::size_t i = 0; i < copy.size(); ++i)
            out << (i ? " " : "") << copy[i];
        out << '\n';
    }
}

} // namespace remlab
