#include "remlab/partition.hpp"

#include <algorithm>

namespace remlab {

VertexPartition::PartId VertexPartition::add_part(std::string name)
{
    if (std::find(names_.begin(), names_.end(), name) != names_.end())
        throw InvalidArgument("duplicate part name '" + name + "'");
    names_.push_back(std::move(name));
    return static_cast<PartId>(names_.size() - 1);
}

VertexPartition::PartId VertexPartition::part_id(const std::string & name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        throw InvalidArgument("no part named '" + name + "'");
    return static_cast<PartId>(it - names_.begin());
}

void VertexPartition::assign(Vertex v, PartId p)
{
    if (v >= part_of_.size())
        throw InvalidArgument("partition: vertex " + std::to_string(v) + " out of range");
    if (p >= names_.size())
        throw InvalidArgument("partition: unknown part id " + std::to_string(p));
    part_of_[v] = p;
}

void VertexPartition::assign(std::span<const Vertex> vertices, PartId p)
{
    for (auto v : vertices)
        assign(v, p);
}

void VertexPartition::allow(PartId a, PartId b)
{
    if (a >= names_.size() || b >= names_.size())
        throw InvalidArgument("partition: unknown part id in allowed pair");
    allowed_.insert(std::minmax(a, b));
}

std::vector<Vertex> VertexPartition::members(PartId p) const
{
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < part_of_.size(); ++v)
        if (part_of_[v] == p)
            out.push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet VertexPartition::member_set(PartId p) const
{
    return VertexSet::of(order(), members(p));
}

bool VertexPartition::complete() const noexcept
{
    return std::none_of(part_of_.begin(), part_of_.end(), [](PartId p) { return p == kUnassigned; });
}

std::optional<Edge> VertexPartition::first_violation(const Graph & g) const
{
    if (g.order() != order())
        throw InvalidArgument("partition covers " + std::to_string(order()) + " vertices but the graph has " +
                              std::to_string(g.order()));
    for (const auto & e : g.edges()) {
        auto a = part_of_[e.u];
        auto b = part_of_[e.v];
        if (a == kUnassigned || b == kUnassigned || !allowed(a, b))
            return e;
    }
    return std::nullopt;
}

} // namespace remlab
