#pragma once

#include "remlab/graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace remlab {

/// Labelled partition of [n] into named parts, plus the unordered part pairs
/// (self-pairs included) on which edges are allowed to live.
class VertexPartition {
  public:
    using PartId = std::uint32_t;
    static constexpr PartId kUnassigned = ~PartId{0};

    VertexPartition() = default;
    explicit VertexPartition(std::size_t n) : part_of_(n, kUnassigned) {}

    std::size_t order() const noexcept { return part_of_.size(); }
    std::size_t part_count() const noexcept { return names_.size(); }

    PartId add_part(std::string name);
    /// Id of the part with this name; throws InvalidArgument if absent.
    PartId part_id(const std::string & name) const;
    const std::string & name(PartId p) const { return names_.at(p); }

    void assign(Vertex v, PartId p);
    void assign(std::span<const Vertex> vertices, PartId p);
    PartId part_of(Vertex v) const { return part_of_.at(v); }

    void allow(PartId a, PartId b);
    bool allowed(PartId a, PartId b) const { return allowed_.contains(std::minmax(a, b)); }
    const std::set<std::pair<PartId, PartId>> & allowed_pairs() const noexcept { return allowed_; }

    std::vector<Vertex> members(PartId p) const;
    VertexSet member_set(PartId p) const;

    /// True when every vertex has a part.
    bool complete() const noexcept;
    /// First edge of g (lexicographic) that is not on an allowed pair, if any.
    std::optional<Edge> first_violation(const Graph & g) const;
    bool valid_for(const Graph & g) const { return complete() && !first_violation(g); }

  private:
    std::vector<PartId> part_of_;
    std::vector<std::string> names_;
    std::set<std::pair<PartId, PartId>> allowed_;
};

} // namespace remlab
