#pragma once

#include "remlab/graph.hpp"
#include "remlab/partition.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace remlab {

// Edge-list text format: "n m" then m lines "u v" (0-indexed, u < v), LF endings.
// Partition sidecar: one line "vertex part_name" per vertex.

Graph read_edge_list(std::istream & in);
void write_edge_list(std::ostream & out, const Graph & g);
Graph read_edge_list_file(const std::filesystem::path & path);
void write_edge_list_file(const std::filesystem::path & path, const Graph & g);

std::string to_edge_list_text(const Graph & g);

/// Reads a sidecar for an n-vertex graph. Parts are created in first-seen
/// order; the allowed relation is not part of the format and starts empty.
VertexPartition read_partition(std::istream & in, std::size_t n);
void write_partition(std::ostream & out, const VertexPartition & p);
VertexPartition read_partition_file(const std::filesystem::path & path, std::size_t n);
void write_partition_file(const std::filesystem::path & path, const VertexPartition & p);

/// Copies file: one labelled copy per line, images of pattern vertices 0..h-1.
std::vector<std::vector<Vertex>> read_copies(std::istream & in);
void write_copies(std::ostream & out, const std::vector<std::vector<Vertex>> & copies);

} // namespace remlab
