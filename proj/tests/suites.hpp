#pragma once

// Named test graphs shared by the unit tests and the acceptance suite.

#include "remlab/generators.hpp"
#include "remlab/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace suite {

using remlab::Graph;
using remlab::GraphBuilder;
using remlab::Vertex;

/// Cycle C_len with a pendant path of `tail` edges hanging off vertex 0.
inline Graph cycle_with_tail(std::size_t len, std::size_t tail)
{
    GraphBuilder b(len + tail);
    for (Vertex i = 0; i < len; ++i)
        b.add_edge(i, static_cast<Vertex>((i + 1) % len));
    Vertex prev = 0;
    for (std::size_t t = 0; t < tail; ++t) {
        auto v = static_cast<Vertex>(len + t);
        b.add_edge(prev, v);
        prev = v;
    }
    return b.build();
}

/// Twelve 3-chromatic graphs with a critical edge; odd girths 3, 5, 7, 9.
inline std::vector<std::pair<std::string, Graph>> chi3_graphs()
{
    using namespace remlab;
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("C3", cycle_graph(3));
    out.emplace_back("C5", cycle_graph(5));
    out.emplace_back("C7", cycle_graph(7));
    out.emplace_back("C9", cycle_graph(9));
    out.emplace_back("C3+tail2", cycle_with_tail(3, 2));
    out.emplace_back("C5+tail2", cycle_with_tail(5, 2));
    out.emplace_back("C7+tail3", cycle_with_tail(7, 3));
    out.emplace_back("C9+tail1", cycle_with_tail(9, 1));
    Edge diamond[] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    out.emplace_back("K4-e", Graph(4, diamond));
    std::size_t c5[] = {2, 1, 1, 1, 1};
    out.emplace_back("C5[2,1,1,1,1]", blowup(cycle_graph(5), c5).graph);
    std::size_t c7[] = {1, 1, 1, 1, 1, 2, 2};
    out.emplace_back("C7[1,1,1,1,1,2,2]", blowup(cycle_graph(7), c7).graph);
    out.emplace_back("C3+C4", disjoint_union(cycle_graph(3), cycle_graph(4)));
    return out;
}

} // namespace suite
