#pragma once

#include <cstdint>

#include "graphclust/graph.hpp"

namespace graphclust::gen {

/// Two unit triangles {0,1,2} and {3,4,5} joined by the unit edge 2-3.
UndirectedGraph barbell6();

/// `count` disjoint unit cliques of `size` vertices; clique c holds vertices c*size .. c*size+size-1.
UndirectedGraph disjoint_cliques(std::size_t count, std::size_t size);

/// disjoint_cliques plus one unit edge from the last vertex of clique c to the first vertex of
/// clique c+1 (mod count).
UndirectedGraph ring_of_cliques(std::size_t count, std::size_t size);

UndirectedGraph path(std::size_t n);

/// Centre 0 with leaves 1..leaves.
UndirectedGraph star(std::size_t leaves);

/// G(n, p) with optional uniform random weights in [0.5, 2).
UndirectedGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool weighted = false);

/// Planted partition: `blocks` equal blocks over n vertices (vertices assigned round-robin
/// after a seeded shuffle), each vertex drawing `intra` random partners inside its block and
/// `inter` partners anywhere. Duplicates collapse, so the edge count is slightly below
/// n * (intra + inter).
UndirectedGraph planted_partition(std::size_t n, std::size_t blocks, std::size_t intra, std::size_t inter,
                                  std::uint64_t seed);

}  // namespace graphclust::gen
