#include "graphclust/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "graphclust/error.hpp"

namespace graphclust::gen {

namespace {

void add_clique(std::vector<WeightedEdge>& edges, VertexId first, std::size_t size) {
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      edges.push_back({first + static_cast<VertexId>(i), first + static_cast<VertexId>(j), 1.0});
    }
  }
}

UndirectedGraph with_vertex_count(std::vector<WeightedEdge> edges, std::size_t n) {
  auto g = UndirectedGraph::from_edge_list(edges);
  if (g.vertex_count() == n) return g;
  // Pad trailing isolated vertices.
  std::vector<std::vector<Neighbor>> adjacency(n);
  std::vector<double> loops(n, 0.0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adjacency[v].assign(nb.begin(), nb.end());
    loops[v] = g.self_loop(v);
  }
  return UndirectedGraph::from_adjacency(std::move(adjacency), std::move(loops));
}

}  // namespace

UndirectedGraph barbell6() {
  return UndirectedGraph::from_edge_list({{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}, {3, 4, 1.0}, {4, 5, 1.0}, {3, 5, 1.0}, {2, 3, 1.0}});
}

UndirectedGraph disjoint_cliques(std::size_t count, std::size_t size) {
  std::vector<WeightedEdge> edges;
  for (std::size_t c = 0; c < count; ++c) add_clique(edges, static_cast<VertexId>(c * size), size);
  return with_vertex_count(std::move(edges), count * size);
}

UndirectedGraph ring_of_cliques(std::size_t count, std::size_t size) {
  if (count < 2 || size < 1) throw ParameterError("ring of cliques needs at least two cliques");
  std::vector<WeightedEdge> edges;
  for (std::size_t c = 0; c < count; ++c) {
    add_clique(edges, static_cast<VertexId>(c * size), size);
    const auto last = static_cast<VertexId>(c * size + size - 1);
    const auto next_first = static_cast<VertexId>(((c + 1) % count) * size);
    edges.push_back({last, next_first, 1.0});
  }
  return with_vertex_count(std::move(edges), count * size);
}

UndirectedGraph path(std::size_t n) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), 1.0});
  return with_vertex_count(std::move(edges), n);
}

UndirectedGraph star(std::size_t leaves) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<VertexId>(i), 1.0});
  return with_vertex_count(std::move(edges), leaves + 1);
}

UndirectedGraph erdos_renyi(std::size_t n, double p, std::uint64_t seed, bool weighted) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), weighted ? weight(rng) : 1.0});
    }
  }
  return with_vertex_count(std::move(edges), n);
}

UndirectedGraph planted_partition(std::size_t n, std::size_t blocks, std::size_t intra, std::size_t inter,
                                  std::uint64_t seed) {
  if (blocks < 1 || n < blocks) throw ParameterError("planted partition needs 1 <= blocks <= n");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  // members[b] lists the vertices of block b.
  std::vector<std::vector<VertexId>> members(blocks);
  std::vector<std::size_t> block_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    members[i % blocks].push_back(perm[i]);
    block_of[perm[i]] = i % blocks;
  }
  std::uniform_int_distribution<std::size_t> any(0, n - 1);
  std::vector<WeightedEdge> edges;
  edges.reserve(n * (intra + inter));
  for (std::size_t v = 0; v < n; ++v) {
    const auto& block = members[block_of[v]];
    std::uniform_int_distribution<std::size_t> inside(0, block.size() - 1);
    for (std::size_t e = 0; e < intra; ++e) {
      const VertexId u = block[inside(rng)];
      if (u != v) edges.push_back({static_cast<VertexId>(v), u, 1.0});
    }
    for (std::size_t e = 0; e < inter; ++e) {
      const auto u = static_cast<VertexId>(any(rng));
      if (u != v) edges.push_back({static_cast<VertexId>(v), u, 1.0});
    }
  }
  // Collapse parallel draws to unit weight.
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const WeightedEdge& a, const WeightedEdge& b) { return a.u == b.u && a.v == b.v; }),
              edges.end());
  return with_vertex_count(std::move(edges), n);
}

}  // namespace graphclust::gen
