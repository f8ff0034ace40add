#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <algorithm>

#include "graphclust/error.hpp"
#include "graphclust/generators.hpp"
#include "graphclust/graph_io.hpp"
#include "oracles.hpp"

using namespace graphclust;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("graphclust_io_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path file(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

}  // namespace

TEST(SnapEdgeList, CommentsAndReversedPair) {
  const auto loaded = parse_snap_edge_list("# comment\n0\t1\n1\t0\n");
  EXPECT_EQ(loaded.graph.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(loaded.graph.total_weight(), 1.0);
}

TEST(SnapEdgeList, MalformedTokenReportsLine) {
  try {
    parse_snap_edge_list("0\tx\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_snap_edge_list("# header\n0 1\n2 3 4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(SnapEdgeList, EmptyEdgeSet) {
  EXPECT_THROW(parse_snap_edge_list("# nothing here\n\n"), EmptyGraphError);
}

TEST(SnapEdgeList, SelfLoopsNeedTheFlag) {
  EXPECT_THROW(parse_snap_edge_list("3 3\n"), ParseError);
  const auto loaded = parse_snap_edge_list("3 3\n3 4\n", {.allow_self_loops = true});
  EXPECT_EQ(loaded.graph.vertex_count(), 2u);
  EXPECT_DOUBLE_EQ(loaded.graph.self_loop(0), 1.0);
}

TEST(SnapEdgeList, SparseIdsRemapInAscendingOrder) {
  const auto loaded = parse_snap_edge_list("100 7\n7 42\n");
  EXPECT_EQ(loaded.ids.externals(), (std::vector<ExternalId>{7, 42, 100}));
  EXPECT_EQ(loaded.ids.dense(100), 2u);
  EXPECT_THROW(loaded.ids.dense(8), UnknownVertexError);
}

TEST(SnapEdgeList, MatchesFromEdgeListOnDeduplicatedPairs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> id(0, 30);
  for (int trial = 0; trial < 30; ++trial) {
    std::string text = "# random\n";
    std::set<std::pair<int, int>> pairs;
    for (int e = 0; e < 60; ++e) {
      int u = id(rng), v = id(rng);
      if (u == v) continue;
      text += std::to_string(u) + "\t" + std::to_string(v) + "\n";
      pairs.insert({std::min(u, v), std::max(u, v)});
    }
    const auto loaded = parse_snap_edge_list(text);
    std::vector<WeightedEdge> edges;
    for (auto [u, v] : pairs) edges.push_back({loaded.ids.dense(u), loaded.ids.dense(v), 1.0});
    EXPECT_EQ(loaded.graph, UndirectedGraph::from_edge_list(edges));
    EXPECT_EQ(loaded.graph.edge_count(), pairs.size());
  }
}

TEST(SnapEdgeList, ReadsFromDisk) {
  TempDir dir;
  write_file(dir.file("g.txt"), "0 1\n1 2\n");
  EXPECT_EQ(read_snap_edge_list(dir.file("g.txt")).graph.vertex_count(), 3u);
  EXPECT_THROW(read_snap_edge_list(dir.file("missing.txt")), IoError);
}

TEST(GroundTruth, TwoCommunities) {
  const auto map = IdMap::identity(6);
  const auto cover = parse_ground_truth("0 1 2\n\n3 4 5\n", map);
  ASSERT_EQ(cover.communities.size(), 2u);
  EXPECT_EQ(cover.communities[0].size(), 3u);
  EXPECT_EQ(cover.communities[1].size(), 3u);
}

TEST(GroundTruth, OverlapAllowedUnknownRejected) {
  const auto map = IdMap::identity(4);
  EXPECT_EQ(parse_ground_truth("0 1 2\n2 3\n", map).communities.size(), 2u);
  EXPECT_THROW(parse_ground_truth("0 9\n", map), UnknownVertexError);
}

TEST(PartitionFile, BarbellTrianglesWritesSixLines) {
  TempDir dir;
  const auto map = IdMap::identity(6);
  write_partition(Partition({0, 0, 0, 1, 1, 1}), map, dir.file("p.tsv"));
  EXPECT_EQ(read_text_file(dir.file("p.tsv")), "0\t0\n1\t0\n2\t0\n3\t1\n4\t1\n5\t1\n");
}

TEST(PartitionFile, SortedByExternalId) {
  TempDir dir;
  const IdMap map({30, 10, 20});
  write_partition(Partition({0, 1, 1}), map, dir.file("p.tsv"));
  EXPECT_EQ(read_text_file(dir.file("p.tsv")), "10\t1\n20\t1\n30\t0\n");
}

TEST(PartitionFile, RoundTripIsIdentity) {
  TempDir dir;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> size(1, 100);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = size(rng);
    std::vector<ExternalId> externals(n);
    for (std::size_t i = 0; i < n; ++i) externals[i] = static_cast<ExternalId>(i * 3 + 1);
    std::shuffle(externals.begin(), externals.end(), rng);
    const IdMap map(externals);
    const auto p = Partition::from_labels(oracle::random_labels(rng, n, 7));
    write_partition(p, map, dir.file("p.tsv"));
    EXPECT_EQ(read_partition(dir.file("p.tsv"), map), p);
  }
}

TEST(PartitionFile, IncompleteFile) {
  const auto map = IdMap::identity(6);
  EXPECT_THROW(parse_partition("0\t0\n1\t0\n2\t0\n3\t1\n4\t1\n", map), IncompletePartitionError);
  EXPECT_THROW(parse_partition("0\t0\n0\t1\n", IdMap::identity(1)), ParseError);
}

TEST(PartitionFile, UnwritablePath) {
  EXPECT_THROW(write_partition(Partition::whole(1), IdMap::identity(1), "/nonexistent-dir/x/p.tsv"), IoError);
}

TEST(OrderingFile, RoundTrip) {
  TempDir dir;
  const IdMap map({5, 6, 7, 8});
  const auto order = Ordering::from_sequence({2, 0, 3, 1});
  write_ordering(order, map, dir.file("o.txt"));
  EXPECT_EQ(read_text_file(dir.file("o.txt")), "7\n5\n8\n6\n");
  EXPECT_EQ(read_ordering(dir.file("o.txt"), map), order);
}

TEST(PointFile, ParsesColumns) {
  const auto pf = parse_point_file("# id x y\n10 0.0 1.5\n11 2 -3\n");
  ASSERT_EQ(pf.points.rows(), 2);
  ASSERT_EQ(pf.points.cols(), 2);
  EXPECT_DOUBLE_EQ(pf.points(1, 0), 1.5);
  EXPECT_DOUBLE_EQ(pf.points(1, 1), -3.0);
  EXPECT_EQ(pf.ids.external(1), 11);
}

TEST(PointFile, Errors) {
  EXPECT_THROW(parse_point_file("1 0 0\n2 1\n"), ParseError);
  EXPECT_THROW(parse_point_file("# empty\n"), EmptyInputError);
  EXPECT_THROW(parse_point_file("1 0\n1 2\n"), InputError);
}

TEST(Convert, EdgeListRoundTrip) {
  TempDir dir;
  const auto loaded = parse_snap_edge_list("10 20\n20 30\n30 10\n");
  write_edge_list(loaded.graph, loaded.ids, dir.file("e.txt"));
  EXPECT_EQ(read_snap_edge_list(dir.file("e.txt")).graph, loaded.graph);
}
