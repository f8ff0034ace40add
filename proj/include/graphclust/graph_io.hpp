#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "graphclust/graph.hpp"
#include "graphclust/ordering.hpp"

namespace graphclust {

using ExternalId = std::int64_t;

/// Bijection between external vertex ids and dense ids 0..n-1.
class IdMap {
 public:
  IdMap() = default;
  /// externals[d] becomes the external id of dense vertex d. Throws InputError on duplicates.
  explicit IdMap(std::vector<ExternalId> externals);
  static IdMap identity(std::size_t n);

  std::size_t size() const noexcept { return dense_to_external_.size(); }
  ExternalId external(VertexId dense) const { return dense_to_external_.at(dense); }
  /// Throws UnknownVertexError for ids not in the map.
  VertexId dense(ExternalId external) const;
  bool contains(ExternalId external) const { return external_to_dense_.contains(external); }
  const std::vector<ExternalId>& externals() const noexcept { return dense_to_external_; }

 private:
  std::unordered_map<ExternalId, VertexId> external_to_dense_;
  std::vector<ExternalId> dense_to_external_;
};

struct LoadedGraph {
  UndirectedGraph graph;
  IdMap ids;
};

struct SnapReadOptions {
  bool allow_self_loops = false;
};

/// SNAP edge list: '#' lines are comments, every other non-blank line holds exactly two
/// integer ids. Pairs are deduplicated (either orientation) into unit-weight edges and dense
/// ids are assigned in ascending external id order.
LoadedGraph read_snap_edge_list(const std::filesystem::path& path, SnapReadOptions opts = {});
LoadedGraph parse_snap_edge_list(std::string_view text, SnapReadOptions opts = {});

/// Writes "u<TAB>v" lines with external ids, one per undirected edge (u <= v by dense id).
void write_edge_list(const UndirectedGraph& g, const IdMap& map, const std::filesystem::path& path);

/// Possibly overlapping communities in dense ids.
struct Cover {
  std::vector<std::vector<VertexId>> communities;
};

/// One community per non-empty line of whitespace-separated external ids.
Cover read_ground_truth(const std::filesystem::path& path, const IdMap& map);
Cover parse_ground_truth(std::string_view text, const IdMap& map);

/// "external_id<TAB>community_id" lines sorted by external id.
void write_partition(const Partition& p, const IdMap& map, const std::filesystem::path& path);
Partition read_partition(const std::filesystem::path& path, const IdMap& map);
Partition parse_partition(std::string_view text, const IdMap& map);

/// One external id per line, in rank order.
void write_ordering(const Ordering& order, const IdMap& map, const std::filesystem::path& path);
Ordering read_ordering(const std::filesystem::path& path, const IdMap& map);

/// Points stored one per column; ids keep file order.
struct PointFile {
  Eigen::MatrixXd points;
  IdMap ids;
};

/// "id c1 c2 ... cD" per line; '#' lines and blank lines are skipped.
PointFile read_point_file(const std::filesystem::path& path);
PointFile parse_point_file(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace graphclust
