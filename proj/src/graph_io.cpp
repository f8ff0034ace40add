#include "graphclust/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "graphclust/error.hpp"

namespace graphclust {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Iterates the lines of a text buffer, tracking 1-based line numbers.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const std::size_t end = text_.find('\n', pos_);
    const std::size_t stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(pos_, stop - pos_);
    pos_ = stop + 1;
    ++line_no_;
    return true;
  }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

/// Splits on blanks into a reusable token buffer.
void tokenize(std::string_view line, std::vector<std::string_view>& tokens) {
  tokens.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
}

bool skippable(const std::vector<std::string_view>& tokens) { return tokens.empty() || tokens.front().front() == '#'; }

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

IdMap::IdMap(std::vector<ExternalId> externals) : dense_to_external_(std::move(externals)) {
  external_to_dense_.reserve(dense_to_external_.size());
  for (std::size_t d = 0; d < dense_to_external_.size(); ++d) {
    if (!external_to_dense_.emplace(dense_to_external_[d], static_cast<VertexId>(d)).second) {
      throw InputError("duplicate external id " + std::to_string(dense_to_external_[d]));
    }
  }
}

IdMap IdMap::identity(std::size_t n) {
  std::vector<ExternalId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ExternalId>(i);
  return IdMap(std::move(ids));
}

VertexId IdMap::dense(ExternalId external) const {
  const auto it = external_to_dense_.find(external);
  if (it == external_to_dense_.end()) throw UnknownVertexError("unknown vertex id " + std::to_string(external));
  return it->second;
}

LoadedGraph parse_snap_edge_list(std::string_view text, SnapReadOptions opts) {
  std::vector<std::pair<ExternalId, ExternalId>> pairs;
  LineReader lines(text);
  std::string_view line;
  std::vector<std::string_view> tokens;
  while (lines.next(line)) {
    tokenize(line, tokens);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2) {
      throw ParseError(lines.line_no(), "expected 2 fields, found " + std::to_string(tokens.size()));
    }
    const auto u = parse_number<ExternalId>(tokens[0], lines.line_no(), "vertex id");
    const auto v = parse_number<ExternalId>(tokens[1], lines.line_no(), "vertex id");
    if (u == v && !opts.allow_self_loops) throw ParseError(lines.line_no(), "self-loop on vertex " + std::to_string(u));
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (pairs.empty()) throw EmptyGraphError("edge list contains no edges");

  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<ExternalId> externals;
  externals.reserve(pairs.size() * 2);
  for (const auto& [u, v] : pairs) {
    externals.push_back(u);
    externals.push_back(v);
  }
  std::sort(externals.begin(), externals.end());
  externals.erase(std::unique(externals.begin(), externals.end()), externals.end());

  auto dense_of = [&](ExternalId x) {
    return static_cast<VertexId>(std::lower_bound(externals.begin(), externals.end(), x) - externals.begin());
  };
  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({dense_of(u), dense_of(v), 1.0});

  LoadedGraph out;
  out.graph = UndirectedGraph::from_edge_list(edges);
  out.ids = IdMap(std::move(externals));
  return out;
}

LoadedGraph read_snap_edge_list(const std::filesystem::path& path, SnapReadOptions opts) {
  return parse_snap_edge_list(read_text_file(path), opts);
}

void write_edge_list(const UndirectedGraph& g, const IdMap& map, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (g.self_loop(u) > 0.0) out << map.external(u) << '\t' << map.external(u) << '\n';
    for (const auto& nb : g.neighbors(u)) {
      if (nb.id > u) out << map.external(u) << '\t' << map.external(nb.id) << '\n';
    }
  }
  finish_output(out, path);
}

Cover parse_ground_truth(std::string_view text, const IdMap& map) {
  Cover cover;
  LineReader lines(text);
  std::string_view line;
  std::vector<std::string_view> tokens;
  while (lines.next(line)) {
    tokenize(line, tokens);
    if (skippable(tokens)) continue;
    std::vector<VertexId> members;
    members.reserve(tokens.size());
    for (auto token : tokens) members.push_back(map.dense(parse_number<ExternalId>(token, lines.line_no(), "vertex id")));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    cover.communities.push_back(std::move(members));
  }
  return cover;
}

Cover read_ground_truth(const std::filesystem::path& path, const IdMap& map) {
  return parse_ground_truth(read_text_file(path), map);
}

void write_partition(const Partition& p, const IdMap& map, const std::filesystem::path& path) {
  if (p.vertex_count() != map.size()) throw ContractError("partition and id map sizes differ");
  std::vector<VertexId> order(p.vertex_count());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return map.external(a) < map.external(b); });
  auto out = open_output(path);
  for (VertexId v : order) out << map.external(v) << '\t' << p[v] << '\n';
  finish_output(out, path);
}

Partition parse_partition(std::string_view text, const IdMap& map) {
  constexpr std::uint64_t unset = ~std::uint64_t{0};
  std::vector<std::uint64_t> labels(map.size(), unset);
  LineReader lines(text);
  std::string_view line;
  std::vector<std::string_view> tokens;
  while (lines.next(line)) {
    tokenize(line, tokens);
    if (skippable(tokens)) continue;
    if (tokens.size() != 2) throw ParseError(lines.line_no(), "expected 'vertex<TAB>community'");
    const VertexId v = map.dense(parse_number<ExternalId>(tokens[0], lines.line_no(), "vertex id"));
    const auto c = parse_number<std::uint32_t>(tokens[1], lines.line_no(), "community id");
    if (labels[v] != unset) throw ParseError(lines.line_no(), "vertex listed twice");
    labels[v] = c;
  }
  const auto missing = std::count(labels.begin(), labels.end(), unset);
  if (missing > 0) {
    throw IncompletePartitionError("partition file misses " + std::to_string(missing) + " of " +
                                   std::to_string(map.size()) + " vertices");
  }
  return compact_labels(labels);
}

Partition read_partition(const std::filesystem::path& path, const IdMap& map) {
  return parse_partition(read_text_file(path), map);
}

void write_ordering(const Ordering& order, const IdMap& map, const std::filesystem::path& path) {
  if (order.size() != map.size()) throw ContractError("ordering and id map sizes differ");
  auto out = open_output(path);
  for (VertexId v : order.sequence()) out << map.external(v) << '\n';
  finish_output(out, path);
}

Ordering read_ordering(const std::filesystem::path& path, const IdMap& map) {
  const std::string text = read_text_file(path);
  std::vector<VertexId> sequence;
  LineReader lines(text);
  std::string_view line;
  std::vector<std::string_view> tokens;
  while (lines.next(line)) {
    tokenize(line, tokens);
    if (skippable(tokens)) continue;
    if (tokens.size() != 1) throw ParseError(lines.line_no(), "expected one vertex id");
    sequence.push_back(map.dense(parse_number<ExternalId>(tokens[0], lines.line_no(), "vertex id")));
  }
  if (sequence.size() != map.size()) throw IncompletePartitionError("ordering does not list every vertex");
  return Ordering::from_sequence(sequence);
}

PointFile parse_point_file(std::string_view text) {
  std::vector<ExternalId> ids;
  std::vector<double> coords;
  std::size_t dim = 0;
  LineReader lines(text);
  std::string_view line;
  std::vector<std::string_view> tokens;
  while (lines.next(line)) {
    tokenize(line, tokens);
    if (skippable(tokens)) continue;
    if (tokens.size() < 2) throw ParseError(lines.line_no(), "expected 'id c1 ... cD'");
    if (dim == 0) dim = tokens.size() - 1;
    if (tokens.size() - 1 != dim) {
      throw ParseError(lines.line_no(), "expected " + std::to_string(dim) + " coordinates");
    }
    ids.push_back(parse_number<ExternalId>(tokens[0], lines.line_no(), "point id"));
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const double x = parse_number<double>(tokens[i], lines.line_no(), "coordinate");
      if (!std::isfinite(x)) throw ParseError(lines.line_no(), "non-finite coordinate");
      coords.push_back(x);
    }
  }
  if (ids.empty()) throw EmptyInputError("point file contains no points");
  PointFile out;
  out.points = Eigen::Map<const Eigen::MatrixXd>(coords.data(), static_cast<Eigen::Index>(dim),
                                                 static_cast<Eigen::Index>(ids.size()));
  out.ids = IdMap(std::move(ids));
  return out;
}

PointFile read_point_file(const std::filesystem::path& path) { return parse_point_file(read_text_file(path)); }

}  // namespace graphclust
