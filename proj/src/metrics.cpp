#include "graphclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphclust/error.hpp"

namespace graphclust {

namespace {

void require_weight(const UndirectedGraph& g) {
  if (!(g.total_weight() > 0.0)) throw UndefinedModularityError("modularity is undefined for a graph with m = 0");
}

void require_isolated_move(const UndirectedGraph& g, const CommunityState& s, VertexId i, CommunityId c) {
  if (i >= g.vertex_count()) throw IndexError("vertex " + std::to_string(i) + " out of range");
  if (c >= s.capacity()) throw IndexError("community " + std::to_string(c) + " out of range");
  if (!s.isolated(i)) throw PreconditionError("vertex " + std::to_string(i) + " is not isolated");
  if (g.self_loop(i) != 0.0) throw PreconditionError("vertex " + std::to_string(i) + " carries a self-loop");
  if (s.community_of(i) == c) throw PreconditionError("target community already holds the vertex");
  require_weight(g);
}

}  // namespace

double modularity(const UndirectedGraph& g, const Partition& p) {
  require_weight(g);
  if (p.vertex_count() != g.vertex_count()) throw ContractError("partition does not cover the graph");
  const double two_m = 2.0 * g.total_weight();
  std::vector<double> in(p.community_count(), 0.0);
  std::vector<double> tot(p.community_count(), 0.0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const CommunityId c = p[v];
    tot[c] += g.k(v);
    // Summed per vertex like k_v, so the one-community case cancels exactly.
    double internal = g.self_loop(v);
    for (const auto& nb : g.neighbors(v)) {
      if (p[nb.id] == c) internal += nb.weight;
    }
    in[c] += internal;
  }
  double q = 0.0;
  for (std::size_t c = 0; c < in.size(); ++c) q += in[c] / two_m - (tot[c] / two_m) * (tot[c] / two_m);
  return q;
}

CommunityState::CommunityState(const UndirectedGraph& g, const Partition& p)
    : g_(&g),
      community_of_(p.assignment()),
      sigma_tot_(std::max(g.vertex_count(), p.community_count()), 0.0),
      sigma_in_(sigma_tot_.size(), 0.0),
      size_(sigma_tot_.size(), 0) {
  if (p.vertex_count() != g.vertex_count()) throw ContractError("partition does not cover the graph");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const CommunityId c = community_of_[v];
    sigma_tot_[c] += g.k(v);
    sigma_in_[c] += g.self_loop(v) + link_weight(v, c);
    ++size_[c];
  }
}

double CommunityState::link_weight(VertexId v, CommunityId c) const {
  double w = 0.0;
  for (const auto& nb : g_->neighbors(v)) {
    if (community_of_[nb.id] == c) w += nb.weight;
  }
  return w;
}

void CommunityState::move(VertexId v, CommunityId target) {
  move(v, target, link_weight(v, community_of_[v]), link_weight(v, target));
}

void CommunityState::move(VertexId v, CommunityId target, double links_from, double links_to) {
  const CommunityId from = community_of_[v];
  if (from == target) return;
  const double k = g_->k(v);
  const double loop = g_->self_loop(v);
  sigma_tot_[from] -= k;
  sigma_in_[from] -= 2.0 * links_from + loop;
  --size_[from];
  sigma_tot_[target] += k;
  sigma_in_[target] += 2.0 * links_to + loop;
  ++size_[target];
  community_of_[v] = target;
}

Partition CommunityState::partition() const { return Partition::from_labels(std::span<const CommunityId>(community_of_)); }

double CommunityState::modularity() const {
  require_weight(*g_);
  const double two_m = 2.0 * g_->total_weight();
  double q = 0.0;
  for (std::size_t c = 0; c < sigma_tot_.size(); ++c) {
    if (size_[c] == 0) continue;
    q += sigma_in_[c] / two_m - (sigma_tot_[c] / two_m) * (sigma_tot_[c] / two_m);
  }
  return q;
}

CommunityState CommunityState::recomputed() const {
  CommunityState fresh = *this;
  std::fill(fresh.sigma_tot_.begin(), fresh.sigma_tot_.end(), 0.0);
  std::fill(fresh.sigma_in_.begin(), fresh.sigma_in_.end(), 0.0);
  std::fill(fresh.size_.begin(), fresh.size_.end(), 0);
  for (VertexId v = 0; v < g_->vertex_count(); ++v) {
    const CommunityId c = community_of_[v];
    fresh.sigma_tot_[c] += g_->k(v);
    fresh.sigma_in_[c] += g_->self_loop(v) + link_weight(v, c);
    ++fresh.size_[c];
  }
  return fresh;
}

double insertion_gain(double links_to_c, double sigma_tot_c, double k_i, double m) noexcept {
  return links_to_c / m - sigma_tot_c * k_i / (2.0 * m * m);
}

double delta_modularity_eq3(const UndirectedGraph& g, const CommunityState& s, VertexId i, CommunityId c) {
  require_isolated_move(g, s, i, c);
  const double two_m = 2.0 * g.total_weight();
  const double in = s.sigma_in(c);
  const double tot = s.sigma_tot(c);
  const double k = g.k(i);
  const double k_in = s.link_weight(i, c);
  const double after = (in + k_in) / two_m - ((tot + k) / two_m) * ((tot + k) / two_m);
  const double before = in / two_m - (tot / two_m) * (tot / two_m) - (k / two_m) * (k / two_m);
  return after - before;
}

double delta_modularity_true(const UndirectedGraph& g, const CommunityState& s, VertexId i, CommunityId c) {
  require_isolated_move(g, s, i, c);
  return insertion_gain(s.link_weight(i, c), s.sigma_tot(c), g.k(i), g.total_weight());
}

double removal_gain(const CommunityState& s, VertexId i) {
  const auto& g = s.graph();
  require_weight(g);
  const CommunityId c = s.community_of(i);
  const double k = g.k(i);
  return -insertion_gain(s.link_weight(i, c), s.sigma_tot(c) - k, k, g.total_weight());
}

double partition_entropy(const Partition& p, std::size_t n) {
  if (p.vertex_count() != n) throw ContractError("partition does not cover n vertices");
  if (n == 0) return 0.0;
  double h = 0.0;
  for (std::size_t size : p.block_sizes()) {
    const double frac = static_cast<double>(size) / static_cast<double>(n);
    h -= frac * std::log(frac);
  }
  return h;
}

double variation_of_information(const Partition& base, const Partition& refined) {
  if (!refined.refines(base)) throw RefinementError("second partition is not a refinement of the first");
  // H(refined) - H(base) regrouped per refined block as -(|r|/n) ln(|r|/|b(r)|); every term is
  // non-negative, so rounding cannot push the result below zero.
  const auto n = static_cast<double>(refined.vertex_count());
  std::vector<VertexId> representative(refined.community_count());
  for (VertexId v = 0; v < refined.vertex_count(); ++v) representative[refined[v]] = v;
  double vi = 0.0;
  for (CommunityId r = 0; r < refined.community_count(); ++r) {
    const auto size = static_cast<double>(refined.block_sizes()[r]);
    const auto parent = static_cast<double>(base.block_sizes()[base[representative[r]]]);
    vi -= size / n * std::log(size / parent);
  }
  return vi;
}

}  // namespace graphclust
