#include "ecdkit/spanning.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "ecdkit/errors.hpp"
#include "ecdkit/random.hpp"

namespace ecdkit {

SpanningGraph::SpanningGraph(std::size_t n_nodes, int k, std::vector<Edge> edges)
    : n_nodes_(n_nodes), k_(k), edges_(std::move(edges)), degrees_(n_nodes, 0) {
  for (const Edge& e : edges_) {
    if (e.i >= e.j || e.j >= n_nodes_) throw SizeMismatch("spanning graph edge out of range");
    ++degrees_[e.i];
    ++degrees_[e.j];
  }
}

namespace {

struct Candidate {
  double weight = std::numeric_limits<double>::infinity();
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  std::size_t hi = std::numeric_limits<std::size_t>::max();

  bool reachable() const noexcept { return weight != std::numeric_limits<double>::infinity(); }
  bool operator<(const Candidate& o) const noexcept {
    return std::tie(weight, lo, hi) < std::tie(o.weight, o.lo, o.hi);
  }
};

std::vector<Edge> prim(const DistanceMatrix& d, const EdgeMask* excluded, int layer) {
  const std::size_t n = d.size();
  if (n == 0) throw SizeMismatch("mst: empty distance matrix");
  std::vector<Edge> tree;
  tree.reserve(n - 1);

  std::vector<Candidate> best(n);
  std::vector<bool> in_tree(n, false);

  auto relax = [&](std::size_t from) {
    auto row = d.row(from);
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v] || (excluded && excluded->contains(from, v))) continue;
      const Candidate c{row[v], std::min(from, v), std::max(from, v)};
      if (c < best[v]) best[v] = c;
    }
  };

  in_tree[0] = true;
  relax(0);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in_tree[v] && (pick == n || best[v] < best[pick])) pick = v;
    if (!best[pick].reachable()) {
      std::ostringstream msg;
      msg << "no spanning tree exists";
      if (layer > 0) msg << " for layer " << layer << " (k too large for " << n << " points?)";
      throw DisconnectedError(msg.str(), layer);
    }
    tree.push_back({best[pick].lo, best[pick].hi, best[pick].weight, layer});
    in_tree[pick] = true;
    relax(pick);
  }
  return tree;
}

}  // namespace

std::vector<Edge> mst(const DistanceMatrix& d, const EdgeMask& excluded) {
  if (excluded.size() != d.size()) throw SizeMismatch("mst: exclusion mask size differs from matrix");
  return prim(d, &excluded, 0);
}

std::vector<Edge> mst(const DistanceMatrix& d) { return prim(d, nullptr, 0); }

SpanningGraph kmst(const DistanceMatrix& d, int k) {
  if (k < 1) {
    std::ostringstream msg;
    msg << "k must be at least 1 (got " << k << ")";
    throw InvalidK(msg.str());
  }
  const std::size_t n = d.size();
  EdgeMask used(n);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * (n > 0 ? n - 1 : 0));
  for (int layer = 1; layer <= k; ++layer) {
    for (const Edge& e : prim(d, &used, layer)) {
      used.insert(e.i, e.j);
      edges.push_back(e);
    }
  }
  return SpanningGraph(n, k, std::move(edges));
}

std::vector<std::size_t> neutral_tie_order(std::size_t n_nodes) {
  constexpr std::uint64_t kTieOrderSeed = 0x7469652d6f726465ULL;
  std::vector<std::size_t> order(n_nodes);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(derive_seed(kTieOrderSeed, {static_cast<std::uint64_t>(n_nodes)}));
  for (std::size_t i = n_nodes; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
  return order;
}

SpanningGraph kmst_neutral_ties(const DistanceMatrix& d, int k) {
  const auto order = neutral_tie_order(d.size());
  const SpanningGraph shuffled = kmst(d.select(order), k);
  std::vector<Edge> edges;
  edges.reserve(shuffled.edge_count());
  for (const Edge& e : shuffled.edges()) {
    const std::size_t a = order[e.i], b = order[e.j];
    edges.push_back({std::min(a, b), std::max(a, b), e.weight, e.layer});
  }
  return SpanningGraph(d.size(), k, std::move(edges));
}

double degree_statistic(const SpanningGraph& g) {
  double half_sum = 0.0;
  for (std::size_t deg : g.degrees()) half_sum += static_cast<double>(deg) * static_cast<double>(deg);
  return 0.5 * half_sum - static_cast<double>(g.edge_count());
}

}  // namespace ecdkit
