#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ecdkit/metricspace.hpp"

namespace ecdkit {

inline constexpr int kDefaultK = 10;

struct Edge {
  std::size_t i;  // i < j
  std::size_t j;
  double weight;
  int layer;      // 1-based tree index within a k-MST; 0 for a bare MST

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Symmetric N x N membership mask over node pairs.
class EdgeMask {
 public:
  explicit EdgeMask(std::size_t n_nodes) : n_(n_nodes), bits_(n_nodes * n_nodes, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool contains(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void insert(std::size_t i, std::size_t j) {
    bits_[i * n_ + j] = 1;
    bits_[j * n_ + i] = 1;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

/// Edge multiset of a k-MST plus per-node degrees.
class SpanningGraph {
 public:
  /// Throws SizeMismatch for out-of-range or non-normalized (i >= j) edges.
  SpanningGraph(std::size_t n_nodes, int k, std::vector<Edge> edges);

  std::size_t n_nodes() const noexcept { return n_nodes_; }
  int k() const noexcept { return k_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

 private:
  std::size_t n_nodes_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

/// Dense Prim from node 0 over the complete graph minus `excluded`. Among
/// equal-weight cut edges the lexicographically smallest (i, j) wins.
/// Throws DisconnectedError if no spanning tree exists. Edges carry layer 0.
std::vector<Edge> mst(const DistanceMatrix& d, const EdgeMask& excluded);
std::vector<Edge> mst(const DistanceMatrix& d);

/// Union of k edge-disjoint MSTs, built greedily: layer l is the MST of the
/// complete graph with layers 1..l-1 removed.
SpanningGraph kmst(const DistanceMatrix& d, int k = kDefaultK);

/// kmst computed on a fixed pseudo-random reordering of the nodes (it
/// depends only on N) and mapped back to the original indices. Tied
/// distances are then resolved independently of where each set sits in the
/// pooled order; for tie-free input the edge set equals kmst(d, k).
SpanningGraph kmst_neutral_ties(const DistanceMatrix& d, int k = kDefaultK);

/// The node order used by kmst_neutral_ties: order[p] is the original index
/// placed at position p.
std::vector<std::size_t> neutral_tie_order(std::size_t n_nodes);

/// C = 1/2 sum_i deg(i)^2 - |G|, the number of edge pairs sharing a node.
double degree_statistic(const SpanningGraph& g);

}  // namespace ecdkit
