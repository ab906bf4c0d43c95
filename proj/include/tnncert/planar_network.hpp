#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tnncert/core.hpp"

namespace tnncert {

/// Position [row, col] of a vertical edge, 1 <= col <= row <= n.
struct EdgePos {
  std::size_t row;
  std::size_t col;

  friend bool operator==(const EdgePos&, const EdgePos&) = default;
  friend auto operator<=>(const EdgePos&, const EdgePos&) = default;
};

/// Vertical edge weights of the staircase network.
///
/// Horizontal line r joins source s_r to sink t_r (r = 0..n, s_0 on top) and
/// carries weight 1. Vertical line k (k = 1..n) runs upward from row n to row
/// k-1; its segment from row m to row m-1 is the [m,k] edge. Every path moves
/// right or up, so a path from s_m to t_k climbs m-k times.
class WeightArray {
public:
  explicit WeightArray(std::size_t n);

  std::size_t n() const { return n_; }
  /// n(n+1)/2
  std::size_t size() const { return weights_.size(); }

  const Rational& at(std::size_t row, std::size_t col) const { return weights_[index(row, col)]; }
  Rational& at(std::size_t row, std::size_t col) { return weights_[index(row, col)]; }
  const Rational& at(EdgePos pos) const { return at(pos.row, pos.col); }

  bool valid(std::size_t row, std::size_t col) const {
    return col >= 1 && col <= row && row <= n_;
  }
  bool all_non_negative() const;

  friend bool operator==(const WeightArray&, const WeightArray&) = default;

private:
  std::size_t index(std::size_t row, std::size_t col) const;

  std::size_t n_;
  std::vector<Rational> weights_;
};

/// The triangle headed at [m,k] seen as an instance of A(f,g):
/// weight [m+l1, k+l2] = f_{l2+1} - g_{l1-l2+1} for 0 <= l2 <= l1 <= n-m.
/// Normalized so that g_1 = 0.
struct TriangleInstance {
  std::size_t m;
  std::size_t k;
  std::vector<Rational> f;  // f[0] is f_1
  std::vector<Rational> g;  // g[0] is g_1 == 0

  friend bool operator==(const TriangleInstance&, const TriangleInstance&) = default;
};

/// Vertex-disjoint paths, path j running from s_{sources[j]} to t_{sinks[j]}.
/// Each path is recorded by its vertical edges, bottom to top.
struct PathSystem {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
  std::vector<std::vector<EdgePos>> paths;
};

struct WeightedPathSystem {
  PathSystem system;
  Rational weight;
};

/// A(a,e): w[m,k] = a_k - e_{m-k+1}.
WeightArray build_array(const SequencePair& pair);

/// Path matrix of the staircase network: entry (m,k) sums the weights of all
/// s_m -> t_k paths. Computed column by column; no path enumeration.
CobMatrix path_matrix(const WeightArray& array);

/// Solves for (f,g) with g_1 = 0, or returns nullopt when the triangle headed
/// at [m,k] is not an A(f,g) instance. Throws InputError if [m,k] is invalid.
std::optional<TriangleInstance> triangle_decompose(const WeightArray& array, std::size_t m,
                                                   std::size_t k);

/// Pivot on the zero weight at [m,k]. Within the triangle headed at [m,k],
/// row l becomes (f_1-g_1, f_2-g_{l+1}, f_3-g_l, ..., f_{l+1}-g_2); everything
/// else is unchanged. The path matrix is preserved.
/// Throws PivotError if w[m,k] != 0 or the triangle does not decompose.
WeightArray pivot(const WeightArray& array, std::size_t m, std::size_t k);

/// Largest n accepted by enumerate_disjoint_path_systems.
inline constexpr std::size_t kPathEnumerationMaxN = 10;

/// Every vertex-disjoint path system from {s_i : i in rows} to {t_j : j in
/// cols}, with its product weight. With skip_zero_edges, systems using a
/// zero-weight edge are dropped (they contribute 0 anyway).
std::vector<WeightedPathSystem> enumerate_disjoint_path_systems(const WeightArray& array,
                                                                const MinorSpec& spec,
                                                                bool skip_zero_edges = false);

}  // namespace tnncert
