#include "tnncert/planar_network.hpp"

#include <algorithm>

namespace tnncert {

WeightArray::WeightArray(std::size_t n) : n_(n), weights_(n * (n + 1) / 2) {}

std::size_t WeightArray::index(std::size_t row, std::size_t col) const {
  if (!valid(row, col)) {
    throw InputError("array position [" + std::to_string(row) + "," + std::to_string(col) +
                     "] invalid for n=" + std::to_string(n_));
  }
  return row * (row - 1) / 2 + (col - 1);
}

bool WeightArray::all_non_negative() const {
  return std::none_of(weights_.begin(), weights_.end(),
                      [](const Rational& w) { return w.sign() < 0; });
}

WeightArray build_array(const SequencePair& pair) {
  WeightArray array(pair.n());
  for (std::size_t m = 1; m <= pair.n(); ++m) {
    for (std::size_t k = 1; k <= m; ++k) array.at(m, k) = pair.a(k) - pair.e(m - k + 1);
  }
  return array;
}

CobMatrix path_matrix(const WeightArray& array) {
  const std::size_t n = array.n();
  // reach(m, r): total weight of partial paths from s_m currently on row r,
  // after the vertical lines processed so far.
  CobMatrix reach = CobMatrix::identity(n);
  for (std::size_t col = 1; col <= n; ++col) {
    // Line `col` spans rows n..col-1; climb it bottom-up so a path can take
    // several consecutive [.,col] edges.
    for (std::size_t r = n; r-- > col - 1;) {
      const Rational& w = array.at(r + 1, col);
      if (w.is_zero()) continue;
      for (std::size_t m = r + 1; m <= n; ++m) {
        if (!reach.at(m, r + 1).is_zero()) reach.at(m, r) += w * reach.at(m, r + 1);
      }
    }
  }
  return reach;
}

std::optional<TriangleInstance> triangle_decompose(const WeightArray& array, std::size_t m,
                                                   std::size_t k) {
  if (!array.valid(m, k)) {
    throw InputError("triangle head [" + std::to_string(m) + "," + std::to_string(k) +
                     "] invalid");
  }
  const std::size_t len = array.n() - m + 1;
  TriangleInstance t{m, k, std::vector<Rational>(len), std::vector<Rational>(len)};
  // Diagonal fixes f (with g_1 = 0), first column then fixes g.
  for (std::size_t l = 0; l < len; ++l) t.f[l] = array.at(m + l, k + l);
  for (std::size_t l = 1; l < len; ++l) t.g[l] = t.f[0] - array.at(m + l, k);
  for (std::size_t l1 = 2; l1 < len; ++l1) {
    for (std::size_t l2 = 1; l2 < l1; ++l2) {
      if (array.at(m + l1, k + l2) != t.f[l2] - t.g[l1 - l2]) return std::nullopt;
    }
  }
  return t;
}

WeightArray pivot(const WeightArray& array, std::size_t m, std::size_t k) {
  if (!array.valid(m, k)) throw PivotError("pivot position out of range");
  if (!array.at(m, k).is_zero()) {
    throw PivotError("pivot at [" + std::to_string(m) + "," + std::to_string(k) +
                     "] needs a zero weight, found " + array.at(m, k).to_string());
  }
  const auto t = triangle_decompose(array, m, k);
  if (!t) {
    throw PivotError("triangle headed at [" + std::to_string(m) + "," + std::to_string(k) +
                     "] is not an A(f,g) instance");
  }
  WeightArray out = array;
  const auto& f = t->f;
  const auto& g = t->g;
  for (std::size_t l = 1; m + l <= array.n(); ++l) {
    out.at(m + l, k) = f[0] - g[0];
    // f_{j+1} - g_{l-j+2}, 1-based; in 0-based storage f[j] - g[l-j+1].
    for (std::size_t j = 1; j <= l; ++j) out.at(m + l, k + j) = f[j] - g[l - j + 1];
  }
  return out;
}

namespace {

struct Grid {
  // Vertex (row, pos): pos 0 is the source, pos n+1 the sink, 1..n are the
  // crossings with the vertical lines.
  std::size_t n;
  std::vector<char> used;

  explicit Grid(std::size_t n_) : n(n_), used((n_ + 1) * (n_ + 2), 0) {}
  char& at(std::size_t row, std::size_t pos) { return used[row * (n + 2) + pos]; }
  std::size_t last_crossing(std::size_t row) const { return std::min(row + 1, n); }
};

// Vertices visited by the path from s_source whose climbs happen at the
// given columns, listed bottom to top.
std::vector<std::pair<std::size_t, std::size_t>> path_vertices(const Grid& grid,
                                                               std::size_t source,
                                                               const std::vector<std::size_t>& cols) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t row = source;
  std::size_t pos = 0;
  out.emplace_back(row, pos);
  for (std::size_t c : cols) {
    for (++pos; pos <= c; ++pos) out.emplace_back(row, pos);
    pos = c;
    --row;
    out.emplace_back(row, pos);
  }
  for (++pos; pos <= grid.last_crossing(row); ++pos) out.emplace_back(row, pos);
  out.emplace_back(row, grid.n + 1);
  return out;
}

// All non-decreasing climb sequences for s_source -> t_sink.
void climb_sequences(std::size_t row, std::size_t sink, std::size_t min_col,
                     std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  if (row == sink) {
    out.push_back(current);
    return;
  }
  for (std::size_t c = min_col; c <= row; ++c) {
    current.push_back(c);
    climb_sequences(row - 1, sink, c, current, out);
    current.pop_back();
  }
}

struct Enumerator {
  const WeightArray& array;
  const MinorSpec& spec;
  bool skip_zero_edges;
  Grid grid;
  std::vector<std::vector<std::vector<std::size_t>>> candidates;
  std::vector<std::vector<EdgePos>> chosen;
  std::vector<WeightedPathSystem> out;

  void run(std::size_t j, const Rational& weight) {
    if (j == spec.size()) {
      out.push_back({PathSystem{spec.rows, spec.cols, chosen}, weight});
      return;
    }
    const std::size_t source = spec.rows[j];
    for (const auto& cols : candidates[j]) {
      Rational w = weight;
      std::vector<EdgePos> edges;
      bool zero = false;
      for (std::size_t step = 0; step < cols.size(); ++step) {
        const EdgePos e{source - step, cols[step]};
        edges.push_back(e);
        if (array.at(e).is_zero()) zero = true;
        w *= array.at(e);
      }
      if (zero && skip_zero_edges) continue;
      const auto vertices = path_vertices(grid, source, cols);
      const bool clash = std::any_of(vertices.begin(), vertices.end(),
                                     [&](const auto& v) { return grid.at(v.first, v.second); });
      if (clash) continue;
      for (const auto& v : vertices) grid.at(v.first, v.second) = 1;
      chosen.push_back(std::move(edges));
      run(j + 1, w);
      chosen.pop_back();
      for (const auto& v : vertices) grid.at(v.first, v.second) = 0;
    }
  }
};

}  // namespace

std::vector<WeightedPathSystem> enumerate_disjoint_path_systems(const WeightArray& array,
                                                                const MinorSpec& spec,
                                                                bool skip_zero_edges) {
  if (array.n() > kPathEnumerationMaxN) {
    throw SizeGuardError("path-system enumeration limited to n <= " +
                         std::to_string(kPathEnumerationMaxN));
  }
  spec.validate();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec.rows[i] > array.n() || spec.cols[i] > array.n()) {
      throw InputError("path-system endpoints out of range: " + to_string(spec));
    }
  }

  Enumerator en{array, spec, skip_zero_edges, Grid(array.n()), {}, {}, {}};
  for (std::size_t j = 0; j < spec.size(); ++j) {
    // Planarity forces sources and sinks to pair up in order.
    std::vector<std::vector<std::size_t>> seqs;
    if (spec.cols[j] <= spec.rows[j]) {
      std::vector<std::size_t> current;
      climb_sequences(spec.rows[j], spec.cols[j], 1, current, seqs);
    }
    if (seqs.empty()) return {};
    en.candidates.push_back(std::move(seqs));
  }
  en.run(0, Rational(1));
  return std::move(en.out);
}

}  // namespace tnncert
