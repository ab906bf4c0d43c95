#include "tnncert/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tnncert {

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string vertex_name(std::size_t row, std::size_t pos) {
  return "v" + std::to_string(row) + "_" + std::to_string(pos);
}

}  // namespace

std::string render_array_text(const WeightArray& array) {
  std::size_t width = 1;
  for (std::size_t m = 1; m <= array.n(); ++m) {
    for (std::size_t k = 1; k <= m; ++k) width = std::max(width, array.at(m, k).to_string().size());
  }
  std::ostringstream os;
  for (std::size_t m = 1; m <= array.n(); ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      if (k > 1) os << ' ';
      os << pad_left(array.at(m, k).to_string(), width);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_matrix_text(const CobMatrix& matrix) {
  std::size_t width = 1;
  for (std::size_t m = 0; m <= matrix.n(); ++m) {
    for (std::size_t k = 0; k <= matrix.n(); ++k) {
      width = std::max(width, matrix.at(m, k).to_string().size());
    }
  }
  std::ostringstream os;
  for (std::size_t m = 0; m <= matrix.n(); ++m) {
    for (std::size_t k = 0; k <= matrix.n(); ++k) {
      if (k > 0) os << ' ';
      os << pad_left(matrix.at(m, k).to_string(), width);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_network_dot(const WeightArray& array, std::span<const EdgePos> highlight) {
  const std::size_t n = array.n();
  const double step = 72.0;
  auto y_of = [&](std::size_t row) { return static_cast<double>(n - row) * step; };
  auto last_crossing = [&](std::size_t row) { return std::min(row + 1, n); };

  std::ostringstream os;
  os << "digraph staircase {\n";
  os << "  node [shape=point, width=0.06];\n";
  os << "  edge [arrowsize=0.5];\n";
  for (std::size_t r = 0; r <= n; ++r) {
    os << "  s" << r << " [shape=plaintext, label=\"s" << r << "\", pos=\"0," << y_of(r)
       << "!\"];\n";
    os << "  t" << r << " [shape=plaintext, label=\"t" << r << "\", pos=\""
       << static_cast<double>(n + 1) * step << "," << y_of(r) << "!\"];\n";
    for (std::size_t c = 1; c <= last_crossing(r); ++c) {
      os << "  " << vertex_name(r, c) << " [pos=\"" << static_cast<double>(c) * step << ","
         << y_of(r) << "!\"];\n";
    }
  }
  for (std::size_t r = 0; r <= n; ++r) {
    std::string previous = "s" + std::to_string(r);
    for (std::size_t c = 1; c <= last_crossing(r); ++c) {
      os << "  " << previous << " -> " << vertex_name(r, c) << ";\n";
      previous = vertex_name(r, c);
    }
    os << "  " << previous << " -> t" << r << ";\n";
  }
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 1; k <= m; ++k) {
      const Rational& w = array.at(m, k);
      const bool marked =
          std::find(highlight.begin(), highlight.end(), EdgePos{m, k}) != highlight.end();
      os << "  " << vertex_name(m, k) << " -> " << vertex_name(m - 1, k) << " [label=\""
         << w.to_string() << "\"";
      if (marked) os << ", color=red, penwidth=2";
      if (w.is_zero()) os << ", style=dashed";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tnncert
