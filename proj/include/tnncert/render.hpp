#pragma once

#include <span>
#include <string>

#include "tnncert/core.hpp"
#include "tnncert/planar_network.hpp"

namespace tnncert {

/// Compact triangular layout, one array row per line, right-aligned columns.
std::string render_array_text(const WeightArray& array);

/// Right-aligned (n+1)x(n+1) grid.
std::string render_matrix_text(const CobMatrix& matrix);

/// Graphviz digraph of the staircase network with pinned coordinates
/// (render with `neato -n` or `dot -Kneato`). Sources s_0..s_n run top to
/// bottom on the left, sinks t_0..t_n on the right; vertical edges carry
/// their exact weight as label. Edges in `highlight` are drawn red and bold.
std::string render_network_dot(const WeightArray& array,
                               std::span<const EdgePos> highlight = {});

}  // namespace tnncert
