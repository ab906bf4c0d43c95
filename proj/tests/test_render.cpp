#include <doctest.h>

#include <regex>

#include "support/fixtures.hpp"
#include "tnncert/render.hpp"

using namespace tnncert;
using namespace tnncert::testing;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("array text") {
  CHECK(render_array_text(bad_array()) ==
        " 1\n"
        " 2 -2\n"
        " 9 -1 -7\n"
        "10  6 -6 -9\n");
  CHECK(render_array_text(WeightArray(0)).empty());
}

TEST_CASE("matrix text") {
  CHECK(render_matrix_text(CobMatrix::identity(1)) == "1 0\n0 1\n");
  const std::string text = render_matrix_text(bad_matrix());
  CHECK(count(text, "\n") == 5);
  CHECK(text.find("180  32   4   1   1") != std::string::npos);
}

TEST_CASE("dot layout") {
  const std::string dot = render_network_dot(good_initial_array());
  CHECK(dot.rfind("digraph", 0) == 0);
  // 21 vertical edges plus (row crossings + 1) horizontal edges per row.
  std::size_t horizontal = 0;
  for (std::size_t r = 0; r <= 6; ++r) horizontal += std::min<std::size_t>(r + 1, 6) + 1;
  CHECK(count(dot, " -> ") == 21 + horizontal);
  CHECK(count(dot, "label=\"") - 14 == 21);  // 14 terminal labels
  CHECK(dot.find("v3_1 -> v2_1 [label=\"0\", style=dashed]") != std::string::npos);
  CHECK(dot.find("v4_1 -> v3_1 [label=\"-4\"]") != std::string::npos);
  // s_0 on top.
  CHECK(dot.find("s0 [shape=plaintext, label=\"s0\", pos=\"0,432!\"]") != std::string::npos);
  CHECK(dot.find("s6 [shape=plaintext, label=\"s6\", pos=\"0,0!\"]") != std::string::npos);
  CHECK(count(dot, "color=red") == 0);
}

TEST_CASE("dot highlight") {
  const std::vector<EdgePos> marks{{2, 2}, {1, 1}};
  const std::string dot = render_network_dot(bad_array(), marks);
  CHECK(count(dot, "color=red") == 2);
  CHECK(dot.find("v2_2 -> v1_2 [label=\"-2\", color=red, penwidth=2]") != std::string::npos);
  CHECK(std::regex_search(dot, std::regex(R"(v1_1 -> v0_1 \[label="1", color=red)")));
}
