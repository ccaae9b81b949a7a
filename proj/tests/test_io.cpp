#include <doctest.h>

#include <clocale>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "rvlb/io.hpp"

using namespace rvlb;

namespace {

size_t count_substr(const std::string& hay, const std::string& needle) {
  size_t n = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++n;
    pos += needle.size();
  }
  return n;
}

}  // namespace

TEST_CASE("csv numbers are locale independent and round-trip short") {
  // a comma-decimal locale must not leak into the output
  std::setlocale(LC_ALL, "de_DE.UTF-8");
  CHECK(CsvField(0.1).text == "0.1");
  CHECK(CsvField(1.0).text == "1");
  CHECK(CsvField(-0.25).text == "-0.25");
  CHECK(CsvField(12345).text == "12345");
  CHECK(CsvField(true).text == "1");
  CHECK(CsvField(false).text == "0");
  CHECK(CsvField(0.9282032302755091).text == "0.9282032302755091");
  std::setlocale(LC_ALL, "C");
}

TEST_CASE("csv layout: header first, newline rows, width enforced") {
  CsvFile csv({"a", "b", "c"});
  csv.add_row({1.5, "x", true});
  csv.add_row({-2.0, "with,comma", false});
  CHECK(csv.text() ==
        "a,b,c\n"
        "1.5,x,1\n"
        "-2,\"with,comma\",0\n");
  CHECK_THROWS_AS(csv.add_row({1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("svg raster merges runs of equal class per row") {
  GridLayer g;
  g.nx = 6;
  g.ny = 2;
  g.x_min = -1.5;
  g.x_max = 1.5;
  g.y_min = -1.5;
  g.y_max = 1.5;
  // bottom row: one run of six; top row: three runs (2+2+2)
  g.cells = {1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1};
  SvgStyle style;
  style.title = "runs";
  style.class_names = {"unstable", "stable"};
  style.class_colors = {"#d94343", "#3a7bd5"};
  std::string svg = svg_region_map(g, nullptr, style);
  // background + frame + 2 legend swatches + 1 run + 3 runs
  CHECK(count_substr(svg, "<rect") == 2 + 2 + 1 + 3);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("href") == std::string::npos);        // no external assets
  CHECK(svg.find("http://www.w3.org/2000/svg") != std::string::npos);
}

TEST_CASE("svg point overlay draws circles in plot coordinates") {
  GridLayer g;
  g.nx = 4;
  g.ny = 4;
  g.x_min = -1.0;
  g.x_max = 1.0;
  g.y_min = -1.0;
  g.y_max = 1.0;
  g.cells.assign(16, 0);
  PointLayer pts;
  pts.xs = {0.0, 0.5, 3.0};  // the last one is outside and must be dropped
  pts.ys = {0.0, -0.5, 0.0};
  pts.cls = {1, 1, 1};
  SvgStyle style;
  style.title = "overlay";
  style.class_names = {"", "sample"};
  style.class_colors = {"none", "#222222"};
  std::string svg = svg_region_map(g, &pts, style);
  CHECK(count_substr(svg, "<circle") == 2);
}

TEST_CASE("output path honours the directory variable") {
  setenv("RVLB_OUT_DIR", "/tmp/rvlb_io_test_dir", 1);
  CHECK(resolve_output_path("x.csv") ==
        std::filesystem::path("/tmp/rvlb_io_test_dir/x.csv"));
  CHECK(resolve_output_path("/abs/x.csv") ==
        std::filesystem::path("/abs/x.csv"));
  unsetenv("RVLB_OUT_DIR");
  CHECK(resolve_output_path("x.csv") == std::filesystem::path("x.csv"));

  auto p = std::filesystem::path("/tmp/rvlb_io_test_dir/sub/file.txt");
  write_text_file(p, "payload");
  std::ifstream in(p);
  std::string got((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  CHECK(got == "payload");
  std::filesystem::remove_all("/tmp/rvlb_io_test_dir");
}
