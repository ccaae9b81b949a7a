#pragma once

#include <filesystem>
#include <string>
#include <vector>

// Deterministic text outputs. CSV numbers go through std::to_chars, so the
// decimal separator is always '.' and the representation is the shortest
// round-trip form, independent of locale and thread count. SVG maps are
// self-contained (inline styles, no external assets) with axes in λ units.

namespace rvlb {

struct CsvField {
  std::string text;
  CsvField(double v);
  CsvField(int v);
  CsvField(long v);
  CsvField(bool v);  // rendered as 1 / 0
  CsvField(const char* s) : text(s) {}
  CsvField(std::string s) : text(std::move(s)) {}
};

// Accumulates rows in memory; the header is emitted first, rows use '\n'.
class CsvFile {
 public:
  explicit CsvFile(const std::vector<std::string>& header);
  void add_row(const std::vector<CsvField>& fields);
  const std::string& text() const { return buf_; }

 private:
  std::string buf_;
  size_t columns_;
};

// Raster of small class ids on a rectangular parameter window, row-major,
// row iy = 0 at y_min (the SVG writer flips it so y grows upward).
struct GridLayer {
  int nx = 0, ny = 0;
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  std::vector<unsigned char> cells;
};

// Scatter overlay, same coordinates as the grid.
struct PointLayer {
  std::vector<double> xs, ys;
  std::vector<unsigned char> cls;
};

struct SvgStyle {
  std::string title;
  std::string x_label = "Vx / lambda";
  std::string y_label = "Vy / lambda";
  std::vector<std::string> class_names;   // legend entries by class id
  std::vector<std::string> class_colors;  // CSS color per class, "none" skips
  int cell_px = 6;
};

// Renders the grid as merged row runs (one <rect> per run of equal class)
// plus an optional point overlay, axes, ticks and a legend.
std::string svg_region_map(const GridLayer& fill, const PointLayer* points,
                           const SvgStyle& style);

// Prepends $RVLB_OUT_DIR to relative paths when the variable is set.
std::filesystem::path resolve_output_path(const std::string& filename);

// Creates parent directories as needed. Throws std::runtime_error on
// failure.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace rvlb
