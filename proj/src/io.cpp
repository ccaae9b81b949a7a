#include "rvlb/io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace rvlb {

namespace {

template <typename T>
std::string chars_of(T v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// quote only when the content would break the row structure
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_row(std::string& buf, const std::vector<CsvField>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) buf += ',';
    buf += csv_escape(fields[i].text);
  }
  buf += '\n';
}

}  // namespace

CsvField::CsvField(double v) : text(chars_of(v)) {}
CsvField::CsvField(int v) : text(chars_of(v)) {}
CsvField::CsvField(long v) : text(chars_of(v)) {}
CsvField::CsvField(bool v) : text(v ? "1" : "0") {}

CsvFile::CsvFile(const std::vector<std::string>& header)
    : columns_(header.size()) {
  std::vector<CsvField> fields;
  fields.reserve(header.size());
  for (const auto& h : header) fields.emplace_back(h);
  append_row(buf_, fields);
}

void CsvFile::add_row(const std::vector<CsvField>& fields) {
  if (fields.size() != columns_)
    throw std::invalid_argument("csv row width does not match the header");
  append_row(buf_, fields);
}

namespace {

constexpr int kMarginLeft = 52;
constexpr int kMarginRight = 16;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 42;
constexpr int kLegendWidth = 130;

void append_attr_num(std::string& s, double v) {
  // fixed short decimals keep the file compact and deterministic
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed,
                           2);
  s.append(buf, res.ptr);
}

void tag_rect(std::string& s, double x, double y, double w, double h,
              const std::string& fill) {
  s += "<rect x=\"";
  append_attr_num(s, x);
  s += "\" y=\"";
  append_attr_num(s, y);
  s += "\" width=\"";
  append_attr_num(s, w);
  s += "\" height=\"";
  append_attr_num(s, h);
  s += "\" fill=\"" + fill + "\"/>\n";
}

void tag_text(std::string& s, double x, double y, const std::string& anchor,
              const std::string& body) {
  s += "<text x=\"";
  append_attr_num(s, x);
  s += "\" y=\"";
  append_attr_num(s, y);
  s += "\" text-anchor=\"" + anchor + "\">" + body + "</text>\n";
}

}  // namespace

std::string svg_region_map(const GridLayer& fill, const PointLayer* points,
                           const SvgStyle& style) {
  if (fill.nx <= 0 || fill.ny <= 0 ||
      fill.cells.size() != size_t(fill.nx) * size_t(fill.ny))
    throw std::invalid_argument("grid layer shape mismatch");

  const double plot_w = double(fill.nx) * style.cell_px;
  const double plot_h = double(fill.ny) * style.cell_px;
  const double total_w =
      kMarginLeft + plot_w + kMarginRight + kLegendWidth;
  const double total_h = kMarginTop + plot_h + kMarginBottom;

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"";
  append_attr_num(s, total_w);
  s += "\" height=\"";
  append_attr_num(s, total_h);
  s += "\" viewBox=\"0 0 ";
  append_attr_num(s, total_w);
  s += " ";
  append_attr_num(s, total_h);
  s += "\">\n<style>text{font:11px sans-serif;fill:#333}</style>\n";
  tag_rect(s, 0, 0, total_w, total_h, "#ffffff");
  tag_text(s, kMarginLeft + plot_w / 2, 18, "middle", style.title);

  // raster: one rect per run of equal class within a row
  for (int iy = 0; iy < fill.ny; ++iy) {
    // row iy = 0 sits at the bottom of the plot
    double ypx = kMarginTop + plot_h - double(iy + 1) * style.cell_px;
    int ix = 0;
    while (ix < fill.nx) {
      unsigned char c = fill.cells[size_t(iy) * fill.nx + ix];
      int run = 1;
      while (ix + run < fill.nx &&
             fill.cells[size_t(iy) * fill.nx + ix + run] == c)
        ++run;
      const std::string& color = c < style.class_colors.size()
                                     ? style.class_colors[c]
                                     : std::string("#888888");
      if (color != "none")
        tag_rect(s, kMarginLeft + double(ix) * style.cell_px, ypx,
                 double(run) * style.cell_px, style.cell_px, color);
      ix += run;
    }
  }

  if (points) {
    for (size_t i = 0; i < points->xs.size(); ++i) {
      double fx = (points->xs[i] - fill.x_min) / (fill.x_max - fill.x_min);
      double fy = (points->ys[i] - fill.y_min) / (fill.y_max - fill.y_min);
      if (fx < 0 || fx > 1 || fy < 0 || fy > 1) continue;
      unsigned char c = points->cls[i];
      const std::string& color = c < style.class_colors.size()
                                     ? style.class_colors[c]
                                     : std::string("#000000");
      if (color == "none") continue;
      s += "<circle cx=\"";
      append_attr_num(s, kMarginLeft + fx * plot_w);
      s += "\" cy=\"";
      append_attr_num(s, kMarginTop + (1.0 - fy) * plot_h);
      s += "\" r=\"1.6\" fill=\"" + color + "\"/>\n";
    }
  }

  // frame and ticks
  s += "<rect x=\"";
  append_attr_num(s, kMarginLeft);
  s += "\" y=\"";
  append_attr_num(s, kMarginTop);
  s += "\" width=\"";
  append_attr_num(s, plot_w);
  s += "\" height=\"";
  append_attr_num(s, plot_h);
  s += "\" fill=\"none\" stroke=\"#333\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    double f = t / 4.0;
    double xv = fill.x_min + f * (fill.x_max - fill.x_min);
    double yv = fill.y_min + f * (fill.y_max - fill.y_min);
    char num[32];
    auto rx = std::to_chars(num, num + sizeof num, xv,
                            std::chars_format::fixed, 2);
    tag_text(s, kMarginLeft + f * plot_w, kMarginTop + plot_h + 16, "middle",
             std::string(num, rx.ptr));
    auto ry = std::to_chars(num, num + sizeof num, yv,
                            std::chars_format::fixed, 2);
    tag_text(s, kMarginLeft - 6, kMarginTop + (1.0 - f) * plot_h + 4, "end",
             std::string(num, ry.ptr));
  }
  tag_text(s, kMarginLeft + plot_w / 2, kMarginTop + plot_h + 34, "middle",
           style.x_label);
  tag_text(s, 14, kMarginTop + plot_h / 2, "middle",
           style.y_label);

  double ly = kMarginTop + 8;
  for (size_t c = 0; c < style.class_names.size(); ++c) {
    const std::string& color =
        c < style.class_colors.size() ? style.class_colors[c] : "#888888";
    if (color == "none" || style.class_names[c].empty()) continue;
    tag_rect(s, kMarginLeft + plot_w + 24, ly - 9, 12, 12, color);
    tag_text(s, kMarginLeft + plot_w + 42, ly + 1, "start",
             style.class_names[c]);
    ly += 18;
  }

  s += "</svg>\n";
  return s;
}

std::filesystem::path resolve_output_path(const std::string& filename) {
  std::filesystem::path p(filename);
  if (p.is_absolute()) return p;
  const char* base = std::getenv("RVLB_OUT_DIR");
  if (base && *base) return std::filesystem::path(base) / p;
  return p;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
      throw std::runtime_error("cannot create directory " +
                               path.parent_path().string() + ": " +
                               ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

}  // namespace rvlb
