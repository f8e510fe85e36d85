// Copyright 2026 The Entrobound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entrobound/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Tiny fixed-layout SVG: one panel, linear axes, points or polylines.
class SvgCanvas {
 public:
  SvgCanvas(double xmin, double xmax, double ymin, double ymax)
      : xmin_(xmin), xmax_(xmax), ymin_(ymin), ymax_(ymax) {
    if (xmax_ <= xmin_) xmax_ = xmin_ + 1.0;
    if (ymax_ <= ymin_) ymax_ = ymin_ + 1.0;
  }

  double px(double x) const { return kLeft + (x - xmin_) / (xmax_ - xmin_) * kPlotW; }
  double py(double y) const { return kTop + kPlotH - (y - ymin_) / (ymax_ - ymin_) * kPlotH; }

  static constexpr double kLeft = 70, kTop = 40, kPlotW = 520, kPlotH = 360;
  static constexpr double kWidth = 640, kHeight = 460;

  double xmin_, xmax_, ymin_, ymax_;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

Table make_table(std::vector<std::string> columns, std::size_t rows) {
  Table t;
  t.columns = std::move(columns);
  t.rows.resize(rows);
  return t;
}

int Table::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

std::vector<double> Table::column(const std::string& name) const {
  const int c = column_index(name);
  if (c < 0) fail(ErrorCode::kValidationError, "no column named " + name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[c]);
  return out;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double v : row) {
      if (std::isfinite(v)) {
        r.push_back(v);
      } else {
        r.push_back(nullptr);
      }
    }
    rows.push_back(std::move(r));
  }
  nlohmann::json doc = {{"title", t.title}, {"columns", t.columns}, {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

std::string render_svg(const Table& t) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& row : t.rows) {
    const double x = row[t.plot_x];
    if (!std::isfinite(x)) continue;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    for (const auto& s : t.plot_series) {
      const double y = row[s.column];
      if (!std::isfinite(y)) continue;
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  ymin = std::min(ymin, 0.0);
  const SvgCanvas cv(xmin, xmax, ymin, ymax * 1.05);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << SvgCanvas::kWidth << "\" height=\""
     << SvgCanvas::kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << SvgCanvas::kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\">" << t.title
     << "</text>\n";
  os << "<rect x=\"" << SvgCanvas::kLeft << "\" y=\"" << SvgCanvas::kTop << "\" width=\""
     << SvgCanvas::kPlotW << "\" height=\"" << SvgCanvas::kPlotH
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  // Axis end labels are enough for a sanity view.
  const double base = SvgCanvas::kTop + SvgCanvas::kPlotH;
  os << "<text x=\"" << SvgCanvas::kLeft << "\" y=\"" << base + 16 << "\">"
     << format_double(cv.xmin_) << "</text>\n";
  os << "<text x=\"" << SvgCanvas::kLeft + SvgCanvas::kPlotW << "\" y=\"" << base + 16
     << "\" text-anchor=\"end\">" << format_double(cv.xmax_) << "</text>\n";
  os << "<text x=\"" << SvgCanvas::kLeft - 4 << "\" y=\"" << base << "\" text-anchor=\"end\">"
     << format_double(cv.ymin_) << "</text>\n";
  os << "<text x=\"" << SvgCanvas::kLeft - 4 << "\" y=\"" << SvgCanvas::kTop + 10
     << "\" text-anchor=\"end\">" << format_double(cv.ymax_) << "</text>\n";
  os << "<text x=\"" << SvgCanvas::kLeft + SvgCanvas::kPlotW / 2 << "\" y=\"" << base + 32
     << "\" text-anchor=\"middle\">" << t.columns[t.plot_x] << "</text>\n";

  for (std::size_t k = 0; k < t.plot_series.size(); ++k) {
    const auto& s = t.plot_series[k];
    const char* color = kPalette[k % std::size(kPalette)];
    if (s.style == PlotStyle::kLine) {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& row : t.rows) {
        if (!std::isfinite(row[t.plot_x]) || !std::isfinite(row[s.column])) continue;
        os << cv.px(row[t.plot_x]) << ',' << cv.py(row[s.column]) << ' ';
      }
      os << "\"/>\n";
    } else {
      os << "<g fill=\"" << color << "\" fill-opacity=\"0.5\">\n";
      for (const auto& row : t.rows) {
        if (!std::isfinite(row[t.plot_x]) || !std::isfinite(row[s.column])) continue;
        os << "<circle cx=\"" << cv.px(row[t.plot_x]) << "\" cy=\"" << cv.py(row[s.column])
           << "\" r=\"1.5\"/>\n";
      }
      os << "</g>\n";
    }
    os << "<text x=\"" << SvgCanvas::kLeft + 8 << "\" y=\"" << SvgCanvas::kTop + 16 + 14 * k
       << "\" fill=\"" << color << "\">" << t.columns[s.column] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render(const Table& t, TableFormat format) {
  switch (format) {
    case TableFormat::kCsv: return render_csv(t);
    case TableFormat::kJson: return render_json(t);
    case TableFormat::kSvg: return render_svg(t);
  }
  fail(ErrorCode::kValidationError, "unknown table format");
}

}  // namespace entrobound
