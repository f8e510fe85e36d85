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

#pragma once

#include <string>
#include <vector>

namespace entrobound {

enum class PlotStyle { kPoints, kLine };

struct PlotSeries {
  int column;
  PlotStyle style;
};

// A rectangular numeric result. The CSV rendering is the artifact of record;
// the plot hint only drives the SVG view.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  int plot_x = 0;
  std::vector<PlotSeries> plot_series;
  std::string title;

  int column_index(const std::string& name) const;  // -1 if absent
  std::vector<double> column(const std::string& name) const;
};

// Columns plus `rows` empty rows to be filled in place.
Table make_table(std::vector<std::string> columns, std::size_t rows = 0);

enum class TableFormat { kCsv, kJson, kSvg };

// Doubles printed with 17 significant digits; NaN as "nan" in CSV and null
// in JSON.
std::string render_csv(const Table& t);
std::string render_json(const Table& t);
std::string render_svg(const Table& t);
std::string render(const Table& t, TableFormat format);

}  // namespace entrobound
