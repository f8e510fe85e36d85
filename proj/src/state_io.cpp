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

#include "entrobound/state_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "entrobound/error.hpp"

namespace entrobound {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& what) { fail(ErrorCode::kValidationError, what); }

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) schema("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

int positive_int(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 4096) {
    schema(std::string("field \"") + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

double real(const json& v, const char* what) {
  if (!v.is_number()) schema(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) schema(std::string(what) + " must be finite");
  return x;
}

Complex entry(const json& v) {
  if (v.is_number()) return {real(v, "matrix entry"), 0.0};
  if (!v.is_array() || v.size() != 2) schema("complex entries must be [re, im]");
  return {real(v[0], "real part"), real(v[1], "imaginary part")};
}

CMatrix matrix(const json& v, int dim) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim) {
    std::ostringstream os;
    os << "matrix must have " << dim << " rows";
    schema(os.str());
  }
  CMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = v[i];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      std::ostringstream os;
      os << "matrix row " << i << " must have " << dim << " entries";
      schema(os.str());
    }
    for (int j = 0; j < dim; ++j) m(i, j) = entry(row[j]);
  }
  return m;
}

ParsedState state_from(const json& doc) {
  const int da = positive_int(doc, "dim_a");
  const int db = positive_int(doc, "dim_b");
  const json& kind = field(doc, "kind");
  if (kind == "qc") {
    const json& blocks = field(doc, "blocks");
    if (!blocks.is_array() || static_cast<int>(blocks.size()) != db) {
      schema("\"blocks\" must be an array of dim_b entries");
    }
    std::vector<QCBlock> parts;
    for (const json& b : blocks) {
      parts.push_back(
          {real(field(b, "weight"), "block weight"), make_density(matrix(field(b, "matrix"), da))});
    }
    QCState s(std::move(parts));
    DensityOperator rho = qc_embed(s);
    return {da, db, std::move(rho), std::move(s)};
  }
  if (kind == "dense") {
    return {da, db, make_density(matrix(field(doc, "matrix"), da * db)), std::nullopt};
  }
  schema("\"kind\" must be \"qc\" or \"dense\"");
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParseError, e.what());
  }
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_json(const QCState& s) {
  json blocks = json::array();
  for (const auto& b : s.blocks()) {
    blocks.push_back({{"weight", b.weight}, {"matrix", matrix_json(b.conditional.matrix())}});
  }
  return {{"dim_a", s.dim_a()}, {"dim_b", s.dim_b()}, {"kind", "qc"}, {"blocks", blocks}};
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

ParsedState parse_state(std::string_view text) { return state_from(parse_document(text)); }

StatePair parse_state_pair(std::string_view text) {
  const json doc = parse_document(text);
  ParsedState rho = state_from(field(doc, "rho"));
  ParsedState sigma = state_from(field(doc, "sigma"));
  if (rho.dim_a != sigma.dim_a || rho.dim_b != sigma.dim_b) {
    fail(ErrorCode::kDimensionMismatch, "rho and sigma have different dimensions");
  }
  return {std::move(rho), std::move(sigma)};
}

std::string state_to_json(const QCState& s) { return state_json(s).dump(2) + "\n"; }

std::string state_pair_to_json(const QCState& rho, const QCState& sigma) {
  return json{{"rho", state_json(rho)}, {"sigma", state_json(sigma)}}.dump(2) + "\n";
}

std::string report_to_json(const SaturationReport& r) {
  json spectrum = json::array();
  for (double v : r.spectrum_m) spectrum.push_back(v);
  const json doc = {
      {"class", std::string(pair_class_name(r.pair_class))},
      {"invertible", r.invertible},
      {"c", optional_number(r.c_value)},
      {"spectrum_m", spectrum},
      {"commutator_residual", optional_number(r.commutator_residual)},
      {"riccati_residual", optional_number(r.riccati_residual)},
      {"lower_gap", r.gaps.lower_gap},
      {"upper_gap", r.gaps.upper_gap},
      {"trace_distance", r.distances.trace_distance},
      {"fidelity", r.distances.fidelity},
      {"angular_distance", r.distances.angular},
  };
  return doc.dump(2) + "\n";
}

}  // namespace entrobound
