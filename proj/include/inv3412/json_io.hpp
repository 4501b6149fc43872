// Copyright 2026 The inv3412 Authors.
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

// JSON and CSV forms of catalogs, generating functions, and count tables,
// plus the envelope every artifact is written in:
//   {"config": {...}, "content_hash": "fnv1a64:<16 hex>", "data": ...}
// where the hash covers the compact dump of "data".

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "inv3412/cells.hpp"
#include "inv3412/errors.hpp"
#include "inv3412/genfun.hpp"
#include "inv3412/oracle.hpp"
#include "inv3412/render.hpp"
#include "inv3412/validate.hpp"

namespace inv3412 {

using Json = nlohmann::json;

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string content_hash(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string("fnv1a64:") + buf;
}

inline Json envelope(Json config, Json data) {
  const std::string hash = content_hash(data.dump());
  return Json{{"config", std::move(config)},
              {"content_hash", hash},
              {"data", std::move(data)}};
}

// ---- shapes

inline Json to_json(const CellGrid& grid) {
  Json rows = Json::array();
  for (int m = 1; m <= grid.size(); ++m) {
    Json row = Json::array();
    for (int l = 1; l <= grid.size(); ++l) row.push_back(to_string(grid.at(m, l)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const ShapeRecord& rec) {
  Json shape = Json::array();
  for (int v : rec.shape.values()) shape.push_back(v);
  return Json{{"shape", std::move(shape)}, {"s", rec.s},   {"c", rec.c},
              {"f", rec.f},                {"dd", rec.dd}, {"d", rec.d},
              {"parity21", rec.parity21},  {"grid", to_json(rec.grid)}};
}

inline Json to_json(const ShapeCatalog& catalog) {
  Json shapes = Json::array();
  for (const auto& rec : catalog.shapes) shapes.push_back(to_json(rec));
  return shapes;
}

// Reads a record back; the parameters are recomputed from the grid and must
// agree with the stored ones.
inline ShapeRecord shape_record_from_json(const Json& j) {
  try {
    const Involution rho(Perm(j.at("shape").get<std::vector<int>>()));
    const auto& rows = j.at("grid");
    const int s = rho.size();
    if (static_cast<int>(rows.size()) != s) throw ArgumentError("grid size");
    CellGrid grid(s);
    for (int m = 1; m <= s; ++m) {
      const auto& row = rows.at(static_cast<size_t>(m - 1));
      if (static_cast<int>(row.size()) != s) throw ArgumentError("grid row size");
      for (int l = 1; l <= s; ++l) {
        grid.set(m, l, cell_class_from_string(
                           row.at(static_cast<size_t>(l - 1)).get<std::string>()));
      }
    }
    ShapeRecord rec = shape_record_with_grid(rho, std::move(grid));
    if (rec.s != j.at("s").get<int>() || rec.c != j.at("c").get<int>() ||
        rec.f != j.at("f").get<int>() || rec.dd != j.at("dd").get<int>() ||
        rec.d != j.at("d").get<int>() ||
        rec.parity21 != j.at("parity21").get<int>()) {
      throw ArgumentError("stored parameters disagree with the grid of " +
                          rho.to_string());
    }
    return rec;
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed shape record: ") + e.what());
  }
}

// ---- generating functions

inline Json series_json(const SeriesQ& s, int upto) {
  Json out = Json::array();
  for (int n = 0; n <= upto; ++n) out.push_back(s[n].get_str());
  return out;
}

inline Json to_json(const GFResult& g) {
  const Rendered paper = render_closed(g, RenderStyle::kPaper);
  return Json{{"r", g.r},
              {"kind", to_string(g.kind)},
              {"closed_canonical", closed_expression(g)},
              {"closed_paper", paper.fell_back ? Json(nullptr) : Json(paper.text)},
              {"series", series_json(g.series, g.series.order())},
              {"order", g.series.order()}};
}

// ---- tables

inline Json to_json(const CountTable& t) {
  return Json{{"max_n", t.max_n},
              {"max_r", t.max_r},
              {"counts", t.counts},
              {"overflow", t.overflow}};
}

inline Json to_json(const ParityTable& t) {
  return Json{{"max_n", t.max_n},         {"max_r", t.max_r},
              {"even", t.even},           {"odd", t.odd},
              {"overflow_even", t.overflow_even},
              {"overflow_odd", t.overflow_odd}};
}

inline Json to_json(const TableMismatch& m) {
  return Json{{"table", m.table}, {"r", m.r}, {"n", m.n},
              {"expected", m.expected}, {"actual", m.actual}};
}

inline Json to_json(const FormulaDiff& d) {
  Json j{{"kind", to_string(d.kind)}, {"r", d.r}, {"status", to_string(d.status)},
         {"exact", d.exact}};
  if (d.status == DiffStatus::kMismatch) {
    j["first_n"] = d.first_n;
    j["pipeline"] = d.expected;
    j["printed"] = d.printed;
  }
  if (!d.message.empty()) j["message"] = d.message;
  return j;
}

inline Json to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json j{{"check", v.check}, {"detail", v.detail}};
    j["witness"] = v.witness ? Json(v.witness->to_string()) : Json(nullptr);
    violations.push_back(std::move(j));
  }
  return Json{{"shape", r.shape.to_string()}, {"n_max", r.n_max},
              {"scanned", r.scanned}, {"ok", r.ok()},
              {"violations", std::move(violations)}};
}

// ---- CSV

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

inline std::string csv_header(int max_n) {
  std::vector<std::string> h{"series", "r"};
  for (int n = 0; n <= max_n; ++n) h.push_back(std::to_string(n));
  return csv_row(h);
}

namespace detail {
inline void csv_int_row(std::string& out, const std::string& series,
                        const std::string& r, const std::vector<std::int64_t>& v) {
  std::vector<std::string> row{series, r};
  for (auto x : v) row.push_back(std::to_string(x));
  out += csv_row(row);
}
}  // namespace detail

// Rows I,0.. I,max_r then I,>max_r (overflow); with parity also E and O rows.
inline std::string to_csv(const CountTable& all, const ParityTable* parity) {
  std::string out = csv_header(all.max_n);
  const std::string over = ">" + std::to_string(all.max_r);
  for (int r = 0; r <= all.max_r; ++r) {
    detail::csv_int_row(out, "I", std::to_string(r), all.counts[r]);
  }
  detail::csv_int_row(out, "I", over, all.overflow);
  if (parity) {
    for (int r = 0; r <= parity->max_r; ++r) {
      detail::csv_int_row(out, "E", std::to_string(r), parity->even[r]);
    }
    detail::csv_int_row(out, "E", over, parity->overflow_even);
    for (int r = 0; r <= parity->max_r; ++r) {
      detail::csv_int_row(out, "O", std::to_string(r), parity->odd[r]);
    }
    detail::csv_int_row(out, "O", over, parity->overflow_odd);
  }
  return out;
}

inline std::string to_csv(const std::vector<GFResult>& results, int max_n) {
  std::string out = csv_header(max_n);
  for (const auto& g : results) {
    std::vector<std::string> row{to_string(g.kind), std::to_string(g.r)};
    for (int n = 0; n <= max_n; ++n) row.push_back(g.series[n].get_str());
    out += csv_row(row);
  }
  return out;
}

}  // namespace inv3412
