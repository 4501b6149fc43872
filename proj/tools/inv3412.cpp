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

// inv3412: generating functions, shape catalogs, brute-force tables, and
// verification for involutions counted by occurrences of 3412.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "inv3412/cells.hpp"
#include "inv3412/enumerate.hpp"
#include "inv3412/errors.hpp"
#include "inv3412/genfun.hpp"
#include "inv3412/json_io.hpp"
#include "inv3412/kernel.hpp"
#include "inv3412/oracle.hpp"
#include "inv3412/render.hpp"
#include "inv3412/validate.hpp"

namespace {

using namespace inv3412;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

constexpr int kSoftMaxR = 7;
constexpr int kDeskMaxN = 13;

struct RunConfig {
  std::string command;
  int r_max = 2;
  int order = kDefaultSeriesOrder;
  int n_max = 12;
  unsigned threads = default_threads();
  std::string format = "text";
  std::string style = "canonical";
  std::string output;
  bool golden = false;
  bool parity = false;
  bool allow_large_r = false;
  bool allow_large_n = false;
  int scan_extra = 4;
  bool validate = false;
  std::string shape;
  std::string inject_fault;

  // Thread count is left out: artifacts must not depend on it.
  Json to_json() const {
    Json j{{"command", command}, {"r", r_max},       {"n", n_max},
           {"order", order},     {"format", format}, {"style", style}};
    if (command == "table") {
      j["golden"] = golden;
      j["parity"] = parity;
    }
    if (command == "verify") j["scan_extra"] = scan_extra;
    if (command == "classify") {
      j["shape"] = shape;
      j["validate"] = validate;
    }
    if (!inject_fault.empty()) j["inject_fault"] = inject_fault;
    return j;
  }

  EnumerationLimits limits() const {
    return {allow_large_n ? kDefaultMaxN : kDeskMaxN};
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_r(const RunConfig& cfg, int min_r) {
  if (cfg.r_max < min_r) {
    throw UsageError("--r must be at least " + std::to_string(min_r));
  }
  if (cfg.r_max > kSoftMaxR && !cfg.allow_large_r) {
    throw UsageError("--r above " + std::to_string(kSoftMaxR) +
                     " needs --allow-large-r");
  }
}

void check_n(const RunConfig& cfg) {
  if (cfg.n_max < 0) throw UsageError("--n must be nonnegative");
  if (cfg.n_max > kDeskMaxN && !cfg.allow_large_n) {
    throw ResourceError("--n above " + std::to_string(kDeskMaxN) +
                        " needs --allow-large-n");
  }
  check_size(cfg.n_max, cfg.limits());
}

void emit(const RunConfig& cfg, const std::string& body, const Json* meta_data = nullptr) {
  if (cfg.output.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + cfg.output);
  if (cfg.format == "text") {
    out << "# config: " << cfg.to_json().dump() << "\n";
    out << "# content_hash: " << content_hash(body) << "\n";
  }
  out << body;
  if (cfg.format == "csv") {
    std::ofstream meta(cfg.output + ".meta.json", std::ios::binary);
    if (!meta) throw UsageError("cannot write " + cfg.output + ".meta.json");
    Json j{{"config", cfg.to_json()}, {"content_hash", content_hash(body)}};
    if (meta_data) j["summary"] = *meta_data;
    meta << j.dump(2) << "\n";
  }
}

std::string json_body(const RunConfig& cfg, Json data) {
  return envelope(cfg.to_json(), std::move(data)).dump(2) + "\n";
}

// shape:m,l:class
void apply_fault(ShapeCatalog& catalog, const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  const auto comma = spec.find(',', c1 == std::string::npos ? 0 : c1);
  if (c1 == std::string::npos || c2 == std::string::npos || comma == std::string::npos ||
      comma > c2) {
    throw UsageError("--inject-fault expects shape:m,l:class");
  }
  const Involution rho = Involution::parse(spec.substr(0, c1));
  int m = 0, l = 0;
  try {
    m = std::stoi(spec.substr(c1 + 1, comma - c1 - 1));
    l = std::stoi(spec.substr(comma + 1, c2 - comma - 1));
  } catch (const std::exception&) {
    throw UsageError("--inject-fault: bad cell index");
  }
  const CellClass cls = cell_class_from_string(spec.substr(c2 + 1));
  for (auto& rec : catalog.shapes) {
    if (rec.shape != rho) continue;
    CellGrid grid = rec.grid;
    grid.set(m, l, cls);
    rec = shape_record_with_grid(rho, std::move(grid));
    std::cerr << "warning: fault injected into " << rho.to_string() << " at C"
              << m << "," << l << "\n";
    return;
  }
  throw UsageError("--inject-fault: shape " + rho.to_string() + " not in catalog");
}

ShapeCatalog build_catalog(const RunConfig& cfg, int r) {
  ShapeCatalog catalog = r >= 1 ? shape_catalog(r, cfg.threads, {kDefaultMaxN})
                                : ShapeCatalog{0, {}};
  if (!cfg.inject_fault.empty()) apply_fault(catalog, cfg.inject_fault);
  return catalog;
}

std::string join_series(const SeriesQ& s, int upto) {
  std::string out;
  for (int n = 0; n <= upto; ++n) {
    if (n) out += ", ";
    out += s[n].get_str();
  }
  return out;
}

std::string grid_text(const CellGrid& grid) {
  // rows printed top value row first, like the cell pictures
  std::string out;
  for (int m = grid.size(); m >= 1; --m) {
    out += "    ";
    for (int l = 1; l <= grid.size(); ++l) {
      switch (grid.at(m, l)) {
        case CellClass::kInfeasible: out += '.'; break;
        case CellClass::kFree: out += 'F'; break;
        case CellClass::kDiagonalDecreasing: out += 'd'; break;
        case CellClass::kDecreasing: out += 'D'; break;
      }
    }
    out += "\n";
  }
  return out;
}

std::string record_line(const ShapeRecord& rec) {
  std::ostringstream os;
  os << rec.shape.to_string() << "  s=" << rec.s << " c=" << rec.c << " f=" << rec.f
     << " dd=" << rec.dd << " d=" << rec.d << " parity21=" << rec.parity21;
  return os.str();
}

// ---- genfun

int cmd_genfun(const RunConfig& cfg) {
  check_r(cfg, 0);
  if (cfg.order < 0) throw UsageError("--order must be nonnegative");
  GeneratingFunctions gf(build_catalog(cfg, cfg.r_max), cfg.order);
  std::vector<GFResult> results;
  for (int r = 0; r <= cfg.r_max; ++r) {
    for (GFKind kind : {GFKind::kI, GFKind::kN, GFKind::kE, GFKind::kO}) {
      results.push_back(gf.result(kind, r));
    }
  }
  const RenderStyle style =
      cfg.style == "paper" ? RenderStyle::kPaper : RenderStyle::kCanonical;
  if (cfg.format == "json") {
    Json data = Json::array();
    for (const auto& g : results) data.push_back(to_json(g));
    emit(cfg, json_body(cfg, Json{{"results", std::move(data)}}));
  } else if (cfg.format == "csv") {
    emit(cfg, to_csv(results, cfg.order));
  } else {
    std::string out;
    for (const auto& g : results) {
      const Rendered text = render_closed(g, style);
      if (text.fell_back) std::cerr << "warning: " << text.warning << "\n";
      out += text.text + "\n  series: " + join_series(g.series, cfg.order) + "\n";
    }
    emit(cfg, out);
  }
  return kExitOk;
}

// ---- shapes

int cmd_shapes(const RunConfig& cfg) {
  check_r(cfg, 1);
  const ShapeCatalog catalog = build_catalog(cfg, cfg.r_max);
  if (cfg.format == "json") {
    emit(cfg, json_body(cfg, to_json(catalog)));
  } else if (cfg.format == "csv") {
    std::string out = csv_row({"shape", "s", "c", "f", "dd", "d", "parity21"});
    for (const auto& rec : catalog.shapes) {
      out += csv_row({rec.shape.to_string(), std::to_string(rec.s), std::to_string(rec.c),
                      std::to_string(rec.f), std::to_string(rec.dd),
                      std::to_string(rec.d), std::to_string(rec.parity21)});
    }
    emit(cfg, out);
  } else {
    std::string out = std::to_string(catalog.shapes.size()) +
                      " kernel shapes with capacity 1.." + std::to_string(cfg.r_max) + "\n";
    for (const auto& rec : catalog.shapes) out += record_line(rec) + "\n" + grid_text(rec.grid);
    emit(cfg, out);
  }
  return kExitOk;
}

// ---- table

std::string table_text(const std::string& name, const std::vector<std::vector<std::int64_t>>& rows,
                       const std::vector<std::int64_t>& overflow, int max_r, int max_n) {
  std::ostringstream os;
  os << name << " (rows r, columns n)\n" << std::setw(5) << "r\\n";
  for (int n = 0; n <= max_n; ++n) os << std::setw(8) << n;
  os << "\n";
  for (int r = 0; r <= max_r; ++r) {
    os << std::setw(5) << r;
    for (int n = 0; n <= max_n; ++n) os << std::setw(8) << rows[r][n];
    os << "\n";
  }
  os << std::setw(5) << (">" + std::to_string(max_r));
  for (int n = 0; n <= max_n; ++n) os << std::setw(8) << overflow[n];
  os << "\n";
  return os.str();
}

int cmd_table(const RunConfig& cfg) {
  check_r(cfg, 0);
  check_n(cfg);
  const BruteTables t = brute_tables(cfg.n_max, cfg.r_max, cfg.threads, cfg.limits());
  std::vector<TableMismatch> diffs;
  if (cfg.golden) {
    diffs = diff_against_published(t, false);
    if (cfg.parity) {
      auto more = diff_against_published(t, true);
      diffs.insert(diffs.end(), more.begin(), more.end());
    }
    for (const auto& d : diffs) std::cerr << "golden diff: " << describe(d) << "\n";
    std::cerr << "golden: " << diffs.size() << " diffs against the published tables"
              << " (compared r <= " << std::min(cfg.r_max, golden::kTableMaxR)
              << ", n <= " << std::min(cfg.n_max, golden::kTableMaxN) << ")\n";
  }
  if (cfg.format == "json") {
    Json data{{"counts", to_json(t.all)}};
    if (cfg.parity) data["parity"] = to_json(t.parity);
    if (cfg.golden) {
      Json d = Json::array();
      for (const auto& m : diffs) d.push_back(to_json(m));
      data["golden_diffs"] = std::move(d);
    }
    emit(cfg, json_body(cfg, std::move(data)));
  } else if (cfg.format == "csv") {
    Json summary;
    if (cfg.golden) summary = Json{{"golden_diffs", diffs.size()}};
    emit(cfg, to_csv(t.all, cfg.parity ? &t.parity : nullptr),
         cfg.golden ? &summary : nullptr);
  } else {
    std::string out = table_text("involutions by occurrences of 3412", t.all.counts,
                                 t.all.overflow, cfg.r_max, cfg.n_max);
    if (cfg.parity) {
      out += table_text("even involutions", t.parity.even, t.parity.overflow_even,
                        cfg.r_max, cfg.n_max);
      out += table_text("odd involutions", t.parity.odd, t.parity.overflow_odd,
                        cfg.r_max, cfg.n_max);
    }
    emit(cfg, out);
  }
  return diffs.empty() ? kExitOk : kExitVerify;
}

// ---- verify

int cmd_verify(const RunConfig& cfg) {
  check_r(cfg, 0);
  check_n(cfg);
  if (cfg.order < cfg.n_max) throw UsageError("--order must be at least --n");
  bool ok = true;
  std::ostringstream text;
  Json data;

  const ShapeCatalog catalog = build_catalog(cfg, std::max(cfg.r_max, 1));
  const BruteTables brute = brute_tables(cfg.n_max, cfg.r_max, cfg.threads, cfg.limits());

  // column sums
  int column_failures = 0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    std::int64_t sum = brute.all.overflow[n];
    for (int r = 0; r <= cfg.r_max; ++r) sum += brute.all.at(r, n);
    if (static_cast<std::uint64_t>(sum) != involution_count(n)) ++column_failures;
  }
  ok &= column_failures == 0;
  text << "column sums: " << (column_failures ? "FAIL" : "ok") << "\n";
  data["column_sums_ok"] = column_failures == 0;

  // pipeline against brute force
  GeneratingFunctions gf(catalog, cfg.order);
  const SeriesReport series = verify_series_vs_brute(gf, brute, cfg.r_max, cfg.n_max);
  ok &= series.ok();
  text << "series vs brute force: " << (series.i_checked + series.n_checked - static_cast<int>(series.mismatches.size()))
       << " of " << series.i_checked + series.n_checked << " cells matched\n";
  Json mism = Json::array();
  for (const auto& m : series.mismatches) {
    text << "  mismatch " << describe(m) << "\n";
    mism.push_back(to_json(m));
  }
  data["series"] = Json{{"checked", series.i_checked + series.n_checked},
                        {"mismatches", std::move(mism)}};

  // classifier
  std::vector<ShapeRecord> scanned;
  std::vector<int> bounds;
  for (const auto& rec : catalog.shapes) {
    if (rec.c > cfg.r_max || rec.s > cfg.n_max) continue;
    scanned.push_back(rec);
    bounds.push_back(std::min(rec.s + cfg.scan_extra, cfg.n_max));
  }
  const auto reports = validate_catalog(scanned, bounds, cfg.threads, cfg.limits());
  int failed_shapes = 0;
  Json shapes = Json::array();
  for (const auto& rep : reports) {
    shapes.push_back(to_json(rep));
    if (rep.ok()) continue;
    ++failed_shapes;
    text << "  classification of " << rep.shape.to_string() << " FAILED\n";
    for (const auto& v : rep.violations) text << "    " << describe(v) << "\n";
  }
  ok &= failed_shapes == 0;
  text << "classification: " << reports.size() - failed_shapes << " of " << reports.size()
       << " shapes validated\n";
  data["classification"] = std::move(shapes);

  // printed formulas (reported only)
  Json formulas = Json::array();
  for (int r = 0; r <= std::min(cfg.r_max, kSoftMaxR); ++r) {
    for (const auto& d : verify_paper_formulas(gf, r)) {
      formulas.push_back(to_json(d));
      text << "printed formula " << describe(d) << "\n";
    }
  }
  data["printed_formulas"] = std::move(formulas);

  if (cfg.golden) {
    auto diffs = diff_against_published(brute, false);
    auto more = diff_against_published(brute, true);
    diffs.insert(diffs.end(), more.begin(), more.end());
    ok &= diffs.empty();
    Json d = Json::array();
    for (const auto& m : diffs) {
      text << "  published table diff " << describe(m) << "\n";
      d.push_back(to_json(m));
    }
    text << "published tables: " << diffs.size() << " diffs\n";
    data["golden_diffs"] = std::move(d);
  }

  data["ok"] = ok;
  text << (ok ? "PASS" : "FAIL") << "\n";
  if (cfg.format == "json") {
    emit(cfg, json_body(cfg, std::move(data)));
  } else {
    emit(cfg, text.str());
  }
  return ok ? kExitOk : kExitVerify;
}

// ---- classify

int cmd_classify(const RunConfig& cfg) {
  Involution rho;
  try {
    rho = Involution::parse(cfg.shape);
  } catch (const ArgumentError& e) {
    throw UsageError(e.what());
  }
  const ShapeRecord rec = make_shape_record(rho);
  std::optional<ValidationReport> report;
  if (cfg.validate) {
    check_n(cfg);
    if (is_base_shape(rho)) throw UsageError("base shapes have no kernel to validate");
    report = validate_classification(rec, std::max(cfg.n_max, rec.s), cfg.threads,
                                     cfg.limits());
  }
  if (cfg.format == "json") {
    Json data{{"record", to_json(rec)}};
    if (report) data["validation"] = to_json(*report);
    emit(cfg, json_body(cfg, std::move(data)));
  } else {
    std::string out = record_line(rec) + "\n" + grid_text(rec.grid);
    if (report) {
      out += "validation up to n=" + std::to_string(report->n_max) + ": " +
             (report->ok() ? "pass" : "FAIL") + " (" + std::to_string(report->scanned) +
             " involutions with this kernel)\n";
      for (const auto& v : report->violations) out += "  " + describe(v) + "\n";
    }
    emit(cfg, out);
  }
  return report && !report->ok() ? kExitVerify : kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--r", cfg.r_max, "largest occurrence count r")
      ->envname("INV3412_R")
      ->capture_default_str();
  sub->add_option("--threads", cfg.threads, "worker threads")
      ->envname("INV3412_THREADS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")
      ->envname("INV3412_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "output file (default stdout)")
      ->envname("INV3412_OUTPUT");
  sub->add_flag("--allow-large-r", cfg.allow_large_r, "permit r above 7");
  sub->add_option("--inject-fault", cfg.inject_fault)
      ->group("");  // hidden: shape:m,l:class relabels one cell
}

void add_n(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n_max, "largest length n for enumeration")
      ->envname("INV3412_N")
      ->capture_default_str();
  sub->add_flag("--allow-large-n", cfg.allow_large_n, "permit n up to 16");
}

void add_order(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--order", cfg.order, "series truncation order")
      ->envname("INV3412_ORDER")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{
      "Involutions counted by occurrences of 3412: exact generating functions,\n"
      "kernel shape catalogs, brute-force tables, and cross-verification.\n"
      "Options take values from flags, then INV3412_* environment variables,\n"
      "then defaults. Exit codes: 0 ok, 1 verification failure, 2 usage error,\n"
      "3 resource cap."};
  app.require_subcommand(1);

  auto* genfun = app.add_subcommand("genfun", "closed forms and series of I_r, N_r, E_r, O_r");
  add_common(genfun, cfg);
  add_order(genfun, cfg);
  genfun->add_option("--style", cfg.style, "closed-form text style")
      ->envname("INV3412_STYLE")
      ->check(CLI::IsMember({"canonical", "paper"}))
      ->capture_default_str();

  auto* shapes = app.add_subcommand("shapes", "kernel shape catalog for capacity 1..r");
  add_common(shapes, cfg);

  auto* verify = app.add_subcommand("verify", "pipeline, classifier, and printed formulas against brute force");
  add_common(verify, cfg);
  add_n(verify, cfg);
  add_order(verify, cfg);
  verify->add_option("--scan-extra", cfg.scan_extra,
                     "classifier scan covers lengths s..s+extra (capped by --n)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_flag("--golden", cfg.golden, "also compare with the published tables");

  auto* table = app.add_subcommand("table", "brute-force count tables");
  add_common(table, cfg);
  add_n(table, cfg);
  table->add_flag("--golden", cfg.golden, "diff against the published tables");
  table->add_flag("--parity", cfg.parity, "split counts by inversion parity");

  auto* classify = app.add_subcommand("classify", "cell classification of one shape");
  add_common(classify, cfg);
  add_n(classify, cfg);
  classify->add_option("shape", cfg.shape, "involution in one-line notation, e.g. 3412")
      ->required();
  classify->add_flag("--validate", cfg.validate,
                     "scan involutions up to --n that have this kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (genfun->parsed()) {
      cfg.command = "genfun";
      return cmd_genfun(cfg);
    }
    if (shapes->parsed()) {
      cfg.command = "shapes";
      return cmd_shapes(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
    if (table->parsed()) {
      cfg.command = "table";
      return cmd_table(cfg);
    }
    cfg.command = "classify";
    return cmd_classify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  }
}
