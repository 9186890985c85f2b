#include "psinfo/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace psinfo::io {

namespace {

std::string grid_text(const GridSpec1D& g) {
  return format_real(g.min()) + ":" + format_real(g.max()) + ":" + std::to_string(g.points());
}

void write_header(std::ostream& os, const char* schema, const std::map<std::string, std::string>& metadata) {
  os << "# " << schema << " v" << kSchemaVersion;
  for (const auto& [k, v] : metadata) os << ' ' << k << '=' << v;
  os << '\n';
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw std::runtime_error("field csv line " + std::to_string(line) + ": " + what);
}

double parse_number(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    parse_error(line, "cannot parse number '" + token + "'");
  }
  if (used != token.size()) parse_error(line, "trailing characters in '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

GridSpec1D grid_from_nodes(const std::vector<double>& nodes, std::size_t line, const char* axis) {
  if (nodes.size() < 3 || nodes.size() % 2 == 0) {
    parse_error(line, std::string(axis) + " axis needs an odd number (>= 3) of nodes, got " +
                          std::to_string(nodes.size()));
  }
  const GridSpec1D g(nodes.front(), nodes.back(), static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (std::abs(nodes[i] - g.at(static_cast<Eigen::Index>(i))) > 1e-9 * (1.0 + std::abs(nodes[i]))) {
      parse_error(line, std::string(axis) + " axis is not uniformly spaced");
    }
  }
  return g;
}

std::string quote_csv(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += (c == '\n' ? ' ' : c);
  }
  return out + "\"";
}

struct Rgb {
  unsigned char r, g, b;
  bool operator==(const Rgb&) const = default;
};

Rgb diverging_color(double v, double scale) {
  const double t = scale > 0.0 ? std::clamp(v / scale, -1.0, 1.0) : 0.0;
  auto level = [](double f) { return static_cast<unsigned char>(std::lround(255.0 * f)); };
  if (t >= 0.0) return {255, level(1.0 - t), level(1.0 - t)};
  return {level(1.0 + t), level(1.0 + t), 255};
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_field_csv(std::ostream& os, const PhaseSpaceField& field, const std::map<std::string, std::string>& metadata) {
  auto meta = metadata;
  meta["kind"] = to_string(field.kind);
  meta["grid_x"] = grid_text(field.grid().x);
  meta["grid_p"] = grid_text(field.grid().p);
  write_header(os, kFieldSchema, meta);
  os << "x,p,value\n";
  const GridSpec2D& g = field.grid();
  for (Eigen::Index i = 0; i < g.x.points(); ++i) {
    const std::string x = format_real(g.x.at(i));
    for (Eigen::Index j = 0; j < g.p.points(); ++j) {
      os << x << ',' << format_real(g.p.at(j)) << ',' << format_real(field.values()(i, j)) << '\n';
    }
  }
}

FieldCsv read_field_csv(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) parse_error(lineno, "empty input");
  std::istringstream header(line);
  std::string hash, schema, version;
  header >> hash >> schema >> version;
  if (hash != "#" || schema != kFieldSchema) parse_error(lineno, "missing '# psinfo-field' schema line");
  if (version != "v" + std::to_string(kSchemaVersion)) parse_error(lineno, "unsupported schema version '" + version + "'");
  std::map<std::string, std::string> metadata;
  for (std::string kv; header >> kv;) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) parse_error(lineno, "metadata token '" + kv + "' is not key=value");
    metadata[kv.substr(0, eq)] = kv.substr(eq + 1);
  }

  ++lineno;
  if (!std::getline(is, line) || line != "x,p,value") parse_error(lineno, "expected column header 'x,p,value'");

  std::vector<double> xs, ps, values;
  std::vector<double> row_x, row_p;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 3) parse_error(lineno, "expected 3 columns, got " + std::to_string(cells.size()));
    const double x = parse_number(cells[0], lineno);
    const double p = parse_number(cells[1], lineno);
    const double v = parse_number(cells[2], lineno);
    if (!std::isfinite(v)) parse_error(lineno, "non-finite value");
    if (xs.empty() || xs.back() != x) {
      if (!xs.empty() && !(x > xs.back())) parse_error(lineno, "x values must increase between blocks");
      if (!xs.empty() && row_p.size() % ps.size() != 0) parse_error(lineno, "incomplete p block before new x");
      xs.push_back(x);
    }
    if (xs.size() == 1) {
      if (!ps.empty() && !(p > ps.back())) parse_error(lineno, "p values must increase within a block");
      ps.push_back(p);
    } else {
      const std::size_t j = row_p.size() % ps.size();
      if (p != ps[j]) parse_error(lineno, "p value differs from the first block");
    }
    row_x.push_back(x);
    row_p.push_back(p);
    values.push_back(v);
  }
  if (values.empty()) parse_error(lineno, "no data rows");
  if (values.size() != xs.size() * ps.size()) parse_error(lineno, "row count is not a full x-by-p grid");
  const GridSpec2D grid{grid_from_nodes(xs, lineno, "x"), grid_from_nodes(ps, lineno, "p")};
  Eigen::MatrixXd m(grid.x.points(), grid.p.points());
  for (std::size_t k = 0; k < values.size(); ++k) {
    m(static_cast<Eigen::Index>(k / ps.size()), static_cast<Eigen::Index>(k % ps.size())) = values[k];
  }
  return {std::move(metadata), RealField2D(grid, std::move(m))};
}

void write_survival_csv(std::ostream& os, const SurvivalField1D& s, const std::map<std::string, std::string>& metadata) {
  auto meta = metadata;
  meta["grid"] = grid_text(s.grid);
  write_header(os, kSurvivalSchema, meta);
  os << "threshold,value\n";
  for (Eigen::Index i = 0; i < s.grid.points(); ++i) {
    os << format_real(s.grid.at(i)) << ',' << format_real(s.values(i)) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
  std::string alphas;
  for (int a : table.options.alphas) alphas += (alphas.empty() ? "" : ",") + std::to_string(a);
  write_header(os, kSweepSchema,
               {{"version", table.version},
                {"grid_x", grid_text(table.grid.x)},
                {"grid_p", grid_text(table.grid.p)},
                {"alphas", alphas},
                {"s", format_real(table.options.s)},
                {"threshold_a", "0"},
                {"threshold_b", "0"}});
  const auto registry = measure_registry(table.options);
  os << "n,lambda";
  for (const auto& m : registry) {
    if (m.complex_valued) {
      os << ',' << m.name << "_re," << m.name << "_im";
    } else {
      os << ',' << m.name;
    }
  }
  os << ",error\n";
  for (const auto& row : table.rows) {
    os << row.state.n << ',' << format_real(row.state.lambda);
    for (std::size_t k = 0; k < registry.size(); ++k) {
      const bool cplx = registry[k].complex_valued;
      if (!row.ok()) {
        os << (cplx ? ",," : ",");
        continue;
      }
      const MeasureEntry& e = row.report->entries[k];
      os << ',' << format_real(e.re);
      if (cplx) os << ',' << format_real(e.im);
    }
    os << ',' << (row.ok() ? std::string() : quote_csv(row.error)) << '\n';
  }
}

nlohmann::json bounds_json(const SweepTable& table) {
  using nlohmann::json;
  json rows = json::array();
  std::map<int, json> first_violation;
  bool all_ok = true;
  for (const auto& row : table.rows) {
    json r{{"n", row.state.n}, {"lambda", row.state.lambda}, {"ok", row.ok()}};
    if (!first_violation.contains(row.state.n)) first_violation[row.state.n] = nullptr;
    if (!row.ok()) {
      r["error"] = row.error;
      all_ok = false;
      rows.push_back(std::move(r));
      continue;
    }
    json bounds = json::array();
    bool row_ok = true;
    for (const auto& b : row.report->bounds) {
      bounds.push_back({{"name", b.name},
                        {"inputs", b.inputs},
                        {"lhs", b.check.lhs},
                        {"rhs", b.check.rhs},
                        {"margin", b.check.margin},
                        {"satisfied", b.check.satisfied}});
      row_ok = row_ok && b.check.satisfied;
    }
    r["bounds"] = std::move(bounds);
    r["all_satisfied"] = row_ok;
    if (!row_ok) {
      all_ok = false;
      if (first_violation[row.state.n].is_null()) first_violation[row.state.n] = row.state.lambda;
    }
    rows.push_back(std::move(r));
  }
  json fv = json::object();
  for (const auto& [n, lam] : first_violation) fv[std::to_string(n)] = lam;
  return {{"schema", "psinfo-bounds"},
          {"schema_version", kSchemaVersion},
          {"version", table.version},
          {"grid_x", grid_text(table.grid.x)},
          {"grid_p", grid_text(table.grid.p)},
          {"rows", std::move(rows)},
          {"first_violating_lambda", std::move(fv)},
          {"all_satisfied", all_ok}};
}

ImageFormat image_format_for(const std::string& path) {
  auto ends_with = [&](const std::string& ext) {
    return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".svg")) return ImageFormat::svg;
  if (ends_with(".ppm")) return ImageFormat::ppm;
  throw std::invalid_argument("image path must end in .svg or .ppm: " + path);
}

std::string render_heatmap(const RealField2D& field, ImageFormat format) {
  const Eigen::Index width = field.grid.x.points();
  const Eigen::Index height = field.grid.p.points();
  const double scale = field.values.cwiseAbs().maxCoeff();
  auto pixel = [&](Eigen::Index col, Eigen::Index row) {
    return diverging_color(field.values(col, height - 1 - row), scale);
  };

  std::ostringstream os;
  if (format == ImageFormat::ppm) {
    os << "P6\n" << width << ' ' << height << "\n255\n";
    for (Eigen::Index row = 0; row < height; ++row) {
      for (Eigen::Index col = 0; col < width; ++col) {
        const Rgb c = pixel(col, row);
        os.put(static_cast<char>(c.r)).put(static_cast<char>(c.g)).put(static_cast<char>(c.b));
      }
    }
    return os.str();
  }

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\" shape-rendering=\"crispEdges\">\n";
  char color[8];
  for (Eigen::Index row = 0; row < height; ++row) {
    // Runs of equal color collapse into one rect.
    for (Eigen::Index col = 0; col < width;) {
      const Rgb c = pixel(col, row);
      Eigen::Index end = col + 1;
      while (end < width && pixel(end, row) == c) ++end;
      std::snprintf(color, sizeof color, "#%02x%02x%02x", c.r, c.g, c.b);
      os << "<rect x=\"" << col << "\" y=\"" << row << "\" width=\"" << (end - col)
         << "\" height=\"1\" fill=\"" << color << "\"/>\n";
      col = end;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace psinfo::io
