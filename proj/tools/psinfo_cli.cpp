// psinfo: phase-space distributions and information measures for the quartic oscillator.
//
//   psinfo field  --kind wigner --n 1 --lambda 0.0001 --out out/ --format csv,svg
//   psinfo sweep  --n 0,1 --lambda 0:0.3:0.05 --out out/
//   psinfo bounds --n 0 --lambda 0,0.5,1,2 --out out/
//   psinfo render --in out/wigner_n1.csv --out out/wigner_n1.ppm

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "psinfo/errors.hpp"
#include "psinfo/io.hpp"
#include "psinfo/phasespace.hpp"
#include "psinfo/report.hpp"
#include "psinfo/survival.hpp"

namespace fs = std::filesystem;
using namespace psinfo;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kPartial = 2, kInvariant = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " value '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw UsageError(std::string("invalid ") + what + " value '" + s + "'");
  return v;
}

int to_int(const std::string& s, const char* what) {
  const double v = to_double(s, what);
  if (v != std::floor(v)) throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  return static_cast<int>(v);
}

double tidy(double v) { return std::round(v * 1e12) / 1e12; }

// "a,b,c" or "start:stop:step".
std::vector<double> parse_lambda_list(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("lambda range must be start:stop:step");
    const double start = to_double(parts[0], "lambda");
    const double stop = to_double(parts[1], "lambda");
    const double step = to_double(parts[2], "lambda step");
    if (!(step > 0.0) || stop < start) throw UsageError("lambda range needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long k = 0; k < count; ++k) out.push_back(tidy(start + static_cast<double>(k) * step));
  } else {
    for (const auto& item : split_list(text)) out.push_back(to_double(item, "lambda"));
  }
  if (out.empty()) throw UsageError("lambda list is empty");
  for (double l : out) {
    if (l < 0.0) throw UsageError("lambda must be >= 0");
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(to_int(item, what));
  if (out.empty()) throw UsageError(std::string(what) + " list is empty");
  return out;
}

GridSpec1D parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("grid must be min:max:points");
  try {
    return GridSpec1D(to_double(parts[0], "grid min"), to_double(parts[1], "grid max"), to_int(parts[2], "grid points"));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::set<std::string> parse_formats(const std::string& text, const std::set<std::string>& allowed) {
  std::set<std::string> out;
  for (const auto& f : split_list(text)) {
    if (!allowed.contains(f)) throw UsageError("unsupported format '" + f + "' for this command");
    out.insert(f);
  }
  if (out.empty()) throw UsageError("no output format selected");
  return out;
}

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const fs::path probe = dir / ".psinfo_write_probe";
  {
    std::ofstream os(probe);
    if (!os) throw UsageError("output directory is not writable: " + dir.string());
  }
  fs::remove(probe, ec);
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw std::runtime_error("failed writing " + path.string());
}

std::string stem_for(FieldKind kind, const OscillatorSpec& spec) {
  return to_string(kind) + "_n" + std::to_string(spec.n) + "_lambda" + io::format_real(spec.lambda);
}

void warn_if_nonperturbative(const std::vector<double>& lambdas) {
  for (double l : lambdas) {
    if (l > OscillatorSpec::kPerturbativeLimit) {
      std::cerr << "warning: lambda=" << l << " is outside the perturbative regime (lambda <= "
                << OscillatorSpec::kPerturbativeLimit << ")\n";
    }
  }
}

struct CommonArgs {
  std::string grid = "-8:8:513";
  std::string out = ".";
  double s = 1.0;
  std::string alphas = "2,4";
  double tol = 1e-4;

  GridSpec2D grid_spec() const {
    const GridSpec1D g = parse_grid(grid);
    return {g, g};
  }
  ReportOptions options() const {
    ReportOptions o;
    o.alphas = parse_int_list(alphas, "alpha");
    o.s = s;
    o.mi_tolerance = tol;
    try {
      o.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return o;
  }
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--grid", a.grid, "Grid for both axes as min:max:points (odd points)")->capture_default_str();
  cmd->add_option("--out", a.out, "Output directory")->capture_default_str();
  cmd->add_option("--s", a.s, "Husimi smoothing parameter")->capture_default_str();
  cmd->add_option("--alpha", a.alphas, "Even Renyi orders, comma separated")->capture_default_str();
  cmd->add_option("--tol", a.tol, "Mutual-information cross-check tolerance")->capture_default_str();
}

int run_field(const CommonArgs& common, const std::string& kind_text, int n, double lambda,
              const std::string& formats_text, bool survival) {
  FieldKind kind;
  try {
    kind = parse_field_kind(kind_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const OscillatorSpec spec{n, lambda};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const GridSpec2D grid = common.grid_spec();
  const ReportOptions options = common.options();
  const auto formats = parse_formats(formats_text, {"csv", "svg", "ppm"});
  const fs::path dir(common.out);
  prepare_output_dir(dir);
  warn_if_nonperturbative({lambda});

  const Wavefunction psi = oscillator_state(spec, Space::position, grid.x);
  PhaseSpaceField field = wigner(psi, grid);
  if (kind == FieldKind::husimi) field = husimi_from_wigner(field, options.s);

  const std::string stem = stem_for(kind, spec);
  const std::map<std::string, std::string> meta{
      {"n", std::to_string(n)}, {"lambda", io::format_real(lambda)}, {"s", io::format_real(options.s)}};
  std::ostringstream csv;
  io::write_field_csv(csv, field, meta);
  if (formats.contains("csv")) write_file(dir / (stem + ".csv"), csv.str());
  if (formats.contains("svg")) write_file(dir / (stem + ".svg"), io::render_heatmap(field.field, io::ImageFormat::svg));
  if (formats.contains("ppm")) write_file(dir / (stem + ".ppm"), io::render_heatmap(field.field, io::ImageFormat::ppm));

  if (survival) {
    const MarginalPair m = marginals(field);
    std::ostringstream sx, sp, sa;
    io::write_survival_csv(sx, survival_1d(m.rho_x), {{"axis", "x"}, {"kind", to_string(kind)}});
    io::write_survival_csv(sp, survival_1d(m.rho_p), {{"axis", "p"}, {"kind", to_string(kind)}});
    // s(a, b) along b at the threshold a closest to 0.
    const SurvivalField2D s2 = survival_2d(field);
    Eigen::Index ia = 0;
    for (Eigen::Index i = 0; i < grid.x.points(); ++i) {
      if (std::abs(grid.x.at(i)) < std::abs(grid.x.at(ia))) ia = i;
    }
    const SurvivalField1D slice{grid.p, s2.values.row(ia).transpose()};
    io::write_survival_csv(sa, slice, {{"axis", "b"}, {"kind", to_string(kind)}, {"a", io::format_real(grid.x.at(ia))}});
    write_file(dir / (stem + "_survival_x.csv"), sx.str());
    write_file(dir / (stem + "_survival_p.csv"), sp.str());
    write_file(dir / (stem + "_survival_ab.csv"), sa.str());
  }

  std::cout << "field " << stem << ": min " << field.values().minCoeff() << " max " << field.values().maxCoeff()
            << " -> " << dir.string() << '\n';
  return kOk;
}

SweepTable run_table(const CommonArgs& common, const std::string& n_text, const std::string& lambda_text) {
  const std::vector<int> ns = parse_int_list(n_text, "n");
  for (int n : ns) {
    if (n < 0) throw UsageError("n must be >= 0");
  }
  const std::vector<double> lambdas = parse_lambda_list(lambda_text);
  const GridSpec2D grid = common.grid_spec();
  const ReportOptions options = common.options();
  prepare_output_dir(common.out);
  warn_if_nonperturbative(lambdas);
  try {
    return sweep(ns, lambdas, grid, options, default_thread_count());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void report_failures(const SweepTable& t) {
  for (const auto& row : t.rows) {
    if (!row.ok()) std::cerr << "row " << row.state.describe() << " failed: " << row.error << '\n';
  }
}

int run_sweep(const CommonArgs& common, const std::string& n_text, const std::string& lambda_text,
              const std::string& formats_text) {
  const auto formats = parse_formats(formats_text, {"csv", "json"});
  const SweepTable table = run_table(common, n_text, lambda_text);
  const fs::path dir(common.out);
  if (formats.contains("csv")) {
    std::ostringstream os;
    io::write_sweep_csv(os, table);
    write_file(dir / "sweep.csv", os.str());
  }
  if (formats.contains("json")) write_file(dir / "bounds_summary.json", io::bounds_json(table).dump(2) + "\n");
  report_failures(table);
  std::cout << "sweep: " << table.rows.size() << " rows, " << table.failures() << " failed -> " << dir.string() << '\n';
  return table.failures() == 0 ? kOk : kPartial;
}

int run_bounds(const CommonArgs& common, const std::string& n_text, const std::string& lambda_text) {
  const SweepTable table = run_table(common, n_text, lambda_text);
  const nlohmann::json j = io::bounds_json(table);
  write_file(fs::path(common.out) / "bounds.json", j.dump(2) + "\n");
  report_failures(table);
  for (const auto& row : table.rows) {
    if (!row.ok()) continue;
    for (const auto& b : row.report->bounds) {
      if (!b.check.satisfied) {
        std::cout << "violated: " << row.state.describe() << ' ' << b.name << " margin " << b.check.margin << '\n';
      }
    }
  }
  std::cout << "bounds: first violating lambda per n " << j["first_violating_lambda"].dump() << '\n';
  return table.failures() == 0 ? kOk : kPartial;
}

int run_render(const std::string& in, const std::string& out) {
  io::ImageFormat format;
  try {
    format = io::image_format_for(out);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ifstream is(in);
  if (!is) throw UsageError("cannot open " + in);
  const io::FieldCsv csv = io::read_field_csv(is);
  write_file(out, io::render_heatmap(csv.field, format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner/Husimi phase-space distributions and information measures"};
  app.require_subcommand(1);

  CommonArgs field_args, sweep_args, bounds_args;
  std::string kind = "wigner", field_formats = "csv";
  int field_n = 0;
  double field_lambda = 0.0001;
  bool field_survival = false;
  auto* field = app.add_subcommand("field", "Compute a Wigner or Husimi field and write CSV/heatmaps");
  field->add_option("--kind", kind, "wigner|husimi")->capture_default_str();
  field->add_option("--n", field_n, "Quantum number")->capture_default_str();
  field->add_option("--lambda", field_lambda, "Quartic coupling")->capture_default_str();
  field->add_option("--format", field_formats, "csv,svg,ppm")->capture_default_str();
  field->add_flag("--survival", field_survival, "Also write marginal and 2D-slice survival CSVs");
  add_common(field, field_args);

  std::string sweep_n = "0,1", sweep_lambda = "0:0.3:0.05", sweep_formats = "csv,json";
  auto* sweep_cmd = app.add_subcommand("sweep", "Compute every measure over an (n, lambda) lattice");
  sweep_cmd->add_option("--n", sweep_n, "Quantum numbers, comma separated")->capture_default_str();
  sweep_cmd->add_option("--lambda", sweep_lambda, "Comma list or start:stop:step")->capture_default_str();
  sweep_cmd->add_option("--format", sweep_formats, "csv,json")->capture_default_str();
  add_common(sweep_cmd, sweep_args);

  std::string bounds_n = "0,1", bounds_lambda = "0:0.3:0.05";
  auto* bounds = app.add_subcommand("bounds", "Evaluate every uncertainty bound and write bounds.json");
  bounds->add_option("--n", bounds_n, "Quantum numbers, comma separated")->capture_default_str();
  bounds->add_option("--lambda", bounds_lambda, "Comma list or start:stop:step")->capture_default_str();
  add_common(bounds, bounds_args);

  std::string render_in, render_out;
  auto* render = app.add_subcommand("render", "Render a field CSV as an SVG or PPM heatmap");
  render->add_option("--in", render_in, "Field CSV")->required();
  render->add_option("--out", render_out, "Output image (.svg or .ppm)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*field) return run_field(field_args, kind, field_n, field_lambda, field_formats, field_survival);
    if (*sweep_cmd) return run_sweep(sweep_args, sweep_n, sweep_lambda, sweep_formats);
    if (*bounds) return run_bounds(bounds_args, bounds_n, bounds_lambda);
    if (*render) return run_render(render_in, render_out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "numerical invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
