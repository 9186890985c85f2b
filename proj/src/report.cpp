#include "psinfo/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>
#include <thread>

#include "psinfo/divergence.hpp"
#include "psinfo/errors.hpp"
#include "psinfo/phasespace.hpp"
#include "psinfo/survival.hpp"

namespace psinfo {

namespace {

std::string order_name(const char* prefix, int alpha, const char* suffix) {
  return std::string(prefix) + std::to_string(alpha) + suffix;
}

class EntrySink {
 public:
  void real(const std::string& name, double v) { entries_.push_back({name, v, 0.0}); }
  void complex(const std::string& name, const ComplexEntropy& v) {
    entries_.push_back({name, v.real_part, v.imag_part});
  }
  double get(const std::string& name) const {
    for (const auto& e : entries_) {
      if (e.name == name) return e.re;
    }
    throw std::logic_error("report: measure " + name + " used before it was computed");
  }
  std::vector<MeasureEntry> take() { return std::move(entries_); }

 private:
  std::vector<MeasureEntry> entries_;
};

// Runs one measure computation and tags failures with the measure name.
template <typename F>
auto measured(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvariantViolation& e) {
    throw InvariantViolation(std::string(name) + ": " + e.what());
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  }
}

}  // namespace

void ReportOptions::validate() const {
  if (alphas.empty()) throw std::invalid_argument("ReportOptions: alpha list is empty");
  std::set<int> seen;
  for (int a : alphas) {
    if (a < 2 || a % 2 != 0) {
      throw std::invalid_argument("ReportOptions: alpha must be an even integer >= 2, got " + std::to_string(a));
    }
    if (!seen.insert(a).second) throw std::invalid_argument("ReportOptions: duplicate alpha");
  }
  if (!(s > 0.0)) throw std::invalid_argument("ReportOptions: s must be > 0");
  if (!(mi_tolerance > 0.0)) throw std::invalid_argument("ReportOptions: tolerance must be > 0");
}

std::vector<MeasureInfo> measure_registry(const ReportOptions& options) {
  std::vector<MeasureInfo> r;
  auto real = [&](std::string n) { r.push_back({std::move(n), false}); };
  auto cplx = [&](std::string n) { r.push_back({std::move(n), true}); };

  real("S_x_W"); real("S_p_W"); real("S_x_H"); real("S_p_H");
  cplx("S_W"); cplx("S_H");
  for (int a : options.alphas) {
    real(order_name("R", a, "_W"));
    real(order_name("R", a, "_H"));
    real(order_name("R", a, "_x_W"));
    real(order_name("R", a, "_p_W"));
    real(order_name("R", a, "_x_H"));
    real(order_name("R", a, "_p_H"));
  }
  real("F_x"); real("F_p");
  real("C_x_W"); real("C_p_W"); real("C_x_H"); real("C_p_H");
  cplx("CC_W"); cplx("CC_H");
  cplx("I_W"); cplx("I_W_ent"); cplx("I_H"); cplx("I_H_ent");
  real("I2_W"); real("I2_H");
  real("KL_x"); real("KL_p");
  real("J_x"); real("J_p");
  for (int a : options.alphas) {
    real(order_name("RD", a, "_x"));
    real(order_name("RD", a, "_p"));
  }
  real("D_CS");
  return r;
}

const MeasureEntry& MeasureReport::entry(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("MeasureReport: no measure named " + name);
}

const NamedBound& MeasureReport::bound(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return b;
  }
  throw std::out_of_range("MeasureReport: no bound named " + name);
}

void verify_report(const MeasureReport& report, const ReportOptions& options) {
  std::set<std::string> names;
  for (const auto& e : report.entries) {
    if (!names.insert(e.name).second) throw std::logic_error("report: duplicate measure " + e.name);
  }
  const auto registry = measure_registry(options);
  if (registry.size() != report.entries.size()) {
    throw std::logic_error("report: " + std::to_string(report.entries.size()) + " measures produced, registry lists " +
                           std::to_string(registry.size()));
  }
  for (std::size_t i = 0; i < registry.size(); ++i) {
    if (registry[i].name != report.entries[i].name) {
      throw std::logic_error("report: measure " + registry[i].name + " missing or out of order");
    }
  }
  for (const auto& b : report.bounds) {
    for (const auto& in : b.inputs) {
      if (!names.contains(in)) throw std::logic_error("report: bound " + b.name + " input " + in + " not reported");
    }
  }
}

MeasureReport compute_all(const OscillatorSpec& spec, const GridSpec2D& grid, const ReportOptions& options) {
  spec.validate();
  options.validate();

  const Wavefunction psi = measured("psi", [&] { return oscillator_state(spec, Space::position, grid.x); });
  const Wavefunction phi = measured("phi", [&] { return oscillator_state(spec, Space::momentum, grid.p); });
  const PhaseSpaceField w = measured("W", [&] { return wigner(psi, grid); });
  const PhaseSpaceField h = measured("H", [&] { return husimi_from_wigner(w, options.s); });
  const MarginalPair mw = measured("marginals_W", [&] { return marginals(w); });
  const MarginalPair mh = measured("marginals_H", [&] { return marginals(h); });

  EntrySink out;
  out.real("S_x_W", measured("S_x_W", [&] { return shannon_1d(mw.rho_x); }));
  out.real("S_p_W", measured("S_p_W", [&] { return shannon_1d(mw.rho_p); }));
  out.real("S_x_H", measured("S_x_H", [&] { return shannon_1d(mh.rho_x); }));
  out.real("S_p_H", measured("S_p_H", [&] { return shannon_1d(mh.rho_p); }));
  out.complex("S_W", measured("S_W", [&] { return wigner_entropy(w); }));
  out.complex("S_H", {measured("S_H", [&] { return wehrl_entropy(h); }), 0.0});

  for (int a : options.alphas) {
    const double da = a;
    out.real(order_name("R", a, "_W"), measured("R_W", [&] { return renyi_phase_space(w, a); }));
    out.real(order_name("R", a, "_H"), measured("R_H", [&] { return renyi_phase_space(h, a); }));
    out.real(order_name("R", a, "_x_W"), measured("R_x_W", [&] { return renyi_1d(mw.rho_x, da); }));
    out.real(order_name("R", a, "_p_W"), measured("R_p_W", [&] { return renyi_1d(mw.rho_p, da); }));
    out.real(order_name("R", a, "_x_H"), measured("R_x_H", [&] { return renyi_1d(mh.rho_x, da); }));
    out.real(order_name("R", a, "_p_H"), measured("R_p_H", [&] { return renyi_1d(mh.rho_p, da); }));
  }

  out.real("F_x", measured("F_x", [&] { return fisher_information(psi.density()); }));
  out.real("F_p", measured("F_p", [&] { return fisher_information(phi.density()); }));

  const SurvivalField1D sxw = survival_1d(mw.rho_x);
  const SurvivalField1D spw = survival_1d(mw.rho_p);
  const SurvivalField1D sxh = survival_1d(mh.rho_x);
  const SurvivalField1D sph = survival_1d(mh.rho_p);
  out.real("C_x_W", cumulative_residual_entropy(sxw));
  out.real("C_p_W", cumulative_residual_entropy(spw));
  out.real("C_x_H", cumulative_residual_entropy(sxh));
  out.real("C_p_H", cumulative_residual_entropy(sph));
  out.complex("CC_W", measured("CC_W", [&] { return cross_cumulative_residual_entropy(w); }));
  const ComplexEntropy cch = measured("CC_H", [&] { return cross_cumulative_residual_entropy(h); });
  out.complex("CC_H", {cch.real_part, 0.0});

  const MutualInformationResult iw = measured("I_W", [&] { return mutual_information(w); });
  const MutualInformationResult ih = measured("I_H", [&] { return mutual_information(h); });
  for (const auto* mi : {&iw, &ih}) {
    const double gap = std::max(std::abs(mi->direct.real_part - mi->entropic.real_part),
                                std::abs(mi->direct.imag_part - mi->entropic.imag_part));
    if (gap > options.mi_tolerance) {
      throw InvariantViolation("I_" + std::string(mi->source == FieldKind::wigner ? "W" : "H") +
                               ": direct and entropic mutual information differ by " + std::to_string(gap));
    }
  }
  out.complex("I_W", iw.direct);
  out.complex("I_W_ent", iw.entropic);
  out.complex("I_H", {ih.direct.real_part, 0.0});
  out.complex("I_H_ent", {ih.entropic.real_part, 0.0});
  out.real("I2_W", measured("I2_W", [&] { return renyi_mutual_information(w); }));
  out.real("I2_H", measured("I2_H", [&] { return renyi_mutual_information(h); }));

  const DensityPair px(RealField1D(mw.rho_x.grid, mw.rho_x.values.cwiseMax(0.0)),
                       RealField1D(mh.rho_x.grid, mh.rho_x.values.cwiseMax(0.0)));
  const DensityPair pp(RealField1D(mw.rho_p.grid, mw.rho_p.values.cwiseMax(0.0)),
                       RealField1D(mh.rho_p.grid, mh.rho_p.values.cwiseMax(0.0)));
  out.real("KL_x", measured("KL_x", [&] { return kl_divergence(px); }));
  out.real("KL_p", measured("KL_p", [&] { return kl_divergence(pp); }));
  out.real("J_x", measured("J_x", [&] { return jeffreys_divergence(sxw, sxh); }));
  out.real("J_p", measured("J_p", [&] { return jeffreys_divergence(spw, sph); }));
  for (int a : options.alphas) {
    const double da = a;
    out.real(order_name("RD", a, "_x"), measured("RD_x", [&] { return renyi_divergence(px, da); }));
    out.real(order_name("RD", a, "_p"), measured("RD_p", [&] { return renyi_divergence(pp, da); }));
  }
  out.real("D_CS", measured("D_CS", [&] { return cauchy_schwarz_divergence(w.field, h.field); }));

  MeasureReport report{spec, grid, {}, {}};
  const double pi = std::numbers::pi;
  auto add_bound = [&](std::string name, std::vector<std::string> inputs, BoundCheck check) {
    report.bounds.push_back({std::move(name), std::move(inputs), check});
  };
  add_bound("shannon_W", {"S_x_W", "S_p_W"}, check_shannon_bound(out.get("S_x_W"), out.get("S_p_W")));
  add_bound("shannon_H", {"S_x_H", "S_p_H"}, check_shannon_bound(out.get("S_x_H"), out.get("S_p_H")));
  if (std::find(options.alphas.begin(), options.alphas.end(), 2) != options.alphas.end()) {
    add_bound("renyi2_marginal_W", {"R2_x_W", "R2_p_W"},
              check_renyi_bound(out.get("R2_x_W"), out.get("R2_p_W"), 2.0, 2.0));
    add_bound("renyi2_marginal_H", {"R2_x_H", "R2_p_H"},
              check_renyi_bound(out.get("R2_x_H"), out.get("R2_p_H"), 2.0, 2.0));
    add_bound("renyi2_phase_W", {"R2_W"}, BoundCheck::make(out.get("R2_W"), std::log(2.0 * pi)));
    add_bound("renyi2_phase_H", {"R2_H"}, BoundCheck::make(out.get("R2_H"), std::log(2.0 * pi)));
  }
  add_bound("wehrl_floor", {"S_H"}, BoundCheck::make(out.get("S_H"), 1.0 + std::log(pi)));
  add_bound("fisher", {"F_x", "F_p"}, check_fisher_bound(out.get("F_x"), out.get("F_p")));
  add_bound("mutual_information_H", {"I_H"}, BoundCheck::make(out.get("I_H"), 0.0));

  report.entries = out.take();
  verify_report(report, options);
  return report;
}

std::size_t SweepTable::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok(); }));
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("PSINFO_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepTable sweep(const std::vector<int>& n_values, const std::vector<double>& lambda_values, const GridSpec2D& grid,
                 const ReportOptions& options, unsigned threads) {
  if (n_values.empty()) throw std::invalid_argument("sweep: n list is empty");
  if (lambda_values.empty()) throw std::invalid_argument("sweep: lambda list is empty");
  options.validate();

  std::vector<OscillatorSpec> keys;
  for (int n : n_values) {
    for (double lam : lambda_values) {
      OscillatorSpec spec{n, lam};
      spec.validate();
      keys.push_back(spec);
    }
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("sweep: duplicate (n, lambda) key");
  }

  SweepTable table{{}, grid, options, PSINFO_VERSION};
  table.rows.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) table.rows[i].state = keys[i];

  if (threads == 0) threads = default_thread_count();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(keys.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      SweepRow& row = table.rows[i];
      try {
        row.report = compute_all(row.state, grid, options);
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return table;
}

}  // namespace psinfo
