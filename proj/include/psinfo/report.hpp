#ifndef PSINFO_REPORT_HPP
#define PSINFO_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "psinfo/entropy.hpp"
#include "psinfo/quadrature.hpp"
#include "psinfo/states.hpp"

namespace psinfo {

struct ReportOptions {
  std::vector<int> alphas{2, 4};  // even orders for Renyi entropies and divergences
  double s = 1.0;                 // Husimi smoothing parameter
  double mi_tolerance = 1e-4;     // allowed |direct - entropic| mutual-information gap

  void validate() const;
};

struct MeasureInfo {
  std::string name;
  bool complex_valued;  // serialized as name_re, name_im
};

/// Every measure compute_all must produce, in serialization order.
std::vector<MeasureInfo> measure_registry(const ReportOptions& options = {});

struct MeasureEntry {
  std::string name;
  double re = 0.0;
  double im = 0.0;
};

struct NamedBound {
  std::string name;
  std::vector<std::string> inputs;
  BoundCheck check;
};

struct MeasureReport {
  OscillatorSpec state;
  GridSpec2D grid;
  std::vector<MeasureEntry> entries;
  std::vector<NamedBound> bounds;

  const MeasureEntry& entry(const std::string& name) const;
  double value(const std::string& name) const { return entry(name).re; }
  const NamedBound& bound(const std::string& name) const;
};

/// Checks the report against the registry: unique names, exact coverage, bound inputs present.
void verify_report(const MeasureReport& report, const ReportOptions& options);

MeasureReport compute_all(const OscillatorSpec& spec, const GridSpec2D& grid,
                          const ReportOptions& options = {});

struct SweepRow {
  OscillatorSpec state;
  std::optional<MeasureReport> report;
  std::string error;

  bool ok() const { return report.has_value(); }
};

struct SweepTable {
  std::vector<SweepRow> rows;  // sorted by (n, lambda)
  GridSpec2D grid;
  ReportOptions options;
  std::string version;

  std::size_t failures() const;
};

/// One compute_all per (n, lambda) on a bounded worker pool; row failures are recorded in
/// the row instead of aborting. Duplicate n or lambda values are rejected.
SweepTable sweep(const std::vector<int>& n_values, const std::vector<double>& lambda_values,
                 const GridSpec2D& grid, const ReportOptions& options = {},
                 unsigned threads = 0);

/// Worker count from PSINFO_THREADS, else hardware concurrency.
unsigned default_thread_count();

}  // namespace psinfo

#endif  // PSINFO_REPORT_HPP
