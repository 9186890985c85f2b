#ifndef PSINFO_IO_HPP
#define PSINFO_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include <json.hpp>

#include "psinfo/phasespace.hpp"
#include "psinfo/report.hpp"
#include "psinfo/survival.hpp"

namespace psinfo::io {

inline constexpr const char* kFieldSchema = "psinfo-field";
inline constexpr const char* kSweepSchema = "psinfo-sweep";
inline constexpr const char* kSurvivalSchema = "psinfo-survival";
inline constexpr int kSchemaVersion = 1;

/// Shortest round-trip decimal (17 significant digits).
std::string format_real(double v);

// Field CSV:
//   # psinfo-field v1 kind=<wigner|husimi> key=value ...
//   x,p,value
//   <x>,<p>,<value>      (x-major, p varies fastest)
void write_field_csv(std::ostream& os, const PhaseSpaceField& field,
                     const std::map<std::string, std::string>& metadata = {});

struct FieldCsv {
  std::map<std::string, std::string> metadata;
  RealField2D field;
};

/// Throws std::runtime_error naming the offending line on malformed input or unknown schema.
FieldCsv read_field_csv(std::istream& is);

void write_survival_csv(std::ostream& os, const SurvivalField1D& s,
                        const std::map<std::string, std::string>& metadata = {});

/// One row per (n, lambda); complex measures as name_re,name_im; failed rows leave the
/// measure cells empty and carry the message in the final `error` column.
void write_sweep_csv(std::ostream& os, const SweepTable& table);

/// Per-row bound verdicts and, per n, the first lambda at which any bound fails.
nlohmann::json bounds_json(const SweepTable& table);

enum class ImageFormat { svg, ppm };

ImageFormat image_format_for(const std::string& path);

/// Diverging heatmap centered at zero: negative values blue, positive red, zero white.
/// x runs left to right, p bottom to top.
std::string render_heatmap(const RealField2D& field, ImageFormat format);

}  // namespace psinfo::io

#endif  // PSINFO_IO_HPP
