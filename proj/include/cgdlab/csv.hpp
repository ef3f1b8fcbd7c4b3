#pragma once

#include <map>
#include <string>
#include <vector>

#include "cgdlab/harness.hpp"

namespace cgdlab::cli {

// One CSV row. Coordinate columns are present only for low-dimensional
// games (m + n <= kMaxCoordColumns); the manifest records the expansion.
struct ResultRow {
  long long iter = 0;
  Vec coords_x;
  Vec coords_y;
  double norm = 0.0;
  double log10_norm = 0.0;
  double residual = 0.0;
  long long fwd_passes = 0;
  int cg_iters_x = 0;
  int cg_iters_y = 0;
};

inline constexpr int kMaxCoordColumns = 16;

struct ResultRecord {
  std::string run_id;
  harness::RunConfig config;
  int m = 0;
  int n = 0;
  bool include_coords = false;
  std::vector<ResultRow> rows;
  std::string verdict;
  std::string termination;
};

ResultRecord record_from_trajectory(const std::string& run_id,
                                    const harness::Trajectory& t,
                                    const std::string& verdict);

// Header + rows, comma separated, LF line endings, doubles at full
// round-trip precision (%.17g).
std::string to_csv(const ResultRecord& record);

struct ParsedCsv {
  std::vector<std::string> header;
  std::vector<ResultRow> rows;
  int coord_m = 0;
  int coord_n = 0;
};

// Parses text produced by to_csv. Throws std::runtime_error on malformed
// input, mentioning `source_name`.
ParsedCsv parse_csv(const std::string& text,
                    const std::string& source_name = "csv");

std::string format_double(double v);  // %.17g

// ---- flat key=value config form ----------------------------------------------

// The config-file format: one key=value per line, keys identical to the
// CLI flag names. Unknown keys are an error.
std::map<std::string, std::string> config_to_kv(const harness::RunConfig& cfg);
harness::RunConfig config_from_kv(const std::map<std::string, std::string>& kv,
                                  harness::RunConfig base = {});
std::string config_to_text(const harness::RunConfig& cfg);
harness::RunConfig config_from_text(const std::string& text,
                                    harness::RunConfig base = {});

// FNV-1a over the canonical key=value text.
std::string config_hash_hex(const harness::RunConfig& cfg);

// ---- file helpers ---------------------------------------------------------------

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace cgdlab::cli
