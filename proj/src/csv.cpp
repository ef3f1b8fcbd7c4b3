#include "cgdlab/csv.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cgdlab::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ResultRecord record_from_trajectory(const std::string& run_id,
                                    const harness::Trajectory& t,
                                    const std::string& verdict) {
  ResultRecord rec;
  rec.run_id = run_id;
  rec.config = t.config;
  rec.m = t.final_state.m();
  rec.n = t.final_state.n();
  rec.include_coords = rec.m + rec.n <= kMaxCoordColumns;
  rec.verdict = verdict;
  switch (t.termination) {
    case harness::Termination::completed:
      rec.termination = "completed";
      break;
    case harness::Termination::diverged:
      rec.termination = "diverged@" + std::to_string(t.termination_step);
      break;
    case harness::Termination::cg_failed:
      rec.termination = "cg-failed@" + std::to_string(t.termination_step);
      break;
  }
  rec.rows.reserve(t.points.size());
  for (const auto& p : t.points) {
    ResultRow row;
    row.iter = p.iter;
    if (rec.include_coords) {
      row.coords_x = p.state.x;
      row.coords_y = p.state.y;
    }
    row.norm = p.norm;
    row.log10_norm = p.log10_norm;
    row.residual = p.residual;
    row.fwd_passes = p.cum_passes;
    row.cg_iters_x = p.cg_iterations_x;
    row.cg_iters_y = p.cg_iterations_y;
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

std::string to_csv(const ResultRecord& record) {
  std::ostringstream out;
  out << "iter";
  if (record.include_coords) {
    for (int i = 0; i < record.m; ++i) out << ",x" << i;
    for (int i = 0; i < record.n; ++i) out << ",y" << i;
  }
  out << ",norm,log10norm,residual,fwd_passes,cg_iters_x,cg_iters_y\n";
  for (const auto& row : record.rows) {
    out << row.iter;
    if (record.include_coords) {
      for (double v : row.coords_x) out << ',' << format_double(v);
      for (double v : row.coords_y) out << ',' << format_double(v);
    }
    out << ',' << format_double(row.norm) << ',' << format_double(row.log10_norm)
        << ',' << format_double(row.residual) << ',' << row.fwd_passes << ','
        << row.cg_iters_x << ',' << row.cg_iters_y << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

double parse_double(const std::string& text, const std::string& source) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0')
    throw std::runtime_error(source + ": not a number: '" + text + "'");
  return v;
}

long long parse_ll(const std::string& text, const std::string& source) {
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (end == text.c_str() || *end != '\0')
    throw std::runtime_error(source + ": not an integer: '" + text + "'");
  return v;
}

}  // namespace

ParsedCsv parse_csv(const std::string& text, const std::string& source_name) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(source_name + ": empty file");
  ParsedCsv parsed;
  parsed.header = split(line, ',');
  if (parsed.header.empty() || parsed.header.front() != "iter")
    throw std::runtime_error(source_name + ": unexpected header");

  std::size_t col = 1;
  while (col < parsed.header.size() && !parsed.header[col].empty() &&
         parsed.header[col][0] == 'x') {
    ++parsed.coord_m;
    ++col;
  }
  while (col < parsed.header.size() && !parsed.header[col].empty() &&
         parsed.header[col][0] == 'y') {
    ++parsed.coord_n;
    ++col;
  }
  const std::vector<std::string> tail = {"norm",       "log10norm",
                                         "residual",   "fwd_passes",
                                         "cg_iters_x", "cg_iters_y"};
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (col + i >= parsed.header.size() || parsed.header[col + i] != tail[i])
      throw std::runtime_error(source_name + ": unexpected header column");
  }
  const std::size_t expected = col + tail.size();
  if (parsed.header.size() != expected)
    throw std::runtime_error(source_name + ": unexpected trailing columns");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto parts = split(line, ',');
    if (parts.size() != expected)
      throw std::runtime_error(source_name + ": wrong column count in row");
    ResultRow row;
    std::size_t i = 0;
    row.iter = parse_ll(parts[i++], source_name);
    for (int c = 0; c < parsed.coord_m; ++c)
      row.coords_x.push_back(parse_double(parts[i++], source_name));
    for (int c = 0; c < parsed.coord_n; ++c)
      row.coords_y.push_back(parse_double(parts[i++], source_name));
    row.norm = parse_double(parts[i++], source_name);
    row.log10_norm = parse_double(parts[i++], source_name);
    row.residual = parse_double(parts[i++], source_name);
    row.fwd_passes = parse_ll(parts[i++], source_name);
    row.cg_iters_x = static_cast<int>(parse_ll(parts[i++], source_name));
    row.cg_iters_y = static_cast<int>(parse_ll(parts[i++], source_name));
    parsed.rows.push_back(std::move(row));
  }
  return parsed;
}

// ---- config <-> key=value -----------------------------------------------------

namespace {

const std::vector<std::string>& config_key_order() {
  static const std::vector<std::string> keys = {
      "game",        "rule",        "eta",        "gamma",
      "cg-eps",      "cg-max-iters", "neumann-truncate-rhs",
      "iters",       "init",        "seed",       "record-every",
      "max-passes",  "cgd-alternate",
      "gan-hidden",  "gan-layers",  "gan-noise",  "gan-batch",
      "gan-rmsprop"};
  return keys;
}

std::string init_to_text(const harness::InitSpec& init) {
  switch (init.kind) {
    case harness::InitSpec::Kind::game_default:
      return "default";
    case harness::InitSpec::Kind::seeded_random:
      return "random";
    case harness::InitSpec::Kind::explicit_state: {
      std::string out;
      for (std::size_t i = 0; i < init.coords.size(); ++i) {
        if (i) out += ' ';
        out += format_double(init.coords[i]);
      }
      return out;
    }
  }
  return "default";
}

harness::InitSpec init_from_text(const std::string& text) {
  harness::InitSpec init;
  if (text.empty() || text == "default") return init;
  if (text == "random") {
    init.kind = harness::InitSpec::Kind::seeded_random;
    return init;
  }
  init.kind = harness::InitSpec::Kind::explicit_state;
  // Space- or comma-separated coordinate list.
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream in(normalized);
  double v = 0.0;
  while (in >> v) init.coords.push_back(v);
  if (init.coords.empty())
    throw std::invalid_argument("init: no coordinates in '" + text + "'");
  return init;
}

}  // namespace

std::map<std::string, std::string> config_to_kv(const harness::RunConfig& cfg) {
  std::map<std::string, std::string> kv;
  kv["game"] = cfg.game;
  kv["rule"] = cfg.rule;
  kv["eta"] = format_double(cfg.hp.eta);
  kv["gamma"] = format_double(cfg.hp.gamma);
  kv["cg-eps"] = format_double(cfg.hp.cg_epsilon);
  kv["cg-max-iters"] =
      cfg.hp.cg_max_iters ? std::to_string(*cfg.hp.cg_max_iters) : "auto";
  kv["neumann-truncate-rhs"] = cfg.hp.neumann_truncate_rhs ? "1" : "0";
  kv["iters"] = std::to_string(cfg.iterations);
  kv["init"] = init_to_text(cfg.init);
  kv["seed"] = std::to_string(cfg.seed);
  kv["record-every"] = std::to_string(cfg.record_every);
  kv["max-passes"] = std::to_string(cfg.max_passes);
  kv["cgd-alternate"] = cfg.cgd_alternate_sides ? "1" : "0";
  kv["gan-hidden"] = std::to_string(cfg.gan_hidden_units);
  kv["gan-layers"] = std::to_string(cfg.gan_hidden_layers);
  kv["gan-noise"] = std::to_string(cfg.gan_noise_dim);
  kv["gan-batch"] = std::to_string(cfg.gan_batch);
  kv["gan-rmsprop"] = cfg.gan_rmsprop ? "1" : "0";
  return kv;
}

harness::RunConfig config_from_kv(const std::map<std::string, std::string>& kv,
                                  harness::RunConfig base) {
  for (const auto& [key, value] : kv) {
    if (key == "game") {
      base.game = value;
    } else if (key == "rule") {
      base.rule = value;
    } else if (key == "eta") {
      base.hp.eta = std::stod(value);
    } else if (key == "gamma") {
      base.hp.gamma = std::stod(value);
    } else if (key == "cg-eps") {
      base.hp.cg_epsilon = std::stod(value);
    } else if (key == "cg-max-iters") {
      if (value == "auto")
        base.hp.cg_max_iters.reset();
      else
        base.hp.cg_max_iters = std::stoi(value);
    } else if (key == "neumann-truncate-rhs") {
      base.hp.neumann_truncate_rhs = value == "1" || value == "true";
    } else if (key == "iters") {
      base.iterations = std::stoll(value);
    } else if (key == "init") {
      base.init = init_from_text(value);
    } else if (key == "seed") {
      base.seed = std::stoull(value);
    } else if (key == "record-every") {
      base.record_every = std::stoll(value);
    } else if (key == "max-passes") {
      base.max_passes = std::stoll(value);
    } else if (key == "cgd-alternate") {
      base.cgd_alternate_sides = value == "1" || value == "true";
    } else if (key == "gan-hidden") {
      base.gan_hidden_units = std::stoi(value);
    } else if (key == "gan-layers") {
      base.gan_hidden_layers = std::stoi(value);
    } else if (key == "gan-noise") {
      base.gan_noise_dim = std::stoi(value);
    } else if (key == "gan-batch") {
      base.gan_batch = std::stoi(value);
    } else if (key == "gan-rmsprop") {
      base.gan_rmsprop = value == "1" || value == "true";
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return base;
}

std::string config_to_text(const harness::RunConfig& cfg) {
  const auto kv = config_to_kv(cfg);
  std::ostringstream out;
  for (const auto& key : config_key_order()) out << key << '=' << kv.at(key) << '\n';
  return out.str();
}

harness::RunConfig config_from_text(const std::string& text,
                                    harness::RunConfig base) {
  std::istringstream in(text);
  std::string line;
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line without '=': " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return config_from_kv(kv, std::move(base));
}

std::string config_hash_hex(const harness::RunConfig& cfg) {
  const std::string text = config_to_text(cfg);
  std::uint64_t hash = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001B3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016" PRIx64, hash);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace cgdlab::cli
