#include "mbg/pattern_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mbg {

using nlohmann::json;

Pattern load_pattern_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  Pattern p;
  p.dim = j.at("dim").get<int>();
  p.r = j.at("r").get<double>();
  p.R = j.at("R").get<double>();
  p.window_radius = j.at("window_radius").get<double>();
  if (j.contains("match_tol")) p.match_tol = j["match_tol"].get<double>();
  for (const auto& row : j.at("points")) {
    Point x(p.dim);
    if (static_cast<int>(row.size()) != p.dim)
      throw std::runtime_error("point dimension mismatch in " + path);
    for (int k = 0; k < p.dim; ++k) x[k] = row[k].get<double>();
    p.points.push_back(std::move(x));
  }
  return p;
}

void save_pattern_json(const Pattern& p, const std::string& path) {
  json j;
  j["dim"] = p.dim;
  j["r"] = p.r;
  j["R"] = p.R;
  j["window_radius"] = p.window_radius;
  j["match_tol"] = p.match_tol;
  json pts = json::array();
  for (const Point& x : p.points) {
    json row = json::array();
    for (int k = 0; k < p.dim; ++k) row.push_back(x[k]);
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

Pattern load_pattern_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Pattern p;
  bool have_header = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      if (hs >> p.dim >> p.r >> p.R >> p.window_radius) have_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<double> vals;
    std::string cell;
    while (std::getline(ls, cell, ',')) vals.push_back(std::stod(cell));
    if (!have_header) { p.dim = static_cast<int>(vals.size()); have_header = true; }
    if (static_cast<int>(vals.size()) != p.dim)
      throw std::runtime_error("csv row width mismatch in " + path);
    Point x(p.dim);
    for (int k = 0; k < p.dim; ++k) x[k] = vals[k];
    p.points.push_back(std::move(x));
  }
  if (p.window_radius <= 0.0) {
    for (const Point& x : p.points) p.window_radius = std::max(p.window_radius, x.norm());
    p.window_radius += 1.0;
  }
  return p;
}

void save_pattern_csv(const Pattern& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "# " << p.dim << " " << p.r << " " << p.R << " " << p.window_radius << "\n";
  out.precision(17);
  for (const Point& x : p.points) {
    for (int k = 0; k < p.dim; ++k) out << x[k] << (k + 1 < p.dim ? "," : "\n");
  }
}

namespace {
bool ends_with(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}
}  // namespace

Pattern load_pattern(const std::string& path) {
  if (ends_with(path, ".csv")) return load_pattern_csv(path);
  return load_pattern_json(path);
}

void save_pattern(const Pattern& p, const std::string& path) {
  if (ends_with(path, ".csv")) save_pattern_csv(p, path);
  else save_pattern_json(p, path);
}

OrderedConfig load_config_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  auto pattern = std::make_shared<Pattern>(load_pattern(j.at("pattern_file").get<std::string>()));
  std::vector<int> order;
  for (const auto& v : j.at("order")) order.push_back(v.get<int>());
  OrderedConfig cfg = make_config(PatternInstance::untranslated(pattern), order);
  if (j.contains("subset")) {
    std::vector<int> subset;
    for (const auto& v : j["subset"]) subset.push_back(v.get<int>());
    std::sort(subset.begin(), subset.end());
    if (subset != cfg.subset)
      throw std::runtime_error("subset and order disagree in " + path);
  }
  return cfg;
}

void save_config_json(const OrderedConfig& cfg, const std::string& pattern_file,
                      const std::string& path) {
  json j;
  j["pattern_file"] = pattern_file;
  j["subset"] = cfg.subset;
  j["order"] = cfg.order;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace mbg
