#include "hllab/runconfig.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hllab {

std::map<std::string, std::string> RunConfig::echo() const {
  std::map<std::string, std::string> out;
  out["seed"] = std::to_string(seed);
  out["M"] = std::to_string(res.M);
  out["K"] = std::to_string(res.K);
  std::ostringstream g;
  g << res.grade;
  out["grade"] = g.str();
  std::ostringstream d;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) d << ',';
    d << degrees[i];
  }
  out["degrees"] = d.str();
  out["format"] = out_format;
  return out;
}

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value) {
  auto to_u64 = [&](const std::string& v) {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("config: bad integer for " + key);
    return x;
  };
  if (key == "seed")
    cfg.seed = to_u64(value);
  else if (key == "M")
    cfg.res.M = std::size_t(to_u64(value));
  else if (key == "K")
    cfg.res.K = std::size_t(to_u64(value));
  else if (key == "grade")
    cfg.res.grade = std::stod(value);
  else if (key == "degrees")
    cfg.degrees = parse_degree_list(value);
  else if (key == "format") {
    if (value != "json" && value != "csv")
      throw std::invalid_argument("config: format must be json or csv");
    cfg.out_format = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) + " lacks '='");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      s = (a == std::string::npos) ? std::string{} : s.substr(a, b - a + 1);
    };
    strip(key);
    strip(value);
    apply_config_line(cfg, key, value);
  }
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("atomic_write: cannot open " + tmp);
    out << content;
    if (!out) throw std::runtime_error("atomic_write: short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("atomic_write: rename to " + path + " failed");
}

std::vector<std::size_t> parse_degree_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    if (cur.empty()) throw std::invalid_argument("degrees: empty item");
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(cur, &pos);
    if (pos != cur.size() || v == 0) throw std::invalid_argument("degrees: bad item " + cur);
    out.push_back(std::size_t(v));
  }
  if (out.empty()) throw std::invalid_argument("degrees: empty list");
  return out;
}

}  // namespace hllab
