#include "rectdist/scenario_io.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rectdist {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config value for '" + key +
                                "' is not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("config value for '" + key +
                                "' has trailing junk: '" + text + "'");
  }
  return v;
}

}  // namespace

RectScenario parse_scenario_text(const std::string& text,
                                 const std::string& fallback_name) {
  RectScenario s;
  s.name = fallback_name;
  bool have_lx = false, have_ly = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not 'key = value': '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "name") {
      s.name = value;
    } else if (key == "lx") {
      s.lx = parse_number(key, value);
      have_lx = true;
    } else if (key == "ly") {
      s.ly = parse_number(key, value);
      have_ly = true;
    } else if (key == "ux") {
      s.ux = parse_number(key, value);
    } else if (key == "uy") {
      s.uy = parse_number(key, value);
    } else if (key == "uz") {
      s.uz = parse_number(key, value);
    } else if (key == "vz") {
      s.vz = parse_number(key, value);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  if (!have_lx || !have_ly) {
    throw std::invalid_argument("config must set both lx and ly");
  }
  validate_scenario(s);
  return s;
}

RectScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open scenario file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(),
                             std::filesystem::path(path).stem().string());
}

RectScenario load_scenario(const std::string& name_or_path) {
  if (name_or_path == "O" || name_or_path == "A" || name_or_path == "B" ||
      name_or_path == "C") {
    return preset_scenario(name_or_path);
  }
  return load_scenario_file(name_or_path);
}

std::string format_g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string scenario_hash_hex(const RectScenario& s) {
  char vzbuf[32] = "none";
  if (s.vz) std::snprintf(vzbuf, sizeof vzbuf, "%.17g", *s.vz);
  char canon[192];
  std::snprintf(canon, sizeof canon,
                "lx=%.17g;ly=%.17g;ux=%.17g;uy=%.17g;uz=%.17g;vz=%s", s.lx,
                s.ly, s.ux, s.uy, s.uz, vzbuf);
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char* p = canon; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx",
                static_cast<unsigned long long>(h));
  return out;
}

}  // namespace rectdist
