#include "gadm/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "gadm/errors.hpp"
#include "gadm/mms.hpp"

namespace gadm {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

struct Parser {
  std::vector<std::string> errors;
  int line = 0;

  void fail(const std::string& msg) {
    errors.push_back("line " + std::to_string(line) + ": " + msg);
  }
  void fail_global(const std::string& msg) { errors.push_back(msg); }

  bool number(const std::string& v, double& out) {
    const std::string t = trim(v);
    if (t.empty()) {
      fail("expected a number, got nothing");
      return false;
    }
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || !std::isfinite(out)) {
      fail("cannot parse '" + t + "' as a number");
      return false;
    }
    return true;
  }

  bool integer(const std::string& v, int& out) {
    double d;
    if (!number(v, d)) return false;
    if (d != std::floor(d) || std::abs(d) > 1e9) {
      fail("expected an integer, got '" + trim(v) + "'");
      return false;
    }
    out = int(d);
    return true;
  }

  bool split3(const std::string& v, std::array<std::string, 3>& out) {
    const std::string t = trim(v);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
      fail("expected an array '[a, b, c]', got '" + t + "'");
      return false;
    }
    std::string inner = t.substr(1, t.size() - 2);
    std::array<std::string, 3> parts;
    int cnt = 0;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = inner.find(',', pos);
      const std::string piece =
          inner.substr(pos, comma == std::string::npos ? comma : comma - pos);
      if (cnt < 3) parts[cnt] = trim(piece);
      ++cnt;
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (cnt != 3) {
      fail("expected exactly 3 array entries, got " + std::to_string(cnt));
      return false;
    }
    out = parts;
    return true;
  }

  bool numbers3(const std::string& v, std::array<double, 3>& out) {
    std::array<std::string, 3> parts;
    if (!split3(v, parts)) return false;
    bool ok = true;
    for (int a = 0; a < 3; ++a) ok = number(parts[a], out[a]) && ok;
    return ok;
  }

  bool integers3(const std::string& v, std::array<int, 3>& out) {
    std::array<std::string, 3> parts;
    if (!split3(v, parts)) return false;
    bool ok = true;
    for (int a = 0; a < 3; ++a) ok = integer(parts[a], out[a]) && ok;
    return ok;
  }
};

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  Parser ps;
  std::string section;
  bool saw_t_end = false, saw_mode = false, saw_scenario = false;

  std::istringstream in(text);
  std::string raw;
  std::vector<std::pair<std::string, int>> seen;  // section.key -> line

  while (std::getline(in, raw)) {
    ++ps.line;
    std::string s = raw;
    const std::size_t hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    s = trim(s);
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s.back() != ']') {
        ps.fail("unterminated section header '" + s + "'");
        continue;
      }
      section = trim(s.substr(1, s.size() - 2));
      if (section != "grid" && section != "scenario" && section != "time" &&
          section != "fd" && section != "boundary" && section != "output")
        ps.fail("unknown section [" + section + "]");
      continue;
    }

    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      ps.fail("expected 'key = value', got '" + s + "'");
      continue;
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty()) {
      ps.fail("missing key before '='");
      continue;
    }
    if (section.empty()) {
      ps.fail("key '" + key + "' appears before any section header");
      continue;
    }

    const std::string qual = section + "." + key;
    bool dup = false;
    for (const auto& sk : seen)
      if (sk.first == qual) {
        ps.fail("duplicate key '" + key + "' in [" + section + "] (first at line " +
                std::to_string(sk.second) + ")");
        dup = true;
      }
    if (dup) continue;
    seen.emplace_back(qual, ps.line);

    if (section == "grid") {
      if (key == "n")
        ps.integers3(val, c.grid.n);
      else if (key == "h")
        ps.numbers3(val, c.grid.h);
      else if (key == "origin")
        ps.numbers3(val, c.grid.origin);
      else if (key == "topology") {
        std::array<std::string, 3> parts;
        if (ps.split3(val, parts)) {
          for (int a = 0; a < 3; ++a) {
            if (parts[a] == "periodic")
              c.grid.topo[a] = Topology::periodic;
            else if (parts[a] == "boundary")
              c.grid.topo[a] = Topology::boundary;
            else
              ps.fail("topology must be 'periodic' or 'boundary', got '" +
                      parts[a] + "'");
          }
        }
      } else
        ps.fail("unknown key '" + key + "' in [grid]");
    } else if (section == "scenario") {
      if (key == "name") {
        c.scenario = val;
        saw_scenario = true;
      } else if (key == "p")
        ps.numbers3(val, c.p);
      else if (key == "t0")
        ps.number(val, c.t0);
      else if (key == "amplitude")
        ps.number(val, c.amplitude);
      else if (key == "recipe")
        c.recipe = val;
      else
        ps.fail("unknown key '" + key + "' in [scenario]");
    } else if (section == "time") {
      if (key == "cfl")
        ps.number(val, c.cfl);
      else if (key == "t_end") {
        if (ps.number(val, c.t_end)) saw_t_end = true;
      } else if (key == "output_interval")
        ps.number(val, c.output_interval);
      else
        ps.fail("unknown key '" + key + "' in [time]");
    } else if (section == "fd") {
      if (key == "order")
        ps.integer(val, c.fd_order);
      else if (key == "dissipation")
        ps.number(val, c.dissipation);
      else
        ps.fail("unknown key '" + key + "' in [fd]");
    } else if (section == "boundary") {
      if (key == "mode") {
        saw_mode = true;
        if (val == "geodesic")
          c.geodesic_wall = true;
        else if (val == "none")
          c.geodesic_wall = false;
        else
          ps.fail("boundary mode must be 'geodesic' or 'none', got '" + val + "'");
      } else
        ps.fail("unknown key '" + key + "' in [boundary]");
    } else if (section == "output") {
      if (key == "dir")
        c.out_dir = val;
      else if (key == "snapshot_every")
        ps.integer(val, c.snapshot_every);
      else
        ps.fail("unknown key '" + key + "' in [output]");
    }
  }

  if (!saw_mode) c.geodesic_wall = c.grid.has_boundary();

  // cross-field validation; every problem is reported
  for (const std::string& g : c.grid.validate(c.fd_order))
    ps.fail_global("grid: " + g);
  if (c.fd_order != 2 && c.fd_order != 4)
    ps.fail_global("fd order must be 2 or 4, got " + std::to_string(c.fd_order));
  if (!(c.dissipation >= 0.0))
    ps.fail_global("dissipation must be >= 0");
  if (!saw_scenario)
    ps.fail_global("[scenario] name is required");
  else if (c.scenario != "minkowski" && c.scenario != "kasner" &&
           c.scenario != "perturbed-kasner" && c.scenario != "mms")
    ps.fail_global("unknown scenario '" + c.scenario + "'");
  if (c.scenario == "kasner" || c.scenario == "perturbed-kasner") {
    const double s1 = c.p[0] + c.p[1] + c.p[2];
    const double s2 = c.p[0] * c.p[0] + c.p[1] * c.p[1] + c.p[2] * c.p[2];
    if (std::abs(s1 - 1.0) > 1e-12 || std::abs(s2 - 1.0) > 1e-12) {
      char msg[140];
      std::snprintf(msg, sizeof msg,
                    "exponents must satisfy sum p = sum p^2 = 1: "
                    "sum p = %.17g, sum p^2 = %.17g",
                    s1, s2);
      ps.fail_global(msg);
    }
    if (!(c.t0 > 0.0)) ps.fail_global("scenario t0 must be positive");
  }
  if (c.scenario == "perturbed-kasner" && !c.grid.has_boundary())
    ps.fail_global("perturbed-kasner needs a boundary along the last axis");
  if (c.scenario == "mms") {
    if (c.recipe.empty())
      ps.fail_global("scenario mms requires a recipe");
    else if (!has_mms_recipe(c.recipe))
      ps.fail_global("unknown mms recipe '" + c.recipe + "'");
    else if (c.recipe == "kasner-exact" && !(c.t0 > 0.0))
      ps.fail_global("recipe kasner-exact requires t0 > 0");
  }
  if (!saw_t_end)
    ps.fail_global("[time] t_end is required");
  else if (!(c.t_end > c.t0))
    ps.fail_global("t_end must exceed t0");
  if (!(c.cfl > 0.0) || c.cfl > 1.0)
    ps.fail_global("cfl must be in (0, 1]");
  if (c.output_interval < 0.0)
    ps.fail_global("output_interval must be >= 0");
  else if (saw_t_end && c.t_end > c.t0 && c.output_interval > c.t_end - c.t0)
    ps.fail_global("output_interval exceeds the run length");
  if (c.snapshot_every < 0)
    ps.fail_global("snapshot_every must be >= 0");
  if (c.geodesic_wall && !c.grid.has_boundary())
    ps.fail_global("boundary mode 'geodesic' needs boundary topology on the last axis");

  if (!ps.errors.empty()) throw ConfigError(ps.errors);
  if (c.output_interval == 0.0) c.output_interval = c.t_end - c.t0;
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string render_config(const RunConfig& c) {
  std::ostringstream o;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  auto topo = [&](Topology t) {
    return t == Topology::periodic ? "periodic" : "boundary";
  };
  o << "[grid]\n";
  o << "n        = [" << c.grid.n[0] << ", " << c.grid.n[1] << ", " << c.grid.n[2]
    << "]\n";
  o << "h        = [" << num(c.grid.h[0]) << ", " << num(c.grid.h[1]) << ", "
    << num(c.grid.h[2]) << "]\n";
  o << "origin   = [" << num(c.grid.origin[0]) << ", " << num(c.grid.origin[1])
    << ", " << num(c.grid.origin[2]) << "]\n";
  o << "topology = [" << topo(c.grid.topo[0]) << ", " << topo(c.grid.topo[1])
    << ", " << topo(c.grid.topo[2]) << "]\n\n";
  o << "[scenario]\n";
  o << "name      = " << c.scenario << "\n";
  if (c.scenario == "kasner" || c.scenario == "perturbed-kasner")
    o << "p         = [" << num(c.p[0]) << ", " << num(c.p[1]) << ", "
      << num(c.p[2]) << "]\n";
  o << "t0        = " << num(c.t0) << "\n";
  if (c.scenario == "perturbed-kasner")
    o << "amplitude = " << num(c.amplitude) << "\n";
  if (c.scenario == "mms") o << "recipe    = " << c.recipe << "\n";
  o << "\n[time]\n";
  o << "cfl             = " << num(c.cfl) << "\n";
  o << "t_end           = " << num(c.t_end) << "\n";
  o << "output_interval = " << num(c.output_interval) << "\n";
  o << "\n[fd]\n";
  o << "order       = " << c.fd_order << "\n";
  o << "dissipation = " << num(c.dissipation) << "\n";
  o << "\n[boundary]\n";
  o << "mode = " << (c.geodesic_wall ? "geodesic" : "none") << "\n";
  o << "\n[output]\n";
  o << "dir            = " << c.out_dir << "\n";
  o << "snapshot_every = " << c.snapshot_every << "\n";
  return o.str();
}

}  // namespace gadm
