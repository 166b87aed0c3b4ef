#include "gadm/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <memory>

#include "gadm/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "snapshot format is little-endian");
static_assert(sizeof(double) == 8);

namespace gadm {

namespace {

constexpr char kMagic[4] = {'G', 'A', 'D', 'M'};
constexpr std::uint32_t kVersion = 1;

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

void put(std::FILE* f, const void* p, std::size_t bytes, const std::string& path) {
  if (std::fwrite(p, 1, bytes, f) != bytes)
    throw ConfigError("failed writing snapshot '" + path + "'");
}

void get(std::FILE* f, void* p, std::size_t bytes, const std::string& path) {
  if (std::fread(p, 1, bytes, f) != bytes)
    throw ConfigError("snapshot '" + path + "' is truncated or unreadable");
}

}  // namespace

void write_snapshot(const std::string& path, const StateField& s) {
  File f(std::fopen(path.c_str(), "wb"));
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  const Grid& g = s.grid();

  put(f.get(), kMagic, 4, path);
  std::uint32_t u = kVersion;
  put(f.get(), &u, 4, path);
  for (int a = 0; a < 3; ++a) {
    u = std::uint32_t(g.n[a]);
    put(f.get(), &u, 4, path);
  }
  for (int a = 0; a < 3; ++a) {
    u = g.topo[a] == Topology::boundary ? 1 : 0;
    put(f.get(), &u, 4, path);
  }
  put(f.get(), g.h.data(), 24, path);
  put(f.get(), g.origin.data(), 24, path);
  const double t = s.time();
  put(f.get(), &t, 8, path);
  put(f.get(), s.data(), s.size() * 8, path);
  if (std::fflush(f.get()) != 0)
    throw ConfigError("failed writing snapshot '" + path + "'");
}

StateField read_snapshot(const std::string& path) {
  File f(std::fopen(path.c_str(), "rb"));
  if (!f) throw ConfigError("cannot open snapshot '" + path + "'");

  char magic[4];
  get(f.get(), magic, 4, path);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw ConfigError("'" + path + "' is not a snapshot file (bad magic)");
  std::uint32_t version;
  get(f.get(), &version, 4, path);
  if (version != kVersion)
    throw ConfigError("snapshot '" + path + "' has unsupported version " +
                      std::to_string(version));

  Grid g;
  for (int a = 0; a < 3; ++a) {
    std::uint32_t u;
    get(f.get(), &u, 4, path);
    if (u < 1 || u > (1u << 20))
      throw ConfigError("snapshot '" + path + "' has implausible axis size " +
                        std::to_string(u));
    g.n[a] = int(u);
  }
  for (int a = 0; a < 3; ++a) {
    std::uint32_t u;
    get(f.get(), &u, 4, path);
    if (u > 1)
      throw ConfigError("snapshot '" + path + "' has unknown topology code " +
                        std::to_string(u));
    g.topo[a] = u ? Topology::boundary : Topology::periodic;
  }
  get(f.get(), g.h.data(), 24, path);
  get(f.get(), g.origin.data(), 24, path);
  for (int a = 0; a < 3; ++a)
    if (!(g.h[a] > 0.0))
      throw ConfigError("snapshot '" + path + "' has non-positive spacing");

  double t;
  get(f.get(), &t, 8, path);
  StateField s(g, t);
  get(f.get(), s.data(), s.size() * 8, path);

  char extra;
  if (std::fread(&extra, 1, 1, f.get()) == 1)
    throw ConfigError("snapshot '" + path + "' has trailing bytes");
  return s;
}

}  // namespace gadm
