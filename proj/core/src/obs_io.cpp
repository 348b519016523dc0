#include "regbounds/obs_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "regbounds/errors.hpp"

namespace regbounds {

namespace {

constexpr char kMagic[4] = {'R', 'O', 'B', 'S'};
constexpr uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw IoError("truncated observation container");
  return v;
}

}  // namespace

void write_observations(const std::string& path, const ObservationSet& obs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out.write(kMagic, 4);
  put<uint32_t>(out, kVersion);
  const ImageGeometry g = obs.frames.at(0).geometry();
  put<uint32_t>(out, static_cast<uint32_t>(g.rows));
  put<uint32_t>(out, static_cast<uint32_t>(g.cols));
  put<uint32_t>(out, static_cast<uint32_t>(obs.k()));
  put<double>(out, obs.sigma2);
  put<uint64_t>(out, obs.seed);
  put<uint32_t>(out, static_cast<uint32_t>(obs.source_model.size()));
  out.write(obs.source_model.data(), static_cast<std::streamsize>(obs.source_model.size()));
  for (const Shift& s : obs.true_shifts) {
    put<double>(out, s.x);
    put<double>(out, s.y);
  }
  for (const Image& f : obs.frames) {
    out.write(reinterpret_cast<const char*>(f.data()),
              static_cast<std::streamsize>(sizeof(double) * f.size()));
  }
  if (!out) throw IoError("short write to " + path);
}

ObservationSet read_observations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw IoError(path + ": not an observation container");
  }
  const uint32_t version = get<uint32_t>(in);
  if (version != kVersion) throw IoError(path + ": unsupported container version");
  const int rows = static_cast<int>(get<uint32_t>(in));
  const int cols = static_cast<int>(get<uint32_t>(in));
  const int k = static_cast<int>(get<uint32_t>(in));
  ObservationSet obs;
  obs.sigma2 = get<double>(in);
  obs.seed = get<uint64_t>(in);
  const uint32_t tag_len = get<uint32_t>(in);
  obs.source_model.resize(tag_len);
  in.read(obs.source_model.data(), tag_len);
  const ImageGeometry g(rows, cols);
  obs.true_shifts.resize(static_cast<size_t>(k) + 1);
  for (Shift& s : obs.true_shifts) {
    s.x = get<double>(in);
    s.y = get<double>(in);
  }
  obs.frames.reserve(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Image f(g);
    in.read(reinterpret_cast<char*>(f.data()),
            static_cast<std::streamsize>(sizeof(double) * f.size()));
    if (!in) throw IoError(path + ": truncated frame payload");
    obs.frames.push_back(std::move(f));
  }
  return obs;
}

}  // namespace regbounds
