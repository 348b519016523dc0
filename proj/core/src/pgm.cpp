#include "regbounds/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>

#include "regbounds/errors.hpp"

namespace regbounds {

namespace {

// Next whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
      continue;
    }
    if (!std::isspace(c)) {
      tok.push_back(static_cast<char>(c));
      while ((c = in.get()) != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(c));
      }
      if (c == '#') in.unget();
      return tok;
    }
  }
  throw IoError("unexpected end of PGM header");
}

int parse_int(std::istream& in) {
  const std::string tok = next_token(in);
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw IoError("bad integer in PGM header: '" + tok + "'");
  }
}

}  // namespace

Image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);

  const std::string magic = next_token(in);
  if (magic != "P5" && magic != "P2") {
    throw IoError(path + ": not a PGM (magic '" + magic + "')");
  }
  const int cols = parse_int(in);
  const int rows = parse_int(in);
  const int maxval = parse_int(in);
  if (cols <= 0 || rows <= 0 || maxval <= 0 || maxval > 65535) {
    throw IoError(path + ": bad PGM dimensions/maxval");
  }

  Image img(ImageGeometry(rows, cols));
  const size_t n = static_cast<size_t>(img.size());

  if (magic == "P2") {
    for (size_t i = 0; i < n; ++i) img[i] = parse_int(in);
    return img;
  }

  // P5: exactly one whitespace byte separates maxval from the payload.
  in.get();
  const bool wide = maxval > 255;
  std::vector<unsigned char> buf(n * (wide ? 2 : 1));
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (static_cast<size_t>(in.gcount()) != buf.size()) {
    throw IoError(path + ": truncated PGM payload");
  }
  for (size_t i = 0; i < n; ++i) {
    img[i] = wide ? (buf[2 * i] << 8 | buf[2 * i + 1]) : buf[i];
  }
  return img;
}

void write_pgm(const std::string& path, const Image& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  const auto [mn_it, mx_it] =
      std::minmax_element(image.storage().begin(), image.storage().end());
  const double mn = *mn_it;
  const double span = *mx_it - mn;
  const double scale = span > 0.0 ? 65535.0 / span : 0.0;

  out << "P5\n" << image.cols() << " " << image.rows() << "\n65535\n";
  std::vector<unsigned char> buf(static_cast<size_t>(image.size()) * 2);
  for (int i = 0; i < image.size(); ++i) {
    const int v = static_cast<int>(std::lround((image[i] - mn) * scale));
    buf[2 * i] = static_cast<unsigned char>((v >> 8) & 0xff);
    buf[2 * i + 1] = static_cast<unsigned char>(v & 0xff);
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("short write to " + path);
}

}  // namespace regbounds
