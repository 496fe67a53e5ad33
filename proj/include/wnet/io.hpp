#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "wnet/core.hpp"
#include "wnet/types.hpp"

namespace wnet {

// RF frames are stored in a small self-describing binary format:
//   bytes 0-3   magic "RFB1"
//   bytes 4-7   rows, unsigned 32-bit little-endian
//   bytes 8-11  cols, unsigned 32-bit little-endian
//   bytes 12-   rows*cols IEEE-754 binary32 values, little-endian, row-major
// Grey images and label maps use binary PGM (P5, maxval 255); grey pixels map
// to [0,1] as v/255, labels are stored verbatim and must stay in {0..5}.

namespace detail {

inline void put_u32_le(std::vector<std::uint8_t>& out, std::uint32_t x) {
  out.push_back(static_cast<std::uint8_t>(x & 0xff));
  out.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>((x >> 16) & 0xff));
  out.push_back(static_cast<std::uint8_t>((x >> 24) & 0xff));
}

inline std::uint32_t get_u32_le(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline std::vector<std::uint8_t> read_all_bytes(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f.seekg(0, std::ios::end);
  const auto n = static_cast<std::size_t>(f.tellg());
  f.seekg(0);
  std::vector<std::uint8_t> buf(n);
  if (n > 0) f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n));
  if (!f) throw IoError("short read on " + path);
  return buf;
}

inline void write_all_bytes(const std::string& path, const std::vector<std::uint8_t>& buf) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!f) throw IoError("short write on " + path);
}

}  // namespace detail

inline void write_rf_binary(const RfFrame& frame, const std::string& path) {
  if (frame.rows < 1 || frame.cols < 1) throw ValidationError("write_rf_binary: empty frame");
  std::vector<std::uint8_t> buf;
  buf.reserve(12 + frame.v.size() * 4);
  buf.insert(buf.end(), {'R', 'F', 'B', '1'});
  detail::put_u32_le(buf, static_cast<std::uint32_t>(frame.rows));
  detail::put_u32_le(buf, static_cast<std::uint32_t>(frame.cols));
  for (float x : frame.v) {
    std::uint32_t bits;
    std::memcpy(&bits, &x, 4);
    detail::put_u32_le(buf, bits);
  }
  detail::write_all_bytes(path, buf);
}

inline RfFrame read_rf_binary(const std::string& path) {
  const auto buf = detail::read_all_bytes(path);
  if (buf.size() < 4 || std::memcmp(buf.data(), "RFB1", 4) != 0)
    throw ParseError(path, 0, "bad magic, expected \"RFB1\"");
  if (buf.size() < 12) throw ParseError(path, 4, "truncated header");
  const std::uint32_t rows = detail::get_u32_le(buf.data() + 4);
  const std::uint32_t cols = detail::get_u32_le(buf.data() + 8);
  if (rows < 1) throw ParseError(path, 4, "rows must be >= 1");
  if (cols < 1) throw ParseError(path, 8, "cols must be >= 1");
  const std::uint64_t want = static_cast<std::uint64_t>(rows) * cols * 4ull;
  if (buf.size() - 12 < want)
    throw ParseError(path, 12,
                     "truncated payload: expected " + std::to_string(want) + " bytes, got " +
                         std::to_string(buf.size() - 12));
  RfFrame frame(static_cast<int>(rows), static_cast<int>(cols));
  for (std::size_t i = 0; i < frame.v.size(); ++i) {
    const std::uint32_t bits = detail::get_u32_le(buf.data() + 12 + i * 4);
    float x;
    std::memcpy(&x, &bits, 4);
    if (!std::isfinite(x)) throw ParseError(path, 12 + i * 4, "non-finite value");
    frame.v[i] = x;
  }
  return frame;
}

namespace detail {

// Reads one PGM header token, skipping whitespace and '#' comments.
inline std::string pgm_token(const std::vector<std::uint8_t>& buf, std::size_t& pos, const std::string& path) {
  while (pos < buf.size()) {
    if (std::isspace(buf[pos])) {
      ++pos;
    } else if (buf[pos] == '#') {
      while (pos < buf.size() && buf[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  if (pos >= buf.size()) throw ParseError(path, pos, "unexpected end of header");
  std::string tok;
  while (pos < buf.size() && !std::isspace(buf[pos])) tok.push_back(static_cast<char>(buf[pos++]));
  return tok;
}

struct PgmPayload {
  int rows = 0, cols = 0;
  std::size_t data_pos = 0;
  std::vector<std::uint8_t> buf;
};

inline PgmPayload read_pgm(const std::string& path) {
  PgmPayload p;
  p.buf = read_all_bytes(path);
  std::size_t pos = 0;
  if (pgm_token(p.buf, pos, path) != "P5") throw ParseError(path, 0, "bad magic, expected \"P5\"");
  const std::string w = pgm_token(p.buf, pos, path);
  const std::string h = pgm_token(p.buf, pos, path);
  const std::string maxval = pgm_token(p.buf, pos, path);
  p.cols = std::stoi(w);
  p.rows = std::stoi(h);
  if (p.cols < 1 || p.rows < 1) throw ParseError(path, pos, "non-positive dimensions");
  if (maxval != "255") throw ParseError(path, pos, "maxval must be 255, got " + maxval);
  ++pos;  // single whitespace byte after maxval
  const std::size_t want = static_cast<std::size_t>(p.rows) * p.cols;
  if (p.buf.size() - pos < want)
    throw ParseError(path, pos, "truncated pixel data: expected " + std::to_string(want) + " bytes");
  p.data_pos = pos;
  return p;
}

inline void write_pgm(const std::string& path, int rows, int cols, const std::uint8_t* data) {
  std::vector<std::uint8_t> buf;
  const std::string header = "P5\n" + std::to_string(cols) + " " + std::to_string(rows) + "\n255\n";
  buf.insert(buf.end(), header.begin(), header.end());
  buf.insert(buf.end(), data, data + static_cast<std::size_t>(rows) * cols);
  write_all_bytes(path, buf);
}

}  // namespace detail

inline void write_grey_pgm(const GreyImage& img, const std::string& path) {
  std::vector<std::uint8_t> bytes(img.v.size());
  for (std::size_t i = 0; i < img.v.size(); ++i) {
    const float g = std::clamp(img.v[i], 0.0f, 1.0f);
    bytes[i] = static_cast<std::uint8_t>(std::lround(g * 255.0f));
  }
  detail::write_pgm(path, img.rows, img.cols, bytes.data());
}

inline GreyImage read_grey_pgm(const std::string& path) {
  const auto p = detail::read_pgm(path);
  GreyImage img(p.rows, p.cols);
  for (std::size_t i = 0; i < img.v.size(); ++i)
    img.v[i] = static_cast<float>(p.buf[p.data_pos + i]) / 255.0f;
  return img;
}

inline void write_label_pgm(const LabelMap& map, const std::string& path) {
  for (std::uint8_t l : map.v)
    if (l > kNumClasses) throw ValidationError("write_label_pgm: label value " + std::to_string(l) + " > 5");
  detail::write_pgm(path, map.rows, map.cols, map.v.data());
}

inline LabelMap read_label_pgm(const std::string& path) {
  const auto p = detail::read_pgm(path);
  LabelMap map(p.rows, p.cols);
  for (std::size_t i = 0; i < map.v.size(); ++i) {
    const std::uint8_t l = p.buf[p.data_pos + i];
    if (l > kNumClasses)
      throw ParseError(path, p.data_pos + i, "label value " + std::to_string(l) + " outside {0..5}");
    map.v[i] = l;
  }
  return map;
}

inline void write_ppm(const RgbImage& img, const std::string& path) {
  std::vector<std::uint8_t> buf;
  const std::string header = "P6\n" + std::to_string(img.cols) + " " + std::to_string(img.rows) + "\n255\n";
  buf.insert(buf.end(), header.begin(), header.end());
  buf.insert(buf.end(), img.v.begin(), img.v.end());
  detail::write_all_bytes(path, buf);
}

}  // namespace wnet
