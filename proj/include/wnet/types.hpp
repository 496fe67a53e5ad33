#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "wnet/core.hpp"

namespace wnet {

inline constexpr int kNumClasses = 5;  // 1 skin, 2 fat, 3 fat fascia, 4 muscle, 5 muscle fascia
inline constexpr std::uint8_t kIgnoreLabel = 0;

inline const char* class_name(int c) {
  switch (c) {
    case 1: return "skin";
    case 2: return "fat";
    case 3: return "fat_fascia";
    case 4: return "muscle";
    case 5: return "muscle_fascia";
    default: return "ignore";
  }
}

template <typename T>
struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<T> v;

  Grid() = default;
  Grid(int r, int c, T fill = T{}) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

  T& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
  const T& at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }

  std::size_t size() const { return v.size(); }

  template <typename U>
  bool same_shape(const Grid<U>& o) const {
    return rows == o.rows && cols == o.cols;
  }

  friend bool operator==(const Grid&, const Grid&) = default;
};

// One frame of raw waveform data; each column is a single A-scan running
// top (shallow) to bottom (deep).
struct RfFrame : Grid<float> {
  using Grid::Grid;
};

// Envelope-detected, log-compressed intensity in [0, 1].
struct GreyImage : Grid<float> {
  using Grid::Grid;
};

// Per-pixel class in {0..5}; 0 marks padded rows that carry no tissue.
struct LabelMap : Grid<std::uint8_t> {
  using Grid::Grid;
};

struct RgbImage {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> v;  // interleaved r,g,b

  RgbImage() = default;
  RgbImage(int r, int c) : rows(r), cols(c), v(static_cast<std::size_t>(r) * c * 3, 0) {}

  std::uint8_t* px(int r, int c) { return &v[(static_cast<std::size_t>(r) * cols + c) * 3]; }
  const std::uint8_t* px(int r, int c) const { return &v[(static_cast<std::size_t>(r) * cols + c) * 3]; }
};

struct Sample {
  std::string id;
  std::string patient;
  RfFrame rf;
  GreyImage grey;
  LabelMap label;
  int native_rows = 0;  // height before any bottom padding
};

inline void validate_sample(const Sample& s) {
  if (s.rf.rows < 1 || s.rf.cols < 1)
    throw ValidationError("sample " + s.id + ": empty rf frame");
  if (!s.rf.same_shape(s.grey) || !s.rf.same_shape(s.label))
    throw ValidationError("sample " + s.id + ": rf/grey/label dimensions disagree (rf " +
                          std::to_string(s.rf.rows) + "x" + std::to_string(s.rf.cols) + ", grey " +
                          std::to_string(s.grey.rows) + "x" + std::to_string(s.grey.cols) + ", label " +
                          std::to_string(s.label.rows) + "x" + std::to_string(s.label.cols) + ")");
  if (s.native_rows < 1 || s.native_rows > s.rf.rows)
    throw ValidationError("sample " + s.id + ": native_rows " + std::to_string(s.native_rows) +
                          " outside [1, " + std::to_string(s.rf.rows) + "]");
  for (float x : s.rf.v)
    if (!std::isfinite(x)) throw ValidationError("sample " + s.id + ": non-finite rf value");
  for (float g : s.grey.v)
    if (!(g >= 0.0f && g <= 1.0f))
      throw ValidationError("sample " + s.id + ": grey value outside [0,1]");
  for (std::uint8_t l : s.label.v)
    if (l > kNumClasses) throw ValidationError("sample " + s.id + ": label value out of range");
}

// Preserves the concrete grid type (RfFrame, GreyImage, LabelMap).
template <typename G>
G flip_columns(const G& g) {
  G out;
  out.rows = g.rows;
  out.cols = g.cols;
  out.v.resize(g.v.size());
  for (int r = 0; r < g.rows; ++r)
    for (int c = 0; c < g.cols; ++c) out.at(r, c) = g.at(r, g.cols - 1 - c);
  return out;
}

}  // namespace wnet
