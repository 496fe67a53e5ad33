#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wnet/core.hpp"
#include "wnet/types.hpp"

namespace wnet {

inline constexpr float kMinAugScale = 0.8f;
inline constexpr float kMaxAugScale = 1.1f;
inline const std::vector<float> kDefaultAugScales = {0.8f, 1.0f, 1.1f};

// Largest index z where the signal touches zero exactly or changes sign
// between z-1 and z. Returns nothing for signals that never cross.
inline std::optional<std::size_t> deepest_zero_crossing(const std::vector<float>& ascan) {
  if (ascan.size() < 2) throw ValidationError("deepest_zero_crossing: need at least 2 samples");
  std::optional<std::size_t> z;
  for (std::size_t i = 0; i < ascan.size(); ++i) {
    if (ascan[i] == 0.0f) z = i;
    else if (i > 0 && static_cast<double>(ascan[i - 1]) * ascan[i] < 0.0) z = i;
  }
  return z;
}

// Extends an A-scan to length target by odd point-reflection about its
// deepest zero crossing: samples above the crossing are kept, the short tail
// below it is overwritten by -q[2z-k], and the rule is re-applied about the
// extended signal's own deepest crossing until the target length is reached.
// Reflecting about a zero keeps the waveform continuous at every seam.
// Signals with no crossing (and degenerate cases where reflection cannot make
// progress) are zero-filled.
inline std::vector<float> pad_ascan(const std::vector<float>& ascan, std::size_t target) {
  const std::size_t n = ascan.size();
  if (target < n) throw ValidationError("pad_ascan: target shorter than signal");
  if (target == n) return ascan;
  if (n < 2) {
    std::vector<float> q = ascan;
    q.resize(target, 0.0f);
    return q;
  }

  const auto z0 = deepest_zero_crossing(ascan);
  if (!z0) {
    std::vector<float> q = ascan;
    q.resize(target, 0.0f);
    return q;
  }

  std::vector<float> q(ascan.begin(), ascan.begin() + static_cast<std::ptrdiff_t>(*z0) + 1);
  q.reserve(target);
  while (q.size() < target) {
    if (q.size() < 2) {
      q.resize(target, 0.0f);
      break;
    }
    const auto z = deepest_zero_crossing(q);
    const std::size_t reach = z ? 2 * *z + 1 : 0;  // length after reflecting about z
    if (!z || reach <= q.size()) {
      q.resize(target, 0.0f);  // reflection cannot make progress
      break;
    }
    const std::size_t stop = std::min(target, reach);
    for (std::size_t k = q.size(); k < stop; ++k) q.push_back(-q[2 * *z - k]);
  }
  return q;
}

// Bottom-pads a sample to target_rows: grey and label rows are zero-filled
// (label 0 = ignore), RF columns are extended with pad_ascan. native_rows is
// left untouched so the padded region stays identifiable.
inline Sample pad_sample(const Sample& s, int target_rows) {
  if (target_rows < s.rf.rows)
    throw ValidationError("pad_sample: target_rows " + std::to_string(target_rows) +
                          " smaller than sample rows " + std::to_string(s.rf.rows));
  if (target_rows == s.rf.rows) return s;

  Sample out;
  out.id = s.id;
  out.patient = s.patient;
  out.native_rows = s.native_rows;

  out.grey = GreyImage(target_rows, s.grey.cols, 0.0f);
  out.label = LabelMap(target_rows, s.label.cols, kIgnoreLabel);
  for (int r = 0; r < s.rf.rows; ++r)
    for (int c = 0; c < s.grey.cols; ++c) {
      out.grey.at(r, c) = s.grey.at(r, c);
      out.label.at(r, c) = s.label.at(r, c);
    }

  out.rf = RfFrame(target_rows, s.rf.cols);
  std::vector<float> column(static_cast<std::size_t>(s.rf.rows));
  for (int c = 0; c < s.rf.cols; ++c) {
    for (int r = 0; r < s.rf.rows; ++r) column[static_cast<std::size_t>(r)] = s.rf.at(r, c);
    const std::vector<float> padded = pad_ascan(column, static_cast<std::size_t>(target_rows));
    for (int r = 0; r < target_rows; ++r) out.rf.at(r, c) = padded[static_cast<std::size_t>(r)];
  }
  return out;
}

// Scales RF into [-1, 1] by its own peak magnitude. Grey and labels pass
// through; all-zero frames pass through. Idempotent.
inline Sample normalize_sample(const Sample& s) {
  float peak = 0.0f;
  for (float x : s.rf.v) peak = std::max(peak, std::abs(x));
  if (peak == 0.0f) return s;
  Sample out = s;
  for (float& x : out.rf.v) x /= peak;
  return out;
}

// Left-right flip and/or intensity scaling. Scaling multiplies pixel values
// (never resamples, which would break waveform continuity); grey is clamped
// back into [0,1]; labels are only ever column-permuted.
inline Sample augment_sample(const Sample& s, bool flip, float scale) {
  if (!(scale >= kMinAugScale && scale <= kMaxAugScale))
    throw ValidationError("augment_sample: scale " + std::to_string(scale) + " outside [" +
                          std::to_string(kMinAugScale) + ", " + std::to_string(kMaxAugScale) + "]");
  Sample out = s;
  if (flip) {
    out.rf = flip_columns(s.rf);
    out.grey = flip_columns(s.grey);
    out.label = flip_columns(s.label);
  }
  if (scale != 1.0f) {
    for (float& x : out.rf.v) x *= scale;
    for (float& g : out.grey.v) g = std::clamp(g * scale, 0.0f, 1.0f);
  }
  return out;
}

// Cartesian product of the inputs with {no-flip, flip} x scales. The default
// scale set {0.8, 1.0, 1.1} yields 6 variants per sample.
inline std::vector<Sample> expand_dataset(const std::vector<Sample>& samples,
                                          const std::vector<float>& scales = kDefaultAugScales) {
  if (scales.empty()) throw ValidationError("expand_dataset: empty scale set");
  std::vector<Sample> out;
  out.reserve(samples.size() * scales.size() * 2);
  for (const auto& s : samples)
    for (int flip = 0; flip < 2; ++flip)
      for (float scale : scales) {
        Sample a = augment_sample(s, flip != 0, scale);
        char suffix[32];
        std::snprintf(suffix, sizeof(suffix), "+f%ds%.2f", flip, static_cast<double>(scale));
        a.id += suffix;
        out.push_back(std::move(a));
      }
  return out;
}

}  // namespace wnet
