#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace wnet {

// Error taxonomy. ValidationError (and derived) means the caller handed us
// something malformed: bad arguments, bad file contents, inconsistent config.
// IoError / NumericError are faults discovered mid-run. The CLI maps the
// former to exit code 1 and the latter to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : ValidationError {
  using ValidationError::ValidationError;
  ParseError(const std::string& path, std::uint64_t byte_offset, const std::string& msg)
      : ValidationError(path + ": " + msg + " (byte offset " + std::to_string(byte_offset) + ")") {}
};

struct IoError : Error {
  using Error::Error;
};

struct NumericError : Error {
  using Error::Error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seeded generator with explicit bit-to-float conversions so every draw is
// reproducible for a given seed on a given platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Box-Muller, one cached spare per pair.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Derive an independent stream from the original seed, e.g. one stream per
  // generated sample. Does not disturb this generator's state.
  Rng fork(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x632be59bd9b4e019ull)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace wnet
