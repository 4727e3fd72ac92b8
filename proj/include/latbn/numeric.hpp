#pragma once

#include <cstdint>
#include <span>

namespace latbn {

// Kahan-compensated accumulator. Probability sums are accumulated in linear
// space; logs are taken only at the likelihood layer.
class KahanSum {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }

  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Mixed-radix value of `digits` under `radices`; the first digit is the most
// significant. This single convention indexes CPT columns, latent
// configurations and empirical contexts throughout.
inline std::int64_t mixed_radix_encode(std::span<const int> digits,
                                       std::span<const int> radices) {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    v = v * radices[i] + digits[i];
  }
  return v;
}

inline void mixed_radix_decode(std::int64_t value, std::span<const int> radices,
                               std::span<int> out) {
  for (std::size_t i = radices.size(); i-- > 0;) {
    out[i] = static_cast<int>(value % radices[i]);
    value /= radices[i];
  }
}

inline std::int64_t radix_product(std::span<const int> radices) {
  std::int64_t p = 1;
  for (int r : radices) p *= r;
  return p;
}

}  // namespace latbn
