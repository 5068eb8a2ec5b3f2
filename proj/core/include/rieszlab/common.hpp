#ifndef RIESZLAB_COMMON_HPP
#define RIESZLAB_COMMON_HPP

#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace rieszlab {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline double sq(double x) { return x * x; }

/// Sentinel for log|f| at a zero of f.
inline double neg_inf() { return -std::numeric_limits<double>::infinity(); }

/// Kahan-style compensated accumulator; summation order still matters for
/// bitwise reproducibility, so callers must feed terms in canonical order.
class CompensatedSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Thrown when an operation is evaluated outside its domain
/// (singular point, radius outside truncation range, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown on invalid experiment configuration; names the offending field.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& reason)
      : std::invalid_argument(field + ": " + reason), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// FNV-1a 64-bit, used for artifact content checksums in run reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace rieszlab

#endif  // RIESZLAB_COMMON_HPP
