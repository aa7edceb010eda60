#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gausscong {

/// Hard cap on the ambient number of variables.
inline constexpr std::size_t kMaxVars = 8;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Integer exponent vector of fixed length n <= kMaxVars, stored inline.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n);
  ExponentVector(std::initializer_list<std::int64_t> entries);
  explicit ExponentVector(std::span<const std::int64_t> entries);

  static ExponentVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return size_; }
  std::int64_t operator[](std::size_t i) const noexcept { return data_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return data_[i]; }
  std::span<const std::int64_t> entries() const noexcept { return {data_.data(), size_}; }

  bool is_zero() const noexcept;
  std::int64_t total_degree() const;
  /// Linear form evaluation sum(w_i * k_i), overflow-checked.
  std::int64_t dot(std::span<const std::int64_t> weights) const;
  /// True iff every entry is divisible by d (d > 0).
  bool divisible_by(std::int64_t d) const noexcept;
  ExponentVector divided_by(std::int64_t d) const;
  ExponentVector scaled(std::int64_t s) const;

  ExponentVector& operator+=(const ExponentVector& o);
  ExponentVector& operator-=(const ExponentVector& o);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  ExponentVector operator-() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept;
  /// Plain lexicographic order on the entries.
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept;

  std::string to_string() const;  // "(1, 0, 2)"

 private:
  std::array<std::int64_t, kMaxVars> data_{};
  std::size_t size_ = 0;
};

/// Graded-lexicographic order: total degree ascending, then x1-heavier first.
struct GradedLex {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const noexcept;
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& k) const noexcept;
};

}  // namespace gausscong
