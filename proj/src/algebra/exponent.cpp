#include "gausscong/exponent.hpp"

#include <algorithm>

#include "gausscong/error.hpp"

namespace gausscong {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "exponent arithmetic overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "exponent arithmetic overflow");
  }
  return r;
}

ExponentVector::ExponentVector(std::size_t n) : size_(n) {
  if (n > kMaxVars) {
    throw Error(ErrorCode::kInvalidArgument,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

ExponentVector::ExponentVector(std::initializer_list<std::int64_t> entries)
    : ExponentVector(std::span<const std::int64_t>(entries.begin(), entries.size())) {}

ExponentVector::ExponentVector(std::span<const std::int64_t> entries)
    : ExponentVector(entries.size()) {
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i) {
  ExponentVector e(n);
  e[i] = 1;
  return e;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.begin() + size_, [](auto v) { return v == 0; });
}

std::int64_t ExponentVector::total_degree() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) s = checked_add(s, data_[i]);
  return s;
}

std::int64_t ExponentVector::dot(std::span<const std::int64_t> weights) const {
  if (weights.size() != size_) {
    throw Error(ErrorCode::kVariableMismatch, "linear form length does not match exponent length");
  }
  std::int64_t s = 0;
  for (std::size_t i = 0; i < size_; ++i) s = checked_add(s, checked_mul(weights[i], data_[i]));
  return s;
}

bool ExponentVector::divisible_by(std::int64_t d) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (data_[i] % d != 0) return false;
  }
  return true;
}

ExponentVector ExponentVector::divided_by(std::int64_t d) const {
  ExponentVector r(size_);
  for (std::size_t i = 0; i < size_; ++i) r[i] = data_[i] / d;
  return r;
}

ExponentVector ExponentVector::scaled(std::int64_t s) const {
  ExponentVector r(size_);
  for (std::size_t i = 0; i < size_; ++i) r[i] = checked_mul(data_[i], s);
  return r;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& o) {
  if (o.size_ != size_) throw Error(ErrorCode::kVariableMismatch, "exponent length mismatch");
  for (std::size_t i = 0; i < size_; ++i) data_[i] = checked_add(data_[i], o.data_[i]);
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& o) {
  if (o.size_ != size_) throw Error(ErrorCode::kVariableMismatch, "exponent length mismatch");
  for (std::size_t i = 0; i < size_; ++i) data_[i] = checked_add(data_[i], -o.data_[i]);
  return *this;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector r(size_);
  for (std::size_t i = 0; i < size_; ++i) r[i] = checked_mul(data_[i], -1);
  return r;
}

bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
  return a.size_ == b.size_ && std::equal(a.data_.begin(), a.data_.begin() + a.size_, b.data_.begin());
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) noexcept {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.data_[i] != b.data_[i]) return a.data_[i] <=> b.data_[i];
  }
  return std::strong_ordering::equal;
}

std::string ExponentVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) s += ", ";
    s += std::to_string(data_[i]);
  }
  return s + ")";
}

bool GradedLex::operator()(const ExponentVector& a, const ExponentVector& b) const noexcept {
  __int128 da = 0;
  __int128 db = 0;
  for (auto v : a.entries()) da += v;
  for (auto v : b.entries()) db += v;
  if (da != db) return da < db;
  return b < a;
}

std::size_t ExponentHash::operator()(const ExponentVector& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.size();
  for (auto v : k.entries()) {
    h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gausscong
