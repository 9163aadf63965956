#include "modo/objective.hpp"

#include <sstream>

namespace modo {

namespace {

void check_dimension(std::size_t k) {
  if (k > kMaxObjectives) {
    throw DimensionError("objective dimension " + std::to_string(k) + " exceeds supported maximum " +
                         std::to_string(kMaxObjectives));
  }
}

void check_same_length(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("objective vectors differ in length (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

ObjectiveVector::ObjectiveVector(std::size_t k) {
  check_dimension(k);
  size_ = static_cast<std::uint8_t>(k);
}

ObjectiveVector::ObjectiveVector(std::initializer_list<std::int64_t> values)
    : ObjectiveVector(std::span<const std::int64_t>(values.begin(), values.size())) {}

ObjectiveVector::ObjectiveVector(std::span<const std::int64_t> values) : ObjectiveVector(values.size()) {
  std::copy(values.begin(), values.end(), values_.begin());
}

ObjectiveVector ObjectiveVector::operator+(const ObjectiveVector& other) const {
  ObjectiveVector out = *this;
  out += other;
  return out;
}

ObjectiveVector ObjectiveVector::operator-(const ObjectiveVector& other) const {
  ObjectiveVector out = *this;
  out -= other;
  return out;
}

ObjectiveVector ObjectiveVector::operator-() const {
  ObjectiveVector out(size_);
  out -= *this;
  return out;
}

ObjectiveVector& ObjectiveVector::operator+=(const ObjectiveVector& other) {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < size_; ++i) {
    if (__builtin_add_overflow(values_[i], other.values_[i], &values_[i])) {
      throw OverflowError("objective addition overflow");
    }
  }
  return *this;
}

ObjectiveVector& ObjectiveVector::operator-=(const ObjectiveVector& other) {
  check_same_length(*this, other);
  for (std::size_t i = 0; i < size_; ++i) {
    if (__builtin_sub_overflow(values_[i], other.values_[i], &values_[i])) {
      throw OverflowError("objective subtraction overflow");
    }
  }
  return *this;
}

bool ObjectiveVector::is_zero() const noexcept {
  return std::all_of(begin(), end(), [](std::int64_t x) { return x == 0; });
}

std::string to_string(const ObjectiveVector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

ObjectiveVector componentwise_min(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_same_length(a, b);
  ObjectiveVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

bool dominates(const ObjectiveVector& y, const ObjectiveVector& y2) {
  check_same_length(y, y2);
  bool strict = false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < y2[i]) return false;
    if (y[i] > y2[i]) strict = true;
  }
  return strict;
}

std::vector<ObjectiveVector> nd_filter(std::vector<ObjectiveVector> points) {
  if (!points.empty()) {
    const std::size_t k = points.front().size();
    for (const auto& p : points) {
      if (p.size() != k) throw DimensionError("nd_filter: mixed objective dimensions");
    }
  }
  detail::nd_filter_descending(points, [](const ObjectiveVector& v) -> const ObjectiveVector& { return v; });
  std::reverse(points.begin(), points.end());
  return points;
}

std::vector<ObjectiveVector> negate_all(std::vector<ObjectiveVector> points) {
  for (auto& p : points) p = -p;
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace modo
