#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "modo/errors.hpp"

namespace modo {

// Largest objective dimension supported by the inline storage of
// ObjectiveVector. Every benchmark family uses K <= 7.
inline constexpr std::size_t kMaxObjectives = 8;

// K-dimensional integer objective vector with overflow-checked arithmetic.
//
// Storage is inline (no heap allocation) so that label sets stay contiguous.
// Unused trailing slots are kept at zero, which lets equality and ordering
// compare the whole array.
class ObjectiveVector {
 public:
  ObjectiveVector() = default;
  explicit ObjectiveVector(std::size_t k);
  ObjectiveVector(std::initializer_list<std::int64_t> values);
  explicit ObjectiveVector(std::span<const std::int64_t> values);

  static ObjectiveVector zero(std::size_t k) { return ObjectiveVector(k); }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  std::int64_t operator[](std::size_t i) const noexcept { return values_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return values_[i]; }

  const std::int64_t* begin() const noexcept { return values_.data(); }
  const std::int64_t* end() const noexcept { return values_.data() + size_; }
  std::int64_t* begin() noexcept { return values_.data(); }
  std::int64_t* end() noexcept { return values_.data() + size_; }
  std::span<const std::int64_t> values() const noexcept { return {begin(), size_}; }

  // Checked componentwise arithmetic. Throws DimensionError / OverflowError.
  ObjectiveVector operator+(const ObjectiveVector& other) const;
  ObjectiveVector operator-(const ObjectiveVector& other) const;
  ObjectiveVector operator-() const;
  ObjectiveVector& operator+=(const ObjectiveVector& other);
  ObjectiveVector& operator-=(const ObjectiveVector& other);

  bool is_zero() const noexcept;

  // Equality and lexicographic order (shorter vectors sort first).
  friend bool operator==(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
    return a.size_ == b.size_ && a.values_ == b.values_;
  }
  friend std::strong_ordering operator<=>(const ObjectiveVector& a,
                                          const ObjectiveVector& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  std::array<std::int64_t, kMaxObjectives> values_{};
  std::uint8_t size_ = 0;
};

// Space separated components, e.g. "8 13 17".
std::string to_string(const ObjectiveVector& v);

// Componentwise minimum of two equal-length vectors.
ObjectiveVector componentwise_min(const ObjectiveVector& a, const ObjectiveVector& b);

// y dominates y2: y >= y2 everywhere and y > y2 somewhere. Equality never
// dominates. Throws DimensionError on length mismatch.
bool dominates(const ObjectiveVector& y, const ObjectiveVector& y2);

// y >= y2 componentwise (dominates or equal). Unchecked lengths.
inline bool weakly_dominates(const ObjectiveVector& y, const ObjectiveVector& y2) noexcept {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < y2[i]) return false;
  }
  return true;
}

namespace detail {

// Reduces `items` in place to the elements whose projected vectors are not
// dominated by, nor equal to an earlier-kept, projection of another element.
// Survivors are left sorted lexicographically descending by projection.
template <class T, class Proj>
void nd_filter_descending(std::vector<T>& items, Proj proj) {
  if (items.size() <= 1) return;
  std::sort(items.begin(), items.end(),
            [&](const T& a, const T& b) { return proj(b) < proj(a); });
  const std::size_t k = proj(items.front()).size();
  std::size_t kept = 0;
  if (k == 2) {
    // Descending by (y0, y1): a point survives iff its y1 beats every y1 seen.
    bool first = true;
    std::int64_t best = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& y = proj(items[i]);
      if (!first && y[1] <= best) continue;
      first = false;
      best = y[1];
      if (kept != i) items[kept] = std::move(items[i]);
      ++kept;
    }
  } else {
    // Any dominator of y precedes y in descending lexicographic order, so y
    // only needs to be checked against the survivors kept so far.
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& y = proj(items[i]);
      bool beaten = false;
      for (std::size_t j = 0; j < kept; ++j) {
        if (weakly_dominates(proj(items[j]), y)) {
          beaten = true;
          break;
        }
      }
      if (beaten) continue;
      if (kept != i) items[kept] = std::move(items[i]);
      ++kept;
    }
  }
  items.resize(kept);
}

}  // namespace detail

// Skyline operator: the nondominated subset of `points`, duplicates collapsed,
// sorted lexicographically ascending.
std::vector<ObjectiveVector> nd_filter(std::vector<ObjectiveVector> points);

// Negates every vector and re-sorts ascending. Maps a canonical (maximize)
// frontier to the frontier of the equivalent minimization problem.
std::vector<ObjectiveVector> negate_all(std::vector<ObjectiveVector> points);

}  // namespace modo
