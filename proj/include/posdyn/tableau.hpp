#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posdyn/poset.hpp"

namespace posdyn {

using Label = std::uint16_t;

/// Strictly order-preserving labeling P -> [q] with declared height q.
class IncreasingTableau {
 public:
  /// Validates range and strictness; the error names the offending element
  /// or cover.
  IncreasingTableau(Poset poset, std::size_t height, std::vector<Label> labels);

  const Poset& poset() const { return poset_; }
  std::size_t height() const { return height_; }
  std::span<const Label> labels() const { return labels_; }
  Label operator[](Element x) const { return labels_[x]; }

  std::size_t distinct_labels() const;
  // Surjective onto [height].
  bool is_packed() const { return distinct_labels() == height_; }

  IncreasingTableau with_height(std::size_t q) const;

  /// Lexicographic on the label vector; only meaningful on a common poset.
  friend bool operator<(const IncreasingTableau& a, const IncreasingTableau& b) {
    return a.labels_ < b.labels_;
  }
  friend bool operator==(const IncreasingTableau& a, const IncreasingTableau& b) {
    return a.height_ == b.height_ && a.labels_ == b.labels_ && a.poset_ == b.poset_;
  }

  std::string to_string() const;

 private:
  struct Unchecked {};
  IncreasingTableau(Unchecked, Poset poset, std::size_t height, std::vector<Label> labels)
      : poset_(std::move(poset)), height_(height), labels_(std::move(labels)) {}
  friend IncreasingTableau make_unchecked(Poset, std::size_t, std::vector<Label>);

  Poset poset_;
  std::size_t height_ = 0;
  std::vector<Label> labels_;
};

// For internal callers that already guarantee validity.
IncreasingTableau make_unchecked(Poset poset, std::size_t height, std::vector<Label> labels);

bool is_increasing(const Poset& p, std::size_t q, std::span<const Label> labels);

/// Bit i (0-based here, label i+1) is set iff label i+1 occurs.
class ContentVector {
 public:
  ContentVector() = default;
  explicit ContentVector(std::vector<bool> bits) : bits_(std::move(bits)) {}
  /// Parses a 0/1 word such as "1010".
  static ContentVector parse(std::string_view word);

  std::size_t length() const { return bits_.size(); }
  bool has_label(std::size_t label) const { return bits_[label - 1]; }
  std::size_t ones() const;
  // First coordinate moved to the end.
  ContentVector rotated() const;
  std::string to_string() const;

  friend bool operator==(const ContentVector&, const ContentVector&) = default;

 private:
  std::vector<bool> bits_;
};

ContentVector content_vector(const IncreasingTableau& t);

/// Least l >= 1 such that rotating l times recovers v; divides the length.
std::size_t rotation_period(const ContentVector& v);

struct Deflation {
  IncreasingTableau packed;
  std::size_t distinct = 0;
};

Deflation deflation(const IncreasingTableau& t);

/// Sends label i of a packed tableau to the position of the i-th set bit of v.
/// Throws InvalidArgument when v's bit count differs from the tableau height
/// or the tableau is not packed.
IncreasingTableau inflate(const IncreasingTableau& packed, const ContentVector& v);

/// Orbit size of a height-q tableau with content v whose deflation has orbit
/// size `packed_orbit`:  l * t' / gcd(l * d / q, t').  Throws InvalidArgument
/// when l * d / q is not an integer.
std::size_t predicted_orbit_size(std::size_t q, const ContentVector& v, std::size_t packed_orbit);

}  // namespace posdyn
