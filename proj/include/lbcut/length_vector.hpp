#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lbcut/graph.hpp"

namespace lbcut {

/// Lower bound on a post-cut distance; valid bounds are 1..Lim.
using Bound = std::uint16_t;

/// Largest Lim the vector algebra supports.
inline constexpr int kMaxLimit = 65535;

/// Number of unordered pairs of an m-element support.
constexpr std::size_t pair_count(std::size_t m) noexcept { return m * (m - (m > 0 ? 1 : 0)) / 2; }

/// Position of pair (i, j), i < j, in the canonical lexicographic pair order.
constexpr std::size_t pair_index(std::size_t i, std::size_t j, std::size_t m) noexcept {
  return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

/// Per-pair distance bounds over a sorted vertex set.
///
/// Entries follow the canonical pair order: (x0,x1), (x0,x2), ..., (x1,x2), ...
/// The triangle inequalities are not enforced here because user constraints
/// may violate them; table keys always satisfy them.
class LengthVector {
 public:
  LengthVector() = default;

  /// Throws ArgumentError if the support is not strictly increasing, the entry
  /// count does not match, or an entry lies outside [1, lim].
  LengthVector(std::vector<Vertex> support, std::vector<Bound> entries, int lim);

  /// Vector with every entry equal to `value`.
  static LengthVector constant(std::vector<Vertex> support, int value, int lim);

  const std::vector<Vertex>& support() const noexcept { return support_; }
  std::span<const Bound> entries() const noexcept { return entries_; }
  int lim() const noexcept { return lim_; }

  /// Bound for the pair {u, v}; throws ArgumentError if either is missing.
  Bound at(Vertex u, Vertex v) const;

  /// Position of v in the support, if present.
  std::optional<std::size_t> position(Vertex v) const;

  std::string to_string() const;

  /// Lexicographic on entries; only meaningful for equal supports.
  friend bool operator==(const LengthVector&, const LengthVector&) = default;
  friend bool operator<(const LengthVector& a, const LengthVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<Vertex> support_;
  std::vector<Bound> entries_;
  int lim_ = 1;
};

/// Checks a + b >= c for every triple of a support of size m.
bool satisfies_triangle(std::span<const Bound> entries, std::size_t m);
bool satisfies_triangle(const LengthVector& a);

/// a ⪯ b componentwise. Throws ArgumentError when the supports differ.
bool dominates(const LengthVector& a, const LengthVector& b);

/// Restriction of a to the pairs inside Y. Throws ArgumentError if Y ⊄ support.
LengthVector contract(const LengthVector& a, const std::vector<Vertex>& subset);

/// Lazy stream over the triangle-satisfying [1, Lim] vectors of a support,
/// in lexicographic order.
class VectorStream {
 public:
  VectorStream(std::vector<Vertex> support, int lim);

  /// Advances to the next vector; false once exhausted.
  bool next();
  /// The current vector's entries; valid after next() returned true.
  std::span<const Bound> entries() const noexcept { return values_; }
  LengthVector current() const;

 private:
  std::vector<Vertex> support_;
  int lim_;
  std::size_t m_;
  std::vector<Bound> values_;
  std::vector<std::size_t> pair_first_;
  std::vector<std::size_t> pair_second_;
  std::ptrdiff_t pos_ = 0;
  bool started_ = false;
  bool done_ = false;

  bool consistent(std::size_t pos) const;
};

VectorStream enumerate_vectors(std::vector<Vertex> support, int lim);

/// Materializes the stream. Throws ResourceError if Lim^{pairs} > cap.
std::vector<LengthVector> collect_vectors(const std::vector<Vertex>& support, int lim,
                                          double cap = 1e7);

/// Lazy stream of the Y-augmentations of a: triangle-satisfying vectors b on
/// Y = X ∪ {v} with entries in [1, Lim] and b|X = a, in lexicographic order.
class AugmentationStream {
 public:
  AugmentationStream(const LengthVector& a, std::vector<Vertex> extended, int lim);

  bool next();
  std::span<const Bound> entries() const noexcept { return values_; }
  LengthVector current() const;

 private:
  std::vector<Vertex> extended_;
  int lim_;
  std::size_t m_;            // |X|
  std::size_t new_pos_;      // position of v in Y
  std::vector<Bound> base_;  // entries of a
  std::vector<Bound> free_;  // b_{x,v} for x in X order
  std::vector<Bound> values_;
  std::ptrdiff_t pos_ = 0;
  bool started_ = false;
  bool done_ = false;

  bool consistent(std::size_t pos) const;
  void assemble();
};

/// `extended` must equal support(a) plus exactly one new vertex; throws
/// ArgumentError otherwise.
AugmentationStream augmentations(const LengthVector& a, std::vector<Vertex> extended, int lim);

/// All triangle-satisfying key vectors of one support size and limit, shared
/// between tables. Keys are stored in lexicographic order together with a
/// mixed-radix code that grows with that order, so lookups are binary searches.
class KeySpace {
 public:
  KeySpace(std::size_t support_size, int lim);

  std::size_t support_size() const noexcept { return m_; }
  std::size_t width() const noexcept { return p_; }
  int lim() const noexcept { return lim_; }
  std::size_t size() const noexcept { return codes_.size(); }

  std::span<const Bound> key(std::size_t index) const {
    return {entries_.data() + index * p_, p_};
  }
  std::uint64_t code(std::size_t index) const { return codes_[index]; }

  std::uint64_t encode(std::span<const Bound> entries) const;
  std::optional<std::size_t> find(std::span<const Bound> entries) const;
  std::optional<std::size_t> find_code(std::uint64_t code) const;
  /// find_code for a code known to lie at index >= `from`; gallops forward.
  std::optional<std::size_t> find_code_from(std::uint64_t code, std::size_t from) const;

  /// Index of the all-ones key (always 0).
  static constexpr std::size_t kAllOnes = 0;

 private:
  std::size_t m_;
  std::size_t p_;
  int lim_;
  std::vector<std::uint64_t> codes_;
  std::vector<Bound> entries_;
};

/// Thread-safe cache keyed by (support size, lim).
std::shared_ptr<const KeySpace> key_space(std::size_t support_size, int lim);

/// Lim^{C(m,2)}, saturating at +inf.
double projected_key_count(std::size_t support_size, int lim);

}  // namespace lbcut
