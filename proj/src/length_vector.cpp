#include "lbcut/length_vector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "lbcut/error.hpp"

namespace lbcut {

namespace {

void check_lim(int lim) {
  if (lim < 1 || lim > kMaxLimit) {
    throw ArgumentError("limit " + std::to_string(lim) + " outside [1," + std::to_string(kMaxLimit) + "]");
  }
}

void check_sorted(const std::vector<Vertex>& support) {
  for (std::size_t i = 1; i < support.size(); ++i) {
    if (support[i - 1] >= support[i]) throw ArgumentError("support must be strictly increasing");
  }
}

bool triangle_ok(Bound a, Bound b, Bound c) {
  return a + b >= c && a + c >= b && b + c >= a;
}

}  // namespace

LengthVector::LengthVector(std::vector<Vertex> support, std::vector<Bound> entries, int lim)
    : support_(std::move(support)), entries_(std::move(entries)), lim_(lim) {
  check_lim(lim_);
  check_sorted(support_);
  if (entries_.size() != pair_count(support_.size())) {
    throw ArgumentError("expected " + std::to_string(pair_count(support_.size())) + " entries, got " +
                        std::to_string(entries_.size()));
  }
  for (Bound b : entries_) {
    if (b < 1 || b > lim_) {
      throw ArgumentError("entry " + std::to_string(b) + " outside [1," + std::to_string(lim_) + "]");
    }
  }
}

LengthVector LengthVector::constant(std::vector<Vertex> support, int value, int lim) {
  const std::size_t p = pair_count(support.size());
  return LengthVector(std::move(support), std::vector<Bound>(p, static_cast<Bound>(value)), lim);
}

std::optional<std::size_t> LengthVector::position(Vertex v) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), v);
  if (it == support_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - support_.begin());
}

Bound LengthVector::at(Vertex u, Vertex v) const {
  auto pu = position(u);
  auto pv = position(v);
  if (!pu || !pv || *pu == *pv) {
    throw ArgumentError("pair (" + std::to_string(u) + "," + std::to_string(v) + ") not in support");
  }
  const auto i = std::min(*pu, *pv);
  const auto j = std::max(*pu, *pv);
  return entries_[pair_index(i, j, support_.size())];
}

std::string LengthVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out << ',';
    out << entries_[k];
  }
  out << ')';
  return out.str();
}

bool satisfies_triangle(std::span<const Bound> entries, std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t l = j + 1; l < m; ++l) {
        if (!triangle_ok(entries[pair_index(i, j, m)], entries[pair_index(i, l, m)],
                         entries[pair_index(j, l, m)])) {
          return false;
        }
      }
    }
  }
  return true;
}

bool satisfies_triangle(const LengthVector& a) {
  return satisfies_triangle(a.entries(), a.support().size());
}

bool dominates(const LengthVector& a, const LengthVector& b) {
  if (a.support() != b.support()) throw ArgumentError("dominates: supports differ");
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) {
    if (ea[k] > eb[k]) return false;
  }
  return true;
}

LengthVector contract(const LengthVector& a, const std::vector<Vertex>& subset) {
  check_sorted(subset);
  std::vector<std::size_t> pos;
  pos.reserve(subset.size());
  for (Vertex v : subset) {
    auto p = a.position(v);
    if (!p) throw ArgumentError("contract: vertex " + std::to_string(v) + " not in support");
    pos.push_back(*p);
  }
  const std::size_t m = a.support().size();
  std::vector<Bound> out;
  out.reserve(pair_count(subset.size()));
  for (std::size_t i = 0; i < pos.size(); ++i) {
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      out.push_back(a.entries()[pair_index(pos[i], pos[j], m)]);
    }
  }
  return LengthVector(subset, std::move(out), a.lim());
}

// -- VectorStream --------------------------------------------------------------

VectorStream::VectorStream(std::vector<Vertex> support, int lim)
    : support_(std::move(support)), lim_(lim), m_(support_.size()) {
  check_lim(lim_);
  check_sorted(support_);
  const std::size_t p = pair_count(m_);
  values_.assign(p, 0);
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t j = i + 1; j < m_; ++j) {
      pair_first_.push_back(i);
      pair_second_.push_back(j);
    }
  }
}

// Every triple i < j < l is completed by its pair (j, l), which comes last in
// the canonical order, so checking at that position covers each triple once.
bool VectorStream::consistent(std::size_t pos) const {
  const std::size_t j = pair_first_[pos];
  const std::size_t l = pair_second_[pos];
  for (std::size_t i = 0; i < j; ++i) {
    if (!triangle_ok(values_[pair_index(i, j, m_)], values_[pair_index(i, l, m_)], values_[pos])) {
      return false;
    }
  }
  return true;
}

bool VectorStream::next() {
  if (done_) return false;
  const auto p = static_cast<std::ptrdiff_t>(values_.size());
  if (p == 0) {
    done_ = started_;
    started_ = true;
    return !done_;
  }
  if (!started_) {
    started_ = true;
    pos_ = 0;
    values_[0] = 0;
  } else {
    pos_ = p - 1;
  }
  while (pos_ >= 0) {
    auto& cell = values_[static_cast<std::size_t>(pos_)];
    if (cell == lim_) {
      cell = 0;
      --pos_;
      continue;
    }
    ++cell;
    if (!consistent(static_cast<std::size_t>(pos_))) continue;
    if (pos_ == p - 1) return true;
    ++pos_;
    values_[static_cast<std::size_t>(pos_)] = 0;
  }
  done_ = true;
  return false;
}

LengthVector VectorStream::current() const { return LengthVector(support_, values_, lim_); }

VectorStream enumerate_vectors(std::vector<Vertex> support, int lim) {
  return VectorStream(std::move(support), lim);
}

double projected_key_count(std::size_t support_size, int lim) {
  return std::pow(static_cast<double>(lim), static_cast<double>(pair_count(support_size)));
}

std::vector<LengthVector> collect_vectors(const std::vector<Vertex>& support, int lim, double cap) {
  const double projected = projected_key_count(support.size(), lim);
  if (projected > cap) {
    throw ResourceError("materializing " + std::to_string(static_cast<long double>(projected)) +
                            " candidate vectors exceeds cap",
                        projected, cap);
  }
  std::vector<LengthVector> out;
  VectorStream stream(support, lim);
  while (stream.next()) out.push_back(stream.current());
  return out;
}

// -- AugmentationStream --------------------------------------------------------

AugmentationStream::AugmentationStream(const LengthVector& a, std::vector<Vertex> extended, int lim)
    : extended_(std::move(extended)), lim_(lim), m_(a.support().size()) {
  check_lim(lim_);
  check_sorted(extended_);
  if (extended_.size() != m_ + 1 ||
      !std::includes(extended_.begin(), extended_.end(), a.support().begin(), a.support().end())) {
    throw ArgumentError("augmentations: extended support must add exactly one vertex");
  }
  new_pos_ = m_;
  for (std::size_t k = 0; k < m_; ++k) {
    if (extended_[k] != a.support()[k]) {
      new_pos_ = k;
      break;
    }
  }
  for (Bound b : a.entries()) {
    if (b > lim_) throw ArgumentError("augmentations: entry above limit");
  }
  base_.assign(a.entries().begin(), a.entries().end());
  free_.assign(m_, 0);
  values_.assign(pair_count(m_ + 1), 0);
  // A base vector that breaks the triangle inequalities has no augmentation.
  if (!satisfies_triangle(base_, m_)) done_ = true;
}

// Free entry x is b_{x,v}; the triangles {x, y, v} with y < x are checked
// against the fixed a_{x,y}.
bool AugmentationStream::consistent(std::size_t pos) const {
  for (std::size_t y = 0; y < pos; ++y) {
    if (!triangle_ok(base_[pair_index(y, pos, m_)], free_[y], free_[pos])) return false;
  }
  return true;
}

void AugmentationStream::assemble() {
  const std::size_t big = m_ + 1;
  auto old_index = [&](std::size_t p) { return p < new_pos_ ? p : p - 1; };
  std::size_t k = 0;
  for (std::size_t i = 0; i < big; ++i) {
    for (std::size_t j = i + 1; j < big; ++j, ++k) {
      if (i == new_pos_) {
        values_[k] = free_[old_index(j)];
      } else if (j == new_pos_) {
        values_[k] = free_[old_index(i)];
      } else {
        values_[k] = base_[pair_index(old_index(i), old_index(j), m_)];
      }
    }
  }
}

bool AugmentationStream::next() {
  if (done_) return false;
  const auto p = static_cast<std::ptrdiff_t>(m_);
  if (p == 0) {
    done_ = started_;
    started_ = true;
    if (!done_) assemble();
    return !done_;
  }
  if (!started_) {
    started_ = true;
    pos_ = 0;
    free_[0] = 0;
  } else {
    pos_ = p - 1;
  }
  while (pos_ >= 0) {
    auto& cell = free_[static_cast<std::size_t>(pos_)];
    if (cell == lim_) {
      cell = 0;
      --pos_;
      continue;
    }
    ++cell;
    if (!consistent(static_cast<std::size_t>(pos_))) continue;
    if (pos_ == p - 1) {
      assemble();
      return true;
    }
    ++pos_;
    free_[static_cast<std::size_t>(pos_)] = 0;
  }
  done_ = true;
  return false;
}

LengthVector AugmentationStream::current() const { return LengthVector(extended_, values_, lim_); }

AugmentationStream augmentations(const LengthVector& a, std::vector<Vertex> extended, int lim) {
  return AugmentationStream(a, std::move(extended), lim);
}

// -- KeySpace ------------------------------------------------------------------

KeySpace::KeySpace(std::size_t support_size, int lim)
    : m_(support_size), p_(pair_count(support_size)), lim_(lim) {
  check_lim(lim_);
  if (projected_key_count(m_, lim_) >= static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
    throw ResourceError("key space too large to encode", projected_key_count(m_, lim_),
                        static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2));
  }
  std::vector<Vertex> positions(m_);
  for (std::size_t i = 0; i < m_; ++i) positions[i] = static_cast<Vertex>(i + 1);
  VectorStream stream(std::move(positions), lim_);
  while (stream.next()) {
    const auto e = stream.entries();
    entries_.insert(entries_.end(), e.begin(), e.end());
    codes_.push_back(encode(e));
  }
}

std::uint64_t KeySpace::encode(std::span<const Bound> entries) const {
  std::uint64_t code = 0;
  const auto radix = static_cast<std::uint64_t>(lim_);
  for (Bound b : entries) code = code * radix + static_cast<std::uint64_t>(b - 1);
  return code;
}

std::optional<std::size_t> KeySpace::find_code(std::uint64_t code) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::optional<std::size_t> KeySpace::find_code_from(std::uint64_t code, std::size_t from) const {
  const std::size_t n = codes_.size();
  if (from >= n) return std::nullopt;
  std::size_t lo = from, gap = 1;
  while (lo + gap < n && codes_[lo + gap] < code) {
    lo += gap;
    gap *= 2;
  }
  const auto first = codes_.begin() + static_cast<std::ptrdiff_t>(lo);
  const auto last = codes_.begin() + static_cast<std::ptrdiff_t>(std::min(n, lo + gap + 1));
  auto it = std::lower_bound(first, last, code);
  if (it == last || *it != code) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

std::optional<std::size_t> KeySpace::find(std::span<const Bound> entries) const {
  if (entries.size() != p_) return std::nullopt;
  for (Bound b : entries) {
    if (b < 1 || b > lim_) return std::nullopt;
  }
  return find_code(encode(entries));
}

std::shared_ptr<const KeySpace> key_space(std::size_t support_size, int lim) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, int>, std::weak_ptr<const KeySpace>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{support_size, lim}];
  auto shared = slot.lock();
  if (!shared) {
    shared = std::make_shared<const KeySpace>(support_size, lim);
    slot = shared;
  }
  return shared;
}

}  // namespace lbcut
