#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include "error.hpp"

namespace hdx {

using VertexId = int;

/// A face: strictly increasing vertex ids. The empty face has dimension -1.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<VertexId> vs) : v_(vs) { normalize(); }
  explicit Face(std::vector<VertexId> vs) : v_(std::move(vs)) { normalize(); }

  /// Wraps an already sorted, duplicate-free vector without checking.
  static Face sorted_unchecked(std::vector<VertexId> vs) {
    Face f;
    f.v_ = std::move(vs);
    return f;
  }

  const std::vector<VertexId>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  int dim() const { return static_cast<int>(v_.size()) - 1; }
  bool empty() const { return v_.empty(); }
  VertexId operator[](std::size_t i) const { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }

  /// Position of v in the sorted vertex list, or -1.
  int position(VertexId v) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), v);
    return (it != v_.end() && *it == v) ? static_cast<int>(it - v_.begin()) : -1;
  }

  bool is_subset_of(const Face& o) const { return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end()); }

  bool disjoint(const Face& o) const {
    std::size_t i = 0, j = 0;
    while (i < v_.size() && j < o.v_.size()) {
      if (v_[i] == o.v_[j]) return false;
      if (v_[i] < o.v_[j]) ++i; else ++j;
    }
    return true;
  }

  Face unite(const Face& o) const {
    std::vector<VertexId> out;
    out.reserve(v_.size() + o.v_.size());
    std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    return sorted_unchecked(std::move(out));
  }

  Face intersect(const Face& o) const {
    std::vector<VertexId> out;
    std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    return sorted_unchecked(std::move(out));
  }

  Face minus(const Face& o) const {
    std::vector<VertexId> out;
    std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
    return sorted_unchecked(std::move(out));
  }

  Face without(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(v_.size());
    for (VertexId x : v_)
      if (x != v) out.push_back(x);
    return sorted_unchecked(std::move(out));
  }

  Face with(VertexId v) const {
    std::vector<VertexId> out = v_;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return sorted_unchecked(std::move(out));
  }

  /// Sub-face selected by a bitmask over positions.
  Face select(std::uint64_t mask) const {
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (mask >> i & 1) out.push_back(v_[i]);
    return sorted_unchecked(std::move(out));
  }

  /// Bitmask of the positions of `sub` inside this face; sub must be a subset.
  std::uint64_t mask_of(const Face& sub) const {
    std::uint64_t m = 0;
    for (VertexId x : sub.v_) m |= std::uint64_t{1} << position(x);
    return m;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(v_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) {
    if (a.v_.size() != b.v_.size()) return a.v_.size() <=> b.v_.size();
    return a.v_ <=> b.v_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Face& f) { return os << f.str(); }

 private:
  void normalize() {
    std::sort(v_.begin(), v_.end());
    for (std::size_t i = 1; i < v_.size(); ++i)
      require(v_[i] != v_[i - 1], ErrorKind::BadParams, "face with repeated vertex");
    for (VertexId x : v_) require(x >= 0, ErrorKind::BadParams, "negative vertex id");
  }

  std::vector<VertexId> v_;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ f.size();
    for (VertexId x : f) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hdx
