#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace lkcds {

using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> init) : VertexSet(std::vector<Vertex>(init)) {}
  explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet range(std::size_t n) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    return from_sorted(std::move(all));
  }
  /// Caller guarantees `sorted` is strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> sorted) {
    VertexSet s;
    s.members_ = std::move(sorted);
    return s;
  }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  void insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }
  void erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }
  const std::vector<Vertex>& members() const { return members_; }

  VertexSet unite(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  VertexSet minus(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  VertexSet intersect(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }
  bool includes(const VertexSet& other) const {
    return std::includes(begin(), end(), other.begin(), other.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

 private:
  std::vector<Vertex> members_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
  return os << '}';
}

}  // namespace lkcds
