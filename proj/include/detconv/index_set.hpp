#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace detconv {

// Strictly increasing subset of [ambient] = {1, ..., ambient}, 1-based.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::size_t ambient, std::vector<std::size_t> indices);
  IndexSet(std::size_t ambient, std::initializer_list<std::size_t> indices)
      : IndexSet(ambient, std::vector<std::size_t>(indices)) {}

  static IndexSet full(std::size_t n);
  static IndexSet from_mask(std::size_t ambient, unsigned long long mask);

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }

  // ||S||_1
  std::size_t norm1() const;
  // W(S) = { s_w : w in W } for W a subset of [|S|].
  IndexSet relabel(const IndexSet& positions) const;
  // Complement within [ambient].
  IndexSet complement() const;
  unsigned long long mask() const;

  std::string str() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<std::size_t> indices_;
};

// All k-subsets of [n] in lexicographic order.
std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace detconv
