#include "detconv/index_set.hpp"

#include <sstream>

#include "detconv/error.hpp"

namespace detconv {

IndexSet::IndexSet(std::size_t ambient, std::vector<std::size_t> indices)
    : ambient_(ambient), indices_(std::move(indices)) {
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 1 || indices_[i] > ambient_) throw InputError("index set: index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) {
      throw InputError("index set: indices must be strictly increasing");
    }
  }
}

IndexSet IndexSet::full(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  return IndexSet(n, std::move(v));
}

IndexSet IndexSet::from_mask(std::size_t ambient, unsigned long long mask) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < ambient; ++i) {
    if (mask >> i & 1ULL) v.push_back(i + 1);
  }
  return IndexSet(ambient, std::move(v));
}

std::size_t IndexSet::norm1() const {
  std::size_t s = 0;
  for (auto i : indices_) s += i;
  return s;
}

IndexSet IndexSet::relabel(const IndexSet& positions) const {
  if (positions.ambient() != size()) throw InputError("relabel: positions must index into [|S|]");
  std::vector<std::size_t> v;
  v.reserve(positions.size());
  for (auto w : positions.indices()) v.push_back(indices_[w - 1]);
  return IndexSet(ambient_, std::move(v));
}

IndexSet IndexSet::complement() const {
  std::vector<std::size_t> v;
  std::size_t j = 0;
  for (std::size_t i = 1; i <= ambient_; ++i) {
    if (j < indices_.size() && indices_[j] == i) {
      ++j;
    } else {
      v.push_back(i);
    }
  }
  return IndexSet(ambient_, std::move(v));
}

unsigned long long IndexSet::mask() const {
  unsigned long long m = 0;
  for (auto i : indices_) m |= 1ULL << (i - 1);
  return m;
}

std::string IndexSet::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < indices_.size(); ++i) out << (i ? "," : "") << indices_[i];
  out << '}';
  return out.str();
}

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace detconv
