#include "jnorm/dispersal.hpp"

#include <algorithm>
#include <stdexcept>

namespace jnorm {

TwoSet::TwoSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::uint64_t prev = 0;
  for (const auto& [a, b] : pairs_) {
    if (a < 1 || a <= prev || b <= a)
      throw std::invalid_argument("TwoSet: flattened indices must be strictly increasing");
    prev = b;
  }
}

TwoSet TwoSet::from_flat(const std::vector<std::uint64_t>& indices) {
  if (indices.size() % 2 != 0)
    throw std::invalid_argument("TwoSet: flat index list must have even length");
  std::vector<Pair> pairs;
  pairs.reserve(indices.size() / 2);
  for (std::size_t i = 0; i < indices.size(); i += 2)
    pairs.emplace_back(indices[i], indices[i + 1]);
  return TwoSet(std::move(pairs));
}

std::vector<std::uint64_t> TwoSet::flat() const {
  std::vector<std::uint64_t> out;
  out.reserve(2 * pairs_.size());
  for (const auto& [a, b] : pairs_) {
    out.push_back(a);
    out.push_back(b);
  }
  return out;
}

bool is_d_dispersed(const TwoSet& delta, std::size_t d) {
  const auto& ps = delta.pairs();
  for (std::size_t j = 1; j < ps.size(); ++j)
    if (ps[j].first < ps[j - 1].second + d) return false;
  return true;
}

DispersedDecomposition decompose_dispersed(const TwoSet& omega, std::size_t d) {
  if (d < 1) throw std::invalid_argument("decompose_dispersed: d must be positive");
  DispersedDecomposition dec;
  dec.dispersal = d;
  std::vector<std::vector<TwoSet::Pair>> classes;
  std::vector<std::uint64_t> maxima;
  for (const auto& pr : omega.pairs()) {
    std::size_t target = classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (maxima[i] + d <= pr.first) {
        target = i;
        break;
      }
    }
    if (target == classes.size()) {
      classes.emplace_back();
      maxima.push_back(0);
    }
    classes[target].push_back(pr);
    maxima[target] = pr.second;
  }
  dec.classes.reserve(classes.size());
  for (auto& c : classes) dec.classes.emplace_back(std::move(c));
  return dec;
}

DSet extend_to_block_set(const TwoSet& delta, std::size_t d) {
  if (!is_d_dispersed(delta, d))
    throw std::invalid_argument("extend_to_block_set: 2-set is not d-dispersed");
  std::vector<std::uint64_t> idx;
  idx.reserve(delta.size() * (d + 1));
  for (const auto& [a, b] : delta.pairs()) {
    idx.push_back(a);
    for (std::size_t j = 0; j < d; ++j) idx.push_back(b + j);
  }
  return DSet(std::move(idx), d + 1);
}

bool validate_decomposition(const TwoSet& omega, const DispersedDecomposition& dec) {
  const std::size_t d = dec.dispersal;
  if (d < 1) return false;
  std::vector<TwoSet::Pair> collected;
  for (const auto& cls : dec.classes) {
    if (cls.empty()) return false;
    if (!is_d_dispersed(cls, d)) return false;
    for (const auto& pr : cls.pairs()) collected.push_back(pr);
  }
  std::sort(collected.begin(), collected.end());
  if (std::adjacent_find(collected.begin(), collected.end()) != collected.end()) return false;
  if (collected != omega.pairs()) return false;
  return dec.classes.size() <= d / 2 + 2;
}

}  // namespace jnorm
