#pragma once

// Finite matrix groups materialized as sorted element lists.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "abelslab/error.hpp"
#include "abelslab/matrix.hpp"

namespace abelslab {

constexpr std::size_t kDefaultMaxOrder = 1'000'000;

using Perm = std::vector<std::uint32_t>;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  // Closure of the generators under multiplication. Throws budget-exceeded when
  // the group would exceed max_order elements.
  static FiniteGroup generate(Ring const& ring, std::size_t n, std::vector<Matrix> const& gens,
                              std::size_t max_order = kDefaultMaxOrder) {
    std::unordered_map<Matrix, std::uint32_t, MatrixHash> seen;
    std::vector<Matrix> elems;
    Matrix id = Matrix::identity(ring, n);
    seen.emplace(id, 0);
    elems.push_back(id);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (auto const& g : gens) {
        Matrix y = elems[head] * g;
        if (seen.count(y)) continue;
        if (elems.size() >= max_order) {
          throw Error(ErrorCode::budget_exceeded, "group order exceeds " + std::to_string(max_order));
        }
        seen.emplace(y, static_cast<std::uint32_t>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
    FiniteGroup G = from_elements(ring, n, std::move(elems));
    G.gens_ = gens;
    return G;
  }

  static FiniteGroup from_elements(Ring const& ring, std::size_t n, std::vector<Matrix> elems) {
    FiniteGroup G;
    G.ring_ = ring;
    G.n_ = n;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    G.elems_ = std::move(elems);
    G.index_.reserve(G.elems_.size() * 2);
    for (std::size_t i = 0; i < G.elems_.size(); ++i) G.index_.emplace(G.elems_[i], static_cast<std::uint32_t>(i));
    auto id = G.index_of(Matrix::identity(ring, n));
    if (!id) throw Error(ErrorCode::invalid_argument, "element list lacks the identity");
    G.identity_ = *id;
    return G;
  }

  std::size_t order() const { return elems_.size(); }
  std::size_t degree() const { return n_; }
  Ring const& ring() const { return ring_; }
  Matrix const& element(std::size_t i) const { return elems_[i]; }
  std::vector<Matrix> const& elements() const { return elems_; }
  std::vector<Matrix> const& generators() const { return gens_; }
  std::uint32_t identity() const { return identity_; }

  std::optional<std::uint32_t> index_of(Matrix const& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::uint32_t require_index(Matrix const& m) const {
    auto i = index_of(m);
    if (!i) throw Error(ErrorCode::invalid_argument, "matrix is not a group element");
    return *i;
  }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const { return require_index(elems_[a] * elems_[b]); }
  std::uint32_t invert(std::uint32_t a) const { return require_index(inverse(elems_[a])); }

  // g -> g*h as a permutation of element indices.
  Perm right_action(Matrix const& h) const {
    Perm p(elems_.size());
    for (std::size_t g = 0; g < elems_.size(); ++g) p[g] = require_index(elems_[g] * h);
    return p;
  }
  // g -> h*g.
  Perm left_action(Matrix const& h) const {
    Perm p(elems_.size());
    for (std::size_t g = 0; g < elems_.size(); ++g) p[g] = require_index(h * elems_[g]);
    return p;
  }

  // Sorted element indices of the subgroup generated by the given matrices.
  std::vector<std::uint32_t> subgroup(std::vector<Matrix> const& gens) const {
    std::vector<Perm> acts;
    for (auto const& g : gens) acts.push_back(right_action(g));
    return orbit(identity_, acts);
  }

  static std::vector<std::uint32_t> orbit(std::uint32_t start, std::vector<Perm> const& acts) {
    std::vector<std::uint32_t> out{start};
    std::vector<char> mark(acts.empty() ? start + 1 : acts.front().size(), 0);
    mark[start] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (auto const& p : acts) {
        std::uint32_t y = p[out[head]];
        if (!mark[y]) {
          mark[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Ring ring_;
  std::size_t n_ = 0;
  std::vector<Matrix> elems_;
  std::vector<Matrix> gens_;
  std::unordered_map<Matrix, std::uint32_t, MatrixHash> index_;
  std::uint32_t identity_ = 0;
};

// Greedy generating set of the listed subgroup: walk the elements in order and
// keep each one not already generated.
inline std::vector<Matrix> greedy_generators(FiniteGroup const& G, std::vector<std::uint32_t> const& members) {
  std::vector<Matrix> gens;
  std::vector<std::uint32_t> span{G.identity()};
  for (auto m : members) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    gens.push_back(G.element(m));
    span = G.subgroup(gens);
    if (span.size() == members.size()) break;
  }
  return gens;
}

}  // namespace abelslab
