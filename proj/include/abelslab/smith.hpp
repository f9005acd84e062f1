#pragma once

// Smith normal form invariants of sparse integer matrices.
//
// Only the invariant factors are needed by callers (abelian group invariants of
// cokernels), so the elimination never tracks the transforming matrices. Entries
// are first processed with checked 64-bit arithmetic; on overflow the whole
// computation is redone over arbitrary-precision integers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abelslab/error.hpp"

namespace abelslab {

using BigInt = boost::multiprecision::cpp_int;

struct Triplet {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
};

struct SmithInvariants {
  // Nonzero invariant factors d_1 | d_2 | ... | d_rank, all positive.
  std::vector<BigInt> factors;

  std::size_t rank() const { return factors.size(); }

  std::vector<BigInt> torsion() const {
    std::vector<BigInt> out;
    for (auto const& d : factors) {
      if (d > 1) out.push_back(d);
    }
    return out;
  }
};

namespace detail {

struct OverflowSignal {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowSignal{};
  return r;
}
inline BigInt checked_mul(BigInt const& a, BigInt const& b) { return a * b; }
inline BigInt checked_sub(BigInt const& a, BigInt const& b) { return a - b; }

template <class Int>
Int abs_value(Int const& v) {
  return v < 0 ? Int(-v) : v;
}

template <class Int>
using SparseRow = std::vector<std::pair<std::size_t, Int>>;

// row_i -= q * row_r, both sorted by column.
template <class Int>
void axpy_row(SparseRow<Int>& target, SparseRow<Int> const& pivot_row, Int const& q) {
  SparseRow<Int> out;
  out.reserve(target.size() + pivot_row.size());
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < pivot_row.size()) {
    if (b == pivot_row.size() || (a < target.size() && target[a].first < pivot_row[b].first)) {
      out.push_back(target[a++]);
    } else if (a == target.size() || pivot_row[b].first < target[a].first) {
      Int v = checked_mul(pivot_row[b].second, q);
      out.emplace_back(pivot_row[b].first, checked_sub(Int(0), v));
      ++b;
    } else {
      Int v = checked_sub(target[a].second, checked_mul(pivot_row[b].second, q));
      if (v != 0) out.emplace_back(target[a].first, v);
      ++a;
      ++b;
    }
  }
  target = std::move(out);
}

template <class Int>
Int const* find_in_row(SparseRow<Int> const& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](auto const& e, std::size_t c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

template <class Int>
std::vector<BigInt> diagonalize(std::vector<SparseRow<Int>> rows) {
  std::vector<BigInt> diag;
  for (;;) {
    // Pivot: entry of minimal absolute value, stopping early at a unit.
    std::size_t prow = 0, pcol = 0;
    Int best = 0;
    bool found = false;
    for (std::size_t i = 0; i < rows.size() && !(found && best == 1); ++i) {
      for (auto const& [c, v] : rows[i]) {
        Int av = abs_value(v);
        if (!found || av < best) {
          found = true;
          best = av;
          prow = i;
          pcol = c;
          if (best == 1) break;
        }
      }
    }
    if (!found) break;

    Int const p = *find_in_row(rows[prow], pcol);
    bool reduced = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == prow || rows[i].empty()) continue;
      Int const* v = find_in_row(rows[i], pcol);
      if (!v) continue;
      Int q = *v / p;
      if (checked_sub(*v, checked_mul(q, p)) != 0) reduced = false;
      if (q != 0) axpy_row(rows[i], rows[prow], q);
    }
    if (!reduced) continue;

    // Column pcol is now zero outside prow; column operations on prow only.
    bool divisible = true;
    SparseRow<Int> rest;
    for (auto const& [c, v] : rows[prow]) {
      if (c == pcol) {
        rest.emplace_back(c, v);
        continue;
      }
      Int rem = checked_sub(v, checked_mul(Int(v / p), p));
      if (rem != 0) {
        divisible = false;
        rest.emplace_back(c, rem);
      }
    }
    if (!divisible) {
      rows[prow] = std::move(rest);
      continue;
    }
    diag.emplace_back(BigInt(abs_value(p)));
    rows[prow].clear();
  }
  return diag;
}

inline std::vector<BigInt> normalize_chain(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = boost::multiprecision::gcd(d[i], d[j]);
      BigInt l = (d[i] / g) * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

template <class Int>
std::vector<SparseRow<Int>> build_rows(std::size_t rows, std::vector<Triplet> const& entries) {
  std::vector<SparseRow<Int>> out(rows);
  for (auto const& t : entries) {
    if (t.value != 0) out[t.row].emplace_back(t.col, Int(t.value));
  }
  for (auto& r : out) {
    std::sort(r.begin(), r.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
    // Merge duplicates.
    SparseRow<Int> merged;
    for (auto const& e : r) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
        if (merged.back().second == 0) merged.pop_back();
      } else {
        merged.push_back(e);
      }
    }
    r = std::move(merged);
  }
  return out;
}

}  // namespace detail

inline SmithInvariants smith_invariants(std::size_t rows, std::size_t cols,
                                        std::vector<Triplet> const& entries) {
  for (auto const& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw Error(ErrorCode::index_out_of_range, "triplet outside matrix bounds");
    }
  }
  std::vector<BigInt> diag;
  try {
    diag = detail::diagonalize(detail::build_rows<std::int64_t>(rows, entries));
  } catch (detail::OverflowSignal const&) {
    diag = detail::diagonalize(detail::build_rows<BigInt>(rows, entries));
  }
  return SmithInvariants{detail::normalize_chain(std::move(diag))};
}

// Dense convenience overload, row-major.
inline SmithInvariants smith_invariants(std::vector<std::vector<std::int64_t>> const& dense) {
  std::vector<Triplet> entries;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    cols = std::max(cols, dense[i].size());
    for (std::size_t j = 0; j < dense[i].size(); ++j) {
      if (dense[i][j] != 0) entries.push_back({i, j, dense[i][j]});
    }
  }
  return smith_invariants(dense.size(), cols, entries);
}

}  // namespace abelslab
