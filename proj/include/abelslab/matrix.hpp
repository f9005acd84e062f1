#pragma once

// Dense square matrices over an exact ring. Indices in the constructors that
// mirror the usual notation (elementary, diagonal positions) are 1-based;
// at()/set() are 0-based.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "abelslab/error.hpp"
#include "abelslab/ring.hpp"

namespace abelslab {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Ring ring, std::size_t n) : ring_(std::move(ring)), n_(n), e_(n * n, RingElement{0, 1}) {}

  static Matrix identity(Ring const& ring, std::size_t n) {
    Matrix m(ring, n);
    for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = ring.one();
    return m;
  }

  std::size_t size() const { return n_; }
  Ring const& ring() const { return ring_; }
  RingElement const& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, RingElement v) { e_[i * n_ + j] = v; }
  std::vector<RingElement> const& entries() const { return e_; }

  bool operator==(Matrix const& o) const { return n_ == o.n_ && e_ == o.e_ && ring_ == o.ring_; }
  bool operator<(Matrix const& o) const { return e_ < o.e_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        RingElement const& v = at(i, j);
        if (i == j ? !ring_.is_one(v) : !ring_.is_zero(v)) return false;
      }
    }
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && !ring_.is_zero(at(i, j))) return false;
      }
    }
    return true;
  }
  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (!ring_.is_zero(at(i, j))) return false;
      }
    }
    return true;
  }
  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!ring_.is_zero(at(i, j))) return false;
      }
    }
    return true;
  }

 private:
  Ring ring_;
  std::size_t n_ = 0;
  std::vector<RingElement> e_;
};

struct MatrixHash {
  std::size_t operator()(Matrix const& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto const& v : m.entries()) {
      h ^= static_cast<std::size_t>(v.num) + 0x9e3779b97f4a7c15ull * static_cast<std::size_t>(v.den);
      h *= 1099511628211ull;
    }
    return h;
  }
};

namespace detail {

inline void require_compatible(Matrix const& a, Matrix const& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::size_mismatch, "matrix sizes differ");
  if (!(a.ring() == b.ring())) throw Error(ErrorCode::ring_mismatch, "matrices over different rings");
}

}  // namespace detail

inline Matrix elementary(Ring const& ring, std::size_t n, std::size_t i, std::size_t j, RingElement r) {
  if (i < 1 || j < 1 || i > n || j > n) throw Error(ErrorCode::index_out_of_range, "elementary index outside 1..n");
  if (i == j) throw Error(ErrorCode::invalid_argument, "elementary matrix needs i != j");
  Matrix m = Matrix::identity(ring, n);
  m.set(i - 1, j - 1, r);
  return m;
}

inline Matrix diagonal(Ring const& ring, std::vector<RingElement> const& units) {
  Matrix m(ring, units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!ring.is_unit(units[i])) throw Error(ErrorCode::non_unit, "diagonal entry " + ring.to_string(units[i]) + " is not a unit");
    m.set(i, i, units[i]);
  }
  return m;
}

// D_i(u): identity with u at position (i,i), 1-based.
inline Matrix diagonal_at(Ring const& ring, std::size_t n, std::size_t i, RingElement u) {
  if (i < 1 || i > n) throw Error(ErrorCode::index_out_of_range, "diagonal index outside 1..n");
  std::vector<RingElement> d(n, ring.one());
  d[i - 1] = u;
  return diagonal(ring, d);
}

inline Matrix mul(Matrix const& a, Matrix const& b) {
  detail::require_compatible(a, b);
  Ring const& R = a.ring();
  std::size_t const n = a.size();
  Matrix c(R, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      RingElement const& aik = a.at(i, k);
      if (R.is_zero(aik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        RingElement const& bkj = b.at(k, j);
        if (R.is_zero(bkj)) continue;
        c.set(i, j, R.add(c.at(i, j), R.mul(aik, bkj)));
      }
    }
  }
  return c;
}

inline Matrix operator*(Matrix const& a, Matrix const& b) { return mul(a, b); }

inline Matrix transpose(Matrix const& a) {
  Matrix t(a.ring(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) t.set(j, i, a.at(i, j));
  }
  return t;
}

// Division-free determinant: dynamic programming over column subsets.
inline RingElement determinant(Matrix const& a) {
  Ring const& R = a.ring();
  std::size_t const n = a.size();
  if (n == 0) return R.one();
  if (n > 20) throw Error(ErrorCode::invalid_argument, "determinant limited to n <= 20");
  std::vector<RingElement> dp(std::size_t{1} << n, R.zero());
  dp[0] = R.one();
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (R.is_zero(dp[mask])) continue;
    std::size_t const row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      RingElement const& v = a.at(row, c);
      if (R.is_zero(v)) continue;
      // Inversions added by placing column c after the columns already used.
      int above = __builtin_popcountll(mask >> (c + 1));
      RingElement term = R.mul(dp[mask], v);
      if (above & 1) term = R.neg(term);
      std::size_t next = mask | (std::size_t{1} << c);
      dp[next] = R.add(dp[next], term);
    }
  }
  return dp.back();
}

inline Matrix inverse(Matrix const& a) {
  Ring const& R = a.ring();
  std::size_t const n = a.size();
  if (a.is_upper_triangular()) {
    std::vector<RingElement> dinv(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto inv = R.try_inverse(a.at(i, i));
      if (!inv) throw Error(ErrorCode::non_invertible, "triangular matrix with non-unit diagonal");
      dinv[i] = *inv;
    }
    // Solve a * x = I column by column, bottom-up.
    Matrix x(R, n);
    for (std::size_t col = 0; col < n; ++col) {
      for (std::size_t ii = col + 1; ii-- > 0;) {
        RingElement s = ii == col ? R.one() : R.zero();
        for (std::size_t k = ii + 1; k <= col; ++k) s = R.sub(s, R.mul(a.at(ii, k), x.at(k, col)));
        x.set(ii, col, R.mul(dinv[ii], s));
      }
    }
    return x;
  }
  if (a.is_lower_triangular()) return transpose(inverse(transpose(a)));

  RingElement det = determinant(a);
  auto dinv = R.try_inverse(det);
  if (!dinv) throw Error(ErrorCode::non_invertible, "determinant " + R.to_string(det) + " is not a unit");
  Matrix adj(R, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(R, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.set(rr, cc++, a.at(r, c));
        }
        ++rr;
      }
      RingElement cof = determinant(minor);
      if ((i + j) & 1) cof = R.neg(cof);
      adj.set(j, i, R.mul(cof, *dinv));
    }
  }
  return adj;
}

inline Matrix commutator(Matrix const& a, Matrix const& b) { return a * b * inverse(a) * inverse(b); }

inline Matrix conjugate_by_diagonal(Matrix const& d, Matrix const& e) {
  detail::require_compatible(d, e);
  if (!d.is_diagonal()) throw Error(ErrorCode::invalid_argument, "conjugating matrix is not diagonal");
  Ring const& R = d.ring();
  std::vector<RingElement> inv(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) inv[i] = R.inverse(d.at(i, i));
  Matrix out(R, d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) out.set(i, j, R.mul(R.mul(d.at(i, i), e.at(i, j)), inv[j]));
  }
  return out;
}

inline Matrix power(Matrix const& a, std::int64_t k) {
  Matrix base = k < 0 ? inverse(a) : a;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Matrix r = Matrix::identity(a.ring(), a.size());
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// The two commutator identities that hold in every group: the product rule
// [ab,c] = a[b,c]a^-1[a,c] and the Hall identity.
inline bool hall_identity_check(Matrix const& a, Matrix const& b, Matrix const& c) {
  detail::require_compatible(a, b);
  detail::require_compatible(a, c);
  Matrix ai = inverse(a), bi = inverse(b), ci = inverse(c);
  Matrix hall = commutator(c * a * ci, commutator(b, c)) * commutator(b * c * bi, commutator(a, b)) *
                commutator(a * b * ai, commutator(c, a));
  if (!hall.is_identity()) return false;
  return commutator(a * b, c) == a * commutator(b, c) * ai * commutator(a, c);
}

inline std::string to_string(Matrix const& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) s += ",";
      s += m.ring().to_string(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace abelslab
