#pragma once

// Commutator relations among elementary matrices and the action of the
// diagonal torus on them, checked exhaustively over a finite ring.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "abelslab/matrix.hpp"
#include "abelslab/report.hpp"

namespace abelslab {

inline std::string anchor_elementary_commutators() { return "commutators of elementary matrices"; }
inline std::string anchor_diagonal_action() { return "diagonal matrices acting on elementary matrices"; }
inline std::string anchor_group_identities() { return "commutator identities valid in every group"; }

namespace detail {

inline std::vector<std::pair<std::size_t, std::size_t>> off_diagonal(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i != j) out.emplace_back(i, j);
    }
  }
  return out;
}

inline std::string tag(std::size_t n, Ring const& R) { return "/n" + std::to_string(n) + "/" + R.descriptor().to_string(); }

}  // namespace detail

// e_ij(r) e_ij(s) = e_ij(r+s); [e_ij(r), e_kl(s)] is e_il(rs) when j = k,
// e_kj(-sr) when i = l, and trivial otherwise; [e_ij(r), e_kl(s)^-1] = [e_ij(r), e_kl(s)]^-1
// away from the opposite pair (k,l) = (j,i).
inline CheckRecord check_elementary_commutators(std::size_t n, Ring const& R) {
  return timed_check("elementary-commutators" + detail::tag(n, R), anchor_elementary_commutators(), [&](CheckRecord& rec) {
    if (!R.is_finite()) throw Error(ErrorCode::infinite_ring, "exhaustive check needs a finite ring");
    auto elems = R.enumerate_elements();
    auto pos = detail::off_diagonal(n);
    std::vector<std::vector<Matrix>> e(pos.size()), einv(pos.size());
    for (std::size_t p = 0; p < pos.size(); ++p) {
      for (auto const& r : elems) {
        e[p].push_back(elementary(R, n, pos[p].first, pos[p].second, r));
        einv[p].push_back(elementary(R, n, pos[p].first, pos[p].second, R.neg(r)));
      }
    }
    auto witness = [&](std::size_t a, std::size_t b, std::size_t x, std::size_t y) {
      return "i,j=" + std::to_string(pos[a].first) + "," + std::to_string(pos[a].second) + " k,l=" + std::to_string(pos[b].first) +
             "," + std::to_string(pos[b].second) + " r=" + R.to_string(elems[x]) + " s=" + R.to_string(elems[y]);
    };
    for (std::size_t a = 0; a < pos.size(); ++a) {
      auto [i, j] = pos[a];
      for (std::size_t x = 0; x < elems.size(); ++x) {
        if (!(e[a][x] * einv[a][x]).is_identity()) rec.fail("inverse " + witness(a, a, x, x));
        for (std::size_t y = 0; y < elems.size(); ++y) {
          rec.bump("additive");
          if (!(e[a][x] * e[a][y] == elementary(R, n, i, j, R.add(elems[x], elems[y])))) rec.fail("additive " + witness(a, a, x, y));
        }
      }
      for (std::size_t b = 0; b < pos.size(); ++b) {
        auto [k, l] = pos[b];
        if (k == j && l == i) continue;
        for (std::size_t x = 0; x < elems.size(); ++x) {
          for (std::size_t y = 0; y < elems.size(); ++y) {
            rec.bump("commutators");
            Matrix c = e[a][x] * e[b][y] * einv[a][x] * einv[b][y];
            Matrix expect = Matrix::identity(R, n);
            if (j == k) expect = elementary(R, n, i, l, R.mul(elems[x], elems[y]));
            if (i == l) expect = elementary(R, n, k, j, R.neg(R.mul(elems[y], elems[x])));
            if (!(c == expect)) rec.fail(witness(a, b, x, y));
            Matrix ci = e[a][x] * einv[b][y] * einv[a][x] * e[b][y];
            if (!(ci * c).is_identity()) rec.fail("inverse rule " + witness(a, b, x, y));
          }
        }
      }
    }
  });
}

// Diag(u) e_ij(r) Diag(u)^-1 = e_ij(u_i u_j^-1 r) over every unit vector u.
inline CheckRecord check_diagonal_action(std::size_t n, Ring const& R, std::uint64_t budget = 1'000'000) {
  return timed_check("diagonal-action" + detail::tag(n, R), anchor_diagonal_action(), [&](CheckRecord& rec) {
    if (!R.is_finite()) throw Error(ErrorCode::infinite_ring, "exhaustive check needs a finite ring");
    auto units = R.enumerate_units();
    auto elems = R.enumerate_elements();
    auto pos = detail::off_diagonal(n);
    std::uint64_t tori = 1;
    for (std::size_t i = 0; i < n; ++i) tori *= units.size();
    if (tori * pos.size() * elems.size() > budget) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
      return;
    }
    std::vector<std::size_t> idx(n, 0);
    for (std::uint64_t t = 0; t < tori; ++t) {
      std::vector<RingElement> u(n);
      for (std::size_t i = 0; i < n; ++i) u[i] = units[idx[i]];
      Matrix d = diagonal(R, u);
      Matrix di = inverse(d);
      for (auto [i, j] : pos) {
        RingElement f = R.mul(u[i - 1], R.inverse(u[j - 1]));
        for (auto const& r : elems) {
          rec.bump("cases");
          if (!(d * elementary(R, n, i, j, r) * di == elementary(R, n, i, j, R.mul(f, r)))) {
            rec.fail("i,j=" + std::to_string(i) + "," + std::to_string(j) + " r=" + R.to_string(r) + " d=" + to_string(d));
          }
        }
      }
      if (!(d * di).is_identity()) rec.fail("diagonal inverse " + to_string(d));
      for (std::size_t i = 0; i < n && ++idx[i] == units.size(); ++i) idx[i] = 0;
    }
  });
}

// The product rule and Hall identity on seeded random triples of
// elementary and diagonal matrices.
inline CheckRecord check_group_identities(std::size_t n, Ring const& R, std::uint64_t seed, std::size_t samples = 200) {
  return timed_check("group-identities" + detail::tag(n, R), anchor_group_identities(), [&](CheckRecord& rec) {
    std::mt19937_64 rng(seed);
    auto elems = R.enumerate_elements();
    auto units = R.enumerate_units();
    auto pos = detail::off_diagonal(n);
    auto pick = [&]() {
      if (rng() % 4 == 0) {
        std::vector<RingElement> u(n);
        for (auto& x : u) x = units[rng() % units.size()];
        return diagonal(R, u);
      }
      auto [i, j] = pos[rng() % pos.size()];
      return elementary(R, n, i, j, elems[rng() % elems.size()]);
    };
    rec.details["seed"] = seed;
    for (std::size_t s = 0; s < samples; ++s) {
      Matrix a = pick() * pick(), b = pick() * pick(), c = pick() * pick();
      rec.bump("triples");
      if (!hall_identity_check(a, b, c)) rec.fail(to_string(a) + " " + to_string(b) + " " + to_string(c));
    }
  });
}

}  // namespace abelslab
