#pragma once

// Abels groups A_n(R) and their pattern subgroups: U_n, T_n, the center,
// the horospherical subgroups H1..H4 and the contracting subgroups
// U_i = H_i ∩ U_n.
//
// A SubgroupSpec is an upper-triangular entry pattern: each position is forced
// to 0 or 1, ranges over the units, or is free. Elements are only
// materialized on demand.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abelslab/chevalley.hpp"
#include "abelslab/error.hpp"
#include "abelslab/group.hpp"
#include "abelslab/matrix.hpp"
#include "abelslab/report.hpp"
#include "abelslab/ring.hpp"

namespace abelslab {

enum class Entry : std::uint8_t { zero, one, unit, free };

class SubgroupSpec {
 public:
  SubgroupSpec() = default;
  SubgroupSpec(std::string name, Ring ring, std::size_t n, std::vector<Entry> pattern)
      : name_(std::move(name)), ring_(std::move(ring)), n_(n), pattern_(std::move(pattern)) {
    if (pattern_.size() != n_ * n_) throw Error(ErrorCode::size_mismatch, "pattern size");
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        Entry e = pattern_[i * n_ + j];
        bool diag = i == j;
        if (diag && (e == Entry::zero || e == Entry::free)) throw Error(ErrorCode::invalid_argument, "diagonal must be one or unit");
        if (!diag && (e == Entry::one || e == Entry::unit)) throw Error(ErrorCode::invalid_argument, "off-diagonal must be zero or free");
        if (i > j && e != Entry::zero) throw Error(ErrorCode::invalid_argument, "pattern must be upper triangular");
      }
    }
  }

  std::string const& name() const { return name_; }
  Ring const& ring() const { return ring_; }
  std::size_t size() const { return n_; }
  // 1-based.
  Entry entry(std::size_t i, std::size_t j) const { return pattern_[(i - 1) * n_ + (j - 1)]; }
  std::vector<Entry> const& pattern() const { return pattern_; }

  std::vector<std::pair<std::size_t, std::size_t>> free_positions() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      for (std::size_t j = i + 1; j <= n_; ++j) {
        if (entry(i, j) == Entry::free) out.emplace_back(i, j);
      }
    }
    return out;
  }
  std::vector<std::size_t> unit_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i <= n_; ++i) {
      if (entry(i, i) == Entry::unit) out.push_back(i);
    }
    return out;
  }
  bool is_unipotent() const { return unit_positions().empty(); }

  bool contains(Matrix const& m) const {
    if (m.size() != n_ || !(m.ring() == ring_)) return false;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        RingElement const& v = m.at(i, j);
        switch (pattern_[i * n_ + j]) {
          case Entry::zero:
            if (!ring_.is_zero(v)) return false;
            break;
          case Entry::one:
            if (!ring_.is_one(v)) return false;
            break;
          case Entry::unit:
            if (!ring_.is_unit(v)) return false;
            break;
          case Entry::free:
            break;
        }
      }
    }
    return true;
  }

  // e_ij(t) for free (i,j) and t in the additive generators; D_i(u) for unit
  // positions and u in a generating set of the units.
  std::vector<Matrix> generators() const {
    std::vector<Matrix> gens;
    for (auto [i, j] : free_positions()) {
      for (auto const& t : additive_generators(ring_)) gens.push_back(elementary(ring_, n_, i, j, t));
    }
    for (auto i : unit_positions()) {
      for (auto const& u : ring_.unit_generators()) gens.push_back(diagonal_at(ring_, n_, i, u));
    }
    return gens;
  }

  // |R|^#free * |R^x|^#unit; empty for infinite rings or on overflow.
  std::optional<std::uint64_t> cardinality() const {
    if (!ring_.is_finite()) return std::nullopt;
    unsigned __int128 c = 1;
    std::uint64_t const r = static_cast<std::uint64_t>(ring_.size());
    std::uint64_t const u = ring_.enumerate_units().size();
    for (std::size_t k = 0; k < free_positions().size(); ++k) {
      c *= r;
      if (c > UINT64_MAX) return std::nullopt;
    }
    for (std::size_t k = 0; k < unit_positions().size(); ++k) {
      c *= u;
      if (c > UINT64_MAX) return std::nullopt;
    }
    return static_cast<std::uint64_t>(c);
  }

  SubgroupSpec intersect(SubgroupSpec const& o, std::string name = "") const {
    if (o.n_ != n_ || !(o.ring_ == ring_)) throw Error(ErrorCode::size_mismatch, "intersecting specs of different shape");
    std::vector<Entry> p(n_ * n_);
    for (std::size_t k = 0; k < p.size(); ++k) {
      Entry a = pattern_[k], b = o.pattern_[k];
      if (a == Entry::zero || b == Entry::zero) {
        p[k] = Entry::zero;
      } else if (a == Entry::one || b == Entry::one) {
        p[k] = Entry::one;
      } else {
        p[k] = a == Entry::unit || b == Entry::unit ? Entry::unit : Entry::free;
      }
    }
    return SubgroupSpec(name.empty() ? name_ + "∩" + o.name_ : std::move(name), ring_, n_, std::move(p));
  }

  // Calls fn(m) for every element in odometer order over the free and unit
  // positions. Returns false without calling fn when the pattern has more
  // than budget elements.
  template <class Fn>
  bool for_each_element(Fn&& fn, std::uint64_t budget = kDefaultMaxOrder) const {
    auto card = cardinality();
    if (!card) throw Error(ErrorCode::infinite_ring, "cannot enumerate over " + ring_.descriptor().to_string());
    if (*card > budget) return false;
    auto elems = ring_.enumerate_elements();
    auto units = ring_.enumerate_units();
    struct Slot {
      std::size_t i, j;
      std::vector<RingElement> const* values;
    };
    std::vector<Slot> slots;
    for (auto [i, j] : free_positions()) slots.push_back({i - 1, j - 1, &elems});
    for (auto i : unit_positions()) slots.push_back({i - 1, i - 1, &units});
    Matrix m = Matrix::identity(ring_, n_);
    std::vector<std::size_t> idx(slots.size(), 0);
    for (auto const& s : slots) m.set(s.i, s.j, (*s.values)[0]);
    for (;;) {
      fn(static_cast<Matrix const&>(m));
      std::size_t k = 0;
      for (; k < slots.size(); ++k) {
        if (++idx[k] < slots[k].values->size()) {
          m.set(slots[k].i, slots[k].j, (*slots[k].values)[idx[k]]);
          break;
        }
        idx[k] = 0;
        m.set(slots[k].i, slots[k].j, (*slots[k].values)[0]);
      }
      if (k == slots.size()) break;
    }
    return true;
  }

  static std::vector<RingElement> additive_generators(Ring const& R) {
    if (R.kind() == RingKind::zloc) return {R.one()};
    return R.additive_presentation().generators;
  }

 private:
  std::string name_;
  Ring ring_;
  std::size_t n_ = 0;
  std::vector<Entry> pattern_;
};

namespace detail {

// Builds a pattern: diagonal ones except positions in units, and free entries
// where free(i, j) holds (1-based, i < j).
template <class FreeFn>
SubgroupSpec make_pattern(std::string name, Ring const& R, std::size_t n, std::vector<std::size_t> const& units, FreeFn free) {
  std::vector<Entry> p(n * n, Entry::zero);
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = Entry::one;
  for (auto u : units) p[(u - 1) * n + (u - 1)] = Entry::unit;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (free(i, j)) p[(i - 1) * n + (j - 1)] = Entry::free;
    }
  }
  return SubgroupSpec(std::move(name), R, n, std::move(p));
}

inline std::vector<std::size_t> inner_positions(std::size_t n) {
  std::vector<std::size_t> v;
  for (std::size_t i = 2; i + 1 <= n; ++i) v.push_back(i);
  return v;
}

}  // namespace detail

inline SubgroupSpec abels_group(std::size_t n, Ring const& R) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "Abels group needs n >= 2");
  return detail::make_pattern("A", R, n, detail::inner_positions(n), [](std::size_t, std::size_t) { return true; });
}

inline SubgroupSpec unipotent_subgroup(std::size_t n, Ring const& R) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "n >= 2 required");
  return detail::make_pattern("U", R, n, {}, [](std::size_t, std::size_t) { return true; });
}

inline SubgroupSpec torus_subgroup(std::size_t n, Ring const& R) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "n >= 2 required");
  return detail::make_pattern("T", R, n, detail::inner_positions(n), [](std::size_t, std::size_t) { return false; });
}

inline std::pair<SubgroupSpec, SubgroupSpec> unipotent_and_torus(std::size_t n, Ring const& R) {
  return {unipotent_subgroup(n, R), torus_subgroup(n, R)};
}

// E_1n(R).
inline SubgroupSpec center_subgroup(std::size_t n, Ring const& R) {
  return detail::make_pattern("Z", R, n, {}, [n](std::size_t i, std::size_t j) { return i == 1 && j == n; });
}

inline SubgroupSpec horospherical(std::size_t n, Ring const& R, int which) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "horospherical subgroups need n >= 4");
  std::string name = "H" + std::to_string(which);
  switch (which) {
    case 1:
      return detail::make_pattern(name, R, n, detail::inner_positions(n), [n](std::size_t, std::size_t j) { return j <= n - 1; });
    case 2:
      return detail::make_pattern(name, R, n, detail::inner_positions(n), [](std::size_t i, std::size_t) { return i >= 2; });
    case 3:
      return detail::make_pattern(name, R, n, detail::inner_positions(n), [n](std::size_t i, std::size_t j) {
        return (i == 1 && j == 2) || (i == n - 1 && j == n);
      });
    case 4:
      if (n != 4) throw Error(ErrorCode::invalid_argument, "H4 is defined for n = 4 only");
      return detail::make_pattern(name, R, n, {2, 3}, [](std::size_t i, std::size_t j) {
        return (i == 1 && j == 3) || (i == 2 && j == 3) || (i == 2 && j == 4);
      });
    default:
      throw Error(ErrorCode::invalid_argument, "horospherical index must be 1..4");
  }
}

inline SubgroupSpec contracting(std::size_t n, Ring const& R, int which) {
  return horospherical(n, R, which).intersect(unipotent_subgroup(n, R), "U" + std::to_string(which));
}

inline std::vector<SubgroupSpec> horospherical_family(std::size_t n, Ring const& R) {
  std::vector<SubgroupSpec> out;
  for (int i = 1; i <= (n == 4 ? 4 : 3); ++i) out.push_back(horospherical(n, R, i));
  return out;
}

inline std::vector<SubgroupSpec> contracting_family(std::size_t n, Ring const& R) {
  std::vector<SubgroupSpec> out;
  for (int i = 1; i <= (n == 4 ? 4 : 3); ++i) out.push_back(contracting(n, R, i));
  return out;
}

// Names accepted on the command line: A, U, T, H1..H4, U1..U4, Z.
inline SubgroupSpec subgroup_by_name(std::string const& name, std::size_t n, Ring const& R) {
  if (name == "A") return abels_group(n, R);
  if (name == "U") return unipotent_subgroup(n, R);
  if (name == "T") return torus_subgroup(n, R);
  if (name == "Z") return center_subgroup(n, R);
  if (name.size() == 2 && (name[0] == 'H' || name[0] == 'U') && name[1] >= '1' && name[1] <= '4') {
    int k = name[1] - '0';
    return name[0] == 'H' ? horospherical(n, R, k) : contracting(n, R, k);
  }
  throw Error(ErrorCode::invalid_argument, "unknown subgroup '" + name + "'");
}

inline std::string anchor_abels() { return "Abels group structure"; }
inline std::string anchor_center() { return "center of the Abels group"; }
inline std::string anchor_semidirect() { return "semidirect decomposition A = U ⋊ T"; }
inline std::string anchor_torus_invariance() { return "torus invariance of contracting subgroups"; }
inline std::string anchor_abels_retraction() { return "retraction of A_n onto an embedded B2"; }
inline std::string anchor_fiber_product() { return "fiber product description of H4"; }

namespace detail {

inline void mark_budget(CheckRecord& rec) {
  rec.status = Status::inconclusive;
  rec.details["reason"] = "inconclusive-budget";
}

}  // namespace detail

// The closure of the generators is exactly the pattern set.
inline CheckRecord check_closure(SubgroupSpec const& S, std::uint64_t budget = kDefaultMaxOrder) {
  std::string id = "closure/" + S.name() + "/n" + std::to_string(S.size()) + "/" + S.ring().descriptor().to_string();
  return timed_check(id, anchor_abels(), [&](CheckRecord& rec) {
    auto card = S.cardinality();
    if (!card || *card > budget) {
      detail::mark_budget(rec);
      return;
    }
    FiniteGroup G = FiniteGroup::generate(S.ring(), S.size(), S.generators(), budget);
    rec.details["order"] = G.order();
    rec.details["pattern_order"] = *card;
    if (G.order() != *card) rec.fail("closure has " + std::to_string(G.order()) + " elements, pattern " + std::to_string(*card));
    for (auto const& g : G.elements()) {
      if (!S.contains(g)) {
        rec.fail("closure leaves pattern: " + to_string(g));
        break;
      }
    }
  });
}

// Brute-force center of A_n(R) compared with E_1n(R).
inline CheckRecord center_check(std::size_t n, Ring const& R, std::uint64_t budget = kDefaultMaxOrder) {
  return timed_check("center/n" + std::to_string(n) + "/" + R.descriptor().to_string(), anchor_center(), [&](CheckRecord& rec) {
    SubgroupSpec A = abels_group(n, R);
    SubgroupSpec Z = n == 2 ? A : center_subgroup(n, R);
    auto gens = A.generators();
    std::uint64_t center_size = 0;
    bool ok = A.for_each_element(
        [&](Matrix const& g) {
          bool central = true;
          for (auto const& s : gens) {
            if (!(g * s == s * g)) {
              central = false;
              break;
            }
          }
          if (central) {
            ++center_size;
            if (!Z.contains(g)) rec.fail("central element outside E_1n: " + to_string(g));
          }
        },
        budget);
    if (!ok) {
      detail::mark_budget(rec);
      return;
    }
    rec.bump("scanned", static_cast<std::int64_t>(*A.cardinality()));
    rec.details["center_order"] = center_size;
    rec.details["expected_order"] = *Z.cardinality();
    if (center_size != *Z.cardinality()) rec.fail("center order " + std::to_string(center_size));
  });
}

// A_n = U_n ⋊ T_n: unique factorization g = u t, U_n normal, U_n ∩ T_n = 1.
inline CheckRecord check_semidirect(std::size_t n, Ring const& R, std::uint64_t budget = kDefaultMaxOrder) {
  return timed_check("semidirect/n" + std::to_string(n) + "/" + R.descriptor().to_string(), anchor_semidirect(), [&](CheckRecord& rec) {
    SubgroupSpec A = abels_group(n, R);
    auto [U, T] = unipotent_and_torus(n, R);
    if (*A.cardinality() != *U.cardinality() * *T.cardinality()) rec.fail("|A| != |U||T|");
    if (U.intersect(T).cardinality() != 1u) rec.fail("U ∩ T is not trivial");
    bool ok = A.for_each_element(
        [&](Matrix const& g) {
          std::vector<RingElement> d;
          for (std::size_t i = 0; i < n; ++i) d.push_back(g.at(i, i));
          Matrix t = diagonal(R, d);
          Matrix u = g * inverse(t);
          rec.bump("factored");
          if (!U.contains(u) || !T.contains(t)) rec.fail("factorization outside U x T: " + to_string(g));
          if (!(u * t == g)) rec.fail("u t != g for " + to_string(g));
        },
        budget);
    if (!ok) {
      detail::mark_budget(rec);
      return;
    }
    for (auto const& a : A.generators()) {
      Matrix ai = inverse(a);
      for (auto const& u : U.generators()) {
        rec.bump("normality");
        if (!U.contains(a * u * ai)) rec.fail("U not normal under " + to_string(a));
      }
    }
  });
}

// Every t in T_n conjugates each generator of each U_i back into U_i.
inline CheckRecord check_torus_invariance(std::size_t n, Ring const& R, std::uint64_t budget = kDefaultMaxOrder) {
  return timed_check("torus-invariance/n" + std::to_string(n) + "/" + R.descriptor().to_string(), anchor_torus_invariance(), [&](CheckRecord& rec) {
    SubgroupSpec T = torus_subgroup(n, R);
    auto family = contracting_family(n, R);
    bool ok = T.for_each_element(
        [&](Matrix const& t) {
          for (auto const& Ui : family) {
            for (auto const& u : Ui.generators()) {
              rec.bump("conjugations");
              if (!Ui.contains(conjugate_by_diagonal(t, u))) rec.fail(Ui.name() + " not invariant under " + to_string(t));
            }
          }
        },
        budget);
    if (!ok) detail::mark_budget(rec);
    rec.details["families"] = family.size();
  });
}

// A_n(R) -> B2(R) in the (2,3) corner: keep (2,2), (2,3), (3,3).
inline Matrix abels_retraction(Matrix const& m) {
  Ring const& R = m.ring();
  Matrix out = Matrix::identity(R, m.size());
  out.set(1, 1, m.at(1, 1));
  out.set(1, 2, m.at(1, 2));
  out.set(2, 2, m.at(2, 2));
  return out;
}

inline CheckRecord check_abels_retraction(std::size_t n, Ring const& R, std::uint64_t budget = kDefaultMaxOrder) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "retraction check needs n >= 4");
  return timed_check("abels-retraction/n" + std::to_string(n) + "/" + R.descriptor().to_string(), anchor_abels_retraction(), [&](CheckRecord& rec) {
    SubgroupSpec A = abels_group(n, R);
    auto gens = A.generators();
    bool ok = A.for_each_element(
        [&](Matrix const& g) {
          Matrix rg = abels_retraction(g);
          if (!A.contains(rg)) rec.fail("image outside A_n");
          for (auto const& h : gens) {
            rec.bump("homomorphism");
            if (!(abels_retraction(g * h) == rg * abels_retraction(h))) rec.fail("not multiplicative at " + to_string(g));
          }
        },
        budget);
    if (!ok) {
      detail::mark_budget(rec);
      return;
    }
    auto units = R.enumerate_units();
    for (auto const& a : units) {
      for (auto const& c : units) {
        for (auto const& b : R.enumerate_elements()) {
          Matrix e = Matrix::identity(R, n);
          e.set(1, 1, a);
          e.set(1, 2, b);
          e.set(2, 2, c);
          rec.bump("section");
          if (!(abels_retraction(e) == e)) rec.fail("retraction moves " + to_string(e));
        }
      }
    }
  });
}

// H4 ≅ P = {(g, h) in Γ1 x Γ2 : p1(g) = p2(h)} with Q = Diag(1, *, 1, 1).
inline CheckRecord check_h4_fiber_product(Ring const& R, std::uint64_t budget = kDefaultMaxOrder) {
  return timed_check("h4-fiber-product/" + R.descriptor().to_string(), anchor_fiber_product(), [&](CheckRecord& rec) {
    std::size_t const n = 4;
    SubgroupSpec H4 = horospherical(4, R, 4);
    SubgroupSpec G1 = detail::make_pattern("Γ1", R, n, {2, 3}, [](std::size_t i, std::size_t j) {
      return (i == 1 && j == 3) || (i == 2 && j == 3);
    });
    SubgroupSpec G2 = detail::make_pattern("Γ2", R, n, {2}, [](std::size_t i, std::size_t j) { return i == 2 && j == 4; });
    auto p = [&R](Matrix const& m) { return diagonal_at(R, 4, 2, m.at(1, 1)); };
    auto to_gamma1 = [&R](Matrix const& k) {
      Matrix g = k;
      g.set(1, 3, R.zero());
      return g;
    };
    auto to_gamma2 = [&R](Matrix const& k) {
      Matrix h = Matrix::identity(R, 4);
      h.set(1, 1, k.at(1, 1));
      h.set(1, 3, k.at(1, 3));
      return h;
    };
    auto card = H4.cardinality();
    if (!card || *card > budget) {
      detail::mark_budget(rec);
      return;
    }
    std::vector<Matrix> g1s, g2s, h4s;
    G1.for_each_element([&](Matrix const& m) { g1s.push_back(m); });
    G2.for_each_element([&](Matrix const& m) { g2s.push_back(m); });
    H4.for_each_element([&](Matrix const& m) { h4s.push_back(m); });
    std::uint64_t fiber = 0;
    for (auto const& g : g1s) {
      for (auto const& h : g2s) {
        if (p(g) == p(h)) ++fiber;
      }
    }
    rec.details["fiber_order"] = fiber;
    rec.details["h4_order"] = h4s.size();
    if (fiber != h4s.size()) rec.fail("|P| = " + std::to_string(fiber) + " but |H4| = " + std::to_string(h4s.size()));
    // k -> (to_gamma1(k), to_gamma2(k)) lands in P, is injective and multiplicative.
    std::vector<std::pair<Matrix, Matrix>> images;
    for (auto const& k : h4s) {
      Matrix g = to_gamma1(k), h = to_gamma2(k);
      if (!G1.contains(g) || !G2.contains(h) || !(p(g) == p(h))) rec.fail("image outside P: " + to_string(k));
      images.emplace_back(g, h);
    }
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) rec.fail("map H4 -> P not injective");
    for (std::size_t a = 0; a < h4s.size(); ++a) {
      for (std::size_t b = 0; b < h4s.size(); ++b) {
        rec.bump("pairs");
        Matrix k = h4s[a] * h4s[b];
        if (!(to_gamma1(k) == images[a].first * images[b].first) || !(to_gamma2(k) == images[a].second * images[b].second)) {
          rec.fail("not multiplicative at " + to_string(h4s[a]) + ", " + to_string(h4s[b]));
        }
      }
    }
    if (!(to_gamma1(Matrix::identity(R, 4)).is_identity() && to_gamma2(Matrix::identity(R, 4)).is_identity())) {
      rec.fail("identity not preserved");
    }
  });
}

// H_i = U_i ⋊ (H_i ∩ T_n), U1 ∩ U2 has the U_{n-2} pattern, U3 and (n = 4) U4 abelian.
inline CheckRecord check_contracting_structure(std::size_t n, Ring const& R) {
  return timed_check("contracting/n" + std::to_string(n) + "/" + R.descriptor().to_string(), anchor_abels(), [&](CheckRecord& rec) {
    auto T = torus_subgroup(n, R);
    for (auto const& H : horospherical_family(n, R)) {
      auto Ui = H.intersect(unipotent_subgroup(n, R));
      auto Ti = H.intersect(T);
      if (*H.cardinality() != *Ui.cardinality() * *Ti.cardinality()) rec.fail(H.name() + " is not U_i x (H_i ∩ T)");
      for (auto const& t : Ti.generators()) {
        for (auto const& u : Ui.generators()) {
          if (!Ui.contains(conjugate_by_diagonal(t, u))) rec.fail(H.name() + ": U_i not normalized");
        }
      }
    }
    auto U12 = contracting(n, R, 1).intersect(contracting(n, R, 2));
    auto free12 = U12.free_positions();
    std::size_t expect = (n - 2) * (n - 3) / 2;
    rec.details["u1_u2_free"] = free12.size();
    bool window = free12.size() == expect;
    for (auto [i, j] : free12) window = window && i >= 2 && j <= n - 1;
    if (!window) rec.fail("U1 ∩ U2 is not the U_{n-2} window");
    std::vector<int> abelian{3};
    if (n == 4) abelian.push_back(4);
    for (int k : abelian) {
      auto gens = contracting(n, R, k).generators();
      for (auto const& a : gens) {
        for (auto const& b : gens) {
          rec.bump("commutators");
          if (!commutator(a, b).is_identity()) rec.fail("U" + std::to_string(k) + " not abelian");
        }
      }
    }
  });
}

}  // namespace abelslab
