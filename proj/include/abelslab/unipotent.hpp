#pragma once

// Presentations of U_n(R) and its pattern subgroups built from an additive
// presentation (T, R_add, m) of the ring, plus the matrix-side checks that
// tie them to the actual matrix groups.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "abelslab/abels.hpp"
#include "abelslab/presentation.hpp"
#include "abelslab/report.hpp"

namespace abelslab {

using Position = std::pair<std::size_t, std::size_t>;

// e12, or e1_12 once indices reach two digits; a t-suffix separates the
// additive generators when there is more than one.
inline std::string elementary_name(std::size_t n, std::size_t i, std::size_t j, std::size_t t, std::size_t tcount) {
  std::string s = "e" + std::to_string(i) + (n >= 10 ? "_" : "") + std::to_string(j);
  if (tcount > 1) s += "t" + std::to_string(t);
  return s;
}

namespace detail {

inline Word combination_word(Presentation const& p, std::size_t n, std::size_t i, std::size_t j,
                             RingAdditivePresentation::Combination const& c, std::size_t tcount) {
  Word w;
  for (std::size_t u = 0; u < c.size(); ++u) {
    Word g{p.letter(elementary_name(n, i, j, u, tcount))};
    Word piece = power_word(g, c[u]);
    w.insert(w.end(), piece.begin(), piece.end());
  }
  return free_reduce(w);
}

inline bool has_position(std::vector<Position> const& ps, Position q) {
  return std::find(ps.begin(), ps.end(), q) != ps.end();
}

// Adds generators for new positions, then the commutator and additive
// relators among `positions`. The position set must be closed: (i,j), (j,l)
// present forces (i,l).
inline void add_pattern_relations(Presentation& p, std::size_t n, std::vector<Position> const& positions,
                                  RingAdditivePresentation const& rp) {
  std::size_t const tc = rp.generators.size();
  for (auto [i, j] : positions) {
    if (i >= j || j > n || i < 1) throw Error(ErrorCode::index_out_of_range, "position outside the upper triangle");
    for (std::size_t t = 0; t < tc; ++t) {
      if (!p.find(elementary_name(n, i, j, t, tc))) p.add_generator(elementary_name(n, i, j, t, tc));
    }
  }
  for (std::size_t a = 0; a < positions.size(); ++a) {
    for (std::size_t b = 0; b < positions.size(); ++b) {
      auto [i, j] = positions[a];
      auto [k, l] = positions[b];
      if (i == l) continue;  // covered by the reversed pair
      bool chain = j == k;
      if (!chain && b < a) continue;
      if (chain && !has_position(positions, {i, l})) throw Error(ErrorCode::invalid_argument, "position set is not closed");
      for (std::size_t t = 0; t < tc; ++t) {
        for (std::size_t s = 0; s < tc; ++s) {
          if (a == b && s <= t) continue;
          Word x{p.letter(elementary_name(n, i, j, t, tc))};
          Word y{p.letter(elementary_name(n, k, l, s, tc))};
          Word rel = commutator_word(x, y);
          if (chain) rel = concat({rel, inverse_word(combination_word(p, n, i, l, rp.product[t][s], tc))});
          p.add_relator(rel);
        }
      }
    }
  }
  for (auto [i, j] : positions) {
    for (auto const& c : rp.relators) p.add_relator(combination_word(p, n, i, j, c, tc));
  }
}

inline std::vector<Position> window(std::size_t lo, std::size_t hi) {
  std::vector<Position> ps;
  for (std::size_t i = lo; i <= hi; ++i) {
    for (std::size_t j = i + 1; j <= hi; ++j) ps.emplace_back(i, j);
  }
  return ps;
}

}  // namespace detail

// Presentation of the unipotent pattern group on a closed position set.
inline Presentation pattern_presentation(std::size_t n, std::vector<Position> const& positions, RingAdditivePresentation const& rp) {
  Presentation p;
  detail::add_pattern_relations(p, n, positions, rp);
  p.dedupe_relators();
  return p;
}

inline Presentation un_canonical_presentation(std::size_t n, RingAdditivePresentation const& rp) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "n >= 2 required");
  return pattern_presentation(n, detail::window(1, n), rp);
}

// Generators e_ij with j <= n-1 and e_kn with k >= 2; relations on the two
// windows {1..n-1} and {2..n}, [e12, e_{n-1,n}] = 1, and for n = 4 also
// [e13, e24] = 1.
inline Presentation un_economic_presentation(std::size_t n, RingAdditivePresentation const& rp) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "economic presentation needs n >= 4");
  Presentation p;
  std::size_t const tc = rp.generators.size();
  std::vector<Position> gens;
  for (auto q : detail::window(1, n)) {
    if (q != Position{1, n}) gens.push_back(q);
  }
  for (auto [i, j] : gens) {
    for (std::size_t t = 0; t < tc; ++t) p.add_generator(elementary_name(n, i, j, t, tc));
  }
  detail::add_pattern_relations(p, n, detail::window(1, n - 1), rp);
  detail::add_pattern_relations(p, n, detail::window(2, n), rp);
  auto commute = [&](Position a, Position b) {
    for (std::size_t t = 0; t < tc; ++t) {
      for (std::size_t s = 0; s < tc; ++s) {
        p.add_relator(commutator_word({p.letter(elementary_name(n, a.first, a.second, t, tc))},
                                      {p.letter(elementary_name(n, b.first, b.second, s, tc))}));
      }
    }
  };
  commute({1, 2}, {n - 1, n});
  if (n == 4) commute({1, 3}, {2, 4});
  p.dedupe_relators();
  return p;
}

// Images of the pattern generators as elementary matrices.
inline std::vector<Matrix> elementary_assignment(Presentation const& p, Ring const& R, std::size_t n) {
  auto rp = R.additive_presentation();
  std::size_t const tc = rp.generators.size();
  std::vector<Matrix> images;
  for (auto const& name : p.names()) {
    bool found = false;
    for (std::size_t i = 1; i <= n && !found; ++i) {
      for (std::size_t j = i + 1; j <= n && !found; ++j) {
        for (std::size_t t = 0; t < tc && !found; ++t) {
          if (elementary_name(n, i, j, t, tc) == name) {
            images.push_back(elementary(R, n, i, j, rp.generators[t]));
            found = true;
          }
        }
      }
    }
    if (!found) throw Error(ErrorCode::invalid_argument, "generator " + name + " is not elementary");
  }
  return images;
}

inline std::string anchor_canonical_presentation() { return "standard presentation of U_n(R)"; }
inline std::string anchor_economic_presentation() { return "economic presentation of U_n(R) from the generators near the diagonal"; }
inline std::string anchor_missing_relations() { return "relations for e_1n implied by the economic presentation"; }
inline std::string anchor_colimit() { return "colimit of the contracting subgroup diagram"; }

inline std::string ring_tag(Ring const& R) { return R.descriptor().to_string(); }

// Relations for the corner subgroup e_1n in the matrix group U_n(R), exhaustively over all ring elements.
inline Report check_missing_relations(std::size_t n, Ring const& R) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "missing relations need n >= 4");
  if (!R.is_finite()) throw Error(ErrorCode::infinite_ring, "missing relations need a finite ring");
  Report rep;
  rep.suite = "missing-relations";
  rep.config = {{"n", n}, {"ring", ring_tag(R)}};
  auto elems = R.enumerate_elements();
  auto e = [&](std::size_t i, std::size_t j, RingElement t) { return elementary(R, n, i, j, t); };
  std::string tag = "/n" + std::to_string(n) + "/" + ring_tag(R);

  rep.add(timed_check("corner-disjoint" + tag, anchor_missing_relations(), [&](CheckRecord& rec) {
    for (std::size_t j = 2; j <= n - 1; ++j) {
      for (std::size_t k = 2; k <= n - 1; ++k) {
        if (j == k) continue;
        for (auto t : elems) {
          for (auto s : elems) {
            rec.bump("commutators");
            if (!commutator(e(1, j, t), e(k, n, s)).is_identity()) {
              rec.fail("[e1" + std::to_string(j) + "(" + R.to_string(t) + "), e" + std::to_string(k) + std::to_string(n) + "(" + R.to_string(s) + ")]");
            }
          }
        }
      }
    }
  }));
  rep.add(timed_check("corner-generation" + tag, anchor_missing_relations(), [&](CheckRecord& rec) {
    for (std::size_t j = 2; j <= n - 1; ++j) {
      for (auto t : elems) {
        rec.bump("identities");
        Matrix target = e(1, n, t);
        if (!(commutator(e(1, j, t), e(j, n, R.one())) == target) || !(commutator(e(1, j, R.one()), e(j, n, t)) == target)) {
          rec.fail("j=" + std::to_string(j) + " t=" + R.to_string(t));
        }
      }
    }
  }));
  rep.add(timed_check("corner-central" + tag, anchor_missing_relations(), [&](CheckRecord& rec) {
    for (auto s : elems) {
      Matrix z = e(1, n, s);
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          for (auto t : elems) {
            rec.bump("commutators");
            if (!commutator(z, e(i, j, t)).is_identity()) rec.fail("e1n(" + R.to_string(s) + ") vs e" + std::to_string(i) + std::to_string(j));
          }
        }
      }
    }
  }));
  rep.add(timed_check("corner-additive" + tag, anchor_missing_relations(), [&](CheckRecord& rec) {
    auto rp = R.additive_presentation();
    for (auto const& c : rp.relators) {
      Matrix m = Matrix::identity(R, n);
      for (std::size_t u = 0; u < c.size(); ++u) m = m * power(e(1, n, rp.generators[u]), c[u]);
      rec.bump("relators");
      if (!m.is_identity()) rec.fail("additive relator fails on e1n");
    }
  }));
  return rep;
}

namespace detail {

// Words for e_1n(t) in the economic generators: [e12(t), e2n(1)].
inline std::vector<Word> canonical_to_economic(Presentation const& canon, Presentation const& econ, std::size_t n,
                                               std::size_t tc) {
  std::vector<Word> images;
  for (std::size_t k = 0; k < canon.generator_count(); ++k) {
    auto const& nm = canon.name(k);
    if (auto idx = econ.find(nm)) {
      images.push_back({gen_letter(*idx)});
      continue;
    }
    std::size_t t = 0;
    while (elementary_name(n, 1, n, t, tc) != nm) ++t;
    images.push_back(commutator_word({econ.letter(elementary_name(n, 1, 2, t, tc))}, {econ.letter(elementary_name(n, 2, n, 0, tc))}));
  }
  return images;
}

}  // namespace detail

// Canonical and economic presentations both enumerate to |R|^{n(n-1)/2},
// both map onto U_n(R) by elementary matrices, and each presentation's
// relators hold in the other group.
inline std::vector<CheckRecord> check_presentation_equivalence(std::size_t n, Ring const& R, std::size_t max_cosets = kDefaultMaxCosets) {
  std::vector<CheckRecord> out;
  std::string tag = "/n" + std::to_string(n) + "/" + ring_tag(R);
  auto rp = R.additive_presentation();
  std::size_t const tc = rp.generators.size();
  auto U = unipotent_subgroup(n, R);
  auto expected = U.cardinality();
  Presentation canon = un_canonical_presentation(n, rp);
  CosetTable canon_tab, econ_tab;

  out.push_back(timed_check("canonical-order" + tag, anchor_canonical_presentation(), [&](CheckRecord& rec) {
    canon_tab = todd_coxeter(canon, {}, max_cosets);
    rec.details = {{"generators", canon.generator_count()}, {"relators", canon.relators().size()},
                   {"tc_status", to_string(canon_tab.status)}, {"index", canon_tab.index}, {"max_live", canon_tab.max_live}};
    if (expected) rec.details["expected"] = *expected;
    if (!canon_tab.complete()) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
    } else if (!expected || canon_tab.index != *expected) {
      rec.fail("index " + std::to_string(canon_tab.index));
    }
  }));
  out.push_back(timed_check("canonical-von-dyck" + tag, anchor_canonical_presentation(), [&](CheckRecord& rec) {
    auto images = elementary_assignment(canon, R, n);
    auto vd = von_dyck_detail(canon, images);
    rec.bump("relators", static_cast<std::int64_t>(canon.relators().size()));
    if (!vd.ok) rec.fail(canon.word_to_string(canon.relators()[vd.failing_relator]));
    if (expected && *expected <= kDefaultMaxOrder) {
      auto G = FiniteGroup::generate(R, n, images);
      rec.details["image_order"] = G.order();
      if (G.order() != *expected) rec.fail("images generate " + std::to_string(G.order()) + " elements");
    }
  }));
  if (n < 4) return out;

  Presentation econ = un_economic_presentation(n, rp);
  out.push_back(timed_check("economic-order" + tag, anchor_economic_presentation(), [&](CheckRecord& rec) {
    econ_tab = todd_coxeter(econ, {}, max_cosets);
    rec.details = {{"generators", econ.generator_count()}, {"relators", econ.relators().size()},
                   {"tc_status", to_string(econ_tab.status)}, {"index", econ_tab.index}, {"max_live", econ_tab.max_live}};
    if (expected) rec.details["expected"] = *expected;
    if (!econ_tab.complete()) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
    } else if (!expected || econ_tab.index != *expected) {
      rec.fail("index " + std::to_string(econ_tab.index));
    }
  }));
  out.push_back(timed_check("economic-von-dyck" + tag, anchor_economic_presentation(), [&](CheckRecord& rec) {
    auto images = elementary_assignment(econ, R, n);
    auto vd = von_dyck_detail(econ, images);
    rec.bump("relators", static_cast<std::int64_t>(econ.relators().size()));
    if (!vd.ok) rec.fail(econ.word_to_string(econ.relators()[vd.failing_relator]));
    if (expected && *expected <= kDefaultMaxOrder) {
      auto G = FiniteGroup::generate(R, n, images);
      rec.details["image_order"] = G.order();
      if (G.order() != *expected) rec.fail("images generate " + std::to_string(G.order()) + " elements");
    }
  }));
  out.push_back(timed_check("cross-von-dyck" + tag, anchor_economic_presentation(), [&](CheckRecord& rec) {
    if (!canon_tab.complete() || !econ_tab.complete()) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
      return;
    }
    // canonical -> economic
    auto images = detail::canonical_to_economic(canon, econ, n, tc);
    for (auto const& r : canon.relators()) {
      rec.bump("canonical_relators");
      if (!econ_tab.fixes_base(detail::map_word(r, images))) rec.fail("canonical relator " + canon.word_to_string(r));
    }
    // economic -> canonical, by name
    std::vector<Word> incl;
    for (auto const& nm : econ.names()) incl.push_back({canon.letter(nm)});
    for (auto const& r : econ.relators()) {
      rec.bump("economic_relators");
      if (!canon_tab.fixes_base(detail::map_word(r, incl))) rec.fail("economic relator " + econ.word_to_string(r));
    }
  }));
  return out;
}

// Diagram of the contracting subgroups U_i and their pairwise intersections,
// each presented by the pattern presentation on its positions.
inline ColimitDiagram contracting_diagram(std::size_t n, Ring const& R) {
  auto rp = R.additive_presentation();
  auto family = contracting_family(n, R);
  ColimitDiagram d;
  for (auto const& S : family) {
    d.node_names.push_back("u" + S.name().substr(1));
    d.nodes.push_back(pattern_presentation(n, S.free_positions(), rp));
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      ColimitDiagram::Edge e;
      e.a = a;
      e.b = b;
      auto inter = family[a].intersect(family[b]);
      e.presentation = pattern_presentation(n, inter.free_positions(), rp);
      for (auto const& nm : e.presentation.names()) {
        e.into_a.push_back({d.nodes[a].letter(nm)});
        e.into_b.push_back({d.nodes[b].letter(nm)});
      }
      d.edges.push_back(std::move(e));
    }
  }
  return d;
}

inline CheckRecord check_contracting_colimit(std::size_t n, Ring const& R, std::size_t max_cosets = kDefaultMaxCosets) {
  return timed_check("colimit/n" + std::to_string(n) + "/" + ring_tag(R), anchor_colimit(), [&](CheckRecord& rec) {
    auto d = contracting_diagram(n, R);
    Presentation colim = colimit_presentation(d);
    Presentation small = simplify(colim);
    auto tab = todd_coxeter(small, {}, max_cosets);
    auto expected = unipotent_subgroup(n, R).cardinality();
    rec.details = {{"generators", colim.generator_count()}, {"simplified_generators", small.generator_count()},
                   {"tc_status", to_string(tab.status)}, {"index", tab.index}};
    if (expected) rec.details["expected"] = *expected;
    if (!tab.complete()) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
    } else if (!expected || tab.index != *expected) {
      rec.fail("colimit order " + std::to_string(tab.index));
    }
  });
}

}  // namespace abelslab
