#pragma once

// Coset complexes of finite matrix groups: the nerve of the covering by all
// left cosets of a family of subgroups, with connectivity, edge-path
// fundamental group, integral homology and the action of the group.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "abelslab/abels.hpp"
#include "abelslab/error.hpp"
#include "abelslab/group.hpp"
#include "abelslab/presentation.hpp"
#include "abelslab/report.hpp"
#include "abelslab/smith.hpp"

namespace abelslab {

using Simplex = std::vector<std::uint32_t>;

struct CosetVertex {
  std::uint32_t color = 0;  // index of the family member
  std::uint32_t rep = 0;    // least element index of the coset
  auto operator<=>(CosetVertex const&) const = default;
};

class SimplicialComplex {
 public:
  std::vector<CosetVertex> vertices;
  std::vector<std::vector<Simplex>> simplices;  // simplices[k]: sorted k-simplices

  int dimension() const {
    for (std::size_t k = simplices.size(); k-- > 0;) {
      if (!simplices[k].empty()) return static_cast<int>(k);
    }
    return -1;
  }
  std::size_t count(std::size_t k) const { return k < simplices.size() ? simplices[k].size() : 0; }

  std::size_t add_vertex(CosetVertex v) {
    auto id = static_cast<std::uint32_t>(vertices.size());
    vertices.push_back(v);
    if (simplices.empty()) simplices.emplace_back();
    simplices[0].push_back({id});
    return id;
  }

  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < simplices.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(simplices[k].size());
    return chi;
  }

  bool contains(Simplex const& s) const {
    if (s.empty() || s.size() > simplices.size()) return false;
    auto const& list = simplices[s.size() - 1];
    return std::binary_search(list.begin(), list.end(), s);
  }

  // Every codimension-one face of every stored simplex is stored.
  bool face_closed() const {
    for (std::size_t k = 1; k < simplices.size(); ++k) {
      for (auto const& s : simplices[k]) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          Simplex f;
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != drop) f.push_back(s[i]);
          }
          if (!contains(f)) return false;
        }
      }
    }
    return true;
  }

  // Lines "dim v0 v1 ... vk".
  std::string export_text() const {
    std::string out;
    for (std::size_t k = 0; k < simplices.size(); ++k) {
      for (auto const& s : simplices[k]) {
        out += std::to_string(k);
        for (auto v : s) out += " " + std::to_string(v);
        out += '\n';
      }
    }
    return out;
  }

  void sort_simplices() {
    for (auto& list : simplices) {
      for (auto& s : list) std::sort(s.begin(), s.end());
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    while (!simplices.empty() && simplices.back().empty()) simplices.pop_back();
  }
};

struct FamilyMember {
  std::string name;
  std::vector<Matrix> generators;
};

inline FamilyMember family_member(SubgroupSpec const& S) { return {S.name(), S.generators()}; }

inline std::vector<FamilyMember> family_members(std::vector<SubgroupSpec> const& specs) {
  std::vector<FamilyMember> out;
  for (auto const& s : specs) out.push_back(family_member(s));
  return out;
}

struct CosetComplex {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> members;   // sorted element indices of each subgroup
  std::vector<std::vector<std::uint32_t>> coset_of;  // [color][element] -> vertex id
  std::vector<std::vector<std::uint32_t>> cosets;    // vertex id -> sorted elements
  SimplicialComplex complex;
};

// Vertices are the left cosets gH, ordered by (color, least element). The
// cosets g H_i, i in S, always meet in g, and every simplex arises this way,
// so simplices are read off element by element.
inline CosetComplex coset_complex(FiniteGroup const& G, std::vector<FamilyMember> const& family) {
  if (family.empty()) throw Error(ErrorCode::invalid_argument, "family must be nonempty");
  if (family.size() > 16) throw Error(ErrorCode::invalid_argument, "at most 16 family members");
  CosetComplex cc;
  std::size_t const order = G.order();
  std::vector<std::pair<CosetVertex, std::vector<std::uint32_t>>> verts;
  for (std::size_t c = 0; c < family.size(); ++c) {
    cc.names.push_back(family[c].name);
    cc.members.push_back(G.subgroup(family[c].generators));
    std::vector<Perm> acts;
    for (auto const& h : family[c].generators) acts.push_back(G.right_action(h));
    std::vector<char> seen(order, 0);
    for (std::uint32_t g = 0; g < order; ++g) {
      if (seen[g]) continue;
      std::vector<std::uint32_t> coset = acts.empty() ? std::vector<std::uint32_t>{g} : FiniteGroup::orbit(g, acts);
      for (auto x : coset) seen[x] = 1;
      std::sort(coset.begin(), coset.end());
      verts.push_back({{static_cast<std::uint32_t>(c), coset.front()}, std::move(coset)});
    }
  }
  std::sort(verts.begin(), verts.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
  cc.coset_of.assign(family.size(), std::vector<std::uint32_t>(order));
  for (std::uint32_t v = 0; v < verts.size(); ++v) {
    cc.complex.add_vertex(verts[v].first);
    for (auto x : verts[v].second) cc.coset_of[verts[v].first.color][x] = v;
    cc.cosets.push_back(std::move(verts[v].second));
  }
  std::size_t const k = family.size();
  cc.complex.simplices.resize(k);
  std::vector<std::set<Simplex>> found(k);
  for (std::uint32_t g = 0; g < order; ++g) {
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      Simplex s;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask & (1u << c)) s.push_back(cc.coset_of[c][g]);
      }
      found[s.size() - 1].insert(std::move(s));
    }
  }
  for (std::size_t d = 1; d < k; ++d) cc.complex.simplices[d].assign(found[d].begin(), found[d].end());
  cc.complex.sort_simplices();
  return cc;
}

namespace detail {

struct UnionFind {
  std::vector<std::uint32_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;
    return true;
  }
};

}  // namespace detail

inline std::size_t connected_components(SimplicialComplex const& K) {
  detail::UnionFind uf(K.vertices.size());
  std::size_t comps = K.vertices.size();
  if (K.simplices.size() > 1) {
    for (auto const& e : K.simplices[1]) comps -= uf.unite(e[0], e[1]);
  }
  return comps;
}

// Edge-path group from a breadth-first spanning tree (neighbors in vertex
// order): one generator per non-tree edge, one relator per 2-simplex.
inline Presentation fundamental_group(SimplicialComplex const& K, std::uint32_t basepoint = 0) {
  if (K.vertices.empty()) throw Error(ErrorCode::disconnected_complex, "empty complex");
  if (basepoint >= K.vertices.size()) throw Error(ErrorCode::index_out_of_range, "basepoint");
  std::vector<std::vector<std::uint32_t>> adj(K.vertices.size());
  if (K.simplices.size() > 1) {
    for (auto const& e : K.simplices[1]) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> seen(K.vertices.size(), 0);
  std::set<std::pair<std::uint32_t, std::uint32_t>> tree;
  std::vector<std::uint32_t> queue{basepoint};
  seen[basepoint] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (auto w : adj[queue[h]]) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push_back(w);
      tree.insert({std::min(queue[h], w), std::max(queue[h], w)});
    }
  }
  if (queue.size() != K.vertices.size()) throw Error(ErrorCode::disconnected_complex, "complex is not connected");
  Presentation p;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Letter> edge_gen;
  if (K.simplices.size() > 1) {
    for (auto const& e : K.simplices[1]) {
      std::pair<std::uint32_t, std::uint32_t> key{e[0], e[1]};
      if (tree.count(key)) continue;
      edge_gen[key] = gen_letter(p.add_generator("g" + std::to_string(e[0]) + "_" + std::to_string(e[1])));
    }
  }
  auto edge_word = [&](std::uint32_t a, std::uint32_t b) -> Word {
    auto it = edge_gen.find({std::min(a, b), std::max(a, b)});
    if (it == edge_gen.end()) return {};
    return {a < b ? it->second : -it->second};
  };
  if (K.simplices.size() > 2) {
    for (auto const& t : K.simplices[2]) p.add_relator(concat({edge_word(t[0], t[1]), edge_word(t[1], t[2]), edge_word(t[2], t[0])}));
  }
  return p;
}

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

namespace detail {

// Boundary map C_k -> C_{k-1} as triplets (row: face, column: simplex).
inline std::vector<Triplet> boundary_triplets(SimplicialComplex const& K, std::size_t k) {
  std::vector<Triplet> out;
  if (k == 0 || k >= K.simplices.size()) return out;
  auto const& faces = K.simplices[k - 1];
  for (std::size_t col = 0; col < K.simplices[k].size(); ++col) {
    auto const& s = K.simplices[k][col];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex f;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) f.push_back(s[i]);
      }
      auto it = std::lower_bound(faces.begin(), faces.end(), f);
      if (it == faces.end() || *it != f) throw Error(ErrorCode::invalid_argument, "complex is not closed under faces");
      out.push_back({static_cast<std::size_t>(it - faces.begin()), col, drop % 2 ? -1 : 1});
    }
  }
  return out;
}

inline SmithInvariants boundary_smith(SimplicialComplex const& K, std::size_t k) {
  std::size_t rows = k >= 1 && k - 1 < K.simplices.size() ? K.simplices[k - 1].size() : 0;
  std::size_t cols = k < K.simplices.size() ? K.simplices[k].size() : 0;
  return smith_invariants(rows, cols, boundary_triplets(K, k));
}

}  // namespace detail

inline std::size_t boundary_rank(SimplicialComplex const& K, std::size_t k) {
  if (k == 0 || k >= K.simplices.size()) return 0;
  return detail::boundary_smith(K, k).rank();
}

// H_k = ker d_k / im d_{k+1}.
inline HomologyGroup homology(SimplicialComplex const& K, std::size_t k) {
  HomologyGroup h;
  std::size_t const ck = K.count(k);
  std::size_t const rk = boundary_rank(K, k);
  if (k + 1 < K.simplices.size()) {
    auto snf = detail::boundary_smith(K, k + 1);
    h.rank = ck - rk - snf.rank();
    for (auto const& f : snf.factors) {
      if (f > 1) h.torsion.push_back(f);
    }
  } else {
    h.rank = ck - rk;
  }
  return h;
}

inline HomologyGroup homology_h1(SimplicialComplex const& K) { return homology(K, 1); }

inline std::vector<std::size_t> betti_numbers(SimplicialComplex const& K) {
  std::vector<std::size_t> ranks(K.simplices.size() + 1, 0);
  for (std::size_t k = 1; k < K.simplices.size(); ++k) ranks[k] = boundary_rank(K, k);
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k < K.simplices.size(); ++k) b.push_back(K.count(k) - ranks[k] - ranks[k + 1]);
  return b;
}

enum class Verdict { yes, no, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

// "no" when H1 is nonzero, "yes" when the simplified edge-path group
// enumerates to a single coset, otherwise inconclusive.
inline Verdict is_simply_connected(SimplicialComplex const& K, std::size_t budget = kDefaultMaxCosets) {
  if (connected_components(K) != 1) throw Error(ErrorCode::disconnected_complex, "complex is not connected");
  if (!homology_h1(K).trivial()) return Verdict::no;
  Presentation pi = simplify(fundamental_group(K));
  if (pi.generator_count() == 0) return Verdict::yes;
  auto tab = todd_coxeter(pi, {}, budget);
  if (tab.complete() && tab.index == 1) return Verdict::yes;
  return Verdict::inconclusive;
}

// Pairwise distinct colors on every simplex, and every maximal simplex of
// the expected dimension.
inline bool check_homogeneous_colorable(SimplicialComplex const& K, int expected_dim) {
  if (K.dimension() != expected_dim) return false;
  for (auto const& list : K.simplices) {
    for (auto const& s : list) {
      std::set<std::uint32_t> colors;
      for (auto v : s) colors.insert(K.vertices[v].color);
      if (colors.size() != s.size()) return false;
    }
  }
  std::vector<std::set<Simplex>> covered(K.simplices.size());
  for (std::size_t k = K.simplices.size(); k-- > 0;) {
    for (auto const& s : K.simplices[k]) {
      if (static_cast<int>(k) != expected_dim && !covered[k].count(s)) return false;
      if (k == 0) continue;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex f;
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (i != drop) f.push_back(s[i]);
        }
        covered[k - 1].insert(std::move(f));
      }
    }
  }
  return true;
}

inline std::string anchor_coset_complex() { return "coset complex as nerve of the covering by cosets"; }
inline std::string anchor_colorable() { return "coset complex is colorable and homogeneous"; }
inline std::string anchor_fundamental_domain() { return "fundamental domain and cell stabilizers"; }
inline std::string anchor_tits() { return "connectivity and simple connectivity versus the colimit map"; }
inline std::string anchor_unipotent_comparison() { return "coset complexes of the horospherical and contracting families"; }

// Left multiplication on vertices: g.(xH) = (gx)H.
inline std::vector<std::uint32_t> vertex_action(FiniteGroup const& G, CosetComplex const& cc, Matrix const& g) {
  std::vector<std::uint32_t> out(cc.cosets.size());
  for (std::size_t v = 0; v < cc.cosets.size(); ++v) {
    auto const& vert = cc.complex.vertices[v];
    out[v] = cc.coset_of[vert.color][G.require_index(g * G.element(vert.rep))];
  }
  return out;
}

// Orbits of the left action on simplices, one maximal-simplex orbit, and each
// cell stabilizer equal to g (∩ H_i) g^-1 for g in the common intersection.
inline Report action_analysis(FiniteGroup const& G, CosetComplex const& cc, std::string const& label = "") {
  Report rep;
  rep.suite = "action";
  rep.config = {{"group", label}, {"order", G.order()}};
  SimplicialComplex const& K = cc.complex;
  std::vector<std::vector<std::uint32_t>> acts;
  for (auto const& g : G.generators().empty() ? G.elements() : G.generators()) acts.push_back(vertex_action(G, cc, g));

  rep.add(timed_check("type-preserving/" + label, anchor_fundamental_domain(), [&](CheckRecord& rec) {
    for (auto const& a : acts) {
      for (std::size_t v = 0; v < a.size(); ++v) {
        if (K.vertices[a[v]].color != K.vertices[v].color) rec.fail("vertex " + std::to_string(v) + " changes color");
      }
    }
  }));

  std::set<Simplex> maximal;
  {
    std::set<Simplex> faces;
    for (std::size_t k = K.simplices.size(); k-- > 0;) {
      for (auto const& s : K.simplices[k]) {
        if (!faces.count(s)) maximal.insert(s);
        for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
          Simplex f;
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i != drop) f.push_back(s[i]);
          }
          faces.insert(std::move(f));
        }
      }
    }
  }

  rep.add(timed_check("orbits/" + label, anchor_fundamental_domain(), [&](CheckRecord& rec) {
    auto orbit_ids = nlohmann::json::array();
    std::size_t max_orbits = 0;
    for (std::size_t k = 0; k < K.simplices.size(); ++k) {
      auto const& list = K.simplices[k];
      detail::UnionFind uf(list.size());
      for (auto const& a : acts) {
        for (std::size_t i = 0; i < list.size(); ++i) {
          Simplex img;
          for (auto v : list[i]) img.push_back(a[v]);
          std::sort(img.begin(), img.end());
          auto it = std::lower_bound(list.begin(), list.end(), img);
          if (it == list.end() || *it != img) {
            rec.fail("action does not preserve the simplex list");
            continue;
          }
          uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(it - list.begin()));
        }
      }
      std::set<std::uint32_t> roots, max_roots;
      for (std::size_t i = 0; i < list.size(); ++i) {
        roots.insert(uf.find(static_cast<std::uint32_t>(i)));
        if (maximal.count(list[i])) max_roots.insert(uf.find(static_cast<std::uint32_t>(i)));
      }
      orbit_ids.push_back(roots.size());
      max_orbits += max_roots.size();
    }
    rec.details["orbits_per_dimension"] = orbit_ids;
    rec.details["maximal_simplex_orbits"] = max_orbits;
    if (max_orbits != 1) rec.fail(std::to_string(max_orbits) + " orbits of maximal simplices");
  }));

  rep.add(timed_check("stabilizers/" + label, anchor_fundamental_domain(), [&](CheckRecord& rec) {
    // Vertex stabilizers elementwise: x fixes v iff x * rep(v) lies in v.
    std::vector<std::vector<std::uint32_t>> vstab(K.vertices.size());
    for (std::uint32_t x = 0; x < G.order(); ++x) {
      for (std::size_t v = 0; v < K.vertices.size(); ++v) {
        auto const& vert = K.vertices[v];
        if (cc.coset_of[vert.color][G.require_index(G.element(x) * G.element(vert.rep))] == v) vstab[v].push_back(x);
      }
    }
    for (std::size_t k = 0; k < K.simplices.size(); ++k) {
      for (auto const& s : K.simplices[k]) {
        std::vector<std::uint32_t> stab = vstab[s[0]];
        std::vector<std::uint32_t> common = cc.cosets[s[0]];
        std::vector<std::uint32_t> inter = cc.members[K.vertices[s[0]].color];
        for (std::size_t i = 1; i < s.size(); ++i) {
          std::vector<std::uint32_t> t;
          std::set_intersection(stab.begin(), stab.end(), vstab[s[i]].begin(), vstab[s[i]].end(), std::back_inserter(t));
          stab = std::move(t);
          t.clear();
          std::set_intersection(common.begin(), common.end(), cc.cosets[s[i]].begin(), cc.cosets[s[i]].end(), std::back_inserter(t));
          common = std::move(t);
          t.clear();
          auto const& m = cc.members[K.vertices[s[i]].color];
          std::set_intersection(inter.begin(), inter.end(), m.begin(), m.end(), std::back_inserter(t));
          inter = std::move(t);
        }
        if (common.empty()) {
          rec.fail("simplex without common element");
          continue;
        }
        Matrix const& g = G.element(common.front());
        Matrix gi = inverse(g);
        std::vector<std::uint32_t> conj;
        for (auto h : inter) conj.push_back(G.require_index(g * G.element(h) * gi));
        std::sort(conj.begin(), conj.end());
        rec.bump("dim" + std::to_string(k));
        if (conj != stab) {
          std::string ws = "simplex";
          for (auto v : s) ws += " " + std::to_string(v);
          rec.fail(ws);
        }
      }
    }
  }));
  rep.sort_checks();
  return rep;
}

// ---------------------------------------------------------------------------
// Colimit of a subgroup family and the map to the ambient group

struct FamilyDiagram {
  ColimitDiagram diagram;
  std::vector<std::vector<Matrix>> node_generators;  // image of each node generator in G
};

// Nodes and edges presented by their Cayley presentations; each edge
// generator goes to its spanning-tree word in either parent.
inline FamilyDiagram family_diagram(FiniteGroup const& G, std::vector<FamilyMember> const& family) {
  FamilyDiagram fd;
  std::vector<CayleyPresentation> cayley;
  std::vector<std::vector<std::uint32_t>> members;
  for (std::size_t a = 0; a < family.size(); ++a) {
    members.push_back(G.subgroup(family[a].generators));
    cayley.push_back(cayley_presentation(family[a].generators, G.ring(), G.degree()));
    std::string nm = family[a].name;
    for (auto& ch : nm) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    fd.diagram.node_names.push_back(nm);
    fd.diagram.nodes.push_back(cayley.back().presentation);
    fd.node_generators.push_back(family[a].generators);
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      std::vector<std::uint32_t> inter;
      std::set_intersection(members[a].begin(), members[a].end(), members[b].begin(), members[b].end(), std::back_inserter(inter));
      std::vector<Matrix> gens = greedy_generators(G, inter);
      ColimitDiagram::Edge e;
      e.a = a;
      e.b = b;
      e.presentation = cayley_presentation(gens, G.ring(), G.degree()).presentation;
      for (auto const& g : gens) {
        e.into_a.push_back(cayley[a].words.at(g));
        e.into_b.push_back(cayley[b].words.at(g));
      }
      fd.diagram.edges.push_back(std::move(e));
    }
  }
  return fd;
}

struct TitsOutcome {
  std::size_t components = 0;
  bool surjective = false;
  std::size_t image_order = 0;
  Verdict simply_connected = Verdict::inconclusive;
  Verdict isomorphism = Verdict::inconclusive;
  std::optional<std::size_t> colimit_order;
  HomologyGroup h1;
};

// Both directions of: CC connected iff pi surjective, CC simply connected iff
// pi an isomorphism. The colimit side is computed from the diagram alone.
inline CheckRecord tits_criterion_check(FiniteGroup const& G, std::vector<FamilyMember> const& family, std::string const& label,
                                        std::size_t max_cosets = kDefaultMaxCosets, TitsOutcome* outcome = nullptr) {
  return timed_check("tits/" + label, anchor_tits(), [&](CheckRecord& rec) {
    TitsOutcome o;
    CosetComplex cc = coset_complex(G, family);
    o.components = connected_components(cc.complex);
    o.h1 = homology_h1(cc.complex);
    if (o.components == 1) {
      o.simply_connected = is_simply_connected(cc.complex, max_cosets);
    } else {
      o.simply_connected = Verdict::no;
    }
    std::vector<Matrix> all;
    for (auto const& m : family) all.insert(all.end(), m.generators.begin(), m.generators.end());
    o.image_order = G.subgroup(all).size();
    o.surjective = o.image_order == G.order();

    FamilyDiagram fd = family_diagram(G, family);
    Presentation colim = colimit_presentation(fd.diagram);
    std::vector<Matrix> images;
    for (auto const& gens : fd.node_generators) images.insert(images.end(), gens.begin(), gens.end());
    if (!von_dyck_check(colim, images)) rec.fail("colimit relators do not hold in G");
    auto tab = todd_coxeter(simplify(colim), {}, max_cosets);
    if (tab.complete()) {
      o.colimit_order = tab.index;
      o.isomorphism = o.surjective && tab.index == G.order() ? Verdict::yes : Verdict::no;
    } else if (!o.surjective) {
      o.isomorphism = Verdict::no;
    } else {
      // A finite quotient larger than the image proves non-injectivity.
      Presentation q = colim;
      std::vector<Matrix> inv;
      for (auto const& m : images) inv.push_back(inverse(m));
      auto elem_order = [&](Word const& w) {
        Matrix m = evaluate_word(w, images, inv), x = m;
        std::size_t k = 1;
        while (!x.is_identity()) {
          x = x * m;
          ++k;
        }
        return k;
      };
      for (std::size_t s = 0; s < colim.generator_count(); ++s) {
        Word ws{gen_letter(s)};
        q.add_relator(power_word(ws, static_cast<std::int64_t>(elem_order(ws))));
        for (std::size_t t = s + 1; t < colim.generator_count(); ++t) {
          Word st{gen_letter(s), gen_letter(t)};
          q.add_relator(power_word(st, 2 * static_cast<std::int64_t>(elem_order(st))));
        }
      }
      auto qt = todd_coxeter(simplify(q), {}, max_cosets);
      rec.details["quotient_status"] = to_string(qt.status);
      if (qt.complete()) rec.details["quotient_order"] = qt.index;
      if (qt.complete() && qt.index > o.image_order) o.isomorphism = Verdict::no;
    }
    rec.details["components"] = o.components;
    rec.details["surjective"] = o.surjective;
    rec.details["image_order"] = o.image_order;
    rec.details["group_order"] = G.order();
    rec.details["simply_connected"] = to_string(o.simply_connected);
    rec.details["isomorphism"] = to_string(o.isomorphism);
    rec.details["h1_rank"] = o.h1.rank;
    rec.details["h1_torsion"] = o.h1.torsion.size();
    if (o.colimit_order) rec.details["colimit_order"] = *o.colimit_order;
    bool connected = o.components == 1;
    if (connected != o.surjective) rec.fail("connected=" + std::to_string(connected) + " surjective=" + std::to_string(o.surjective));
    if (!connected && o.components != G.order() / o.image_order) rec.fail("component count differs from the index of the image");
    if (o.simply_connected != Verdict::inconclusive && o.isomorphism != Verdict::inconclusive) {
      if (o.simply_connected != o.isomorphism) rec.fail("simply connected " + to_string(o.simply_connected) + " vs isomorphism " + to_string(o.isomorphism));
    } else if (rec.status == Status::pass) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
    }
    if (outcome) *outcome = o;
  });
}

// ---------------------------------------------------------------------------
// Abels families

struct AbelsComplex {
  FiniteGroup group;
  CosetComplex cc;
};

inline AbelsComplex abels_complex(std::size_t n, Ring const& R, bool unipotent, std::size_t max_order = kDefaultMaxOrder) {
  SubgroupSpec ambient = unipotent ? unipotent_subgroup(n, R) : abels_group(n, R);
  auto card = ambient.cardinality();
  if (!card || *card > max_order) throw Error(ErrorCode::budget_exceeded, "ambient group exceeds the order budget");
  AbelsComplex ac;
  ac.group = FiniteGroup::generate(R, n, ambient.generators(), max_order);
  auto family = unipotent ? contracting_family(n, R) : horospherical_family(n, R);
  ac.cc = coset_complex(ac.group, family_members(family));
  return ac;
}

struct ComplexSummary {
  int dimension = -1;
  std::size_t components = 0;
  HomologyGroup h1;
  Verdict simply_connected = Verdict::inconclusive;
  std::vector<std::size_t> counts;
};

inline ComplexSummary summarize(SimplicialComplex const& K, std::size_t max_cosets = kDefaultMaxCosets) {
  ComplexSummary s;
  s.dimension = K.dimension();
  s.components = connected_components(K);
  s.h1 = homology_h1(K);
  s.simply_connected = s.components == 1 ? is_simply_connected(K, max_cosets) : Verdict::no;
  for (auto const& l : K.simplices) s.counts.push_back(l.size());
  return s;
}

inline nlohmann::json to_json(ComplexSummary const& s) {
  nlohmann::json torsion = nlohmann::json::array();
  for (auto const& t : s.h1.torsion) torsion.push_back(t.str());
  return {{"dimension", s.dimension}, {"components", s.components}, {"h1_rank", s.h1.rank}, {"h1_torsion", torsion},
          {"simply_connected", to_string(s.simply_connected)}, {"simplex_counts", s.counts}};
}

// CC of the horospherical family in A_n(R) against CC of the contracting
// family in U_n(R): component counts, H1 and simple connectivity must agree.
inline Report compare_complexes(std::size_t n, Ring const& R, std::size_t max_cosets = kDefaultMaxCosets,
                                std::size_t max_order = kDefaultMaxOrder) {
  if (n < 4) throw Error(ErrorCode::invalid_argument, "comparison needs n >= 4");
  if (!R.is_finite()) throw Error(ErrorCode::infinite_ring, "comparison needs a finite ring");
  Report rep;
  rep.suite = "compare";
  rep.config = {{"n", n}, {"ring", R.descriptor().to_string()}};
  std::string tag = "/n" + std::to_string(n) + "/" + R.descriptor().to_string();
  ComplexSummary full, uni;
  rep.add(timed_check("horospherical" + tag, anchor_unipotent_comparison(), [&](CheckRecord& rec) {
    full = summarize(abels_complex(n, R, false, max_order).cc.complex, max_cosets);
    rec.details = to_json(full);
    if (full.simply_connected == Verdict::inconclusive) rec.status = Status::inconclusive;
  }));
  rep.add(timed_check("contracting" + tag, anchor_unipotent_comparison(), [&](CheckRecord& rec) {
    uni = summarize(abels_complex(n, R, true, max_order).cc.complex, max_cosets);
    rec.details = to_json(uni);
    if (uni.simply_connected == Verdict::inconclusive) rec.status = Status::inconclusive;
  }));
  rep.add(timed_check("agreement" + tag, anchor_unipotent_comparison(), [&](CheckRecord& rec) {
    if (full.components != uni.components) rec.fail("component counts differ");
    if (full.h1.rank != uni.h1.rank || full.h1.torsion != uni.h1.torsion) rec.fail("H1 differs");
    if (full.simply_connected == Verdict::inconclusive || uni.simply_connected == Verdict::inconclusive) {
      if (rec.status == Status::pass) rec.status = Status::inconclusive;
    } else if (full.simply_connected != uni.simply_connected) {
      rec.fail("simple connectivity differs");
    }
  }));
  return rep;
}

// Dimension, colorability, homogeneity, connectivity, simple connectivity
// and H1 of CC(H(n,R)).
inline std::vector<CheckRecord> check_abels_complex(std::size_t n, Ring const& R, std::size_t max_cosets = kDefaultMaxCosets,
                                                    std::size_t max_order = kDefaultMaxOrder) {
  std::vector<CheckRecord> out;
  std::string tag = "/n" + std::to_string(n) + "/" + R.descriptor().to_string();
  AbelsComplex ac = abels_complex(n, R, false, max_order);
  int expected = n == 4 ? 3 : 2;
  SimplicialComplex const& K = ac.cc.complex;
  out.push_back(timed_check("structure" + tag, anchor_colorable(), [&](CheckRecord& rec) {
    rec.details = {{"dimension", K.dimension()}, {"expected_dimension", expected}, {"face_closed", K.face_closed()}};
    if (K.dimension() != expected) rec.fail("dimension " + std::to_string(K.dimension()));
    if (!K.face_closed()) rec.fail("not closed under faces");
    if (!check_homogeneous_colorable(K, expected)) rec.fail("not homogeneous and colorable");
  }));
  out.push_back(timed_check("topology" + tag, anchor_coset_complex(), [&](CheckRecord& rec) {
    auto s = summarize(K, max_cosets);
    rec.details = to_json(s);
    if (s.components != 1) rec.fail(std::to_string(s.components) + " components");
    if (!s.h1.trivial()) rec.fail("H1 nonzero");
    if (s.simply_connected == Verdict::no) rec.fail("not simply connected");
    if (s.simply_connected == Verdict::inconclusive && rec.status == Status::pass) {
      rec.status = Status::inconclusive;
      rec.details["reason"] = "inconclusive-budget";
    }
  }));
  auto act = action_analysis(ac.group, ac.cc, "n" + std::to_string(n) + "/" + R.descriptor().to_string());
  for (auto& c : act.checks) {
    c.id = "action-" + c.id;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace abelslab
