#include <gtest/gtest.h>

#include "abelslab/complex.hpp"
#include "abelslab/smith.hpp"

using namespace abelslab;

namespace {

SimplicialComplex from_facets(std::size_t vertices, std::vector<Simplex> const& facets) {
  SimplicialComplex K;
  for (std::uint32_t v = 0; v < vertices; ++v) K.add_vertex({0, v});
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask >> i & 1) s.push_back(f[i]);
      }
      if (s.size() < 2) continue;
      if (K.simplices.size() < s.size()) K.simplices.resize(s.size());
      K.simplices[s.size() - 1].push_back(s);
    }
  }
  K.sort_simplices();
  return K;
}

Matrix perm(Ring const& R, std::vector<std::size_t> const& images) {
  Matrix m(R, images.size());
  for (std::size_t i = 0; i < images.size(); ++i) m.set(images[i], i, R.one());
  return m;
}

}  // namespace

TEST(Smith, InvariantFactors) {
  auto s = smith_invariants({{2, 4}, {6, 8}});
  ASSERT_EQ(s.rank(), 2u);
  EXPECT_EQ(s.factors[0], 2);
  EXPECT_EQ(s.factors[1], 4);
  EXPECT_EQ(smith_invariants({{0, 0}, {0, 0}}).rank(), 0u);
  auto big = smith_invariants({{4'000'000'000'000'000'000, 3}, {3, 2}});
  EXPECT_EQ(big.rank(), 2u);
}

TEST(Complex, EmptyComplex) {
  SimplicialComplex K;
  EXPECT_EQ(K.dimension(), -1);
  EXPECT_EQ(connected_components(K), 0u);
  EXPECT_EQ(K.euler_characteristic(), 0);
}

TEST(Complex, CircleAndDisk) {
  SimplicialComplex circle = from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(connected_components(circle), 1u);
  EXPECT_EQ(homology_h1(circle).rank, 1u);
  EXPECT_EQ(is_simply_connected(circle), Verdict::no);
  SimplicialComplex disk = from_facets(3, {{0, 1, 2}});
  EXPECT_TRUE(disk.face_closed());
  EXPECT_TRUE(homology_h1(disk).trivial());
  EXPECT_EQ(is_simply_connected(disk), Verdict::yes);
  EXPECT_EQ(disk.euler_characteristic(), 1);
}

TEST(Complex, ProjectivePlaneHasTorsion) {
  // Six-vertex triangulation of RP^2.
  SimplicialComplex K = from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                        {1, 3, 5}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}});
  auto h1 = homology_h1(K);
  EXPECT_EQ(h1.rank, 0u);
  ASSERT_EQ(h1.torsion.size(), 1u);
  EXPECT_EQ(h1.torsion[0], 2);
  EXPECT_EQ(is_simply_connected(K), Verdict::no);
  EXPECT_EQ(K.euler_characteristic(), 1);
}

TEST(Complex, FundamentalGroupIndependentOfBasepoint) {
  SimplicialComplex K = from_facets(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  for (std::uint32_t b = 0; b < 5; ++b) {
    Presentation p = simplify(fundamental_group(K, b));
    EXPECT_EQ(p.generator_count(), 2u) << b;
    EXPECT_TRUE(p.relators().empty()) << b;
  }
}

TEST(Complex, EulerFromCountsMatchesBetti) {
  std::vector<SimplicialComplex> ks = {from_facets(4, {{0, 1, 2, 3}}), from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
                                      from_facets(4, {{0, 1}, {2, 3}})};
  for (auto const& K : ks) {
    auto b = betti_numbers(K);
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < b.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<std::int64_t>(b[k]);
    EXPECT_EQ(chi, K.euler_characteristic());
  }
  EXPECT_EQ(betti_numbers(ks[1]), (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(connected_components(ks[2]), 2u);
}

TEST(Complex, HomogeneityDetectsAnIsolatedVertex) {
  SimplicialComplex K = from_facets(3, {{0, 1, 2}});
  for (std::uint32_t v = 0; v < 3; ++v) K.vertices[v].color = v;
  EXPECT_TRUE(check_homogeneous_colorable(K, 2));
  K.add_vertex({0, 9});
  EXPECT_FALSE(check_homogeneous_colorable(K, 2));
}

TEST(CosetComplex, S3WithTwoTranspositionsIsAHexagon) {
  Ring Z = make_ring("z");
  Matrix a = perm(Z, {1, 0, 2}), b = perm(Z, {2, 1, 0});
  FiniteGroup G = FiniteGroup::generate(Z, 3, {a, b});
  auto cc = coset_complex(G, {{"a", {a}}, {"b", {b}}});
  EXPECT_EQ(cc.complex.count(0), 6u);
  EXPECT_EQ(cc.complex.count(1), 6u);
  EXPECT_EQ(homology_h1(cc.complex).rank, 1u);
  EXPECT_TRUE(check_homogeneous_colorable(cc.complex, 1));
  TitsOutcome o;
  auto rec = tits_criterion_check(G, {{"a", {a}}, {"b", {b}}}, "s3", kDefaultMaxCosets, &o);
  EXPECT_EQ(rec.status, Status::pass);
  EXPECT_TRUE(o.surjective);
  EXPECT_EQ(o.simply_connected, Verdict::no);
  EXPECT_EQ(o.isomorphism, Verdict::no);
}

TEST(CosetComplex, VerticesOrderedByColorThenLeastElement) {
  Ring R = make_ring("zmod:2");
  auto ac = abels_complex(4, R, true);
  auto const& vs = ac.cc.complex.vertices;
  EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end()));
  for (std::size_t v = 0; v < vs.size(); ++v) EXPECT_EQ(vs[v].rep, ac.cc.cosets[v].front());
  EXPECT_TRUE(ac.cc.complex.face_closed());
}

TEST(CosetComplex, AbelsN4OverZmod2) {
  Ring R = make_ring("zmod:2");
  auto ac = abels_complex(4, R, false);
  auto s = summarize(ac.cc.complex);
  EXPECT_EQ(s.dimension, 3);
  EXPECT_EQ(s.counts, (std::vector<std::size_t>{40, 192, 224, 64}));
  EXPECT_EQ(s.components, 1u);
  EXPECT_TRUE(s.h1.trivial());
  EXPECT_EQ(s.simply_connected, Verdict::yes);
  for (auto const& rec : check_abels_complex(4, R)) EXPECT_EQ(rec.status, Status::pass) << rec.id;
}

TEST(CosetComplex, HorosphericalAndContractingAgree) {
  Report r = compare_complexes(4, make_ring("zmod:2"));
  EXPECT_FALSE(r.any_failed());
  EXPECT_EQ(r.count(Status::pass), r.checks.size());
}

TEST(CosetComplex, DeterministicExport) {
  Ring R = make_ring("zmod:2");
  EXPECT_EQ(abels_complex(4, R, true).cc.complex.export_text(), abels_complex(4, R, true).cc.complex.export_text());
}

TEST(CosetComplex, RejectsBadFamilies) {
  Ring R = make_ring("zmod:2");
  auto ac = abels_complex(4, R, true);
  EXPECT_THROW(coset_complex(ac.group, {}), Error);
  EXPECT_THROW(abels_complex(5, make_ring("zmod:3"), false, 1000), Error);
}
