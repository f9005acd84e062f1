#include <gtest/gtest.h>

#include "abelslab/unipotent.hpp"

using namespace abelslab;

namespace {

Presentation text(std::string const& s) { return Presentation::parse(s); }

}  // namespace

TEST(Words, ReductionAndInverse) {
  Word w = {1, 2, -2, -1, 3};
  EXPECT_EQ(free_reduce(w), (Word{3}));
  EXPECT_EQ(cyclic_reduce({1, 2, 3, -1}), (Word{2, 3}));
  EXPECT_EQ(inverse_word({1, -2}), (Word{2, -1}));
  EXPECT_EQ(power_word({1, 2}, -2), (Word{-2, -1, -2, -1}));
  EXPECT_EQ(commutator_word({1}, {2}), (Word{1, 2, -1, -2}));
  EXPECT_EQ(cyclic_canonical({2, 1}), cyclic_canonical({1, 2}));
}

TEST(ToddCoxeter, CyclicGroup) {
  auto t = todd_coxeter(text("a\na a a a a\n"));
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.index, 5u);
  EXPECT_TRUE(t.fixes_base({1, 1, 1, 1, 1}));
  EXPECT_FALSE(t.fixes_base({1, 1}));
}

TEST(ToddCoxeter, SymmetricGroupS3) {
  Presentation p = text("a b\na a\nb b\na b a b a b\n");
  auto t = todd_coxeter(p);
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.index, 6u);
  auto sub = todd_coxeter(p, {{1}});
  ASSERT_TRUE(sub.complete());
  EXPECT_EQ(sub.index, 3u);
}

TEST(ToddCoxeter, InfiniteDihedralOverflows) {
  auto t = todd_coxeter(text("a b\na a\nb b\n"), {}, 1000);
  EXPECT_EQ(t.status, TCStatus::overflow);
  EXPECT_EQ(to_string(t.status), "overflow");
}

TEST(ToddCoxeter, TrivialAndFreeCases) {
  auto t = todd_coxeter(text("a b\na\nb\n"));
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.index, 1u);
  EXPECT_EQ(todd_coxeter(text("a\n"), {}, 500).status, TCStatus::overflow);
}

TEST(Presentation, TextRoundTrip) {
  Presentation p = text("x y # generators\nx x X\n\nx y X Y\n");
  EXPECT_EQ(p.relators().size(), 2u);
  Presentation q = Presentation::parse(p.to_text());
  EXPECT_EQ(q.names(), p.names());
  EXPECT_EQ(q.relators(), p.relators());
  EXPECT_THROW(text("x\nz\n"), Error);
  EXPECT_THROW(text("# nothing\n"), Error);
}

TEST(Presentation, SimplifyKeepsTheGroup) {
  Presentation p = text("a b c\nc A B\na a a\nb b\na b A B\n");
  Presentation s = simplify(p);
  EXPECT_LT(s.generator_count(), p.generator_count());
  EXPECT_EQ(todd_coxeter(s).index, 6u);
  EXPECT_EQ(todd_coxeter(p).index, 6u);
}

TEST(Unipotent, TwoByTwoOverZmod4IsCyclic) {
  Presentation p = un_canonical_presentation(2, make_ring("zmod:4").additive_presentation());
  ASSERT_EQ(p.generator_count(), 1u);
  ASSERT_EQ(p.relators().size(), 1u);
  EXPECT_EQ(p.relators()[0], (Word{1, 1, 1, 1}));
  EXPECT_EQ(todd_coxeter(p).index, 4u);
}

TEST(Unipotent, CanonicalAndEconomicOrders) {
  for (auto [n, d, order] : std::vector<std::tuple<std::size_t, std::string, std::size_t>>{
           {3, "zmod:3", 27}, {4, "zmod:2", 64}, {4, "polyq:2:0,0,1", 4096}}) {
    auto rp = make_ring(d).additive_presentation();
    EXPECT_EQ(todd_coxeter(un_canonical_presentation(n, rp)).index, order) << n << " " << d;
    if (n >= 4) EXPECT_EQ(todd_coxeter(un_economic_presentation(n, rp)).index, order) << n << " " << d;
  }
}

TEST(Unipotent, EquivalenceAndCornerRelations) {
  Ring R = make_ring("zmod:3");
  for (auto const& rec : check_presentation_equivalence(4, R)) EXPECT_EQ(rec.status, Status::pass) << rec.id;
  Report miss = check_missing_relations(5, make_ring("zmod:2"));
  EXPECT_EQ(miss.checks.size(), 4u);
  EXPECT_FALSE(miss.any_failed());
}

TEST(VonDyck, AssignmentSatisfiesRelators) {
  Ring R = make_ring("zmod:2");
  Presentation p = un_economic_presentation(4, R.additive_presentation());
  auto images = elementary_assignment(p, R, 4);
  EXPECT_TRUE(von_dyck_check(p, images));
}

TEST(VonDyck, CorruptedRelatorIsDetected) {
  Ring R = make_ring("zmod:3");
  Presentation p = un_canonical_presentation(3, R.additive_presentation());
  auto images = elementary_assignment(p, R, 3);
  Presentation bad = p;
  bad.add_relator({1, 1});  // e12^2 is not trivial mod 3
  auto r = von_dyck_detail(bad, images);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failing_relator, bad.relators().size() - 1);
}

TEST(Cayley, PresentsTheGeneratedGroup) {
  Ring R = make_ring("zmod:3");
  std::vector<Matrix> gens = {elementary(R, 3, 1, 2, R.one()), elementary(R, 3, 2, 3, R.one())};
  auto cp = cayley_presentation(gens, R, 3);
  EXPECT_EQ(cp.words.size(), 27u);
  EXPECT_EQ(todd_coxeter(cp.presentation).index, 27u);
  EXPECT_TRUE(von_dyck_check(cp.presentation, gens));
}

TEST(Colimit, ContractingDiagramPresentsU4) {
  Ring R = make_ring("zmod:2");
  ColimitDiagram d = contracting_diagram(4, R);
  EXPECT_TRUE(audit_diagram(d).ok);
  EXPECT_EQ(todd_coxeter(colimit_presentation(d)).index, 64u);
  EXPECT_EQ(check_contracting_colimit(4, R).status, Status::pass);
}

TEST(Colimit, BadInclusionIsRejected) {
  ColimitDiagram d;
  d.node_names = {"p", "q"};
  d.nodes = {text("x\nx x\n"), text("y\ny y y\n")};
  d.edges.push_back({0, 1, text("z\nz z\n"), {{1}}, {{1}}});
  auto audit = audit_diagram(d);
  EXPECT_FALSE(audit.ok);
  EXPECT_TRUE(audit.conclusive);
  try {
    colimit_presentation(d);
    ADD_FAILURE();
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), ErrorCode::von_dyck_violation);
  }
  d.edges[0].presentation = text("z\nz z z z z z\n");
  EXPECT_TRUE(audit_diagram(d).ok);
  EXPECT_EQ(todd_coxeter(colimit_presentation(d)).index, 1u);  // gcd(2, 3)
}
