#pragma once

// Verification suites: each one expands a configuration into checks and
// returns an ordered report. The command line tool is a thin shell over
// run_suite.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "abelslab/abels.hpp"
#include "abelslab/chevalley.hpp"
#include "abelslab/complex.hpp"
#include "abelslab/relations.hpp"
#include "abelslab/report.hpp"
#include "abelslab/unipotent.hpp"

namespace abelslab {

struct SuiteConfig {
  std::string suite;
  std::optional<std::string> ring;
  std::optional<std::size_t> n;
  std::optional<std::string> type;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_order = kDefaultMaxOrder;
  std::uint64_t seed = 1;
  std::string check;  // extra per-suite selector, e.g. "pi1"

  void validate() const {
    if (max_cosets == 0 || max_order == 0) throw Error(ErrorCode::invalid_argument, "budgets must be positive");
    if (ring) parse_descriptor(*ring);
    if (n && *n < 2) throw Error(ErrorCode::invalid_argument, "--n must be at least 2");
  }

  nlohmann::json to_json() const {
    nlohmann::json j = {{"suite", suite}, {"max_cosets", max_cosets}, {"max_order", max_order}, {"seed", seed}};
    j["ring"] = ring ? nlohmann::json(*ring) : nlohmann::json(nullptr);
    j["n"] = n ? nlohmann::json(*n) : nlohmann::json(nullptr);
    j["type"] = type ? nlohmann::json(*type) : nlohmann::json(nullptr);
    if (!check.empty()) j["check"] = check;
    return j;
  }
};

// ABELSLAB_BUDGET replaces both default budgets; explicit flags win.
inline std::optional<std::size_t> env_budget() {
  char const* v = std::getenv("ABELSLAB_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  unsigned long long b = std::strtoull(v, &end, 10);
  if (*end != '\0' || b == 0) throw Error(ErrorCode::invalid_argument, "ABELSLAB_BUDGET must be a positive integer");
  return static_cast<std::size_t>(b);
}

inline std::vector<std::string> suite_names() {
  return {"steinberg", "commutators", "forms", "borel-iso", "abels", "presentations", "complex", "tits"};
}

namespace detail {

inline std::vector<Ring> rings_or(SuiteConfig const& c, std::vector<std::string> defaults) {
  std::vector<Ring> out;
  if (c.ring) {
    out.push_back(make_ring(*c.ring));
  } else {
    for (auto const& d : defaults) out.push_back(make_ring(d));
  }
  return out;
}

inline std::vector<std::size_t> ns_or(SuiteConfig const& c, std::vector<std::size_t> defaults) {
  return c.n ? std::vector<std::size_t>{*c.n} : defaults;
}

inline bool two_is_zero(Ring const& R) { return R.is_zero(R.from_int(2)); }

inline void suite_steinberg(SuiteConfig const& c, Report& rep) {
  std::vector<std::string> types = c.type ? std::vector<std::string>{*c.type} : supported_labels();
  auto skipped = nlohmann::json::array();
  for (auto const& R : rings_or(c, {"zmod:5", "zmod:7"})) {
    for (auto const& L : types) {
      if ((L == "B3" || L == "G2") && two_is_zero(R) && !c.type) {
        skipped.push_back(L + "/" + R.descriptor().to_string());
        continue;
      }
      MatrixModel M(L, R);
      rep.add(check_model_tables(M));
      rep.add(check_steinberg(M));
      rep.add(check_weyl_conjugation(M));
      if (L == "G2") rep.add(check_g2_torus_display(R));
    }
  }
  if (!skipped.empty()) rep.config["skipped_char2"] = skipped;
}

inline void suite_commutators(SuiteConfig const& c, Report& rep) {
  for (auto const& R : rings_or(c, {"zmod:2", "zmod:3", "zmod:4", "polyq:2:0,0,1"})) {
    for (auto n : ns_or(c, {2, 3, 4, 5})) {
      rep.add(check_elementary_commutators(n, R));
      rep.add(check_diagonal_action(n, R, c.max_order));
      rep.add(check_group_identities(n, R, c.seed));
    }
  }
}

inline void suite_forms(SuiteConfig const& c, Report& rep) {
  std::vector<std::string> types = c.type ? std::vector<std::string>{*c.type} : std::vector<std::string>{"C2", "C3", "B3", "D4", "G2"};
  for (auto const& R : rings_or(c, {"zmod:5"})) {
    for (auto const& L : types) rep.add(check_form_invariance(MatrixModel(L, R)));
  }
}

inline void suite_borel(SuiteConfig const& c, Report& rep) {
  for (auto const& R : rings_or(c, {"zmod:3", "zmod:4"})) {
    for (auto const& bc : borel_cases()) {
      if (c.type && bc.label != *c.type) continue;
      if ((bc.label == "B3" || bc.label == "G2") && two_is_zero(R)) {
        if (c.type) throw Error(ErrorCode::char2_unsupported, bc.label + " needs 2 != 0 in the ring");
        continue;
      }
      rep.add(borel_isomorphism_check(bc, R, c.max_order));
    }
    rep.add(check_affine_iso(R));
    for (auto n : ns_or(c, {3, 4})) rep.add(check_borel_retraction(n, R, c.max_order));
  }
}

inline void suite_abels(SuiteConfig const& c, Report& rep) {
  for (auto const& R : rings_or(c, {"zmod:2", "zmod:3"})) {
    for (auto n : ns_or(c, {4, 5})) {
      for (auto const& S : horospherical_family(n, R)) rep.add(check_closure(S, c.max_order));
      for (auto const& S : contracting_family(n, R)) rep.add(check_closure(S, c.max_order));
      rep.add(center_check(n, R, c.max_order));
      rep.add(check_semidirect(n, R, c.max_order));
      rep.add(check_torus_invariance(n, R, c.max_order));
      rep.add(check_contracting_structure(n, R));
      if (n >= 4) rep.add(check_abels_retraction(n, R, c.max_order));
      if (n == 4) rep.add(check_h4_fiber_product(R, c.max_order));
    }
  }
}

inline void suite_presentations(SuiteConfig const& c, Report& rep) {
  std::vector<std::pair<std::size_t, std::string>> cases;
  if (c.n || c.ring) {
    for (auto n : ns_or(c, {4})) cases.emplace_back(n, c.ring.value_or("zmod:2"));
  } else {
    cases = {{4, "zmod:2"}, {4, "zmod:3"}, {5, "zmod:2"}};
  }
  for (auto const& [n, d] : cases) {
    Ring R = make_ring(d);
    rep.add(check_presentation_equivalence(n, R, c.max_cosets));
    if (n >= 4) {
      for (auto& rec : check_missing_relations(n, R).checks) rep.add(std::move(rec));
      rep.add(check_contracting_colimit(n, R, c.max_cosets));
    }
  }
}

inline void suite_complex(SuiteConfig const& c, Report& rep) {
  for (auto const& R : rings_or(c, {"zmod:2"})) {
    for (auto n : ns_or(c, {4, 5})) {
      rep.add(check_abels_complex(n, R, c.max_cosets, c.max_order));
      for (auto& rec : compare_complexes(n, R, c.max_cosets, c.max_order).checks) {
        rec.id = "compare-" + rec.id;
        rep.add(std::move(rec));
      }
      if (c.check == "pi1") {
        rep.add(timed_check("pi1/n" + std::to_string(n) + "/" + R.descriptor().to_string(), anchor_coset_complex(), [&](CheckRecord& rec) {
          auto ac = abels_complex(n, R, false, c.max_order);
          Presentation pi = fundamental_group(ac.cc.complex);
          Presentation small = simplify(pi);
          Verdict v = is_simply_connected(ac.cc.complex, c.max_cosets);
          rec.details = {{"generators", pi.generator_count()}, {"relators", pi.relators().size()},
                         {"simplified_generators", small.generator_count()}, {"simply_connected", to_string(v)}};
          if (v == Verdict::no) rec.fail("fundamental group is nontrivial");
          if (v == Verdict::inconclusive) rec.status = Status::inconclusive;
        }));
      }
    }
  }
}

inline Matrix permutation_matrix(Ring const& R, std::vector<std::size_t> const& images) {
  Matrix m(R, images.size());
  for (std::size_t i = 0; i < images.size(); ++i) m.set(images[i], i, R.one());
  return m;
}

inline void suite_tits(SuiteConfig const& c, Report& rep) {
  std::vector<std::tuple<std::size_t, std::string, bool>> positive;
  if (c.n || c.ring) {
    for (auto n : ns_or(c, {4})) {
      positive.emplace_back(n, c.ring.value_or("zmod:2"), true);
      positive.emplace_back(n, c.ring.value_or("zmod:2"), false);
    }
  } else {
    positive = {{4, "zmod:2", true}, {5, "zmod:2", true}, {4, "zmod:3", true}, {4, "zmod:3", false}};
  }
  for (auto const& [n, d, uni] : positive) {
    Ring R = make_ring(d);
    auto ac = abels_complex(n, R, uni, c.max_order);
    auto family = family_members(uni ? contracting_family(n, R) : horospherical_family(n, R));
    std::string label = std::string(uni ? "U" : "A") + std::to_string(n) + "/" + d;
    auto rec = tits_criterion_check(ac.group, family, label, c.max_cosets);
    if (rec.details.value("simply_connected", "") != "yes" || rec.details.value("isomorphism", "") != "yes") {
      if (rec.status == Status::pass) rec.fail("positive instance did not affirm both sides");
    }
    rep.add(std::move(rec));
  }
  if (c.n || c.ring) return;
  // Negative controls.
  Ring Z = make_ring("z");
  Matrix a = permutation_matrix(Z, {1, 0, 2}), b = permutation_matrix(Z, {2, 1, 0});
  FiniteGroup S3 = FiniteGroup::generate(Z, 3, {a, b});
  TitsOutcome o;
  auto s3 = tits_criterion_check(S3, {{"t12", {a}}, {"t13", {b}}}, "S3/transpositions", c.max_cosets, &o);
  if (!(o.components == 1 && o.h1.rank == 1 && o.h1.torsion.empty() && o.simply_connected == Verdict::no)) {
    s3.fail("expected a connected complex with H1 of rank 1");
  }
  rep.add(std::move(s3));
  Ring R2 = make_ring("zmod:2");
  auto U4 = FiniteGroup::generate(R2, 4, unipotent_subgroup(4, R2).generators());
  auto e = [&](std::size_t i, std::size_t j) { return elementary(R2, 4, i, j, R2.one()); };
  auto prop = tits_criterion_check(U4, {{"k1", {e(1, 2), e(1, 3)}}, {"k2", {e(1, 3), e(1, 4)}}}, "U4/zmod:2/proper", c.max_cosets, &o);
  if (o.surjective || o.components != U4.order() / o.image_order || o.components < 2) prop.fail("expected one component per coset of the image");
  rep.add(std::move(prop));
}

}  // namespace detail

inline Report run_suite(SuiteConfig const& c) {
  c.validate();
  if (c.suite == "all") {
    std::vector<Report> parts;
    for (auto const& s : suite_names()) {
      SuiteConfig sub = c;
      sub.suite = s;
      parts.push_back(run_suite(sub));
    }
    Report r = merge_reports(parts, "all");
    r.config["run"] = c.to_json();
    return r;
  }
  Report rep;
  rep.suite = c.suite;
  rep.config = c.to_json();
  if (c.suite == "steinberg") {
    detail::suite_steinberg(c, rep);
  } else if (c.suite == "commutators") {
    detail::suite_commutators(c, rep);
  } else if (c.suite == "forms") {
    detail::suite_forms(c, rep);
  } else if (c.suite == "borel-iso") {
    detail::suite_borel(c, rep);
  } else if (c.suite == "abels") {
    detail::suite_abels(c, rep);
  } else if (c.suite == "presentations") {
    detail::suite_presentations(c, rep);
  } else if (c.suite == "complex") {
    detail::suite_complex(c, rep);
  } else if (c.suite == "tits") {
    detail::suite_tits(c, rep);
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown suite '" + c.suite + "'");
  }
  rep.sort_checks();
  return rep;
}

}  // namespace abelslab
