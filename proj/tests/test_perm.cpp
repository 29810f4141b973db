#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "monodromy/perm.hpp"

using namespace monodromy;

namespace {

Permutation p(const std::string& text, int degree) { return parse_cycles(text, degree); }

PermGroup grp(const std::vector<std::string>& cycles, int degree,
              std::size_t cap = kDefaultClosureCap) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(p(c, degree));
  return PermGroup::generate(gens, cap);
}

Permutation random_perm(std::mt19937& rng, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

// Test-side oracle: search for a multiplication-respecting bijection directly
// on the full tables, with none of the library's generator or class-profile
// reasoning.
bool iso_bijection_oracle(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  auto table = [](const PermGroup& g) {
    std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j)
        t[i][j] = g.index_of(compose(g.element(i), g.element(j)));
    return t;
  };
  auto ta = table(a), tb = table(b);
  std::vector<int> img(n, -1), rimg(n, -1);
  img[0] = 0;
  rimg[0] = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t at) -> bool {
    if (at == n) return true;
    for (std::size_t c = 1; c < n; ++c) {
      if (rimg[c] >= 0) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= at && ok; ++j) {
        if (img[j] < 0) continue;
        int pr[2] = {ta[at][j], ta[j][at]};
        int qr[2] = {tb[c][img[j]], tb[img[j]][c]};
        for (int k = 0; k < 2 && ok; ++k) {
          if (img[pr[k]] >= 0)
            ok = img[pr[k]] == qr[k];
          else if (rimg[qr[k]] >= 0)
            ok = false;
        }
      }
      if (!ok) continue;
      img[at] = static_cast<int>(c);
      rimg[c] = static_cast<int>(at);
      if (rec(at + 1)) return true;
      img[at] = -1;
      rimg[c] = -1;
    }
    return false;
  };
  return rec(1);
}

}  // namespace

TEST_CASE("cycle parsing accepts the grammar and rejects malformed text") {
  REQUIRE(p("(1 2)", 5) == Permutation::from_images({1, 0, 2, 3, 4}));
  REQUIRE(p("()", 3).is_identity());
  REQUIRE(p("", 3).is_identity());
  REQUIRE(p("  ( 1   2 ) ( 3 4 5 ) ", 5) == p("(1 2)(3 4 5)", 5));
  REQUIRE(p("(3)", 4).is_identity());

  Permutation ginf = p("(5 4 3 2)", 5);
  REQUIRE(ginf[4] == 3);
  REQUIRE(ginf[3] == 2);
  REQUIRE(ginf[2] == 1);
  REQUIRE(ginf[1] == 4);
  REQUIRE(ginf[0] == 0);

  REQUIRE_THROWS_AS(p("(1 6)", 5), parse_error);
  REQUIRE_THROWS_AS(p("(0 1)", 5), parse_error);
  REQUIRE_THROWS_AS(p("(1 2)(2 3)", 5), parse_error);
  REQUIRE_THROWS_AS(p("(1 1)", 5), parse_error);
  REQUIRE_THROWS_AS(p("(1 2", 5), parse_error);
  REQUIRE_THROWS_AS(p("1 2)", 5), parse_error);
  REQUIRE_THROWS_AS(p("(1 a)", 5), parse_error);

  try {
    p("(1 9)", 5);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    REQUIRE(e.position() == 3);
  }

  REQUIRE(format_cycles(p("(1 2)(3 4 5)", 6)) == "(1 2)(3 4 5)");
  REQUIRE(format_cycles(Permutation(4)) == "()");
  REQUIRE(p(format_cycles(ginf), 5) == ginf);
}

TEST_CASE("composition applies the rightmost factor first") {
  REQUIRE(compose(p("(1 2)", 2), Permutation(2)) == p("(1 2)", 2));
  REQUIRE(compose(p("(1 2)", 2), p("(1 2)", 2)).is_identity());

  // The defining product of the three standard images: a transposition, the
  // full cycle, then the descending cycle multiply to the identity.
  Permutation g0 = p("(1 2)", 5);
  Permutation g1 = p("(1 2 3 4 5)", 5);
  Permutation gi = p("(5 4 3 2)", 5);
  REQUIRE(compose(compose(g0, g1), gi).is_identity());

  REQUIRE_THROWS_AS(compose(p("(1 2)", 2), p("(1 2)", 3)), domain_error);

  std::mt19937 rng(20260818);
  for (int round = 0; round < 200; ++round) {
    Permutation a = random_perm(rng, 7), b = random_perm(rng, 7), c = random_perm(rng, 7);
    REQUIRE(compose(compose(a, b), c) == compose(a, compose(b, c)));
    REQUIRE(compose(a, inverse(a)).is_identity());
    REQUIRE(compose(inverse(a), a).is_identity());
  }
}

TEST_CASE("inverse and element order") {
  REQUIRE(inverse(p("(1 2 3)", 3)) == p("(1 3 2)", 3));
  REQUIRE(inverse(Permutation(4)).is_identity());
  REQUIRE(inverse(p("(1 2)(3 4 5)", 5)) == p("(1 2)(3 5 4)", 5));

  REQUIRE(element_order(p("(1 2)", 2)) == 2);
  REQUIRE(element_order(p("(1 2 3 4 5)", 5)) == 5);
  REQUIRE(element_order(p("(5 4 3 2)", 5)) == 4);
  REQUIRE(element_order(Permutation(1)) == 1);
  REQUIRE(element_order(p("(1 2)(3 4 5)", 5)) == 6);
}

TEST_CASE("cycle decomposition is canonical") {
  REQUIRE(cycle_decomposition(Permutation(3)) ==
          std::vector<std::vector<int>>{{1}, {2}, {3}});
  REQUIRE(cycle_decomposition(p("(3 4 5)(1 2)", 5)) ==
          std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});

  // Rightmost-first: (1 2)·(2 3) sends 1->2->3->1.
  Permutation prod = compose(p("(1 2)", 5), p("(2 3)", 5));
  REQUIRE(cycle_decomposition(prod) ==
          std::vector<std::vector<int>>{{1, 2, 3}, {4}, {5}});
}

TEST_CASE("closure enumerates the generated group") {
  REQUIRE(grp({"(1 2)", "(1 2 3 4)"}, 4).order() == 24);
  REQUIRE(grp({"()"}, 3).order() == 1);
  REQUIRE(grp({"(1 2 3 4 5)"}, 5).order() == 5);

  for (int n = 2; n <= 6; ++n) {
    std::string full = "(1";
    for (int i = 2; i <= n; ++i) full += " " + std::to_string(i);
    full += ")";
    PermGroup sn = grp({"(1 2)", full}, n);
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    REQUIRE(sn.order() == fact);
    REQUIRE(sn.element(0).is_identity());
  }

  REQUIRE_THROWS_AS(grp({"(1 2)", "(1 2 3 4)"}, 4, 10), capacity_error);

  PermGroup s4 = grp({"(1 2)", "(1 2 3 4)"}, 4);
  for (std::size_t i = 1; i < s4.order(); ++i) {
    int par = s4.derivation_parent(i);
    int gen = s4.derivation_gen(i);
    REQUIRE(s4.element(i) == compose(s4.element(par), s4.generators()[gen]));
  }
}

TEST_CASE("right cosets partition the group") {
  PermGroup s3 = grp({"(1 2)", "(1 2 3)"}, 3);

  CosetDecomposition a3 = right_cosets(s3, {p("(1 2 3)", 3)});
  REQUIRE(a3.count == 2);
  CosetDecomposition t = right_cosets(s3, {p("(1 2)", 3)});
  REQUIRE(t.count == 3);

  PermGroup s5 = grp({"(1 2)", "(1 2 3 4 5)"}, 5);
  CosetDecomposition c5 = right_cosets(s5, {p("(1 2 3 4 5)", 5)});
  REQUIRE(c5.count == 24);
  REQUIRE(c5.representatives[0].is_identity());

  // Same coset iff x * y^-1 lies in the subgroup.
  PermGroup h = grp({"(1 2)"}, 3);
  for (const auto& x : s3.elements())
    for (const auto& y : s3.elements()) {
      bool same = t.coset_of.at(x.images()) == t.coset_of.at(y.images());
      REQUIRE(same == h.contains(compose(x, inverse(y))));
    }

  REQUIRE_THROWS_AS(right_cosets(s3, {p("(1 2)(3 4)", 4)}), domain_error);
}

TEST_CASE("coset action realizes right multiplication") {
  PermGroup s3 = grp({"(1 2)", "(1 2 3)"}, 3);
  CosetDecomposition a3 = right_cosets(s3, {p("(1 2 3)", 3)});

  REQUIRE(action_on_cosets(p("(1 2 3)", 3), a3).is_identity());
  REQUIRE(action_on_cosets(p("(1 2)", 3), a3) == p("(1 2)", 2));

  CosetDecomposition t = right_cosets(s3, {p("(1 2)", 3)});
  Permutation rot = action_on_cosets(p("(1 2 3)", 3), t);
  REQUIRE(element_order(rot) == 3);

  // Any subgroup element stabilizes coset 1.
  REQUIRE(action_on_cosets(p("(1 2)", 3), t)[0] == 0);

  // Right multiplication reverses word order under rightmost-first
  // composition: acting by g then by h is acting by g*h.
  PermGroup s4 = grp({"(1 2)", "(1 2 3 4)"}, 4);
  CosetDecomposition cos = right_cosets(s4, {p("(1 2 3 4)", 4)});
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, s4.order() - 1);
  for (int round = 0; round < 100; ++round) {
    const Permutation& g = s4.element(pick(rng));
    const Permutation& h = s4.element(pick(rng));
    REQUIRE(action_on_cosets(compose(g, h), cos) ==
            compose(action_on_cosets(h, cos), action_on_cosets(g, cos)));
  }
}

namespace {

bool is_normal_in(const PermGroup& super, const PermGroup& sub) {
  for (const auto& g : super.generators())
    for (const auto& x : sub.elements())
      if (!sub.contains(compose(compose(inverse(g), x), g))) return false;
  return true;
}

}  // namespace

TEST_CASE("normal core is the largest normal subgroup inside") {
  PermGroup s3 = grp({"(1 2)", "(1 2 3)"}, 3);
  PermGroup core_a3 = normal_core(s3, {p("(1 2 3)", 3)});
  REQUIRE(core_a3.order() == 3);
  REQUIRE(normal_core(s3, {p("(1 2)", 3)}).order() == 1);
  REQUIRE(normal_core(s3, s3.generators()).order() == 6);

  PermGroup s4 = grp({"(1 2)", "(1 2 3 4)"}, 4);
  std::vector<std::vector<Permutation>> subgroups = {
      {p("(1 2 3 4)", 4), p("(1 3)", 4)},
      {p("(1 2 3)", 4)},
      {p("(1 2)", 4)},
      {p("(1 2 3)", 4), p("(1 2 4)", 4)},
  };
  for (const auto& sub_gens : subgroups) {
    PermGroup h = PermGroup::generate(sub_gens);
    PermGroup core = normal_core(s4, sub_gens);
    for (const auto& x : core.elements()) REQUIRE(h.contains(x));
    REQUIRE(is_normal_in(s4, core));
    // Maximality: adjoining any further subgroup element breaks normality.
    for (const auto& x : h.elements()) {
      if (core.contains(x)) continue;
      std::vector<Permutation> bigger = core.elements();
      bigger.push_back(x);
      REQUIRE_FALSE(is_normal_in(s4, PermGroup::generate(bigger)));
    }
  }

  REQUIRE(normal_core(s4, {p("(1 2 3 4)", 4), p("(1 3)", 4)}).order() == 4);
}

TEST_CASE("regular representation embeds via the multiplication table") {
  PermGroup c2 = grp({"(1 2)"}, 2);
  RegularRepresentation r2 = regular_representation(c2);
  REQUIRE(r2.group.order() == 2);
  REQUIRE(r2.group.generators()[0] == p("(1 2)", 2));

  PermGroup c3 = grp({"(1 2 3)"}, 3);
  RegularRepresentation r3 = regular_representation(c3);
  REQUIRE(r3.group.generators()[0] == p("(1 2 3)", 3));
  REQUIRE(r3.point_labels[0].is_identity());

  PermGroup v4 = grp({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  RegularRepresentation r4 = regular_representation(v4);
  REQUIRE(r4.group.order() == 4);
  for (const auto& g : r4.group.generators()) {
    auto cycles = cycle_decomposition(g);
    REQUIRE(cycles.size() == 2);
    REQUIRE(cycles[0].size() == 2);
    REQUIRE(cycles[1].size() == 2);
  }

  PermGroup s3 = grp({"(1 2)", "(1 2 3)"}, 3);
  RegularRepresentation r6 = regular_representation(s3);
  REQUIRE(r6.group.order() == 6);
  REQUIRE(r6.group.degree() == 6);
  for (const auto& e : r6.group.elements()) {
    if (e.is_identity()) continue;
    for (int x = 0; x < e.degree(); ++x) REQUIRE(e[x] != x);
  }
}

TEST_CASE("isomorphism witnesses validate against the tables") {
  PermGroup s3 = grp({"(1 2)", "(1 2 3)"}, 3);
  auto self = is_isomorphic(s3, s3);
  REQUIRE(self.has_value());
  REQUIRE(witness_valid(s3, s3, *self));

  PermGroup c4 = grp({"(1 2 3 4)"}, 4);
  PermGroup v4 = grp({"(1 2)(3 4)", "(1 3)(2 4)"}, 4);
  REQUIRE_FALSE(is_isomorphic(c4, v4).has_value());

  RegularRepresentation reg = regular_representation(s3);
  auto w = is_isomorphic(reg.group, s3);
  REQUIRE(w.has_value());
  REQUIRE(witness_valid(reg.group, s3, *w));

  // A wrong witness must be rejected.
  IsoWitness bad;
  bad.generator_images.emplace_back(s3.generators()[0], Permutation(3));
  bad.generator_images.emplace_back(s3.generators()[1], p("(1 2 3)", 3));
  REQUIRE_FALSE(witness_valid(s3, s3, bad));

  REQUIRE_THROWS_AS(is_isomorphic(s3, s3, 5), capacity_error);

  PermGroup q8 = grp({"(1 2 3 4)(5 8 6 7)", "(1 5 3 6)(2 7 4 8)"}, 8);
  REQUIRE(q8.order() == 8);
  PermGroup d4 = grp({"(1 2 3 4)", "(1 3)"}, 4);
  PermGroup c8 = grp({"(1 2 3 4 5 6 7 8)"}, 8);
  PermGroup c2c4 = grp({"(1 2)", "(3 4 5 6)"}, 6);
  PermGroup a4 = grp({"(1 2 3)", "(1 2 4)"}, 4);
  PermGroup d6 = grp({"(1 2 3 4 5 6)", "(2 6)(3 5)"}, 6);
  PermGroup c12 = grp({"(1 2 3 4)(5 6 7)"}, 7);

  std::vector<const PermGroup*> order8 = {&q8, &d4, &c8, &c2c4};
  for (auto* a : order8)
    for (auto* b : order8) {
      bool lib = is_isomorphic(*a, *b).has_value();
      REQUIRE(lib == (a == b));
      REQUIRE(lib == iso_bijection_oracle(*a, *b));
      REQUIRE(lib == is_isomorphic(*b, *a).has_value());
    }

  std::vector<const PermGroup*> order12 = {&a4, &d6, &c12};
  for (auto* a : order12)
    for (auto* b : order12) {
      bool lib = is_isomorphic(*a, *b).has_value();
      REQUIRE(lib == (a == b));
      REQUIRE(lib == iso_bijection_oracle(*a, *b));
    }

  auto wq8 = is_isomorphic(q8, q8);
  REQUIRE(wq8.has_value());
  REQUIRE(witness_valid(q8, q8, *wq8));
}
