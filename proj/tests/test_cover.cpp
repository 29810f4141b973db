#include <catch2/catch_amalgamated.hpp>

#include "monodromy/catalog.hpp"
#include "monodromy/cover.hpp"
#include "monodromy/perm.hpp"
#include "monodromy/psl2.hpp"

using namespace monodromy;

namespace {

PermGroup grp(std::initializer_list<const char*> cycles, int degree) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) gens.push_back(parse_cycles(c, degree));
  return PermGroup::generate(gens);
}

std::vector<Permutation> kernel_action(int n) {
  const Homomorphism hom = triangle_homomorphism(n);
  const PermGroup sn = PermGroup::generate(hom.images);
  std::vector<Permutation> action;
  for (const Permutation& img : hom.images) action.push_back(regular_image(sn, img));
  return action;
}

bool has_check(const MonodromyCertificate& cert, const std::string& name) {
  for (const auto& [check, ok] : cert.checks)
    if (check == name) return ok;
  return false;
}

}  // namespace

TEST_CASE("the triangle quotient map hits all of S_n") {
  const Homomorphism hom = triangle_homomorphism(5);
  REQUIRE(hom.degree == 5);
  REQUIRE(hom.relators_preserved);
  REQUIRE(hom.surjective);
  REQUIRE(hom.images[0] == parse_cycles("(1 2)", 5));
  REQUIRE(hom.images[1] == parse_cycles("(1 2 3 4 5)", 5));
  REQUIRE(hom.images[2] == parse_cycles("(5 4 3 2)", 5));
  REQUIRE(compose(hom.images[0], compose(hom.images[1], hom.images[2])).is_identity());

  const Homomorphism h2 = triangle_homomorphism(2);
  REQUIRE(h2.images[2].is_identity());
  REQUIRE(PermGroup::generate(h2.images).order() == 2);

  REQUIRE_THROWS_AS(triangle_homomorphism(1), domain_error);
}

TEST_CASE("signatures of distinguished subgroups") {
  const Signature kernel = subgroup_signature(2, 5, 4, kernel_action(5));
  REQUIRE(kernel.genus == 4);
  REQUIRE(kernel.periods.empty());
  REQUIRE(torsion_free_check(2, 5, 4, kernel_action(5)));

  const std::vector<Permutation> whole{Permutation(1), Permutation(1), Permutation(1)};
  const Signature top = subgroup_signature(2, 5, 4, whole);
  REQUIRE(top.genus == 0);
  REQUIRE(top.periods == std::vector<int>{2, 5, 4});
  REQUIRE(!torsion_free_check(2, 5, 4, whole));

  const Homomorphism hom = triangle_homomorphism(5);
  const PermGroup s5 = PermGroup::generate(hom.images);
  const PermGroup c5 = grp({"(1 2 3 4 5)"}, 5);
  const CosetDecomposition cosets = right_cosets(s5, c5.generators());
  std::vector<Permutation> action;
  for (const Permutation& img : hom.images) action.push_back(action_on_cosets(img, cosets));
  const Signature sub = subgroup_signature(2, 5, 4, action);
  REQUIRE(sub.genus == 0);
  REQUIRE(sub.periods == std::vector<int>{5, 5, 5, 5});
  REQUIRE(!torsion_free_check(2, 5, 4, action));
}

TEST_CASE("signature input validation") {
  const std::vector<Permutation> whole{Permutation(1), Permutation(1), Permutation(1)};
  REQUIRE_THROWS_AS(subgroup_signature(2, 4, 3, whole), domain_error);

  const std::vector<Permutation> split{Permutation(2), Permutation(2), Permutation(2)};
  REQUIRE_THROWS_AS(subgroup_signature(2, 5, 4, split), domain_error);

  const std::vector<Permutation> bad{parse_cycles("(1 2 3)", 3), parse_cycles("(1 2 3)", 3),
                                     parse_cycles("(1 2 3)", 3)};
  REQUIRE_THROWS_AS(subgroup_signature(2, 5, 4, bad), domain_error);
}

TEST_CASE("regularity recognizes deck actions") {
  const PermGroup s3 = grp({"(1 2)", "(1 2 3)"}, 3);
  REQUIRE(!regular_group(s3));
  REQUIRE(regular_group(regular_representation(s3).group));

  REQUIRE(PermGroup::generate(
              {regular_image(s3, s3.generators()[0]), regular_image(s3, s3.generators()[1])})
              .order() == 6);

  REQUIRE_THROWS_AS(
      monodromy_from_pair({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, true),
      consistency_error);
  REQUIRE(monodromy_from_pair({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, false)
              .order() == 6);
  REQUIRE(monodromy_from_pair({parse_cycles("(1 2 3)", 3)}, true).order() == 3);
}

TEST_CASE("triangle construction over spherical parameters") {
  const MonodromyCertificate cert = triangle_construction(grp({"(1 2)", "(1 2 3 4)"}, 4));
  REQUIRE(cert.construction == "triangle");
  REQUIRE(cert.degree == 4);
  REQUIRE(cert.cover_degree == 24);
  REQUIRE(cert.ambient_index == 1);
  REQUIRE(cert.kernel_words.empty());
  REQUIRE(cert.kernel_matrices.empty());
  REQUIRE(!cert.cover_signature.has_value());
  REQUIRE(cert.all_checks_pass());
  REQUIRE(cert.checks.size() == 6);
  for (const Permutation& p : cert.monodromy_generators) REQUIRE(p.degree() == 24);

  const MonodromyCertificate a4 = triangle_construction(grp({"(1 2 3)", "(1 2 4)"}, 4));
  REQUIRE(a4.cover_degree == 12);
  REQUIRE(a4.ambient_index == 2);
  REQUIRE(a4.all_checks_pass());

  const MonodromyCertificate trivial =
      triangle_construction(PermGroup::generate({Permutation(2)}));
  REQUIRE(trivial.cover_degree == 1);
  REQUIRE(trivial.ambient_index == 2);
  REQUIRE(trivial.monodromy_generators.size() == 1);
  REQUIRE(trivial.all_checks_pass());
}

TEST_CASE("triangle construction over hyperbolic parameters") {
  const MonodromyCertificate cert = triangle_construction(grp({"(1 2 3 4 5)"}, 5));
  REQUIRE(cert.cover_degree == 5);
  REQUIRE(cert.ambient_index == 24);
  REQUIRE(cert.base_signature.has_value());
  REQUIRE(cert.base_signature->genus == 0);
  REQUIRE(cert.base_signature->periods == std::vector<int>{5, 5, 5, 5});
  REQUIRE(cert.cover_signature.has_value());
  REQUIRE(cert.cover_signature->genus == 4);
  REQUIRE(cert.cover_signature->periods.empty());
  REQUIRE(cert.cover_torsion_free);
  REQUIRE(cert.checks.size() == 8);
  REQUIRE(cert.all_checks_pass());
  REQUIRE(has_check(cert, "signature_euler_consistent"));
  REQUIRE(has_check(cert, "cover_torsion_free"));
}

TEST_CASE("free construction kernel data") {
  const MonodromyCertificate c2 = free_construction({parse_cycles("(1 2)", 2)});
  REQUIRE(c2.construction == "free");
  REQUIRE(c2.cover_degree == 2);
  REQUIRE(c2.ambient_index == 1);
  REQUIRE(c2.kernel_words.size() == 1);
  REQUIRE(format_word(c2.kernel_words[0]) == "x0^2");
  REQUIRE(c2.kernel_matrices[0] == ProjectiveMatrix(1, 4, 0, 1));
  REQUIRE(!c2.cover_signature.has_value());
  REQUIRE(c2.all_checks_pass());

  const MonodromyCertificate s3 =
      free_construction({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)});
  REQUIRE(s3.cover_degree == 6);
  REQUIRE(s3.ambient_index == 2);
  REQUIRE(s3.kernel_words.size() == 7);
  REQUIRE(s3.kernel_matrices.size() == 7);
  REQUIRE(s3.all_checks_pass());
  for (const Permutation& p : s3.monodromy_generators) REQUIRE(p.degree() == 6);

  const MonodromyCertificate dup =
      free_construction({parse_cycles("(1 2)", 2), parse_cycles("(1 2)", 2)});
  REQUIRE(dup.ambient_index == 2);
  REQUIRE(dup.kernel_words.size() == 3);
  REQUIRE(dup.all_checks_pass());
}

TEST_CASE("certificates for the whole catalog") {
  for (const CatalogEntry& entry : catalog()) {
    std::vector<Permutation> gens;
    for (const std::string& c : entry.generators)
      gens.push_back(parse_cycles(c, entry.degree));
    const PermGroup g = PermGroup::generate(gens);

    const MonodromyCertificate tri = triangle_construction(g);
    REQUIRE(tri.all_checks_pass());
    REQUIRE(tri.cover_degree == g.order());
    REQUIRE(tri.ambient_index * g.order() == detail::factorial(entry.degree));

    const MonodromyCertificate fre = free_construction(gens);
    REQUIRE(fre.all_checks_pass());
    REQUIRE(fre.kernel_words.size() == schreier_rank(g.order(), gens.size()));
  }
}
