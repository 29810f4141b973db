#pragma once

// Realizes a finite permutation group as the monodromy group of a cover in
// two ways: through the quotient of a (2, n, n-1) triangle group onto S_n,
// and through rank-many conjugated parabolics inside the level-two
// congruence subgroup. Either path produces a certificate whose claims can
// be rechecked field by field without trusting the construction.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/fpgrp.hpp"
#include "monodromy/perm.hpp"
#include "monodromy/psl2.hpp"
#include "monodromy/schreier.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

using bigrational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::size_t factorial(int n) {
  if (n > 20) throw capacity_error("factorial exceeds the native integer range");
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace detail

// g0 -> (1 2), g1 -> (1 2 ... n), gi -> (n ... 3 2), a surjection of
// triangle(2, n, n-1) onto S_n. Both stored flags are recomputed here and a
// failure throws, so a returned value always carries true ones.
struct Homomorphism {
  Presentation source;
  int degree;
  std::vector<Permutation> images;
  bool relators_preserved;
  bool surjective;
};

inline Homomorphism triangle_homomorphism(int n, std::size_t closure_cap = kDefaultClosureCap) {
  if (n < 2) throw domain_error("quotient onto S_n needs n >= 2");

  std::vector<int> t(n), c(n), r(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  t[0] = 1;
  t[1] = 0;
  for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
  r[0] = 0;
  r[1] = n - 1;
  for (int i = 2; i < n; ++i) r[i] = i - 1;

  Homomorphism hom{triangle(2, n, n - 1),
                   n,
                   {Permutation::from_images(std::move(t)), Permutation::from_images(std::move(c)),
                    Permutation::from_images(std::move(r))},
                   false,
                   false};

  for (const FreeWord& rel : hom.source.relators)
    if (!evaluate(rel, hom.images).is_identity())
      throw consistency_error("triangle relator survives in S_n");
  hom.relators_preserved = true;

  if (PermGroup::generate(hom.images, closure_cap).order() != detail::factorial(n))
    throw consistency_error("triangle images fail to generate S_n");
  hom.surjective = true;
  return hom;
}

// Orbifold data of the covering surface attached to a transitive action of
// the (m, n, k) triangle group: cone orders plus the genus fixed by the
// Riemann-Hurwitz count.
struct Signature {
  std::int64_t genus = 0;
  std::vector<int> periods;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.genus == b.genus && a.periods == b.periods;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

namespace detail {

inline void check_triangle_action(int m, int n, int k, const std::vector<Permutation>& action) {
  if (action.size() != 3) throw domain_error("a triangle-group action needs three generators");
  const int d = action[0].degree();
  for (const Permutation& p : action)
    if (p.degree() != d) throw domain_error("action degree mismatch");

  std::vector<char> seen(d, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t at = 0; at < queue.size(); ++at)
    for (const Permutation& p : action) {
      int to = p[queue[at]];
      if (!seen[to]) {
        seen[to] = 1;
        queue.push_back(to);
      }
    }
  if (static_cast<int>(queue.size()) != d) throw domain_error("the action is not transitive");

  const int orders[3] = {m, n, k};
  for (int i = 0; i < 3; ++i)
    for (const auto& cyc : cycle_decomposition(action[i]))
      if (orders[i] % static_cast<int>(cyc.size()) != 0)
        throw domain_error("cycle length does not divide the generator order");
}

}  // namespace detail

// Periods are read off generator by generator (order m, n, k): a cycle of
// length l < p under an order-p generator contributes a cone point of order
// p / l. The genus then comes out of the Euler characteristic in exact
// rational arithmetic; a fractional or negative genus is a hard error.
inline Signature subgroup_signature(int m, int n, int k, const std::vector<Permutation>& action) {
  if (hyperbolicity_class(m, n, k) != Curvature::hyperbolic)
    throw domain_error("signatures are computed only over hyperbolic triangles");
  detail::check_triangle_action(m, n, k, action);

  const int d = action[0].degree();
  Signature sig;
  bigrational excess = 0;
  const int orders[3] = {m, n, k};
  for (int i = 0; i < 3; ++i)
    for (const auto& cyc : cycle_decomposition(action[i])) {
      const int l = static_cast<int>(cyc.size());
      if (l < orders[i]) {
        const int p = orders[i] / l;
        sig.periods.push_back(p);
        excess += bigrational(p - 1, p);
      }
    }

  const bigrational ambient = bigrational(1, m) + bigrational(1, n) + bigrational(1, k) - 1;
  const bigrational euler = bigrational(d) * ambient + excess;
  const bigrational genus = (bigrational(2) - euler) / 2;
  if (boost::multiprecision::denominator(genus) != 1 || genus < 0)
    throw consistency_error("genus came out fractional or negative");
  sig.genus = boost::multiprecision::numerator(genus).convert_to<std::int64_t>();
  return sig;
}

// True when every cycle of every generator has full length, i.e. the point
// stabilizers meet no conjugate of the elliptic generators.
inline bool torsion_free_check(int m, int n, int k, const std::vector<Permutation>& action) {
  detail::check_triangle_action(m, n, k, action);
  const int orders[3] = {m, n, k};
  for (int i = 0; i < 3; ++i)
    for (const auto& cyc : cycle_decomposition(action[i]))
      if (static_cast<int>(cyc.size()) != orders[i]) return false;
  return true;
}

// The deck test: |G| points moved simply transitively.
inline bool regular_group(const PermGroup& g) {
  if (g.order() != static_cast<std::size_t>(g.degree())) return false;
  std::vector<char> seen(g.degree(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t at = 0; at < queue.size(); ++at)
    for (const Permutation& p : g.generators()) {
      int to = p[queue[at]];
      if (!seen[to]) {
        seen[to] = 1;
        queue.push_back(to);
      }
    }
  if (queue.size() != g.order()) return false;
  for (std::size_t i = 1; i < g.order(); ++i) {
    const Permutation& e = g.element(i);
    for (int x = 0; x < g.degree(); ++x)
      if (e[x] == x) return false;
  }
  return true;
}

// Wraps a cover description given as the action on sheets; when the cover is
// claimed normal the deck group must act regularly, which is verified.
inline PermGroup monodromy_from_pair(const std::vector<Permutation>& action, bool normal_cover,
                                     std::size_t closure_cap = kDefaultClosureCap) {
  PermGroup mon = PermGroup::generate(action, closure_cap);
  if (normal_cover && !regular_group(mon))
    throw consistency_error("claimed normal cover has a non-regular monodromy action");
  return mon;
}

namespace detail {

// Schreier generators of G from the coset graph of G in the ambient group:
// rep(c) * x * rep(c x)^-1 over all cosets and ambient generators, thinned
// greedily in first-found order until they generate G.
inline std::vector<Permutation> schreier_subgroup_generators(
    const PermGroup& g, const CosetDecomposition& cosets,
    const std::vector<Permutation>& ambient_gens) {
  std::vector<Permutation> candidates;
  std::unordered_set<std::vector<int>, ImageHash> seen;
  for (int c = 0; c < cosets.count; ++c)
    for (const Permutation& x : ambient_gens) {
      Permutation q = compose(cosets.representatives[c], x);
      auto it = cosets.coset_of.find(q.images());
      if (it == cosets.coset_of.end()) throw consistency_error("coset graph is incomplete");
      Permutation s = compose(q, inverse(cosets.representatives[it->second]));
      if (!g.contains(s)) throw consistency_error("Schreier element escapes the subgroup");
      if (s.is_identity()) continue;
      if (seen.insert(s.images()).second) candidates.push_back(std::move(s));
    }

  std::vector<Permutation> chosen;
  std::size_t reached = 1;
  for (const Permutation& s : candidates) {
    if (reached == g.order()) break;
    std::vector<Permutation> trial = chosen;
    trial.push_back(s);
    const std::size_t ord = PermGroup::generate(trial, g.order() + 1).order();
    if (ord > reached) {
      chosen = std::move(trial);
      reached = ord;
    }
  }
  if (chosen.empty()) chosen.push_back(g.identity());
  if (reached != g.order()) throw consistency_error("Schreier generators fail to generate");
  return chosen;
}

}  // namespace detail

// Everything a checker needs to reproduce the realization: the group, the
// monodromy action, the isomorphism between them, and per-construction data
// (kernel words and matrices for the parabolic route, cover signatures for
// the triangle route). The checks vector records each verification in the
// order it ran.
struct MonodromyCertificate {
  std::string construction;
  PermGroup group;
  int degree = 0;
  std::size_t cover_degree = 0;
  std::size_t ambient_index = 0;
  std::vector<Permutation> monodromy_generators;
  std::vector<FreeWord> kernel_words;
  std::vector<ProjectiveMatrix> kernel_matrices;
  bool iso_found = false;
  IsoWitness iso_witness;
  std::optional<Signature> base_signature;
  std::optional<Signature> cover_signature;
  bool cover_torsion_free = false;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const {
    for (const auto& [name, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

namespace detail {

inline std::vector<std::string> triangle_check_names(bool hyperbolic) {
  std::vector<std::string> names{"phi_relators_preserved", "phi_surjective",
                                 "ambient_index_consistent", "monodromy_order",
                                 "monodromy_regular",        "iso_witness_valid"};
  if (hyperbolic) {
    names.push_back("signature_euler_consistent");
    names.push_back("cover_torsion_free");
  }
  return names;
}

inline std::vector<std::string> free_check_names() {
  return {"rank_formula",
          "kernel_words_reduced",
          "kernel_words_identity",
          "kernel_matrices_match_words",
          "kernel_matrices_in_gamma2",
          "kernel_matrices_nontrivial",
          "monodromy_order",
          "monodromy_regular",
          "iso_witness_valid"};
}

inline bool euler_consistent(int m, int n, int k, int d, const Signature& sig) {
  bigrational rhs =
      bigrational(d) * (bigrational(1, m) + bigrational(1, n) + bigrational(1, k) - 1);
  for (int p : sig.periods) rhs += bigrational(p - 1, p);
  return bigrational(2) - bigrational(2) * sig.genus == rhs;
}

}  // namespace detail

// Pulls G <= S_n back through the triangle quotient: the preimage subgroup
// has index [S_n : G] in the triangle group, the kernel sits inside it with
// quotient G, and the induced action on kernel cosets is the right-regular
// one. Over hyperbolic parameters the two surface signatures are attached.
inline MonodromyCertificate triangle_construction(const PermGroup& g,
                                                  std::size_t closure_cap = kDefaultClosureCap,
                                                  std::size_t iso_cap = kDefaultIsoCap) {
  const int n = g.degree();
  const Homomorphism hom = triangle_homomorphism(n, closure_cap);
  const PermGroup sn = PermGroup::generate(hom.images, closure_cap);
  for (const Permutation& gen : g.generators())
    if (!sn.contains(gen)) throw consistency_error("group escapes the symmetric group");

  const CosetDecomposition cosets = right_cosets(sn, g.generators());
  std::vector<Permutation> ambient_action;
  ambient_action.reserve(3);
  for (const Permutation& img : hom.images)
    ambient_action.push_back(action_on_cosets(img, cosets));

  const std::vector<Permutation> schreier_gens =
      detail::schreier_subgroup_generators(g, cosets, hom.images);
  std::vector<Permutation> mon_gens;
  mon_gens.reserve(schreier_gens.size());
  for (const Permutation& s : schreier_gens) mon_gens.push_back(regular_image(g, s));
  const PermGroup mon = PermGroup::generate(mon_gens, closure_cap);
  const std::optional<IsoWitness> witness = is_isomorphic(mon, g, iso_cap);

  const bool hyperbolic = hyperbolicity_class(2, n, n - 1) == Curvature::hyperbolic;
  std::optional<Signature> base_sig, cover_sig;
  bool torsion_free = false;
  bool euler_ok = false;
  if (hyperbolic) {
    base_sig = subgroup_signature(2, n, n - 1, ambient_action);
    std::vector<Permutation> cover_action;
    cover_action.reserve(3);
    for (const Permutation& img : hom.images) cover_action.push_back(regular_image(sn, img));
    cover_sig = subgroup_signature(2, n, n - 1, cover_action);
    torsion_free = torsion_free_check(2, n, n - 1, cover_action);
    euler_ok = detail::euler_consistent(2, n, n - 1, cosets.count, *base_sig) &&
               detail::euler_consistent(2, n, n - 1, static_cast<int>(sn.order()), *cover_sig);
  }

  MonodromyCertificate cert{
      "triangle",
      g,
      n,
      g.order(),
      static_cast<std::size_t>(cosets.count),
      std::move(mon_gens),
      {},
      {},
      witness.has_value(),
      witness.value_or(IsoWitness{}),
      base_sig,
      cover_sig,
      torsion_free,
      {}};

  bool relators_ok = true;
  for (const FreeWord& rel : hom.source.relators)
    relators_ok = relators_ok && evaluate(rel, hom.images).is_identity();
  cert.checks.emplace_back("phi_relators_preserved", relators_ok);
  cert.checks.emplace_back("phi_surjective", sn.order() == detail::factorial(n));
  cert.checks.emplace_back("ambient_index_consistent",
                           static_cast<std::size_t>(cosets.count) * g.order() == sn.order());
  cert.checks.emplace_back("monodromy_order", mon.order() == g.order());
  cert.checks.emplace_back("monodromy_regular", regular_group(mon));
  cert.checks.emplace_back("iso_witness_valid",
                           witness.has_value() && witness_valid(mon, g, *witness));
  if (hyperbolic) {
    cert.checks.emplace_back("signature_euler_consistent", euler_ok);
    cert.checks.emplace_back("cover_torsion_free", torsion_free);
  }
  return cert;
}

// Sends the j-th free generator of the given rank to the j-th conjugated
// parabolic; the kernel of the evaluation onto G is free of the rank the
// index formula dictates, and its Schreier basis is returned both as words
// and as matrices.
inline MonodromyCertificate free_construction(const std::vector<Permutation>& generators,
                                              std::size_t closure_cap = kDefaultClosureCap,
                                              std::size_t iso_cap = kDefaultIsoCap) {
  const PermGroup g = PermGroup::generate(generators, closure_cap);
  const std::size_t r = g.generators().size();

  const SchreierData sd = schreier_kernel_basis(g);
  const std::vector<ProjectiveMatrix> xs = conjugate_generators(r);
  std::vector<ProjectiveMatrix> matrices;
  matrices.reserve(sd.kernel_basis.size());
  for (const FreeWord& w : sd.kernel_basis) matrices.push_back(evaluate(w, xs));

  std::vector<Permutation> mon_gens;
  mon_gens.reserve(r);
  for (const Permutation& gen : g.generators()) mon_gens.push_back(regular_image(g, gen));
  const PermGroup mon = PermGroup::generate(mon_gens, closure_cap);
  const std::optional<IsoWitness> witness = is_isomorphic(mon, g, iso_cap);

  MonodromyCertificate cert{
      "free",
      g,
      g.degree(),
      g.order(),
      r,
      std::move(mon_gens),
      sd.kernel_basis,
      matrices,
      witness.has_value(),
      witness.value_or(IsoWitness{}),
      std::nullopt,
      std::nullopt,
      false,
      {}};

  bool reduced_ok = true, identity_ok = true, match_ok = true, gamma_ok = true, nontrivial_ok = true;
  for (std::size_t i = 0; i < sd.kernel_basis.size(); ++i) {
    const FreeWord& w = sd.kernel_basis[i];
    reduced_ok = reduced_ok && reduce(w.letters) == w;
    identity_ok = identity_ok && evaluate(w, g.generators()).is_identity();
    match_ok = match_ok && matrices[i] == evaluate(w, xs);
    gamma_ok = gamma_ok && in_gamma2(matrices[i]);
    nontrivial_ok = nontrivial_ok && !w.empty() && !matrices[i].is_identity();
  }
  cert.checks.emplace_back("rank_formula",
                           sd.kernel_basis.size() == schreier_rank(g.order(), r));
  cert.checks.emplace_back("kernel_words_reduced", reduced_ok);
  cert.checks.emplace_back("kernel_words_identity", identity_ok);
  cert.checks.emplace_back("kernel_matrices_match_words", match_ok);
  cert.checks.emplace_back("kernel_matrices_in_gamma2", gamma_ok);
  cert.checks.emplace_back("kernel_matrices_nontrivial", nontrivial_ok);
  cert.checks.emplace_back("monodromy_order", mon.order() == g.order());
  cert.checks.emplace_back("monodromy_regular", regular_group(mon));
  cert.checks.emplace_back("iso_witness_valid",
                           witness.has_value() && witness_valid(mon, g, *witness));
  return cert;
}

}  // namespace monodromy
