#pragma once

// Permutations on {1..n} and fully enumerated permutation groups.
//
// Composition convention: (p*q)(x) = p(q(x)), so in any word the rightmost
// factor acts first. Points are 1-based in all textual formats; internal
// image arrays are 0-based.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monodromy/errors.hpp"

namespace monodromy {

class Permutation {
public:
  explicit Permutation(int degree) : images_(degree) {
    if (degree < 1) throw domain_error("permutation degree must be positive");
    std::iota(images_.begin(), images_.end(), 0);
  }

  static Permutation from_images(std::vector<int> images) {
    Permutation p;
    p.images_ = std::move(images);
    if (p.images_.empty()) throw domain_error("permutation degree must be positive");
    std::vector<char> seen(p.images_.size(), 0);
    for (int x : p.images_) {
      if (x < 0 || x >= static_cast<int>(p.images_.size()) || seen[x])
        throw domain_error("image array is not a bijection");
      seen[x] = 1;
    }
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }

  // 0-based image of a 0-based point.
  int operator[](int point) const { return images_[point]; }

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

private:
  Permutation() = default;
  std::vector<int> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw domain_error("degree mismatch in composition");
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[x] = p[q[x]];
  return Permutation::from_images(std::move(images));
}

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

inline Permutation identity_like(const Permutation& p) { return Permutation(p.degree()); }

inline Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.degree());
  for (int x = 0; x < p.degree(); ++x) images[p[x]] = x;
  return Permutation::from_images(std::move(images));
}

// Disjoint cycles covering all points, 1-based, fixed points as singletons.
// Each cycle starts at its minimum point; cycles sorted by first point.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = p[x]) {
      seen[x] = 1;
      cycle.push_back(x + 1);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& cycle : cycle_decomposition(p))
    order = std::lcm(order, static_cast<std::uint64_t>(cycle.size()));
  return order;
}

// Cycle-notation grammar: perm := cycle* ; cycle := '(' int (ws int)* ')' | '()'.
// Whitespace is ignored between tokens. Empty and singleton cycles denote
// identity action; "" and "()" are the identity. Points are 1..degree and may
// not repeat anywhere in the text.
inline Permutation parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw domain_error("permutation degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '('", i);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected point or ')'", i);
      std::size_t start = i;
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > degree) throw parse_error("point out of range", start);
        ++i;
      }
      if (value < 1) throw parse_error("point out of range", start);
      if (used[value - 1]) throw parse_error("repeated point", start);
      used[value - 1] = 1;
      cycle.push_back(static_cast<int>(value) - 1);
      skip_ws();
    }
    if (i >= text.size()) throw parse_error("unterminated cycle", text.size());
    ++i;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation::from_images(std::move(images));
}

// Nontrivial cycles only; identity renders as "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& cycle : cycle_decomposition(p)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

struct ImageHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

constexpr std::size_t kDefaultClosureCap = 1000000;

// Fully enumerated permutation group. Elements are stored in breadth-first
// discovery order starting from the identity, each reached from its parent by
// one right multiplication with a generator; the derivation links make
// generator-defined homomorphisms extendable to the whole element set.
class PermGroup {
public:
  static PermGroup generate(std::vector<Permutation> generators,
                            std::size_t cap = kDefaultClosureCap) {
    if (generators.empty()) throw domain_error("generator list is empty");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
      if (g.degree() != degree) throw domain_error("generator degree mismatch");

    PermGroup grp;
    grp.generators_ = std::move(generators);
    grp.elements_.push_back(Permutation(degree));
    grp.index_.emplace(grp.elements_[0].images(), 0);
    grp.parent_.push_back(-1);
    grp.via_gen_.push_back(-1);

    for (std::size_t at = 0; at < grp.elements_.size(); ++at) {
      for (std::size_t g = 0; g < grp.generators_.size(); ++g) {
        Permutation next = compose(grp.elements_[at], grp.generators_[g]);
        if (grp.index_.count(next.images())) continue;
        if (grp.elements_.size() >= cap)
          throw capacity_error("group closure exceeded cap of " + std::to_string(cap));
        grp.index_.emplace(next.images(), static_cast<int>(grp.elements_.size()));
        grp.elements_.push_back(std::move(next));
        grp.parent_.push_back(static_cast<int>(at));
        grp.via_gen_.push_back(static_cast<int>(g));
      }
    }
    return grp;
  }

  int degree() const { return elements_.front().degree(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const Permutation& identity() const { return elements_.front(); }

  // -1 when absent.
  int index_of(const Permutation& p) const {
    if (p.degree() != degree()) return -1;
    auto it = index_.find(p.images());
    return it == index_.end() ? -1 : it->second;
  }

  bool contains(const Permutation& p) const { return index_of(p) >= 0; }

  // element(i) = element(derivation_parent(i)) * generator(derivation_gen(i)),
  // with -1 links on the identity.
  int derivation_parent(std::size_t i) const { return parent_[i]; }
  int derivation_gen(std::size_t i) const { return via_gen_[i]; }

private:
  PermGroup() = default;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<std::vector<int>, int, ImageHash> index_;
  std::vector<int> parent_;
  std::vector<int> via_gen_;
};

// Right cosets Hx of a subgroup, self-contained: representatives (coset 0 is
// H itself, represented by the identity) plus a lookup from every element of
// the ambient group to its coset id.
struct CosetDecomposition {
  int count = 0;
  std::size_t subgroup_order = 0;
  std::vector<Permutation> representatives;
  std::unordered_map<std::vector<int>, int, ImageHash> coset_of;
};

inline CosetDecomposition right_cosets(const PermGroup& super,
                                       const std::vector<Permutation>& sub_gens) {
  std::vector<Permutation> gens = sub_gens;
  if (gens.empty()) gens.push_back(Permutation(super.degree()));
  for (const auto& g : gens)
    if (!super.contains(g)) throw domain_error("subgroup generator outside the group");
  PermGroup sub = PermGroup::generate(gens, super.order() + 1);

  CosetDecomposition cosets;
  cosets.subgroup_order = sub.order();
  for (const auto& x : super.elements()) {
    if (cosets.coset_of.count(x.images())) continue;
    int id = cosets.count++;
    cosets.representatives.push_back(x);
    for (const auto& h : sub.elements()) {
      Permutation hx = compose(h, x);
      if (!cosets.coset_of.emplace(hx.images(), id).second)
        throw consistency_error("overlapping cosets");
    }
  }
  if (cosets.count * cosets.subgroup_order != super.order())
    throw consistency_error("coset partition does not satisfy Lagrange");
  return cosets;
}

// Right multiplication on coset ids: coset(Hx) -> coset(Hxg).
inline Permutation action_on_cosets(const Permutation& g, const CosetDecomposition& cosets) {
  std::vector<int> images(cosets.count);
  for (int c = 0; c < cosets.count; ++c) {
    Permutation xg = compose(cosets.representatives[c], g);
    auto it = cosets.coset_of.find(xg.images());
    if (it == cosets.coset_of.end()) throw domain_error("element outside the group");
    images[c] = it->second;
  }
  return Permutation::from_images(std::move(images));
}

// Largest normal subgroup of super contained in <sub_gens>: the kernel of the
// right-coset action.
inline PermGroup normal_core(const PermGroup& super, const std::vector<Permutation>& sub_gens) {
  CosetDecomposition cosets = right_cosets(super, sub_gens);
  std::vector<Permutation> kernel;
  for (const auto& e : super.elements())
    if (action_on_cosets(e, cosets).is_identity()) kernel.push_back(e);
  return PermGroup::generate(kernel, super.order() + 1);
}

// Cayley embedding: point i carries element(i); each group element g becomes
// the permutation i -> index(element(i) * g) of degree |G|.
struct RegularRepresentation {
  PermGroup group;
  std::vector<Permutation> point_labels;
};

inline Permutation regular_image(const PermGroup& grp, const Permutation& g) {
  std::vector<int> images(grp.order());
  for (std::size_t i = 0; i < grp.order(); ++i) {
    int j = grp.index_of(compose(grp.element(i), g));
    if (j < 0) throw domain_error("element outside the group");
    images[i] = j;
  }
  return Permutation::from_images(std::move(images));
}

inline RegularRepresentation regular_representation(const PermGroup& grp) {
  std::vector<Permutation> images;
  images.reserve(grp.generators().size());
  for (const auto& g : grp.generators()) images.push_back(regular_image(grp, g));
  PermGroup reg = PermGroup::generate(images, grp.order() + 1);
  if (reg.order() != grp.order())
    throw consistency_error("regular representation order mismatch");
  return RegularRepresentation{std::move(reg), grp.elements()};
}

// Generator-to-image pairs, one entry per listed source generator.
struct IsoWitness {
  std::vector<std::pair<Permutation, Permutation>> generator_images;
};

// Full multiplication-table comparison under the map induced by the witness.
inline bool witness_valid(const PermGroup& source, const PermGroup& target,
                          const IsoWitness& witness) {
  if (source.order() != target.order()) return false;

  std::vector<Permutation> gen_img;
  for (const auto& g : source.generators()) {
    const Permutation* found = nullptr;
    for (const auto& [from, to] : witness.generator_images) {
      if (from == g) {
        if (found && !(*found == to)) return false;
        found = &to;
      }
    }
    if (!found) return false;
    gen_img.push_back(*found);
  }

  std::vector<int> img(source.order(), -1);
  img[0] = 0;
  for (std::size_t i = 1; i < source.order(); ++i) {
    int p = source.derivation_parent(i);
    int g = source.derivation_gen(i);
    int t = target.index_of(compose(target.element(img[p]), gen_img[g]));
    if (t < 0) return false;
    img[i] = t;
  }

  std::vector<char> hit(target.order(), 0);
  for (int t : img) {
    if (hit[t]) return false;
    hit[t] = 1;
  }

  for (std::size_t i = 0; i < source.order(); ++i) {
    for (std::size_t j = 0; j < source.order(); ++j) {
      int ij = source.index_of(compose(source.element(i), source.element(j)));
      int tij = target.index_of(compose(target.element(img[i]), target.element(img[j])));
      if (tij < 0 || img[ij] != tij) return false;
    }
  }
  return true;
}

namespace detail {

// (element order, conjugacy class size) per element; the multiset is an
// isomorphism invariant used for pruning.
inline std::vector<std::pair<std::uint64_t, int>> class_profile(const PermGroup& grp) {
  std::vector<int> class_id(grp.order(), -1);
  std::vector<int> class_size;
  for (std::size_t i = 0; i < grp.order(); ++i) {
    if (class_id[i] >= 0) continue;
    int id = static_cast<int>(class_size.size());
    std::vector<std::size_t> frontier{i};
    class_id[i] = id;
    int size = 0;
    while (!frontier.empty()) {
      std::size_t at = frontier.back();
      frontier.pop_back();
      ++size;
      for (const auto& g : grp.generators()) {
        Permutation conj = compose(compose(inverse(g), grp.element(at)), g);
        int j = grp.index_of(conj);
        if (j < 0) throw consistency_error("conjugate escaped the group");
        if (class_id[j] < 0) {
          class_id[j] = id;
          frontier.push_back(static_cast<std::size_t>(j));
        }
      }
    }
    class_size.push_back(size);
  }
  std::vector<std::pair<std::uint64_t, int>> profile(grp.order());
  for (std::size_t i = 0; i < grp.order(); ++i)
    profile[i] = {element_order(grp.element(i)), class_size[class_id[i]]};
  return profile;
}

inline bool extend_iso(const PermGroup& source, const PermGroup& target,
                       const std::vector<std::vector<int>>& candidates,
                       std::vector<int>& choice, std::size_t at) {
  const auto& gens = source.generators();
  if (at == gens.size()) {
    // Cheap full check: images defined by derivation links must give a
    // bijective map respecting every (element, generator) product.
    std::vector<int> img(source.order(), -1);
    img[0] = 0;
    for (std::size_t i = 1; i < source.order(); ++i) {
      int p = source.derivation_parent(i);
      int g = source.derivation_gen(i);
      img[i] = target.index_of(compose(target.element(img[p]), target.element(choice[g])));
      if (img[i] < 0) return false;
    }
    std::vector<char> hit(target.order(), 0);
    for (int t : img) {
      if (hit[t]) return false;
      hit[t] = 1;
    }
    for (std::size_t i = 0; i < source.order(); ++i) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int ig = source.index_of(compose(source.element(i), gens[g]));
        int timg = target.index_of(compose(target.element(img[i]), target.element(choice[g])));
        if (img[ig] != timg) return false;
      }
    }
    return true;
  }
  // Repeated generators must share an image.
  for (std::size_t prev = 0; prev < at; ++prev) {
    if (gens[prev] == gens[at]) {
      choice[at] = choice[prev];
      return extend_iso(source, target, candidates, choice, at + 1);
    }
  }
  for (int c : candidates[at]) {
    choice[at] = c;
    if (extend_iso(source, target, candidates, choice, at + 1)) return true;
  }
  return false;
}

}  // namespace detail

constexpr std::size_t kDefaultIsoCap = 5040;

// Backtracking over generator images, pruned by (order, class size) profiles.
// A returned witness has already passed witness_valid.
inline std::optional<IsoWitness> is_isomorphic(const PermGroup& g1, const PermGroup& g2,
                                               std::size_t cap = kDefaultIsoCap) {
  if (g1.order() > cap || g2.order() > cap)
    throw capacity_error("isomorphism search cap exceeded");
  if (g1.order() != g2.order()) return std::nullopt;

  auto profile1 = detail::class_profile(g1);
  auto profile2 = detail::class_profile(g2);
  {
    auto sorted1 = profile1, sorted2 = profile2;
    std::sort(sorted1.begin(), sorted1.end());
    std::sort(sorted2.begin(), sorted2.end());
    if (sorted1 != sorted2) return std::nullopt;
  }

  std::vector<std::vector<int>> candidates(g1.generators().size());
  for (std::size_t g = 0; g < g1.generators().size(); ++g) {
    auto want = profile1[g1.index_of(g1.generators()[g])];
    for (std::size_t j = 0; j < g2.order(); ++j)
      if (profile2[j] == want) candidates[g].push_back(static_cast<int>(j));
  }

  std::vector<int> choice(g1.generators().size(), -1);
  if (!detail::extend_iso(g1, g2, candidates, choice, 0)) return std::nullopt;

  IsoWitness witness;
  for (std::size_t g = 0; g < g1.generators().size(); ++g)
    witness.generator_images.emplace_back(g1.generators()[g], g2.element(choice[g]));
  if (!witness_valid(g1, g2, witness))
    throw consistency_error("isomorphism witness failed validation");
  return witness;
}

}  // namespace monodromy
