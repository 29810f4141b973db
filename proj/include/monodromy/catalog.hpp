#pragma once

// Group-spec grammar and the named catalog.
//
//   S<n> | A<n> | C<n> | D<n> | Q8 | V4      named families
//   perm:<n>:<cycles>[,<cycles>...]          explicit generators
//   pres:<generators | relators>             finite presentation, resolved by
//                                            coset enumeration over the
//                                            trivial subgroup

#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/fpgrp.hpp"
#include "monodromy/perm.hpp"

namespace monodromy {

constexpr std::size_t kDefaultPresentationCap = 10000;

struct CatalogEntry {
  std::string name;
  int degree;
  std::vector<std::string> generators;
};

// The stock test set: all groups of order at most 6 plus the order-8 and
// order-12 staples and S4 itself.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"C2", 2, {"(1 2)"}},
      {"C3", 3, {"(1 2 3)"}},
      {"C4", 4, {"(1 2 3 4)"}},
      {"C5", 5, {"(1 2 3 4 5)"}},
      {"C6", 6, {"(1 2 3 4 5 6)"}},
      {"V4", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}},
      {"S3", 3, {"(1 2)", "(1 2 3)"}},
      {"D4", 4, {"(1 2 3 4)", "(2 4)"}},
      {"Q8", 8, {"(1 2 3 4)(5 8 6 7)", "(1 5 3 6)(2 7 4 8)"}},
      {"A4", 4, {"(1 2 3)", "(1 2 4)"}},
      {"S4", 4, {"(1 2)", "(1 2 3 4)"}},
  };
  return entries;
}

namespace detail {

inline int parse_family_size(const std::string& name) {
  if (name.size() < 2) throw domain_error("unknown group name '" + name + "'");
  int n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9')
      throw domain_error("unknown group name '" + name + "'");
    n = n * 10 + (name[i] - '0');
    if (n > 1000000) throw domain_error("group family index too large");
  }
  return n;
}

}  // namespace detail

inline std::vector<Permutation> named_group_generators(const std::string& name) {
  if (name == "V4")
    return {parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)};
  if (name == "Q8")
    return {parse_cycles("(1 2 3 4)(5 8 6 7)", 8), parse_cycles("(1 5 3 6)(2 7 4 8)", 8)};
  if (name.empty()) throw domain_error("empty group name");

  const char family = name[0];
  const int n = detail::parse_family_size(name);
  std::vector<Permutation> gens;
  switch (family) {
    case 'C': {
      if (n < 1) throw domain_error("C<n> needs n >= 1");
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      gens.push_back(Permutation::from_images(std::move(c)));
      break;
    }
    case 'S': {
      if (n < 1) throw domain_error("S<n> needs n >= 1");
      if (n == 1) {
        gens.push_back(Permutation(1));
        break;
      }
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      gens.push_back(parse_cycles("(1 2)", n));
      gens.push_back(Permutation::from_images(std::move(c)));
      break;
    }
    case 'A': {
      if (n < 3) throw domain_error("A<n> needs n >= 3");
      for (int j = 3; j <= n; ++j)
        gens.push_back(parse_cycles("(1 2 " + std::to_string(j) + ")", n));
      break;
    }
    case 'D': {
      if (n < 3) throw domain_error("D<n> needs n >= 3");
      std::vector<int> c(n), refl(n);
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      refl[0] = 0;
      for (int i = 1; i < n; ++i) refl[i] = n - i;
      gens.push_back(Permutation::from_images(std::move(c)));
      gens.push_back(Permutation::from_images(std::move(refl)));
      break;
    }
    default:
      throw domain_error("unknown group name '" + name + "'");
  }
  return gens;
}

// perm:<n>:<cycles>[,<cycles>...] -> one parsed generator per comma part.
inline std::vector<Permutation> parse_perm_spec(const std::string& body) {
  std::size_t colon = body.find(':');
  if (colon == std::string::npos) throw parse_error("expected perm:<n>:<cycles>", body.size());
  int n = 0;
  if (colon == 0) throw parse_error("expected a degree", 0);
  for (std::size_t i = 0; i < colon; ++i) {
    if (body[i] < '0' || body[i] > '9') throw parse_error("expected a degree", i);
    n = n * 10 + (body[i] - '0');
    if (n > 1000000) throw parse_error("degree too large", i);
  }
  if (n < 1) throw parse_error("degree must be positive", 0);

  std::vector<Permutation> gens;
  std::size_t pos = colon + 1;
  while (pos <= body.size()) {
    std::size_t comma = std::min(body.find(',', pos), body.size());
    try {
      gens.push_back(parse_cycles(body.substr(pos, comma - pos), n));
    } catch (const parse_error& e) {
      throw parse_error(e.message(), pos + e.position());
    }
    if (comma == body.size()) break;
    pos = comma + 1;
  }
  return gens;
}

// Any group spec to a fully enumerated group. Presentations are resolved by
// enumerating cosets of the trivial subgroup, so the enumeration cap bounds
// the order of the presented group.
inline PermGroup resolve_group_spec(const std::string& spec,
                                    std::size_t closure_cap = kDefaultClosureCap,
                                    std::size_t presentation_cap = kDefaultPresentationCap) {
  if (spec.rfind("perm:", 0) == 0)
    return PermGroup::generate(parse_perm_spec(spec.substr(5)), closure_cap);
  if (spec.rfind("pres:", 0) == 0) {
    const Presentation pres = parse_presentation(spec.substr(5));
    const CosetTable table = todd_coxeter(pres, {}, presentation_cap);
    return PermGroup::generate(coset_action(table), closure_cap);
  }
  return PermGroup::generate(named_group_generators(spec), closure_cap);
}

// Inverse of resolve for explicit generators: a spec that reproduces the
// group with the same generator list in the same order.
inline std::string canonical_group_spec(const PermGroup& g) {
  std::string out = "perm:" + std::to_string(g.degree()) + ":";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += ",";
    out += format_cycles(g.generators()[i]);
  }
  return out;
}

}  // namespace monodromy
