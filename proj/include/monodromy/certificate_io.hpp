#pragma once

// Certificate JSON: a fixed field order so equal certificates are equal
// bytes, and a verifier that re-derives every claim from the group spec
// alone. Structural problems (missing fields, wrong types, unparseable
// strings) throw; semantic disagreements are reported with the name of the
// offending field.

#include <cstdint>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "monodromy/catalog.hpp"
#include "monodromy/cover.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/fpgrp.hpp"
#include "monodromy/perm.hpp"
#include "monodromy/psl2.hpp"
#include "monodromy/schreier.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

using certificate_json = nlohmann::ordered_json;

inline certificate_json certificate_to_json(const MonodromyCertificate& cert) {
  certificate_json j;
  j["construction"] = cert.construction;
  j["group"] = canonical_group_spec(cert.group);
  j["n"] = cert.degree;
  j["cover_degree"] = cert.cover_degree;
  j["ambient_index"] = cert.ambient_index;

  certificate_json mon = certificate_json::array();
  for (const Permutation& p : cert.monodromy_generators) mon.push_back(format_cycles(p));
  j["monodromy_generators"] = std::move(mon);

  certificate_json words = certificate_json::array();
  for (const FreeWord& w : cert.kernel_words) words.push_back(format_word(w));
  j["kernel_words"] = std::move(words);

  certificate_json mats = certificate_json::array();
  for (const ProjectiveMatrix& m : cert.kernel_matrices) mats.push_back(format_matrix(m));
  j["kernel_matrices"] = std::move(mats);

  certificate_json witness = certificate_json::object();
  for (const auto& [from, to] : cert.iso_witness.generator_images)
    witness[format_cycles(from)] = format_cycles(to);
  j["iso_witness"] = std::move(witness);

  if (cert.cover_signature) {
    certificate_json sig;
    sig["genus"] = cert.cover_signature->genus;
    sig["periods"] = cert.cover_signature->periods;
    j["signature"] = std::move(sig);
  } else {
    j["signature"] = nullptr;
  }

  certificate_json checks = certificate_json::object();
  for (const auto& [name, ok] : cert.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  return j;
}

inline std::string certificate_to_string(const MonodromyCertificate& cert) {
  return certificate_to_json(cert).dump(2) + "\n";
}

inline certificate_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open '" + path + "'");
  try {
    return certificate_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
  }
}

struct VerifyReport {
  bool ok = false;
  std::string field;
  std::string detail;
};

namespace detail {

inline const certificate_json& cert_field(const certificate_json& doc, const char* name) {
  if (!doc.contains(name))
    throw domain_error(std::string("certificate is missing '") + name + "'");
  return doc.at(name);
}

inline std::string cert_string(const certificate_json& doc, const char* name) {
  const auto& f = cert_field(doc, name);
  if (!f.is_string()) throw domain_error(std::string("'") + name + "' must be a string");
  return f.get<std::string>();
}

inline std::int64_t cert_integer(const certificate_json& doc, const char* name) {
  const auto& f = cert_field(doc, name);
  if (!f.is_number_integer())
    throw domain_error(std::string("'") + name + "' must be an integer");
  return f.get<std::int64_t>();
}

inline std::vector<std::string> cert_string_array(const certificate_json& doc, const char* name) {
  const auto& f = cert_field(doc, name);
  if (!f.is_array()) throw domain_error(std::string("'") + name + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : f) {
    if (!item.is_string())
      throw domain_error(std::string("'") + name + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline VerifyReport verify_certificate(const certificate_json& doc,
                                       std::size_t closure_cap = kDefaultClosureCap,
                                       std::size_t presentation_cap = kDefaultPresentationCap) {
  auto fail = [](const char* field, std::string detail) {
    return VerifyReport{false, field, std::move(detail)};
  };
  if (!doc.is_object()) throw domain_error("certificate must be a JSON object");

  const std::string construction = detail::cert_string(doc, "construction");
  if (construction != "triangle" && construction != "free")
    throw domain_error("'construction' must be \"triangle\" or \"free\"");

  const PermGroup g =
      resolve_group_spec(detail::cert_string(doc, "group"), closure_cap, presentation_cap);

  if (detail::cert_integer(doc, "n") != g.degree())
    return fail("n", "stated degree differs from the group's");
  if (detail::cert_integer(doc, "cover_degree") < 0 ||
      static_cast<std::size_t>(detail::cert_integer(doc, "cover_degree")) != g.order())
    return fail("cover_degree", "stated cover degree differs from the group order");
  const std::int64_t ambient_index = detail::cert_integer(doc, "ambient_index");

  // Monodromy generators must act regularly on |G| sheets and generate a
  // group isomorphic to G through the recorded witness.
  const std::vector<std::string> mon_text = detail::cert_string_array(doc, "monodromy_generators");
  if (mon_text.empty()) return fail("monodromy_generators", "no generators listed");
  std::vector<Permutation> mon_gens;
  for (const std::string& s : mon_text)
    mon_gens.push_back(parse_cycles(s, static_cast<int>(g.order())));
  const PermGroup mon = PermGroup::generate(mon_gens, closure_cap);
  if (mon.order() != g.order())
    return fail("monodromy_generators", "generated group has the wrong order");
  if (!regular_group(mon))
    return fail("monodromy_generators", "the action on sheets is not regular");

  const auto& jwitness = detail::cert_field(doc, "iso_witness");
  if (!jwitness.is_object()) throw domain_error("'iso_witness' must be an object");
  IsoWitness witness;
  std::unordered_set<std::string> expected_keys;
  for (const Permutation& gen : mon_gens) {
    const std::string key = format_cycles(gen);
    expected_keys.insert(key);
    if (!jwitness.contains(key))
      return fail("iso_witness", "no image recorded for generator " + key);
    if (!jwitness.at(key).is_string())
      throw domain_error("'iso_witness' values must be strings");
    witness.generator_images.emplace_back(gen,
                                          parse_cycles(jwitness.at(key).get<std::string>(),
                                                       g.degree()));
  }
  for (const auto& [key, value] : jwitness.items()) {
    (void)value;
    if (!expected_keys.count(key))
      return fail("iso_witness", "entry for " + key + " matches no generator");
  }
  if (!witness_valid(mon, g, witness))
    return fail("iso_witness", "the recorded map is not an isomorphism onto the group");

  const std::vector<std::string> word_text = detail::cert_string_array(doc, "kernel_words");
  const std::vector<std::string> mat_text = detail::cert_string_array(doc, "kernel_matrices");
  const auto& jsignature = detail::cert_field(doc, "signature");

  bool hyperbolic = false;
  if (construction == "triangle") {
    if (!word_text.empty())
      return fail("kernel_words", "triangle certificates carry no kernel words");
    if (!mat_text.empty())
      return fail("kernel_matrices", "triangle certificates carry no kernel matrices");

    const int n = g.degree();
    const Homomorphism hom = triangle_homomorphism(n, closure_cap);
    const PermGroup sn = PermGroup::generate(hom.images, closure_cap);
    const CosetDecomposition cosets = right_cosets(sn, g.generators());
    if (ambient_index != cosets.count)
      return fail("ambient_index", "stated index differs from the coset count");

    hyperbolic = hyperbolicity_class(2, n, n - 1) == Curvature::hyperbolic;
    if (hyperbolic) {
      if (!jsignature.is_object())
        throw domain_error("'signature' must be an object for hyperbolic parameters");
      Signature stated;
      stated.genus = detail::cert_integer(jsignature, "genus");
      const auto& jperiods = detail::cert_field(jsignature, "periods");
      if (!jperiods.is_array()) throw domain_error("'periods' must be an array");
      for (const auto& p : jperiods) {
        if (!p.is_number_integer()) throw domain_error("'periods' must contain integers");
        stated.periods.push_back(p.get<int>());
      }
      std::vector<Permutation> cover_action;
      for (const Permutation& img : hom.images) cover_action.push_back(regular_image(sn, img));
      if (subgroup_signature(2, n, n - 1, cover_action) != stated)
        return fail("signature", "recomputed cover signature disagrees");
    } else if (!jsignature.is_null()) {
      return fail("signature", "no signature is defined for non-hyperbolic parameters");
    }
  } else {
    const std::size_t r = g.generators().size();
    if (ambient_index != static_cast<std::int64_t>(r))
      return fail("ambient_index", "stated index differs from the generator count");
    if (word_text.size() != schreier_rank(g.order(), r))
      return fail("kernel_words", "word count violates the rank formula");
    if (mat_text.size() != word_text.size())
      return fail("kernel_matrices", "matrix count differs from word count");

    const std::vector<ProjectiveMatrix> xs = conjugate_generators(r);
    for (std::size_t i = 0; i < word_text.size(); ++i) {
      const FreeWord w = parse_word(word_text[i]);
      if (format_word(w) != word_text[i])
        return fail("kernel_words", "word " + std::to_string(i) + " is not in reduced form");
      if (w.empty())
        return fail("kernel_words", "word " + std::to_string(i) + " is trivial");
      if (!evaluate(w, g.generators()).is_identity())
        return fail("kernel_words", "word " + std::to_string(i) + " does not map to the identity");
      const ProjectiveMatrix m = parse_matrix(mat_text[i]);
      if (m != evaluate(w, xs))
        return fail("kernel_matrices",
                    "matrix " + std::to_string(i) + " differs from its word's value");
      if (!in_gamma2(m))
        return fail("kernel_matrices",
                    "matrix " + std::to_string(i) + " is outside the level-two subgroup");
      if (m.is_identity())
        return fail("kernel_matrices", "matrix " + std::to_string(i) + " is trivial");
    }
    if (!jsignature.is_null())
      return fail("signature", "free-construction certificates carry no signature");
  }

  const auto& jchecks = detail::cert_field(doc, "checks");
  if (!jchecks.is_object()) throw domain_error("'checks' must be an object");
  const std::vector<std::string> expected = construction == "triangle"
                                                ? detail::triangle_check_names(hyperbolic)
                                                : detail::free_check_names();
  std::unordered_set<std::string> expected_set(expected.begin(), expected.end());
  for (const std::string& name : expected)
    if (!jchecks.contains(name)) return fail("checks", "missing check '" + name + "'");
  for (const auto& [name, value] : jchecks.items()) {
    if (!expected_set.count(name)) return fail("checks", "unexpected check '" + name + "'");
    if (!value.is_boolean())
      throw domain_error("'checks' values must be booleans");
    if (!value.get<bool>()) return fail("checks", "check '" + name + "' is recorded as failed");
  }

  return VerifyReport{true, "", "all claims verified"};
}

}  // namespace monodromy
