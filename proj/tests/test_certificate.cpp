#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "monodromy/catalog.hpp"
#include "monodromy/certificate_io.hpp"
#include "monodromy/cover.hpp"

using namespace monodromy;

namespace {

MonodromyCertificate make_cert(const std::string& name, const std::string& construction) {
  std::vector<Permutation> gens;
  const PermGroup g = resolve_group_spec(name);
  if (construction == "triangle") return triangle_construction(g);
  return free_construction(g.generators());
}

VerifyReport verify_mutated(certificate_json doc, const char* pointer,
                            const certificate_json& value) {
  doc[certificate_json::json_pointer(pointer)] = value;
  return verify_certificate(doc);
}

}  // namespace

TEST_CASE("certificates verify after a serialization round trip") {
  for (const char* spec : {"S4", "C5", "Q8"}) {
    for (const char* construction : {"triangle", "free"}) {
      const MonodromyCertificate cert = make_cert(spec, construction);
      REQUIRE(cert.all_checks_pass());
      const certificate_json doc = certificate_json::parse(certificate_to_string(cert));
      const VerifyReport report = verify_certificate(doc);
      INFO(spec << " " << construction << ": " << report.field << " " << report.detail);
      REQUIRE(report.ok);
    }
  }
}

TEST_CASE("serialization is byte-deterministic and fixes the field order") {
  const std::string once = certificate_to_string(make_cert("S3", "free"));
  const std::string twice = certificate_to_string(make_cert("S3", "free"));
  REQUIRE(once == twice);

  const certificate_json doc = certificate_json::parse(once);
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    keys.push_back(key);
  }
  REQUIRE(keys == std::vector<std::string>{"construction", "group", "n", "cover_degree",
                                           "ambient_index", "monodromy_generators",
                                           "kernel_words", "kernel_matrices", "iso_witness",
                                           "signature", "checks"});

  REQUIRE(certificate_to_string(make_cert("C5", "triangle")) ==
          certificate_to_string(make_cert("C5", "triangle")));
}

TEST_CASE("verification recomputes every stated field") {
  const certificate_json tri = certificate_to_json(make_cert("C5", "triangle"));
  REQUIRE(verify_certificate(tri).ok);

  REQUIRE(verify_mutated(tri, "/n", 6).field == "n");
  REQUIRE(verify_mutated(tri, "/cover_degree", 10).field == "cover_degree");
  REQUIRE(verify_mutated(tri, "/ambient_index", 23).field == "ambient_index");
  REQUIRE(verify_mutated(tri, "/monodromy_generators/0", "()").field == "monodromy_generators");
  REQUIRE(verify_mutated(tri, "/kernel_words", certificate_json::array({"x0"})).field ==
          "kernel_words");
  REQUIRE(verify_mutated(tri, "/signature/genus", 5).field == "signature");
  REQUIRE(verify_mutated(tri, "/signature/periods", certificate_json::array({7})).field ==
          "signature");

  certificate_json fake_witness = tri.at("iso_witness");
  for (auto& [key, value] : fake_witness.items()) {
    (void)key;
    value = "()";
  }
  {
    certificate_json doc = tri;
    doc["iso_witness"] = fake_witness;
    const VerifyReport report = verify_certificate(doc);
    REQUIRE(!report.ok);
    REQUIRE(report.field == "iso_witness");
  }

  const certificate_json fre = certificate_to_json(make_cert("S3", "free"));
  REQUIRE(verify_certificate(fre).ok);

  {
    certificate_json doc = fre;
    const std::string first = doc["kernel_words"][0].get<std::string>();
    doc["kernel_words"][0] = "x1*x1^-1*" + first;
    const VerifyReport report = verify_certificate(doc);
    REQUIRE(!report.ok);
    REQUIRE(report.field == "kernel_words");
  }
  {
    certificate_json doc = fre;
    doc["kernel_matrices"][0] = "[[1,6],[0,1]]";
    const VerifyReport report = verify_certificate(doc);
    REQUIRE(!report.ok);
    REQUIRE(report.field == "kernel_matrices");
  }
  REQUIRE(verify_mutated(fre, "/ambient_index", 3).field == "ambient_index");
  REQUIRE(verify_mutated(fre, "/signature", certificate_json::object()).field == "signature");

  {
    certificate_json doc = fre;
    doc["checks"]["iso_witness_valid"] = false;
    const VerifyReport report = verify_certificate(doc);
    REQUIRE(!report.ok);
    REQUIRE(report.field == "checks");
  }
  {
    certificate_json doc = fre;
    doc["checks"]["made_up_check"] = true;
    REQUIRE(verify_certificate(doc).field == "checks");
  }
  {
    certificate_json doc = fre;
    doc["checks"].erase("rank_formula");
    REQUIRE(verify_certificate(doc).field == "checks");
  }
}

TEST_CASE("structural problems are rejected before any recomputation") {
  const certificate_json good = certificate_to_json(make_cert("S3", "triangle"));

  {
    certificate_json doc = good;
    doc.erase("n");
    REQUIRE_THROWS_AS(verify_certificate(doc), domain_error);
  }
  {
    certificate_json doc = good;
    doc["construction"] = "mystery";
    REQUIRE_THROWS_AS(verify_certificate(doc), domain_error);
  }
  {
    certificate_json doc = good;
    doc["n"] = "three";
    REQUIRE_THROWS_AS(verify_certificate(doc), domain_error);
  }
  {
    certificate_json doc = good;
    doc["group"] = "X99";
    REQUIRE_THROWS_AS(verify_certificate(doc), domain_error);
  }
  {
    certificate_json doc = good;
    doc["iso_witness"] = certificate_json::array();
    REQUIRE_THROWS_AS(verify_certificate(doc), domain_error);
  }
  REQUIRE_THROWS_AS(verify_certificate(certificate_json::array()), domain_error);
}

TEST_CASE("certificate files round-trip through disk") {
  const MonodromyCertificate cert = make_cert("V4", "free");
  const std::string path = "tmp_v4_cert.json";
  {
    std::ofstream out(path);
    out << certificate_to_string(cert);
  }
  const certificate_json doc = read_json_file(path);
  REQUIRE(verify_certificate(doc).ok);

  {
    std::ofstream out(path);
    out << "{ not json";
  }
  REQUIRE_THROWS_AS(read_json_file(path), parse_error);
  REQUIRE_THROWS_AS(read_json_file("no_such_file_at_all.json"), domain_error);
}
