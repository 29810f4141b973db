// Command-line front end: realize groups as monodromy certificates, verify
// certificate files, and expose the supporting machinery (coset counting,
// subgroup signatures, matrix decomposition).
//
// Exit codes: 0 success, 1 failed checks or verification mismatch, 2 parse
// or usage problems, 3 capacity exhaustion.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monodromy/catalog.hpp"
#include "monodromy/certificate_io.hpp"
#include "monodromy/cover.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/fpgrp.hpp"
#include "monodromy/psl2.hpp"

namespace {

using namespace monodromy;

struct Caps {
  std::size_t closure = kDefaultClosureCap;
  std::size_t iso = kDefaultIsoCap;
  std::size_t cosets = kDefaultPresentationCap;
};

MonodromyCertificate build(const PermGroup& g, const std::string& construction,
                           const Caps& caps) {
  if (construction == "triangle") return triangle_construction(g, caps.closure, caps.iso);
  return free_construction(g.generators(), caps.closure, caps.iso);
}

void write_certificate(const MonodromyCertificate& cert, const std::string& out_path) {
  const std::string text = certificate_to_string(cert);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw domain_error("cannot write '" + out_path + "'");
  out << text;
}

int report_checks(const MonodromyCertificate& cert) {
  bool ok = true;
  for (const auto& [name, passed] : cert.checks)
    if (!passed) {
      std::cerr << "check failed: " << name << "\n";
      ok = false;
    }
  return ok ? 0 : 1;
}

int cmd_realize(const std::string& group_spec, const std::string& construction,
                const std::string& out_path, const Caps& caps) {
  const PermGroup g = resolve_group_spec(group_spec, caps.closure, caps.cosets);
  const MonodromyCertificate cert = build(g, construction, caps);
  write_certificate(cert, out_path);
  return report_checks(cert);
}

int cmd_realize_catalog(const std::string& out_dir, const Caps& caps) {
  namespace fs = std::filesystem;
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  int rc = 0;
  for (const CatalogEntry& entry : catalog()) {
    std::vector<Permutation> gens;
    for (const std::string& c : entry.generators) gens.push_back(parse_cycles(c, entry.degree));
    const PermGroup g = PermGroup::generate(gens, caps.closure);
    for (const char* construction : {"triangle", "free"}) {
      const MonodromyCertificate cert = build(g, construction, caps);
      write_certificate(cert, (dir / (entry.name + "_" + construction + ".json")).string());
      const bool ok = cert.all_checks_pass();
      std::cout << entry.name << " " << construction << ": " << (ok ? "ok" : "FAILED") << "\n";
      if (!ok) rc = 1;
    }
  }
  return rc;
}

int cmd_verify(const std::string& path, const Caps& caps) {
  const VerifyReport report =
      verify_certificate(read_json_file(path), caps.closure, caps.cosets);
  if (report.ok) {
    std::cout << "certificate ok\n";
    return 0;
  }
  std::cerr << "verification failed: " << report.field << ": " << report.detail << "\n";
  return 1;
}

int cmd_order(const std::string& text, std::size_t max_cosets) {
  const CosetTable table = todd_coxeter(parse_presentation(text), {}, max_cosets);
  std::cout << table.count() << "\n";
  return 0;
}

int cmd_signature(int n, const std::string& subgroup, const Caps& caps) {
  if (n < 5) throw domain_error("the (2, n, n-1) triangle is hyperbolic only for n >= 5");
  const Homomorphism hom = triangle_homomorphism(n, caps.closure);
  const PermGroup sn = PermGroup::generate(hom.images, caps.closure);

  std::vector<Permutation> action;
  if (subgroup == "full") {
    for (const Permutation& img : hom.images) action.push_back(regular_image(sn, img));
  } else {
    const PermGroup h = resolve_group_spec(subgroup, caps.closure, caps.cosets);
    if (h.degree() != n) throw domain_error("subgroup degree differs from n");
    const CosetDecomposition cosets = right_cosets(sn, h.generators());
    for (const Permutation& img : hom.images)
      action.push_back(action_on_cosets(img, cosets));
  }

  const Signature sig = subgroup_signature(2, n, n - 1, action);
  std::cout << "genus " << sig.genus;
  if (sig.periods.empty()) {
    std::cout << ", no periods\n";
  } else {
    std::cout << ", periods";
    for (int p : sig.periods) std::cout << " " << p;
    std::cout << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& text) {
  std::cout << format_word(matrix_to_word(parse_matrix(text))) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monodromy certificates for finite permutation groups"};
  app.require_subcommand(1);

  std::string r_group, r_construction, r_out;
  bool r_all = false;
  std::size_t r_cap = 0, r_cosets = 0;
  auto* realize = app.add_subcommand("realize", "construct a certificate for a group");
  realize->add_option("--group", r_group,
                      "group spec: S<n>|A<n>|C<n>|D<n>|Q8|V4, perm:<n>:<cycles>[,...], "
                      "or pres:<gens | relators>");
  realize->add_option("--construction", r_construction, "triangle or free")
      ->check(CLI::IsMember({"triangle", "free"}));
  realize->add_option("--out", r_out, "output file (directory with --all-catalog)");
  realize->add_flag("--all-catalog", r_all, "realize every catalog group both ways");
  realize->add_option("--max-cosets", r_cosets, "coset cap when resolving pres: specs");
  realize->add_option("--cap", r_cap, "element cap for closure and isomorphism search");

  std::string v_path;
  std::size_t v_cap = 0, v_cosets = 0;
  auto* verify = app.add_subcommand("verify", "recheck every claim in a certificate file");
  verify->add_option("certificate", v_path, "certificate JSON file")->required();
  verify->add_option("--max-cosets", v_cosets, "coset cap when resolving pres: specs");
  verify->add_option("--cap", v_cap, "element cap for closure and isomorphism search");

  std::string o_pres;
  std::size_t o_max = 1000000;
  auto* order = app.add_subcommand(
      "order", "coset count of a presentation over the trivial subgroup");
  order->add_option("presentation", o_pres, "gens | relators")->required();
  order->add_option("--max-cosets", o_max, "enumeration cap");

  int s_n = 0;
  std::string s_subgroup = "full";
  std::size_t s_cap = 0, s_cosets = 0;
  auto* sig = app.add_subcommand(
      "signature", "surface signature of a subgroup pulled back through the "
                   "(2, n, n-1) triangle quotient");
  sig->add_option("n", s_n, "triangle parameter, n >= 5")->required();
  sig->add_option("--subgroup", s_subgroup,
                  "group spec inside S_n, or 'full' for the kernel itself");
  sig->add_option("--max-cosets", s_cosets, "coset cap when resolving pres: specs");
  sig->add_option("--cap", s_cap, "element cap for closures");

  std::string d_matrix;
  auto* dec = app.add_subcommand(
      "decompose", "write a level-two matrix as a word in the two parabolic generators");
  dec->add_option("matrix", d_matrix, "[[a,b],[c,d]]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (realize->parsed()) {
      Caps caps;
      if (r_cap) {
        caps.closure = r_cap;
        caps.iso = r_cap;
      }
      if (r_cosets) caps.cosets = r_cosets;
      if (r_all) {
        if (!r_group.empty() || !r_construction.empty())
          throw domain_error("--all-catalog excludes --group and --construction");
        return cmd_realize_catalog(r_out, caps);
      }
      if (r_group.empty() || r_construction.empty())
        throw domain_error("realize needs --group and --construction (or --all-catalog)");
      return cmd_realize(r_group, r_construction, r_out, caps);
    }
    if (verify->parsed()) {
      Caps caps;
      if (v_cap) {
        caps.closure = v_cap;
        caps.iso = v_cap;
      }
      if (v_cosets) caps.cosets = v_cosets;
      return cmd_verify(v_path, caps);
    }
    if (order->parsed()) return cmd_order(o_pres, o_max);
    if (sig->parsed()) {
      Caps caps;
      if (s_cap) caps.closure = s_cap;
      if (s_cosets) caps.cosets = s_cosets;
      return cmd_signature(s_n, s_subgroup, caps);
    }
    if (dec->parsed()) return cmd_decompose(d_matrix);
  } catch (const capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 3;
  } catch (const consistency_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
