#pragma once

// Finitely presented groups, triangle-group presentations, coset enumeration
// (HLT with coincidence handling, standardized output), and the exact
// spherical/euclidean/hyperbolic classification.
//
// Scanning applies a word's letters in sequence, which under the
// rightmost-first composition convention corresponds to the reversed letter
// order. The enumerator therefore reverses all input words internally, so
// that evaluate(relator, coset_action(table)) is the identity and the
// subgroup words generate the subgroup the caller named.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstddef>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/perm.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<FreeWord> relators;
};

// <g0, g1, gi | g0^m, g1^n, gi^k, g0*g1*gi>
inline Presentation triangle(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw domain_error("triangle parameters must be positive");
  Presentation p;
  p.generator_names = {"g0", "g1", "gi"};
  p.relators.push_back(word_power(0, m));
  p.relators.push_back(word_power(1, n));
  p.relators.push_back(word_power(2, k));
  p.relators.push_back(reduce({Letter{0, 1}, Letter{1, 1}, Letter{2, 1}}));
  return p;
}

enum class Curvature { spherical, euclidean, hyperbolic };

// Sign of 1/m + 1/n + 1/k - 1, decided in exact integer arithmetic.
inline Curvature hyperbolicity_class(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw domain_error("triangle parameters must be positive");
  using boost::multiprecision::cpp_int;
  cpp_int lhs = cpp_int(n) * k + cpp_int(m) * k + cpp_int(m) * n;
  cpp_int rhs = cpp_int(m) * n * k;
  if (lhs > rhs) return Curvature::spherical;
  if (lhs == rhs) return Curvature::euclidean;
  return Curvature::hyperbolic;
}

// Closed, compatible coset table: rows are live cosets (row 0 is the
// subgroup coset), columns alternate generator and inverse transitions.
class CosetTable {
public:
  int count() const { return static_cast<int>(rows_.size()); }
  int generator_count() const { return gens_; }
  const Presentation& presentation() const { return pres_; }

  int apply(int coset, int gen, int sign) const {
    return rows_[coset][2 * gen + (sign < 0 ? 1 : 0)];
  }

private:
  CosetTable(Presentation pres, int gens, std::vector<std::vector<int>> rows)
      : pres_(std::move(pres)), gens_(gens), rows_(std::move(rows)) {}

  friend CosetTable todd_coxeter(const Presentation&, const std::vector<FreeWord>&,
                                 std::size_t);

  Presentation pres_;
  int gens_;
  std::vector<std::vector<int>> rows_;
};

namespace detail {

// HLT enumeration state. Cosets are merged through a union-find whose
// representative is always the smallest id, so coset 0 never dies.
struct TcState {
  int ncols;
  std::size_t max_cosets;
  std::vector<std::vector<int>> tab;
  std::vector<int> p;
  std::deque<int> dead;
  std::size_t live = 0;

  TcState(int ncols_, std::size_t max_cosets_) : ncols(ncols_), max_cosets(max_cosets_) {
    new_coset();
  }

  int new_coset() {
    if (live >= max_cosets)
      throw capacity_error("coset enumeration exceeded the cap of " +
                           std::to_string(max_cosets) + " cosets");
    tab.emplace_back(ncols, -1);
    p.push_back(static_cast<int>(tab.size()) - 1);
    ++live;
    return static_cast<int>(tab.size()) - 1;
  }

  int rep(int k) {
    while (p[k] != k) {
      p[k] = p[p[k]];
      k = p[k];
    }
    return k;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p[b] = a;
    --live;
    dead.push_back(b);
  }

  void process_coincidences() {
    while (!dead.empty()) {
      int g = dead.front();
      dead.pop_front();
      for (int c = 0; c < ncols; ++c) {
        int d = tab[g][c];
        if (d < 0) continue;
        tab[g][c] = -1;
        if (tab[d][c ^ 1] == g) tab[d][c ^ 1] = -1;
        int mu = rep(g), nu = rep(d);
        if (tab[mu][c] >= 0)
          merge(nu, tab[mu][c]);
        else if (tab[nu][c ^ 1] >= 0)
          merge(mu, tab[nu][c ^ 1]);
        else {
          tab[mu][c] = nu;
          tab[nu][c ^ 1] = mu;
        }
      }
    }
  }

  void coincidence(int a, int b) {
    merge(a, b);
    process_coincidences();
  }

  // Two-ended scan of a column word from coset a; defines cosets as needed
  // so the scan always completes or collapses.
  void scan_and_fill(int a, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = a, b = a;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && tab[f][w[i]] >= 0) f = tab[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && tab[b][w[j] ^ 1] >= 0) b = tab[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        tab[f][w[i]] = b;
        tab[b][w[i] ^ 1] = f;
        return;
      }
      int n = new_coset();
      tab[f][w[i]] = n;
      tab[n][w[i] ^ 1] = f;
    }
  }
};

// Reversed column sequence: scanning it letter-by-letter matches the
// rightmost-first evaluation of the original word.
inline std::vector<int> column_word(const FreeWord& w, int gens) {
  std::vector<int> cols;
  cols.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    if (it->gen >= gens) throw domain_error("word uses a generator outside the presentation");
    cols.push_back(2 * it->gen + (it->sign < 0 ? 1 : 0));
  }
  return cols;
}

}  // namespace detail

inline CosetTable todd_coxeter(const Presentation& pres,
                               const std::vector<FreeWord>& subgroup_words,
                               std::size_t max_cosets = 1000000) {
  const int r = static_cast<int>(pres.generator_names.size());
  if (r < 1) throw domain_error("presentation needs at least one generator");

  std::vector<std::vector<int>> rels, subs;
  for (const auto& w : pres.relators)
    if (!w.empty()) rels.push_back(detail::column_word(w, r));
  for (const auto& w : subgroup_words)
    if (!w.empty()) subs.push_back(detail::column_word(w, r));

  detail::TcState st(2 * r, max_cosets);
  for (const auto& w : subs) st.scan_and_fill(0, w);

  for (int a = 0; a < static_cast<int>(st.tab.size()); ++a) {
    if (st.p[a] != a) continue;
    for (const auto& w : rels) {
      st.scan_and_fill(a, w);
      if (st.p[a] != a) break;
    }
    if (st.p[a] != a) continue;
    for (int c = 0; c < 2 * r; ++c) {
      if (st.tab[a][c] >= 0) continue;
      int n = st.new_coset();
      st.tab[a][c] = n;
      st.tab[n][c ^ 1] = a;
    }
  }

  // Verification: closed, all-live, compatible, subgroup words scan to 0.
  std::vector<int> live_ids;
  for (int i = 0; i < static_cast<int>(st.tab.size()); ++i)
    if (st.p[i] == i) live_ids.push_back(i);
  std::vector<int> dense(st.tab.size(), -1);
  for (std::size_t i = 0; i < live_ids.size(); ++i) dense[live_ids[i]] = static_cast<int>(i);
  for (int a : live_ids)
    for (int c = 0; c < 2 * r; ++c) {
      int b = st.tab[a][c];
      if (b < 0 || st.p[b] != b || st.tab[b][c ^ 1] != a)
        throw consistency_error("coset table is not closed and consistent");
    }
  auto trace = [&](int from, const std::vector<int>& w) {
    int at = from;
    for (int c : w) at = st.tab[at][c];
    return at;
  };
  for (int a : live_ids)
    for (const auto& w : rels)
      if (trace(a, w) != a) throw consistency_error("relator scan fails on the final table");
  for (const auto& w : subs)
    if (trace(0, w) != 0) throw consistency_error("subgroup word leaves the subgroup coset");

  // Standardize: BFS renumbering from coset 0 with columns in order.
  std::vector<int> newid(st.tab.size(), -1);
  std::vector<int> bfs;
  bfs.reserve(live_ids.size());
  newid[0] = 0;
  bfs.push_back(0);
  for (std::size_t at = 0; at < bfs.size(); ++at)
    for (int c = 0; c < 2 * r; ++c) {
      int b = st.tab[bfs[at]][c];
      if (newid[b] < 0) {
        newid[b] = static_cast<int>(bfs.size());
        bfs.push_back(b);
      }
    }
  if (bfs.size() != live_ids.size())
    throw consistency_error("coset graph is disconnected");

  std::vector<std::vector<int>> rows(bfs.size(), std::vector<int>(2 * r, -1));
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int c = 0; c < 2 * r; ++c) rows[i][c] = newid[st.tab[bfs[i]][c]];

  return CosetTable(pres, r, std::move(rows));
}

// Generator i -> permutation of coset ids by right multiplication.
inline std::vector<Permutation> coset_action(const CosetTable& t) {
  std::vector<Permutation> action;
  action.reserve(t.generator_count());
  for (int g = 0; g < t.generator_count(); ++g) {
    std::vector<int> images(t.count());
    for (int c = 0; c < t.count(); ++c) images[c] = t.apply(c, g, 1);
    action.push_back(Permutation::from_images(std::move(images)));
  }
  return action;
}

namespace detail {

inline std::string trim(const std::string& s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset = b;
  return s.substr(b, e - b);
}

}  // namespace detail

// Grammar: gens '|' relators; generator names comma-separated identifiers,
// relators comma-separated words over those names.
inline Presentation parse_presentation(const std::string& text) {
  std::size_t bar = text.find('|');
  if (bar == std::string::npos) throw parse_error("expected '|'", text.size());
  if (text.find('|', bar + 1) != std::string::npos)
    throw parse_error("expected a single '|'", text.find('|', bar + 1));

  Presentation p;
  std::size_t pos = 0;
  while (pos <= bar) {
    std::size_t comma = std::min(text.find(',', pos), bar);
    std::size_t inner = 0;
    std::string name = detail::trim(text.substr(pos, comma - pos), &inner);
    std::size_t at = pos + inner;
    if (name.empty()) throw parse_error("empty generator name", at);
    if (!detail::ident_start(name[0])) throw parse_error("bad generator name", at);
    for (char ch : name)
      if (!detail::ident_char(ch)) throw parse_error("bad generator name", at);
    for (const auto& other : p.generator_names)
      if (other == name) throw parse_error("duplicate generator name", at);
    p.generator_names.push_back(name);
    pos = comma + 1;
  }

  std::string rel_part = text.substr(bar + 1);
  if (!detail::trim(rel_part).empty()) {
    std::size_t rpos = 0;
    while (rpos <= rel_part.size()) {
      std::size_t comma = std::min(rel_part.find(',', rpos), rel_part.size());
      std::string segment = rel_part.substr(rpos, comma - rpos);
      try {
        p.relators.push_back(parse_word(segment, &p.generator_names));
      } catch (const parse_error& e) {
        throw parse_error(e.message(), bar + 1 + rpos + e.position());
      }
      if (comma == rel_part.size()) break;
      rpos = comma + 1;
    }
  }
  return p;
}

inline std::string format_presentation(const Presentation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.generator_names.size(); ++i) {
    if (i) out += ",";
    out += p.generator_names[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += format_word(p.relators[i], p.generator_names);
  }
  return out;
}

}  // namespace monodromy
