#pragma once

// Kernel bases for generator maps F_r -> G: the Cayley graph of G on its
// generators, a BFS spanning tree from the identity, and one free word per
// non-tree edge. The basis freely generates the kernel, of rank
// 1 + |G|(r-1) by the Schreier index formula.

#include <cstddef>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/perm.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

inline std::size_t schreier_rank(std::size_t index, std::size_t r) {
  return 1 + index * (r - 1);
}

struct SchreierData {
  // edges[v][i]: element index of element(v) * generator(i).
  std::vector<std::vector<int>> edges;
  // BFS spanning tree: parent vertex and edge generator, -1 on the root.
  std::vector<int> tree_parent;
  std::vector<int> tree_gen;
  std::vector<FreeWord> kernel_basis;
};

inline SchreierData schreier_kernel_basis(const PermGroup& g) {
  const std::size_t r = g.generators().size();
  const std::size_t count = g.order();

  SchreierData data;
  data.edges.assign(count, std::vector<int>(r, -1));
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t i = 0; i < r; ++i) {
      int w = g.index_of(compose(g.element(v), g.generators()[i]));
      if (w < 0) throw consistency_error("Cayley edge leaves the group");
      data.edges[v][i] = w;
    }

  data.tree_parent.assign(count, -1);
  data.tree_gen.assign(count, -1);
  std::vector<FreeWord> tree_word(count);
  std::vector<char> seen(count, 0);
  std::vector<int> order;
  order.reserve(count);
  seen[0] = 1;
  order.push_back(0);
  for (std::size_t at = 0; at < order.size(); ++at) {
    int v = order[at];
    for (std::size_t i = 0; i < r; ++i) {
      int w = data.edges[v][i];
      if (seen[w]) continue;
      seen[w] = 1;
      data.tree_parent[w] = v;
      data.tree_gen[w] = static_cast<int>(i);
      tree_word[w] = word_multiply(tree_word[v], word_power(static_cast<int>(i), 1));
      order.push_back(w);
    }
  }
  if (order.size() != count) throw consistency_error("Cayley graph is disconnected");

  for (int v : order) {
    for (std::size_t i = 0; i < r; ++i) {
      int w = data.edges[v][i];
      if (data.tree_parent[w] == v && data.tree_gen[w] == static_cast<int>(i)) continue;
      FreeWord basis_word = word_multiply(
          word_multiply(tree_word[v], word_power(static_cast<int>(i), 1)),
          word_invert(tree_word[w]));
      if (!evaluate(basis_word, g.generators()).is_identity())
        throw consistency_error("kernel basis word does not evaluate to identity");
      data.kernel_basis.push_back(std::move(basis_word));
    }
  }
  if (data.kernel_basis.size() != schreier_rank(count, r))
    throw consistency_error("kernel basis size violates the index formula");
  return data;
}

}  // namespace monodromy
