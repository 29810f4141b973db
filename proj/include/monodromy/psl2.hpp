#pragma once

// Exact 2x2 integer matrices up to sign, the generators A, B of the even
// congruence subgroup, the conjugates X_j = B^-j A B^j, and the greedy
// decomposition of subgroup elements into words in A, B.

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/word.hpp"

namespace monodromy {

using bigint = boost::multiprecision::cpp_int;

// Determinant 1, sign-canonical: the first nonzero entry of (a, b, c, d) is
// positive, so projective equality is plain field comparison.
class ProjectiveMatrix {
public:
  ProjectiveMatrix(bigint a, bigint b, bigint c, bigint d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1) throw domain_error("matrix determinant is not 1");
    canonicalize();
  }

  static ProjectiveMatrix identity() { return ProjectiveMatrix(1, 0, 0, 1); }

  const bigint& a() const { return a_; }
  const bigint& b() const { return b_; }
  const bigint& c() const { return c_; }
  const bigint& d() const { return d_; }

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  friend bool operator==(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
    return !(x == y);
  }

private:
  void canonicalize() {
    const bigint* first = &a_;
    if (*first == 0) first = &b_;
    if (*first == 0) first = &c_;
    if (*first == 0) first = &d_;
    if (*first < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
  }

  bigint a_, b_, c_, d_;
};

inline ProjectiveMatrix mat_multiply(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  return ProjectiveMatrix(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                          x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
}

inline ProjectiveMatrix operator*(const ProjectiveMatrix& x, const ProjectiveMatrix& y) {
  return mat_multiply(x, y);
}

inline ProjectiveMatrix mat_inverse(const ProjectiveMatrix& x) {
  return ProjectiveMatrix(x.d(), -x.b(), -x.c(), x.a());
}

inline ProjectiveMatrix inverse(const ProjectiveMatrix& x) { return mat_inverse(x); }

inline bool mat_equal(const ProjectiveMatrix& x, const ProjectiveMatrix& y) { return x == y; }

inline ProjectiveMatrix identity_like(const ProjectiveMatrix&) {
  return ProjectiveMatrix::identity();
}

inline ProjectiveMatrix gen_A() { return ProjectiveMatrix(1, 2, 0, 1); }
inline ProjectiveMatrix gen_B() { return ProjectiveMatrix(1, 0, 2, 1); }

// X_j = B^-j A B^j, the free generating set members used for rank-r subgroups.
inline ProjectiveMatrix conjugate_generator(int j) {
  if (j < 0) throw domain_error("conjugate generator index must be nonnegative");
  ProjectiveMatrix x = gen_A();
  ProjectiveMatrix b = gen_B(), binv = mat_inverse(gen_B());
  for (int k = 0; k < j; ++k) x = mat_multiply(mat_multiply(binv, x), b);
  return x;
}

inline std::vector<ProjectiveMatrix> conjugate_generators(int count) {
  std::vector<ProjectiveMatrix> xs;
  ProjectiveMatrix b = gen_B(), binv = mat_inverse(gen_B());
  ProjectiveMatrix x = gen_A();
  for (int j = 0; j < count; ++j) {
    xs.push_back(x);
    x = mat_multiply(mat_multiply(binv, x), b);
  }
  return xs;
}

// Membership in the even congruence subgroup. Well-defined projectively
// since negation preserves all residues mod 2.
inline bool in_gamma2(const ProjectiveMatrix& x) {
  return x.a() % 2 != 0 && x.d() % 2 != 0 && x.b() % 2 == 0 && x.c() % 2 == 0;
}

namespace detail {

inline bigint magnitude(const ProjectiveMatrix& x) {
  using boost::multiprecision::abs;
  return abs(x.a()) + abs(x.b()) + abs(x.c()) + abs(x.d());
}

}  // namespace detail

// Unique reduced word w over {A, B} (generators x0, x1) with
// evaluate(w, [A, B]) = x. Greedy descent: repeatedly strip a leading letter
// by left-multiplying with whichever of A^-1, A, B^-1, B gives the smallest
// strict decrease of |a|+|b|+|c|+|d|, first in that order on ties.
inline FreeWord matrix_to_word(const ProjectiveMatrix& x) {
  if (!in_gamma2(x)) throw domain_error("matrix is not in the even congruence subgroup");

  struct Move {
    ProjectiveMatrix undo;  // left factor applied to strip the letter
    Letter letter;          // the stripped leading letter
  };
  const Move moves[4] = {
      {mat_inverse(gen_A()), Letter{0, 1}},
      {gen_A(), Letter{0, -1}},
      {mat_inverse(gen_B()), Letter{1, 1}},
      {gen_B(), Letter{1, -1}},
  };

  std::vector<Letter> letters;
  ProjectiveMatrix cur = x;
  while (!cur.is_identity()) {
    bigint best = detail::magnitude(cur);
    int pick = -1;
    ProjectiveMatrix next = cur;
    for (int m = 0; m < 4; ++m) {
      ProjectiveMatrix cand = mat_multiply(moves[m].undo, cur);
      bigint mu = detail::magnitude(cand);
      if (mu < best) {
        best = mu;
        pick = m;
        next = cand;
      }
    }
    if (pick < 0) throw consistency_error("no descending move in matrix decomposition");
    letters.push_back(moves[pick].letter);
    cur = next;
  }

  FreeWord w = reduce(letters);
  if (w.letters != letters)
    throw consistency_error("matrix decomposition produced an unreduced word");
  return w;
}

// Serialization: [[a,b],[c,d]], decimal integers, canonical sign, no
// whitespace on output; the parser tolerates whitespace between tokens.
inline std::string format_matrix(const ProjectiveMatrix& x) {
  return "[[" + x.a().str() + "," + x.b().str() + "],[" + x.c().str() + "," + x.d().str() + "]]";
}

inline ProjectiveMatrix parse_matrix(const std::string& text) {
  std::size_t i = 0;
  auto expect = [&](char c) {
    detail::skip_ws(text, i);
    if (i >= text.size() || text[i] != c)
      throw parse_error(std::string("expected '") + c + "'", i);
    ++i;
  };
  auto integer = [&]() {
    detail::skip_ws(text, i);
    std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("expected integer", i);
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return bigint(text.substr(start, i - start));
  };

  expect('[');
  expect('[');
  bigint a = integer();
  expect(',');
  bigint b = integer();
  expect(']');
  expect(',');
  expect('[');
  bigint c = integer();
  expect(',');
  bigint d = integer();
  expect(']');
  expect(']');
  detail::skip_ws(text, i);
  if (i != text.size()) throw parse_error("unexpected trailing text", i);
  return ProjectiveMatrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

}  // namespace monodromy
