#pragma once

// Reduced words over abstract free generators. The default alphabet is
// x0, x1, ...; parsing and formatting can substitute named generators.
// Evaluation follows the same convention as permutation composition: the
// word x0*x1 evaluates to images[0] * images[1].

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/errors.hpp"

namespace monodromy {

struct Letter {
  int gen;
  int sign;  // +1 or -1

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
};

// Letters are kept freely reduced: no x*x^-1 adjacency. Build through
// reduce / word_multiply / word_invert to preserve that.
struct FreeWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }

  friend bool operator==(const FreeWord& a, const FreeWord& b) {
    return a.letters == b.letters;
  }
  friend bool operator!=(const FreeWord& a, const FreeWord& b) { return !(a == b); }
};

inline FreeWord reduce(const std::vector<Letter>& raw) {
  FreeWord w;
  for (const Letter& l : raw) {
    if (l.gen < 0) throw domain_error("negative generator index");
    if (l.sign != 1 && l.sign != -1) throw domain_error("letter sign must be +1 or -1");
    if (!w.letters.empty() && w.letters.back().gen == l.gen && w.letters.back().sign == -l.sign)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

inline FreeWord word_multiply(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (const Letter& l : b.letters) {
    if (!w.letters.empty() && w.letters.back().gen == l.gen && w.letters.back().sign == -l.sign)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

inline FreeWord word_invert(const FreeWord& a) {
  FreeWord w;
  w.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    w.letters.push_back(Letter{it->gen, -it->sign});
  return w;
}

inline FreeWord word_power(int gen, int exponent) {
  FreeWord w;
  int sign = exponent < 0 ? -1 : 1;
  for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i)
    w.letters.push_back(Letter{gen, sign});
  return w;
}

// Homomorphic image of w under generator i -> images[i]. T needs
// identity_like(sample), inverse(x), and operator*.
template <class T>
T evaluate(const FreeWord& w, const std::vector<T>& images) {
  if (images.empty()) throw domain_error("evaluation needs at least one generator image");
  T acc = identity_like(images.front());
  for (const Letter& l : w.letters) {
    if (l.gen >= static_cast<int>(images.size()))
      throw domain_error("word uses generator " + std::to_string(l.gen) +
                         " but only " + std::to_string(images.size()) + " images given");
    acc = acc * (l.sign > 0 ? images[l.gen] : inverse(images[l.gen]));
  }
  return acc;
}

// Serialization: juxtaposition with '*', integer exponents with '^',
// e.g. x0*x1^-1*x0; runs of one letter compress to powers (x0*x0 -> x0^2).
// The empty word is "1".
inline std::string format_word(const FreeWord& w, const std::vector<std::string>& names) {
  if (w.letters.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += '*';
    const Letter& l = w.letters[i];
    if (l.gen >= static_cast<int>(names.size()))
      throw domain_error("word uses a generator with no name");
    out += names[l.gen];
    long long e = static_cast<long long>(j - i) * l.sign;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

inline std::string format_word(const FreeWord& w) {
  int max_gen = -1;
  for (const Letter& l : w.letters) max_gen = std::max(max_gen, l.gen);
  std::vector<std::string> names;
  for (int g = 0; g <= max_gen; ++g) names.push_back("x" + std::to_string(g));
  return format_word(w, names);
}

namespace detail {

inline void skip_ws(const std::string& text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace detail

// Parses the serialization above. With names, generators must be among them;
// without, the alphabet is x0, x1, ... and the index is taken from the name.
inline FreeWord parse_word(const std::string& text, const std::vector<std::string>* names = nullptr) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  std::vector<Letter> letters;

  if (i < text.size() && text[i] == '1') {
    ++i;
    detail::skip_ws(text, i);
    if (i != text.size()) throw parse_error("unexpected text after identity word", i);
    return FreeWord{};
  }

  while (true) {
    if (i >= text.size() || !detail::ident_start(text[i]))
      throw parse_error("expected generator name", i);
    std::size_t start = i;
    while (i < text.size() && detail::ident_char(text[i])) ++i;
    std::string name = text.substr(start, i - start);

    int gen = -1;
    if (names) {
      for (std::size_t g = 0; g < names->size(); ++g)
        if ((*names)[g] == name) gen = static_cast<int>(g);
      if (gen < 0) throw parse_error("unknown generator '" + name + "'", start);
    } else {
      if (name.size() < 2 || name[0] != 'x')
        throw parse_error("expected generator of the form x<index>", start);
      gen = 0;
      for (std::size_t k = 1; k < name.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(name[k])))
          throw parse_error("expected generator of the form x<index>", start);
        gen = gen * 10 + (name[k] - '0');
        if (gen > 1000000) throw parse_error("generator index too large", start);
      }
    }

    long long exponent = 1;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == '^') {
      ++i;
      detail::skip_ws(text, i);
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("expected integer exponent", i);
      exponent = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exponent = exponent * 10 + (text[i] - '0');
        if (exponent > 1000000) throw parse_error("exponent too large", i);
        ++i;
      }
      if (neg) exponent = -exponent;
    }

    int sign = exponent < 0 ? -1 : 1;
    for (long long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
      letters.push_back(Letter{gen, sign});

    detail::skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] != '*') throw parse_error("expected '*' between factors", i);
    ++i;
    detail::skip_ws(text, i);
  }
  return reduce(letters);
}

}  // namespace monodromy
