// Evaluates a word in the two parabolic generators to a matrix and decomposes
// the matrix back. Pass a word like "x0*x1^-2*x0" or run without arguments
// for a built-in example.

#include <iostream>

#include "monodromy/psl2.hpp"
#include "monodromy/word.hpp"

using namespace monodromy;

int main(int argc, char** argv) {
  const std::string text = argc > 1 ? argv[1] : "x0^2*x1^-1*x0*x1^3";
  try {
    const FreeWord w = parse_word(text);
    const std::vector<ProjectiveMatrix> ab{gen_A(), gen_B()};
    const ProjectiveMatrix m = evaluate(w, ab);
    std::cout << "word   " << format_word(w) << "\n";
    std::cout << "matrix " << format_matrix(m) << "\n";
    std::cout << "back   " << format_word(matrix_to_word(m)) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
