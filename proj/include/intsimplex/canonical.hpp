#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "intsimplex/matrix.hpp"

namespace intsimplex {

/// Word of a labeled integer distance matrix: the strict lower triangle read
/// row by row, (A[1][0], A[2][0], A[2][1], A[3][0], ...). The word of the
/// first k points is a prefix of the word of the first k+1 points.
std::vector<std::int64_t> distance_word(const IntMatrix& a);

/// Lexicographically minimal word over all simultaneous row/column
/// relabelings, with one labeling that attains it: word(A relabeled by
/// `labeling`) == word, where relabeled(i, j) = A(labeling[i], labeling[j]).
struct CanonicalForm {
  std::vector<std::int64_t> word;
  std::vector<std::size_t> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.word == b.word; }
};

/// Branch-and-bound over labelings: positions are filled one at a time and a
/// branch is cut as soon as its row exceeds the incumbent's. Interchangeable
/// vertices (twins with identical distances to every other vertex) are
/// tried once per position. Entries must fit in [0, 63] and n <= 32.
CanonicalForm canonical_form(const IntMatrix& a);

/// True iff the labeling of `a` already attains the canonical word, i.e. no
/// relabeling gives a lexicographically smaller word. Cheaper than comparing
/// against canonical_form(a): stops at the first strictly smaller branch.
bool is_canonical(const IntMatrix& a);

/// Matrix relabeled by `labeling`: out(i, j) = a(labeling[i], labeling[j]).
IntMatrix relabel(const IntMatrix& a, const std::vector<std::size_t>& labeling);

/// Canonical representative matrix (the relabeled input).
IntMatrix canonical_matrix(const IntMatrix& a);

}  // namespace intsimplex
