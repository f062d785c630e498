#pragma once
//
// families.hpp
//
// Two one-parameter families of bouquets with non-interpolating partial-dual
// Euler-genus polynomials.
//
//   family B, parameter n >= 1, 2n+1 edges:
//     (1, 2, 3, ..., 2n, 2n+1, -1, 2n, 2n+1, ..., 2, 3)
//     edge 1 is twisted and interlaced with every other edge; the pairs
//     (2i, 2i+1) are interlaced with each other.
//
//   family C, parameter n >= 1, 2n+2 edges:
//     (1, 2, 3, 4, ..., 2n+1, 2n+2, -2, -1, 2n+1, 2n+2, ..., 3, 4)
//     edges 1, 2 are twisted and interlaced with every other edge but not
//     with each other; the pairs (2i+1, 2i+2) are interlaced.
//
// For a subset A, a paired edge in A without its partner is a "single
// ribbon"; a full pair inside A is a "double ribbon". The partial-dual Euler
// genus depends only on the single-ribbon count and on how A splits the
// twisted edges, which yields a closed-form polynomial for every n.
//

#include <utility>
#include <vector>

#include "pdgenus/polynomial.hpp"
#include "pdgenus/rotation.hpp"

namespace pdgenus {

enum class FamilyKind { B, C };

struct Family {
  FamilyKind kind = FamilyKind::B;
  int n = 1;
};

// 2n+1 for kind B, 2n+2 for kind C.
int family_edge_count(Family family);

// The family's signed rotation. Verifies the expected interlacement pattern
// and throws std::logic_error if the generator ever disagrees with it.
SignedRotation family_rotation(Family family);

struct RibbonClassification {
  std::vector<int> singles;                     // paired edges in A alone
  std::vector<std::pair<int, int>> doubles;     // full pairs inside A
  int single_count = 0;
};

// Splits the paired edges of `subset` into singles and doubles. The twisted
// edges (1, and 2 for kind C) are never singles or doubles. The single count
// is invariant under complementation.
RibbonClassification classify_ribbons(Family family, const EdgeSubset& subset);

// Partial-dual Euler genus of family B by the single-ribbon case rule:
// 2n+1 when s(A) = 0, otherwise 2n - 2 s(A) + 2.
int family_b_dual_genus(int n, const EdgeSubset& subset);

// Partial-dual Euler genus of family C: 2n+2 when edges 1, 2 are split
// between A and its complement and s(A) = 0; 2n - 2 s(A) + 4 when split and
// s(A) > 0; 2n - 2 s(A) + 2 when 1, 2 are on the same side.
int family_c_dual_genus(int n, const EdgeSubset& subset);

// Closed-form partial-dual Euler-genus polynomials (exact binomials):
//   B: 2^{n+1} z^{2n+1} + sum_{s=1..n} 2^{n+1} C(n,s) z^{2n-2s+2}
//   C: 2^{n+1}(n+2) z^{2n+2}
//      + sum_{s=2..n} 2^{n+1} (C(n,s) + C(n,s-1)) z^{2n-2s+4}
//      + 2^{n+1} z^2
GenusPolynomial family_b_polynomial(int n);
GenusPolynomial family_c_polynomial(int n);

}  // namespace pdgenus
