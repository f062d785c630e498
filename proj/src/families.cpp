#include "pdgenus/families.hpp"

#include <stdexcept>
#include <string>

namespace pdgenus {

namespace {

void require_parameter(int n) {
  if (n < 1) {
    throw ValidationError("family parameter n must be >= 1, got " +
                          std::to_string(n));
  }
}

// Re-encodes the interlacement pattern the construction is supposed to have;
// catches generator off-by-ones.
void check_structure(Family family, const SignedRotation& rot) {
  const int n = family.n;
  bool ok = true;
  if (family.kind == FamilyKind::B) {
    for (int k = 2; k <= 2 * n + 1 && ok; ++k) ok = interlaced(rot, 1, k);
    for (int i = 1; i <= n && ok; ++i) ok = interlaced(rot, 2 * i, 2 * i + 1);
    ok = ok && rot.twisted(1);
  } else {
    for (int k = 3; k <= 2 * n + 2 && ok; ++k) {
      ok = interlaced(rot, 1, k) && interlaced(rot, 2, k);
    }
    ok = ok && !interlaced(rot, 1, 2);
    for (int i = 1; i <= n && ok; ++i) {
      ok = interlaced(rot, 2 * i + 1, 2 * i + 2);
    }
    ok = ok && rot.twisted(1) && rot.twisted(2);
  }
  if (!ok) {
    throw std::logic_error("family generator produced a rotation with an "
                           "unexpected interlacement pattern");
  }
}

// First paired edge of pair i (1-based): (2i, 2i+1) for B, (2i+1, 2i+2) for C.
std::pair<int, int> pair_edges(Family family, int i) {
  return family.kind == FamilyKind::B
             ? std::pair<int, int>{2 * i, 2 * i + 1}
             : std::pair<int, int>{2 * i + 1, 2 * i + 2};
}

void require_subset_in_range(Family family, const EdgeSubset& subset) {
  int m = family_edge_count(family);
  std::uint64_t full =
      m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  if ((subset.mask() & ~full) != 0) {
    throw ValidationError("subset out of range: member above edge count " +
                          std::to_string(m));
  }
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount pow2(int e) { return BigCount(1) << e; }

}  // namespace

int family_edge_count(Family family) {
  require_parameter(family.n);
  return family.kind == FamilyKind::B ? 2 * family.n + 1 : 2 * family.n + 2;
}

SignedRotation family_rotation(Family family) {
  require_parameter(family.n);
  const int n = family.n;
  std::vector<HalfEdge> word;

  if (family.kind == FamilyKind::B) {
    word.reserve(static_cast<std::size_t>(2 * (2 * n + 1)));
    word.push_back(half_edge(1));
    for (int e = 2; e <= 2 * n + 1; ++e) word.push_back(half_edge(e));
    word.push_back(half_edge(-1));
    for (int i = n; i >= 1; --i) {
      word.push_back(half_edge(2 * i));
      word.push_back(half_edge(2 * i + 1));
    }
  } else {
    word.reserve(static_cast<std::size_t>(2 * (2 * n + 2)));
    word.push_back(half_edge(1));
    word.push_back(half_edge(2));
    for (int e = 3; e <= 2 * n + 2; ++e) word.push_back(half_edge(e));
    word.push_back(half_edge(-2));
    word.push_back(half_edge(-1));
    for (int i = n; i >= 1; --i) {
      word.push_back(half_edge(2 * i + 1));
      word.push_back(half_edge(2 * i + 2));
    }
  }

  SignedRotation rot(std::move(word));
  check_structure(family, rot);
  return rot;
}

RibbonClassification classify_ribbons(Family family, const EdgeSubset& subset) {
  require_parameter(family.n);
  require_subset_in_range(family, subset);

  RibbonClassification out;
  for (int i = 1; i <= family.n; ++i) {
    auto [a, b] = pair_edges(family, i);
    bool in_a = subset.contains(a);
    bool in_b = subset.contains(b);
    if (in_a && in_b) {
      out.doubles.emplace_back(a, b);
    } else if (in_a) {
      out.singles.push_back(a);
    } else if (in_b) {
      out.singles.push_back(b);
    }
  }
  out.single_count = static_cast<int>(out.singles.size());
  return out;
}

int family_b_dual_genus(int n, const EdgeSubset& subset) {
  int s = classify_ribbons({FamilyKind::B, n}, subset).single_count;
  return s == 0 ? 2 * n + 1 : 2 * n - 2 * s + 2;
}

int family_c_dual_genus(int n, const EdgeSubset& subset) {
  Family family{FamilyKind::C, n};
  int s = classify_ribbons(family, subset).single_count;
  bool split = subset.contains(1) != subset.contains(2);
  if (split) return s == 0 ? 2 * n + 2 : 2 * n - 2 * s + 4;
  return 2 * n - 2 * s + 2;
}

GenusPolynomial family_b_polynomial(int n) {
  require_parameter(n);
  GenusPolynomial poly;
  poly.add(2 * n + 1, pow2(n + 1));
  for (int s = 1; s <= n; ++s) {
    poly.add(2 * n - 2 * s + 2, pow2(n + 1) * binomial(n, s));
  }
  return poly;
}

GenusPolynomial family_c_polynomial(int n) {
  require_parameter(n);
  GenusPolynomial poly;
  poly.add(2 * n + 2, pow2(n + 1) * (n + 2));
  for (int s = 2; s <= n; ++s) {
    poly.add(2 * n - 2 * s + 4,
             pow2(n + 1) * (binomial(n, s) + binomial(n, s - 1)));
  }
  poly.add(2, pow2(n + 1));
  return poly;
}

}  // namespace pdgenus
