#pragma once
//
// polynomial.hpp
//
// Partial-dual Euler-genus polynomials of bouquets.
//
// For an edge subset A the partial dual's Euler genus is
// euler_genus(A) + euler_genus(A^c), computed on the induced sub-rotations;
// the polynomial counts all 2^m subsets by that genus. Coefficients are
// exact big integers.
//

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdgenus/rotation.hpp"

namespace pdgenus {

using BigCount = boost::multiprecision::cpp_int;

// Sparse exponent -> count association. Stored counts are always > 0.
class GenusPolynomial {
 public:
  GenusPolynomial() = default;

  void add(int exponent, BigCount count);

  const std::map<int, BigCount>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  int min_exponent() const;  // throws on empty
  int max_exponent() const;  // throws on empty
  BigCount coefficient(int exponent) const;  // 0 if absent
  BigCount total_count() const;

  friend bool operator==(const GenusPolynomial&,
                         const GenusPolynomial&) = default;

 private:
  std::map<int, BigCount> terms_;
};

// True iff the exponents with nonzero coefficients form a consecutive run of
// integers. Rejects the empty polynomial.
bool is_interpolating(const GenusPolynomial& poly);

// Exponents strictly between min and max with zero coefficient, ascending.
// Empty exactly when the polynomial is interpolating.
std::vector<int> gap_exponents(const GenusPolynomial& poly);

// Text form: terms by ascending exponent, "c" for z^0, "cz" for z^1, "cz^k"
// otherwise, joined by " + ". The empty polynomial prints as "0".
// parse_polynomial accepts exactly this form (exponents strictly ascending,
// coefficients positive).
std::string format_polynomial(const GenusPolynomial& poly);
GenusPolynomial parse_polynomial(std::string_view text);

// Euler genus of the partial dual with respect to `subset`
// (= euler genus of the subset plus euler genus of its complement).
int partial_dual_euler_genus(const SignedRotation& rot,
                             const EdgeSubset& subset);

// Counts all 2^m subsets by partial-dual Euler genus. Subsets are enumerated
// by increasing membership mask with edge 1 at the lowest bit.
GenusPolynomial partial_dual_euler_polynomial(const SignedRotation& rot);

// Counts subsets by orientable genus (Euler genus halved). Rejects
// non-orientable rotations.
GenusPolynomial partial_dual_orientable_polynomial(const SignedRotation& rot);

// One row per subset A: Euler genus of A, of its complement, and of the
// partial dual (their sum). Rows ordered by (|A|, lexicographic members).
struct SubsetTableRow {
  EdgeSubset subset;
  int eps_subset = 0;
  int eps_complement = 0;
  int eps_dual = 0;
};

struct SubsetGenusTable {
  SignedRotation rotation;
  std::vector<SubsetTableRow> rows;
};

inline constexpr int kDefaultTableGuard = 16;

SubsetGenusTable subset_table(const SignedRotation& rot,
                              int max_edges = kDefaultTableGuard);

// "{1, 3}" or the empty-set symbol ("{}" with ascii = true).
std::string format_subset(const EdgeSubset& subset, bool ascii = false);

std::string format_table_text(const SubsetGenusTable& table,
                              bool ascii = false);
std::string format_table_csv(const SubsetGenusTable& table,
                             bool ascii = false);

}  // namespace pdgenus
