#pragma once
//
// search.hpp
//
// Exhaustive enumeration of bouquets up to symmetry and the hunt for
// non-interpolating partial-dual Euler-genus polynomials.
//
// Enumeration runs over chord structures (perfect matchings of the 2m word
// positions in first-occurrence labeling) crossed with twist subsets, and
// keeps exactly the words equal to their own canonical form. Every orbit
// surfaces its canonical representative once, so workers never need a shared
// dedup set: results are merged by concatenation and a final sort, which
// makes the output independent of the worker count.
//

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdgenus/polynomial.hpp"
#include "pdgenus/rotation.hpp"

namespace pdgenus {

struct SearchConfig {
  int max_edges = 6;            // enumeration guard
  bool prime_only = true;
  bool nonorientable_only = true;
  int worker_count = 1;
};

// A bouquet whose polynomial has a gap, as found by the search.
struct CounterexampleRecord {
  int edge_count = 0;
  SignedRotation rotation;      // canonical representative
  GenusPolynomial polynomial;
  std::vector<int> gaps;        // missing exponents, nonempty
};

// One canonical representative per orbit of valid m-edge rotations passing
// the config filters, in ascending canonical order.
std::vector<SignedRotation> enumerate_canonical(int m, const SearchConfig& cfg);

struct EdgeClassSummary {
  int edge_count = 0;
  std::int64_t orbit_count = 0;
  std::int64_t counterexample_count = 0;
};

struct SearchResult {
  std::vector<CounterexampleRecord> records;  // sorted by (edges, rotation)
  std::vector<EdgeClassSummary> per_edge;
};

SearchResult run_search(const SearchConfig& cfg);
std::vector<CounterexampleRecord> find_counterexamples(const SearchConfig& cfg);

// JSON-lines form: {"edges": m, "rotation": "...", "polynomial":
// [[g, "count"], ...], "gaps": [g, ...]} with counts as decimal strings.
std::string record_to_json(const CounterexampleRecord& record);

// Catalogue of known non-interpolating bouquets with 5..7 edges.
struct KnownCounterexample {
  const char* rotation;
  const char* polynomial;
};
std::span<const KnownCounterexample> known_counterexamples();

// Checks that every catalogue rotation appears in `records` (by canonical
// form) with exactly the catalogued polynomial. Missing rows are reported,
// not thrown; a complete search needs max_edges >= 7.
struct VerificationRow {
  std::string rotation;
  std::string expected_polynomial;
  bool found = false;
  bool polynomial_matches = false;
  std::string found_polynomial;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  bool all_pass = false;
};

VerificationReport verify_known_counterexamples(
    const std::vector<CounterexampleRecord>& records);

}  // namespace pdgenus
