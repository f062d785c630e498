// Acceptance suite: end-to-end checks of the published anchor values and the
// library's property contracts, one pass/fail line per criterion. Every
// comparison is exact; criteria with a runtime budget fail when they exceed
// it. Exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pdgenus/families.hpp"
#include "pdgenus/polynomial.hpp"
#include "pdgenus/rotation.hpp"
#include "pdgenus/search.hpp"

using namespace pdgenus;

namespace {

struct Failure {
  std::string message;
};

void expect(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

GenusPolynomial poly_of(std::initializer_list<std::pair<int, int>> terms) {
  GenusPolynomial p;
  for (auto [g, c] : terms) p.add(g, c);
  return p;
}

template <class Fn>
void for_each_valid_word(int m, Fn&& fn) {
  std::vector<int> arrangement;
  for (int e = 1; e <= m; ++e) {
    arrangement.push_back(e);
    arrangement.push_back(e);
  }
  int patterns = 1;
  for (int e = 0; e < m; ++e) patterns *= 3;
  do {
    for (int code = 0; code < patterns; ++code) {
      int c = code;
      std::vector<HalfEdge> word;
      std::vector<int> pattern(static_cast<std::size_t>(m));
      for (int e = 0; e < m; ++e) {
        pattern[static_cast<std::size_t>(e)] = c % 3;
        c /= 3;
      }
      std::vector<int> seen(static_cast<std::size_t>(m), 0);
      for (int label : arrangement) {
        int occurrence = seen[static_cast<std::size_t>(label - 1)]++;
        int p = pattern[static_cast<std::size_t>(label - 1)];
        bool minus = (p == 1 && occurrence == 0) || (p == 2 && occurrence == 1);
        word.push_back({label, minus ? Sign::minus : Sign::plus});
      }
      fn(SignedRotation(std::move(word)));
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

SignedRotation random_rotation(std::mt19937& rng, int m) {
  std::vector<int> slots(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < 2 * m; ++i) slots[static_cast<std::size_t>(i)] = i;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<HalfEdge> word(static_cast<std::size_t>(2 * m));
  for (int e = 1; e <= m; ++e) {
    int a = slots[static_cast<std::size_t>(2 * (e - 1))];
    int b = slots[static_cast<std::size_t>(2 * (e - 1) + 1)];
    bool twist = (rng() & 1u) != 0;
    word[static_cast<std::size_t>(a)] = {e, Sign::plus};
    word[static_cast<std::size_t>(b)] = {e, twist ? Sign::minus : Sign::plus};
  }
  return SignedRotation(std::move(word));
}

const char* const kMinimalRotation = "(-1, -2, 3, 4, 2, 1, 3, 4)";

// ---------------------------------------------------------------------------
// Criteria

void criterion_subset_table() {
  SubsetGenusTable table = subset_table(parse_rotation(kMinimalRotation));
  expect(table.rows.size() == 16, "expected 16 rows");

  struct Expected {
    std::vector<int> subset;
    int eps_a;
    int eps_ac;
    int eps_dual;
  };
  const Expected expected[16] = {
      {{}, 0, 4, 4},        {{1}, 1, 3, 4},
      {{2}, 1, 3, 4},       {{3}, 0, 2, 2},
      {{4}, 0, 2, 2},       {{1, 2}, 2, 2, 4},
      {{1, 3}, 2, 2, 4},    {{1, 4}, 2, 2, 4},
      {{2, 3}, 2, 2, 4},    {{2, 4}, 2, 2, 4},
      {{3, 4}, 2, 2, 4},    {{1, 2, 3}, 2, 0, 2},
      {{1, 2, 4}, 2, 0, 2}, {{1, 3, 4}, 3, 1, 4},
      {{2, 3, 4}, 3, 1, 4}, {{1, 2, 3, 4}, 4, 0, 4},
  };
  for (int i = 0; i < 16; ++i) {
    const SubsetTableRow& row = table.rows[static_cast<std::size_t>(i)];
    std::ostringstream where;
    where << "row " << i;
    expect(row.subset.members() == expected[i].subset,
           where.str() + ": wrong subset");
    expect(row.eps_subset == expected[i].eps_a &&
               row.eps_complement == expected[i].eps_ac &&
               row.eps_dual == expected[i].eps_dual,
           where.str() + ": wrong genus triple");
  }
}

void criterion_minimal_counterexample() {
  GenusPolynomial poly =
      partial_dual_euler_polynomial(parse_rotation(kMinimalRotation));
  expect(poly == poly_of({{2, 4}, {4, 12}}), "polynomial is not 4z^2 + 12z^4");
  expect(!is_interpolating(poly), "polynomial should not interpolate");
  expect(gap_exponents(poly) == std::vector<int>{3}, "gap list is not [3]");
}

void criterion_catalogue_rows() {
  // The ten published counterexamples with 5..7 edges, verbatim.
  const std::pair<const char*, const char*> rows[10] = {
      {"(-1, 2, 3, 4, 5, 1, 4, 5, 2, 3)", "8z^2 + 16z^4 + 8z^5"},
      {"(-1, -2, 3, 1, 4, 2, 5, 4, 3, 5)", "2z + 10z^3 + 8z^4 + 12z^5"},
      {"(-1, 2, 3, 2, 4, 5, 6, 1, 5, 6, 3, 4)", "8z^2 + 32z^4 + 16z^5 + 8z^6"},
      {"(-1, 2, 1, 3, 4, 5, 6, 2, 5, 6, 3, 4)", "16z^3 + 40z^5 + 8z^6"},
      {"(-1, -2, 3, 1, 4, 2, 5, 4, 3, 6, 5, 6)",
       "2z + 14z^3 + 12z^4 + 28z^5 + 8z^6"},
      {"(-1, -2, 3, 4, 5, 6, 2, 1, 5, 6, 3, 4)", "8z^2 + 24z^4 + 32z^6"},
      {"(-1, 2, 3, 2, 4, 3, 5, 6, 7, 1, 6, 7, 4, 5)",
       "8z^2 + 48z^4 + 16z^5 + 40z^6 + 16z^7"},
      {"(-1, 2, 3, 4, 5, 6, 7, 1, 6, 7, 4, 5, 2, 3)",
       "16z^2 + 48z^4 + 48z^6 + 16z^7"},
      {"(-1, 2, 1, 3, 4, 3, 5, 6, 7, 2, 6, 7, 4, 5)",
       "16z^3 + 80z^5 + 16z^6 + 16z^7"},
      {"(-1, 2, 3, 4, 5, 6, 7, 1, 4, 5, 6, 7, 2, 3)",
       "32z^4 + 64z^6 + 32z^7"},
  };
  for (const auto& [rotation, polynomial] : rows) {
    GenusPolynomial got = partial_dual_euler_polynomial(parse_rotation(rotation));
    expect(got == parse_polynomial(polynomial),
           std::string(rotation) + ": got " + format_polynomial(got) +
               ", want " + polynomial);
    expect(!is_interpolating(got),
           std::string(rotation) + " should not interpolate");
  }
}

void criterion_closed_form_b() {
  for (int n = 1; n <= 5; ++n) {
    GenusPolynomial closed = family_b_polynomial(n);
    GenusPolynomial brute =
        partial_dual_euler_polynomial(family_rotation({FamilyKind::B, n}));
    expect(closed == brute,
           "n=" + std::to_string(n) + ": closed form " +
               format_polynomial(closed) + " != enumeration " +
               format_polynomial(brute));
  }
}

void criterion_closed_form_c() {
  for (int n = 1; n <= 5; ++n) {
    GenusPolynomial closed = family_c_polynomial(n);
    GenusPolynomial brute =
        partial_dual_euler_polynomial(family_rotation({FamilyKind::C, n}));
    expect(closed == brute,
           "n=" + std::to_string(n) + ": closed form " +
               format_polynomial(closed) + " != enumeration " +
               format_polynomial(brute));
  }
}

void criterion_case_rules() {
  for (int n = 1; n <= 5; ++n) {
    SignedRotation b = family_rotation({FamilyKind::B, n});
    int mb = 2 * n + 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mb); ++mask) {
      EdgeSubset a = EdgeSubset::from_mask(mask);
      expect(family_b_dual_genus(n, a) == partial_dual_euler_genus(b, a),
             "B n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
    SignedRotation c = family_rotation({FamilyKind::C, n});
    int mc = 2 * n + 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mc); ++mask) {
      EdgeSubset a = EdgeSubset::from_mask(mask);
      expect(family_c_dual_genus(n, a) == partial_dual_euler_genus(c, a),
             "C n=" + std::to_string(n) + " mask=" + std::to_string(mask));
    }
  }
}

void criterion_family_status() {
  expect(is_interpolating(family_b_polynomial(1)),
         "family B at n=1 should interpolate");
  for (int n = 2; n <= 20; ++n) {
    expect(!is_interpolating(family_b_polynomial(n)),
           "family B at n=" + std::to_string(n) + " should not interpolate");
  }
  for (int n = 1; n <= 20; ++n) {
    expect(!is_interpolating(family_c_polynomial(n)),
           "family C at n=" + std::to_string(n) + " should not interpolate");
  }
  expect(canonical_form(family_rotation({FamilyKind::C, 1})) ==
             canonical_form(parse_rotation(kMinimalRotation)),
         "C at n=1 is not the minimal counterexample's orbit");
}

void criterion_minimality_search() {
  SearchConfig below;
  below.max_edges = 3;
  below.worker_count = 1;
  expect(find_counterexamples(below).empty(),
         "counterexample found below four edges");

  SearchConfig four;
  four.max_edges = 4;
  four.worker_count = 1;
  std::vector<CounterexampleRecord> records = find_counterexamples(four);
  SignedRotation wanted = canonical_form(parse_rotation(kMinimalRotation));
  bool found = false;
  for (const CounterexampleRecord& rec : records) {
    if (rec.rotation == wanted) {
      expect(rec.polynomial == poly_of({{2, 4}, {4, 12}}),
             "minimal record has the wrong polynomial");
      found = true;
    }
  }
  expect(found, "no record canonically equivalent to the minimal rotation");
}

void criterion_property_suites() {
  // coefficient mass 2^m: every 0..3-edge rotation, randoms beyond
  for (int m = 0; m <= 3; ++m) {
    for_each_valid_word(m, [&](const SignedRotation& rot) {
      expect(partial_dual_euler_polynomial(rot).total_count() ==
                 BigCount(1) << m,
             "coefficient mass violated at m=" + std::to_string(m));
    });
  }
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 30; ++trial) {
    int m = 4 + static_cast<int>(rng() % 7);
    expect(partial_dual_euler_polynomial(random_rotation(rng, m))
                   .total_count() == BigCount(1) << m,
           "coefficient mass violated on a random rotation");
  }

  // complement symmetry, exhaustive for every rotation with m <= 4
  for (int m = 0; m <= 4; ++m) {
    for_each_valid_word(m, [&](const SignedRotation& rot) {
      std::uint64_t full = (std::uint64_t{1} << m) - 1;
      for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (mask > (full & ~mask)) continue;  // each pair once
        expect(partial_dual_euler_genus(rot, EdgeSubset::from_mask(mask)) ==
                   partial_dual_euler_genus(
                       rot, EdgeSubset::from_mask(full & ~mask)),
               "complement symmetry violated at m=" + std::to_string(m));
      }
    });
  }

  // band moves preserve the boundary count (>= 100 randomized instances)
  auto band_words = [](std::mt19937& gen, int extras, bool handle) {
    int reserved = handle ? 3 : 2;
    std::vector<int> scatter;
    for (int e = 0; e < extras; ++e) {
      scatter.push_back(reserved + 1 + e);
      scatter.push_back(reserved + 1 + e);
    }
    std::shuffle(scatter.begin(), scatter.end(), gen);
    std::size_t cut = scatter.empty()
                          ? 0
                          : std::uniform_int_distribution<std::size_t>(
                                0, scatter.size())(gen);
    std::vector<int> p(scatter.begin(), scatter.begin() + cut);
    std::vector<int> q(scatter.begin() + cut, scatter.end());
    auto assemble = [](std::initializer_list<std::vector<int>> chunks) {
      std::vector<HalfEdge> word;
      for (const auto& chunk : chunks) {
        for (int v : chunk) word.push_back(half_edge(v));
      }
      return SignedRotation(std::move(word));
    };
    if (!handle) {
      return std::pair<SignedRotation, SignedRotation>{
          assemble({{1, 2}, p, {-1}, q, {2}}), assemble({p, {2, 1, 2, -1}, q})};
    }
    return std::pair<SignedRotation, SignedRotation>{
        assemble({{1, 2, 3}, p, {-1}, q, {2, 3}}),
        assemble({{2, 3, 2, 3, 1}, p, {-1}, q})};
  };
  std::mt19937 band_rng(5882353);
  for (int trial = 0; trial < 120; ++trial) {
    int extras = static_cast<int>(band_rng() % 4);
    auto [slide_l, slide_r] = band_words(band_rng, extras, false);
    expect(boundary_components(slide_l) == boundary_components(slide_r),
           "ribbon-slide band move changed the boundary count");
    auto [handle_l, handle_r] = band_words(band_rng, extras, true);
    expect(boundary_components(handle_l) == boundary_components(handle_r),
           "handle-slide band move changed the boundary count");
  }

  // all orientable bouquets with m <= 4 have interpolating orientable
  // polynomials (one canonical representative per orbit suffices)
  SearchConfig open;
  open.max_edges = 4;
  open.prime_only = false;
  open.nonorientable_only = false;
  for (int m = 1; m <= 4; ++m) {
    for (const SignedRotation& rot : enumerate_canonical(m, open)) {
      if (!is_orientable(rot)) continue;
      expect(is_interpolating(partial_dual_orientable_polynomial(rot)),
             "orientable bouquet with a gapped orientable polynomial: " +
                 format_rotation(rot));
    }
  }

  // boundary count is constant on canonical orbits, exhaustive for m <= 3
  for (int m = 0; m <= 3; ++m) {
    std::map<std::vector<HalfEdge>, int> orbit_f;
    for_each_valid_word(m, [&](const SignedRotation& rot) {
      int f = boundary_components(rot);
      auto [it, inserted] = orbit_f.emplace(canonical_form(rot).word(), f);
      expect(inserted || it->second == f,
             "boundary count varies inside a canonical orbit");
    });
  }
}

// ---------------------------------------------------------------------------

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;  // 0 = no budget stated
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "per-subset genus table of the minimal counterexample", 1.0,
       criterion_subset_table},
      {2, "minimal counterexample polynomial 4z^2 + 12z^4 with gap [3]", 1.0,
       criterion_minimal_counterexample},
      {3, "all ten catalogued counterexample polynomials", 1.0,
       criterion_catalogue_rows},
      {4, "family B closed form equals enumeration for n = 1..5", 10.0,
       criterion_closed_form_b},
      {5, "family C closed form equals enumeration for n = 1..5", 30.0,
       criterion_closed_form_c},
      {6, "case rules match the boundary trace on every subset, n <= 5", 0.0,
       criterion_case_rules},
      {7, "family interpolation status up to n = 20 and the C/minimal match",
       1.0, criterion_family_status},
      {8, "minimality search: none below 4 edges, minimal orbit found at 4",
       120.0, criterion_minimality_search},
      {9, "property suites (mass, complement, band moves, orientable, orbits)",
       0.0, criterion_property_suites},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (error.empty() && c.time_limit_seconds > 0 &&
        elapsed > c.time_limit_seconds) {
      std::ostringstream s;
      s << "exceeded the " << c.time_limit_seconds << " s budget";
      error = s.str();
    }

    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (error.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
         << c.name << " (" << elapsed << " s)";
    if (!error.empty()) line << " - " << error;
    std::cout << line.str() << "\n";
    if (!error.empty()) ++failed;
  }

  if (failed != 0) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 9 criteria passed\n";
  return 0;
}
