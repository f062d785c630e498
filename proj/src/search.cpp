#include "pdgenus/search.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <thread>

#include <json.hpp>

namespace pdgenus {

namespace {

// Beyond this the candidate space (2m-1)!! * 2^m stops being desk-scale.
constexpr int kHardMaxEdges = 8;
constexpr int kMaxPositions = 2 * kHardMaxEdges;

using Matching = std::array<std::int8_t, kMaxPositions>;

void require_config(const SearchConfig& cfg) {
  if (cfg.max_edges < 1) {
    throw ValidationError("search config: max_edges must be >= 1");
  }
  if (cfg.worker_count < 1) {
    throw ValidationError("search config: worker_count must be >= 1");
  }
}

std::vector<Matching> enumerate_matchings(int m) {
  std::vector<Matching> out;
  const int n = 2 * m;
  Matching partner;
  partner.fill(-1);

  auto rec = [&](auto&& self) -> void {
    int i = 0;
    while (i < n && partner[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == n) {
      out.push_back(partner);
      return;
    }
    for (int j = i + 1; j < n; ++j) {
      if (partner[static_cast<std::size_t>(j)] >= 0) continue;
      partner[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(j);
      partner[static_cast<std::size_t>(j)] = static_cast<std::int8_t>(i);
      self(self);
      partner[static_cast<std::size_t>(i)] = -1;
      partner[static_cast<std::size_t>(j)] = -1;
    }
  };
  rec(rec);
  return out;
}

inline bool chords_cross(int a1, int a2, int b1, int b2) {
  // a1 < a2, b1 < b2
  return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

// Primality depends only on the chord structure: connected crossing graph.
bool matching_is_prime(const Matching& partner, int m) {
  if (m <= 1) return true;
  std::array<int, kHardMaxEdges> first{};
  std::array<int, kHardMaxEdges> second{};
  int chords = 0;
  for (int p = 0; p < 2 * m; ++p) {
    if (partner[static_cast<std::size_t>(p)] > p) {
      first[static_cast<std::size_t>(chords)] = p;
      second[static_cast<std::size_t>(chords)] =
          partner[static_cast<std::size_t>(p)];
      ++chords;
    }
  }
  assert(chords == m);

  std::array<char, kHardMaxEdges> reached{};
  std::array<int, kHardMaxEdges> stack{};
  int top = 0;
  stack[top++] = 0;
  reached[0] = 1;
  int count = 1;
  while (top > 0) {
    int u = stack[--top];
    for (int v = 0; v < m; ++v) {
      if (reached[static_cast<std::size_t>(v)]) continue;
      if (chords_cross(first[static_cast<std::size_t>(u)],
                       second[static_cast<std::size_t>(u)],
                       first[static_cast<std::size_t>(v)],
                       second[static_cast<std::size_t>(v)])) {
        reached[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack[top++] = v;
      }
    }
  }
  return count == m;
}

// Word for (matching, twist set) in first-occurrence labeling with '-' on the
// second occurrence of each twisted edge. Twist bit k-1 refers to label k.
void build_word(const Matching& partner, int m, std::uint32_t twist,
                std::vector<HalfEdge>& out) {
  const int n = 2 * m;
  out.resize(static_cast<std::size_t>(n));
  std::array<int, kMaxPositions> label_at{};
  int next_label = 0;
  for (int p = 0; p < n; ++p) {
    int mate = partner[static_cast<std::size_t>(p)];
    if (mate > p) {
      ++next_label;
      label_at[static_cast<std::size_t>(p)] = next_label;
      label_at[static_cast<std::size_t>(mate)] = next_label;
      out[static_cast<std::size_t>(p)] = HalfEdge{next_label, Sign::plus};
    } else {
      int label = label_at[static_cast<std::size_t>(p)];
      bool twisted = (twist >> (label - 1) & 1u) != 0;
      out[static_cast<std::size_t>(p)] =
          HalfEdge{label, twisted ? Sign::minus : Sign::plus};
    }
  }
}

// Runs fn(i) for i in [0, count) on `workers` threads. Work is assigned by
// stride, results must be written by index so the outcome is
// schedule-independent.
template <class Fn>
void parallel_for(std::int64_t count, int workers, Fn&& fn) {
  workers = static_cast<int>(
      std::min<std::int64_t>(std::max(workers, 1), std::max<std::int64_t>(count, 1)));
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace

std::vector<SignedRotation> enumerate_canonical(int m, const SearchConfig& cfg) {
  require_config(cfg);
  if (m < 1 || m > cfg.max_edges) {
    throw GuardError("edge count " + std::to_string(m) +
                     " is outside the configured bound 1.." +
                     std::to_string(cfg.max_edges));
  }
  if (m > kHardMaxEdges) {
    throw GuardError("enumeration is capped at " +
                     std::to_string(kHardMaxEdges) + " edges");
  }

  const std::vector<Matching> matchings = enumerate_matchings(m);
  const std::uint32_t twist_count = std::uint32_t{1} << m;
  const std::uint32_t twist_begin = cfg.nonorientable_only ? 1 : 0;

  const int workers = cfg.worker_count;
  std::vector<std::vector<SignedRotation>> found(
      static_cast<std::size_t>(std::max(workers, 1)));
  std::vector<std::thread> pool;
  const int used = std::min<int>(workers, static_cast<int>(matchings.size()));

  auto scan = [&](int worker, int stride) {
    detail::CanonScratch scratch;
    std::vector<HalfEdge> word;
    auto& sink = found[static_cast<std::size_t>(worker)];
    for (std::size_t idx = static_cast<std::size_t>(worker);
         idx < matchings.size(); idx += static_cast<std::size_t>(stride)) {
      const Matching& partner = matchings[idx];
      if (cfg.prime_only && !matching_is_prime(partner, m)) continue;
      for (std::uint32_t twist = twist_begin; twist < twist_count; ++twist) {
        build_word(partner, m, twist, word);
        if (detail::is_canonical_word(word, scratch)) {
          sink.emplace_back(word);
        }
      }
    }
  };

  if (used <= 1) {
    scan(0, 1);
  } else {
    for (int w = 0; w < used; ++w) {
      pool.emplace_back(scan, w, used);
    }
    for (std::thread& t : pool) t.join();
  }

  std::vector<SignedRotation> all;
  for (auto& part : found) {
    for (auto& rot : part) all.push_back(std::move(rot));
  }
  std::sort(all.begin(), all.end());
  return all;
}

SearchResult run_search(const SearchConfig& cfg) {
  require_config(cfg);
  SearchResult result;
  for (int m = 1; m <= cfg.max_edges; ++m) {
    std::vector<SignedRotation> reps = enumerate_canonical(m, cfg);

    std::vector<CounterexampleRecord> maybe(reps.size());
    std::vector<char> is_counterexample(reps.size(), 0);
    parallel_for(static_cast<std::int64_t>(reps.size()), cfg.worker_count,
                 [&](std::int64_t i) {
                   auto idx = static_cast<std::size_t>(i);
                   GenusPolynomial poly =
                       partial_dual_euler_polynomial(reps[idx]);
                   std::vector<int> gaps = gap_exponents(poly);
                   if (gaps.empty()) return;
                   is_counterexample[idx] = 1;
                   maybe[idx] = CounterexampleRecord{m, reps[idx],
                                                     std::move(poly),
                                                     std::move(gaps)};
                 });

    EdgeClassSummary summary;
    summary.edge_count = m;
    summary.orbit_count = static_cast<std::int64_t>(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (is_counterexample[i]) {
        ++summary.counterexample_count;
        result.records.push_back(std::move(maybe[i]));
      }
    }
    result.per_edge.push_back(summary);
  }
  return result;
}

std::vector<CounterexampleRecord> find_counterexamples(const SearchConfig& cfg) {
  return std::move(run_search(cfg).records);
}

std::string record_to_json(const CounterexampleRecord& record) {
  nlohmann::ordered_json j;
  j["edges"] = record.edge_count;
  j["rotation"] = format_rotation(record.rotation);
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [g, c] : record.polynomial.terms()) {
    terms.push_back({g, c.str()});
  }
  j["polynomial"] = std::move(terms);
  j["gaps"] = record.gaps;
  return j.dump();
}

std::span<const KnownCounterexample> known_counterexamples() {
  static constexpr KnownCounterexample kCatalogue[] = {
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
  return kCatalogue;
}

VerificationReport verify_known_counterexamples(
    const std::vector<CounterexampleRecord>& records) {
  VerificationReport report;
  report.all_pass = true;
  for (const KnownCounterexample& known : known_counterexamples()) {
    VerificationRow row;
    row.rotation = known.rotation;
    row.expected_polynomial = known.polynomial;

    SignedRotation canon = canonical_form(parse_rotation(known.rotation));
    GenusPolynomial expected = parse_polynomial(known.polynomial);
    for (const CounterexampleRecord& record : records) {
      if (record.rotation == canon) {
        row.found = true;
        row.found_polynomial = format_polynomial(record.polynomial);
        row.polynomial_matches = record.polynomial == expected;
        break;
      }
    }
    report.all_pass = report.all_pass && row.found && row.polynomial_matches;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pdgenus
