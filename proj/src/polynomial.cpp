#include "pdgenus/polynomial.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cctype>

namespace pdgenus {

void GenusPolynomial::add(int exponent, BigCount count) {
  if (exponent < 0) {
    throw ValidationError("polynomial exponent must be non-negative");
  }
  if (count <= 0) {
    throw ValidationError("polynomial term count must be positive");
  }
  terms_[exponent] += std::move(count);
}

int GenusPolynomial::min_exponent() const {
  if (terms_.empty()) throw ValidationError("empty polynomial");
  return terms_.begin()->first;
}

int GenusPolynomial::max_exponent() const {
  if (terms_.empty()) throw ValidationError("empty polynomial");
  return terms_.rbegin()->first;
}

BigCount GenusPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigCount(0) : it->second;
}

BigCount GenusPolynomial::total_count() const {
  BigCount total = 0;
  for (const auto& [g, c] : terms_) total += c;
  return total;
}

bool is_interpolating(const GenusPolynomial& poly) {
  if (poly.empty()) throw ValidationError("empty polynomial");
  return static_cast<int>(poly.terms().size()) ==
         poly.max_exponent() - poly.min_exponent() + 1;
}

std::vector<int> gap_exponents(const GenusPolynomial& poly) {
  if (poly.empty()) throw ValidationError("empty polynomial");
  std::vector<int> gaps;
  int expected = poly.min_exponent();
  for (const auto& [g, c] : poly.terms()) {
    for (; expected < g; ++expected) gaps.push_back(expected);
    expected = g + 1;
  }
  return gaps;
}

std::string format_polynomial(const GenusPolynomial& poly) {
  if (poly.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : poly.terms()) {
    if (!first) out += " + ";
    out += c.str();
    if (g == 1) {
      out += "z";
    } else if (g >= 2) {
      out += "z^" + std::to_string(g);
    }
    first = false;
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

GenusPolynomial parse_polynomial(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("cannot parse polynomial: empty input");
  if (body == "0") return GenusPolynomial{};

  GenusPolynomial poly;
  int last_exponent = -1;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t plus = body.find('+', pos);
    std::string_view term =
        trim(plus == std::string_view::npos ? body.substr(pos)
                                            : body.substr(pos, plus - pos));
    if (term.empty()) {
      throw ParseError("cannot parse polynomial: empty term");
    }

    std::size_t z = term.find('z');
    std::string_view coeff = term.substr(0, z == std::string_view::npos
                                                ? term.size()
                                                : z);
    int exponent = 0;
    if (z != std::string_view::npos) {
      std::string_view rest = term.substr(z + 1);
      if (rest.empty()) {
        exponent = 1;
      } else {
        if (rest.front() != '^' || !all_digits(rest.substr(1))) {
          throw ParseError("cannot parse polynomial: bad term '" +
                           std::string(term) + "'");
        }
        std::string_view digits = rest.substr(1);
        if (digits.size() > 6) {
          throw ParseError("cannot parse polynomial: exponent too large");
        }
        exponent = 0;
        for (char c : digits) exponent = exponent * 10 + (c - '0');
      }
    }
    if (!all_digits(coeff)) {
      throw ParseError("cannot parse polynomial: bad coefficient in '" +
                       std::string(term) + "'");
    }
    BigCount count{std::string(coeff)};
    if (count == 0) {
      throw ParseError("cannot parse polynomial: zero coefficient in '" +
                       std::string(term) + "'");
    }
    if (exponent <= last_exponent) {
      throw ParseError(
          "cannot parse polynomial: exponents must be strictly ascending");
    }
    last_exponent = exponent;
    poly.add(exponent, std::move(count));

    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return poly;
}

// ---------------------------------------------------------------------------
// Enumeration over subsets

int partial_dual_euler_genus(const SignedRotation& rot,
                             const EdgeSubset& subset) {
  EdgeSubset comp = complement_subset(rot, subset);
  return euler_genus(induced_sub_rotation(rot, subset)) +
         euler_genus(induced_sub_rotation(rot, comp));
}

namespace {

// Per-label bit masks and the full mask for enumerable rotations.
struct MaskInfo {
  std::vector<std::uint64_t> bit_for_index;
  std::uint64_t full = 0;
  bool contiguous = true;
};

MaskInfo mask_info(const SignedRotation& rot, const char* op) {
  MaskInfo info;
  const auto& labels = rot.labels();
  info.bit_for_index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] > EdgeSubset::kMaxLabel) {
      throw GuardError(std::string(op) + ": rotation label " +
                       std::to_string(labels[i]) + " exceeds the subset bound " +
                       std::to_string(EdgeSubset::kMaxLabel));
    }
    std::uint64_t bit = std::uint64_t{1} << (labels[i] - 1);
    info.bit_for_index.push_back(bit);
    info.full |= bit;
    if (labels[i] != static_cast<int>(i) + 1) info.contiguous = false;
  }
  return info;
}

std::uint64_t label_mask_for(const MaskInfo& info, std::uint64_t index_mask) {
  if (info.contiguous) return index_mask;
  std::uint64_t out = 0;
  for (std::uint64_t rest = index_mask; rest != 0; rest &= rest - 1) {
    out |= info.bit_for_index[static_cast<std::size_t>(
        std::countr_zero(rest))];
  }
  return out;
}

}  // namespace

GenusPolynomial partial_dual_euler_polynomial(const SignedRotation& rot) {
  const int m = rot.edge_count();
  MaskInfo info = mask_info(rot, "partial_dual_euler_polynomial");

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m) + 1, 0);
  detail::TraceScratch scratch;
  const std::uint64_t subset_count = std::uint64_t{1} << m;
  for (std::uint64_t index_mask = 0; index_mask < subset_count; ++index_mask) {
    std::uint64_t a = label_mask_for(info, index_mask);
    int size_a = std::popcount(index_mask);
    int fa = detail::boundary_components_masked(rot, a, scratch);
    int fc = detail::boundary_components_masked(rot, info.full ^ a, scratch);
    int eps = (1 + size_a - fa) + (1 + (m - size_a) - fc);
    ++counts[static_cast<std::size_t>(eps)];
  }

  GenusPolynomial poly;
  for (int g = 0; g <= m; ++g) {
    if (counts[static_cast<std::size_t>(g)] != 0) {
      poly.add(g, BigCount(counts[static_cast<std::size_t>(g)]));
    }
  }
  return poly;
}

GenusPolynomial partial_dual_orientable_polynomial(const SignedRotation& rot) {
  if (!is_orientable(rot)) {
    throw ValidationError(
        "non-orientable input: the orientable genus polynomial is defined "
        "only for orientable rotations");
  }
  GenusPolynomial euler = partial_dual_euler_polynomial(rot);
  GenusPolynomial out;
  for (const auto& [g, c] : euler.terms()) {
    assert(g % 2 == 0);  // every partial dual of an orientable bouquet is orientable
    out.add(g / 2, c);
  }
  return out;
}

SubsetGenusTable subset_table(const SignedRotation& rot, int max_edges) {
  const int m = rot.edge_count();
  if (m > max_edges) {
    throw GuardError("subset table would have 2^" + std::to_string(m) +
                     " rows; the guard allows at most " +
                     std::to_string(max_edges) + " edges");
  }
  MaskInfo info = mask_info(rot, "subset_table");

  std::vector<std::uint64_t> masks;
  masks.reserve(std::size_t{1} << m);
  for (std::uint64_t index_mask = 0; index_mask < (std::uint64_t{1} << m);
       ++index_mask) {
    masks.push_back(label_mask_for(info, index_mask));
  }
  std::sort(masks.begin(), masks.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a);
              int pb = std::popcount(b);
              if (pa != pb) return pa < pb;
              // lexicographic on ascending member lists
              while (a != 0 && b != 0) {
                int la = std::countr_zero(a);
                int lb = std::countr_zero(b);
                if (la != lb) return la < lb;
                a &= a - 1;
                b &= b - 1;
              }
              return false;
            });

  SubsetGenusTable table;
  table.rotation = rot;
  table.rows.reserve(masks.size());
  detail::TraceScratch scratch;
  for (std::uint64_t a : masks) {
    int size_a = std::popcount(a);
    int fa = detail::boundary_components_masked(rot, a, scratch);
    int fc = detail::boundary_components_masked(rot, info.full ^ a, scratch);
    SubsetTableRow row;
    row.subset = EdgeSubset::from_mask(a);
    row.eps_subset = 1 + size_a - fa;
    row.eps_complement = 1 + (m - size_a) - fc;
    row.eps_dual = row.eps_subset + row.eps_complement;
    table.rows.push_back(row);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Table rendering

std::string format_subset(const EdgeSubset& subset, bool ascii) {
  if (subset.empty()) return ascii ? "{}" : "∅";
  std::string out = "{";
  bool first = true;
  for (int label : subset.members()) {
    if (!first) out += ", ";
    out += std::to_string(label);
    first = false;
  }
  out += "}";
  return out;
}

namespace {

// Display width; the empty-set symbol is multi-byte UTF-8 but one column.
std::size_t display_width(const std::string& s) {
  return s == "∅" ? 1 : s.size();
}

}  // namespace

std::string format_table_text(const SubsetGenusTable& table, bool ascii) {
  static const char* const kHeaders[4] = {"A", "eps(A)", "eps(A^c)",
                                          "eps(B^A)"};
  std::vector<std::array<std::string, 4>> cells;
  cells.reserve(table.rows.size());
  for (const SubsetTableRow& row : table.rows) {
    cells.push_back({format_subset(row.subset, ascii),
                     std::to_string(row.eps_subset),
                     std::to_string(row.eps_complement),
                     std::to_string(row.eps_dual)});
  }

  std::array<std::size_t, 4> width{};
  for (int c = 0; c < 4; ++c) width[c] = std::string(kHeaders[c]).size();
  for (const auto& row : cells) {
    for (int c = 0; c < 4; ++c) {
      width[c] = std::max(width[c], display_width(row[c]));
    }
  }

  std::string out;
  auto emit_row = [&](const std::array<std::string, 4>& row) {
    for (int c = 0; c < 4; ++c) {
      out += row[c];
      if (c < 3) {
        out.append(width[c] - display_width(row[c]) + 2, ' ');
      }
    }
    out += '\n';
  };
  emit_row({kHeaders[0], kHeaders[1], kHeaders[2], kHeaders[3]});
  for (const auto& row : cells) emit_row(row);
  return out;
}

std::string format_table_csv(const SubsetGenusTable& table, bool ascii) {
  std::string out = "A,eps(A),eps(A^c),eps(B^A)\n";
  for (const SubsetTableRow& row : table.rows) {
    out += "\"" + format_subset(row.subset, ascii) + "\",";
    out += std::to_string(row.eps_subset) + ",";
    out += std::to_string(row.eps_complement) + ",";
    out += std::to_string(row.eps_dual) + "\n";
  }
  return out;
}

}  // namespace pdgenus
