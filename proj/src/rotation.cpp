#include "pdgenus/rotation.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <vector>

namespace pdgenus {

namespace {

std::string label_str(int label) { return std::to_string(label); }

}  // namespace

SignedRotation::SignedRotation(std::vector<HalfEdge> word)
    : word_(std::move(word)) {
  for (const HalfEdge& h : word_) {
    if (h.label < 1) {
      throw ValidationError("invalid rotation: label " + label_str(h.label) +
                            " is not positive");
    }
  }

  std::vector<int> sorted;
  sorted.reserve(word_.size());
  for (const HalfEdge& h : word_) sorted.push_back(h.label);
  std::sort(sorted.begin(), sorted.end());

  labels_.reserve(sorted.size() / 2 + 1);
  int bad_label = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (j - i != 2 && bad_label == 0) bad_label = sorted[i];
    labels_.push_back(sorted[i]);
    i = j;
  }
  if (bad_label != 0) {
    // report the earliest offender in word order
    std::vector<int> offending;
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      if (j - i != 2) offending.push_back(sorted[i]);
      i = j;
    }
    for (const HalfEdge& h : word_) {
      if (std::binary_search(offending.begin(), offending.end(), h.label)) {
        auto count = std::count_if(
            word_.begin(), word_.end(),
            [&](const HalfEdge& x) { return x.label == h.label; });
        throw ValidationError("invalid rotation: label " + label_str(h.label) +
                              " appears " + std::to_string(count) +
                              (count == 1 ? " time" : " times"));
      }
    }
  }

  const int m = edge_count();
  pos_label_index_.resize(word_.size());
  positions_by_index_.assign(static_cast<std::size_t>(m), {-1, -1});
  twisted_.assign(static_cast<std::size_t>(m), 0);

  for (int pos = 0; pos < static_cast<int>(word_.size()); ++pos) {
    const HalfEdge& h = word_[static_cast<std::size_t>(pos)];
    int idx = static_cast<int>(
        std::lower_bound(labels_.begin(), labels_.end(), h.label) -
        labels_.begin());
    pos_label_index_[static_cast<std::size_t>(pos)] = idx;
    auto& pp = positions_by_index_[static_cast<std::size_t>(idx)];
    if (pp.first < 0) {
      pp.first = pos;
    } else {
      pp.second = pos;
    }
  }

  for (int idx = 0; idx < m; ++idx) {
    auto [p, q] = positions_by_index_[static_cast<std::size_t>(idx)];
    Sign s1 = word_[static_cast<std::size_t>(p)].sign;
    Sign s2 = word_[static_cast<std::size_t>(q)].sign;
    if (s1 == Sign::minus && s2 == Sign::minus) {
      throw ValidationError("invalid rotation: label " +
                            label_str(labels_[static_cast<std::size_t>(idx)]) +
                            " carries '-' on both half-edges");
    }
    twisted_[static_cast<std::size_t>(idx)] = (s1 != s2) ? 1 : 0;
  }
}

bool SignedRotation::labels_are_one_to_m() const noexcept {
  for (int i = 0; i < edge_count(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

bool SignedRotation::has_label(int label) const noexcept {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

int SignedRotation::label_index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw ValidationError("label " + label_str(label) +
                          " is not an edge of the rotation");
  }
  return static_cast<int>(it - labels_.begin());
}

bool SignedRotation::twisted(int label) const {
  return twisted_by_index(label_index(label));
}

std::pair<int, int> SignedRotation::positions(int label) const {
  return positions_by_index(label_index(label));
}

EdgeSubset EdgeSubset::from_mask(std::uint64_t mask) {
  if (mask >> kMaxLabel != 0) {
    throw ValidationError("edge subset mask uses labels above " +
                          std::to_string(kMaxLabel));
  }
  EdgeSubset s;
  s.mask_ = mask;
  return s;
}

EdgeSubset EdgeSubset::from_labels(std::span<const int> labels) {
  std::uint64_t mask = 0;
  for (int label : labels) {
    if (label < 1 || label > kMaxLabel) {
      throw ValidationError("edge subset label " + label_str(label) +
                            " out of range 1.." + std::to_string(kMaxLabel));
    }
    mask |= std::uint64_t{1} << (label - 1);
  }
  EdgeSubset s;
  s.mask_ = mask;
  return s;
}

EdgeSubset EdgeSubset::from_labels(std::initializer_list<int> labels) {
  return from_labels(std::span<const int>(labels.begin(), labels.size()));
}

int EdgeSubset::size() const noexcept { return std::popcount(mask_); }

std::vector<int> EdgeSubset::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m) + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text codec

namespace {

class RotationLexer {
 public:
  explicit RotationLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (i_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[i_]))) {
      ++i_;
    }
  }
  bool at_end() const { return i_ >= text_.size(); }
  bool peek_is(char c) const { return i_ < text_.size() && text_[i_] == c; }
  void consume() { ++i_; }

  long long lex_int() {
    bool neg = false;
    if (peek_is('-')) {
      neg = true;
      consume();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      throw ParseError("cannot parse rotation: expected an integer at offset " +
                       std::to_string(i_));
    }
    long long v = 0;
    while (i_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      v = v * 10 + (text_[i_] - '0');
      if (v > 1000000000) {
        throw ParseError("cannot parse rotation: integer too large");
      }
      ++i_;
    }
    return neg ? -v : v;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
};

}  // namespace

SignedRotation parse_rotation(std::string_view text) {
  RotationLexer lex(text);
  lex.skip_ws();
  bool parens = false;
  if (lex.peek_is('(')) {
    parens = true;
    lex.consume();
  }
  std::vector<long long> values;
  lex.skip_ws();
  if (!lex.at_end() && !lex.peek_is(')')) {
    for (;;) {
      lex.skip_ws();
      values.push_back(lex.lex_int());
      lex.skip_ws();
      if (lex.peek_is(',')) {
        lex.consume();
        continue;
      }
      break;
    }
  }
  if (parens) {
    if (!lex.peek_is(')')) {
      throw ParseError("cannot parse rotation: expected ',' or ')'");
    }
    lex.consume();
    lex.skip_ws();
  }
  if (!lex.at_end()) {
    throw ParseError("cannot parse rotation: unexpected trailing text");
  }

  std::vector<HalfEdge> word;
  word.reserve(values.size());
  for (long long v : values) {
    if (v == 0) throw ValidationError("invalid rotation: zero label");
    word.push_back(half_edge(static_cast<int>(v)));
  }
  SignedRotation rot(std::move(word));

  const auto& labels = rot.labels();
  for (int i = 0; i < rot.edge_count(); ++i) {
    if (labels[static_cast<std::size_t>(i)] != i + 1) {
      throw ValidationError(
          "invalid rotation: label set is not {1.." +
          std::to_string(rot.edge_count()) + "}: missing label " +
          std::to_string(i + 1));
    }
  }
  return rot;
}

std::string format_rotation(const SignedRotation& rot) {
  std::string out = "(";
  bool first = true;
  for (const HalfEdge& h : rot.word()) {
    if (!first) out += ", ";
    if (h.sign == Sign::minus) out += "-";
    out += std::to_string(h.label);
    first = false;
  }
  out += ")";
  return out;
}

// ---------------------------------------------------------------------------
// Induced sub-rotations and complements

SignedRotation induced_sub_rotation(const SignedRotation& rot,
                                    const EdgeSubset& keep) {
  std::vector<HalfEdge> word;
  for (const HalfEdge& h : rot.word()) {
    if (keep.contains(h.label)) word.push_back(h);
  }
  return SignedRotation(std::move(word));
}

EdgeSubset complement_subset(const SignedRotation& rot,
                             const EdgeSubset& subset) {
  std::uint64_t full = 0;
  for (int label : rot.labels()) {
    if (label > EdgeSubset::kMaxLabel) {
      throw GuardError("rotation label " + label_str(label) +
                       " exceeds the subset bound " +
                       std::to_string(EdgeSubset::kMaxLabel));
    }
    full |= std::uint64_t{1} << (label - 1);
  }
  if ((subset.mask() & ~full) != 0) {
    int bad = std::countr_zero(subset.mask() & ~full) + 1;
    throw ValidationError("subset out of range: label " + label_str(bad) +
                          " is not an edge of the rotation");
  }
  return EdgeSubset::from_mask(full & ~subset.mask());
}

// ---------------------------------------------------------------------------
// Boundary tracing
//
// Kept attachment slots are numbered 0..k-1 in word order. Slot s has a left
// strand endpoint 2s and a right endpoint 2s+1 with respect to the cyclic
// orientation of the vertex boundary; the free boundary arc joins 2s+1 to
// 2((s+1) mod k). A ribbon joins its two slots straight (untwisted:
// left<->right) or crosswise (twisted: left<->left, right<->right). Boundary
// components are the cycles of the union of the two pairings.

namespace {

int trace_components(const SignedRotation& rot, const std::uint64_t* label_mask,
                     detail::TraceScratch& s) {
  const int n = static_cast<int>(rot.length());
  const int m = rot.edge_count();
  s.slot_of_pos.resize(static_cast<std::size_t>(n));
  if (static_cast<int>(s.first_slot.size()) < m) {
    s.first_slot.resize(static_cast<std::size_t>(m), -1);
  }

  const auto& pli = rot.position_label_index();
  int k = 0;
  for (int pos = 0; pos < n; ++pos) {
    bool kept = true;
    if (label_mask != nullptr) {
      int label = rot.word()[static_cast<std::size_t>(pos)].label;
      kept = (*label_mask >> (label - 1) & 1u) != 0;
    }
    s.slot_of_pos[static_cast<std::size_t>(pos)] = kept ? k++ : -1;
  }
  if (k == 0) return 1;

  s.band.resize(static_cast<std::size_t>(2 * k));
  s.along.resize(static_cast<std::size_t>(2 * k));
  for (int slot = 0; slot < k; ++slot) {
    int r = 2 * slot + 1;
    int l = 2 * ((slot + 1) % k);
    s.along[static_cast<std::size_t>(r)] = l;
    s.along[static_cast<std::size_t>(l)] = r;
  }

  for (int pos = 0; pos < n; ++pos) {
    int slot = s.slot_of_pos[static_cast<std::size_t>(pos)];
    if (slot < 0) continue;
    int li = pli[static_cast<std::size_t>(pos)];
    int& first = s.first_slot[static_cast<std::size_t>(li)];
    if (first < 0) {
      first = slot;
      continue;
    }
    int a = first;
    int b = slot;
    first = -1;  // self-cleaning: scratch stays all -1 between calls
    if (rot.twisted_by_index(li)) {
      s.band[static_cast<std::size_t>(2 * a)] = 2 * b;
      s.band[static_cast<std::size_t>(2 * b)] = 2 * a;
      s.band[static_cast<std::size_t>(2 * a + 1)] = 2 * b + 1;
      s.band[static_cast<std::size_t>(2 * b + 1)] = 2 * a + 1;
    } else {
      s.band[static_cast<std::size_t>(2 * a)] = 2 * b + 1;
      s.band[static_cast<std::size_t>(2 * b + 1)] = 2 * a;
      s.band[static_cast<std::size_t>(2 * a + 1)] = 2 * b;
      s.band[static_cast<std::size_t>(2 * b)] = 2 * a + 1;
    }
  }

  s.seen.assign(static_cast<std::size_t>(2 * k), 0);
  int components = 0;
  for (int start = 0; start < 2 * k; ++start) {
    if (s.seen[static_cast<std::size_t>(start)]) continue;
    ++components;
    int x = start;
    while (!s.seen[static_cast<std::size_t>(x)]) {
      s.seen[static_cast<std::size_t>(x)] = 1;
      int y = s.band[static_cast<std::size_t>(x)];
      s.seen[static_cast<std::size_t>(y)] = 1;
      x = s.along[static_cast<std::size_t>(y)];
    }
  }
  return components;
}

}  // namespace

int boundary_components(const SignedRotation& rot) {
  static thread_local detail::TraceScratch scratch;
  return trace_components(rot, nullptr, scratch);
}

int euler_genus(const SignedRotation& rot) {
  int eps = 1 + rot.edge_count() - boundary_components(rot);
  assert(eps >= 0);
  return eps;
}

namespace detail {

int boundary_components_masked(const SignedRotation& rot,
                               std::uint64_t label_mask,
                               TraceScratch& scratch) {
  assert(rot.labels().empty() || rot.labels().back() <= EdgeSubset::kMaxLabel);
  return trace_components(rot, &label_mask, scratch);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Interlacement, orientability, primality

bool is_orientable(const SignedRotation& rot) {
  for (std::uint8_t t : rot.twisted_flags()) {
    if (t) return false;
  }
  return true;
}

namespace {

// Exactly one endpoint of chord b lies strictly inside chord a's interval.
inline bool positions_interlace(std::pair<int, int> a, std::pair<int, int> b) {
  int inside = (b.first > a.first && b.first < a.second ? 1 : 0) +
               (b.second > a.first && b.second < a.second ? 1 : 0);
  return inside == 1;
}

}  // namespace

bool interlaced(const SignedRotation& rot, int e1, int e2) {
  if (e1 == e2) {
    throw ValidationError("interlaced requires two distinct edges, got " +
                          label_str(e1) + " twice");
  }
  return positions_interlace(rot.positions(e1), rot.positions(e2));
}

bool is_prime(const SignedRotation& rot) {
  const int m = rot.edge_count();
  if (m <= 1) return true;
  std::vector<char> reached(static_cast<std::size_t>(m), 0);
  std::vector<int> stack = {0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    auto pu = rot.positions_by_index(u);
    for (int v = 0; v < m; ++v) {
      if (reached[static_cast<std::size_t>(v)]) continue;
      if (positions_interlace(pu, rot.positions_by_index(v))) {
        reached[static_cast<std::size_t>(v)] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == m;
}

// ---------------------------------------------------------------------------
// Canonical form
//
// The orbit is generated by the 2m cyclic rotations, word reversal, swapping
// which occurrence of a twisted edge carries '-', and relabeling. For a fixed
// rotation/reversal the optimal relabeling is first-occurrence order and the
// optimal sign placement puts '-' on the second occurrence (its positions are
// disjoint per edge, and '+' earlier is lexicographically smaller), so the
// minimum is found by scanning the 4m rotation/reversal candidates in
// normalized shape.

namespace {

struct TransformStream {
  const std::vector<int>& pos_label_index;
  const std::vector<std::uint8_t>& twisted;
  int n;
  int start;
  int dir;  // +1 or -1
  std::vector<int>& relabel;  // per label index; 0 = unseen; caller resets
  int emitted = 0;
  int next_label = 1;

  HalfEdge next() {
    int pos = start + dir * emitted;
    pos %= n;
    if (pos < 0) pos += n;
    ++emitted;
    int li = pos_label_index[static_cast<std::size_t>(pos)];
    int& lab = relabel[static_cast<std::size_t>(li)];
    if (lab == 0) {
      lab = next_label++;
      return {lab, Sign::plus};
    }
    return {lab, twisted[static_cast<std::size_t>(li)] ? Sign::minus
                                                       : Sign::plus};
  }
};

}  // namespace

SignedRotation canonical_form(const SignedRotation& rot) {
  const int n = static_cast<int>(rot.length());
  if (n == 0) return rot;
  const int m = rot.edge_count();

  std::vector<int> relabel(static_cast<std::size_t>(m), 0);
  std::vector<HalfEdge> best(static_cast<std::size_t>(n));
  std::vector<HalfEdge> cand(static_cast<std::size_t>(n));

  auto build = [&](int start, int dir, std::vector<HalfEdge>& out) {
    std::fill(relabel.begin(), relabel.end(), 0);
    TransformStream ts{rot.position_label_index(), rot.twisted_flags(),
                       n,        start,            dir,
                       relabel};
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = ts.next();
  };

  build(0, +1, best);
  for (int start = 0; start < n; ++start) {
    for (int dir : {+1, -1}) {
      if (start == 0 && dir == +1) continue;
      build(start, dir, cand);
      if (cand < best) best.swap(cand);
    }
  }
  return SignedRotation(std::move(best));
}

namespace detail {

bool is_canonical_word(std::span<const HalfEdge> word, CanonScratch& s) {
  const int n = static_cast<int>(word.size());
  if (n == 0) return true;
  const int m = n / 2;

  s.pos_label_index.resize(static_cast<std::size_t>(n));
  s.twisted.assign(static_cast<std::size_t>(m), 0);
  for (int p = 0; p < n; ++p) {
    const HalfEdge& h = word[static_cast<std::size_t>(p)];
    s.pos_label_index[static_cast<std::size_t>(p)] = h.label - 1;
    if (h.sign == Sign::minus) {
      s.twisted[static_cast<std::size_t>(h.label - 1)] = 1;
    }
  }
  if (static_cast<int>(s.relabel.size()) < m) {
    s.relabel.resize(static_cast<std::size_t>(m));
  }

  for (int start = 0; start < n; ++start) {
    for (int dir : {+1, -1}) {
      if (start == 0 && dir == +1) continue;
      std::fill_n(s.relabel.begin(), m, 0);
      TransformStream ts{s.pos_label_index, s.twisted, n, start, dir,
                         s.relabel};
      for (int j = 0; j < n; ++j) {
        HalfEdge t = ts.next();
        const HalfEdge& ref = word[static_cast<std::size_t>(j)];
        if (t < ref) return false;
        if (ref < t) break;
      }
    }
  }
  return true;
}

}  // namespace detail

}  // namespace pdgenus
