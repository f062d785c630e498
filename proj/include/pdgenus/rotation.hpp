#pragma once
//
// rotation.hpp
//
// Signed rotations of one-vertex ribbon graphs (bouquets).
//
// A bouquet with m edges is encoded by the cyclic order of its 2m half-edges
// around the vertex disk: a word in which every edge label occurs exactly
// twice. An untwisted edge carries '+' on both half-edges; a twisted edge
// carries '-' on exactly one of them. '+' is omitted in text form, so
// "(-1, -2, 3, 4, 2, 1, 3, 4)" is a 4-edge bouquet with edges 1, 2 twisted.
//
// Boundary components are counted by tracing the 4m boundary strand
// endpoints (two per attachment slot): strands run along the vertex boundary
// between consecutive slots and across each ribbon, straight for untwisted
// ribbons and crosswise for twisted ones.
//

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdgenus/errors.hpp"

namespace pdgenus {

enum class Sign : std::uint8_t { plus = 0, minus = 1 };

// One half-edge symbol. Ordered by (label, sign) with '+' before '-'; this is
// the token order canonical_form minimizes against.
struct HalfEdge {
  int label = 0;
  Sign sign = Sign::plus;

  friend constexpr auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// Convenience for the signed-integer notation: -3 means label 3 with '-'.
constexpr HalfEdge half_edge(int signed_label) {
  return signed_label < 0 ? HalfEdge{-signed_label, Sign::minus}
                          : HalfEdge{signed_label, Sign::plus};
}

// Cyclic word of signed half-edges. Immutable after construction; safe to
// share across threads.
//
// Construction validates that every label is positive and occurs exactly
// twice, and that no label carries '-' on both occurrences. Top-level
// rotations normally use labels {1..m} (parse_rotation enforces that), but
// induced sub-rotations keep their original labels, so the class itself does
// not require contiguity.
class SignedRotation {
 public:
  SignedRotation() = default;  // the edgeless bouquet (a disk)
  explicit SignedRotation(std::vector<HalfEdge> word);

  const std::vector<HalfEdge>& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  int edge_count() const noexcept { return static_cast<int>(labels_.size()); }

  // Distinct labels, ascending.
  const std::vector<int>& labels() const noexcept { return labels_; }
  bool labels_are_one_to_m() const noexcept;

  bool has_label(int label) const noexcept;
  int label_index(int label) const;  // index into labels(); throws if absent
  bool twisted(int label) const;
  std::pair<int, int> positions(int label) const;  // word positions, ascending

  // Index-based views used by the tracer and the search enumerator.
  const std::vector<int>& position_label_index() const noexcept {
    return pos_label_index_;
  }
  std::pair<int, int> positions_by_index(int label_index) const {
    return positions_by_index_[static_cast<std::size_t>(label_index)];
  }
  bool twisted_by_index(int label_index) const {
    return twisted_[static_cast<std::size_t>(label_index)] != 0;
  }
  const std::vector<std::uint8_t>& twisted_flags() const noexcept {
    return twisted_;
  }

  friend bool operator==(const SignedRotation& a, const SignedRotation& b) {
    return a.word_ == b.word_;
  }
  friend std::strong_ordering operator<=>(const SignedRotation& a,
                                          const SignedRotation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<HalfEdge> word_;
  std::vector<int> labels_;                           // sorted distinct
  std::vector<int> pos_label_index_;                  // per word position
  std::vector<std::pair<int, int>> positions_by_index_;
  std::vector<std::uint8_t> twisted_;                 // per label index
};

// Subset of edge labels, stored as a bitmask with label k at bit k-1.
// Labels 1..62 are representable; this is also the subset-enumeration bound.
class EdgeSubset {
 public:
  static constexpr int kMaxLabel = 62;

  EdgeSubset() = default;
  static EdgeSubset from_mask(std::uint64_t mask);
  static EdgeSubset from_labels(std::span<const int> labels);
  static EdgeSubset from_labels(std::initializer_list<int> labels);

  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int label) const noexcept {
    return label >= 1 && label <= kMaxLabel &&
           (mask_ >> (label - 1) & 1u) != 0;
  }
  int size() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }
  std::vector<int> members() const;  // ascending labels

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::uint64_t mask_ = 0;
};

// Text codec for the rotation notation. Grammar:
//   rotation := "(" [ int ("," int)* ] ")"
// with int = optional '-' then a nonzero decimal, whitespace ignored between
// tokens. parse_rotation also accepts the bare unparenthesized list and
// requires the label set to be exactly {1..m}.
SignedRotation parse_rotation(std::string_view text);
std::string format_rotation(const SignedRotation& rot);

// Sub-rotation induced by `keep`: half-edges whose labels are not members are
// deleted; cyclic order and signs are preserved, labels are not renumbered.
// Members absent from the rotation are ignored, so
// induced(induced(r, A), B) == induced(r, A & B) for all A, B.
SignedRotation induced_sub_rotation(const SignedRotation& rot,
                                    const EdgeSubset& keep);

// Complement of `subset` within the labels of `rot`. Every member of `subset`
// must be a label of `rot` (subset out of range otherwise), and all labels of
// `rot` must be representable.
EdgeSubset complement_subset(const SignedRotation& rot,
                             const EdgeSubset& subset);

// Number of boundary components of the ribbon surface. The edgeless bouquet
// has one (the disk's boundary circle).
int boundary_components(const SignedRotation& rot);

// Euler genus: 1 + m - boundary_components for a bouquet (always connected).
int euler_genus(const SignedRotation& rot);

// True iff no edge is twisted.
bool is_orientable(const SignedRotation& rot);

// True iff the occurrences of e1 and e2 alternate e1, e2, e1, e2 around the
// cycle. Requires e1 != e2, both present.
bool interlaced(const SignedRotation& rot, int e1, int e2);

// True iff no pair of cut points splits the cyclic word into two nonempty
// intervals each containing both occurrences of every edge it touches.
// Computed as connectivity of the interlacement graph; rotations with
// m <= 1 are prime.
bool is_prime(const SignedRotation& rot);

// Minimum representative of the rotation's symmetry orbit under cyclic
// rotation, reversal, per-twisted-edge sign-side swaps, and relabeling by
// first occurrence. Token order: (label, sign) with '+' < '-'. Idempotent.
// The result always uses labels {1..m} with '-' only on second occurrences.
SignedRotation canonical_form(const SignedRotation& rot);

namespace detail {

// Reusable buffers for repeated boundary traces.
struct TraceScratch {
  std::vector<int> slot_of_pos;
  std::vector<int> band;
  std::vector<int> along;
  std::vector<int> first_slot;  // per label index; stays -1 between calls
  std::vector<char> seen;
};

// Boundary components of the sub-rotation selected by `label_mask`
// (bit k-1 keeps label k). All labels of `rot` must be <= EdgeSubset::kMaxLabel.
int boundary_components_masked(const SignedRotation& rot,
                               std::uint64_t label_mask, TraceScratch& scratch);

// Reusable buffers for canonical-form checks.
struct CanonScratch {
  std::vector<int> relabel;
  std::vector<int> pos_label_index;
  std::vector<std::uint8_t> twisted;
};

// True iff `word` is the minimum of its symmetry orbit. The word must already
// be in generator shape: labels {1..m} in first-occurrence order, '-' only on
// second occurrences of twisted edges.
bool is_canonical_word(std::span<const HalfEdge> word, CanonScratch& scratch);

}  // namespace detail

}  // namespace pdgenus
