#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

/// Opaque urelement. Has no members; compared by label.
class Atom {
 public:
  /// Throws hardy::Error unless `label` is a letter followed by letters, digits or '_'.
  explicit Atom(std::string label);

  const std::string& label() const noexcept { return label_; }

  static bool valid_label(std::string_view label) noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b) noexcept {
    return a.label_.compare(b.label_) <=> 0;
  }

 private:
  std::string label_;
};

/// Hereditarily finite set over atoms, held in canonical form.
///
/// A value is either an atom or a set-node whose children are deduplicated and
/// sorted by the canonical total order:
///   - atoms precede set-nodes, atoms compare by label;
///   - set-nodes compare by cardinality, then lexicographically by children.
/// Values are immutable and share structure; copying is O(1).
class HfSet {
 public:
  /// The empty set.
  HfSet();
  /// Atom as an HF value (rank 0, memberless).
  explicit HfSet(Atom atom);

  static HfSet empty() { return HfSet(); }
  static HfSet atom(std::string label) { return HfSet(Atom(std::move(label))); }
  /// Brace constructor; deduplicates extensionally and sorts.
  static HfSet set_of(std::vector<HfSet> children);

  bool is_atom() const noexcept;
  bool is_set() const noexcept { return !is_atom(); }
  bool is_empty() const noexcept { return is_set() && children().empty(); }

  /// Precondition: is_atom().
  const Atom& as_atom() const;

  /// Canonical children; empty for atoms and for the empty set.
  std::span<const HfSet> children() const noexcept;

  /// Number of canonical children. Throws AtomOperand for atoms.
  std::size_t cardinality() const;

  /// 0 for atoms and the empty set, otherwise 1 + max child rank.
  std::size_t rank() const noexcept;

  friend std::strong_ordering operator<=>(const HfSet& a, const HfSet& b) noexcept;
  friend bool operator==(const HfSet& a, const HfSet& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node;
  explicit HfSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static HfSet from_canonical(std::vector<HfSet> sorted_unique);

  std::shared_ptr<const Node> node_;

  friend HfSet unite(const HfSet&, const HfSet&);
  friend HfSet intersect(const HfSet&, const HfSet&);
  friend HfSet difference(const HfSet&, const HfSet&);
  friend HfSet monadic_union(const HfSet&);
};

bool equals(const HfSet& a, const HfSet& b) noexcept;

/// True iff `s` is a set-node with a child extensionally equal to `a`.
bool member(const HfSet& a, const HfSet& s) noexcept;

/// Binary set algebra; all throw AtomOperand when an argument is an atom.
HfSet unite(const HfSet& a, const HfSet& b);
HfSet intersect(const HfSet& a, const HfSet& b);
HfSet difference(const HfSet& a, const HfSet& b);
bool is_subset(const HfSet& a, const HfSet& b);

std::size_t cardinality(const HfSet& s);
std::size_t rank(const HfSet& s) noexcept;

/// Union of the members of `z`'s members: { x | exists y in z, x in y }.
/// Atom children contribute nothing. Throws AtomOperand if `z` is an atom.
HfSet monadic_union(const HfSet& z);

}  // namespace hardy
