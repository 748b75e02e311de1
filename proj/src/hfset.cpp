#include "hardy/hfset.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <variant>

#include "hardy/errors.hpp"
#include "hardy/notation.hpp"

namespace hardy {

struct HfSet::Node {
  std::variant<Atom, std::vector<HfSet>> value;
  std::size_t rank = 0;
};

namespace {

const std::vector<HfSet> kNoChildren;

void require_set(const char* operation, const HfSet& s) {
  if (s.is_atom()) throw AtomOperand(operation, print_set(s));
}

}  // namespace

Atom::Atom(std::string label) : label_(std::move(label)) {
  if (!valid_label(label_)) throw Error("invalid atom label '" + label_ + "'");
}

bool Atom::valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  const auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  const auto is_alnum = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; };
  if (!is_alpha(label.front())) return false;
  return std::all_of(label.begin() + 1, label.end(), [&](char c) { return is_alnum(c) || c == '_'; });
}

HfSet::HfSet() {
  static const auto empty_node = std::make_shared<const Node>(Node{std::vector<HfSet>{}, 0});
  node_ = empty_node;
}

HfSet::HfSet(Atom atom) : node_(std::make_shared<const Node>(Node{std::move(atom), 0})) {}

HfSet HfSet::from_canonical(std::vector<HfSet> sorted_unique) {
  if (sorted_unique.empty()) return HfSet();
  std::size_t child_rank = 0;
  for (const auto& c : sorted_unique) child_rank = std::max(child_rank, c.rank());
  return HfSet(std::make_shared<const Node>(Node{std::move(sorted_unique), child_rank + 1}));
}

HfSet HfSet::set_of(std::vector<HfSet> children) {
  std::sort(children.begin(), children.end());
  children.erase(std::unique(children.begin(), children.end()), children.end());
  return from_canonical(std::move(children));
}

bool HfSet::is_atom() const noexcept { return std::holds_alternative<Atom>(node_->value); }

const Atom& HfSet::as_atom() const { return std::get<Atom>(node_->value); }

std::span<const HfSet> HfSet::children() const noexcept {
  if (const auto* kids = std::get_if<std::vector<HfSet>>(&node_->value)) return *kids;
  return kNoChildren;
}

std::size_t HfSet::cardinality() const {
  require_set("cardinality", *this);
  return children().size();
}

std::size_t HfSet::rank() const noexcept { return node_->rank; }

std::strong_ordering operator<=>(const HfSet& a, const HfSet& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const bool a_atom = a.is_atom();
  const bool b_atom = b.is_atom();
  if (a_atom && b_atom) return a.as_atom() <=> b.as_atom();
  if (a_atom != b_atom) return a_atom ? std::strong_ordering::less : std::strong_ordering::greater;
  const auto ka = a.children();
  const auto kb = b.children();
  if (ka.size() != kb.size()) return ka.size() <=> kb.size();
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (const auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool equals(const HfSet& a, const HfSet& b) noexcept { return a == b; }

bool member(const HfSet& a, const HfSet& s) noexcept {
  const auto kids = s.children();
  return std::binary_search(kids.begin(), kids.end(), a);
}

HfSet unite(const HfSet& a, const HfSet& b) {
  require_set("unite", a);
  require_set("unite", b);
  std::vector<HfSet> out;
  out.reserve(a.children().size() + b.children().size());
  std::set_union(a.children().begin(), a.children().end(), b.children().begin(),
                 b.children().end(), std::back_inserter(out));
  return HfSet::from_canonical(std::move(out));
}

HfSet intersect(const HfSet& a, const HfSet& b) {
  require_set("intersect", a);
  require_set("intersect", b);
  std::vector<HfSet> out;
  std::set_intersection(a.children().begin(), a.children().end(), b.children().begin(),
                        b.children().end(), std::back_inserter(out));
  return HfSet::from_canonical(std::move(out));
}

HfSet difference(const HfSet& a, const HfSet& b) {
  require_set("difference", a);
  require_set("difference", b);
  std::vector<HfSet> out;
  std::set_difference(a.children().begin(), a.children().end(), b.children().begin(),
                      b.children().end(), std::back_inserter(out));
  return HfSet::from_canonical(std::move(out));
}

bool is_subset(const HfSet& a, const HfSet& b) {
  require_set("is_subset", a);
  require_set("is_subset", b);
  return std::includes(b.children().begin(), b.children().end(), a.children().begin(),
                       a.children().end());
}

std::size_t cardinality(const HfSet& s) { return s.cardinality(); }

std::size_t rank(const HfSet& s) noexcept { return s.rank(); }

HfSet monadic_union(const HfSet& z) {
  require_set("monadic_union", z);
  std::vector<HfSet> gathered;
  for (const auto& y : z.children()) {
    const auto members = y.children();
    gathered.insert(gathered.end(), members.begin(), members.end());
  }
  return HfSet::set_of(std::move(gathered));
}

}  // namespace hardy
