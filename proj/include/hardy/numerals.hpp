#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hardy/hfset.hpp"

namespace hardy {

/// Level-0 object of a numeral family: the empty set, or an atom that takes its place.
class NumeralBase {
 public:
  NumeralBase() = default;
  explicit NumeralBase(Atom atom) : atom_(std::move(atom)) {}

  static NumeralBase empty_set() { return {}; }

  bool is_empty_set() const noexcept { return !atom_.has_value(); }
  const std::optional<Atom>& atom() const noexcept { return atom_; }

  HfSet as_set() const { return atom_ ? HfSet(*atom_) : HfSet::empty(); }

  /// "∅" or the atom label.
  std::string to_string() const;

 private:
  std::optional<Atom> atom_;
};

enum class NumeralSystem { VonNeumann, Zermelo };

struct NumeralSpec {
  NumeralSystem system = NumeralSystem::VonNeumann;
  std::size_t depth = 0;
  NumeralBase base;
};

/// C_0(b) = b, C_{k+1}(b) = {C_0(b), ..., C_k(b)}.
HfSet von_neumann(std::size_t n, const NumeralBase& base = {});

/// D_0(b) = b, D_{k+1}(b) = {D_k(b)}.
HfSet zermelo(std::size_t n, const NumeralBase& base = {});

HfSet numeral(const NumeralSpec& spec);

}  // namespace hardy
