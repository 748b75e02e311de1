#include "hardy/numerals.hpp"

#include <vector>

namespace hardy {

std::string NumeralBase::to_string() const { return atom_ ? atom_->label() : "\xE2\x88\x85"; }

HfSet von_neumann(std::size_t n, const NumeralBase& base) {
  std::vector<HfSet> previous{base.as_set()};
  previous.reserve(n + 1);
  for (std::size_t k = 1; k <= n; ++k) previous.push_back(HfSet::set_of(previous));
  return previous.back();
}

HfSet zermelo(std::size_t n, const NumeralBase& base) {
  HfSet current = base.as_set();
  for (std::size_t k = 1; k <= n; ++k) current = HfSet::set_of({current});
  return current;
}

HfSet numeral(const NumeralSpec& spec) {
  return spec.system == NumeralSystem::VonNeumann ? von_neumann(spec.depth, spec.base)
                                                  : zermelo(spec.depth, spec.base);
}

}  // namespace hardy
