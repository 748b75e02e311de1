#include "hardy/errors.hpp"

#include <sstream>
#include <utility>

namespace hardy {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

AtomOperand::AtomOperand(const std::string& operation, const std::string& operand)
    : Error(operation + ": operand '" + operand + "' is an atom, expected a set") {}

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected +
            ", found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

DuplicateElement::DuplicateElement(std::vector<std::string> renderings)
    : Error("duplicate sample points: " + join(renderings)), renderings_(std::move(renderings)) {}

EmptySampleSpace::EmptySampleSpace() : Error("sample space must be non-empty") {}

NotAnEvent::NotAnEvent(std::vector<std::string> missing)
    : Error("not an event: members absent from the sample space: " + join(missing)),
      missing_(std::move(missing)) {}

SampleSpaceTooLarge::SampleSpaceTooLarge(std::size_t size, std::size_t limit)
    : Error("sample space of size " + std::to_string(size) + " exceeds the exhaustive limit " +
            std::to_string(limit)) {}

NonDistinctAtoms::NonDistinctAtoms(std::string message, int first, int second, bool cyclic)
    : Error(std::move(message)), first_(first), second_(second), cyclic_(cyclic) {}

NonUnitaryConvention::NonUnitaryConvention(double deviation)
    : Error([deviation] {
        std::ostringstream os;
        os << "beam splitter convention is not unitary (max |U^dagger U - I| = " << deviation
           << ")";
        return os.str();
      }()) {}

EvalError::EvalError(std::size_t offset, const std::string& message)
    : Error("evaluation error at byte " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

}  // namespace hardy
