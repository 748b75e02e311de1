#include "hardy/quantum_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy::quantum {

namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Mixes amplitudes of `particle` from arms (in0, in1) into arms (out0, out1).
// When in and out coincide this is an in-place 2x2 update.
void mix(std::array<Complex, QuantumState::kDimension>& out,
         const std::array<Complex, QuantumState::kDimension>& in, Particle particle,
         const Matrix2& m, Arm in0, Arm in1, Arm out0, Arm out1) {
  constexpr auto kArms = QuantumState::kArms;
  const auto idx = [&](Arm mine, std::size_t other) {
    return particle == Particle::Electron ? static_cast<std::size_t>(mine) * kArms + other
                                          : other * kArms + static_cast<std::size_t>(mine);
  };
  for (std::size_t other = 0; other < kArms; ++other) {
    const Complex a0 = in[idx(in0, other)];
    const Complex a1 = in[idx(in1, other)];
    out[idx(out0, other)] += m[0][0] * a0 + m[0][1] * a1;
    out[idx(out1, other)] += m[1][0] * a0 + m[1][1] * a1;
  }
}

Matrix2 adjoint(const Matrix2& m) {
  return {{{std::conj(m[0][0]), std::conj(m[1][0])}, {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

}  // namespace

std::string to_string(Arm arm) {
  switch (arm) {
    case Arm::U: return "u";
    case Arm::V: return "v";
    case Arm::C: return "c";
    case Arm::D: return "d";
  }
  return "?";
}

QuantumState QuantumState::source() { return basis(Arm::U, Arm::U); }

QuantumState QuantumState::basis(Arm electron, Arm positron) {
  QuantumState s;
  s.amplitude(electron, positron) = 1.0;
  return s;
}

QuantumState QuantumState::gamma() {
  QuantumState s;
  s.gamma_amplitude() = 1.0;
  return s;
}

double QuantumState::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

BeamSplitterConvention BeamSplitterConvention::balanced() {
  const double h = 1.0 / std::numbers::sqrt2;
  // Columns are inputs: column u = (h, h) -> (c + d)/√2, column v = (h, -h) -> (c - d)/√2.
  return {{{{h, h}, {h, -h}}}};
}

BeamSplitterConvention BeamSplitterConvention::identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }

double BeamSplitterConvention::unitarity_deviation() const {
  const Matrix2 product = multiply(adjoint(matrix), matrix);
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(product[i][j] - expected));
    }
  }
  return worst;
}

void BeamSplitterConvention::require_unitary() const {
  const double deviation = unitarity_deviation();
  if (!(deviation <= kTolerance)) throw NonUnitaryConvention(deviation);
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

BeamSplitterConvention random_unitary(std::mt19937_64& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double theta = std::acos(std::sqrt(unit(rng)));
  const Complex a = std::polar(std::cos(theta), two_pi * unit(rng));
  const Complex b = std::polar(std::sin(theta), two_pi * unit(rng));
  const Complex phase = std::polar(1.0, two_pi * unit(rng));
  return {{{{phase * a, -phase * std::conj(b)}, {phase * b, phase * std::conj(a)}}}};
}

QuantumState random_state(std::mt19937_64& rng) {
  QuantumState s;
  for (auto& a : s.amplitudes()) a = Complex(2.0 * unit(rng) - 1.0, 2.0 * unit(rng) - 1.0);
  const double norm = std::sqrt(s.norm_squared());
  for (auto& a : s.amplitudes()) a /= norm;
  return s;
}

QuantumState apply_beam_splitter(const QuantumState& state, Particle particle, int stage,
                                 const BeamSplitterConvention& convention) {
  convention.require_unitary();
  if (stage != 1 && stage != 2) throw Error("beam splitter stage must be 1 or 2");
  const auto& in = state.amplitudes();
  QuantumState result;
  auto& out = result.amplitudes();
  out[QuantumState::kDimension - 1] = in[QuantumState::kDimension - 1];
  if (stage == 1) {
    mix(out, in, particle, convention.matrix, Arm::U, Arm::V, Arm::U, Arm::V);
    mix(out, in, particle, BeamSplitterConvention::identity().matrix, Arm::C, Arm::D, Arm::C, Arm::D);
  } else {
    mix(out, in, particle, convention.matrix, Arm::U, Arm::V, Arm::C, Arm::D);
    mix(out, in, particle, adjoint(convention.matrix), Arm::C, Arm::D, Arm::U, Arm::V);
  }
  return result;
}

QuantumState apply_annihilation(const QuantumState& state) {
  QuantumState result = state;
  Complex& overlap = result.amplitude(Arm::U, Arm::U);
  // Swap rather than add, so the map stays unitary if γ already has amplitude.
  std::swap(overlap, result.gamma_amplitude());
  return result;
}

double OutcomeDistribution::p(Arm electron, Arm positron) const {
  const auto slot = [](Arm a) -> std::size_t {
    if (a == Arm::C) return 0;
    if (a == Arm::D) return 1;
    throw Error("detector outcomes are c or d");
  };
  return p_detectors[slot(electron)][slot(positron)];
}

double OutcomeDistribution::total() const {
  double t = p_gamma;
  for (const auto& row : p_detectors) {
    for (const double v : row) t += v;
  }
  return t;
}

OutcomeDistribution run_double_mzi(const BeamSplitterConvention& convention) {
  convention.require_unitary();
  QuantumState s = QuantumState::source();
  s = apply_beam_splitter(s, Particle::Electron, 1, convention);
  s = apply_beam_splitter(s, Particle::Positron, 1, convention);
  s = apply_annihilation(s);
  s = apply_beam_splitter(s, Particle::Electron, 2, convention);
  s = apply_beam_splitter(s, Particle::Positron, 2, convention);

  OutcomeDistribution d;
  d.p_gamma = std::norm(s.gamma_amplitude());
  const std::array<Arm, 2> detectors{Arm::C, Arm::D};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      d.p_detectors[i][j] = std::norm(s.amplitude(detectors[i], detectors[j]));
    }
  }
  return d;
}

}  // namespace hardy::quantum
