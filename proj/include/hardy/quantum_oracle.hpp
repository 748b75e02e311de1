#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <random>
#include <string>

namespace hardy::quantum {

using Complex = std::complex<double>;
using Matrix2 = std::array<std::array<Complex, 2>, 2>;

inline constexpr double kTolerance = 1e-12;

enum class Arm { U = 0, V = 1, C = 2, D = 3 };
enum class Particle { Electron, Positron };

std::string to_string(Arm arm);

/// Two-particle amplitudes over (electron arm, positron arm) pairs, plus the
/// annihilation record γ.
class QuantumState {
 public:
  static constexpr std::size_t kArms = 4;
  static constexpr std::size_t kDimension = kArms * kArms + 1;

  QuantumState() = default;
  /// Both particles at their source ports; the source port feeds the first
  /// splitter on the same input as arm u.
  static QuantumState source();
  static QuantumState basis(Arm electron, Arm positron);
  static QuantumState gamma();

  Complex amplitude(Arm electron, Arm positron) const { return amps_[index(electron, positron)]; }
  Complex& amplitude(Arm electron, Arm positron) { return amps_[index(electron, positron)]; }
  Complex gamma_amplitude() const { return amps_[kGamma]; }
  Complex& gamma_amplitude() { return amps_[kGamma]; }

  const std::array<Complex, kDimension>& amplitudes() const noexcept { return amps_; }
  std::array<Complex, kDimension>& amplitudes() noexcept { return amps_; }

  double norm_squared() const;

 private:
  static constexpr std::size_t kGamma = kArms * kArms;
  static std::size_t index(Arm e, Arm p) {
    return static_cast<std::size_t>(e) * kArms + static_cast<std::size_t>(p);
  }
  std::array<Complex, kDimension> amps_{};
};

/// Single-particle 2x2 splitter. Row/column 0 is the u (resp. c) port, 1 is v (resp. d).
struct BeamSplitterConvention {
  Matrix2 matrix;

  /// u -> (c + d)/√2, v -> (c - d)/√2.
  static BeamSplitterConvention balanced();
  static BeamSplitterConvention identity();

  /// max |(U^† U - I)_{ij}|.
  double unitarity_deviation() const;
  /// Throws NonUnitaryConvention if the deviation exceeds kTolerance.
  void require_unitary() const;
};

/// Haar-ish random 2x2 unitary e^{iα}[[a, -b*], [b, a*]].
BeamSplitterConvention random_unitary(std::mt19937_64& rng);

/// Random normalized state over all 17 basis labels.
QuantumState random_state(std::mt19937_64& rng);

Matrix2 multiply(const Matrix2& a, const Matrix2& b);

/// Stage 1 mixes the particle's {u, v} amplitudes in place. Stage 2 carries
/// {u, v} into the detector arms {c, d} by the matrix and {c, d} back by its
/// adjoint, so the map is unitary on the whole space. γ is never touched.
QuantumState apply_beam_splitter(const QuantumState& state, Particle particle, int stage,
                                 const BeamSplitterConvention& convention);

/// Moves the (u_e, u_p) amplitude onto γ.
QuantumState apply_annihilation(const QuantumState& state);

struct OutcomeDistribution {
  double p_gamma = 0.0;
  /// Indexed by detector (0 = c, 1 = d) for electron, then positron.
  std::array<std::array<double, 2>, 2> p_detectors{};

  double p(Arm electron, Arm positron) const;
  double total() const;
};

/// Source -> splitter 1 (both) -> annihilation -> splitter 2 (both) -> detection.
OutcomeDistribution run_double_mzi(const BeamSplitterConvention& convention = BeamSplitterConvention::balanced());

}  // namespace hardy::quantum
