#pragma once

#include <array>
#include <complex>
#include <span>

namespace cpgate {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// 2x2 special-unitary propagator in Cayley-Klein form
///
///     U = [[ a,   b  ],
///          [-b*,  a* ]]
///
/// Every propagator of a traceless qubit Hamiltonian fits this form, so the
/// pair (a, b) carries the full matrix. |b|^2 is the transition probability.
struct Propagator {
  complex a{1.0, 0.0};
  complex b{0.0, 0.0};

  static Propagator identity() { return {}; }

  /// Row-major {U00, U01, U10, U11}.
  std::array<complex, 4> matrix() const {
    return {a, b, -std::conj(b), std::conj(a)};
  }

  /// | |a|^2 + |b|^2 - 1 |
  double unitarity_error() const;
};

/// The ideal phase gate diag(e^{i gate_phase/2}, e^{-i gate_phase/2}).
struct TargetGate {
  double gate_phase = 0.0;

  Propagator propagator() const;
};

/// Shift the phase of the driving field by `phase`: b -> b e^{i phase}.
Propagator with_phase(const Propagator& u, double phase);

/// Matrix product second * first (first acts earlier in time).
Propagator compose(const Propagator& second, const Propagator& first);

/// U(phases[n-1]) ... U(phases[1]) U(phases[0]) for a shared constituent
/// pulse. phases[0] acts first. Throws std::invalid_argument on an empty
/// phase list.
Propagator sequence_propagator(std::span<const double> phases,
                               const Propagator& pulse);

Propagator target_gate_matrix(const TargetGate& gate);

/// Frobenius distance sqrt(sum_jk |U'_jk - U_jk|^2) between the actual
/// propagator and the target gate. Global phase is not removed; the result
/// lies in [0, 2*sqrt(2)].
double infidelity(const Propagator& actual, const TargetGate& target);

/// Frobenius distance minimised over a global phase of `actual`. Diagnostic
/// only; nothing in the scan pipeline uses it.
double phase_invariant_infidelity(const Propagator& actual,
                                  const TargetGate& target);

double transition_probability(const Propagator& u);

/// Reduce an angle into [0, 2pi). Values within 1e-12 of 2pi snap to 0.
double reduce_phase(double phase);

}  // namespace cpgate
