#include "cpgate/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace cpgate {

double Propagator::unitarity_error() const {
  return std::abs(std::norm(a) + std::norm(b) - 1.0);
}

Propagator TargetGate::propagator() const { return target_gate_matrix(*this); }

Propagator with_phase(const Propagator& u, double phase) {
  return {u.a, u.b * std::polar(1.0, phase)};
}

Propagator compose(const Propagator& second, const Propagator& first) {
  // [[a2, b2], [-b2*, a2*]] * [[a1, b1], [-b1*, a1*]]
  return {second.a * first.a - second.b * std::conj(first.b),
          second.a * first.b + second.b * std::conj(first.a)};
}

Propagator sequence_propagator(std::span<const double> phases,
                               const Propagator& pulse) {
  if (phases.empty()) {
    throw std::invalid_argument(
        "sequence_propagator: composite sequence has no pulses");
  }
  Propagator total = with_phase(pulse, phases.front());
  for (std::size_t k = 1; k < phases.size(); ++k) {
    total = compose(with_phase(pulse, phases[k]), total);
  }
  return total;
}

Propagator target_gate_matrix(const TargetGate& gate) {
  return {std::polar(1.0, 0.5 * gate.gate_phase), complex{0.0, 0.0}};
}

double infidelity(const Propagator& actual, const TargetGate& target) {
  // Both matrices share the Cayley-Klein structure, so the four entries pair
  // up: |a - t|^2 appears twice (diagonal) and |b|^2 twice (off-diagonal).
  const Propagator t = target_gate_matrix(target);
  const double diag = std::norm(actual.a - t.a);
  const double off = std::norm(actual.b - t.b);
  return std::sqrt(2.0 * (diag + off));
}

double phase_invariant_infidelity(const Propagator& actual,
                                  const TargetGate& target) {
  // min_theta ||e^{i theta} U - V||_F^2 = ||U||^2 + ||V||^2 - 2|tr(V^H U)|
  const Propagator t = target_gate_matrix(target);
  const complex overlap = std::conj(t.a) * actual.a + t.a * std::conj(actual.a);
  const double d2 = 4.0 - 2.0 * std::abs(overlap);
  return std::sqrt(std::max(d2, 0.0));
}

double transition_probability(const Propagator& u) { return std::norm(u.b); }

double reduce_phase(double phase) {
  constexpr double two_pi = 2.0 * kPi;
  double r = std::fmod(phase, two_pi);
  if (r < 0.0) r += two_pi;
  if (two_pi - r < 1e-12) r = 0.0;
  return r;
}

}  // namespace cpgate
