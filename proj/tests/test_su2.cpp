#include <gtest/gtest.h>

#include <random>

#include "cpgate/su2.hpp"
#include "oracles.hpp"

using namespace cpgate;

namespace {

Propagator random_propagator(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  const complex a{n(gen), n(gen)};
  const complex b{n(gen), n(gen)};
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return {a / norm, b / norm};
}

oracle::Mat2 as_mat(const Propagator& u) {
  const auto m = u.matrix();
  return {{{m[0], m[1]}, {m[2], m[3]}}};
}

void expect_close(const Propagator& x, const Propagator& y, double tol) {
  EXPECT_NEAR(std::abs(x.a - y.a), 0.0, tol);
  EXPECT_NEAR(std::abs(x.b - y.b), 0.0, tol);
}

const Propagator kPiPulse{complex{0.0, 0.0}, complex{0.0, -1.0}};

}  // namespace

TEST(WithPhase, QuarterTurnOnPiPulse) {
  expect_close(with_phase(kPiPulse, kPi / 2), {0.0, 1.0}, 1e-15);
}

TEST(WithPhase, IdentityUnaffected) {
  for (double phase : {0.3, 1.7, -4.0}) {
    expect_close(with_phase(Propagator::identity(), phase),
                 Propagator::identity(), 0.0);
  }
}

TEST(WithPhase, FullTurn) {
  const Propagator u{std::cos(0.4), complex{0.0, -std::sin(0.4)}};
  expect_close(with_phase(u, 2 * kPi), u, 1e-15);
}

TEST(WithPhase, Additive) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> ang(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const auto u = random_propagator(gen);
    const double x = ang(gen), y = ang(gen);
    expect_close(with_phase(with_phase(u, x), y), with_phase(u, x + y), 1e-14);
  }
}

TEST(Compose, PiPhaseReturnsIdentity) {
  expect_close(compose(with_phase(kPiPulse, kPi), kPiPulse),
               Propagator::identity(), 1e-15);
}

TEST(Compose, TwoPiPulsesMakePhaseGate) {
  const double gate = kPi / 2;
  const Propagator u = compose(with_phase(kPiPulse, kPi + gate / 2), kPiPulse);
  expect_close(u, {std::polar(1.0, kPi / 4), 0.0}, 1e-15);
}

TEST(Compose, MatchesMatrixProduct) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 1000; ++i) {
    const auto x = random_propagator(gen);
    const auto y = random_propagator(gen);
    const auto expected = oracle::mul(as_mat(x), as_mat(y));
    EXPECT_LT(oracle::frobenius(as_mat(compose(x, y)), expected), 1e-14);
  }
}

TEST(Compose, TwoPulseClosedForm) {
  // U(chi) U(0) = [[a^2 - |b|^2 e^{i chi}, ab + a* b e^{i chi}], ...]
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (int i = 0; i < 10000; ++i) {
    const auto u = random_propagator(gen);
    const double chi = ang(gen);
    const complex e = std::polar(1.0, chi);
    const Propagator expected{u.a * u.a - std::norm(u.b) * e,
                              u.a * u.b + std::conj(u.a) * u.b * e};
    const Propagator got = compose(with_phase(u, chi), u);
    ASSERT_LT(std::abs(got.a - expected.a), 1e-13);
    ASSERT_LT(std::abs(got.b - expected.b), 1e-13);
  }
}

TEST(Compose, UnitarityClosure) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  Propagator u = random_propagator(gen);
  const Propagator step = random_propagator(gen);
  for (int i = 0; i < 1000; ++i) {
    u = compose(with_phase(step, ang(gen)), u);
  }
  EXPECT_LT(u.unitarity_error(), 1e-12);
}

TEST(SequencePropagator, SinglePulse) {
  const std::vector<double> phases{0.0};
  expect_close(sequence_propagator(phases, kPiPulse), kPiPulse, 0.0);
}

TEST(SequencePropagator, EmptyIsError) {
  EXPECT_THROW(sequence_propagator({}, kPiPulse), std::invalid_argument);
}

TEST(SequencePropagator, BroadbandThreeInverts) {
  const std::vector<double> phases{0.0, 2 * kPi / 3, 0.0};
  const Propagator u{complex{std::cos(kPi / 2), 0.0}, complex{0.0, -1.0}};
  EXPECT_LT(std::abs(sequence_propagator(phases, u).a), 1e-12);
}

TEST(SequencePropagator, MatchesBruteForceChain) {
  const std::vector<double> phases{0.0, 2 * kPi / 5, 6 * kPi / 5, 2 * kPi / 5,
                                   0.0};
  const double area = kPi * 1.1;
  const Propagator pulse{std::cos(area / 2), complex{0.0, -std::sin(area / 2)}};
  const auto expected = oracle::chain(phases, oracle::resonant(area));
  const auto got = sequence_propagator(phases, pulse);
  EXPECT_LT(oracle::frobenius(as_mat(got), expected), 1e-14);
  // frozen from an independent numpy evaluation
  EXPECT_NEAR(std::norm(got.a), 8.776561766057e-09, 1e-18);
}

TEST(SequencePropagator, EqualsLeftFold) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const auto pulse = random_propagator(gen);
    std::vector<double> phases(1 + trial % 13);
    for (auto& p : phases) p = ang(gen);
    Propagator fold = Propagator::identity();
    for (double p : phases) fold = compose(with_phase(pulse, p), fold);
    expect_close(sequence_propagator(phases, pulse), fold, 1e-12);
  }
}

TEST(TargetGate, Matrices) {
  expect_close(target_gate_matrix({0.0}), Propagator::identity(), 0.0);
  expect_close(target_gate_matrix({kPi}), {complex{0.0, 1.0}, 0.0}, 1e-16);
  expect_close(target_gate_matrix({kPi / 2}),
               {std::polar(1.0, kPi / 4), 0.0}, 0.0);
  EXPECT_EQ(TargetGate{0.7}.propagator().b, complex(0.0, 0.0));
}

TEST(Infidelity, ZeroOnTarget) {
  EXPECT_EQ(infidelity(target_gate_matrix({1.3}), {1.3}), 0.0);
}

TEST(Infidelity, OppositeDiagonal) {
  const Propagator actual{complex{0.0, -1.0}, 0.0};
  EXPECT_NEAR(infidelity(actual, {kPi}), 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(Infidelity, ExactTwoPulseGate) {
  for (double gate : {0.0, 0.3, kPi / 4, kPi / 2, kPi, -2.5}) {
    const auto u = compose(with_phase(kPiPulse, kPi + gate / 2), kPiPulse);
    EXPECT_LT(infidelity(u, {gate}), 1e-12) << gate;
  }
}

TEST(Infidelity, MatchesFourEntrySum) {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 1000; ++i) {
    const auto u = random_propagator(gen);
    const double gate = ang(gen);
    const double f = infidelity(u, {gate});
    EXPECT_NEAR(f, oracle::frobenius(as_mat(u), oracle::phase_gate(gate)),
                1e-14);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 2.0 * std::sqrt(2.0) + 1e-15);
  }
}

TEST(Infidelity, PhaseInvariantIgnoresGlobalPhase) {
  // -diag(e^{i g/2}, e^{-i g/2}) differs from the target only by a global sign
  const double gate = 0.9;
  const Propagator minus{-std::polar(1.0, gate / 2), 0.0};
  EXPECT_NEAR(infidelity(minus, {gate}), 2.0 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(phase_invariant_infidelity(minus, {gate}), 0.0, 1e-7);
}

TEST(TransitionProbability, Basics) {
  EXPECT_EQ(transition_probability(kPiPulse), 1.0);
  EXPECT_EQ(transition_probability(Propagator::identity()), 0.0);
}

TEST(ReducePhase, Range) {
  EXPECT_EQ(reduce_phase(0.0), 0.0);
  EXPECT_NEAR(reduce_phase(-kPi / 2), 3 * kPi / 2, 1e-15);
  EXPECT_EQ(reduce_phase(2 * kPi), 0.0);
  EXPECT_NEAR(reduce_phase(5 * kPi), kPi, 1e-14);
}
