#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "test_support.hpp"

using namespace vbcorr;
using vbcorr::testing::make_rng;
using vbcorr::testing::random_coeffs;
using vbcorr::testing::random_pair;

TEST(HelicityObservable, DiagonalSpectrum) {
  const CMat3 h = helicity_observable(Side::k).matrix;
  EXPECT_LE(hermiticity_residual(h), 0.0);
  EXPECT_EQ(h(0, 0), Complex(1.0));
  EXPECT_EQ(h(1, 1), Complex(0.0));
  EXPECT_EQ(h(2, 2), Complex(-1.0));
}

TEST(PolarizationObservable, SpectrumProjectorsAndPeriodicity) {
  Rng rng = make_rng(30);
  for (int i = 0; i < 500; ++i) {
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-2);
    const Vec3 a = random_perpendicular(rng, p.direction());
    const double th = uniform(rng, -kPi, kPi);
    const CMat3 pi = polarization_projector(th, p, a);
    const CMat3 perp = polarization_projector(th + kPi / 2.0, p, a);
    const CMat3 s = polarization_observable(Side::p, th, p, a).matrix;
    EXPECT_LE(hermiticity_residual(pi), 1e-13);
    EXPECT_LE(hermiticity_residual(s), 1e-13);
    EXPECT_LE(max_abs(CMat3(pi * pi - pi)), 1e-12);
    EXPECT_LE(max_abs(CMat3(pi * perp)), 1e-13);
    EXPECT_NEAR(std::abs(s.trace()), 0.0, 1e-12);
    const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<CMat3>(s).eigenvalues();
    EXPECT_NEAR(ev(0), -1.0, 1e-12);
    EXPECT_NEAR(ev(1), 0.0, 1e-12);
    EXPECT_NEAR(ev(2), 1.0, 1e-12);
    EXPECT_LE(max_abs(CMat3(polarization_observable(Side::p, th + kPi, p, a).matrix - s)), 1e-13);
  }
}

TEST(PolarizationObservable, LongitudinalEntriesVanish) {
  const FourMomentum p = FourMomentum::on_shell(2.0, Vec3(1.0, -2.0, 0.5));
  const CMat3 pi = polarization_projector(0.7, p, resolve_pair_gauge(GaugeChoice::spherical(), p, cm_partner(p)).a_k);
  for (int j = 0; j < 3; ++j) {
    EXPECT_LE(std::abs(pi(1, j)), 1e-12);
    EXPECT_LE(std::abs(pi(j, 1)), 1e-12);
  }
}

TEST(Apply, OppositeSidesCommute) {
  Rng rng = make_rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto [k, p] = random_pair(rng);
    const PairGauge g = resolve_pair_gauge(GaugeChoice::spherical(), k, p);
    const CMat3 c = random_coeffs(rng);
    const auto a = polarization_observable(Side::k, uniform(rng, 0.0, kPi), k, g.a_k);
    const auto b = polarization_observable(Side::p, uniform(rng, 0.0, kPi), p, g.a_p);
    EXPECT_LE(max_abs(CMat3(vbcorr::apply(a, vbcorr::apply(b, c)) - vbcorr::apply(b, vbcorr::apply(a, c)))), 1e-13);
  }
}

TEST(GaugeShift, RotatingTheGaugeShiftsTheAngle) {
  Rng rng = make_rng(32);
  for (int i = 0; i < 500; ++i) {
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-2);
    const Vec3 a = random_perpendicular(rng, p.direction());
    const double delta = uniform(rng, -kPi, kPi);
    const double th = uniform(rng, 0.0, kPi);
    const Vec3 a2 = Rotation3::about_axis(p.direction(), delta) * a;
    EXPECT_LE(max_abs(CMat3(polarization_projector(th, p, a2, a) - polarization_projector(th - delta, p, a))), 1e-12);
  }
}

// Second-quantized check: one-particle space spanned by |k,l> and |p,l>
// (6 modes), two-particle state symmetrized in the 36-dimensional product.
// One-body operators supported on the k modes or the p modes reproduce the
// 3x3 coefficient-model expectation exactly.
TEST(Oracle, AgreesWithSymmetrizedTwoSlotModel) {
  using CMat6 = Eigen::Matrix<Complex, 6, 6>;
  using CVec36 = Eigen::Matrix<Complex, 36, 1>;
  using CMat36 = Eigen::Matrix<Complex, 36, 36>;
  Rng rng = make_rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [k, p] = random_pair(rng);
    const PairGauge g = resolve_pair_gauge(GaugeChoice::spherical(), k, p);
    const CMat3 c = random_coeffs(rng);
    const auto a = polarization_observable(Side::k, uniform(rng, 0.0, kPi), k, g.a_k);
    const auto b = polarization_observable(Side::p, uniform(rng, 0.0, kPi), p, g.a_p);

    CVec36 psi = CVec36::Zero();
    for (int l = 0; l < 3; ++l) {
      for (int lp = 0; lp < 3; ++lp) {
        psi(l * 6 + 3 + lp) += c(l, lp);
        psi((3 + lp) * 6 + l) += c(l, lp);
      }
    }
    CMat6 a6 = CMat6::Zero();
    CMat6 b6 = CMat6::Zero();
    a6.topLeftCorner<3, 3>() = a.matrix;
    b6.bottomRightCorner<3, 3>() = b.matrix;
    const CMat6 id6 = CMat6::Identity();
    auto second_quantize = [&](const CMat6& x) -> CMat36 {
      return CMat36(Eigen::kroneckerProduct(x, id6)) + CMat36(Eigen::kroneckerProduct(id6, x));
    };
    const CMat36 op = second_quantize(a6) * second_quantize(b6);
    const Complex value = psi.dot(op * psi) / psi.squaredNorm();
    EXPECT_NEAR(value.imag(), 0.0, 1e-13);
    EXPECT_NEAR(value.real(), oracle_expectation(c, a, b), 1e-12);
  }
}

TEST(Oracle, IdentityAndSideChecks) {
  Rng rng = make_rng(34);
  const CMat3 c = random_coeffs(rng);
  EXPECT_NEAR(oracle_expectation(c, identity_observable(Side::k), identity_observable(Side::p)), 1.0, 1e-14);
  EXPECT_THROW(oracle_expectation(c, identity_observable(Side::p), identity_observable(Side::k)), InvalidInput);
  EXPECT_THROW(oracle_expectation(CMat3::Zero(), identity_observable(Side::k), identity_observable(Side::p)),
               InvalidInput);
  OneSidedObservable skew{Side::k, CMat3::Zero(), "skew"};
  skew.matrix(0, 1) = 1.0;
  skew.matrix(1, 0) = -1.0;
  CMat3 c2 = CMat3::Zero();
  c2(0, 0) = 1.0;
  c2(1, 0) = Complex(0.0, 1.0);
  EXPECT_THROW(oracle_expectation(c2, skew, identity_observable(Side::p)), NumericalError);
}
