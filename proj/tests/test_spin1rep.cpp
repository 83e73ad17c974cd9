#include "test_support.hpp"

using namespace vbcorr;
using vbcorr::testing::make_rng;

TEST(Intertwiner, UnitaryWithExactVVT) {
  const CMat3 v = intertwiner();
  EXPECT_LE(max_abs(CMat3(v * v.adjoint() - CMat3::Identity())), 1e-15);
  EXPECT_LE(max_abs(CMat3(v * v.transpose() - intertwiner_vvt())), 1e-15);
}

TEST(RotationRep, RotationsAboutZAreDiagonalPhases) {
  for (const double phi : {0.3, -1.2, kPi / 2.0, kPi}) {
    const CMat3 d = rotation_rep(Rotation3::about_axis(Vec3::UnitZ(), phi));
    const CMat3 expected = Eigen::Vector3cd(std::polar(1.0, -phi), 1.0, std::polar(1.0, phi)).asDiagonal();
    EXPECT_LE(max_abs(CMat3(d - expected)), 1e-15);
  }
  const CMat3 half = rotation_rep(Rotation3::about_axis(Vec3::UnitZ(), kPi / 2.0));
  EXPECT_NEAR(half(0, 0).imag(), -1.0, 1e-15);
  EXPECT_NEAR(half(2, 2).imag(), 1.0, 1e-15);
  const CMat3 full = rotation_rep(Rotation3::about_axis(Vec3::UnitZ(), kPi));
  EXPECT_NEAR(full(0, 0).real(), -1.0, 1e-15);
  EXPECT_NEAR(full(1, 1).real(), 1.0, 1e-15);
  EXPECT_NEAR(full(2, 2).real(), -1.0, 1e-15);
}

TEST(RotationRep, UnitaryHomomorphism) {
  Rng rng = make_rng(10);
  for (int i = 0; i < 500; ++i) {
    const Rotation3 a = random_rotation(rng);
    const Rotation3 b = random_rotation(rng);
    const CMat3 da = rotation_rep(a);
    EXPECT_LE(max_abs(CMat3(rotation_rep(a * b) - da * rotation_rep(b))), 1e-12);
    EXPECT_LE(max_abs(CMat3(da * da.adjoint() - CMat3::Identity())), 1e-12);
    EXPECT_LE(max_abs(CMat3(rotation_rep(a.transpose()) - da.adjoint())), 1e-12);
  }
}

TEST(Amplitudes, IdentitiesForRandomMomenta) {
  Rng rng = make_rng(11);
  double worst_spin = 0.0, worst_hel = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 50.0, 1e-3);
    worst_spin = std::max(worst_spin, amplitude_residuals(amplitude_spin(p)).max());
    worst_hel = std::max(worst_hel, amplitude_residuals(amplitude_helicity(p, random_perpendicular(rng, p.direction()))).max());
  }
  EXPECT_LE(worst_spin, 1e-10);
  EXPECT_LE(worst_hel, 1e-10);
}

TEST(Amplitudes, RestFrameSpinAmplitudeIsVTransposed) {
  const AmplitudeMatrix e = amplitude_spin(FourMomentum::at_rest(1.5));
  EXPECT_LE(max_abs(CVec3(e.entries.row(0).transpose())), 0.0);
  EXPECT_LE(max_abs(CMat3(e.entries.bottomRows<3>() - intertwiner().transpose())), 1e-15);
}

TEST(Amplitudes, HelicityColumnsAlongZ) {
  const FourMomentum p = FourMomentum::on_shell(1.0, Vec3(0, 0, 0.75));
  const CMat43 e = amplitude_helicity(p, Vec3::UnitX()).entries;
  const double s = 1.0 / std::sqrt(2.0);
  CMat43 expected = CMat43::Zero();
  expected(1, 0) = -s;
  expected(2, 0) = Complex(0, s);
  expected(0, 1) = 0.75;
  expected(3, 1) = 1.25;
  expected(1, 2) = s;
  expected(2, 2) = Complex(0, s);
  EXPECT_LE(max_abs(CMat43(e - expected)), 1e-15);
}

TEST(Amplitudes, HelicityFromSpinByDirectionRotation) {
  Rng rng = make_rng(12);
  for (int i = 0; i < 1000; ++i) {
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 50.0, 1e-3);
    const Vec3 a = random_perpendicular(rng, p.direction());
    const CMat3 d = rotation_rep(direction_rotation(p, a).transpose());
    const CMat43 rebuilt = amplitude_spin(p).entries * d.transpose();
    const double scale = std::max(1.0, p.energy() / p.mass());
    EXPECT_LE(max_abs(CMat43(rebuilt - amplitude_helicity(p, a).entries)) / scale, 1e-12);
  }
}

TEST(Weinberg, RotationsAndGeneralTransformations) {
  Rng rng = make_rng(13);
  for (int i = 0; i < 200; ++i) {
    const FourMomentum p = random_momentum(rng);
    EXPECT_LE(check_weinberg(random_rotation(rng).as_lorentz(), p), 1e-10);
  }
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    worst = std::max(worst, check_weinberg(random_lorentz(rng, 4.0), random_momentum(rng)));
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(GaugeCovariance, RotatingGaugeVectorPhasesTransverseColumns) {
  Rng rng = make_rng(14);
  for (int i = 0; i < 500; ++i) {
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0, 1e-3);
    const Vec3 a = random_perpendicular(rng, p.direction());
    const double delta = uniform(rng, -kPi, kPi);
    const Vec3 a2 = Rotation3::about_axis(p.direction(), delta) * a;
    const AmplitudeMatrix e1 = amplitude_helicity(p, a);
    const AmplitudeMatrix e2 = amplitude_helicity(p, a2);
    EXPECT_LE(max_abs(CVec4(e2.column(1) - std::polar(1.0, delta) * e1.column(1))), 1e-12);
    EXPECT_LE(max_abs(CVec4(e2.column(0) - e1.column(0))), 1e-12);
    EXPECT_LE(max_abs(CVec4(e2.column(-1) - std::polar(1.0, -delta) * e1.column(-1))), 1e-12);
  }
}
