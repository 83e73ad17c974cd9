#include "test_support.hpp"

using namespace vbcorr;
using vbcorr::testing::make_rng;

TEST(FourMomentum, RejectsUnphysicalMass) {
  EXPECT_THROW(FourMomentum::on_shell(0.0, Vec3(1, 0, 0)), InvalidInput);
  EXPECT_THROW(FourMomentum::on_shell(-1.0, Vec3(1, 0, 0)), InvalidInput);
  EXPECT_THROW(FourMomentum::on_shell(std::nan(""), Vec3(1, 0, 0)), InvalidInput);
  EXPECT_THROW(FourMomentum::on_shell(1.0, Vec3(INFINITY, 0, 0)), InvalidInput);
}

TEST(FourMomentum, EnergyOnShell) {
  Rng rng = make_rng(1);
  for (int i = 0; i < 1000; ++i) {
    const FourMomentum p = random_momentum(rng);
    const double m = p.mass();
    EXPECT_LE(std::abs(p.energy() - std::sqrt(m * m + p.momentum().squaredNorm())) / p.energy(), 1e-12);
    EXPECT_NEAR(minkowski_product(p, p) / (p.energy() * p.energy()), m * m / (p.energy() * p.energy()), 1e-12);
  }
  EXPECT_THROW(FourMomentum::at_rest(1.0).direction(), InvalidInput);
}

TEST(StandardBoost, RestFrameIsIdentity) {
  const Mat4 l = standard_boost(FourMomentum::at_rest(3.0)).matrix();
  EXPECT_LE(max_abs(Mat4(l - Mat4::Identity())), 0.0);
}

TEST(StandardBoost, BlockFormAndMapsRestMomentum) {
  Rng rng = make_rng(2);
  for (int i = 0; i < 1000; ++i) {
    const FourMomentum p = random_momentum(rng);
    const Mat4 l = standard_boost(p).matrix();
    const double m = p.mass();
    const Vec3& q = p.momentum();
    EXPECT_NEAR(l(0, 0), p.energy() / m, 1e-12 * l(0, 0));
    EXPECT_LE(max_abs(Vec3(l.block<1, 3>(0, 1).transpose() - q / m)), 1e-12 * l(0, 0));
    const Mat3 spatial_block = Mat3::Identity() + q * q.transpose() / (m * (m + p.energy()));
    EXPECT_LE(max_abs(Mat3(l.block<3, 3>(1, 1) - spatial_block)), 1e-12 * l(0, 0));
    const Vec4 image = standard_boost(p) * FourMomentum::at_rest(m).vector();
    EXPECT_LE(max_abs(Vec4(image - p.vector())) / p.energy(), 1e-12);
    const double scale = l(0, 0) * l(0, 0);
    EXPECT_LE(max_abs(Mat4(l.transpose() * metric() * l - metric())) / scale, 1e-12);
  }
}

TEST(LorentzMatrix, RejectsNonLorentz) {
  Mat4 m = Mat4::Identity();
  m(1, 2) = 0.3;
  EXPECT_THROW(LorentzMatrix::checked(m), InvalidInput);
  EXPECT_THROW(LorentzMatrix::checked(Mat4(-Mat4::Identity())), InvalidInput);
}

TEST(LorentzMatrix, InverseAndComposition) {
  Rng rng = make_rng(3);
  for (int i = 0; i < 200; ++i) {
    const LorentzMatrix l = random_lorentz(rng, 3.0);
    const Mat4 prod = (l * l.inverse()).matrix();
    EXPECT_LE(max_abs(Mat4(prod - Mat4::Identity())), 1e-10);
  }
}

TEST(Rotation3, RejectsImproper) {
  EXPECT_THROW(Rotation3::checked(Mat3(-Mat3::Identity())), InvalidInput);
  Mat3 sheared = Mat3::Identity();
  sheared(0, 1) = 0.1;
  EXPECT_THROW(Rotation3::checked(sheared), InvalidInput);
}

TEST(DirectionRotation, MapsZOntoMomentum) {
  Rng rng = make_rng(4);
  for (int i = 0; i < 500; ++i) {
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 50.0, 1e-3);
    const Vec3 a = random_perpendicular(rng, p.direction());
    const Rotation3 r = direction_rotation(p, a);
    EXPECT_LE(max_abs(Vec3(r * Vec3::UnitZ() - p.direction())), 1e-12);
    EXPECT_LE(max_abs(Vec3(r * Vec3::UnitX() - a)), 1e-12);
    EXPECT_NEAR(r.matrix().determinant(), 1.0, 1e-12);
  }
}

TEST(DirectionRotation, RejectsBadGaugeVector) {
  const FourMomentum p = FourMomentum::on_shell(1.0, Vec3(0, 0, 2));
  EXPECT_THROW(direction_rotation(p, Vec3(2, 0, 0)), InvalidInput);
  EXPECT_THROW(direction_rotation(p, Vec3(0.6, 0, 0.8)), InvalidInput);
}

TEST(Gauge, PairCommonFallbackForCollinearMomenta) {
  const MomentumPair cm = cm_configuration(1.0);
  const PairGauge g = resolve_pair_gauge(GaugeChoice::pair_common(), cm.k, cm.p);
  EXPECT_LE(max_abs(Vec3(g.a_k - Vec3::UnitX())), 0.0);
  EXPECT_LE(max_abs(Vec3(g.a_p - Vec3::UnitX())), 0.0);
}

TEST(Gauge, PairCommonAlongCrossProduct) {
  const FourMomentum k = FourMomentum::on_shell(1.0, Vec3(0, 0, 1));
  const FourMomentum p = FourMomentum::on_shell(1.0, Vec3(2, 0, 0));
  const PairGauge g = resolve_pair_gauge(GaugeChoice::pair_common(), k, p);
  EXPECT_LE(max_abs(Vec3(g.a_k - Vec3::UnitY())), 1e-15);
  EXPECT_LE(max_abs(Vec3(g.a_p - Vec3::UnitY())), 1e-15);
}

TEST(Gauge, SphericalAndExplicit) {
  EXPECT_LE(max_abs(Vec3(gauge_vector(GaugeChoice::spherical(), Vec3::UnitZ()) - Vec3::UnitX())), 1e-15);
  EXPECT_LE(max_abs(Vec3(gauge_vector(GaugeChoice::spherical(), Vec3::UnitX()) + Vec3::UnitZ())), 1e-15);
  EXPECT_LE(max_abs(Vec3(gauge_vector(GaugeChoice::explicit_vector(Vec3(1, 1, 5)), Vec3::UnitZ()) -
                         Vec3(1, 1, 0).normalized())),
            1e-15);
  EXPECT_THROW(gauge_vector(GaugeChoice::explicit_vector(Vec3(0, 0, 3)), Vec3::UnitZ()), InvalidInput);
}

TEST(WignerRotation, PureRotationIsItsOwnWignerRotation) {
  Rng rng = make_rng(5);
  for (int i = 0; i < 200; ++i) {
    const Rotation3 r = random_rotation(rng);
    const FourMomentum p = random_momentum(rng);
    EXPECT_LE(max_abs(Mat3(wigner_rotation(r.as_lorentz(), p).matrix() - r.matrix())), 1e-12);
  }
}

// Boost along z with rapidity eta acting on p along x with rapidity zeta
// gives a rotation about y with
// cos(angle) = (cosh eta + cosh zeta) / (1 + cosh eta cosh zeta).
TEST(WignerRotation, PerpendicularBoostAngle) {
  for (const double eta : {0.3, 1.0, 2.5}) {
    for (const double zeta : {0.2, 1.5, 3.0}) {
      const LorentzMatrix lam = boost_along(Vec3::UnitZ(), eta);
      const FourMomentum p = FourMomentum::on_shell(1.0, std::sinh(zeta) * Vec3::UnitX());
      const Rotation3 w = wigner_rotation(lam, p);
      const Mat3& r = w.matrix();
      const double expected = (std::cosh(eta) + std::cosh(zeta)) / (1.0 + std::cosh(eta) * std::cosh(zeta));
      EXPECT_NEAR(r(0, 0), expected, 1e-12);
      EXPECT_NEAR(r(2, 2), expected, 1e-12);
      EXPECT_NEAR(r(1, 1), 1.0, 1e-12);
      EXPECT_LE(max_abs(Mat3(r.transpose() * r - Mat3::Identity())), 1e-12);
      const Mat4 lhs = (standard_boost(lam * p) * w.as_lorentz()).matrix();
      const Mat4 rhs = (lam * standard_boost(p)).matrix();
      EXPECT_LE(max_abs(Mat4(lhs - rhs)) / rhs.cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(WignerRotation, ReassemblesRandomTransformations) {
  Rng rng = make_rng(6);
  for (int i = 0; i < 500; ++i) {
    const LorentzMatrix lam = random_lorentz(rng, 4.0);
    const FourMomentum p = random_momentum(rng, 0.1, 10.0, 20.0);
    const Rotation3 w = wigner_rotation(lam, p);
    EXPECT_LE(max_abs(Mat3(w.matrix().transpose() * w.matrix() - Mat3::Identity())), 1e-12);
    EXPECT_NEAR(w.matrix().determinant(), 1.0, 1e-12);
    const Mat4 lhs = (standard_boost(lam * p) * w.as_lorentz()).matrix();
    const Mat4 rhs = (lam * standard_boost(p)).matrix();
    EXPECT_LE(max_abs(Mat4(lhs - rhs)) / rhs.cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Configurations, CentreOfMassAndEqualEnergy) {
  for (const double x : {0.0, 0.01, 1.0, 50.0}) {
    const MomentumPair cm = cm_configuration(x, 2.0);
    EXPECT_NEAR(cm.k.x(), x, 1e-12 * std::max(1.0, x));
    EXPECT_NEAR(minkowski_product(cm.k, cm.p), 4.0 * (2.0 * x + 1.0), 1e-12 * (2.0 * x + 1.0) * 4.0);
  }
  const MomentumPair ee = equal_energy_configuration(2.0, kPi / 3.0);
  EXPECT_NEAR(ee.k.momentum().dot(ee.p.momentum()), 2.0 * 0.5, 1e-12);
  EXPECT_NEAR(ee.p.x(), 2.0, 1e-12);
  EXPECT_THROW(cm_configuration(-0.1), InvalidInput);
}

TEST(Configurations, Coincidence) {
  const FourMomentum k = FourMomentum::on_shell(1.0, Vec3(0.3, 0.2, 1.0));
  EXPECT_TRUE(coincident(k, k));
  EXPECT_TRUE(coincident(k, FourMomentum::on_shell(1.0, Vec3(0.3, 0.2, 1.0 + 1e-14))));
  EXPECT_FALSE(coincident(k, FourMomentum::on_shell(1.0, Vec3(0.3, 0.2, 1.0 + 1e-9))));
  EXPECT_FALSE(coincident(k, cm_partner(k)));
}
