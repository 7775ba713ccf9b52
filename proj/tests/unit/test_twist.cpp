#include <cmath>
#include <numbers>
#include <random>

#include "csurg/error.hpp"
#include "csurg/twist/octonion.hpp"
#include "csurg/twist/twist.hpp"
#include "doctest.h"

using namespace csurg;
using namespace csurg::twist;
using std::numbers::pi;

namespace {

Vec basis(int d, int i) {
  Vec e = Vec::Zero(d);
  e(i) = 1.0;
  return e;
}

double distance(const CotangentPoint& a, const CotangentPoint& b) {
  return std::max((a.u - b.u).cwiseAbs().maxCoeff(), (a.v - b.v).cwiseAbs().maxCoeff());
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

const TwistProfile kProfile(0.5);

}  // namespace

TEST_CASE("twist profile conditions") {
  for (double eps : {0.1, 0.5, 0.9}) {
    const auto f = make_profile(eps);
    CHECK(f(0.0) == pi);
    CHECK(f(eps) == 2 * pi);
    CHECK(f(1.0) == 2 * pi);
    double prev = f(0.0);
    for (int i = 1; i <= 1000; ++i) {
      const double x = 1.2 * i / 1000.0;
      CHECK(f(x) >= prev);
      prev = f(x);
    }
    for (double x : {0.0, eps / 8, eps / 5}) CHECK(f.derivative(x) == 0.0);
    CHECK(f.derivative(eps) == 0.0);
  }
  CHECK(code_of([] { make_profile(0.0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { make_profile(1.0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("twist on the zero section and outside the support") {
  for (int n : {1, 2, 3, 6}) {
    for (const auto& p : random_cotangent_points(n, 50, 10 + n, 0.0, 0.0)) {
      const auto q = apply_twist(p, kProfile);
      CHECK(q.u == -p.u);
      CHECK(q.v.isZero(0.0));
    }
    for (const auto& p : random_cotangent_points(n, 50, 20 + n, 0.5, 3.0))
      CHECK(distance(apply_twist(p, kProfile), p) <= 1e-12);
  }
}

TEST_CASE("twist for n = 1 is a planar rotation") {
  const double eps = kProfile.epsilon();
  const auto p = make_cotangent_point(Eigen::Vector2d(1.0, 0.0), Eigen::Vector2d(0.0, eps / 2));
  const double f = kProfile(eps / 2);
  // Rotate the frame (u, v̂) = (e1, e2) by f: u -> (cos f, sin f), v̂ -> (-sin f, cos f).
  const Eigen::Vector2d u_rot(std::cos(f), std::sin(f));
  const Eigen::Vector2d vh_rot(-std::sin(f), std::cos(f));
  const auto q = apply_twist(p, kProfile);
  CHECK((q.u - u_rot).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((q.v - (eps / 2) * vh_rot).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("twist preserves the cotangent constraints and the fiber norm") {
  for (int n : {1, 2, 3, 6}) {
    for (const auto& p : random_cotangent_points(n, 200, 30 + n, 0.0, 0.6)) {
      const auto q = apply_twist(p, kProfile);
      CHECK(constraint_residual(q) <= 1e-9);
      CHECK(q.v.norm() == doctest::Approx(p.v.norm()).epsilon(1e-14));
    }
  }
}

TEST_CASE("plane generator") {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 3, 6}) {
    for (const auto& p : random_cotangent_points(n, 20, 40 + n, 0.05, 0.6)) {
      const auto a = plane_generator(p.u, p.v);
      CHECK(a.kind == GeneratorKind::v_u);
      CHECK((a.matrix + a.matrix.transpose()).isZero(0.0));
      const Vec vh = p.v.normalized();
      CHECK((a.matrix * p.u - vh).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((a.matrix * vh + p.u).cwiseAbs().maxCoeff() < 1e-14);
      const Mat a3 = a.matrix * a.matrix * a.matrix;
      CHECK((a3 + a.matrix).cwiseAbs().maxCoeff() <= 1e-10);
      const int d = n + 1;
      CHECK((plane_exp(a, 2 * pi) - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-14);
      const double f = kProfile(p.v.norm());
      const Mat closed = plane_exp(a, f);
      CHECK((closed - expm(f * a.matrix)).cwiseAbs().maxCoeff() <= 1e-10);
      const Vec u1 = closed * p.u;
      CHECK((u1 - (std::cos(f) * p.u + std::sin(f) * vh)).cwiseAbs().maxCoeff() <= 1e-10);
      const auto q = apply_twist(p, kProfile);
      CHECK((closed * p.u - q.u).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((closed * p.v - q.v).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
  CHECK(code_of([] { plane_generator(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 0)); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("twist squared equals exp(2 f v_u)") {
  for (int n : {1, 2, 3, 6}) {
    for (const auto& p : random_cotangent_points(n, 200, 50 + n, 0.0, 0.6)) {
      const auto twice = apply_twist(apply_twist(p, kProfile), kProfile);
      if (p.v.norm() < kZeroFiber) {
        CHECK(distance(twice, p) == 0.0);
        continue;
      }
      const Mat m = expm(2.0 * kProfile(p.v.norm()) * plane_generator(p.u, p.v).matrix);
      CHECK(distance(twice, CotangentPoint{m * p.u, m * p.v}) <= 1e-8);
    }
  }
}

TEST_CASE("almost complex generators") {
  const auto j = almost_complex_generator(basis(3, 0), 2);
  CHECK(j.kind == GeneratorKind::j_u);
  CHECK((j.matrix * basis(3, 1) - basis(3, 2)).isZero(0.0));
  CHECK((j.matrix * basis(3, 2) + basis(3, 1)).isZero(0.0));
  for (int n : {2, 6}) {
    for (const auto& p : random_cotangent_points(n, 50, 60 + n, 0.1, 1.0)) {
      const auto g = almost_complex_generator(p.u, n);
      CHECK((g.matrix + g.matrix.transpose()).cwiseAbs().maxCoeff() < 1e-15);
      CHECK((g.matrix * p.u).cwiseAbs().maxCoeff() < 1e-14);
      const Vec w = p.v.normalized();
      CHECK((g.matrix * (g.matrix * w) + w).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK(code_of([] { almost_complex_generator(Vec::Zero(4), 3); }) ==
        ErrorCode::unsupported_dimension);
}

TEST_CASE("octonion table is a normed alternative algebra") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> g(0.0, 1.0);
  auto random_octonion = [&] {
    Vec a(8);
    for (int i = 0; i < 8; ++i) a(i) = g(rng);
    return a;
  };
  for (int i = 0; i < 1000; ++i) {
    const Vec a = random_octonion();
    const Vec b = random_octonion();
    const Vec ab = octonion_multiply(a, b);
    CHECK(std::abs(ab.norm() - a.norm() * b.norm()) <= 1e-10 * std::max(1.0, a.norm() * b.norm()));
    const Vec left = octonion_multiply(octonion_multiply(a, a), b) - octonion_multiply(a, ab);
    const Vec right = octonion_multiply(ab, b) - octonion_multiply(a, octonion_multiply(b, b));
    CHECK(left.cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, a.squaredNorm() * b.norm()));
    CHECK(right.cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, b.squaredNorm() * a.norm()));
  }
  // Octonions are not associative: the table is not secretly quaternionic.
  const Vec e1 = basis(8, 1), e2 = basis(8, 2), e4 = basis(8, 4);
  const Vec lhs = octonion_multiply(octonion_multiply(e1, e2), e4);
  const Vec rhs = octonion_multiply(e1, octonion_multiply(e2, e4));
  CHECK((lhs + rhs).isZero(0.0));
  CHECK_FALSE(lhs.isZero(0.0));
}

TEST_CASE("square isotopy endpoints") {
  for (int n : {2, 6}) {
    for (const auto& p : random_cotangent_points(n, 100, 70 + n, 0.0, 0.6)) {
      const auto tau2 = apply_twist(apply_twist(p, kProfile), kProfile);
      CHECK(distance(isotopy_phi(1.0, p, kProfile), tau2) <= 1e-8);
      CHECK(distance(isotopy_psi(0.0, p, kProfile), p) <= 1e-10);
      CHECK(distance(isotopy_psi(1.0, p, kProfile), isotopy_phi(0.0, p, kProfile)) <= 1e-10);
      if (p.v.norm() >= kZeroFiber) {
        const Mat m = expm(2.0 * kProfile(p.v.norm()) * almost_complex_generator(p.u, n).matrix);
        CHECK(distance(isotopy_phi(0.0, p, kProfile), CotangentPoint{p.u, m * p.v}) <= 1e-10);
      }
    }
    for (const auto& p : random_cotangent_points(n, 20, 80 + n, 0.0, 0.0)) {
      for (int i = 0; i <= 10; ++i) {
        const double t = i / 10.0;
        CHECK(distance(isotopy_phi(t, p, kProfile), p) == 0.0);
        CHECK(distance(isotopy_psi(t, p, kProfile), p) == 0.0);
      }
    }
  }
  const auto p3 = random_cotangent_points(3, 1, 1, 0.2, 0.2).front();
  CHECK(code_of([&] { isotopy_phi(0.5, p3, kProfile); }) == ErrorCode::unsupported_dimension);
  CHECK(code_of([&] { isotopy_psi(0.5, p3, kProfile); }) == ErrorCode::unsupported_dimension);
}

TEST_CASE("twist preserves the canonical symplectic form") {
  for (int n : {1, 2, 3, 6}) {
    for (const auto& p : random_cotangent_points(n, 50, 90 + n, 0.0, 0.6)) {
      const auto id = pullback_two_form([](const CotangentPoint& q) { return q; }, p);
      CHECK(id.max_deviation < 1e-9);
      const auto tw =
          pullback_two_form([](const CotangentPoint& q) { return apply_twist(q, kProfile); }, p);
      CHECK(tw.max_deviation <= 1e-5);
      const auto scaled = pullback_two_form(
          [](const CotangentPoint& q) { return CotangentPoint{q.u, 2.0 * q.v}; }, p);
      CHECK((scaled.pulled.entries - 2.0 * scaled.reference).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
  const auto p = random_cotangent_points(2, 1, 3, 0.2, 0.2).front();
  CHECK(code_of([&] {
          pullback_two_form([](const CotangentPoint& q) { return CotangentPoint{2.0 * q.u, q.v}; },
                            p);
        }) == ErrorCode::tolerance_exceeded);
}

TEST_CASE("cotangent point validation") {
  CHECK(code_of([] { make_cotangent_point(Eigen::Vector2d(1, 0), Eigen::Vector2d(0.1, 1)); }) ==
        ErrorCode::out_of_domain);
  CHECK(code_of([] { make_cotangent_point(Eigen::Vector2d(1.1, 0), Eigen::Vector2d(0, 1)); }) ==
        ErrorCode::out_of_domain);
  CHECK(code_of([] { make_cotangent_point(Eigen::Vector2d(1, 0), Eigen::Vector3d(0, 1, 0)); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("boundary displacement probe") {
  for (int n : {2, 6}) {
    const auto phi = boundary_displacement_probe(IsotopyFamily::phi, n, kProfile, 20, 1);
    REQUIRE(phi.t_grid.size() == 11);
    CHECK(phi.displacement_by_t.front() < 1e-10);
    CHECK(phi.displacement_by_t.back() < 1e-10);
    CHECK(phi.max_displacement >= phi.displacement_by_t[5]);
    const auto psi = boundary_displacement_probe(IsotopyFamily::psi, n, kProfile, 20, 1);
    CHECK(psi.displacement_by_t.front() == 0.0);
    MESSAGE("n=" << n << " phi max " << phi.max_displacement << " at t=" << phi.t_at_max
                 << ", psi max " << psi.max_displacement << " at t=" << psi.t_at_max);
  }
}
