#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qgl/bounds.hpp"
#include "qgl/error.hpp"
#include "qgl/random.hpp"
#include "qgl/slice_roots.hpp"

using namespace qgl;

namespace {

const QPolynomial kCubic{Quaternion(0), 3.0 * Quaternion::j(), Quaternion::i(), Quaternion(1)};

// Closed forms for x^3 + i x^2 + 3 j x at I = (p, q, r).
double snail_closed(const UnitImaginary& I) { return std::sqrt(1 + I.x() * I.x() + 9 * I.y() * I.y()); }
double cosnail_closed(const UnitImaginary& I) {
  const double lead = 1 - I.x() * I.x();
  return std::sqrt((lead + 9 * (1 - I.y() * I.y())) / lead);
}

}  // namespace

TEST_CASE("coefficient bound C") {
  using Cx = std::complex<double>;
  CHECK(coefficient_bound_C(std::vector<Cx>{3.0}).is_infinite());
  CHECK(coefficient_bound_C(std::vector<Cx>{0.0, 0.0}).is_infinite());
  CHECK(coefficient_bound_C(std::vector<Cx>{-1.0, 0.0, 1.0}).value() == doctest::Approx(std::sqrt(2.0)));
  CHECK(coefficient_bound_C(std::vector<Cx>{1.0, 2.0, 1e-14}).value() == doctest::Approx(std::sqrt(5.0) / 2));
  CHECK(coefficient_bound_C(kCubic).value() == doctest::Approx(std::sqrt(11.0)));
  CHECK(min(ExtendedReal::infinity(), ExtendedReal(2.0)).value() == 2.0);
}

TEST_CASE("C caps root moduli of slice polynomials") {
  std::mt19937_64 g(1);
  std::normal_distribution<double> n(0, 1);
  for (int t = 0; t < 100; ++t) {
    const QPolynomial P = random_polynomial(g(), 2 + t % 5, 10.0);
    const UnitImaginary I = UnitImaginary::normalized(n(g), n(g), n(g));
    const Projection pr = project(P, I);
    const double c = coefficient_bound_C(pr.plane).value();
    for (const auto& z : roots_in_slice(pr.plane)) CHECK(z.norm() <= c * (1 + 1e-12));
  }
}

TEST_CASE("slice bounds of x^3 + i x^2 + 3 j x") {
  CHECK(snail_objective(kCubic, UnitImaginary::j()) == doctest::Approx(std::sqrt(10.0)).epsilon(1e-15));
  CHECK(std::abs(coefficient_bound_C(project(kCubic, UnitImaginary::i()).plane).value() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(coefficient_bound_C(project(kCubic, UnitImaginary::i()).perp).value() - 1.0) < 1e-12);
  std::mt19937_64 g(2);
  std::normal_distribution<double> n(0, 1);
  for (int t = 0; t < 100; ++t) {
    const UnitImaginary I = UnitImaginary::normalized(n(g), n(g), n(g));
    CHECK(snail_objective(kCubic, I) == doctest::Approx(snail_closed(I)).epsilon(1e-12));
    CHECK(snm_objective(kCubic, I) == doctest::Approx(std::min(snail_closed(I), cosnail_closed(I))).epsilon(1e-12));
  }
}

TEST_CASE("sup estimates") {
  const SupEstimate sn = bound_snail(kCubic, 2000);
  const SupEstimate sm = bound_snm(kCubic, 2000);
  CHECK(sn.value >= std::sqrt(10.0) - 1e-9);
  CHECK(sm.value <= 3.0 + 1e-9);
  CHECK(sm.value < sn.value);
  CHECK(sn.samples == 2000);
  CHECK(snail_objective(kCubic, sn.witness) == doctest::Approx(sn.value));
  // the estimate is a lower bound on a dense grid maximum
  double grid = 0.0;
  for (int a = 0; a <= 400; ++a) {
    for (int b = 0; b < 400; ++b) {
      const double th = std::numbers::pi * a / 400, ph = 2 * std::numbers::pi * b / 400;
      const UnitImaginary I =
          UnitImaginary::normalized(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
      grid = std::max(grid, snm_objective(kCubic, I));
    }
  }
  CHECK(sm.value >= grid - 1e-6);
  CHECK_THROWS_AS(bound_snail(QPolynomial{Quaternion(1)}, 10), DomainError);
  CHECK_THROWS_AS(bound_snm(kCubic, 0), DomainError);
}

TEST_CASE("real coefficients give a slice-independent bound") {
  const QPolynomial P{Quaternion(2), Quaternion(-3), Quaternion(1)};
  const double c = coefficient_bound_C(P).value();
  CHECK(bound_snail(P, 100).value == doctest::Approx(c));
  CHECK(bound_snm(P, 100).value == doctest::Approx(c));
}

TEST_CASE("serial and parallel scans agree") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const QPolynomial P = random_polynomial(seed, 5, 10.0);
    const SupEstimate a = bound_snm(P, 1500, Execution::Serial);
    const SupEstimate b = bound_snm(P, 1500, Execution::Parallel);
    CHECK(a.value == b.value);
    CHECK(a.witness.q() == b.witness.q());
  }
}
