#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sympolar/ellipsoid.hpp"
#include "sympolar/generators.hpp"
#include "sympolar/matcore.hpp"
#include "sympolar/rng.hpp"
#include "sympolar/symplectic.hpp"

using namespace sympolar;

namespace {

double rel_diff(const Mat& a, const Mat& b) {
  const double scale = std::max({a.frobenius(), b.frobenius(), 1e-300});
  return (a - b).frobenius() / scale;
}

Ellipsoid make(std::initializer_list<std::initializer_list<double>> rows,
               double hbar = 1.0) {
  return Ellipsoid(PosDefMatrix(Mat(rows)), hbar);
}

}  // namespace

TEST_CASE("membership against the defining inequality") {
  const Ellipsoid e = make({{2.0, 0.0}, {0.0, 0.5}});
  CHECK(e.member({0.0, 0.0}));
  CHECK(e.member({std::sqrt(0.5) - 1e-12, 0.0}));
  CHECK_FALSE(e.member({std::sqrt(0.5) + 1e-9, 0.0}));
  CHECK(e.member({0.0, std::sqrt(2.0) - 1e-9}));
  CHECK_FALSE(e.member({1.0, 1.0}));
  // Slack admits just-outside points.
  CHECK(e.member({std::sqrt(0.5) * (1.0 + 1e-12), 0.0}, 1e-9));
  CHECK_THROWS_AS(e.member({1.0, 0.0, 0.0}), std::invalid_argument);

  // hbar scales the body: same matrix, radius scaled by sqrt(hbar).
  const Ellipsoid wide = Ellipsoid(PosDefMatrix(Mat::diag({2.0, 0.5})), 4.0);
  CHECK(wide.member({std::sqrt(2.0) - 1e-9, 0.0}));

  CHECK(e.dim() == 2);
  CHECK(e.dof() == 1);
  const Ellipsoid odd = Ellipsoid(PosDefMatrix(Mat::diag({1.0, 1.0, 1.0})), 1.0);
  CHECK_THROWS_AS(odd.dof(), std::invalid_argument);
}

TEST_CASE("polar dual: frozen values and involution") {
  const Ellipsoid x = make({{2.0, 0.0}, {0.0, 0.5}});
  const Ellipsoid dual = polar_dual(x);
  CHECK(rel_diff(dual.shape_mat(), Mat::diag({0.5, 2.0})) < 1e-14);
  CHECK(dual.hbar() == x.hbar());
  CHECK(approx_equal(polar_dual(dual), x, 1e-13));

  // The unit-hbar ball is self dual.
  const Ellipsoid ball = make({{1.0, 0.0}, {0.0, 1.0}});
  CHECK(approx_equal(polar_dual(ball), ball, 1e-14));
}

TEST_CASE("symplectic polar dual") {
  const Ellipsoid omega = make({{2.0, 0.0}, {0.0, 2.0}});
  const Ellipsoid dual = symplectic_polar_dual(omega);
  CHECK(rel_diff(dual.shape_mat(), Mat::diag({0.5, 0.5})) < 1e-14);

  // -J M^{-1} J keeps symmetric positive definiteness and doubles back.
  CHECK(approx_equal(symplectic_polar_dual(dual), omega, 1e-13));

  // A blob is exactly self dual.
  const Ellipsoid blob = make({{2.0, 1.0}, {1.0, 1.0}});
  CHECK(approx_equal(symplectic_polar_dual(blob), blob, 1e-13));
}

TEST_CASE("linear images") {
  const Ellipsoid e = make({{1.0, 0.0}, {0.0, 1.0}});
  const Mat l = Mat::diag({2.0, 1.0});
  const Ellipsoid image = linear_image(e, l);
  // L e with matrix L^{-T} M L^{-1}.
  CHECK(rel_diff(image.shape_mat(), Mat::diag({0.25, 1.0})) < 1e-14);
  CHECK(image.member({2.0 - 1e-9, 0.0}));
  CHECK_FALSE(image.member({2.0 + 1e-6, 0.0}));
  CHECK_THROWS_AS(linear_image(e, Mat::diag({1.0, 0.0})), std::invalid_argument);
}

TEST_CASE("projection and intersection on coordinate planes: frozen values") {
  const Ellipsoid omega = make({{2.0, 1.0}, {1.0, 1.0}});
  // Shadow on x: Schur complement 2 - 1 = 1.
  CHECK(project(omega, CoordPlane::X).shape_mat()(0, 0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Slice along p: the PP block.
  CHECK(intersect(omega, CoordPlane::P).shape_mat()(0, 0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // Slice along x: the XX block; shadow on p: 1 - 1/2.
  CHECK(intersect(omega, CoordPlane::X).shape_mat()(0, 0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(project(omega, CoordPlane::P).shape_mat()(0, 0) ==
        doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("projection and intersection agree with general-basis versions") {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 3);
    const Ellipsoid omega = gen::random_ellipsoid(2 * n, 1.0, 0.4, 2.5, rng);

    Mat bx(2 * n, n), bp(2 * n, n);
    for (int k = 0; k < n; ++k) {
      bx(k, k) = 1.0;
      bp(n + k, k) = 1.0;
    }
    CHECK(rel_diff(project(omega, bx).shape_mat(),
                   project(omega, CoordPlane::X).shape_mat()) < 1e-11);
    CHECK(rel_diff(project(omega, bp).shape_mat(),
                   project(omega, CoordPlane::P).shape_mat()) < 1e-11);
    CHECK(rel_diff(intersect(omega, bx).shape_mat(),
                   intersect(omega, CoordPlane::X).shape_mat()) < 1e-11);
    CHECK(rel_diff(intersect(omega, bp).shape_mat(),
                   intersect(omega, CoordPlane::P).shape_mat()) < 1e-11);

    // Projection contains intersection on every plane.
    const LagrangianPlane plane = random_lagrangian(n, rng.next_u64());
    const Ellipsoid shadow = project(omega, plane);
    const Ellipsoid slice = intersect(omega, plane);
    CHECK(contains(shadow, slice, 1e-9));
  }
}

TEST_CASE("containment and approximate equality") {
  const Ellipsoid small = make({{2.0, 0.0}, {0.0, 2.0}});
  const Ellipsoid big = make({{0.5, 0.0}, {0.0, 0.5}});
  CHECK(contains(big, small));
  CHECK_FALSE(contains(small, big));
  CHECK(approx_equal(small, small));
  CHECK_FALSE(approx_equal(small, big));

  // Duality is hbar-sensitive, so cross-frame comparisons are refused
  // outright instead of answering false.
  const Ellipsoid other_hbar = Ellipsoid(PosDefMatrix(Mat::diag({2.0, 2.0})), 2.0);
  CHECK_THROWS_AS(contains(big, other_hbar), std::invalid_argument);
  CHECK_THROWS_AS(approx_equal(small, other_hbar), std::invalid_argument);
}

TEST_CASE("john ellipsoid of the product: frozen value") {
  const Ellipsoid x = Ellipsoid(PosDefMatrix(Mat{{2.0}}), 1.0);
  const Ellipsoid john = john_of_product(x);
  CHECK(rel_diff(john.shape_mat(), Mat::diag({2.0, 0.5})) < 1e-14);
  CHECK(is_blob(john).is_blob);
}

TEST_CASE("blob construction, report, and witness") {
  const Ellipsoid squeezed = blob_from_symplectic(
      SymplecticMatrix(Mat::diag({2.0, 0.5})), 1.0);
  CHECK(rel_diff(squeezed.shape_mat(), Mat::diag({0.25, 4.0})) < 1e-14);

  const BlobReport yes = is_blob(make({{2.0, 1.0}, {1.0, 1.0}}));
  CHECK(yes.is_blob);
  CHECK(yes.cond0_residual < 1e-12);
  CHECK(yes.rs_residuals.first < 1e-12);
  CHECK(yes.rs_residuals.second < 1e-12);
  REQUIRE(yes.witness_s.has_value());
  const Mat s = yes.witness_s->mat();
  CHECK(rel_diff(inverse(s * s.transpose()), Mat{{2.0, 1.0}, {1.0, 1.0}}) < 1e-10);

  const BlobReport no = is_blob(make({{2.0, 0.0}, {0.0, 2.0}}));
  CHECK_FALSE(no.is_blob);
  CHECK(no.cond0_residual == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(no.rs_residuals.first == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(no.rs_residuals.second == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(no.witness_s.has_value());

  // Round trip through a random symplectic witness.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const Ellipsoid blob = blob_from_symplectic(random_symplectic(n, seed), 1.0);
    const BlobReport report = is_blob(blob);
    CHECK(report.is_blob);
    REQUIRE(report.witness_s.has_value());
    const Mat w = report.witness_s->mat();
    CHECK(rel_diff(inverse(w * w.transpose()), blob.shape_mat()) < 1e-8);
  }
}

TEST_CASE("quantization predicate") {
  CHECK(is_quantized(make({{0.5, 0.0}, {0.0, 0.5}})));
  CHECK_FALSE(is_quantized(make({{2.0, 0.0}, {0.0, 2.0}})));
  // Blobs sit exactly on the boundary and count as quantized.
  CHECK(is_quantized(make({{2.0, 1.0}, {1.0, 1.0}})));
  // Mixed spectrum in two degrees of freedom: one eigenvalue above 1.
  Rng rng(3);
  const Ellipsoid mixed = gen::ellipsoid_with_spectrum({0.5, 1.8}, 1.0, rng);
  CHECK_FALSE(is_quantized(mixed));
}

TEST_CASE("projection/intersection duality check: frozen cases") {
  const Thm1Result holds = thm1_check(make({{2.0, 1.0}, {1.0, 1.0}}));
  CHECK(holds.holds);
  CHECK(holds.lhs.shape_mat()(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(holds.rhs.shape_mat()(0, 0) == doctest::Approx(1.0).epsilon(1e-13));

  const Thm1Result fails = thm1_check(make({{2.0, 0.0}, {0.0, 2.0}}));
  CHECK_FALSE(fails.holds);
  CHECK(fails.lhs.shape_mat()(0, 0) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(fails.rhs.shape_mat()(0, 0) == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("dual-intersection criterion on Lagrangian planes: frozen cases") {
  const LagrangianPlane lx = LagrangianPlane::coordinate_x(1);

  const Thm3Result ball = thm3_check(make({{1.0, 0.0}, {0.0, 1.0}}), lx);
  CHECK(ball.included);
  CHECK(ball.equal);

  const Thm3Result strict = thm3_check(make({{0.5, 0.0}, {0.0, 0.5}}), lx);
  CHECK(strict.included);
  CHECK_FALSE(strict.equal);

  const Thm3Result outside = thm3_check(make({{2.0, 0.0}, {0.0, 2.0}}), lx);
  CHECK_FALSE(outside.included);

  const LagrangianPlane l2 = LagrangianPlane::coordinate_x(2);
  CHECK_THROWS_AS(thm3_check(make({{1.0, 0.0}, {0.0, 1.0}}), l2),
                  std::invalid_argument);
}
