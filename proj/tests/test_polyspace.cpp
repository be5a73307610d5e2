#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <random>

#include "condgeo/errors.hpp"
#include "condgeo/polyspace.hpp"

using namespace condgeo;

namespace {

// Coefficients of prod (x - r) over the given roots, descending, leading 1 dropped.
CoeffVec from_roots(const std::vector<std::complex<double>>& roots) {
  std::vector<std::complex<double>> c{1.0};
  for (auto r : roots) {
    std::vector<std::complex<double>> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = next;
  }
  CoeffVec out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i].real());
  return out;
}

// Discriminant from roots of the companion matrix.
double root_product_discriminant(const MonicPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) comp(0, j) = -p.vec()[static_cast<std::size_t>(j)];
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  const Eigen::VectorXcd r = comp.eigenvalues();
  std::complex<double> prod = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) prod *= (r(i) - r(j)) * (r(i) - r(j));
  return prod.real();
}

}  // namespace

TEST_CASE("monic construction") {
  CHECK_THROWS_AS(MonicPoly(CoeffVec{}), DomainError);
  CHECK_THROWS_AS(MonicPoly({1.0, NAN}), DomainError);
  const MonicPoly p{-3.0, 2.0};
  CHECK(p.degree() == 2);
  CHECK(p.full() == std::vector<double>{1.0, -3.0, 2.0});
}

TEST_CASE("eval and deriv") {
  const MonicPoly p{-3.0, 2.0};
  CHECK(eval(p, 1.0) == 0.0);
  CHECK(eval(p, 0.0) == 2.0);
  const Poly dp = deriv(p);
  CHECK(dp.coeffs == std::vector<double>{2.0, -3.0});

  const MonicPoly q{0.3, -1.2, 0.7, 2.5};
  const Poly dq = deriv(q);
  for (double x : {-1.3, 0.2, 0.9, 1.7}) {
    const double e4 = std::abs((eval(q, x + 1e-4) - eval(q, x - 1e-4)) / 2e-4 - dq(x));
    const double e5 = std::abs((eval(q, x + 1e-5) - eval(q, x - 1e-5)) / 2e-5 - dq(x));
    CHECK(e4 < 1e-6);
    CHECK(e5 < 1e-7);
  }
}

TEST_CASE("discriminant sign convention and known values") {
  CHECK(discriminant(MonicPoly{-1.0, -1.0}) == doctest::Approx(5.0));
  CHECK(discriminant(MonicPoly{1.0, -0.1}) == doctest::Approx(1.4));
  CHECK(discriminant(MonicPoly{0.0, 1.0}) == doctest::Approx(-4.0));
  // x^3 + px + q: -4p^3 - 27q^2
  CHECK(discriminant(MonicPoly{0.0, -2.0, 1.0}) == doctest::Approx(32.0 - 27.0));
  CHECK(discriminant(MonicPoly{-3.0, 2.0}) == doctest::Approx(1.0));
}

TEST_CASE("discriminant matches root-product oracle on 200 random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int checked = 0;
  while (checked < 200) {
    const int n = 2 + checked % 4;
    std::vector<std::complex<double>> roots;
    while (static_cast<int>(roots.size()) < n) {
      if (n - static_cast<int>(roots.size()) >= 2 && u(rng) > 0.5) {
        const std::complex<double> z(u(rng), 0.3 + std::abs(u(rng)));
        roots.push_back(z);
        roots.push_back(std::conj(z));
      } else {
        roots.emplace_back(u(rng), 0.0);
      }
    }
    double gap = 1e9;
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j) gap = std::min(gap, std::abs(roots[i] - roots[j]));
    if (gap < 0.3) continue;
    const MonicPoly p(from_roots(roots));
    const double d = discriminant(p);
    const double oracle = root_product_discriminant(p);
    CHECK(std::abs(d - oracle) <= 1e-8 * std::abs(oracle));
    ++checked;
  }
}

TEST_CASE("discriminant vanishes on a double root") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    const double r = u(rng);
    std::vector<std::complex<double>> roots{r, r};
    for (int i = 0; i < k % 3; ++i) roots.emplace_back(u(rng), 0.0);
    CHECK(std::abs(discriminant(MonicPoly(from_roots(roots)))) < 1e-10);
  }
}

TEST_CASE("cond_cn in degree 2") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 100; ++k) {
    const double b = u(rng), c = u(rng);
    CHECK(cond_cn(MonicPoly{b, c}) == doctest::Approx(std::sqrt(std::abs(b * b - 4 * c))).epsilon(1e-14));
  }
  CHECK(cond_cn(MonicPoly{2.0, 1.0}) == 0.0);
  CHECK_THROWS_AS(cond_norm(MonicPoly{2.0, 1.0}), SingularError);
  CHECK(cond_norm(MonicPoly{-1.0, -1.0}) == doctest::Approx(std::sqrt(2.0) / std::sqrt(5.0)));
}

TEST_CASE("mu condition") {
  CHECK(mu_condition(MonicPoly{-3.0, 2.0}, 1.0) == doctest::Approx(6.0).epsilon(1e-14));
  const double eps = 1e-3;
  CHECK(mu_condition(MonicPoly{-eps, 0.0}, eps) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(mu_condition(MonicPoly{-3.0, 2.0}, 0.0), DomainError);
  CHECK_THROWS_AS(mu_condition(MonicPoly{-2.0, 1.0}, 1.0), DomainError);

  double prev = 0.0;
  for (double e : {0.1, 0.01, 0.001}) {
    const double mu = mu_condition(MonicPoly{-(2 + e), 1 + e}, 1.0);
    CHECK(mu > prev);
    prev = mu;
  }

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int k = 0; k < 500; ++k) {
    const double a = u(rng), b = u(rng);
    if (std::abs(a) < 1e-3 || std::abs(b) < 1e-3 || std::abs(a - b) < 1e-3) continue;
    const MonicPoly p{-(a + b), a * b};
    const double closed = (std::abs(a) + std::abs(a + b) + std::abs(b)) / std::abs(a - b);
    CHECK(mu_condition(p, a) == doctest::Approx(closed).epsilon(1e-10));
  }
}

TEST_CASE("toy condition") {
  CHECK(toy_cond({0.0, 2.0}) == 0.25);
  CHECK_THROWS_AS(toy_cond({0.0, 0.0}), SingularError);
}
