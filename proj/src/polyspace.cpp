#include "condgeo/polyspace.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "condgeo/errors.hpp"

namespace condgeo {

MonicPoly::MonicPoly(CoeffVec coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("MonicPoly: degree must be at least 1");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("MonicPoly: coefficients must be finite");
  }
}

std::vector<double> MonicPoly::full() const {
  std::vector<double> out;
  out.reserve(coeffs_.size() + 1);
  out.push_back(1.0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

double eval(const MonicPoly& p, double x) {
  double acc = 1.0;
  for (double c : p.coeffs()) acc = acc * x + c;
  return acc;
}

Poly deriv(const MonicPoly& p) {
  const int n = p.degree();
  Poly d;
  d.coeffs.reserve(static_cast<std::size_t>(n));
  d.coeffs.push_back(static_cast<double>(n));
  auto a = p.coeffs();
  // a[k] multiplies x^{n-1-k}
  for (int k = 0; k + 1 < n; ++k) d.coeffs.push_back(a[static_cast<std::size_t>(k)] * (n - 1 - k));
  return d;
}

double mu_condition(const MonicPoly& p, double alpha) {
  if (alpha == 0.0) throw DomainError("mu_condition: alpha must be nonzero");
  const double dp = deriv(p)(alpha);
  if (dp == 0.0) throw DomainError("mu_condition: p'(alpha) = 0 (multiple root)");
  const double ax = std::abs(alpha);
  double tilde = 1.0;
  for (double c : p.coeffs()) tilde = tilde * ax + std::abs(c);
  return tilde / (ax * std::abs(dp));
}

double resultant(std::span<const double> f, std::span<const double> g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int k = static_cast<int>(g.size()) - 1;
  if (m < 0 || k < 0) throw DomainError("resultant: empty polynomial");
  const int size = m + k;
  if (size == 0) return 1.0;
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(size, size);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c <= m; ++c) s(r, r + c) = f[static_cast<std::size_t>(c)];
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= k; ++c) s(k + r, r + c) = g[static_cast<std::size_t>(c)];
  return s.partialPivLu().determinant();
}

double discriminant(const MonicPoly& p) {
  const int n = p.degree();
  if (n < 2) throw DomainError("discriminant: degree must be at least 2");
  const auto full = p.full();
  const auto dp = deriv(p).coeffs;
  const double res = resultant(full, dp);
  const bool negate = ((n * (n - 1) / 2) % 2) == 1;
  return negate ? -res : res;
}

double cond_cn(const MonicPoly& p) {
  return std::pow(std::abs(discriminant(p)), 1.0 / p.degree());
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double cond_norm(const MonicPoly& p) {
  const double c = cond_cn(p);
  if (c == 0.0) throw SingularError("cond_norm: polynomial lies on the discriminant locus");
  return norm2(p.coeffs()) / c;
}

double toy_cond(const ToyPoint& pt) {
  const double r2 = pt.x1 * pt.x1 + pt.x2 * pt.x2;
  if (r2 == 0.0) throw SingularError("toy_cond: origin is singular");
  return 1.0 / r2;
}

}  // namespace condgeo
