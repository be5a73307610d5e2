#pragma once

#include <span>
#include <vector>

namespace condgeo {

/// A point or tangent vector in coefficient space R^n.
using CoeffVec = std::vector<double>;

/// Monic polynomial x^n + a_{n-1} x^{n-1} + ... + a_0, stored as its n
/// non-leading coefficients in descending order (a_{n-1}, ..., a_0).
class MonicPoly {
 public:
  explicit MonicPoly(CoeffVec coeffs);
  MonicPoly(std::initializer_list<double> coeffs) : MonicPoly(CoeffVec(coeffs)) {}

  int degree() const { return static_cast<int>(coeffs_.size()); }
  std::span<const double> coeffs() const { return coeffs_; }
  const CoeffVec& vec() const { return coeffs_; }

  /// Full coefficient list with the leading 1, descending order.
  std::vector<double> full() const;

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  CoeffVec coeffs_;
};

/// General polynomial with explicit leading coefficient, descending order.
struct Poly {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double x) const;
};

/// Point of the toy plane R^2 \ {0}.
struct ToyPoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

double eval(const MonicPoly& p, double x);
Poly deriv(const MonicPoly& p);

/// Root condition number |p~(alpha)| / (|alpha| |p'(alpha)|), where
/// p~(x) = sum |a_i| |x|^i including the leading |x|^n.
/// Throws DomainError when alpha == 0 or p'(alpha) == 0.
double mu_condition(const MonicPoly& p, double alpha);

/// Res(f, g) as the determinant of the Sylvester matrix.
double resultant(std::span<const double> f, std::span<const double> g);

/// (-1)^{n(n-1)/2} Res(p, p'); equals b^2 - 4c for x^2 + bx + c.
double discriminant(const MonicPoly& p);

/// |D(p)|^{1/n}. Zero exactly on the singular locus.
double cond_cn(const MonicPoly& p);

/// Euclidean norm of the coefficients divided by cond_cn(p).
/// Throws SingularError when cond_cn(p) == 0.
double cond_norm(const MonicPoly& p);

/// 1 / (x1^2 + x2^2). Throws SingularError at the origin.
double toy_cond(const ToyPoint& pt);

double norm2(std::span<const double> v);

}  // namespace condgeo
