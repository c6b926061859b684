#pragma once

#include <vector>

namespace trisectrix::geom {

/// Real roots of c3*r^3 + c2*r^2 + c1*r + c0, ascending, repeated roots
/// listed once per multiplicity. Degrades to the quadratic or linear case
/// when the leading coefficients vanish.
///
/// One simple root is taken in closed form (trigonometric method when all
/// three roots are real, Cardano otherwise) and Newton-polished; the other
/// two come from deflating to a quadratic through Vieta's relations, which
/// stays accurate when the roots differ by many orders of magnitude. A
/// near-zero quadratic discriminant is reported as a double root.
///
/// Throws AllCoefficientsZero.
std::vector<double> solve_cubic(double c3, double c2, double c1, double c0);

/// Horner evaluation of the same polynomial.
double eval_cubic(double c3, double c2, double c1, double c0, double r);

}  // namespace trisectrix::geom
