#pragma once

#include "antiexact/connection.hpp"
#include "antiexact/form.hpp"

namespace antiexact {

/// Graded-anticommutative exterior product. At least one argument must be
/// scalar-fibered; the result carries the wider fiber.
Form wedge(const Form& a, const Form& b);

/// (A ^ phi)^a = sum_b A^a_b ^ phi^b.
Form conn_wedge(const Connection& A, const Form& phi);

/// Matrix product with entrywise wedge: (A ^ B)^a_b = sum_c A^a_c ^ B^c_b.
MatrixForm matrix_wedge(const Connection& A, const Connection& B);

/// (F ^ phi)^a = sum_b F^a_b ^ phi^b for a matrix of forms.
Form matrix_form_wedge(const MatrixForm& F, const Form& phi);

/// Interior product (antiderivation of degree -1); zero on 0-forms.
Form interior(const PolyVectorField& X, const Form& phi);

/// Musical isomorphism for the identity Euclidean metric (degree-1, m=1).
PolyVectorField sharp(const Form& alpha);
/// Inverse musical map: components of X become the coefficients of a one-form.
Form flat(const PolyVectorField& X, int fiber_dim = 1);

/// Hodge star for the identity metric and the standard orientation.
Form hodge_star(const Form& phi);
/// Inverse star, star_inverse(hodge_star(phi)) == phi.
Form star_inverse(const Form& phi);

/// Degree-parity involution: multiplies a k-form by (-1)^k.
Form eta(const Form& phi);

/// A-sharp contraction: (A# _| phi)^a = sum_b (A^a_b)# _| phi^b.
Form sharp_interior(const Connection& A, const Form& phi);

}  // namespace antiexact
