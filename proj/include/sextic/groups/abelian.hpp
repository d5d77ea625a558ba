#pragma once

#include <string>
#include <vector>

#include "sextic/algebra/integer_matrix.hpp"
#include "sextic/algebra/upoly.hpp"
#include "sextic/groups/presentation.hpp"

namespace sextic {

IntegerMatrix relation_matrix(const Presentation& p);
AbelianInvariants abelianization(const Presentation& p);

using QUPoly = UPoly<Rational>;

/// Rational Alexander polynomial for the degree map generators -> Z.
/// When every relator has degree 0 it is the gcd of the (n-1)-minors of
/// the Fox matrix. Otherwise, with N the gcd of the relator degrees, it is
/// the characteristic polynomial of t on H1 of the N-fold cyclic cover
/// with rational coefficients. Normalized: lowest degree 0, integer
/// primitive coefficients, positive leading coefficient.
QUPoly alexander_polynomial(const Presentation& p, const std::vector<int>& degrees);
QUPoly alexander_polynomial(const Presentation& p);  // every generator -> 1

std::string poly_to_string(const QUPoly& f, const std::string& var = "t");
QUPoly normalize_integral(const QUPoly& f);

/// Determinant over Q[t] by fraction-free elimination.
QUPoly determinant(std::vector<std::vector<QUPoly>> m);

}  // namespace sextic
