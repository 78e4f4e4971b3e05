#ifndef CHERN_CATALOG_HPP
#define CHERN_CATALOG_HPP

#include <string>

#include "chern/char_classes.hpp"
#include "chern/ring.hpp"

namespace chern {

// Built-in cohomology models. Each entry is a presentation plus, where it
// makes sense, the tangent Chern data of the manifold it models.

/// H*(point): single symbol "1".
RingPtr point_ring();

/// H*(P^n): 1, h, h2, ..., hn with h^i * h^j = h^(i+j); tangent classes
/// from (1+h)^(n+1).
RingPtr projective_space_ring(int n);
ChernData projective_space_tangent(const RingPtr& ring, int n);

/// Even part of a genus-g curve: 1, F with F^2 = 0; tangent c_1 = (2-2g) F.
RingPtr curve_ring();
ChernData curve_tangent(const RingPtr& ring, int genus);

/// Subring 1, theta, pt of an abelian surface with theta^2 = d * pt;
/// the tangent bundle is trivial, so both tangent classes vanish.
RingPtr abelian_surface_ring(const Rational& polarization);
ChernData abelian_surface_tangent(const RingPtr& ring);

/// The 4-class subring 1, omega, G, pt of a Dolgachev surface model:
/// omega^2 = w pt, omega G = t pt, G^2 = 0. The tangent data depends on q
/// and lives in families.hpp.
RingPtr dolgachev_subring(const Rational& w, const Rational& t);

/// Parse a catalog name: "point", "pp<N>", "curve", "abelian",
/// "abelian(<d>)", "dolgachev", "dolgachev(<w>,<t>)", and products of
/// catalog names combined with "x", e.g. "pp1 x pp2". Throws ParseError
/// for unknown names.
RingPtr catalog_ring(const std::string& name);

/// True if catalog_ring would accept the name.
bool is_catalog_name(const std::string& name);

}  // namespace chern

#endif
