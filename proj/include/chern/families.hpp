#ifndef CHERN_FAMILIES_HPP
#define CHERN_FAMILIES_HPP

#include <optional>
#include <utility>

#include "chern/char_classes.hpp"
#include "chern/proj_bundle.hpp"
#include "chern/ring.hpp"

namespace chern {

/// Numeric model of a Dolgachev surface S_q: only the subring generated by
/// a positive-square class omega and the primitive class G with
/// c_1(S_q) = (q-2) G enters any computation here, so the model is the
/// pair w = omega^2 > 0, t = omega.G != 0 together with the documented
/// classical constants. The default witness w = t = 1 is realizable in an
/// odd lattice of type (1,9), e.g. omega = e_0, G = e_0 - e_1.
struct DolgachevModel {
    Rational w = 1;  // omega^2, must be > 0
    Rational t = 1;  // omega.G, must be != 0

    // Classical numeric facts about S_q, fixed for every q:
    // c_1^2 = 0, c_2 = 12, b_2 = 10, intersection form odd of type (1,9).
    static constexpr int c1_squared = 0;
    static constexpr int c2 = 12;
    static constexpr int b2 = 10;

    void check() const;  // throws PreconditionError if w <= 0 or t == 0
};

/// A Chern number of the family X_q as an exact polynomial of degree <= 1
/// in q: value(q) = slope * q + intercept.
struct FamilyChernPolynomial {
    Partition partition;
    Rational slope;
    Rational intercept;

    Rational at(const Rational& q) const { return slope * q + intercept; }
};

/// The threefold Y_q = S_q x C for a genus-g curve C: ring and tangent data
///   c_1 = (q-2) G + (2-2g) F
///   c_2 = 12 pt + (2-2g)(q-2) G F
///   c_3 = (2-2g) 12 pt F.
/// Requires q odd and >= 3.
std::pair<RingPtr, ChernData> build_Yq(int q, int genus, const DolgachevModel& model);

/// The rank-(n-2) bundle E_q on Y_q with c_1 = omega + F and c_i = 0 for
/// i >= 2, packaged with the Y_q tangent data. Requires n >= 4.
BundleOnBase build_Eq(int q, int n, const DolgachevModel& model, int genus = 0);

/// c_m(X_q) for X_q = P(E_q): evaluated at q = 3 and q = 5, interpolated
/// to a line, and verified against q = 7. A nonlinear family would be an
/// internal inconsistency and throws InvariantError.
FamilyChernPolynomial family_chern(const Partition& m, int n, int genus,
                                   const DolgachevModel& model);

/// Generator of the rational cobordism ring in dimension n:
/// P^1, P^2, and for n >= 3 the projectivization of O_A(1) + O_A^(n-2)
/// over an abelian surface with theta^2 = polarization * pt.
struct AlphaGenerator {
    int n = 0;
    std::optional<BundleOnBase> bundle;  // present for n >= 3
    ChernVector vector;                  // Chern numbers, all n
};
AlphaGenerator alpha_generator(int n, const Rational& polarization = 2);

/// Chern vector of a product of manifolds via the Whitney splitting
///   c_m(X x Y) = sum over partwise splittings m_t = i_t + j_t with
///   sum i_t = dim X of c_i(X) c_j(Y).
ChernVector product_chern_vector(const ChernVector& v, const ChernVector& w);

/// Full Chern vector of X_q at a specific q (pushforward-formula route).
ChernVector family_chern_vector(int q, int n, int genus, const DolgachevModel& model);

}  // namespace chern

#endif
