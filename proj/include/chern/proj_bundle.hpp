#ifndef CHERN_PROJ_BUNDLE_HPP
#define CHERN_PROJ_BUNDLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "chern/char_classes.hpp"
#include "chern/partition.hpp"
#include "chern/ring.hpp"

namespace chern {

/// A rank-k bundle E on a base B of complex dimension n_B, together with
/// the Chern data of the base tangent bundle. The projectivization P(E)
/// has dimension n = n_B + k - 1.
struct BundleOnBase {
    RingPtr base;
    ChernData tangent;  // c_j(B), rank n_B
    ChernData bundle;   // c_i(E), rank k >= 1

    BundleOnBase() = default;
    BundleOnBase(RingPtr base_ring, ChernData tangent_data, ChernData bundle_data);

    int base_dimension() const { return base->dimension(); }
    int rank() const { return bundle.rank(); }
    int total_dimension() const { return base_dimension() + rank() - 1; }
};

/// Ordered tuple of nonnegative integers. Order is kept: the symmetry of
/// f under permutations is a verified property, not an assumption.
class WeightedTuple {
  public:
    WeightedTuple() = default;
    explicit WeightedTuple(std::vector<int> entries);
    WeightedTuple(std::initializer_list<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }
    int weight() const;
    int entry(int i) const { return entries_[static_cast<size_t>(i)]; }

    std::string str() const;

  private:
    std::vector<int> entries_;  // nonnegative
};

WeightedTuple parse_tuple(const std::string& text);

/// The class
///   f(a) = sum_d  prod_i binom(k - d_i, k - a_i) c_{d_i}(E) * alpha_{|a|-|d|-(k-1)}
/// with binom(a,b) = 0 for b < 0 or a < b. Homogeneous of degree
/// 2(|a| - (k-1)); the zero element whenever |a| < k-1, |a| > n, some
/// a_i > k, or some a_i = k.
RingElement f_class(const WeightedTuple& a, const BundleOnBase& bundle);

/// f(a) for a rank-k bundle with symbolic Chern classes, as a universal
/// polynomial in e_1..e_k.
ChernPolynomial f_symbolic(const WeightedTuple& a, int rank);

/// Closed forms for |a| in {k-1, k, k+1} (parts <= k):
///   |a| = k-1 :  prod binom(k, a_i)
///   |a| = k   :  0
///   |a| = k+1 :  prod binom(k, a_i) * (sum_{s<t} a_s a_t - k)
///                  * (e_1^2/k^2 - 2 e_2/(k(k-1)))
/// Other weights raise PreconditionError ("closed form unavailable").
RingElement f_closed_form(const WeightedTuple& a, const BundleOnBase& bundle);
ChernPolynomial f_closed_form_symbolic(const WeightedTuple& a, int rank);

/// Chern number of P(E) by the pushforward formula:
///   c_m(P(E)) = sum over ordered tuples (j_1..j_p), 0 <= j_t <= n_B, of
///   integral of c_{j_1}(B)...c_{j_p}(B) * f(m_1-j_1,...,m_p-j_p),
/// skipping tuples with some m_t - j_t < 0. Requires |m| = n.
Rational chern_number_pbundle(const Partition& m, const BundleOnBase& bundle);

/// The cohomology ring of P(E) built directly: basis {beta * y^j} for beta
/// a base symbol and 0 <= j <= k-1, multiplication reducing y^k via
/// sum_{i=0}^{k} e_i y^{k-i} = 0, top symbol (base top) * y^{k-1}, and the
/// tangent data extracted from (sum_j b_j)(sum_i e_i (1+y)^{k-i}).
/// Independent of f_class / chern_number_pbundle; used as their oracle.
struct OracleRing {
    RingPtr ring;
    ChernData tangent;
};
OracleRing pbundle_oracle_ring(const BundleOnBase& bundle);

/// Chern number of P(E) by direct expansion in the oracle ring.
Rational chern_number_oracle(const Partition& m, const BundleOnBase& bundle);
Rational chern_number_oracle(const Partition& m, const OracleRing& oracle);

/// All Chern numbers of P(E), by either route.
ChernVector chern_vector_pbundle(const BundleOnBase& bundle);
ChernVector chern_vector_oracle(const BundleOnBase& bundle);

/// One row of the positivity enumeration for weight k+1: the constant
/// prod binom(k, a_i) * (sum_{s<t} a_s a_t - k) and its sign class.
struct PositivityRow {
    Partition tuple;  // partition of k+1 with parts <= k
    Rational value;
    bool positive = false;  // value > 0; otherwise value == 0 is expected
};

/// Evaluates the weight-(k+1) constant for every partition of k+1 with
/// parts <= k. Requires k >= 2.
std::vector<PositivityRow> positivity_scan(int k);

}  // namespace chern

#endif
