#ifndef CHERN_CHAR_CLASSES_HPP
#define CHERN_CHAR_CLASSES_HPP

#include <map>
#include <string>
#include <vector>

#include "chern/partition.hpp"
#include "chern/ratlin.hpp"
#include "chern/ring.hpp"

namespace chern {

/// Chern classes c_1..c_min(rank, dim) of a bundle, as elements of a base
/// presentation. c_0 = 1 is implicit, classes beyond the stored range are
/// zero, and c_i must be homogeneous of degree 2i.
class ChernData {
  public:
    ChernData() = default;
    /// classes = c_1, c_2, ... ; the list is truncated at min(rank, dim)
    /// and padded with zero elements up to that length.
    ChernData(RingPtr ring, int rank, std::vector<RingElement> classes);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return rank_; }
    int stored() const { return static_cast<int>(classes_.size()); }
    /// c_i for any i >= 0 (c_0 is the unit, out-of-range classes are zero).
    RingElement chern_class(int i) const;

  private:
    RingPtr ring_;
    int rank_ = 0;
    std::vector<RingElement> classes_;
};

/// Homogeneous rational combination of Chern monomials of total weight n:
/// a partition m = (m_1,...,m_p) of n stands for c_{m_1}...c_{m_p}. Read as
/// coordinates in the dual of the cobordism group it is a linear functional
/// on Chern numbers; read multiplicatively it is a universal class
/// polynomial. Both uses share this representation.
class ChernPolynomial {
  public:
    ChernPolynomial() = default;
    explicit ChernPolynomial(int dimension) : dim_(dimension) {}

    int dimension() const { return dim_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Partition, Rational, PartitionOrder>& terms() const { return coeffs_; }
    Rational coefficient(const Partition& m) const;
    void add_term(const Partition& m, const Rational& c);

    ChernPolynomial& operator+=(const ChernPolynomial& o);
    ChernPolynomial& operator-=(const ChernPolynomial& o);
    ChernPolynomial& operator*=(const Rational& s);
    ChernPolynomial operator+(const ChernPolynomial& o) const;
    ChernPolynomial operator-(const ChernPolynomial& o) const;
    ChernPolynomial operator*(const Rational& s) const;
    /// Formal product: partitions merge, dimensions add.
    ChernPolynomial operator*(const ChernPolynomial& o) const;
    bool operator==(const ChernPolynomial& o) const;
    bool operator!=(const ChernPolynomial& o) const { return !(*this == o); }

    /// Indicator of a single Chern monomial.
    static ChernPolynomial monomial(const Partition& m, const Rational& c = 1);

    /// Row vector over the partitions of n in canonical order.
    RatVector dense(const std::vector<Partition>& order) const;

    /// e.g. "2*e1^2 - 8*e2" (letter configurable; terms with smaller parts
    /// first, matching how such polynomials are usually written).
    std::string str(const std::string& letter = "c") const;

  private:
    int dim_ = 0;
    std::map<Partition, Rational, PartitionOrder> coeffs_;
};

using LinearFunctional = ChernPolynomial;

/// A rational cobordism class in Chern-number coordinates: the value of
/// every Chern number c_m, for m a partition of the dimension.
class ChernVector {
  public:
    ChernVector() = default;
    explicit ChernVector(int dimension) : dim_(dimension) {}

    int dimension() const { return dim_; }
    const std::map<Partition, Rational, PartitionOrder>& values() const { return values_; }
    Rational value(const Partition& m) const;
    void set_value(const Partition& m, const Rational& v);

    bool operator==(const ChernVector& o) const;
    bool operator!=(const ChernVector& o) const { return !(*this == o); }

    RatVector dense(const std::vector<Partition>& order) const;

  private:
    int dim_ = 0;
    std::map<Partition, Rational, PartitionOrder> values_;
};

/// Duality pairing sum_m f[m] * v[m]; throws PreconditionError on
/// dimension mismatch.
Rational apply(const LinearFunctional& f, const ChernVector& v);

/// Substitute the classes of `data` for the formal variables of `poly`
/// (partition (i) -> c_i) and multiply out in the base ring.
RingElement evaluate(const ChernPolynomial& poly, const ChernData& data);

/// Segre classes alpha_0..alpha_max of a bundle: the inverse of the total
/// Chern class, so (1 + c_1 + ... + c_k)(alpha_0 + alpha_1 + ...) = 1
/// through the requested degree. Requires max_degree <= base dimension.
std::vector<RingElement> segre(const ChernData& e, int max_degree);

/// Universal Segre classes of a rank-k bundle as polynomials in e_1..e_k:
/// alpha_1 = -e_1, alpha_2 = e_1^2 - e_2, ...
std::vector<ChernPolynomial> segre_universal(int rank, int max_degree);

/// Pontryagin numbers p_m for all partitions m of n/2, expanded into Chern
/// monomials via p_j = sum_i (-1)^(j+i) c_i c_{2j-i} and formal products.
/// n must be even.
std::vector<LinearFunctional> pontryagin_functionals(int n);

/// Milnor number s_n (the n-th power sum in Chern roots) via Newton's
/// identities: s_j = c_1 s_{j-1} - c_2 s_{j-2} + ... + (-1)^{j-1} j c_j.
LinearFunctional milnor_s(int n);

/// chi^0..chi^n as Chern-number combinations, from the genus with
/// characteristic series x(1 + y exp(-x)) / (1 - exp(-x)) expanded in
/// exactly n roots and converted to elementary-symmetric coordinates.
std::vector<LinearFunctional> chi_functionals(int n);

/// The functional picking the coefficient of (n) — the topological Euler
/// number c_n.
LinearFunctional euler_functional(int n);

}  // namespace chern

#endif
