#ifndef CHERN_COBORDISM_HPP
#define CHERN_COBORDISM_HPP

#include <map>
#include <string>
#include <vector>

#include "chern/char_classes.hpp"
#include "chern/families.hpp"
#include "chern/partition.hpp"
#include "chern/ratlin.hpp"

namespace chern {

// Linear algebra in the rational cobordism group of dimension n, in the
// basis of monomials alpha_{m_1}...alpha_{m_p} over partitions of n.

/// Chern vector of the basis monomial for a partition m: the product of
/// the alpha_{m_i} generator vectors.
ChernVector monomial_vector(const Partition& m, const Rational& polarization = 2);

class CobordismSpace {
  public:
    /// Builds and caches the p(n) x p(n) matrix of basis-monomial Chern
    /// vectors; throws InvariantError if it is singular (it never is for
    /// honest generators).
    explicit CobordismSpace(int n, const Rational& polarization = 2);

    int dimension() const { return n_; }
    const std::vector<Partition>& basis() const { return basis_; }
    const RatMatrix& matrix() const { return matrix_; }

    /// Coordinates of v over the alpha-monomial basis; exact and unique.
    std::map<Partition, Rational, PartitionOrder> decompose(const ChernVector& v) const;

    /// Reassemble a vector from coordinates (inverse of decompose).
    ChernVector assemble(const std::map<Partition, Rational, PartitionOrder>& coords) const;

  private:
    int n_;
    Rational polarization_;
    std::vector<Partition> basis_;   // canonical order
    RatMatrix matrix_;               // row i = Chern vector of basis_[i]
};

/// Degree-n slice of a monomial ideal in Q[alpha_1, alpha_2, ...].
struct IdealSlice {
    int n = 0;
    std::vector<Partition> generators;  // basis monomials spanning the slice
    int rank = 0;                       // dim of the span of their vectors
};

/// Slice of the ideal generated by alpha_1 alpha_k for k >= 3: partitions
/// of n containing both a part 1 and a part >= 3.
IdealSlice ideal_slice_I(int n, const Rational& polarization = 2);

/// Slice of the ideal generated by all alpha_{2k+1} with k >= 1 and all
/// alpha_1 alpha_{2k} with k >= 2: partitions containing an odd part >= 3,
/// plus partitions containing both a part 1 and an even part >= 4.
IdealSlice ideal_slice_J(int n, const Rational& polarization = 2);

/// rank of ideal_slice_I(n) always equals p(n-1) - floor((n+1)/2).
long ideal_I_rank_formula(int n);
/// p(n) - p(n-1) + floor((n+1)/2): the complementary dimension bound.
long span_upper_bound(int n);

/// Span analysis of the chi^p and Pontryagin functionals in dimension n.
struct SpanReport {
    int n = 0;
    int chi_dim = 0;
    int pontryagin_dim = -1;    // -1 when n is odd (no Pontryagin numbers)
    int sum_dim = 0;            // dim(span chi + span Pontryagin)
    int intersection_dim = -1;  // -1 when n is odd
    long upper_bound = 0;       // p(n) - p(n-1) + floor((n+1)/2)
    std::vector<Partition> chi_members;       // single Chern numbers in span{chi}
    std::vector<Partition> chi_pont_members;  // ... in span{chi} + span{Pontryagin}
};

SpanReport span_report(int n);

}  // namespace chern

#endif
