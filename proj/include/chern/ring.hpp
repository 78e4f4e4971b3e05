#ifndef CHERN_RING_HPP
#define CHERN_RING_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chern/errors.hpp"
#include "chern/rational.hpp"

namespace chern {

// Finitely presented graded commutative Q-algebras given by an explicit
// basis and multiplication table. These model the even rational cohomology
// of a compact complex n-fold: one unit in degree 0, one fundamental-class
// dual in degree 2n, all degrees even, products degree-additive and zero
// above degree 2n.

struct BasisSymbol {
    std::string name;
    int degree = 0;  // cohomological (even) degree
};

struct ProductTerm {
    std::string symbol;
    Rational coeff;
};

struct ProductEntry {
    std::string left;
    std::string right;
    std::vector<ProductTerm> result;
};

/// Raw, unvalidated presentation data. Pairs not listed multiply to zero,
/// except that products with the unit are implied; listing a pair in one
/// order defines both orders.
struct RingDescription {
    int dimension = 0;  // complex dimension n_B; top degree is 2*dimension
    std::vector<BasisSymbol> basis;
    std::vector<ProductEntry> products;
    std::string top;
};

struct ValidationReport {
    bool ok = true;
    std::string violation;  // empty when ok; otherwise names the first failure
};

class RingPresentation;
using RingPtr = std::shared_ptr<const RingPresentation>;

/// Sparse vector over the basis, sorted by symbol index.
using SparseVec = std::vector<std::pair<int, Rational>>;

class RingElement {
  public:
    RingElement() = default;
    explicit RingElement(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coefficient(int symbol_index) const;
    const std::map<int, Rational>& coefficients() const { return coeffs_; }

    void add_term(int symbol_index, const Rational& c);

    /// Restriction to the given cohomological degree.
    RingElement homogeneous_component(int degree) const;
    /// True if all terms have the given degree (the zero element qualifies).
    bool is_homogeneous(int degree) const;

    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    RingElement& operator*=(const Rational& s);
    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const Rational& s) const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string str() const;

  private:
    RingPtr ring_;
    std::map<int, Rational> coeffs_;  // symbol index -> nonzero coefficient
};

/// Validated, immutable presentation with a compiled multiplication table.
class RingPresentation {
  public:
    /// Validates the description and compiles it; throws InvariantError
    /// with the report text on failure.
    static RingPtr create(const RingDescription& d);

    int dimension() const { return dimension_; }
    int size() const { return static_cast<int>(basis_.size()); }
    const BasisSymbol& symbol(int i) const { return basis_[static_cast<size_t>(i)]; }
    int degree(int i) const { return basis_[static_cast<size_t>(i)].degree; }
    int unit_index() const { return unit_; }
    int top_index() const { return top_; }
    /// Index of a named symbol; throws ParseError if absent.
    int index_of(const std::string& name) const;
    bool has_symbol(const std::string& name) const;

    const SparseVec& product(int i, int j) const {
        return table_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    RingDescription description() const;

  private:
    RingPresentation() = default;

    int dimension_ = 0;
    std::vector<BasisSymbol> basis_;
    std::map<std::string, int> index_;
    int unit_ = -1;
    int top_ = -1;
    std::vector<std::vector<SparseVec>> table_;
};

/// Checks every invariant of a presentation; returns pass or the first
/// violation (degree additivity, associativity, unit/top symbol, ...).
ValidationReport ring_validate(const RingDescription& d);
ValidationReport ring_validate(const RingPresentation& p);

RingElement ring_zero(const RingPtr& ring);
RingElement ring_unit(const RingPtr& ring);
RingElement ring_symbol(const RingPtr& ring, const std::string& name);
RingElement ring_symbol(const RingPtr& ring, int index);

/// Bilinear extension of the structure constants; requires both elements to
/// live in the same presentation instance.
RingElement ring_mul(const RingElement& a, const RingElement& b);

/// Coefficient of the top symbol (evaluation against the fundamental class).
Rational integrate(const RingElement& a);

/// Kunneth product: basis = symbol pairs named "l*r", degrees add, structure
/// constants multiply componentwise (all degrees even, so no signs).
RingPtr product_ring(const RingPtr& p, const RingPtr& q);

/// Same dimension, degrees, unit/top position and multiplication table,
/// ignoring symbol names.
bool same_structure(const RingPresentation& a, const RingPresentation& b);

}  // namespace chern

#endif
