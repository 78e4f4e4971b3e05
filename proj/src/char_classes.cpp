#include "chern/char_classes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

#include "chern/errors.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// ChernData

ChernData::ChernData(RingPtr ring, int rank, std::vector<RingElement> classes)
    : ring_(std::move(ring)), rank_(rank) {
    if (rank_ < 0)
        throw InvariantError("ChernData: negative rank");
    size_t keep = static_cast<size_t>(std::min(rank_, ring_->dimension()));
    for (size_t i = keep; i < classes.size(); ++i)
        if (!classes[i].is_zero())
            throw InvariantError("ChernData: nonzero class beyond min(rank, dim)");
    classes.resize(keep);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].is_zero()) {
            classes[i] = RingElement(ring_);
            continue;
        }
        if (classes[i].ring() != ring_)
            throw InvariantError("ChernData: class in a different presentation");
        if (!classes[i].is_homogeneous(2 * static_cast<int>(i + 1)))
            throw InvariantError("ChernData: c_" + std::to_string(i + 1) +
                                 " is not homogeneous of degree " +
                                 std::to_string(2 * (i + 1)));
    }
    classes_ = std::move(classes);
}

RingElement ChernData::chern_class(int i) const {
    if (i == 0)
        return ring_unit(ring_);
    if (i < 0 || i > static_cast<int>(classes_.size()))
        return RingElement(ring_);
    return classes_[static_cast<size_t>(i - 1)];
}

// ---------------------------------------------------------------------------
// ChernPolynomial

Rational ChernPolynomial::coefficient(const Partition& m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void ChernPolynomial::add_term(const Partition& m, const Rational& c) {
    if (m.weight() != dim_)
        throw PreconditionError("ChernPolynomial: partition of wrong weight");
    if (c == 0)
        return;
    Rational& slot = coeffs_[m];
    slot += c;
    if (slot == 0)
        coeffs_.erase(m);
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& o) {
    if (dim_ != o.dim_)
        throw PreconditionError("ChernPolynomial: dimension mismatch");
    for (const auto& [m, c] : o.coeffs_)
        add_term(m, c);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& o) {
    if (dim_ != o.dim_)
        throw PreconditionError("ChernPolynomial: dimension mismatch");
    for (const auto& [m, c] : o.coeffs_)
        add_term(m, -c);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [m, c] : coeffs_)
        c *= s;
    return *this;
}

ChernPolynomial ChernPolynomial::operator+(const ChernPolynomial& o) const {
    ChernPolynomial out = *this;
    out += o;
    return out;
}

ChernPolynomial ChernPolynomial::operator-(const ChernPolynomial& o) const {
    ChernPolynomial out = *this;
    out -= o;
    return out;
}

ChernPolynomial ChernPolynomial::operator*(const Rational& s) const {
    ChernPolynomial out = *this;
    out *= s;
    return out;
}

ChernPolynomial ChernPolynomial::operator*(const ChernPolynomial& o) const {
    ChernPolynomial out(dim_ + o.dim_);
    for (const auto& [m1, c1] : coeffs_)
        for (const auto& [m2, c2] : o.coeffs_)
            out.add_term(m1.merged(m2), c1 * c2);
    return out;
}

bool ChernPolynomial::operator==(const ChernPolynomial& o) const {
    return dim_ == o.dim_ && coeffs_ == o.coeffs_;
}

ChernPolynomial ChernPolynomial::monomial(const Partition& m, const Rational& c) {
    ChernPolynomial out(m.weight());
    out.add_term(m, c);
    return out;
}

RatVector ChernPolynomial::dense(const std::vector<Partition>& order) const {
    RatVector out;
    out.reserve(order.size());
    for (const Partition& m : order)
        out.push_back(coefficient(m));
    return out;
}

std::string ChernPolynomial::str(const std::string& letter) const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    // smaller parts first: reverse of the canonical order
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        if (mag != 1 || m.empty()) {
            out << to_string(mag);
            if (!m.empty())
                out << "*";
        }
        if (!m.empty())
            out << m.monomial_str(letter);
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// ChernVector

Rational ChernVector::value(const Partition& m) const {
    auto it = values_.find(m);
    return it == values_.end() ? Rational(0) : it->second;
}

void ChernVector::set_value(const Partition& m, const Rational& v) {
    if (m.weight() != dim_)
        throw PreconditionError("ChernVector: partition of wrong weight");
    if (v == 0)
        values_.erase(m);
    else
        values_[m] = v;
}

bool ChernVector::operator==(const ChernVector& o) const {
    return dim_ == o.dim_ && values_ == o.values_;
}

RatVector ChernVector::dense(const std::vector<Partition>& order) const {
    RatVector out;
    out.reserve(order.size());
    for (const Partition& m : order)
        out.push_back(value(m));
    return out;
}

Rational apply(const LinearFunctional& f, const ChernVector& v) {
    if (f.dimension() != v.dimension())
        throw PreconditionError("apply: dimension mismatch");
    Rational out = 0;
    for (const auto& [m, c] : f.terms())
        out += c * v.value(m);
    return out;
}

RingElement evaluate(const ChernPolynomial& poly, const ChernData& data) {
    RingElement out(data.ring());
    for (const auto& [m, c] : poly.terms()) {
        RingElement term = ring_unit(data.ring());
        for (int part : m.parts()) {
            term = ring_mul(term, data.chern_class(part));
            if (term.is_zero())
                break;
        }
        out += term * c;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Segre classes

std::vector<RingElement> segre(const ChernData& e, int max_degree) {
    if (max_degree > e.ring()->dimension())
        throw PreconditionError("segre: max_degree exceeds the base dimension");
    std::vector<RingElement> alpha;
    alpha.push_back(ring_unit(e.ring()));
    for (int m = 1; m <= max_degree; ++m) {
        RingElement a(e.ring());
        for (int i = 1; i <= std::min(m, e.rank()); ++i)
            a -= ring_mul(e.chern_class(i), alpha[static_cast<size_t>(m - i)]);
        alpha.push_back(std::move(a));
    }
    return alpha;
}

std::vector<ChernPolynomial> segre_universal(int rank, int max_degree) {
    std::vector<ChernPolynomial> alpha;
    alpha.push_back(ChernPolynomial::monomial(Partition{}));
    for (int m = 1; m <= max_degree; ++m) {
        ChernPolynomial a(m);
        for (int i = 1; i <= std::min(m, rank); ++i) {
            ChernPolynomial c = ChernPolynomial::monomial(Partition{i});
            a -= c * alpha[static_cast<size_t>(m - i)];
        }
        alpha.push_back(std::move(a));
    }
    return alpha;
}

// ---------------------------------------------------------------------------
// Pontryagin and Milnor functionals

namespace {

LinearFunctional pontryagin_class(int j) {
    // p_j = sum_{i=0}^{2j} (-1)^(j+i) c_i c_{2j-i}
    LinearFunctional p(2 * j);
    for (int i = 0; i <= 2 * j; ++i) {
        std::vector<int> parts;
        if (i > 0)
            parts.push_back(i);
        if (2 * j - i > 0)
            parts.push_back(2 * j - i);
        Rational sign = ((j + i) % 2 == 0) ? 1 : -1;
        p.add_term(Partition(std::move(parts)), sign);
    }
    return p;
}

}  // namespace

std::vector<LinearFunctional> pontryagin_functionals(int n) {
    if (n % 2 != 0)
        throw PreconditionError("no Pontryagin numbers in odd complex dimension");
    std::vector<LinearFunctional> out;
    for (const Partition& m : partitions_of(n / 2)) {
        LinearFunctional p = ChernPolynomial::monomial(Partition{});
        for (int part : m.parts())
            p = p * pontryagin_class(part);
        out.push_back(std::move(p));
    }
    return out;
}

LinearFunctional milnor_s(int n) {
    if (n < 1)
        throw PreconditionError("milnor_s: n >= 1");
    std::vector<LinearFunctional> s;
    s.push_back(ChernPolynomial::monomial(Partition{}));  // s_0 placeholder, unused
    for (int j = 1; j <= n; ++j) {
        LinearFunctional sj(j);
        for (int i = 1; i < j; ++i) {
            Rational sign = (i % 2 == 1) ? 1 : -1;
            sj += (ChernPolynomial::monomial(Partition{i}) * s[static_cast<size_t>(j - i)]) * sign;
        }
        Rational sign = (j % 2 == 1) ? 1 : -1;
        sj += ChernPolynomial::monomial(Partition{j}, sign * j);
        s.push_back(std::move(sj));
    }
    return s.back();
}

// ---------------------------------------------------------------------------
// chi^p functionals
//
// The genus with series Q(x;y) = x (1 + y e^{-x}) / (1 - e^{-x}) is expanded
// in exactly n roots; its degree-n part is assembled in the monomial
// symmetric basis and converted to elementary-symmetric (Chern) coordinates
// by eliminating lexicographic leading monomials. Exactness makes the
// conversion self-checking: the loop ends with an exactly zero remainder.

namespace {

using Series = std::vector<Rational>;  // coefficients by degree
using YPoly = std::vector<Rational>;   // coefficients by power of y
using Expo = std::vector<int>;         // exponent vector in n variables
using MonoPoly = std::map<Expo, Rational>;

Series series_inverse(const Series& d, int n) {
    // d[0] must be nonzero
    Series u(static_cast<size_t>(n) + 1, Rational(0));
    u[0] = Rational(1) / d[0];
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int i = 1; i <= m; ++i)
            acc += d[static_cast<size_t>(i)] * u[static_cast<size_t>(m - i)];
        u[static_cast<size_t>(m)] = -acc / d[0];
    }
    return u;
}

YPoly ypoly_mul(const YPoly& a, const YPoly& b, int cap) {
    YPoly out(static_cast<size_t>(cap) + 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(cap); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

bool ypoly_zero(const YPoly& a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& c) { return c == 0; });
}

// elementary symmetric polynomial e_p in nvars variables
MonoPoly elementary_poly(int p, int nvars) {
    MonoPoly out;
    Expo expo(static_cast<size_t>(nvars), 0);
    std::fill(expo.begin(), expo.begin() + p, 1);
    std::sort(expo.begin(), expo.end());
    do {
        out[expo] = 1;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return out;
}

MonoPoly mono_mul(const MonoPoly& a, const MonoPoly& b) {
    MonoPoly out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) {
            Expo e = e1;
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += e2[i];
            out[e] += c1 * c2;
        }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// prod_j e_{nu_j} expanded as a polynomial in nvars variables
MonoPoly elementary_product(const Partition& nu, int nvars,
                            std::map<Partition, MonoPoly, PartitionOrder>& cache) {
    auto it = cache.find(nu);
    if (it != cache.end())
        return it->second;
    MonoPoly out{{Expo(static_cast<size_t>(nvars), 0), Rational(1)}};
    for (int part : nu.parts())
        out = mono_mul(out, elementary_poly(part, nvars));
    cache[nu] = out;
    return out;
}

}  // namespace

std::vector<LinearFunctional> chi_functionals(int n) {
    if (n < 1)
        throw PreconditionError("chi_functionals: n >= 1");

    // (1 - e^{-x})/x = sum (-1)^m x^m / (m+1)!
    Series d(static_cast<size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Rational c(1, factorial(m + 1));
        d[static_cast<size_t>(m)] = (m % 2 == 0) ? c : -c;
    }
    Series u = series_inverse(d, n);  // x / (1 - e^{-x})
    Series w(static_cast<size_t>(n) + 1, Rational(0));
    for (int m = 0; m <= n; ++m)  // w = u * e^{-x}
        for (int i = 0; i <= m; ++i) {
            Rational c = u[static_cast<size_t>(i)] / Rational(factorial(m - i));
            w[static_cast<size_t>(m)] += ((m - i) % 2 == 0) ? c : -c;
        }

    auto q = [&](int j) {  // Q(x;y) = u(x) + y w(x), coefficient of x^j
        YPoly out(static_cast<size_t>(n) + 1, Rational(0));
        out[0] = u[static_cast<size_t>(j)];
        out[1] = w[static_cast<size_t>(j)];
        return out;
    };
    YPoly one_plus_y(static_cast<size_t>(n) + 1, Rational(0));
    one_plus_y[0] = 1;
    one_plus_y[1] = 1;

    // degree-n part of prod_i Q(x_i; y) in the monomial symmetric basis:
    // the coefficient of m_lambda is (prod_j q_{lambda_j}) * q_0^(n - #parts)
    std::map<Expo, YPoly> poly;
    for (const Partition& lambda : partitions_of(n)) {
        YPoly coeff(static_cast<size_t>(n) + 1, Rational(0));
        coeff[0] = 1;
        for (int part : lambda.parts())
            coeff = ypoly_mul(coeff, q(part), n);
        for (int i = lambda.size(); i < n; ++i)
            coeff = ypoly_mul(coeff, one_plus_y, n);
        if (ypoly_zero(coeff))
            continue;
        Expo padded(static_cast<size_t>(n), 0);
        for (int i = 0; i < lambda.size(); ++i)
            padded[static_cast<size_t>(i)] = lambda.part(i);
        std::sort(padded.begin(), padded.end());
        do {
            poly[padded] = coeff;
        } while (std::next_permutation(padded.begin(), padded.end()));
    }

    // symmetric-to-elementary by lex leading-term elimination
    std::map<Partition, YPoly, PartitionOrder> in_elementary;
    std::map<Partition, MonoPoly, PartitionOrder> cache;
    while (!poly.empty()) {
        auto lead = std::prev(poly.end());
        Expo mu = lead->first;
        YPoly a = lead->second;
        if (ypoly_zero(a)) {
            poly.erase(lead);
            continue;
        }
        // the lex-max exponent of a symmetric polynomial is weakly decreasing
        assert(std::is_sorted(mu.begin(), mu.end(), std::greater<int>()));
        Partition lambda(mu);
        Partition nu = lambda.conjugate();
        in_elementary[nu] = a;
        for (const auto& [expo, c] : elementary_product(nu, n, cache)) {
            YPoly& slot = poly[expo];
            if (slot.empty())
                slot.assign(static_cast<size_t>(n) + 1, Rational(0));
            for (size_t p = 0; p <= static_cast<size_t>(n); ++p)
                slot[p] -= a[p] * c;
            if (ypoly_zero(slot))
                poly.erase(expo);
        }
    }

    std::vector<LinearFunctional> chi;
    for (int p = 0; p <= n; ++p) {
        LinearFunctional f(n);
        for (const auto& [nu, coeff] : in_elementary)
            f.add_term(nu, coeff[static_cast<size_t>(p)]);
        chi.push_back(std::move(f));
    }
    return chi;
}

LinearFunctional euler_functional(int n) {
    if (n < 1)
        throw PreconditionError("euler_functional: n >= 1");
    return ChernPolynomial::monomial(Partition{n});
}

}  // namespace chern
