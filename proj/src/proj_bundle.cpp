#include "chern/proj_bundle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chern/errors.hpp"

namespace chern {

// ---------------------------------------------------------------------------
// BundleOnBase / WeightedTuple

BundleOnBase::BundleOnBase(RingPtr base_ring, ChernData tangent_data, ChernData bundle_data)
    : base(std::move(base_ring)), tangent(std::move(tangent_data)),
      bundle(std::move(bundle_data)) {
    if (tangent.ring() != base || bundle.ring() != base)
        throw InvariantError("BundleOnBase: classes must live in the base ring");
    if (bundle.rank() < 1)
        throw InvariantError("BundleOnBase: bundle rank must be >= 1");
    if (tangent.rank() != base->dimension())
        throw InvariantError("BundleOnBase: tangent data must have rank = dim B");
}

WeightedTuple::WeightedTuple(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0)
            throw PreconditionError("WeightedTuple: entries must be nonnegative");
}

WeightedTuple::WeightedTuple(std::initializer_list<int> entries)
    : WeightedTuple(std::vector<int>(entries)) {}

int WeightedTuple::weight() const {
    int w = 0;
    for (int e : entries_)
        w += e;
    return w;
}

std::string WeightedTuple::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out << ",";
        out << entries_[i];
    }
    return out.str();
}

WeightedTuple parse_tuple(const std::string& text) {
    std::vector<int> entries;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            entries.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw ParseError("bad tuple '" + text + "'");
        }
    }
    if (entries.empty())
        throw ParseError("bad tuple '" + text + "'");
    return WeightedTuple(std::move(entries));
}

// ---------------------------------------------------------------------------
// f(a)

namespace {

void f_class_rec(const std::vector<int>& a, int k, int weight_cap, size_t pos,
                 const Rational& coeff, const RingElement& partial, int dsum,
                 const ChernData& e, const std::vector<RingElement>& alpha,
                 RingElement& out) {
    if (pos == a.size()) {
        out += ring_mul(partial, alpha[static_cast<size_t>(weight_cap - dsum)]) * coeff;
        return;
    }
    int ai = a[pos];
    int dmax = std::min({ai, k, weight_cap - dsum});
    for (int d = 0; d <= dmax; ++d) {
        Integer b = binomial(k - d, k - ai);
        if (b == 0)
            continue;
        RingElement next = (d == 0) ? partial : ring_mul(partial, e.chern_class(d));
        if (d > 0 && next.is_zero())
            continue;
        f_class_rec(a, k, weight_cap, pos + 1, coeff * Rational(b), next, dsum + d, e, alpha,
                    out);
    }
}

void f_symbolic_rec(const std::vector<int>& a, int k, int weight_cap, size_t pos,
                    const Rational& coeff, const Partition& partial, int dsum,
                    const std::vector<ChernPolynomial>& alpha, ChernPolynomial& out) {
    if (pos == a.size()) {
        out += (alpha[static_cast<size_t>(weight_cap - dsum)] *
                ChernPolynomial::monomial(partial)) *
               coeff;
        return;
    }
    int ai = a[pos];
    int dmax = std::min({ai, k, weight_cap - dsum});
    for (int d = 0; d <= dmax; ++d) {
        Integer b = binomial(k - d, k - ai);
        if (b == 0)
            continue;
        Partition next = (d == 0) ? partial : partial.merged(Partition{d});
        f_symbolic_rec(a, k, weight_cap, pos + 1, coeff * Rational(b), next, dsum + d, alpha,
                       out);
    }
}

}  // namespace

RingElement f_class(const WeightedTuple& a, const BundleOnBase& bundle) {
    int k = bundle.rank();
    int nB = bundle.base_dimension();
    int weight = a.weight() - (k - 1);  // cohomological degree / 2
    RingElement out(bundle.base);
    if (weight < 0 || weight > nB)
        return out;  // below the support or above the top degree
    std::vector<RingElement> alpha = segre(bundle.bundle, weight);
    f_class_rec(a.entries(), k, weight, 0, Rational(1), ring_unit(bundle.base), 0,
                bundle.bundle, alpha, out);
    return out;
}

ChernPolynomial f_symbolic(const WeightedTuple& a, int rank) {
    if (rank < 1)
        throw PreconditionError("f_symbolic: rank >= 1");
    int weight = a.weight() - (rank - 1);
    if (weight < 0)
        return ChernPolynomial(0);
    ChernPolynomial out(weight);
    std::vector<ChernPolynomial> alpha = segre_universal(rank, weight);
    f_symbolic_rec(a.entries(), rank, weight, 0, Rational(1), Partition{}, 0, alpha, out);
    return out;
}

namespace {

// The scalar prod binom(k, a_i) * (sum_{s<t} a_s a_t - k) of the
// weight-(k+1) closed form; also the positivity-scanned quantity.
Rational closed_form_constant(const std::vector<int>& a, int k) {
    Rational prod = 1;
    long total = 0, squares = 0;
    for (int ai : a) {
        prod *= Rational(binomial(k, ai));
        total += ai;
        squares += static_cast<long>(ai) * ai;
    }
    Rational pairs((total * total - squares) / 2);
    return prod * (pairs - k);
}

void check_closed_form_domain(const WeightedTuple& a, int k) {
    for (int ai : a.entries())
        if (ai > k)
            throw PreconditionError("closed form unavailable: entry exceeds the rank");
    int w = a.weight();
    if (w < k - 1 || w > k + 1)
        throw PreconditionError("closed form unavailable for weight " + std::to_string(w));
}

}  // namespace

RingElement f_closed_form(const WeightedTuple& a, const BundleOnBase& bundle) {
    int k = bundle.rank();
    check_closed_form_domain(a, k);
    int w = a.weight();
    if (w == k)
        return RingElement(bundle.base);
    if (w == k - 1) {
        Rational c = 1;
        for (int ai : a.entries())
            c *= Rational(binomial(k, ai));
        return ring_unit(bundle.base) * c;
    }
    Rational c = closed_form_constant(a.entries(), k);
    if (c == 0)
        return RingElement(bundle.base);
    // c != 0 forces k >= 2 (for k = 1 every admissible tuple gives c = 0)
    RingElement e1 = bundle.bundle.chern_class(1);
    RingElement shape = ring_mul(e1, e1) * Rational(1, Integer(k) * k);
    shape -= bundle.bundle.chern_class(2) * Rational(2, Integer(k) * (k - 1));
    return shape * c;
}

ChernPolynomial f_closed_form_symbolic(const WeightedTuple& a, int rank) {
    check_closed_form_domain(a, rank);
    int w = a.weight();
    if (w == rank)
        return ChernPolynomial(2);
    if (w == rank - 1) {
        Rational c = 1;
        for (int ai : a.entries())
            c *= Rational(binomial(rank, ai));
        return ChernPolynomial::monomial(Partition{}, c);
    }
    ChernPolynomial out(2);
    Rational c = closed_form_constant(a.entries(), rank);
    if (c == 0)
        return out;
    out.add_term(Partition{1, 1}, c / (Integer(rank) * rank));
    out.add_term(Partition{2}, c * Rational(-2, Integer(rank) * (rank - 1)));
    return out;
}

// ---------------------------------------------------------------------------
// Pushforward formula

namespace {

using FCache = std::map<std::vector<int>, RingElement>;

const RingElement& cached_f(const std::vector<int>& sorted_tuple, const BundleOnBase& bundle,
                            FCache& cache) {
    auto it = cache.find(sorted_tuple);
    if (it != cache.end())
        return it->second;
    RingElement value = f_class(WeightedTuple(sorted_tuple), bundle);
    return cache.emplace(sorted_tuple, std::move(value)).first->second;
}

void pbundle_rec(const std::vector<int>& m, const BundleOnBase& bundle, size_t pos, int jsum,
                 const RingElement& partial, std::vector<int>& j, FCache& cache,
                 Rational& total) {
    int nB = bundle.base_dimension();
    if (pos == m.size()) {
        std::vector<int> a(m.size());
        for (size_t t = 0; t < m.size(); ++t)
            a[t] = m[t] - j[t];
        std::sort(a.begin(), a.end());
        const RingElement& f = cached_f(a, bundle, cache);
        if (!f.is_zero())
            total += integrate(ring_mul(partial, f));
        return;
    }
    int cap = std::min(m[pos], nB - jsum);
    for (int jt = 0; jt <= cap; ++jt) {
        RingElement next =
            (jt == 0) ? partial : ring_mul(partial, bundle.tangent.chern_class(jt));
        if (jt > 0 && next.is_zero())
            continue;
        j[pos] = jt;
        pbundle_rec(m, bundle, pos + 1, jsum + jt, next, j, cache, total);
    }
    j[pos] = 0;
}

Rational pbundle_number(const Partition& m, const BundleOnBase& bundle, FCache& cache) {
    if (m.weight() != bundle.total_dimension())
        throw PreconditionError("chern_number_pbundle: partition weight must equal dim P(E)");
    std::vector<int> j(m.parts().size(), 0);
    Rational total = 0;
    pbundle_rec(m.parts(), bundle, 0, 0, ring_unit(bundle.base), j, cache, total);
    return total;
}

}  // namespace

Rational chern_number_pbundle(const Partition& m, const BundleOnBase& bundle) {
    FCache cache;
    return pbundle_number(m, bundle, cache);
}

ChernVector chern_vector_pbundle(const BundleOnBase& bundle) {
    int n = bundle.total_dimension();
    ChernVector v(n);
    FCache cache;  // f values are shared across partitions
    for (const Partition& m : partitions_of(n))
        v.set_value(m, pbundle_number(m, bundle, cache));
    return v;
}

// ---------------------------------------------------------------------------
// Oracle ring
//
// Elements of H*(P(E)) are polynomials in the hyperplane class y with
// coefficients in the base, reduced by sum_{i=0}^{k} e_i y^{k-i} = 0.

namespace {

using YOverBase = std::vector<RingElement>;  // index = power of y

void reduce_y(YOverBase& v, const ChernData& e, int k) {
    for (size_t m = v.size(); m-- > static_cast<size_t>(k);) {
        if (v[m].is_zero())
            continue;
        RingElement head = std::move(v[m]);
        v[m] = RingElement(head.ring());
        for (int i = 1; i <= k; ++i) {
            RingElement term = ring_mul(head, e.chern_class(i));
            if (!term.is_zero())
                v[m - static_cast<size_t>(i)] -= term;
        }
    }
    v.resize(static_cast<size_t>(k), RingElement(e.ring()));
}

YOverBase y_mul(const YOverBase& a, const YOverBase& b, const ChernData& e, int k,
                const RingPtr& base) {
    YOverBase out(a.size() + b.size() - 1, RingElement(base));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero())
                continue;
            out[i + j] += ring_mul(a[i], b[j]);
        }
    }
    reduce_y(out, e, k);
    return out;
}

std::string oracle_symbol_name(const std::string& base_name, int j) {
    if (j == 0)
        return base_name;
    std::string power = (j == 1) ? "y" : "y^" + std::to_string(j);
    return base_name == "1" ? power : base_name + "*" + power;
}

}  // namespace

OracleRing pbundle_oracle_ring(const BundleOnBase& input) {
    const RingPtr& base = input.base;
    int k = input.rank();
    int nB = base->dimension();
    int n = input.total_dimension();
    int bsize = base->size();

    RingDescription d;
    d.dimension = n;
    auto flat = [k](int b, int j) { return b * k + j; };
    for (int b = 0; b < bsize; ++b)
        for (int j = 0; j < k; ++j)
            d.basis.push_back({oracle_symbol_name(base->symbol(b).name, j),
                               base->degree(b) + 2 * j});
    d.top = d.basis[static_cast<size_t>(flat(base->top_index(), k - 1))].name;

    // structure constants: multiply the y-polynomials and reduce
    for (int i1 = 0; i1 < bsize * k; ++i1) {
        int b1 = i1 / k, j1 = i1 % k;
        if (i1 == flat(base->unit_index(), 0))
            continue;
        for (int i2 = i1; i2 < bsize * k; ++i2) {
            int b2 = i2 / k, j2 = i2 % k;
            if (i2 == flat(base->unit_index(), 0))
                continue;
            if (d.basis[static_cast<size_t>(i1)].degree +
                    d.basis[static_cast<size_t>(i2)].degree > 2 * n)
                continue;
            YOverBase prod(static_cast<size_t>(j1 + j2) + 1, RingElement(base));
            prod[static_cast<size_t>(j1 + j2)] = ring_mul(ring_symbol(base, b1),
                                                          ring_symbol(base, b2));
            reduce_y(prod, input.bundle, k);
            ProductEntry entry;
            entry.left = d.basis[static_cast<size_t>(i1)].name;
            entry.right = d.basis[static_cast<size_t>(i2)].name;
            for (size_t j = 0; j < prod.size(); ++j)
                for (const auto& [s, c] : prod[j].coefficients())
                    entry.result.push_back(
                        {d.basis[static_cast<size_t>(flat(s, static_cast<int>(j)))].name, c});
            if (!entry.result.empty())
                d.products.push_back(std::move(entry));
        }
    }

    OracleRing out;
    out.ring = RingPresentation::create(d);

    // total tangent class (sum_j b_j) * (sum_i e_i (1+y)^{k-i})
    YOverBase base_part{ring_unit(base)};
    for (int j = 1; j <= nB; ++j)
        base_part[0] += input.tangent.chern_class(j);

    YOverBase one_plus_y(std::min(2, k), RingElement(base));
    one_plus_y[0] = ring_unit(base);
    if (k > 1)
        one_plus_y[1] = ring_unit(base);
    else
        one_plus_y[0] -= input.bundle.chern_class(1);  // k = 1: y reduces to -e_1

    YOverBase fiber_part(static_cast<size_t>(k), RingElement(base));
    for (int i = 0; i <= k; ++i) {
        RingElement ei = input.bundle.chern_class(i);
        if (ei.is_zero())
            continue;
        YOverBase pow{ring_unit(base)};
        for (int c = 0; c < k - i; ++c)
            pow = y_mul(pow, one_plus_y, input.bundle, k, base);
        for (size_t j = 0; j < pow.size(); ++j)
            fiber_part[j] += ring_mul(ei, pow[j]);
    }
    YOverBase total = y_mul(base_part, fiber_part, input.bundle, k, base);

    // split into homogeneous components c_1..c_n of the oracle ring
    std::vector<RingElement> classes(static_cast<size_t>(n), RingElement(out.ring));
    for (size_t j = 0; j < total.size(); ++j)
        for (const auto& [s, c] : total[j].coefficients()) {
            int degree = base->degree(s) + 2 * static_cast<int>(j);
            if (degree == 0)
                continue;  // the constant term of the total class
            classes[static_cast<size_t>(degree / 2 - 1)].add_term(
                flat(s, static_cast<int>(j)), c);
        }
    out.tangent = ChernData(out.ring, n, std::move(classes));
    return out;
}

Rational chern_number_oracle(const Partition& m, const OracleRing& oracle) {
    if (m.weight() != oracle.ring->dimension())
        throw PreconditionError("chern_number_oracle: partition weight must equal dim P(E)");
    RingElement prod = ring_unit(oracle.ring);
    for (int part : m.parts()) {
        prod = ring_mul(prod, oracle.tangent.chern_class(part));
        if (prod.is_zero())
            return 0;
    }
    return integrate(prod);
}

Rational chern_number_oracle(const Partition& m, const BundleOnBase& bundle) {
    return chern_number_oracle(m, pbundle_oracle_ring(bundle));
}

ChernVector chern_vector_oracle(const BundleOnBase& bundle) {
    OracleRing oracle = pbundle_oracle_ring(bundle);
    int n = bundle.total_dimension();
    ChernVector v(n);
    for (const Partition& m : partitions_of(n))
        v.set_value(m, chern_number_oracle(m, oracle));
    return v;
}

// ---------------------------------------------------------------------------
// Positivity enumeration

std::vector<PositivityRow> positivity_scan(int k) {
    if (k < 2)
        throw PreconditionError("positivity_scan: k >= 2");
    std::vector<PositivityRow> out;
    for (const Partition& a : partitions_of(k + 1, k)) {
        PositivityRow row;
        row.tuple = a;
        row.value = closed_form_constant(a.parts(), k);
        row.positive = row.value > 0;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace chern
