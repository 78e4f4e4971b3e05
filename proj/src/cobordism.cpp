#include "chern/cobordism.hpp"

#include <algorithm>

#include "chern/errors.hpp"

namespace chern {

ChernVector monomial_vector(const Partition& m, const Rational& polarization) {
    ChernVector product(0);
    product.set_value(Partition{}, 1);
    // alpha vectors for repeated parts are worth caching
    std::map<int, ChernVector> alphas;
    for (int part : m.parts()) {
        auto it = alphas.find(part);
        if (it == alphas.end())
            it = alphas.emplace(part, alpha_generator(part, polarization).vector).first;
        product = product_chern_vector(product, it->second);
    }
    return product;
}

CobordismSpace::CobordismSpace(int n, const Rational& polarization)
    : n_(n), polarization_(polarization) {
    if (n < 1)
        throw PreconditionError("CobordismSpace: n >= 1");
    basis_ = partitions_of(n);

    // alpha vectors once per part value, monomials as products
    std::map<int, ChernVector> alphas;
    for (int j = 1; j <= n; ++j)
        alphas.emplace(j, alpha_generator(j, polarization).vector);

    for (const Partition& m : basis_) {
        ChernVector row(0);
        row.set_value(Partition{}, 1);
        for (int part : m.parts())
            row = product_chern_vector(row, alphas.at(part));
        matrix_.push_back(row.dense(basis_));
    }

    if (rank(matrix_) != static_cast<int>(basis_.size()))
        throw InvariantError("CobordismSpace: monomial basis matrix is singular");
}

std::map<Partition, Rational, PartitionOrder> CobordismSpace::decompose(
    const ChernVector& v) const {
    if (v.dimension() != n_)
        throw PreconditionError("decompose: dimension mismatch");
    // coordinates x with sum_i x_i * row_i = v, i.e. M^T x = v
    size_t p = basis_.size();
    RatMatrix mt(p, RatVector(p));
    for (size_t r = 0; r < p; ++r)
        for (size_t c = 0; c < p; ++c)
            mt[c][r] = matrix_[r][c];
    auto x = solve(std::move(mt), v.dense(basis_));
    if (!x)
        throw InvariantError("decompose: singular system");  // precluded by the rank check
    std::map<Partition, Rational, PartitionOrder> out;
    for (size_t i = 0; i < p; ++i)
        if ((*x)[i] != 0)
            out[basis_[i]] = (*x)[i];
    return out;
}

ChernVector CobordismSpace::assemble(
    const std::map<Partition, Rational, PartitionOrder>& coords) const {
    ChernVector out(n_);
    for (const auto& [m, c] : coords) {
        auto it = std::find(basis_.begin(), basis_.end(), m);
        if (it == basis_.end())
            throw PreconditionError("assemble: coordinate on a non-basis partition");
        size_t row = static_cast<size_t>(it - basis_.begin());
        for (size_t col = 0; col < basis_.size(); ++col) {
            Rational add = c * matrix_[row][col];
            if (add != 0)
                out.set_value(basis_[col], out.value(basis_[col]) + add);
        }
    }
    return out;
}

namespace {

IdealSlice build_slice(int n, const Rational& polarization,
                       const std::vector<Partition>& generators) {
    IdealSlice out;
    out.n = n;
    out.generators = generators;
    RatMatrix rows;
    std::vector<Partition> order = partitions_of(n);
    for (const Partition& g : generators)
        rows.push_back(monomial_vector(g, polarization).dense(order));
    out.rank = rank(std::move(rows));
    return out;
}

}  // namespace

IdealSlice ideal_slice_I(int n, const Rational& polarization) {
    if (n < 0)
        throw PreconditionError("ideal_slice_I: n >= 0");
    std::vector<Partition> generators;
    for (const Partition& m : partitions_of(n))
        if (m.contains(1) && m.part(0) >= 3)
            generators.push_back(m);
    return build_slice(n, polarization, generators);
}

IdealSlice ideal_slice_J(int n, const Rational& polarization) {
    if (n < 0)
        throw PreconditionError("ideal_slice_J: n >= 0");
    std::vector<Partition> generators;
    for (const Partition& m : partitions_of(n)) {
        bool odd_geq_3 = false, even_geq_4 = false;
        for (int part : m.parts()) {
            if (part >= 3 && part % 2 == 1)
                odd_geq_3 = true;
            if (part >= 4 && part % 2 == 0)
                even_geq_4 = true;
        }
        if (odd_geq_3 || (m.contains(1) && even_geq_4))
            generators.push_back(m);
    }
    return build_slice(n, polarization, generators);
}

long ideal_I_rank_formula(int n) {
    return partition_count(n - 1) - (n + 1) / 2;
}

long span_upper_bound(int n) {
    return partition_count(n) - partition_count(n - 1) + (n + 1) / 2;
}

SpanReport span_report(int n) {
    if (n < 1)
        throw PreconditionError("span_report: n >= 1");
    SpanReport out;
    out.n = n;
    out.upper_bound = span_upper_bound(n);

    std::vector<Partition> order = partitions_of(n);
    RatMatrix chi_rows;
    for (const LinearFunctional& f : chi_functionals(n))
        chi_rows.push_back(f.dense(order));
    out.chi_dim = rank(chi_rows);

    RatMatrix all_rows = chi_rows;
    RatMatrix pont_rows;
    if (n % 2 == 0) {
        for (const LinearFunctional& f : pontryagin_functionals(n))
            pont_rows.push_back(f.dense(order));
        out.pontryagin_dim = rank(pont_rows);
        all_rows.insert(all_rows.end(), pont_rows.begin(), pont_rows.end());
    }
    out.sum_dim = rank(all_rows);
    if (n % 2 == 0)
        out.intersection_dim = out.chi_dim + out.pontryagin_dim - out.sum_dim;

    for (const Partition& m : order) {
        RatVector indicator(order.size(), Rational(0));
        for (size_t i = 0; i < order.size(); ++i)
            if (order[i] == m)
                indicator[i] = 1;
        if (in_row_span(chi_rows, indicator))
            out.chi_members.push_back(m);
        if (in_row_span(all_rows, indicator))
            out.chi_pont_members.push_back(m);
    }
    return out;
}

}  // namespace chern
