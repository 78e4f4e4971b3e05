#include "chern/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace chern {

// ---------------------------------------------------------------------------
// RingElement

Rational RingElement::coefficient(int symbol_index) const {
    auto it = coeffs_.find(symbol_index);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void RingElement::add_term(int symbol_index, const Rational& c) {
    if (c == 0)
        return;
    Rational& slot = coeffs_[symbol_index];
    slot += c;
    if (slot == 0)
        coeffs_.erase(symbol_index);
}

RingElement RingElement::homogeneous_component(int degree) const {
    RingElement out(ring_);
    for (const auto& [i, c] : coeffs_)
        if (ring_->degree(i) == degree)
            out.add_term(i, c);
    return out;
}

bool RingElement::is_homogeneous(int degree) const {
    for (const auto& [i, c] : coeffs_) {
        (void)c;
        if (ring_->degree(i) != degree)
            return false;
    }
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    if (!ring_)
        ring_ = o.ring_;
    else if (o.ring_ && o.ring_ != ring_)
        throw PreconditionError("presentation mismatch");
    for (const auto& [i, c] : o.coeffs_)
        add_term(i, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    if (!ring_)
        ring_ = o.ring_;
    else if (o.ring_ && o.ring_ != ring_)
        throw PreconditionError("presentation mismatch");
    for (const auto& [i, c] : o.coeffs_)
        add_term(i, -c);
    return *this;
}

RingElement& RingElement::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [i, c] : coeffs_)
        c *= s;
    return *this;
}

RingElement RingElement::operator+(const RingElement& o) const {
    RingElement out = *this;
    out += o;
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const {
    RingElement out = *this;
    out -= o;
    return out;
}

RingElement RingElement::operator-() const {
    RingElement out = *this;
    out *= Rational(-1);
    return out;
}

RingElement RingElement::operator*(const Rational& s) const {
    RingElement out = *this;
    out *= s;
    return out;
}

bool RingElement::operator==(const RingElement& o) const {
    return coeffs_ == o.coeffs_;
}

std::string RingElement::str() const {
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        const std::string& name = ring_->symbol(i).name;
        bool is_unit = (i == ring_->unit_index());
        if (mag != 1 || is_unit) {
            out << to_string(mag);
            if (!is_unit)
                out << "*";
        }
        if (!is_unit)
            out << name;
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Validation and construction

namespace {

struct CompiledTable {
    std::vector<std::vector<SparseVec>> table;
    std::string error;  // empty when compilation succeeded
};

// Builds the full symmetric table from the description: unit products are
// identities, unlisted non-unit pairs are zero. Reports conflicting
// duplicate entries.
CompiledTable compile_table(const RingDescription& d, const std::map<std::string, int>& index,
                            int unit) {
    CompiledTable out;
    size_t b = d.basis.size();
    out.table.assign(b, std::vector<SparseVec>(b));
    std::vector<std::vector<bool>> listed(b, std::vector<bool>(b, false));

    for (size_t i = 0; i < b; ++i) {
        size_t u = static_cast<size_t>(unit);
        SparseVec identity{{static_cast<int>(i), Rational(1)}};
        out.table[u][i] = identity;
        out.table[i][u] = identity;
    }

    for (const ProductEntry& entry : d.products) {
        auto li = index.find(entry.left);
        auto ri = index.find(entry.right);
        if (li == index.end() || ri == index.end()) {
            out.error = "product references unknown symbol '" +
                        (li == index.end() ? entry.left : entry.right) + "'";
            return out;
        }
        std::map<int, Rational> acc;
        for (const ProductTerm& term : entry.result) {
            auto ti = index.find(term.symbol);
            if (ti == index.end()) {
                out.error = "product result references unknown symbol '" + term.symbol + "'";
                return out;
            }
            acc[ti->second] += term.coeff;
        }
        SparseVec value;
        for (const auto& [s, c] : acc)
            if (c != 0)
                value.emplace_back(s, c);

        size_t l = static_cast<size_t>(li->second);
        size_t r = static_cast<size_t>(ri->second);
        auto assign = [&](size_t a, size_t bb) -> bool {
            if (listed[a][bb]) {
                if (out.table[a][bb] != value) {
                    out.error = "conflicting products for " + d.basis[a].name + " * " +
                                d.basis[bb].name;
                    return false;
                }
                return true;
            }
            // an explicit unit product must agree with the unit law; checked later
            listed[a][bb] = true;
            out.table[a][bb] = value;
            return true;
        };
        if (!assign(l, r) || !assign(r, l))
            return out;
    }
    return out;
}

ValidationReport fail(const std::string& message) {
    return ValidationReport{false, message};
}

SparseVec mul_sparse(const std::vector<std::vector<SparseVec>>& table, const SparseVec& a,
                     const SparseVec& b) {
    std::map<int, Rational> acc;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            Rational f = ci * cj;
            for (const auto& [s, cs] : table[static_cast<size_t>(i)][static_cast<size_t>(j)])
                acc[s] += f * cs;
        }
    SparseVec out;
    for (const auto& [s, c] : acc)
        if (c != 0)
            out.emplace_back(s, c);
    return out;
}

ValidationReport validate_compiled(const RingDescription& d, int unit,
                                   const std::vector<std::vector<SparseVec>>& table) {
    size_t b = d.basis.size();
    int top_degree = 2 * d.dimension;

    // unit law (covers descriptions that list unit products explicitly)
    for (size_t i = 0; i < b; ++i) {
        SparseVec expect{{static_cast<int>(i), Rational(1)}};
        if (table[static_cast<size_t>(unit)][i] != expect)
            return fail("unit law fails at " + d.basis[i].name);
    }

    // commutativity (compile_table fills both orders, but entries may list both)
    for (size_t i = 0; i < b; ++i)
        for (size_t j = i + 1; j < b; ++j)
            if (table[i][j] != table[j][i])
                return fail("commutativity fails at " + d.basis[i].name + " * " +
                            d.basis[j].name);

    // degree additivity; products above the top degree must vanish
    for (size_t i = 0; i < b; ++i)
        for (size_t j = 0; j < b; ++j) {
            int want = d.basis[i].degree + d.basis[j].degree;
            for (const auto& [s, c] : table[i][j]) {
                (void)c;
                if (want > top_degree)
                    return fail("degree additivity: " + d.basis[i].name + " * " +
                                d.basis[j].name + " must vanish above top degree");
                if (d.basis[static_cast<size_t>(s)].degree != want)
                    return fail("degree additivity fails at " + d.basis[i].name + " * " +
                                d.basis[j].name);
            }
        }

    // associativity on all basis triples
    for (size_t i = 0; i < b; ++i)
        for (size_t j = i; j < b; ++j) {
            const SparseVec& ij = table[i][j];
            for (size_t k = j; k < b; ++k) {
                SparseVec left = mul_sparse(table, ij, {{static_cast<int>(k), Rational(1)}});
                SparseVec right =
                    mul_sparse(table, {{static_cast<int>(i), Rational(1)}}, table[j][k]);
                if (left != right)
                    return fail("associativity fails at (" + d.basis[i].name + ", " +
                                d.basis[j].name + ", " + d.basis[k].name + ")");
            }
        }

    return ValidationReport{};
}

}  // namespace

ValidationReport ring_validate(const RingDescription& d) {
    if (d.dimension < 0)
        return fail("negative dimension");
    if (d.basis.empty())
        return fail("empty basis");

    std::map<std::string, int> index;
    for (size_t i = 0; i < d.basis.size(); ++i) {
        if (d.basis[i].name.empty())
            return fail("empty symbol name");
        if (!index.emplace(d.basis[i].name, static_cast<int>(i)).second)
            return fail("duplicate symbol '" + d.basis[i].name + "'");
    }

    int top_degree = 2 * d.dimension;
    int unit = -1, top = -1, units = 0, tops = 0;
    for (size_t i = 0; i < d.basis.size(); ++i) {
        int deg = d.basis[i].degree;
        if (deg < 0 || deg > top_degree || deg % 2 != 0)
            return fail("symbol '" + d.basis[i].name + "' has degree outside even 0..2n");
        if (deg == 0) {
            unit = static_cast<int>(i);
            ++units;
        }
        if (deg == top_degree) {
            top = static_cast<int>(i);
            ++tops;
        }
    }
    if (units != 1)
        return fail("expected exactly one degree-0 symbol (the unit)");
    if (tops != 1)
        return fail("expected exactly one top-degree symbol");
    auto ti = index.find(d.top);
    if (ti == index.end() || ti->second != top)
        return fail("declared top symbol does not match the unique top-degree symbol");

    CompiledTable compiled = compile_table(d, index, unit);
    if (!compiled.error.empty())
        return fail(compiled.error);
    return validate_compiled(d, unit, compiled.table);
}

ValidationReport ring_validate(const RingPresentation& p) {
    return ring_validate(p.description());
}

RingPtr RingPresentation::create(const RingDescription& d) {
    ValidationReport report = ring_validate(d);
    if (!report.ok)
        throw InvariantError("invalid ring presentation: " + report.violation);

    auto p = std::shared_ptr<RingPresentation>(new RingPresentation());
    p->dimension_ = d.dimension;
    p->basis_ = d.basis;
    for (size_t i = 0; i < d.basis.size(); ++i) {
        p->index_[d.basis[i].name] = static_cast<int>(i);
        if (d.basis[i].degree == 0)
            p->unit_ = static_cast<int>(i);
        if (d.basis[i].degree == 2 * d.dimension)
            p->top_ = static_cast<int>(i);
    }
    p->table_ = compile_table(d, p->index_, p->unit_).table;
    return p;
}

int RingPresentation::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw ParseError("unknown symbol '" + name + "'");
    return it->second;
}

bool RingPresentation::has_symbol(const std::string& name) const {
    return index_.count(name) > 0;
}

RingDescription RingPresentation::description() const {
    RingDescription d;
    d.dimension = dimension_;
    d.basis = basis_;
    d.top = basis_[static_cast<size_t>(top_)].name;
    for (size_t i = 0; i < basis_.size(); ++i)
        for (size_t j = i; j < basis_.size(); ++j) {
            if (static_cast<int>(i) == unit_ || static_cast<int>(j) == unit_)
                continue;
            const SparseVec& value = table_[i][j];
            if (value.empty())
                continue;
            ProductEntry entry;
            entry.left = basis_[i].name;
            entry.right = basis_[j].name;
            for (const auto& [s, c] : value)
                entry.result.push_back({basis_[static_cast<size_t>(s)].name, c});
            d.products.push_back(std::move(entry));
        }
    return d;
}

// ---------------------------------------------------------------------------
// Ring operations

RingElement ring_zero(const RingPtr& ring) {
    return RingElement(ring);
}

RingElement ring_unit(const RingPtr& ring) {
    RingElement e(ring);
    e.add_term(ring->unit_index(), 1);
    return e;
}

RingElement ring_symbol(const RingPtr& ring, const std::string& name) {
    RingElement e(ring);
    e.add_term(ring->index_of(name), 1);
    return e;
}

RingElement ring_symbol(const RingPtr& ring, int index) {
    RingElement e(ring);
    e.add_term(index, 1);
    return e;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    if (!a.ring() || !b.ring())
        throw PreconditionError("multiplying elements without a presentation");
    if (a.ring() != b.ring())
        throw PreconditionError("presentation mismatch");
    const RingPresentation& ring = *a.ring();
    RingElement out(a.ring());
    for (const auto& [i, ci] : a.coefficients())
        for (const auto& [j, cj] : b.coefficients()) {
            Rational f = ci * cj;
            for (const auto& [s, cs] : ring.product(i, j))
                out.add_term(s, f * cs);
        }
    return out;
}

Rational integrate(const RingElement& a) {
    if (!a.ring())
        return 0;
    return a.coefficient(a.ring()->top_index());
}

RingPtr product_ring(const RingPtr& p, const RingPtr& q) {
    RingDescription d;
    d.dimension = p->dimension() + q->dimension();
    int bp = p->size(), bq = q->size();
    auto pair_index = [bq](int i, int j) { return i * bq + j; };
    auto pair_name = [&](int i, int j) {
        return p->symbol(i).name + "*" + q->symbol(j).name;
    };

    for (int i = 0; i < bp; ++i)
        for (int j = 0; j < bq; ++j)
            d.basis.push_back({pair_name(i, j), p->degree(i) + q->degree(j)});
    d.top = pair_name(p->top_index(), q->top_index());

    int top_degree = 2 * d.dimension;
    for (int i1 = 0; i1 < bp; ++i1)
        for (int j1 = 0; j1 < bq; ++j1)
            for (int i2 = i1; i2 < bp; ++i2)
                for (int j2 = (i2 == i1 ? j1 : 0); j2 < bq; ++j2) {
                    int a = pair_index(i1, j1), b = pair_index(i2, j2);
                    if (d.basis[static_cast<size_t>(a)].degree == 0 ||
                        d.basis[static_cast<size_t>(b)].degree == 0)
                        continue;  // unit rows are implied
                    if (d.basis[static_cast<size_t>(a)].degree +
                            d.basis[static_cast<size_t>(b)].degree > top_degree)
                        continue;
                    ProductEntry entry;
                    entry.left = d.basis[static_cast<size_t>(a)].name;
                    entry.right = d.basis[static_cast<size_t>(b)].name;
                    for (const auto& [s1, c1] : p->product(i1, i2))
                        for (const auto& [s2, c2] : q->product(j1, j2)) {
                            Rational c = c1 * c2;
                            if (c != 0)
                                entry.result.push_back({pair_name(s1, s2), c});
                        }
                    if (!entry.result.empty())
                        d.products.push_back(std::move(entry));
                }
    return RingPresentation::create(d);
}

bool same_structure(const RingPresentation& a, const RingPresentation& b) {
    if (a.dimension() != b.dimension() || a.size() != b.size())
        return false;
    if (a.unit_index() != b.unit_index() || a.top_index() != b.top_index())
        return false;
    for (int i = 0; i < a.size(); ++i)
        if (a.degree(i) != b.degree(i))
            return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.product(i, j) != b.product(i, j))
                return false;
    return true;
}

}  // namespace chern
