#include "chern/families.hpp"

#include <functional>
#include <utility>

#include "chern/catalog.hpp"
#include "chern/errors.hpp"

namespace chern {

void DolgachevModel::check() const {
    if (w <= 0)
        throw PreconditionError("DolgachevModel: w = omega^2 must be positive");
    if (t == 0)
        throw PreconditionError("DolgachevModel: t = omega.G must be nonzero");
}

std::pair<RingPtr, ChernData> build_Yq(int q, int genus, const DolgachevModel& model) {
    model.check();
    if (q < 3 || q % 2 == 0)
        throw PreconditionError("build_Yq: q must be an odd integer >= 3");
    if (genus < 0)
        throw PreconditionError("build_Yq: genus >= 0");

    RingPtr surface = dolgachev_subring(model.w, model.t);
    RingPtr curve = curve_ring();
    RingPtr ring = product_ring(surface, curve);

    Rational fiber_euler(2 - 2 * genus);
    RingElement G = ring_symbol(ring, "G*1");
    RingElement F = ring_symbol(ring, "1*F");
    RingElement pt = ring_symbol(ring, "pt*1");
    RingElement GF = ring_symbol(ring, "G*F");
    RingElement ptF = ring_symbol(ring, "pt*F");

    RingElement c1 = G * Rational(q - 2) + F * fiber_euler;
    RingElement c2 = pt * Rational(DolgachevModel::c2) + GF * (fiber_euler * (q - 2));
    RingElement c3 = ptF * (fiber_euler * DolgachevModel::c2);
    return {ring, ChernData(ring, 3, {c1, c2, c3})};
}

BundleOnBase build_Eq(int q, int n, const DolgachevModel& model, int genus) {
    if (n < 4)
        throw PreconditionError("family requires n >= 4");
    auto [ring, tangent] = build_Yq(q, genus, model);
    int k = n - 2;
    RingElement c1 = ring_symbol(ring, "omega*1") + ring_symbol(ring, "1*F");
    std::vector<RingElement> classes{c1};
    for (int i = 2; i <= std::min(k, 3); ++i)
        classes.push_back(ring_zero(ring));
    return BundleOnBase(ring, std::move(tangent), ChernData(ring, k, std::move(classes)));
}

FamilyChernPolynomial family_chern(const Partition& m, int n, int genus,
                                   const DolgachevModel& model) {
    if (m.weight() != n)
        throw PreconditionError("family_chern: partition weight must equal n");
    Rational v3 = chern_number_pbundle(m, build_Eq(3, n, model, genus));
    Rational v5 = chern_number_pbundle(m, build_Eq(5, n, model, genus));
    Rational v7 = chern_number_pbundle(m, build_Eq(7, n, model, genus));

    FamilyChernPolynomial line;
    line.partition = m;
    line.slope = (v5 - v3) / 2;
    line.intercept = v3 - line.slope * 3;
    if (line.at(7) != v7)
        throw InvariantError("family_chern: values at q = 3, 5, 7 are not collinear");
    return line;
}

ChernVector family_chern_vector(int q, int n, int genus, const DolgachevModel& model) {
    return chern_vector_pbundle(build_Eq(q, n, model, genus));
}

AlphaGenerator alpha_generator(int n, const Rational& polarization) {
    if (n < 1)
        throw PreconditionError("alpha_generator: n >= 1");
    AlphaGenerator out;
    out.n = n;
    if (n == 1) {
        out.vector = ChernVector(1);
        out.vector.set_value(Partition{1}, 2);  // c_1[P^1]
        return out;
    }
    if (n == 2) {
        out.vector = ChernVector(2);
        out.vector.set_value(Partition{2}, 3);     // c_2[P^2]
        out.vector.set_value(Partition{1, 1}, 9);  // c_1^2[P^2]
        return out;
    }
    // P(O_A(1) + O_A^(n-2)) over an abelian surface: rank n-1, c_1 = theta
    RingPtr ring = abelian_surface_ring(polarization);
    int k = n - 1;
    std::vector<RingElement> classes{ring_symbol(ring, "theta"), ring_zero(ring)};
    BundleOnBase bundle(ring, abelian_surface_tangent(ring),
                        ChernData(ring, k, std::move(classes)));
    out.vector = chern_vector_oracle(bundle);
    out.bundle = std::move(bundle);
    return out;
}

ChernVector product_chern_vector(const ChernVector& v, const ChernVector& w) {
    int n1 = v.dimension(), n2 = w.dimension();
    ChernVector out(n1 + n2);

    for (const Partition& m : partitions_of(n1 + n2)) {
        const std::vector<int>& parts = m.parts();
        size_t p = parts.size();
        // split every part m_t = i_t + j_t; keep splittings with sum i = n1
        std::vector<int> left(p, 0);
        Rational total = 0;
        std::function<void(size_t, int)> rec = [&](size_t pos, int sum) {
            if (sum > n1)
                return;
            if (pos == p) {
                if (sum != n1)
                    return;
                std::vector<int> right(p);
                for (size_t t = 0; t < p; ++t)
                    right[t] = parts[t] - left[t];
                Rational lv = v.value(Partition(left));
                if (lv == 0)
                    return;
                total += lv * w.value(Partition(right));
                return;
            }
            for (int i = 0; i <= parts[pos]; ++i) {
                left[pos] = i;
                rec(pos + 1, sum + i);
            }
            left[pos] = 0;
        };
        rec(0, 0);
        out.set_value(m, total);
    }
    return out;
}

}  // namespace chern
