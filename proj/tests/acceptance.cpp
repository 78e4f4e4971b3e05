// Acceptance suite: every reproduction target is checked exactly, one
// pass/fail line per criterion. Returns the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chern/catalog.hpp"
#include "chern/cobordism.hpp"
#include "chern/families.hpp"
#include "chern/proj_bundle.hpp"
#include "test_support.hpp"

using namespace chern;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            if (detail.tellp() > 0)
                detail << "; ";
            detail << what;
        }
    }
};

// 1. Both Chern-number routes agree exactly on randomized bundles.
bool criterion_oracle_equivalence(Check& c) {
    test::RandomBundles gen(1);
    auto start = std::chrono::steady_clock::now();
    for (int trial = 0; trial < 200; ++trial) {
        BundleOnBase b = gen.next(6);
        OracleRing oracle = pbundle_oracle_ring(b);
        c.expect(ring_validate(*oracle.ring).ok, "oracle ring failed validation");
        for (const Partition& m : partitions_of(b.total_dimension()))
            c.expect(chern_number_pbundle(m, b) == chern_number_oracle(m, oracle),
                     "route mismatch at trial " + std::to_string(trial) + ", " + m.str());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 60.0, "exceeded the 60 s budget");
    c.detail << "200 bundles, " << seconds << " s";
    return c.ok;
}

// 2. Closed forms equal the enumeration over symbolic Chern data.
bool criterion_closed_forms(Check& c) {
    for (int k = 2; k <= 6; ++k)
        for (int weight = k - 1; weight <= k + 1; ++weight)
            for (const Partition& m : partitions_of(weight, k)) {
                WeightedTuple a(m.parts());
                c.expect(f_symbolic(a, k) == f_closed_form_symbolic(a, k),
                         "symbolic mismatch at k=" + std::to_string(k) + ", a=(" + a.str() + ")");
            }
    // and through the ring-level operations, over generic witness data
    RingPtr witness = product_ring(projective_space_ring(2), projective_space_ring(2));
    ChernData tangent(witness, 4, {});
    for (int k = 2; k <= 6; ++k) {
        std::vector<RingElement> classes = {
            ring_symbol(witness, "h*1") + ring_symbol(witness, "1*h"),
            ring_symbol(witness, "h2*1"),
            ring_symbol(witness, "h2*h"),
            ring_symbol(witness, "h2*h2")};
        classes.resize(static_cast<size_t>(std::min(k, 4)));
        BundleOnBase b(witness, tangent, ChernData(witness, k, std::move(classes)));
        for (int weight = k - 1; weight <= k + 1; ++weight)
            for (const Partition& m : partitions_of(weight, k)) {
                WeightedTuple a(m.parts());
                c.expect(f_closed_form(a, b) == f_class(a, b),
                         "ring mismatch at k=" + std::to_string(k) + ", a=(" + a.str() + ")");
            }
    }
    return c.ok;
}

// 3. The weight-(k+1) constant is nonnegative, positive iff all parts < k.
bool criterion_positivity(Check& c) {
    for (int k = 2; k <= 12; ++k)
        for (const PositivityRow& row : positivity_scan(k)) {
            c.expect(row.value >= 0,
                     "negative value at k=" + std::to_string(k) + ", a=" + row.tuple.str());
            bool all_below = row.tuple.part(0) < k;
            c.expect(row.positive == all_below,
                     "positivity pattern at k=" + std::to_string(k) + ", a=" + row.tuple.str());
        }
    return c.ok;
}

// 4. Slope pattern of the unboundedness theorem, and p_2 rigidity.
bool criterion_slopes(Check& c) {
    auto start = std::chrono::steady_clock::now();
    DolgachevModel model;
    for (int n = 4; n <= 7; ++n)
        for (const Partition& m : partitions_of(n)) {
            bool expect_nonzero;
            if (n == 4)
                expect_nonzero = (m == Partition{1, 1, 1, 1}) || (m == Partition{2, 1, 1});
            else
                expect_nonzero = m.part(0) <= n - 2;
            FamilyChernPolynomial line = family_chern(m, n, 0, model);
            c.expect((line.slope != 0) == expect_nonzero,
                     "slope pattern at n=" + std::to_string(n) + ", m=(" + m.str() + ")");
        }
    for (const Partition& m : {Partition{2, 2}, Partition{3, 1}, Partition{4}})
        c.expect(family_chern(m, 4, 0, model).slope == 0, "expected zero slope at " + m.str());

    LinearFunctional p2 = pontryagin_functionals(4)[0];
    Rational v3 = apply(p2, family_chern_vector(3, 4, 0, model));
    Rational v5 = apply(p2, family_chern_vector(5, 4, 0, model));
    Rational v7 = apply(p2, family_chern_vector(7, 4, 0, model));
    c.expect(v3 == v5 && v5 == v7, "p_2(X_q) varies with q");

    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(seconds < 120.0, "exceeded the 120 s budget");
    c.detail << seconds << " s";
    return c.ok;
}

// 5. Family Chern numbers are degree-<=1 polynomials in q.
bool criterion_q_linearity(Check& c) {
    DolgachevModel model;
    for (int n = 4; n <= 7; ++n) {
        std::map<int, ChernVector> at_q;
        for (int q : {3, 5, 7, 9})
            at_q.emplace(q, family_chern_vector(q, n, 0, model));
        for (const Partition& m : partitions_of(n)) {
            Rational slope = (at_q.at(5).value(m) - at_q.at(3).value(m)) / 2;
            Rational intercept = at_q.at(3).value(m) - slope * 3;
            for (int q : {7, 9})
                c.expect(at_q.at(q).value(m) == slope * q + intercept,
                         "nonlinear at n=" + std::to_string(n) + ", m=(" + m.str() + ")");
        }
    }
    return c.ok;
}

// 6. X_q = g_n(q) alpha_1 alpha_{n-1} + (q-independent rest).
bool criterion_decomposition(Check& c) {
    DolgachevModel model;
    for (int n = 4; n <= 8; ++n) {
        CobordismSpace space(n);
        std::map<int, std::map<Partition, Rational, PartitionOrder>> coords;
        for (int q : {3, 5, 7})
            coords[q] = space.decompose(family_chern_vector(q, n, 0, model));
        Partition moving{n - 1, 1};
        for (const Partition& m : space.basis()) {
            if (m == moving)
                continue;
            c.expect(coords[3][m] == coords[5][m] && coords[5][m] == coords[7][m],
                     "coordinate " + m.str() + " varies at n=" + std::to_string(n));
        }
        Rational step = coords[5][moving] - coords[3][moving];
        c.expect(step > 0, "not strictly increasing at n=" + std::to_string(n));
        c.expect(coords[7][moving] - coords[5][moving] == step,
                 "not affine at n=" + std::to_string(n));
    }
    return c.ok;
}

// 7. Ideal dimension count and the complementary upper bound.
bool criterion_ideal_rank(Check& c) {
    for (int n = 1; n <= 12; ++n) {
        IdealSlice slice = ideal_slice_I(n);
        c.expect(slice.rank == ideal_I_rank_formula(n),
                 "rank formula fails at n=" + std::to_string(n));
        c.expect(slice.rank + span_upper_bound(n) == partition_count(n),
                 "bound is not complementary at n=" + std::to_string(n));
    }
    c.expect(span_upper_bound(4) == 4, "bound at n=4 is not 4");
    SpanReport r4 = span_report(4);
    c.expect(r4.sum_dim == 4, "chi+Pontryagin span dimension at n=4 is not 4");
    return c.ok;
}

// 8. The alpha-monomial basis is a basis; Milnor numbers certify generators.
bool criterion_basis_integrity(Check& c) {
    for (int n = 1; n <= 10; ++n) {
        try {
            CobordismSpace space(n);  // the constructor verifies full rank
            c.expect(static_cast<long>(space.basis().size()) == partition_count(n),
                     "basis size at n=" + std::to_string(n));
        } catch (const InvariantError&) {
            c.expect(false, "singular monomial matrix at n=" + std::to_string(n));
        }
        c.expect(apply(milnor_s(n), alpha_generator(n).vector) != 0,
                 "s_n(alpha_n) = 0 at n=" + std::to_string(n));
    }
    return c.ok;
}

// 9. Genus machinery: Noether's formula, signature, Euler specialization,
//    and the dimension-4 chi-span basis.
bool criterion_genus(Check& c) {
    auto chi2 = chi_functionals(2);
    ChernPolynomial noether(2);
    noether.add_term(Partition{1, 1}, Rational(1, 12));
    noether.add_term(Partition{2}, Rational(1, 12));
    c.expect(chi2[0] == noether, "chi^0 != (c_1^2 + c_2)/12");
    c.expect(chi2[0] + chi2[1] + chi2[2] == pontryagin_functionals(2)[0] * Rational(1, 3),
             "chi_y(1) != p_1/3 at n=2");

    for (int n = 1; n <= 6; ++n) {
        auto chi = chi_functionals(n);
        ChernPolynomial alternating(n);
        for (int p = 0; p <= n; ++p)
            alternating += chi[static_cast<size_t>(p)] * Rational(p % 2 == 0 ? 1 : -1);
        c.expect(alternating == euler_functional(n),
                 "chi_y(-1) != c_n at n=" + std::to_string(n));
    }

    std::vector<Partition> order = partitions_of(4);
    RatMatrix chi_rows;
    for (const auto& f : chi_functionals(4))
        chi_rows.push_back(f.dense(order));
    ChernPolynomial special(4);
    special.add_term(Partition{2, 2}, 3);
    special.add_term(Partition{2, 1, 1}, 4);
    special.add_term(Partition{1, 1, 1, 1}, -1);
    RatMatrix basis_rows{ChernPolynomial::monomial(Partition{4}).dense(order),
                         ChernPolynomial::monomial(Partition{3, 1}).dense(order),
                         special.dense(order)};
    c.expect(rank(chi_rows) == 3, "chi-span dimension at n=4 is not 3");
    c.expect(rank(basis_rows) == 3, "stated basis is not independent");
    for (const RatVector& row : basis_rows)
        c.expect(in_row_span(chi_rows, row), "stated basis vector outside the chi-span");
    c.expect(!in_row_span(chi_rows, ChernPolynomial::monomial(Partition{2, 2}).dense(order)),
             "c_2^2 lies in the chi-span");
    return c.ok;
}

// 10. Span membership of single Chern numbers, and the signature line.
bool criterion_spans(Check& c) {
    for (int n = 1; n <= 8; ++n) {
        SpanReport r = span_report(n);
        std::vector<Partition> expected{Partition{n}};
        if (n >= 2)
            expected.push_back(Partition{n - 1, 1});
        c.expect(r.chi_members == expected, "chi members at n=" + std::to_string(n));
        if (n == 4) {
            std::vector<Partition> four{Partition{4}, Partition{3, 1}, Partition{2, 2}};
            c.expect(r.chi_pont_members == four, "chi+Pontryagin members at n=4");
        }
        if (n == 4 || n == 6 || n == 8)
            c.expect(r.intersection_dim == 1,
                     "signature line dimension at n=" + std::to_string(n));
    }
    return c.ok;
}

// 11. I^n inside J^n with equality exactly at n=4; chi and Pontryagin
//     functionals annihilate the J generators.
bool criterion_ideal_comparison(Check& c) {
    for (int n = 3; n <= 12; ++n) {
        IdealSlice i_slice = ideal_slice_I(n);
        IdealSlice j_slice = ideal_slice_J(n);
        std::vector<Partition> order = partitions_of(n);
        RatMatrix stacked;
        for (const Partition& g : j_slice.generators)
            stacked.push_back(monomial_vector(g).dense(order));
        int j_rank = rank(stacked);
        for (const Partition& g : i_slice.generators)
            stacked.push_back(monomial_vector(g).dense(order));
        c.expect(rank(stacked) == j_rank, "I not inside J at n=" + std::to_string(n));
        c.expect((i_slice.rank == j_slice.rank) == (n == 4),
                 "equality pattern at n=" + std::to_string(n));
    }
    for (int n = 3; n <= 8; ++n) {
        auto chi = chi_functionals(n);
        std::vector<LinearFunctional> pont;
        if (n % 2 == 0)
            pont = pontryagin_functionals(n);
        for (const Partition& g : ideal_slice_J(n).generators) {
            ChernVector v = monomial_vector(g);
            for (const auto& f : chi)
                c.expect(apply(f, v) == 0,
                         "chi functional nonzero on " + g.str() + " at n=" + std::to_string(n));
            for (const auto& f : pont)
                c.expect(apply(f, v) == 0,
                         "Pontryagin nonzero on " + g.str() + " at n=" + std::to_string(n));
        }
    }
    return c.ok;
}

struct Criterion {
    int id;
    std::string title;
    std::function<bool(Check&)> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "oracle equivalence of the two Chern-number routes", criterion_oracle_equivalence},
        {2, "closed forms of f at weights k-1, k, k+1", criterion_closed_forms},
        {3, "positivity of the weight-(k+1) constant, k <= 12", criterion_positivity},
        {4, "slope pattern of the family Chern numbers", criterion_slopes},
        {5, "exact q-linearity of family Chern numbers", criterion_q_linearity},
        {6, "q-dependence confined to the alpha_1 alpha_{n-1} coordinate", criterion_decomposition},
        {7, "ideal dimension count and upper bound", criterion_ideal_rank},
        {8, "alpha-monomial basis integrity and Milnor numbers", criterion_basis_integrity},
        {9, "genus machinery identities", criterion_genus},
        {10, "span membership of single Chern numbers", criterion_spans},
        {11, "ideal comparison and annihilation", criterion_ideal_comparison},
    };

    int failed = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        bool ok = false;
        std::string error;
        try {
            ok = criterion.run(check);
        } catch (const std::exception& e) {
            ok = false;
            error = e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
                  << criterion.title;
        std::string detail = check.detail.str();
        if (!error.empty())
            detail = (detail.empty() ? "" : detail + "; ") + ("exception: " + error);
        if (!detail.empty())
            std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok)
            ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria FAILED")
              << "\n";
    return failed;
}
