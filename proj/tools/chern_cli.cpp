// Command-line front end: every command is a thin shell over the library.
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chern/catalog.hpp"
#include "chern/cobordism.hpp"
#include "chern/errors.hpp"
#include "chern/families.hpp"
#include "chern/io.hpp"
#include "chern/proj_bundle.hpp"

namespace {

using namespace chern;

struct Options {
    std::string format = "table";  // "table" or "json"
    std::string model_file;
    std::string ring_name;
    std::string bundle_file;
    std::string vector_file;
    std::string partition_text;
    std::string tuple_text;
    bool symbolic = false;
    int n = 0;
    int n_max = 8;
    int k = 0;
    int q = 3;
    int genus = -1;  // -1: take the model file's value (default 0)
    int max_degree = -1;
};

ModelParams effective_model(const Options& opt) {
    ModelParams params;
    if (!opt.model_file.empty())
        params = load_model_file(opt.model_file);
    if (opt.genus >= 0)
        params.genus = opt.genus;
    return params;
}

void emit(const Options& opt, const json& j, const std::string& table) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << table;
}

std::string partition_list(const std::vector<Partition>& ms) {
    std::string out;
    for (size_t i = 0; i < ms.size(); ++i) {
        if (i)
            out += ", ";
        out += ms[i].monomial_str();
    }
    return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------

int run_validate(const Options& opt) {
    RingDescription d = load_ring_description(opt.ring_name);
    ValidationReport report = ring_validate(d);
    json j{{"ring", opt.ring_name}, {"ok", report.ok}, {"violation", report.violation}};
    std::string table = report.ok ? "pass\n" : "fail: " + report.violation + "\n";
    emit(opt, j, table);
    return report.ok ? 0 : 3;
}

int run_segre(const Options& opt) {
    BundleOnBase bundle = load_bundle_file(opt.bundle_file);
    int max_degree = opt.max_degree >= 0 ? opt.max_degree : bundle.base_dimension();
    std::vector<RingElement> alpha = segre(bundle.bundle, max_degree);
    json j{{"bundle", opt.bundle_file}, {"classes", json::array()}};
    std::string table;
    for (size_t i = 0; i < alpha.size(); ++i) {
        j["classes"].push_back(element_to_json(alpha[i]));
        table += "alpha_" + std::to_string(i) + " = " + alpha[i].str() + "\n";
    }
    emit(opt, j, table);
    return 0;
}

int run_f(const Options& opt) {
    WeightedTuple tuple = parse_tuple(opt.tuple_text);
    if (opt.symbolic && !opt.bundle_file.empty())
        throw ParseError("f: --symbolic and --bundle are exclusive");
    if (!opt.symbolic && opt.bundle_file.empty())
        throw ParseError("f: give either --symbolic or --bundle");
    if (opt.symbolic) {
        if (opt.k < 1)
            throw ParseError("f --symbolic requires --k >= 1");
        ChernPolynomial value = f_symbolic(tuple, opt.k);
        json j{{"k", opt.k},
               {"tuple", tuple.str()},
               {"class", value.str("e")},
               {"terms", functional_to_json(value)}};
        emit(opt, j, value.str("e") + "\n");
        return 0;
    }
    BundleOnBase bundle = load_bundle_file(opt.bundle_file);
    RingElement value = f_class(tuple, bundle);
    json j{{"k", bundle.rank()}, {"tuple", tuple.str()}, {"class", element_to_json(value)}};
    emit(opt, j, value.str() + "\n");
    return 0;
}

int run_pbundle(const Options& opt) {
    BundleOnBase bundle = load_bundle_file(opt.bundle_file);
    Partition m = parse_partition(opt.partition_text);
    Rational value = chern_number_pbundle(m, bundle);
    json j{{"partition", partition_to_json(m)}, {"value", rational_to_json(value)}};
    emit(opt, j, m.monomial_str() + " = " + to_string(value) + "\n");
    return 0;
}

int run_oracle_check(const Options& opt) {
    BundleOnBase bundle = load_bundle_file(opt.bundle_file);
    OracleRing oracle = pbundle_oracle_ring(bundle);
    bool all_match = true;
    json rows = json::array();
    std::string table;
    for (const Partition& m : partitions_of(bundle.total_dimension())) {
        Rational formula = chern_number_pbundle(m, bundle);
        Rational direct = chern_number_oracle(m, oracle);
        bool match = formula == direct;
        all_match = all_match && match;
        rows.push_back({{"partition", partition_to_json(m)},
                        {"pbundle", rational_to_json(formula)},
                        {"oracle", rational_to_json(direct)},
                        {"match", match}});
        table += m.monomial_str() + ": pbundle " + to_string(formula) + ", oracle " +
                 to_string(direct) + (match ? "" : "  MISMATCH") + "\n";
    }
    json j{{"bundle", opt.bundle_file}, {"all_match", all_match}, {"rows", rows}};
    table += all_match ? "all partitions match\n" : "MISMATCH DETECTED\n";
    emit(opt, j, table);
    return all_match ? 0 : 3;
}

int run_positivity(const Options& opt) {
    std::vector<PositivityRow> rows = positivity_scan(opt.k);
    json j{{"k", opt.k}, {"rows", json::array()}};
    std::string table = "partition   value   class\n";
    bool none_negative = true;
    for (const PositivityRow& row : rows) {
        std::string cls = row.positive ? "positive" : (row.value == 0 ? "zero" : "NEGATIVE");
        none_negative = none_negative && row.value >= 0;
        j["rows"].push_back({{"partition", partition_to_json(row.tuple)},
                             {"value", rational_to_json(row.value)},
                             {"class", cls}});
        table += row.tuple.str() + "   " + to_string(row.value) + "   " + cls + "\n";
    }
    j["none_negative"] = none_negative;
    emit(opt, j, table);
    return none_negative ? 0 : 3;
}

int run_family(const Options& opt) {
    ModelParams params = effective_model(opt);
    Partition m = parse_partition(opt.partition_text);
    FamilyChernPolynomial line = family_chern(m, opt.n, params.genus, params.model);
    json j{{"n", opt.n},
           {"partition", partition_to_json(m)},
           {"slope", rational_to_json(line.slope)},
           {"intercept", rational_to_json(line.intercept)}};
    emit(opt, j,
         m.monomial_str() + "(X_q): slope " + to_string(line.slope) + ", intercept " +
             to_string(line.intercept) + "\n");
    return 0;
}

int run_decompose(const Options& opt) {
    ModelParams params = effective_model(opt);
    ChernVector v;
    std::string label;
    if (!opt.vector_file.empty()) {
        v = chern_vector_from_json(parse_json_file(opt.vector_file));
        label = opt.vector_file;
    } else {
        v = family_chern_vector(opt.q, opt.n, params.genus, params.model);
        label = "X_" + std::to_string(opt.q);
    }
    CobordismSpace space(v.dimension(), params.polarization);
    auto coords = space.decompose(v);
    json j{{"vector", label}, {"n", v.dimension()}, {"coordinates", json::array()}};
    std::string table = "decomposition of " + label + " over the alpha-monomial basis:\n";
    for (const Partition& m : space.basis()) {
        auto it = coords.find(m);
        Rational c = it == coords.end() ? Rational(0) : it->second;
        j["coordinates"].push_back(
            {{"partition", partition_to_json(m)}, {"value", rational_to_json(c)}});
        table += "  " + m.monomial_str("alpha") + ": " + to_string(c) + "\n";
    }
    emit(opt, j, table);
    return 0;
}

int run_ideals(const Options& opt) {
    ModelParams params = effective_model(opt);
    IdealSlice i_slice = ideal_slice_I(opt.n, params.polarization);
    IdealSlice j_slice = ideal_slice_J(opt.n, params.polarization);
    long formula = ideal_I_rank_formula(opt.n);

    // containment of the slices, by ranks of stacked generator vectors
    std::vector<Partition> order = partitions_of(opt.n);
    RatMatrix stacked;
    for (const Partition& g : j_slice.generators)
        stacked.push_back(monomial_vector(g, params.polarization).dense(order));
    for (const Partition& g : i_slice.generators)
        stacked.push_back(monomial_vector(g, params.polarization).dense(order));
    int union_rank = rank(stacked);
    bool subset = union_rank == j_slice.rank;
    bool equal = subset && i_slice.rank == j_slice.rank;

    json j{{"n", opt.n},
           {"I_rank", i_slice.rank},
           {"formula", formula},
           {"match", static_cast<long>(i_slice.rank) == formula},
           {"J_rank", j_slice.rank},
           {"I_subset_of_J", subset},
           {"equal", equal},
           {"upper_bound", span_upper_bound(opt.n)}};
    std::string table = "dim I^" + std::to_string(opt.n) + " = " + std::to_string(i_slice.rank) +
                        " (formula " + std::to_string(formula) + ")\n" + "dim J^" +
                        std::to_string(opt.n) + " = " + std::to_string(j_slice.rank) + "\n" +
                        "I in J: " + (subset ? "yes" : "NO") +
                        ", equal: " + (equal ? "yes" : "no") + "\n" +
                        "upper bound p(n)-p(n-1)+floor((n+1)/2) = " +
                        std::to_string(span_upper_bound(opt.n)) + "\n";
    emit(opt, j, table);
    return 0;
}

json span_to_json(const SpanReport& r) {
    json j{{"n", r.n}, {"chi_dim", r.chi_dim}};
    if (r.n % 2 == 0) {
        j["pontryagin_dim"] = r.pontryagin_dim;
        j["sum_dim"] = r.sum_dim;
        j["intersection_dim"] = r.intersection_dim;
    } else {
        j["sum_dim"] = r.sum_dim;
    }
    j["upper_bound"] = r.upper_bound;
    j["chi_members"] = json::array();
    for (const Partition& m : r.chi_members)
        j["chi_members"].push_back(partition_to_json(m));
    j["chi_pont_members"] = json::array();
    for (const Partition& m : r.chi_pont_members)
        j["chi_pont_members"].push_back(partition_to_json(m));
    return j;
}

std::string span_to_table(const SpanReport& r) {
    std::string table = "chi span dim = " + std::to_string(r.chi_dim);
    if (r.n % 2 == 0) {
        table += ", pontryagin dim = " + std::to_string(r.pontryagin_dim) +
                 ", sum dim = " + std::to_string(r.sum_dim) +
                 ", intersection dim = " + std::to_string(r.intersection_dim);
    }
    table += "\nupper bound = " + std::to_string(r.upper_bound) + "\n";
    table += "Chern numbers in span{chi}: " + partition_list(r.chi_members) + "\n";
    table += "Chern numbers in span{chi} + span{pontryagin}: " +
             partition_list(r.chi_pont_members) + "\n";
    return table;
}

int run_spans(const Options& opt) {
    SpanReport r = span_report(opt.n);
    emit(opt, span_to_json(r), span_to_table(r));
    return 0;
}

int run_report(const Options& opt) {
    if (opt.n_max < 4 || opt.n_max > 12)
        throw PreconditionError("report: n_max must be between 4 and 12");
    ModelParams params = effective_model(opt);
    json sections = json::array();
    std::string table;

    for (int n = 4; n <= opt.n_max; ++n) {
        json sec{{"n", n}};
        table += "== n = " + std::to_string(n) + " ==\n";

        // basis integrity and Milnor number
        CobordismSpace space(n, params.polarization);
        Rational sn = apply(milnor_s(n), alpha_generator(n, params.polarization).vector);
        sec["p_n"] = static_cast<long>(space.basis().size());
        sec["basis_full_rank"] = true;  // the constructor verified it
        sec["milnor_s_alpha_n"] = rational_to_json(sn);
        table += "alpha-monomial basis: p(" + std::to_string(n) + ") = " +
                 std::to_string(space.basis().size()) + ", matrix full rank\n";
        table += "s_n(alpha_n) = " + to_string(sn) + "\n";

        // family slopes
        sec["slopes"] = json::array();
        std::vector<Partition> nonzero;
        table += "family Chern numbers, value = slope*q + intercept:\n";
        for (const Partition& m : partitions_of(n)) {
            FamilyChernPolynomial line = family_chern(m, n, params.genus, params.model);
            sec["slopes"].push_back({{"partition", partition_to_json(m)},
                                     {"slope", rational_to_json(line.slope)},
                                     {"intercept", rational_to_json(line.intercept)}});
            if (line.slope != 0)
                nonzero.push_back(m);
            table += "  " + m.monomial_str() + ": slope " + to_string(line.slope) +
                     ", intercept " + to_string(line.intercept) + "\n";
        }
        table += "nonzero-slope partitions: " + partition_list(nonzero) + "\n";

        // decomposition of X_q
        json coords = json::array();
        Partition off_diagonal{n - 1, 1};
        std::map<Partition, Rational, PartitionOrder> at3 =
            space.decompose(family_chern_vector(3, n, params.genus, params.model));
        std::map<Partition, Rational, PartitionOrder> at5 =
            space.decompose(family_chern_vector(5, n, params.genus, params.model));
        std::map<Partition, Rational, PartitionOrder> at7 =
            space.decompose(family_chern_vector(7, n, params.genus, params.model));
        bool others_constant = true;
        for (const Partition& m : space.basis()) {
            if (m == off_diagonal)
                continue;
            others_constant = others_constant && at3[m] == at5[m] && at5[m] == at7[m];
        }
        sec["alpha1_alpha_n1_coordinate"] =
            json{{"q3", rational_to_json(at3[off_diagonal])},
                 {"q5", rational_to_json(at5[off_diagonal])},
                 {"q7", rational_to_json(at7[off_diagonal])}};
        sec["other_coordinates_q_independent"] = others_constant;
        table += "X_q coordinate at " + off_diagonal.monomial_str("alpha") + " for q=3,5,7: " +
                 to_string(at3[off_diagonal]) + ", " + to_string(at5[off_diagonal]) + ", " +
                 to_string(at7[off_diagonal]) + "\n";
        table += std::string("other coordinates q-independent: ") +
                 (others_constant ? "yes" : "NO") + "\n";

        if (n == 4) {
            LinearFunctional p2 = pontryagin_functionals(4).front();  // partition (2) first
            Rational p2v = apply(p2, family_chern_vector(3, 4, params.genus, params.model));
            Rational p2v5 = apply(p2, family_chern_vector(5, 4, params.genus, params.model));
            sec["p2_of_Xq"] = rational_to_json(p2v);
            sec["p2_q_independent"] = p2v == p2v5;
            table += "p_2(X_q) = " + to_string(p2v) +
                     (p2v == p2v5 ? " (q-independent)\n" : " (VARIES with q)\n");
        }

        // ideal slices
        IdealSlice i_slice = ideal_slice_I(n, params.polarization);
        IdealSlice j_slice = ideal_slice_J(n, params.polarization);
        sec["I_rank"] = i_slice.rank;
        sec["I_formula"] = ideal_I_rank_formula(n);
        sec["J_rank"] = j_slice.rank;
        sec["upper_bound"] = span_upper_bound(n);
        table += "dim I = " + std::to_string(i_slice.rank) + " (formula " +
                 std::to_string(ideal_I_rank_formula(n)) + "), dim J = " +
                 std::to_string(j_slice.rank) + ", upper bound = " +
                 std::to_string(span_upper_bound(n)) + "\n";

        // span analysis: the chi machinery is exercised only up to n = 8
        if (n <= 8) {
            SpanReport r = span_report(n);
            sec["spans"] = span_to_json(r);
            table += span_to_table(r);
        }
        table += "\n";
        sections.push_back(std::move(sec));
    }
    emit(opt, json{{"sections", sections}}, table);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Chern-number calculator for projectivized bundles"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--format", opt.format, "output format: table or json")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--model-file", opt.model_file, "JSON model parameters");

    CLI::App* validate = app.add_subcommand("validate", "validate a ring presentation");
    validate->add_option("--ring", opt.ring_name, "catalog name or ring file")->required();

    CLI::App* seg = app.add_subcommand("segre", "Segre classes of a bundle");
    seg->add_option("--bundle", opt.bundle_file)->required();
    seg->add_option("--max-degree", opt.max_degree);

    CLI::App* f_cmd = app.add_subcommand("f", "the pushforward class f(a)");
    f_cmd->add_option("--k", opt.k, "bundle rank (symbolic mode)");
    f_cmd->add_option("--tuple", opt.tuple_text)->required();
    f_cmd->add_flag("--symbolic", opt.symbolic);
    f_cmd->add_option("--bundle", opt.bundle_file);

    CLI::App* pb = app.add_subcommand("pbundle", "Chern number of P(E), pushforward formula");
    pb->add_option("--bundle", opt.bundle_file)->required();
    pb->add_option("--partition", opt.partition_text)->required();

    CLI::App* oc = app.add_subcommand("oracle-check",
                                      "compare both Chern-number routes on every partition");
    oc->add_option("--bundle", opt.bundle_file)->required();

    CLI::App* pos = app.add_subcommand("positivity", "weight-(k+1) constant enumeration");
    pos->add_option("--k", opt.k)->required();

    CLI::App* fam = app.add_subcommand("family", "slope/intercept of c_m(X_q)");
    fam->add_option("--n", opt.n)->required();
    fam->add_option("--partition", opt.partition_text)->required();
    fam->add_option("--genus", opt.genus);

    CLI::App* dec = app.add_subcommand("decompose", "alpha-monomial coordinates");
    dec->add_option("--n", opt.n);
    dec->add_option("--q", opt.q);
    dec->add_option("--vector-file", opt.vector_file);

    CLI::App* ide = app.add_subcommand("ideals", "ideal slice ranks and bounds");
    ide->add_option("--n", opt.n)->required();

    CLI::App* spn = app.add_subcommand("spans", "chi/Pontryagin span analysis");
    spn->add_option("--n", opt.n)->required();

    CLI::App* rep = app.add_subcommand("report", "full reproduction report");
    rep->add_option("--n-max", opt.n_max);
    rep->add_option("--genus", opt.genus);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (validate->parsed())
            return run_validate(opt);
        if (seg->parsed())
            return run_segre(opt);
        if (f_cmd->parsed())
            return run_f(opt);
        if (pb->parsed())
            return run_pbundle(opt);
        if (oc->parsed())
            return run_oracle_check(opt);
        if (pos->parsed())
            return run_positivity(opt);
        if (fam->parsed())
            return run_family(opt);
        if (dec->parsed())
            return run_decompose(opt);
        if (ide->parsed())
            return run_ideals(opt);
        if (spn->parsed())
            return run_spans(opt);
        if (rep->parsed())
            return run_report(opt);
        return 1;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)  // --help
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const chern::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const chern::InvariantError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const chern::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
