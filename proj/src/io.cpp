#include "chern/io.hpp"

#include <fstream>
#include <sstream>

#include "chern/catalog.hpp"
#include "chern/errors.hpp"

namespace chern {

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON");
    return j;
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str());
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError("rational values must be integers or \"p/q\" strings");
}

json rational_to_json(const Rational& r) {
    return to_string(r);
}

json partition_to_json(const Partition& m) {
    json out = json::array();
    for (int p : m.parts())
        out.push_back(p);
    return out;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array())
        throw ParseError("partition must be an array of positive integers");
    std::vector<int> parts;
    for (const json& v : j) {
        if (!v.is_number_integer() || v.get<long long>() <= 0)
            throw ParseError("partition must be an array of positive integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Rings

RingDescription ring_from_json(const json& j) {
    RingDescription d;
    try {
        d.dimension = j.at("dimension").get<int>();
        for (const json& b : j.at("basis"))
            d.basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
        d.top = j.at("top").get<std::string>();
        if (j.contains("products"))
            for (const json& p : j.at("products")) {
                ProductEntry entry;
                entry.left = p.at("left").get<std::string>();
                entry.right = p.at("right").get<std::string>();
                for (const json& term : p.at("result"))
                    entry.result.push_back({term.at("symbol").get<std::string>(),
                                            rational_from_json(term.at("coeff"))});
                d.products.push_back(std::move(entry));
            }
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad ring file: ") + e.what());
    }
    return d;
}

json ring_to_json(const RingDescription& d) {
    json out;
    out["dimension"] = d.dimension;
    out["basis"] = json::array();
    for (const BasisSymbol& b : d.basis)
        out["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
    out["products"] = json::array();
    for (const ProductEntry& p : d.products) {
        json entry;
        entry["left"] = p.left;
        entry["right"] = p.right;
        entry["result"] = json::array();
        for (const ProductTerm& t : p.result)
            entry["result"].push_back({{"symbol", t.symbol}, {"coeff", rational_to_json(t.coeff)}});
        out["products"].push_back(std::move(entry));
    }
    out["top"] = d.top;
    return out;
}

RingElement element_from_json(const json& j, const RingPtr& ring) {
    if (!j.is_array())
        throw ParseError("a class must be an array of {symbol, coeff} terms");
    RingElement e(ring);
    try {
        for (const json& term : j)
            e.add_term(ring->index_of(term.at("symbol").get<std::string>()),
                       rational_from_json(term.at("coeff")));
    } catch (const json::exception& ex) {
        throw ParseError(std::string("bad class: ") + ex.what());
    }
    return e;
}

json element_to_json(const RingElement& e) {
    json out = json::array();
    for (const auto& [i, c] : e.coefficients())
        out.push_back({{"symbol", e.ring()->symbol(i).name}, {"coeff", rational_to_json(c)}});
    return out;
}

RingDescription load_ring_description(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path))
        return catalog_ring(name_or_path)->description();
    return ring_from_json(parse_json_file(name_or_path));
}

RingPtr load_ring(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path))
        return catalog_ring(name_or_path);
    return RingPresentation::create(ring_from_json(parse_json_file(name_or_path)));
}

// ---------------------------------------------------------------------------
// Bundles

BundleOnBase bundle_from_json(const json& j) {
    try {
        RingPtr ring = load_ring(j.at("base").get<std::string>());
        std::vector<RingElement> tangent;
        if (j.contains("tangent"))
            for (const json& c : j.at("tangent"))
                tangent.push_back(element_from_json(c, ring));
        int rank = j.at("bundle").at("rank").get<int>();
        std::vector<RingElement> classes;
        for (const json& c : j.at("bundle").at("classes"))
            classes.push_back(element_from_json(c, ring));
        return BundleOnBase(ring, ChernData(ring, ring->dimension(), std::move(tangent)),
                            ChernData(ring, rank, std::move(classes)));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad bundle file: ") + e.what());
    }
}

BundleOnBase load_bundle_file(const std::string& path) {
    return bundle_from_json(parse_json_file(path));
}

// ---------------------------------------------------------------------------
// Vectors and functionals

namespace {

std::map<Partition, Rational, PartitionOrder> entries_from_json(const json& j, int* dim) {
    std::map<Partition, Rational, PartitionOrder> out;
    try {
        *dim = j.at("dimension").get<int>();
        if (j.contains("entries"))
            for (const json& entry : j.at("entries"))
                out[partition_from_json(entry.at("partition"))] =
                    rational_from_json(entry.at("value"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad entries: ") + e.what());
    }
    return out;
}

template <typename Map>
json entries_to_json(int dim, const Map& entries) {
    json out;
    out["dimension"] = dim;
    out["entries"] = json::array();
    for (const auto& [m, v] : entries)
        out["entries"].push_back(
            {{"partition", partition_to_json(m)}, {"value", rational_to_json(v)}});
    return out;
}

}  // namespace

ChernVector chern_vector_from_json(const json& j) {
    int dim = 0;
    auto entries = entries_from_json(j, &dim);
    ChernVector v(dim);
    for (const auto& [m, value] : entries)
        v.set_value(m, value);
    return v;
}

json chern_vector_to_json(const ChernVector& v) {
    return entries_to_json(v.dimension(), v.values());
}

LinearFunctional functional_from_json(const json& j) {
    int dim = 0;
    auto entries = entries_from_json(j, &dim);
    LinearFunctional f(dim);
    for (const auto& [m, value] : entries)
        f.add_term(m, value);
    return f;
}

json functional_to_json(const LinearFunctional& f) {
    return entries_to_json(f.dimension(), f.terms());
}

// ---------------------------------------------------------------------------
// Model parameters

ModelParams model_from_json(const json& j) {
    ModelParams params;
    try {
        if (j.contains("w"))
            params.model.w = rational_from_json(j.at("w"));
        if (j.contains("t"))
            params.model.t = rational_from_json(j.at("t"));
        if (j.contains("genus"))
            params.genus = j.at("genus").get<int>();
        if (j.contains("polarization"))
            params.polarization = rational_from_json(j.at("polarization"));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad model file: ") + e.what());
    }
    params.model.check();
    if (params.genus < 0)
        throw ParseError("model genus must be >= 0");
    return params;
}

ModelParams load_model_file(const std::string& path) {
    return model_from_json(parse_json_file(path));
}

}  // namespace chern
