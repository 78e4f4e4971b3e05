#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chern/catalog.hpp"
#include "chern/errors.hpp"
#include "chern/io.hpp"

using namespace chern;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::filesystem::path path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

}  // namespace

TEST_CASE("rationals in JSON") {
    CHECK(rational_from_json(json(5)) == 5);
    CHECK(rational_from_json(json("-2/6")) == Rational(-1, 3));
    CHECK(rational_to_json(Rational(1, 3)) == json("1/3"));
    CHECK(rational_to_json(Rational(-7)) == json("-7"));
    CHECK_THROWS_AS(rational_from_json(json(1.5)), ParseError);
    CHECK_THROWS_AS(rational_from_json(json("2.5")), ParseError);
}

TEST_CASE("ring descriptions round-trip through JSON") {
    RingDescription original = projective_space_ring(2)->description();
    RingDescription back = ring_from_json(ring_to_json(original));
    RingPtr a = RingPresentation::create(original);
    RingPtr b = RingPresentation::create(back);
    CHECK(same_structure(*a, *b));
    CHECK(b->index_of("h2") == a->index_of("h2"));
}

TEST_CASE("ring files load, catalog names take priority") {
    std::string path = write_temp("chern_test_ring.json",
                                  ring_to_json(curve_ring()->description()).dump());
    RingPtr loaded = load_ring(path);
    CHECK(same_structure(*loaded, *curve_ring()));
    CHECK(same_structure(*load_ring("pp2"), *projective_space_ring(2)));
    CHECK_THROWS_AS(load_ring("/nonexistent/ring.json"), ParseError);
    std::string bad = write_temp("chern_test_bad.json", "{not json");
    CHECK_THROWS_AS(load_ring(bad), ParseError);
}

TEST_CASE("invalid ring files are rejected with a report") {
    json j = ring_to_json(projective_space_ring(1)->description());
    j["products"].push_back(
        {{"left", "h"}, {"right", "h"}, {"result", json::array({{{"symbol", "h"}, {"coeff", 1}}})}});
    RingDescription d = ring_from_json(j);
    ValidationReport r = ring_validate(d);
    CHECK(!r.ok);
    CHECK_THROWS_AS(RingPresentation::create(d), InvariantError);
}

TEST_CASE("elements round-trip") {
    RingPtr pp2 = projective_space_ring(2);
    RingElement e = ring_symbol(pp2, "h") * Rational(1, 2) - ring_symbol(pp2, "h2") * Rational(3);
    CHECK(element_from_json(element_to_json(e), pp2) == e);
    CHECK_THROWS_AS(element_from_json(json::array({{{"symbol", "zz"}, {"coeff", 1}}}), pp2),
                    ParseError);
}

TEST_CASE("bundle files") {
    std::string path = write_temp("chern_test_bundle.json", R"({
      "base": "pp1",
      "tangent": [[{"symbol": "h", "coeff": 2}]],
      "bundle": {"rank": 2, "classes": [[{"symbol": "h", "coeff": "1"}]]}
    })");
    BundleOnBase b = load_bundle_file(path);
    CHECK(b.rank() == 2);
    CHECK(b.total_dimension() == 2);
    CHECK(chern_number_pbundle(Partition{1, 1}, b) == 8);

    std::string missing = write_temp("chern_test_bundle_bad.json", R"({"base": "pp1"})");
    CHECK_THROWS_AS(load_bundle_file(missing), ParseError);
}

TEST_CASE("vectors and functionals round-trip with canonical entry order") {
    ChernVector v(4);
    v.set_value(Partition{1, 1, 1, 1}, Rational(9));
    v.set_value(Partition{4}, Rational(-1, 2));
    json j = chern_vector_to_json(v);
    CHECK(chern_vector_from_json(j) == v);
    // the (4) entry precedes (1,1,1,1) regardless of insertion order
    CHECK(j["entries"][0]["partition"] == json::array({4}));

    LinearFunctional f(2);
    f.add_term(Partition{1, 1}, Rational(1, 12));
    f.add_term(Partition{2}, Rational(1, 12));
    CHECK(functional_from_json(functional_to_json(f)) == f);
    CHECK(functional_to_json(f).dump() == functional_to_json(f).dump());
}

TEST_CASE("model files") {
    std::string path = write_temp("chern_test_model.json",
                                  R"({"w": "3", "t": "-1/2", "genus": 1, "polarization": 4})");
    ModelParams params = load_model_file(path);
    CHECK(params.model.w == 3);
    CHECK(params.model.t == Rational(-1, 2));
    CHECK(params.genus == 1);
    CHECK(params.polarization == 4);

    ModelParams defaults = model_from_json(parse_json_text("{}"));
    CHECK(defaults.model.w == 1);
    CHECK(defaults.model.t == 1);
    CHECK(defaults.genus == 0);
    CHECK(defaults.polarization == 2);

    CHECK_THROWS_AS(model_from_json(parse_json_text(R"({"w": 0})")), PreconditionError);
    CHECK_THROWS_AS(model_from_json(parse_json_text(R"({"genus": -1})")), ParseError);
}
