#ifndef CHERN_IO_HPP
#define CHERN_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "chern/char_classes.hpp"
#include "chern/families.hpp"
#include "chern/proj_bundle.hpp"
#include "chern/ring.hpp"

namespace chern {

// JSON file formats. Rationals are decimal-free strings "p/q" (or "p");
// integers are also accepted on input. All emission uses ordered objects
// and canonical orders, so identical inputs give byte-identical output.

using json = nlohmann::ordered_json;

/// {"dimension": n, "basis": [{"name","degree"}], "products":
///  [{"left","right","result":[{"symbol","coeff"}]}], "top": "..."}
RingDescription ring_from_json(const json& j);
json ring_to_json(const RingDescription& d);

/// Class = [{"symbol","coeff"}, ...]
RingElement element_from_json(const json& j, const RingPtr& ring);
json element_to_json(const RingElement& e);

/// {"base": <catalog name or ring-file path>, "tangent": [class...],
///  "bundle": {"rank": k, "classes": [class...]}}
/// Paths are resolved relative to the current directory.
BundleOnBase bundle_from_json(const json& j);
BundleOnBase load_bundle_file(const std::string& path);

/// {"dimension": n, "entries": [{"partition":[...], "value":"p/q"}]}
ChernVector chern_vector_from_json(const json& j);
json chern_vector_to_json(const ChernVector& v);
LinearFunctional functional_from_json(const json& j);
json functional_to_json(const LinearFunctional& f);

/// {"w":"1", "t":"1", "genus":0, "polarization":2}; all fields optional.
struct ModelParams {
    DolgachevModel model;
    int genus = 0;
    Rational polarization = 2;
};
ModelParams model_from_json(const json& j);
ModelParams load_model_file(const std::string& path);

RingPtr load_ring(const std::string& name_or_path);
RingDescription load_ring_description(const std::string& name_or_path);

json parse_json_file(const std::string& path);
json parse_json_text(const std::string& text);

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);  // always a string

json partition_to_json(const Partition& m);
Partition partition_from_json(const json& j);

}  // namespace chern

#endif
