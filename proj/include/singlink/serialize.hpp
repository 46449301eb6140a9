#pragma once

// JSON and DOT forms of the library types. Index lists in JSON are 1-based.

#include <string>

#include <json.hpp>

#include "singlink/augment.hpp"
#include "singlink/bricks.hpp"
#include "singlink/cluster.hpp"
#include "singlink/divides.hpp"
#include "singlink/links.hpp"
#include "singlink/sheafmoduli.hpp"

namespace singlink::serialize {

using Json = nlohmann::ordered_json;

// {"strands": n, "word": [k1, ...]}
Json to_json(const links::BraidWord& beta);
links::BraidWord braid_from_json(const Json& j);

Json to_json(const links::LinkInvariants& inv);
links::LinkInvariants invariants_from_json(const Json& j);

// {"crossings": N, "strands": [{"closed": b, "passages": [[c, s], ...]}],
//  "boundary_order": [[strand, end], ...]}; crossings and strands 0-based
// here, as they are identifiers rather than positions.
Json to_json(const divides::Divide& d);
divides::Divide divide_from_json(const Json& j);

// {"kind": "brick", "vertices": ["k:[a,b]", ...], "arrows": [[s, t], ...]}
Json to_json(const bricks::BrickQuiver& q);
bricks::BrickQuiver brick_quiver_from_json(const Json& j);
std::string to_dot(const bricks::BrickQuiver& q);

// {"kind": "acampo", "vertices": ["p1", ..., "q1", ...], "arrows": [...]}; p for crossings, q for regions
Json to_json(const divides::AcampoQuiver& q);
std::string to_dot(const divides::AcampoQuiver& q);

// {"matrix": [[...], ...], "symmetrizer": [...]}
Json to_json(const cluster::ExchangeMatrix& b);
cluster::ExchangeMatrix exchange_matrix_from_json(const Json& j);

// {"strands", "word", "convention", "variables", "equations"}
Json to_json(const augment::AugmentationSystem& sys);
augment::AugmentationSystem augmentation_from_json(const Json& j);

// {"n", "method", "variables", "equations"}
Json to_json(const sheafmoduli::ThetaSystem& sys);
sheafmoduli::ThetaSystem theta_from_json(const Json& j);

}  // namespace singlink::serialize
