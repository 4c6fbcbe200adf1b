#pragma once

// JSON views of the library's values. Objects use sorted keys, so dumps are
// byte-stable.

#include <json.hpp>

#include "lopoly/counting.hpp"
#include "lopoly/graph.hpp"
#include "lopoly/nni.hpp"
#include "lopoly/quasi_polynomial.hpp"
#include "lopoly/reflexivity.hpp"
#include "lopoly/scissors.hpp"
#include "lopoly/weighted_nni.hpp"

namespace lopoly {

using Json = nlohmann::json;

/// [num, den]; numbers beyond 64 bits are written as decimal strings.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json integer_json(const Integer& z);

Json graph_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json trail_json(const Trail& w);
Trail trail_from_json(const Json& j);
Json move_sequence_json(const MoveSequence& s);
MoveSequence move_sequence_from_json(const Json& j);

Json matrix_json(const IntMatrix& x);
Json site_json(const NniSite& s);

/// {period, constituents: [[[num, den], ...ascending powers], ...]}
Json quasi_polynomial_json(const QuasiPolynomial& qp);
QuasiPolynomial quasi_polynomial_from_json(const Json& j);

Json count_json(const CountReport& r);
Json decomposition_json(const Decomposition& d);
Json verify_json(const VerifyReport& r);

}  // namespace lopoly
