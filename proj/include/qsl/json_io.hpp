#ifndef QSL_JSON_IO_HPP
#define QSL_JSON_IO_HPP

#include <json.hpp>

#include "qsl/invariants.hpp"
#include "qsl/ncalgebra.hpp"
#include "qsl/rootdata.hpp"
#include "qsl/torus.hpp"

namespace qsl {

// Exact JSON forms: every numeric value is a decimal or "a/b" string, never a
// float; exponents and lattice coordinates in the K-basis are plain integers.
using Json = nlohmann::ordered_json;

// [[exponent, "coefficient"], ...] in ascending exponent order.
Json laurent_to_json(const LaurentZ& p);
LaurentZ laurent_from_json(const Json& j);

// {"num": <laurent>, "den": <laurent>}
Json qscalar_to_json(const QScalar& s);
QScalar qscalar_from_json(const Json& j);

// sorted [{"exps": [c_1..c_n], "coeff": <qscalar>}, ...]; the rank is carried
// by the caller (an empty element has no terms to read it from).
Json torus_to_json(const TorusElement& t);
TorusElement torus_from_json(const Json& j, int rank);

// {"n": n, "m": m, "body": <torus>}
Json invariant_to_json(const InvariantElement& inv);
InvariantElement invariant_from_json(const Json& j);

// epsilon coordinates as "a/b" strings, n+1 entries.
Json latvec_to_json(const LatticeVector& v);
LatticeVector latvec_from_json(const Json& j);

// [{"word": ["F", "K^-1", "E", ...], "coeff": <qscalar>}, ...]
Json ncelement_to_json(const NCElement& e);
NCElement ncelement_from_json(const Json& j);

}  // namespace qsl

#endif
