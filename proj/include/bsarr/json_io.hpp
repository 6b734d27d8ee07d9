#ifndef BSARR_JSON_IO_HPP
#define BSARR_JSON_IO_HPP

#include <json.hpp>

#include "bsarr/arrangement.hpp"
#include "bsarr/bsideals.hpp"
#include "bsarr/module.hpp"

namespace bsarr {

using Json = nlohmann::json;

// All numeric payloads are exact rational strings; structural validation on
// read mirrors the schemas shipped under schemas/.

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

// {"vars": [...], "terms": [[coeff, [e,..]], ...]} with terms grlex-descending
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// {"vars": ..., "ambient_rank": int, "generators": [[poly-terms, ...], ...]}
Json module_to_json(const PolyModule& m);
PolyModule module_from_json(const Json& j);

// {"n": int, "forms": [{"coeffs": ["1","0"], "mult": 1}, ...],
//  "factorization": [[0,1],[2]]?, "label": str?}
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);
// the optional factorization field, validated against a's degree
std::optional<Factorization> factorization_from_json(const Json& arrangement_json,
                                                     const Arrangement& a);

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_groups_json(const Json& groups, int degree);

Json locus_to_json(const BSLocus& l);
BSLocus locus_from_json(const Json& j);

Json product_to_json(const BSProduct& p);
BSProduct product_from_json(const Json& j);

Json lattice_to_json(const Lattice& lat);

}  // namespace bsarr

#endif
