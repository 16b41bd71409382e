#pragma once

#include "json.hpp"
#include "koszul/koszul_dual.hpp"
#include "koszul/session.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;

/// Term list of one algebra element: [{"path": "x.y", "coeff": "1/2"}, ...];
/// trivial paths are written as the vertex name.
Json algebra_element_to_json(const Algebra& alg, const AlgebraElement& elt);
AlgebraElement algebra_element_from_json(const Algebra& alg, const Json& terms);

/// {"n": ..., "values": [term list per generator]}
Json cochain_to_json(const Context& c, const Cochain& x);
Cochain cochain_from_json(const Context& c, const Json& j);

Json class_to_json(const CohomologyClass& cls);
Json hh_dims_to_json(const HHDims& dims);

/// {"n", "r", "entries": [{"i", "p", "q", "coeff"}]}
Json slice_to_json(const ComultSlice& slice);

/// {"m", "n", "entries": [{"i", "j", "l", "coeff"}]} with i of degree m,
/// j of degree n, l of degree m+n.
Json dual_table_to_json(const Context& c, int m, int n);

Json ext_to_json(const ExtElement& e);

/// {"t": [...], "generators": [[...]]} for levels 0..maxn.
Json resolution_to_json(const Context& c, int maxn);

/// {"dims": [...], "basis": [[coordinate lists]]} for degrees 0..maxn.
Json centre_to_json(const Context& c, int maxn);

}  // namespace koszul
