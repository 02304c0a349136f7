#pragma once

#include <json.hpp>

#include "vvmf/basis.hpp"
#include "vvmf/forms.hpp"
#include "vvmf/fundamental.hpp"
#include "vvmf/repdata.hpp"
#include "vvmf/reptools.hpp"

namespace vvmf {

using Json = nlohmann::json;

// Scalars: rationals as "p/q" strings, cyclotomics as
// {"conductor": N, "terms": [[e, "p/q"], ...]} (input exponents may be any
// integers; output is the canonical power basis).
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"offset": "p/q", "coeffs": [scalar...], "order": coeffs.size()-1}; the
// canonical zero series carries its frontier in "offset" with order -1.
Json series_to_json(const SeriesQ& s);
SeriesQ series_from_json(const Json& j);

// {"lambda": ["p/q", ...], "X": [[scalar...]], "S": [[scalar...]]?}
Json repdata_to_json(const RepData& rep);
RepData repdata_from_json(const Json& j);

// {"conductor": N, "S": [[scalar...]], "T_diag": [scalar...]}
Json modrep_to_json(const ModularRep& rep);
ModularRep modrep_from_json(const Json& j);

// {"terms": [{"component": xi, "order": n, "coeff": scalar}, ...]}
Json principal_part_to_json(const PrincipalPart& p);
PrincipalPart principal_part_from_json(const Json& j);

// {"lambda": [...], "psi": [[series...]], "order": M}
Json fundamental_to_json(const FundamentalMatrix& f);

Json report_to_json(const Report& r);

Json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j);

}  // namespace vvmf
