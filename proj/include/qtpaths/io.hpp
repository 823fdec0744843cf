#pragma once

#include <json.hpp>
#include <string>

#include "qtpaths/bijections.hpp"
#include "qtpaths/nabla.hpp"
#include "qtpaths/parking.hpp"
#include "qtpaths/path.hpp"
#include "qtpaths/qtpoly.hpp"
#include "qtpaths/tableau.hpp"

namespace qtpaths {

using Json = nlohmann::json;

// [[i,j,c],...] in canonical monomial order.
Json to_json(const QtPolynomial& p);
QtPolynomial poly_from_json(const Json& j);
// [[[a,b],c],...]
Json to_json(const SchurQtExpansion& e);
// [{"partition":[..],"poly":[..],"schur":[..]},...]; "schur" is null when
// the coefficient is not q,t-symmetric.
Json to_json(const SchurXExpansion& e);
SchurXExpansion schurx_from_json(const Json& j);
Json to_json(const PathKind& k);
Json to_json(const Path& p);
Json to_json(const ParkingFunction& pf);
Json to_json(const Tableau& t);
Json to_json(const PhiChain& c);

std::string partition_string(const Partition& p);

// LaTeX: monomials and s_{a,b}(q,t) sums.
std::string latex(const QtPolynomial& p);
std::string latex(const SchurQtExpansion& e);
// tabular of <nabla^m e_n, s_lambda> with Schur expansions in q,t.
std::string latex_table(const SchurXExpansion& e, int m);

}  // namespace qtpaths
