#include "qtpaths/io.hpp"

#include <sstream>

#include "qtpaths/error.hpp"

namespace qtpaths {

Json to_json(const QtPolynomial& p) {
  Json a = Json::array();
  for (const auto& [k, c] : p.terms()) a.push_back({k.first, k.second, c});
  return a;
}

QtPolynomial poly_from_json(const Json& j) {
  QtPolynomial p;
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be an array");
  for (const auto& t : j) p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::int64_t>());
  return p;
}

Json to_json(const SchurQtExpansion& e) {
  Json a = Json::array();
  for (const auto& [ab, c] : e.coeffs) a.push_back({{ab.first, ab.second}, c});
  return a;
}

Json to_json(const SchurXExpansion& e) {
  Json a = Json::array();
  for (const auto& [lambda, p] : e.coeffs) {
    Json row{{"partition", lambda}, {"poly", to_json(p)}};
    try {
      row["schur"] = to_json(schur_decompose(p));
    } catch (const Error&) {
      row["schur"] = nullptr;
    }
    a.push_back(std::move(row));
  }
  return a;
}

SchurXExpansion schurx_from_json(const Json& j) {
  SchurXExpansion e;
  for (const auto& row : j) {
    Partition lambda = row.at("partition").get<Partition>();
    e.n = partition_size(lambda);
    e.coeffs.emplace(std::move(lambda), poly_from_json(row.at("poly")));
  }
  return e;
}

Json to_json(const PathKind& k) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Rect>) return {{"rect", {{"n", v.n}, {"k", v.k}}}};
        else if constexpr (std::is_same_v<T, Dyck>) return {{"dyck", {{"n", v.n}, {"m", v.m}}}};
        else return {{"schroder", {{"n", v.n}, {"d", v.d}, {"m", v.m}}}};
      },
      k);
}

Json to_json(const Path& p) { return {{"word", p.word()}, {"kind", to_json(p.kind())}}; }

Json to_json(const ParkingFunction& pf) {
  return {{"path", pf.path().word()}, {"labels", pf.labels()}, {"m", pf.m()}};
}

Json to_json(const Tableau& t) { return {{"shape", t.shape()}, {"rows", t.rows()}}; }

Json to_json(const PhiChain& c) {
  Json steps = Json::array(), stats = Json::array();
  for (const auto& p : c.steps) {
    steps.push_back(p.word());
    stats.push_back({bounce(p), area(p)});
  }
  return {{"start", c.start.word()}, {"steps", steps}, {"stats", stats}};
}

std::string partition_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

std::string latex(const QtPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto [qe, te] = it->first;
    std::int64_t c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || (qe == 0 && te == 0)) os << a;
    if (qe) os << "q" << (qe > 1 ? "^{" + std::to_string(qe) + "}" : "");
    if (te) os << "t" << (te > 1 ? "^{" + std::to_string(te) + "}" : "");
    first = false;
  }
  return os.str();
}

std::string latex(const SchurQtExpansion& e) {
  if (e.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) {
    auto [a, b] = it->first;
    std::int64_t c = it->second;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    std::int64_t v = c < 0 ? -c : c;
    if (v != 1) os << v;
    os << "s_{" << a;
    if (b) os << ',' << b;
    os << "}(q,t)";
    first = false;
  }
  return os.str();
}

std::string latex_table(const SchurXExpansion& e, int m) {
  std::ostringstream os;
  os << "\\begin{tabular}{ll}\n";
  os << "$\\mu$ & $\\langle \\nabla";
  if (m != 1) os << "^{" << m << "}";
  os << "(e_{" << e.n << "}), s_\\mu\\rangle$ \\\\\n\\hline\n";
  for (const auto& [lambda, p] : e.coeffs) {
    os << "$(" << partition_string(lambda) << ")$ & $";
    try {
      os << latex(schur_decompose(p));
    } catch (const Error&) {
      os << latex(p);
    }
    os << "$ \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace qtpaths
