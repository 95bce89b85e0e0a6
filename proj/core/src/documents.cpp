#include "trop/documents.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace trop {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

IntVec parse_int_vector(const json& j, int expected) {
  if (!j.is_array()) throw InputError("expected an integer array");
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("expected an integer entry");
    v.push_back(Int(x.get<long>()));
  }
  if (expected >= 0 && int(v.size()) != expected)
    throw InputError("vector length mismatch");
  return v;
}

RatVec parse_rat_vector(const json& j, int expected) {
  if (!j.is_array()) throw InputError("expected an array of rational strings");
  RatVec v;
  for (const auto& x : j) {
    if (x.is_number_integer())
      v.push_back(Rat(x.get<long>()));
    else if (x.is_string())
      v.push_back(parse_rat(x.get<std::string>()));
    else
      throw InputError("expected rational string \"a/b\"");
  }
  if (expected >= 0 && int(v.size()) != expected)
    throw InputError("vector length mismatch");
  return v;
}

long long to_int64(const Int& x) {
  if (!x.fits_slong_p()) throw InputError("integer too large for the document format");
  return x.get_si();
}

}  // namespace

WeightedComplex parse_cycle(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("ambient") || !j.contains("cells"))
    throw InputError("cycle document needs 'ambient' and 'cells'");
  int n = j.at("ambient").get<int>();
  if (n < 1) throw InputError("ambient dimension must be positive");
  std::vector<WeightedCell> cells;
  for (const auto& jc : j.at("cells")) {
    std::vector<RatVec> vertices;
    for (const auto& jv : jc.at("vertices")) vertices.push_back(parse_rat_vector(jv, n));
    std::vector<IntVec> rays;
    if (jc.contains("rays"))
      for (const auto& jr : jc.at("rays")) rays.push_back(parse_int_vector(jr, n));
    Int weight(jc.at("weight").get<long>());
    cells.push_back(WeightedCell{from_generators(vertices, rays), weight});
  }
  WeightedComplex complex = build_complex(std::move(cells));
  if (j.contains("dim") && j.at("dim").get<int>() != complex.dim)
    throw InputError("declared dim does not match the cells");
  return complex;
}

std::string write_cycle(const WeightedComplex& complex) {
  // canonical cell order: by (vertices, rays) of the canonical form
  std::vector<int> order(complex.cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return compare(complex.cells[a].poly, complex.cells[b].poly) < 0;
  });
  json cells = json::array();
  for (int i : order) {
    const auto& cell = complex.cells[i];
    json vertices = json::array();
    for (const auto& v : cell.poly.vertices) {
      json vv = json::array();
      for (const auto& c : v) vv.push_back(rat_string(c));
      vertices.push_back(vv);
    }
    json rays = json::array();
    for (const auto& r : cell.poly.rays) {
      json rr = json::array();
      for (const auto& c : r) rr.push_back(to_int64(c));
      rays.push_back(rr);
    }
    cells.push_back({{"vertices", vertices}, {"rays", rays}, {"weight", to_int64(cell.weight)}});
  }
  json j{{"ambient", complex.ambient}, {"dim", complex.dim}, {"cells", cells}};
  return j.dump(2) + "\n";
}

TropicalPolynomial parse_polynomial(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("n") || !j.contains("terms"))
    throw InputError("polynomial document needs 'n' and 'terms'");
  int n = j.at("n").get<int>();
  if (n < 1) throw InputError("ambient dimension must be positive");
  std::vector<std::pair<IntVec, Rat>> terms;
  for (const auto& jt : j.at("terms")) {
    IntVec e = parse_int_vector(jt.at("exp"), n);
    Rat c;
    const auto& jcoef = jt.at("coef");
    if (jcoef.is_number_integer())
      c = Rat(jcoef.get<long>());
    else if (jcoef.is_string())
      c = parse_rat(jcoef.get<std::string>());
    else
      throw InputError("coef must be an integer or a rational string");
    terms.emplace_back(std::move(e), std::move(c));
  }
  return make_polynomial(n, std::move(terms));
}

std::string write_polynomial(const TropicalPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms) {
    json ee = json::array();
    for (const auto& x : e) ee.push_back(to_int64(x));
    terms.push_back({{"exp", ee}, {"coef", rat_string(c)}});
  }
  json j{{"n", p.n}, {"terms", terms}};
  return j.dump(2) + "\n";
}

BasisDocument parse_basis(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("ambient") || !j.contains("vectors"))
    throw InputError("basis document needs 'ambient' and 'vectors'");
  BasisDocument doc;
  int n = j.at("ambient").get<int>();
  if (n < 1) throw InputError("ambient dimension must be positive");
  doc.basis.ambient = n;
  for (const auto& jv : j.at("vectors")) doc.basis.vectors.push_back(parse_int_vector(jv, n));
  if (j.contains("phases"))
    for (const auto& jp : j.at("phases")) {
      if (jp.is_number_integer())
        doc.phases.push_back(Rat(jp.get<long>()));
      else
        doc.phases.push_back(parse_rat(jp.get<std::string>()));
    }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace trop
