#include "axl/jsonio.hpp"

namespace axl {

std::string fe_to_string(const FieldElem& x) { return x.str(); }

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (auto& c : v) a.push_back(c.str());
  return a;
}

Vec vec_from_json(const Json& j, const DescP& d) {
  Vec v;
  for (auto& e : j) v.push_back(parse_expr(d, e.get<std::string>()));
  return v;
}

Json algebra_to_json(const BuildResult& br) {
  const Algebra& A = br.A;
  Json j;
  j["basis"] = A.labels;
  j["char"] = A.d->p;
  if (!A.d->trans.empty() || !A.d->exts.empty()) {
    Json f;
    f["trans"] = A.d->trans;
    Json exts = Json::array();
    for (auto& e : A.d->exts) {
      FieldElem sq = FieldElem::zero(A.d);
      for (size_t i = 0; i < e.square.size(); ++i) sq.c[i] = e.square[i];
      exts.push_back({{"name", e.name}, {"square", sq.str()}});
    }
    f["ext"] = exts;
    j["field"] = f;
  }
  if (!br.family.empty()) j["family"] = br.family;
  Json params = Json::object();
  for (auto& [k, v] : br.params) params[k] = v.str();
  j["params"] = params;
  Json prods = Json::array();
  for (int i = 0; i < A.n; ++i)
    for (int k = i; k < A.n; ++k) {
      const Vec& p = A.basis_product(i, k);
      if (vec_is_zero(p)) continue;
      prods.push_back(Json::array({i, k, vec_to_json(p)}));
    }
  j["products"] = prods;
  if (A.form) {
    Json f = Json::array();
    for (int i = 0; i < A.n; ++i) {
      Json row = Json::array();
      for (int k = 0; k < A.n; ++k) row.push_back(A.form->at(i, k).str());
      f.push_back(row);
    }
    j["form"] = f;
  }
  Json axes = Json::array();
  for (auto& a : A.axes) axes.push_back(vec_to_json(a));
  j["axes"] = axes;
  j["gens"] = A.gens;
  Json named = Json::object();
  for (auto& [k, v] : br.named) named[k] = vec_to_json(v);
  j["named"] = named;
  j["law"] = br.law.name;
  return j;
}

BuildResult algebra_from_json(const Json& j) {
  uint32_t p = j.at("char").get<uint32_t>();
  std::vector<std::string> trans;
  if (j.contains("field")) trans = j["field"]["trans"].get<std::vector<std::string>>();
  DescP d = FieldDesc::make(p, trans);
  if (j.contains("field"))
    for (auto& e : j["field"]["ext"])
      d = adjoin_sqrt(d, e.at("name").get<std::string>(),
                      parse_expr(d, e.at("square").get<std::string>()));
  BuildResult br;
  std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
  br.A = Algebra(d, labels);
  if (j.contains("family")) br.family = j["family"].get<std::string>();
  if (j.contains("params"))
    for (auto& [k, v] : j["params"].items())
      br.params.emplace(k, parse_expr(d, v.get<std::string>()));
  for (auto& e : j.at("products")) {
    int i = e[0].get<int>(), k = e[1].get<int>();
    br.A.set_product(i, k, vec_from_json(e[2], d));
  }
  if (j.contains("form")) {
    Mat f(d, br.A.n, br.A.n);
    for (int i = 0; i < br.A.n; ++i)
      for (int k = 0; k < br.A.n; ++k)
        f.at(i, k) = parse_expr(d, j["form"][i][k].get<std::string>());
    br.A.form = f;
  }
  if (j.contains("axes"))
    for (auto& e : j["axes"]) br.A.axes.push_back(vec_from_json(e, d));
  if (j.contains("gens")) br.A.gens = j["gens"].get<std::vector<int>>();
  if (j.contains("named"))
    for (auto& [k, v] : j["named"].items()) br.named.emplace(k, vec_from_json(v, d));
  // reconstruct the fusion law from the family when possible
  if (!br.family.empty()) {
    const FamilyInfo& info = family_info(br.family);
    BuildResult fresh = build_family(br.family, d, br.params);
    br.law = fresh.law;
    br.sigma = fresh.sigma;
    (void)info;
  } else {
    br.law = trivial_law(d);
    br.sigma = Mat::identity(d, br.A.n);
  }
  return br;
}

}  // namespace axl
