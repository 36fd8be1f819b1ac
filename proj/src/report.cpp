#include "axl/report.hpp"

#include "axl/isomorph.hpp"

namespace axl {

namespace {

DescP desc_from_case(const Json& c) {
  uint32_t p = c.value("char", 0u);
  std::vector<std::string> trans;
  if (c.contains("symbolic")) trans = c["symbolic"].get<std::vector<std::string>>();
  DescP d = FieldDesc::make(p, trans);
  if (c.contains("adjoin"))
    for (auto& e : c["adjoin"])
      d = adjoin_sqrt(d, e.at("name").get<std::string>(),
                      parse_expr(d, e.at("square").get<std::string>()));
  return d;
}

std::map<std::string, FieldElem> params_from_case(const Json& c, const DescP& d) {
  std::map<std::string, FieldElem> ps;
  for (auto& name : d->trans) ps.emplace(name, FieldElem::generator(d, name));
  if (c.contains("params"))
    for (auto& [k, v] : c["params"].items()) {
      FieldElem val = parse_expr(d, v.get<std::string>());
      ps.erase(k);
      ps.emplace(k, val);
    }
  return ps;
}

BuildResult build_from_case(const Json& c) {
  DescP d = desc_from_case(c);
  return build_family(c.at("family").get<std::string>(), d, params_from_case(c, d),
                      c.value("literal", false));
}

}  // namespace

Json cmd_report(const BuildResult& br, const ReportOptions& opts) {
  const Algebra& A = br.A;
  Json r;
  r["family"] = br.family;
  r["characteristic"] = A.d->p;
  Json params = Json::object();
  for (auto& [k, v] : br.params) params[k] = v.str();
  r["params"] = params;
  r["dimension"] = A.n;
  auto id = find_identity(A);
  r["identity"] = id ? vec_to_json(*id) : Json();
  Subspace ann = annihilator(A);
  Json annj;
  annj["dim"] = ann.dim();
  Json ab = Json::array();
  for (auto& v : ann.basis) ab.push_back(vec_to_json(v));
  annj["basis"] = ab;
  r["annihilator"] = annj;
  if (A.form) r["gram_determinant"] = det(*A.form).str();
  // eigenspace fingerprint of the first generating axis
  {
    AxisReport rep = check_axis(A, A.axes[A.gens[0]], br.law);
    Json fp = Json::array();
    for (auto& e : rep.eigenspaces) fp.push_back(e.dim());
    r["eigenspace_fingerprint"] = fp;
    r["axis_ok"] = rep.passes() && rep.primitive;
  }
  AxetClosure ax = axet_closure(A, A.axes, br.law, opts.axis_cap, opts.group_cap);
  r["axet_size"] = ax.axes_capped ? Json("cap-reached") : Json((int)ax.axes.size());
  r["miyamoto_group_order"] = ax.group_capped ? Json("cap-reached") : Json(ax.group_order);
  if (A.form) {
    bool ok = true;
    for (auto& a : A.axes) ok = ok && !A.form_value(a, a).is_zero();
    if (ok) {
      Subspace R = radical(A, A.axes);
      r["radical_dim"] = R.dim();
      if (R.dim() > 0 && !ax.axes_capped && !ax.group_capped) {
        IdealLattice lat = enumerate_subideals(A, R, ax.miyamoto_gens, ax.axes, br.law);
        Json ideals = Json::array();
        for (auto& e : lat.ideals) {
          Json basis = Json::array();
          for (auto& v : e.space.basis) basis.push_back(vec_to_json(v));
          ideals.push_back({{"dim", e.dim}, {"basis", basis}});
        }
        r["ideal_lattice"] = ideals;
        r["ideal_lattice_certified"] = lat.certified;
        r["ideal_pencil_families"] = (int)lat.pencil_families.size();
      } else {
        r["ideal_lattice"] = Json::array();
      }
    }
  }
  if (opts.idempotents) {
    IdempotentEnumeration en = enumerate_idempotents(br, opts.adjoin_budget);
    Json ij;
    ij["isolated"] = (int)en.idempotents.size();
    ij["complete"] = en.complete;
    ij["families"] = en.matched_families;
    ij["unmatched_positive_parts"] = en.unmatched_positive_parts;
    Json pts = Json::array();
    Algebra AX(en.desc, A.labels);
    for (size_t i = 0; i < A.sc.size(); ++i) {
      Vec v;
      for (auto& c : A.sc[i]) v.push_back(embed(c, en.desc));
      AX.sc[i] = std::move(v);
    }
    if (A.form) {
      Mat f(en.desc, A.n, A.n);
      for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) f.at(i, j) = embed(A.form->at(i, j), en.desc);
      AX.form = f;
    }
    for (auto& u : en.idempotents) {
      Json e;
      e["coordinates"] = vec_to_json(u);
      if (AX.form) e["length"] = AX.form_value(u, u).str();
      pts.push_back(e);
    }
    ij["points"] = pts;
    r["idempotents"] = ij;
  }
  return r;
}

namespace {

bool quotient_matches_tag(const Algebra& Q, const BuildResult& parent, const std::string& tag) {
  const DescP& d = Q.d;
  auto axes_of = [&](const Algebra& B) {
    std::vector<Vec> out;
    for (auto& a : B.axes)
      if (!vec_is_zero(a) && B.product(a, a) == a) {
        bool dup = false;
        for (auto& b : out) dup = dup || b == a;
        if (!dup) out.push_back(a);
      }
    return out;
  };
  std::vector<Vec> qaxes = axes_of(Q);
  if (tag == "1A") return Q.n == 1;
  if (tag == "2B" || tag == "3Cx" || tag == "S2circ" || tag == "S2hat" || tag.rfind("3C:", 0) == 0 ||
      tag.rfind("S:", 0) == 0) {
    if (qaxes.size() < 2) return false;
    FieldElem eta = tag.rfind("3C:", 0) == 0 ? parse_expr(d, tag.substr(3))
                                             : FieldElem::from_rat(d, Rat(1, 2));
    if (tag == "3Cx") eta = -FieldElem::one(d);
    JordanId jid = identify_jordan(Q, qaxes[0], qaxes[1], eta);
    if (tag == "2B") return jid.tag == "2B";
    if (tag == "3Cx") return jid.tag == "3Cx";
    if (tag == "S2circ") return jid.tag == "S2circ";
    if (tag == "S2hat") return jid.tag == "S2hat";
    if (tag.rfind("3C:", 0) == 0) return jid.tag.rfind("3C(", 0) == 0;
    if (tag.rfind("S:", 0) == 0) {
      FieldElem delta = parse_expr(d, tag.substr(2));
      return jid.tag.rfind("S(", 0) == 0 && jid.delta && *jid.delta == delta;
    }
  }
  if (tag.rfind("M:", 0) == 0) {
    // "M:<alpha>:<beta>:<dim>": Monster-type quotient fingerprint
    size_t p1 = tag.find(':', 2);
    size_t p2 = tag.find(':', p1 + 1);
    FieldElem al = parse_expr(d, tag.substr(2, p1 - 2));
    FieldElem bt = parse_expr(d, tag.substr(p1 + 1, p2 - p1 - 1));
    int dim = std::stoi(tag.substr(p2 + 1));
    if (Q.n != dim) return false;
    FusionLaw law = monster_law(al, bt);
    for (auto& a : qaxes) {
      AxisReport rep = check_axis(Q, a, law);
      if (!rep.passes()) return false;
    }
    return !qaxes.empty();
  }
  if (tag.rfind("AXIAL:", 0) == 0) {
    // "AXIAL:<family>[:<param>=<expr>...]": axial isomorphism onto a catalog build
    std::string rest = tag.substr(6);
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos != std::string::npos) {
      size_t nx = rest.find(':', pos);
      parts.push_back(rest.substr(pos, nx == std::string::npos ? nx : nx - pos));
      pos = nx == std::string::npos ? nx : nx + 1;
    }
    std::map<std::string, FieldElem> ps;
    for (size_t i = 1; i < parts.size(); ++i) {
      size_t eq = parts[i].find('=');
      ps.emplace(parts[i].substr(0, eq), parse_expr(d, parts[i].substr(eq + 1)));
    }
    BuildResult target = build_family(parts[0], d, ps);
    if (target.A.n != Q.n) return false;
    BuildResult qbr;
    qbr.A = Q;
    qbr.law = target.law;
    if (Q.gens.size() < 2) {
      if (qaxes.size() < 2) return false;
      qbr.A.axes = qaxes;
      qbr.A.gens = {0, 1};
    }
    return axial_iso(qbr, target).has_value();
  }
  if (tag.rfind("WA:", 0) == 0) {
    // "WA:<alpha>": W_a(alpha, 1/2, 1) fingerprint: dim 3, no identity,
    // M(alpha,1/2)-axes with empty 0-eigenspace
    FieldElem al = parse_expr(d, tag.substr(3));
    if (Q.n != 3) return false;
    if (find_identity(Q)) return false;
    FusionLaw law = monster_law(al, FieldElem::from_rat(d, Rat(1, 2)));
    for (auto& a : qaxes) {
      AxisReport rep = check_axis(Q, a, law);
      if (!rep.passes()) return false;
      if (rep.eigenspaces[1].dim() != 0) return false;  // empty 0-part
    }
    return !qaxes.empty();
  }
  (void)parent;
  return false;
}

}  // namespace

GoldenResult run_golden(const Json& corpus, bool stop_on_first) {
  GoldenResult res;
  if (!corpus.contains("cases") || !corpus["cases"].is_array())
    fail(Err::CorpusParseError, "corpus must contain a 'cases' array");
  if (corpus["cases"].empty())
    res.messages.push_back("warning: empty corpus; trivially passing");
  for (auto& c : corpus["cases"]) {
    std::string type = c.at("type").get<std::string>();
    std::string label = c.value("label", type);
    bool ok = false;
    std::string detail;
    try {
      if (type == "validate") {
        BuildResult br = build_from_case(c);
        ValidationReport rep = validate(br);
        ok = rep.pass();
        if (!ok && !rep.failures.empty()) detail = rep.failures.front();
      } else if (type == "validate_fails") {
        BuildResult br = build_from_case(c);
        ValidationReport rep = validate(br);
        ok = !rep.pass();
      } else if (type == "determinant") {
        BuildResult br = build_from_case(c);
        FieldElem expect = parse_expr(br.A.d, c.at("expect").get<std::string>());
        FieldElem got = det(*br.A.form);
        ok = got == expect;
        if (!ok) detail = "got " + got.str();
      } else if (type == "fingerprint") {
        BuildResult br = build_from_case(c);
        AxisReport rep = check_axis(br.A, br.A.axes[br.A.gens[0]], br.law);
        std::vector<int> expect = c.at("expect").get<std::vector<int>>();
        std::vector<int> got;
        for (auto& e : rep.eigenspaces) got.push_back(e.dim());
        ok = got == expect && rep.passes();
      } else if (type == "axet") {
        BuildResult br = build_from_case(c);
        AxetClosure ax = axet_closure(br.A, br.A.axes, br.law, c.value("cap", 64),
                                      c.value("group_cap", 256));
        ok = true;
        if (c.contains("axes")) ok = ok && !ax.axes_capped && (int)ax.axes.size() == c["axes"];
        if (c.contains("group"))
          ok = ok && !ax.group_capped && ax.group_order == c["group"].get<long>();
        if (!ok)
          detail = "axes " + std::to_string(ax.axes.size()) + " group " +
                   std::to_string(ax.group_order);
      } else if (type == "identity") {
        BuildResult br = build_from_case(c);
        auto id = find_identity(br.A);
        if (c.at("expect").is_null())
          ok = !id.has_value();
        else {
          Vec expect = vec_from_json(c["expect"], br.A.d);
          ok = id && *id == expect;
        }
      } else if (type == "radical_dim") {
        BuildResult br = build_from_case(c);
        ok = radical(br.A, br.A.axes).dim() == c.at("expect").get<int>();
      } else if (type == "ideal_row") {
        BuildResult br = build_from_case(c);
        std::vector<Vec> gens;
        for (auto& g : c.at("generators")) gens.push_back(vec_from_json(g, br.A.d));
        IdealSub I = ideal_closure(br.A, gens);
        ok = I.space.dim() == c.at("dim").get<int>();
        ok = ok && subspace_from_rows(br.A.d, br.A.n, gens) == I.space;  // gens span the ideal
        AxetClosure ax = axet_closure(br.A, br.A.axes, br.law);
        ok = ok && miyamoto_invariant(I.space, ax.miyamoto_gens);
        if (ok && c.contains("quotient")) {
          Quotient q = quotient(br.A, I);
          ok = quotient_matches_tag(q.algebra, br, c["quotient"].get<std::string>());
          if (!ok) detail = "quotient tag mismatch";
        }
      } else if (type == "idempotent_count") {
        BuildResult br = build_from_case(c);
        IdempotentEnumeration en = enumerate_idempotents(br, c.value("budget", 4));
        ok = en.complete && (int)en.idempotents.size() == c.at("isolated").get<int>();
        if (c.contains("families")) {
          auto fams = c["families"].get<std::vector<std::string>>();
          std::sort(fams.begin(), fams.end());
          auto got = en.matched_families;
          std::sort(got.begin(), got.end());
          ok = ok && fams == got && en.unmatched_positive_parts == 0;
        }
        if (!ok)
          detail = "isolated " + std::to_string(en.idempotents.size()) +
                   (en.complete ? "" : " (incomplete)");
      } else if (type == "iso") {
        BuildResult a = build_from_case(c.at("a"));
        BuildResult b = build_from_case(c.at("b"));
        auto w = axial_iso(a, b);
        bool expect = c.at("expect").get<bool>();
        ok = w.has_value() == expect;
        if (ok && w && c.contains("axial")) ok = w->axial == c["axial"].get<bool>();
      } else if (type == "jordan_id") {
        BuildResult br = build_from_case(c);
        FieldElem eta = parse_expr(br.A.d, c.at("eta").get<std::string>());
        JordanId jid =
            identify_jordan(br.A, br.A.axes[br.A.gens[0]], br.A.axes[br.A.gens[1]], eta);
        ok = jid.tag == c.at("expect").get<std::string>();
        if (!ok) detail = "got " + jid.tag;
      } else {
        fail(Err::CorpusParseError, "unknown case type " + type);
      }
    } catch (const AxlError& e) {
      if (std::string(e.what()).find("corpus") != std::string::npos) throw;
      ok = false;
      detail = e.what();
    }
    if (ok) {
      ++res.passed;
    } else {
      ++res.failed;
      res.messages.push_back("FAIL " + label + (detail.empty() ? "" : ": " + detail));
      if (stop_on_first) return res;
    }
  }
  return res;
}

}  // namespace axl
