// Acceptance suite: one pass/fail line per criterion, exact checks throughout.
//
// Criterion 6 contains one item that exact computation refutes (the claimed
// axial isomorphism between 4B and 4Y at alpha = +-1/sqrt2); it is reported
// honestly as a failure with the obstruction printed, not patched over.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "axl/idempotents.hpp"
#include "axl/ideals.hpp"
#include "axl/isomorph.hpp"
#include "axl/report.hpp"
#include "test_util.hpp"

using namespace axl;
using namespace axl::testutil;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Checker {
  std::ostringstream log;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "    FAILED: " << what << "\n";
    }
  }
  void note(const std::string& what) { log << "    note: " << what << "\n"; }
};

void run_criterion(int num, const std::string& name, const std::function<void(Checker&)>& body) {
  Checker c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.log << "    EXCEPTION: " << e.what() << "\n";
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[%s] criterion %d: %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", num, name.c_str(), secs);
  std::string lg = c.log.str();
  if (!lg.empty()) std::fputs(lg.c_str(), stdout);
  std::fflush(stdout);
  if (!c.ok) ++g_failures;
}

BuildResult build_sym(const std::string& fam) {
  DescP d = FieldDesc::make(0, family_info(fam).params);
  std::map<std::string, FieldElem> ps;
  for (auto& p : family_info(fam).params) ps.emplace(p, FieldElem::generator(d, p));
  return build_family(fam, d, ps);
}

bool on_family_membership(const Vec& u, const IdemFamily& f, const Vec& id) {
  Vec q = u;
  if (f.complement)
    for (size_t i = 0; i < q.size(); ++i)
      q[i] = (id[i].d.get() == q[i].d.get() ? id[i] : embed(id[i], q[i].d)) - q[i];
  for (auto& g : f.membership) {
    FPoly ge = g.d.get() == q[0].d.get() ? g : fp_embed(g, q[0].d);
    if (!fp_eval(ge, q).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------- criterion 1

void criterion1(Checker& c) {
  auto d = FieldDesc::make(0, {});
  auto r = [&](long a, long b) { return fr(d, a, b); };
  using M = std::map<std::string, FieldElem>;
  std::map<std::string, std::vector<M>> points = {
      {"3A",
       {M{{"alpha", r(2, 1)}, {"beta", r(3, 1)}}, M{{"alpha", r(-1, 1)}, {"beta", r(1, 3)}},
        M{{"alpha", r(5, 2)}, {"beta", r(7, 1)}}}},
      {"4A", {M{{"beta", r(2, 1)}}, M{{"beta", r(-3, 1)}}, M{{"beta", r(3, 7)}}}},
      {"4J", {M{{"beta", r(2, 1)}}, M{{"beta", r(-3, 1)}}, M{{"beta", r(3, 7)}}}},
      {"6J", {M{{"beta", r(2, 1)}}, M{{"beta", r(-3, 1)}}, M{{"beta", r(3, 7)}}}},
      {"4Yb", {M{{"beta", r(3, 1)}}, M{{"beta", r(-2, 1)}}, M{{"beta", r(2, 7)}}}},
      {"4B", {M{{"alpha", r(3, 1)}}, M{{"alpha", r(-2, 1)}}, M{{"alpha", r(4, 3)}}}},
      {"4Ya", {M{{"alpha", r(3, 1)}}, M{{"alpha", r(-2, 1)}}, M{{"alpha", r(4, 3)}}}},
      {"5A", {M{{"alpha", r(3, 1)}}, M{{"alpha", r(-2, 1)}}, M{{"alpha", r(4, 3)}}}},
      {"6A", {M{{"alpha", r(3, 1)}}, M{{"alpha", r(-2, 1)}}, M{{"alpha", r(4, 3)}}}},
      {"6Y", {M{}, M{}, M{}}},
      {"IY5", {M{{"alpha", r(3, 1)}}, M{{"alpha", r(-2, 1)}}, M{{"alpha", r(4, 3)}}}},
      {"IY3",
       {M{{"alpha", r(3, 1)}, {"mu", r(2, 1)}}, M{{"alpha", r(-1, 1)}, {"mu", r(5, 1)}},
        M{{"alpha", r(7, 2)}, {"mu", r(-1, 1)}}}},
      {"IY3mu1", {M{{"alpha", r(3, 1)}}, M{{"alpha", r(-2, 1)}}, M{{"alpha", r(4, 3)}}}},
      {"1A", {M{}, M{}, M{}}},
      {"2B", {M{}, M{}, M{}}},
      {"3C", {M{{"eta", r(2, 1)}}, M{{"eta", r(-1, 1)}}, M{{"eta", r(5, 3)}}}},
      {"3Cx", {M{}, M{}, M{}}},
      {"Sdelta", {M{{"delta", r(0, 1)}}, M{{"delta", r(3, 1)}}, M{{"delta", r(-2, 1)}}}},
      {"S2circ", {M{}, M{}, M{}}},
      {"S2hat", {M{}, M{}, M{}}},
  };
  int monster = 0, jordan = 0;
  for (auto& [fam, ms] : points) {
    (family_info(fam).monster ? monster : jordan) += 1;
    for (auto& ps : ms) {
      BuildResult br = build_family(fam, d, ps);
      ValidationReport rep = validate(br);
      c.require(rep.pass(), fam + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    }
  }
  // IY3 appears with two presentations; the twelve Monster families are
  // 3A..6Y, IY3, IY5
  c.require(monster == 13 && jordan == 7, "family coverage (12 Monster + 7 Jordan-type)");
}

// ---------------------------------------------------------------- criterion 2

void criterion2(Checker& c) {
  struct Case {
    std::string fam;
    std::string formula;
  };
  std::vector<Case> cases = {
      {"3A",
       "-(alpha^2*(3*alpha - beta - 1)*(3*alpha^2 + 3*alpha*beta - beta - 1)*(3*alpha^2 + "
       "3*alpha*beta - 9*alpha - 2*beta + 4)^3)/(512*(2*alpha - 1)^5)"},
      {"4A", "-1/8*beta*(2*beta-1)^3"},
      {"4J", "2*(2*beta-1)^2*(4*beta+1)"},
      {"4B", "1/16*(alpha-2)^4*(alpha+1)^2"},
      {"4Ya", "-1/16*alpha^4*(alpha-2)^3/(alpha+1)"},
      {"4Yb", "256*beta^2*(2*beta-1)^6"},
      {"5A", "-(15625*(3*alpha-7)^5*((alpha-(5*alpha-1)/8))^2)/(8388608*((5*alpha-1)/8))"},
      {"6A",
       "-((alpha-1)^3*(3*alpha-2)*(7*alpha-4)^5*(12*alpha^2-alpha-2)*(alpha^2+4*alpha-2)^4)/"
       "(32768*(2*alpha-1)^11)"},
      {"6J", "-1/16*(beta-2)^5*(2*beta-1)^2*(7*beta+1)"},
  };
  for (auto& cs : cases) {
    BuildResult br = build_sym(cs.fam);
    FieldElem dv = det(*br.A.form);
    c.require(dv == parse_expr(br.A.d, cs.formula), cs.fam + " symbolic determinant");
    if (br.A.n == 8) {
      auto d0 = FieldDesc::make(0, {});
      std::string pname = family_info(cs.fam).params[0];
      for (auto [num, den] : std::vector<std::pair<long, long>>{
               {3, 1}, {-2, 1}, {5, 1}, {9, 2}, {-7, 3}}) {
        FieldElem val = fr(d0, num, den);
        BuildResult bp = build_family(cs.fam, d0, {{pname, val}});
        c.require(det(*bp.A.form) == parse_expr(d0, cs.formula, {{pname, val}}),
                  cs.fam + " determinant at a rational point");
      }
    }
  }
}

// ---------------------------------------------------------------- criterion 3

void criterion3(Checker& c) {
  std::map<std::string, std::vector<int>> expect = {
      {"3A", {1, 1, 1, 1}},  {"4A", {1, 2, 1, 1}},  {"4J", {1, 2, 1, 1}}, {"4B", {1, 2, 1, 1}},
      {"4Ya", {1, 2, 1, 1}}, {"4Yb", {1, 2, 1, 1}}, {"5A", {1, 2, 1, 2}}, {"6A", {1, 3, 2, 2}},
      {"6J", {1, 3, 2, 2}},  {"6Y", {1, 2, 1, 1}},  {"IY5", {1, 2, 1, 2}},
  };
  for (auto& [fam, dims] : expect) {
    BuildResult br = build_sym(fam);
    for (int g : br.A.gens) {
      AxisReport rep = check_axis(br.A, br.A.axes[g], br.law);
      std::vector<int> got;
      for (auto& e : rep.eigenspaces) got.push_back(e.dim());
      c.require(rep.passes() && got == dims, fam + " eigenspace fingerprint");
    }
  }
}

// ---------------------------------------------------------------- criterion 4

struct IdealRow {
  std::string label;
  std::string fam;
  uint32_t chr = 0;
  bool symbolic_alpha = false;
  std::map<std::string, std::string> params;
  std::vector<std::vector<std::string>> gens;
  int dim;
  std::string quotient_tag;  // empty = skip tag check
};

void check_ideal_row(Checker& c, const IdealRow& row) {
  Json one;
  one["cases"] = Json::array();
  Json cs;
  cs["label"] = row.label;
  cs["type"] = "ideal_row";
  cs["family"] = row.fam;
  if (row.chr) cs["char"] = row.chr;
  if (row.symbolic_alpha) cs["symbolic"] = Json::array({"alpha"});
  Json pj = Json::object();
  for (auto& [k, v] : row.params) pj[k] = v;
  cs["params"] = pj;
  Json gj = Json::array();
  for (auto& g : row.gens) {
    Json rowj = Json::array();
    for (auto& e : g) rowj.push_back(e);
    gj.push_back(rowj);
  }
  cs["generators"] = gj;
  cs["dim"] = row.dim;
  if (!row.quotient_tag.empty()) cs["quotient"] = row.quotient_tag;
  one["cases"].push_back(cs);
  GoldenResult res = run_golden(one);
  c.require(res.failed == 0,
            row.label + (res.messages.empty() ? "" : " [" + res.messages.front() + "]"));
}

void criterion4(Checker& c) {
  std::vector<IdealRow> rows = {
      {"3A b=(1-3a^2)/(3a-1)", "3A", 0, false, {{"alpha", "2"}, {"beta", "-11/5"}},
       {{"0", "0", "0", "1"}}, 1, "M:2:-11/5:3"},
      {"3A b=3a-1", "3A", 0, false, {{"alpha", "3"}, {"beta", "8"}},
       {{"3", "3", "3", "2"}}, 1, "3C:8"},
      {"3A baric", "3A", 0, false, {{"alpha", "3"}, {"beta", "-4/7"}},
       {{"1", "0", "0", "14/45"}, {"0", "1", "0", "14/45"}, {"0", "0", "1", "14/45"}}, 3, "1A"},
      {"4A radical", "4A", 0, false, {{"beta", "1/2"}},
       {{"-1", "1", "-1", "1", "0"}, {"0", "0", "0", "0", "1"}}, 2, "S:0"},
      {"4A annihilator", "4A", 0, false, {{"beta", "1/2"}},
       {{"0", "0", "0", "0", "1"}}, 1, "M:1/4:1/2:4"},
      {"4J b=-1/4", "4J", 0, false, {{"beta", "-1/4"}},
       {{"1", "1", "1", "1", "1"}}, 1, "M:-1/2:-1/4:4"},
      {"4B radical -> IY3(-1,1/2,0)^x", "4B", 0, false, {{"alpha", "-1"}},
       {{"0", "1", "0", "1", "1"}, {"1", "0", "1", "0", "1"}}, 2, "M:-1:1/2:3"},
      {"4B r0-r1 -> IY3(-1,1/2,0)", "4B", 0, false, {{"alpha", "-1"}},
       {{"-1", "1", "-1", "1", "0"}}, 1, "AXIAL:IY3:alpha=-1:mu=0"},
      {"4B r0+r1 -> 4B(-1,1/2)^x", "4B", 0, false, {{"alpha", "-1"}},
       {{"1", "1", "1", "1", "2"}}, 1, "M:-1:1/2:4"},
      {"4Ya radical -> 2B", "4Ya", 0, false, {{"alpha", "2"}},
       {{"0", "1", "0", "-1", "0"}, {"1", "0", "-1", "0", "0"}, {"0", "0", "0", "0", "1"}}, 3,
       "2B"},
      {"4Ya axis ideal 1", "4Ya", 0, false, {{"alpha", "2"}},
       {{"0", "1", "0", "0", "0"}, {"0", "0", "0", "1", "0"}, {"1", "0", "-1", "0", "0"},
        {"0", "0", "0", "0", "1"}},
       4, "1A"},
      {"4Ya axis ideal 2", "4Ya", 0, false, {{"alpha", "2"}},
       {{"1", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0"}, {"0", "1", "0", "-1", "0"},
        {"0", "0", "0", "0", "1"}},
       4, "1A"},
      {"5A a=7/3", "5A", 0, false, {{"alpha", "7/3"}},
       {{"1", "-1", "0", "0", "0", "0"}, {"0", "1", "-1", "0", "0", "0"},
        {"0", "0", "1", "-1", "0", "0"}, {"0", "0", "0", "1", "-1", "0"},
        {"0", "0", "0", "0", "0", "1"}},
       5, "1A"},
      {"6A a=2/3", "6A", 0, false, {{"alpha", "2/3"}},
       {{"0", "0", "0", "0", "0", "0", "0", "1"}}, 1, "M:2/3:-1/3:7"},
      {"6A a=4/7 -> 3C(4/7)", "6A", 0, false, {{"alpha", "4/7"}},
       {{"0", "0", "1", "0", "-1", "0", "0", "0"}, {"1", "0", "-1", "0", "0", "0", "0", "0"},
        {"0", "1", "0", "0", "0", "-1", "0", "0"}, {"0", "0", "0", "1", "0", "-1", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "1"}},
       5, "3C:4/7"},
      {"6J b=-1/7", "6J", 0, false, {{"beta", "-1/7"}},
       {{"1", "1", "1", "1", "1", "1", "1", "1"}}, 1, "M:-2/7:-1/7:7"},
      {"6J b=2 -> 3C(4)", "6J", 0, false, {{"beta", "2"}},
       {{"0", "0", "1", "0", "-1", "0", "0", "0"}, {"1", "0", "0", "0", "-1", "0", "0", "0"},
        {"0", "1", "0", "-1", "0", "0", "0", "0"}, {"0", "0", "0", "1", "0", "-1", "0", "0"},
        {"0", "0", "0", "0", "0", "0", "1", "-1/2"}},
       5, "3C:4"},
      {"6Y <z> -> 6Y^x", "6Y", 0, false, {}, {{"0", "0", "0", "0", "1"}}, 1, "M:1/2:2:4"},
      {"6Y <d,z> -> 3C(2)", "6Y", 0, false, {},
       {{"0", "0", "0", "1", "0"}, {"0", "0", "0", "0", "1"}}, 2, "3C:2"},
      {"6Y diffs -> S2hat", "6Y", 0, false, {},
       {{"1", "-1", "0", "0", "0"}, {"0", "1", "-1", "0", "0"}}, 2, "S2hat"},
      {"6Y diffs+z -> S2circ", "6Y", 0, false, {},
       {{"1", "-1", "0", "0", "0"}, {"0", "1", "-1", "0", "0"}, {"0", "0", "0", "0", "1"}}, 3,
       "S2circ"},
      {"6Y radical -> 1A", "6Y", 0, false, {},
       {{"1", "-1", "0", "0", "0"}, {"0", "1", "-1", "0", "0"}, {"0", "0", "0", "1", "0"},
        {"0", "0", "0", "0", "1"}},
       4, "1A"},
      {"IY3 mu=1 <n> -> W_a", "IY3mu1", 0, false, {{"alpha", "3"}},
       {{"0", "0", "0", "1"}}, 1, "WA:3"},
      {"IY3 mu=1 <z> -> S2hat", "IY3mu1", 0, false, {{"alpha", "3"}},
       {{"0", "0", "1", "0"}}, 1, "S2hat"},
      {"IY3 mu=1 <z,n> -> S2circ", "IY3mu1", 0, false, {{"alpha", "3"}},
       {{"0", "0", "1", "0"}, {"0", "0", "0", "1"}}, 2, "S2circ"},
      {"IY3 mu=1 radical -> 1A", "IY3mu1", 0, false, {{"alpha", "3"}},
       {{"1", "-1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}, 3, "1A"},
      {"IY3 mu=-1 <e+f> -> 3C(a)", "IY3", 0, false, {{"alpha", "3"}, {"mu", "-1"}},
       {{"1", "1", "0", "0"}}, 1, "3C:3"},
      {"IY3 a=-1 <n> -> IY3^x", "IY3", 0, false, {{"alpha", "-1"}, {"mu", "2"}},
       {{"0", "0", "0", "1"}}, 1, "M:-1:1/2:3"},
      {"IY3 a=-1,mu=-1 <e+f,n> -> 3C(-1)^x", "IY3", 0, false, {{"alpha", "-1"}, {"mu", "-1"}},
       {{"1", "1", "0", "0"}, {"0", "0", "0", "1"}}, 2, "3Cx"},
      {"IY3 a=2 radical -> 1A", "IY3", 0, false, {{"alpha", "2"}, {"mu", "3"}},
       {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}}, 3, "1A"},
      {"IY5 ann -> IY5^x", "IY5", 0, false, {{"alpha", "3"}},
       {{"1", "-4", "6", "-4", "1", "0"}}, 1, "M:3:1/2:5"},
      {"IY5 <u3,u4> -> IY5^xx", "IY5", 0, false, {{"alpha", "3"}},
       {{"-1", "5", "-9", "7", "-2", "0"}, {"1", "-4", "6", "-4", "1", "0"}}, 2, ""},
      {"IY5 <u2+4z,..> -> S2hat", "IY5", 0, false, {{"alpha", "3"}},
       {{"0", "0", "1", "-2", "1", "4"}, {"-1", "5", "-9", "7", "-2", "0"},
        {"1", "-4", "6", "-4", "1", "0"}},
       3, "S2hat"},
      {"IY5 <u2-4/(2a-1)z,..> -> W_a", "IY5", 0, false, {{"alpha", "3"}},
       {{"0", "0", "1", "-2", "1", "-4/5"}, {"-1", "5", "-9", "7", "-2", "0"},
        {"1", "-4", "6", "-4", "1", "0"}},
       3, "WA:3"},
      {"IY5 <u2,z,..> -> S2circ", "IY5", 0, false, {{"alpha", "3"}},
       {{"0", "0", "1", "-2", "1", "0"}, {"-1", "5", "-9", "7", "-2", "0"},
        {"1", "-4", "6", "-4", "1", "0"}, {"0", "0", "0", "0", "0", "1"}},
       4, "S2circ"},
      {"IY5 radical -> 1A", "IY5", 0, false, {{"alpha", "3"}},
       {{"1", "-1", "0", "0", "0", "0"}, {"0", "1", "-1", "0", "0", "0"},
        {"0", "0", "1", "-1", "0", "0"}, {"0", "0", "0", "1", "-1", "0"},
        {"0", "0", "0", "0", "0", "1"}},
       5, "1A"},
      // characteristic 5: 5A(alpha, 1/2) rows in 5A coordinates, z = 2(w-u4)
      {"5A char5 ann -> IY5^x", "5A", 5, true, {},
       {{"1", "-4", "6", "-4", "1", "0"}}, 1, "M:alpha:1/2:5"},
      {"5A char5 <u3,u4> -> IY5^xx", "5A", 5, true, {},
       {{"-1", "5", "-9", "7", "-2", "0"}, {"1", "-4", "6", "-4", "1", "0"}}, 2, ""},
      {"5A char5 u2-z row -> S2hat", "5A", 5, true, {},
       {{"2", "-8", "13", "-10", "3", "3"}, {"-1", "5", "-9", "7", "-2", "0"},
        {"1", "-4", "6", "-4", "1", "0"}},
       3, "S2hat"},
      {"5A char5 u2+1/(2a-1)z row -> W_a", "5A", 5, true, {},
       {{"8/(2*alpha-1)", "-4-32/(2*alpha-1)", "6+48/(2*alpha-1)", "-4-32/(2*alpha-1)+2",
         "1+8/(2*alpha-1)-1", "-8/(2*alpha-1)"},
        {"-1", "5", "-9", "7", "-2", "0"}, {"1", "-4", "6", "-4", "1", "0"}},
       3, "WA:alpha"},
      {"5A char5 <u2,z,..> -> S2circ", "5A", 5, true, {},
       {{"0", "0", "1", "-2", "1", "0"}, {"-1", "5", "-9", "7", "-2", "0"},
        {"1", "-4", "6", "-4", "1", "0"}, {"2", "-8", "12", "-8", "2", "-2"}},
       4, "S2circ"},
      {"5A char5 radical -> 1A", "5A", 5, true, {},
       {{"1", "-1", "0", "0", "0", "0"}, {"0", "1", "-1", "0", "0", "0"},
        {"0", "0", "1", "-1", "0", "0"}, {"0", "0", "0", "1", "-1", "0"},
        {"2", "-8", "12", "-8", "2", "-2"}},
       5, "1A"},
      // characteristic 5: 6A rows
      {"6A char5 a=-1 radical -> IY3(-1,1/2,1/2)^x", "6A", 5, false, {{"alpha", "-1"}},
       {{"0", "0", "0", "0", "0", "0", "0", "1"},
        {"0", "0", "1", "0", "-1", "1", "0", "0"},
        {"1", "0", "1", "-1", "0", "1", "0", "0"},
        {"1", "-1", "1", "-1", "1", "-1", "0", "0"},
        {"1", "1", "1", "1", "1", "1", "3", "1"}},
       5, "M:-1:3:3"},
      {"6A char5 a=2 radical -> 1A", "6A", 5, false, {{"alpha", "2"}},
       {{"0", "0", "1", "-1", "0", "0", "0", "0"}, {"0", "0", "0", "1", "-1", "0", "0", "0"},
        {"0", "0", "0", "0", "1", "-1", "0", "0"}, {"1", "0", "0", "0", "0", "-1", "0", "0"},
        {"1", "-1", "0", "0", "0", "0", "0", "0"}, {"1", "1", "1", "1", "1", "1", "-1", "0"},
        {"0", "0", "0", "0", "0", "0", "0", "1"}},
       7, "1A"},
      // characteristic 3: 3A row (there -1 = 1/2, so 3C(-1)^x appears as S(2)^o)
      {"3A char3 b=-1 (3C(-1)^x = S(2)^o here)", "3A", 3, true, {{"beta", "-1"}},
       {{"1", "1", "1", "0"}, {"0", "0", "0", "1"}}, 2, "S2circ"},
  };
  for (auto& row : rows) check_ideal_row(c, row);

  struct Rad {
    std::string fam;
    uint32_t chr;
    std::map<std::string, std::string> params;
    int dim;
  };
  for (auto& rd : std::vector<Rad>{{"3A", 0, {{"alpha", "2"}, {"beta", "-11/5"}}, 1},
                                   {"3A", 0, {{"alpha", "3"}, {"beta", "8"}}, 1},
                                   {"3A", 0, {{"alpha", "3"}, {"beta", "-4/7"}}, 3},
                                   {"4A", 0, {{"beta", "1/2"}}, 2},
                                   {"4J", 0, {{"beta", "-1/4"}}, 1},
                                   {"4B", 0, {{"alpha", "-1"}}, 2},
                                   {"4Ya", 0, {{"alpha", "2"}}, 3},
                                   {"5A", 0, {{"alpha", "7/3"}}, 5},
                                   {"6A", 0, {{"alpha", "2/3"}}, 1},
                                   {"6A", 0, {{"alpha", "4/7"}}, 5},
                                   {"6A", 5, {{"alpha", "-1"}}, 5},
                                   {"6A", 5, {{"alpha", "2"}}, 7},
                                   {"6J", 0, {{"beta", "-1/7"}}, 1},
                                   {"6J", 0, {{"beta", "2"}}, 5},
                                   {"6J", 5, {{"beta", "2"}}, 6},
                                   {"6Y", 0, {}, 4},
                                   {"IY5", 0, {{"alpha", "3"}}, 5}}) {
    DescP d = FieldDesc::make(rd.chr, {});
    std::map<std::string, FieldElem> ps;
    for (auto& [k, v] : rd.params) ps.emplace(k, parse_expr(d, v));
    BuildResult br = build_family(rd.fam, d, ps);
    Subspace R = radical(br.A, br.A.axes);
    c.require(R.dim() == rd.dim, rd.fam + " radical dim (char " + std::to_string(rd.chr) +
                                     "): got " + std::to_string(R.dim()));
  }

  // 6A over Q(zeta), zeta^2 = 6, alpha = -2 + zeta: 4-dim radical, quotient
  // IY3(alpha, 1/2, 1/2) via an axial isomorphism witness
  {
    auto d0 = FieldDesc::make(0, {});
    auto d = adjoin_sqrt(d0, "zeta", fe(d0, 6));
    FieldElem zeta = FieldElem::generator(d, "zeta");
    FieldElem al = zeta - fe(d, 2);
    BuildResult a6 = build_family("6A", d, {{"alpha", al}});
    Subspace R = radical(a6.A, a6.A.axes);
    c.require(R.dim() == 4, "6A at -2+sqrt6: radical is 4-dimensional");
    const Vec &a0 = a6.A.axes[0], &a1 = a6.A.axes[1], &a2 = a6.A.axes[2], &a3 = a6.A.axes[3];
    const Vec &am1 = a6.A.axes[4], &am2 = a6.A.axes[5];
    Vec suma = vec_zero(d, 8);
    for (int i = 0; i < 6; ++i) suma = vec_add(suma, a6.A.axes[i]);
    std::vector<Vec> gens = {
        vec_add(vec_sub(a0, a2), vec_sub(a3, am1)), vec_add(vec_sub(a0, am2), vec_sub(a3, a1)),
        vec_sub(vec_add(vec_add(a0, a2), am2), vec_add(vec_add(a1, a3), am1)),
        vec_add(vec_sub(suma, vec_scale(a6.named.at("c"), fe(d, 3) * al)),
                vec_scale(a6.named.at("z"), fe(d, 2) * (al - fe(d, 1))))};
    c.require(subspace_from_rows(d, 8, gens) == R, "6A at -2+sqrt6: printed radical generators");
    Quotient q = quotient(a6.A, {R, IdealSub::Flag::Ideal});
    c.require(q.algebra.n == 4, "6A at -2+sqrt6: quotient dimension 4");
    BuildResult target = build_family("IY3", d, {{"alpha", al}, {"mu", fr(d, 1, 2)}});
    BuildResult qbr;
    qbr.A = q.algebra;
    qbr.law = target.law;
    c.require(axial_iso(qbr, target).has_value(), "6A at -2+sqrt6: quotient is IY3(a,1/2,1/2)");
  }
  // 6A over Q(sqrt97): 1-dimensional radical
  {
    auto d0 = FieldDesc::make(0, {});
    auto d = adjoin_sqrt(d0, "r97", fe(d0, 97));
    FieldElem al = (FieldElem::generator(d, "r97") + fe(d, 1)) / fe(d, 24);
    BuildResult a6 = build_family("6A", d, {{"alpha", al}});
    Subspace R = radical(a6.A, a6.A.axes);
    c.require(R.dim() == 1, "6A at (1+sqrt97)/24: radical is 1-dimensional");
    Vec gen = vec_zero(d, 8);
    for (int i = 0; i < 6; ++i) gen = vec_add(gen, a6.A.axes[i]);
    FieldElem r97 = FieldElem::generator(d, "r97");
    gen = vec_sub(gen, vec_scale(a6.named.at("c"), (fe(d, 1) + r97) / fe(d, 8)));
    gen = vec_add(gen, vec_scale(a6.named.at("z"), (fe(d, 1) - r97) / fe(d, 8)));
    c.require(R.contains(gen), "6A at (1+sqrt97)/24: printed radical generator");
  }
  // 4Yb has no nontrivial proper ideals
  {
    auto d = FieldDesc::make(0, {});
    BuildResult br = build_family("4Yb", d, {{"beta", fe(d, 3)}});
    c.require(radical(br.A, br.A.axes).dim() == 0, "4Yb trivial radical");
  }
  // enumeration completeness on the tabulated radicals
  {
    auto d = FieldDesc::make(0, {});
    BuildResult y6 = build_family("6Y", d, {});
    Subspace R = radical(y6.A, y6.A.axes);
    AxetClosure ax = axet_closure(y6.A, y6.A.axes, y6.law);
    IdealLattice lat = enumerate_subideals(y6.A, R, ax.miyamoto_gens, ax.axes, y6.law);
    c.require(lat.certified && lat.ideals.size() == 5, "6Y lattice has exactly 5 nonzero ideals");
    for (auto& e : lat.ideals)
      c.require(miyamoto_invariant(e.space, ax.miyamoto_gens), "6Y ideal Miyamoto-invariant");
    BuildResult iy = build_family("IY5", d, {{"alpha", fe(d, 3)}});
    Subspace R5 = radical(iy.A, iy.A.axes);
    AxetClosure ax5 = axet_closure(iy.A, {iy.A.axes[0], iy.A.axes[1]}, iy.law, 12, 64);
    IdealLattice lat5 = enumerate_subideals(iy.A, R5, ax5.miyamoto_gens, iy.A.axes, iy.law);
    std::vector<int> dims;
    for (auto& e : lat5.ideals) dims.push_back(e.dim);
    c.require(dims == std::vector<int>{1, 2, 3, 3, 4, 5}, "IY5 lattice dims 1,2,3,3,4,5");
    BuildResult b4 = build_family("4B", d, {{"alpha", -fe(d, 1)}});
    Subspace R4 = radical(b4.A, b4.A.axes);
    AxetClosure ax4 = axet_closure(b4.A, b4.A.axes, b4.law);
    IdealLattice lat4 = enumerate_subideals(b4.A, R4, ax4.miyamoto_gens, ax4.axes, b4.law);
    c.require(!lat4.pencil_families.empty(), "4B alpha=-1: line-ideal pencil family detected");
    Vec r0 = vec_add(vec_add(b4.A.axes[0], b4.A.axes[2]), b4.named.at("c"));
    Vec r1 = vec_add(vec_add(b4.A.axes[1], b4.A.axes[3]), b4.named.at("c"));
    int symmetric = 0;
    for (auto& gen : {vec_sub(r0, r1), vec_add(r0, r1)}) {
      IdealSub I = ideal_closure(b4.A, {gen});
      if (I.space.dim() == 1 && I.space.contains(mat_apply(b4.sigma, gen))) ++symmetric;
    }
    Vec skew = vec_add(r0, vec_scale(r1, fe(d, 5)));
    IdealSub Is = ideal_closure(b4.A, {skew});
    c.require(symmetric == 2 && Is.space.dim() == 1 &&
                  !Is.space.contains(mat_apply(b4.sigma, skew)),
              "4B alpha=-1: exactly the two printed symmetric line ideals");
  }
  // 6A characteristic-5: I_{4/7} cap I_{-2+zeta} = J and the Highwater quotient
  {
    auto d = FieldDesc::make(5, {});
    BuildResult a6 = build_family("6A", d, {{"alpha", fe(d, 2)}});
    auto pe = [&](std::initializer_list<long> v) {
      Vec r;
      for (long x : v) r.push_back(fe(d, x));
      return r;
    };
    std::vector<Vec> g47 = {pe({0, 0, 1, 0, -1, 0, 0, 0}), pe({1, 0, -1, 0, 0, 0, 0, 0}),
                            pe({0, 1, 0, 0, 0, -1, 0, 0}), pe({0, 0, 0, 1, 0, -1, 0, 0}),
                            pe({0, 0, 0, 0, 0, 0, 0, 1})};
    std::vector<Vec> gz = {pe({0, 0, 1, 0, -1, 1, 0, 0}), pe({1, 0, 1, -1, 0, 1, 0, 0}),
                           pe({1, -1, 1, -1, 1, -1, 0, 0}), pe({1, 1, 1, 1, 1, 1, -1, 2})};
    IdealSub I1 = ideal_closure(a6.A, g47);
    IdealSub I2 = ideal_closure(a6.A, gz);
    c.require(I1.space.dim() == 5, "6A char5: I_{4/7} is 5-dimensional");
    c.require(I2.space.dim() == 4, "6A char5: I_{-2+zeta} is 4-dimensional");
    Subspace J = subspace_intersect(I1.space, I2.space);
    Subspace Jexp =
        subspace_from_rows(d, 8, {pe({0, 0, 1, 0, -1, 1, 0, 0}), pe({1, 0, 1, -1, 0, 1, 0, 0})});
    c.require(J == Jexp, "6A char5: the intersection is J as printed");
    c.require(is_ideal(a6.A, J), "6A char5: J is an ideal");
    Quotient q = quotient(a6.A, {J, IdealSub::Flag::Ideal});
    c.require(q.algebra.n == 6, "6A char5: A/J is 6-dimensional");
    FusionLaw law = monster_law(fe(d, 2), fr(d, 1, 2));
    bool axes_ok = !q.algebra.gens.empty();
    for (int g : q.algebra.gens)
      axes_ok = axes_ok && check_axis(q.algebra, q.algebra.axes[g], law).passes();
    c.require(axes_ok, "6A char5: A/J carries Monster (2,1/2) axes (Highwater quotient)");
  }
}

// ---------------------------------------------------------------- criterion 5

std::vector<FieldElem> solver_lengths(const BuildResult& br, const IdempotentEnumeration& en) {
  Algebra AX = embed_algebra(br.A, en.desc);
  std::vector<FieldElem> out;
  for (auto& u : en.idempotents) out.push_back(AX.form_value(u, u));
  return out;
}

// one printed representative with its expected orbit size and length
struct Rep {
  std::string label;
  Vec u;
  int orbit;
  std::optional<FieldElem> length;  // checked when present
};

void check_reps(Checker& c, const std::string& fam, const Algebra& A, const Mat& sigma,
                const std::vector<Mat>& miy_gens, const std::vector<Rep>& reps,
                std::map<int, int> expected_orbit_counts, bool counts_complete, long bezout_log2) {
  std::vector<Mat> gens = miy_gens;
  gens.push_back(sigma);
  std::vector<Mat> G = close_group(gens, A.d, A.n);
  std::map<int, int> got;
  long total = 1;  // the zero idempotent (orbit of size 1)
  got[1] = 1;
  std::vector<Vec> found{vec_zero(A.d, A.n)};
  Vec id_vec;
  {
    auto id = find_identity(A);
    if (id) id_vec = *id;
  }
  for (auto& r : reps) {
    c.require(A.product(r.u, r.u) == r.u, fam + " " + r.label + " is an idempotent");
    if (r.length) {
      c.require(A.form_value(r.u, r.u) == *r.length, fam + " " + r.label + " printed length");
    }
    std::vector<Vec> orbit = orbit_of(r.u, G);
    c.require((int)orbit.size() == r.orbit,
              fam + " " + r.label + " orbit size (got " + std::to_string(orbit.size()) + ")");
    got[r.orbit] += 1;
    total += (long)orbit.size();
    for (auto& v : orbit) {
      bool dup = false;
      for (auto& w : found) dup = dup || w == v;
      c.require(!dup, fam + " " + r.label + " orbit does not collide with earlier ones");
      found.push_back(v);
    }
    // complementation: 1 - u is an idempotent whenever the identity exists
    if (!id_vec.empty()) {
      Vec comp = vec_sub(id_vec, r.u);
      c.require(A.product(comp, comp) == comp, fam + " complement of " + r.label);
    }
  }
  for (auto& [sz, cnt] : expected_orbit_counts) {
    c.require(got[sz] == cnt, fam + ": number of orbits of size " + std::to_string(sz) +
                                  " (got " + std::to_string(got[sz]) + ", expected " +
                                  std::to_string(cnt) + ")");
  }
  if (counts_complete) {
    (void)bezout_log2;
  } else {
    c.require(total <= (1L << bezout_log2),
              fam + ": found idempotents within the Bezout bound 2^" +
                  std::to_string(bezout_log2));
  }
}

void criterion5_6A(Checker& c) {
  auto d = FieldDesc::make(0, {"alpha"});
  FieldElem al = FieldElem::generator(d, "alpha");
  BuildResult br = build_family("6A", d, {{"alpha", al}});
  const Algebra& A = br.A;
  FieldElem one = fe(d, 1), two = fe(d, 2);
  FieldElem bt = -al * al / (fe(d, 4) * (two * al - one));
  const Vec &a0 = A.axes[0], &a1 = A.axes[1], &a2 = A.axes[2], &a3 = A.axes[3];
  const Vec &am1 = A.axes[4], &am2 = A.axes[5];
  const Vec &cv = br.named.at("c"), &zv = br.named.at("z");
  Vec suma = vec_zero(d, 8);
  for (int i = 0; i < 6; ++i) suma = vec_add(suma, A.axes[i]);
  Vec id = *find_identity(A);
  Vec zp = vec_scale(zv, fe(d, 4) * (two * al - one) / ((fe(d, 3) * al - two) * (al + two)));
  Vec s = vec_scale(
      vec_sub(vec_sub(suma, vec_scale(cv, fe(d, 3) * al)),
              vec_scale(zv, fe(d, 6) * al / (al + two))),
      two * (two * al - one) / (fe(d, 12) * al * al - al - two));
  c.require(id == vec_add(vec_add(cv, zp), s), "6A: 1 = c + z' + s as printed");
  FieldElem q7 = fe(d, 7) * al * al + al - two;
  Vec u1 = vec_scale(
      vec_add(vec_scale(vec_sub(vec_sub(vec_add(a0, am2), vec_scale(cv, al)),
                                vec_scale(zp, two * al)),
                        (two - fe(d, 5) * al)),
              vec_scale(s, fe(d, 12) * al * al - al - two)),
      q7.inv());
  Vec u2 = vec_add(vec_add(vec_scale(a0, -al / ((two * al - one) * (al + two))),
                           vec_scale(vec_add(a1, am1), two / (al + two))),
                   vec_scale(zp, -two * bt / al));
  Vec u3 = vec_add(cv, vec_sub(u1, u2));
  auto sub_id = [&](const Vec& x, const Vec& y) { return *subalgebra_identity(A, {x, y}); };
  Vec id02 = sub_id(a0, a2), id03 = sub_id(a0, a3), id04 = sub_id(a0, am2);
  AxetClosure ax = axet_closure(A, A.axes, br.law);
  std::vector<Rep> reps = {
      {"c", cv, 1, one},
      {"z'", zp, 1, two * (fe(d, 7) * al - fe(d, 4)) / ((fe(d, 3) * al - two) * (al + two))},
      {"s", s, 1,
       -fe(d, 12) * (al - one) * (al * al + fe(d, 4) * al - two) /
           ((al + two) * (fe(d, 12) * al * al - al - two))},
      {"c+z'", vec_add(cv, zp), 1, std::nullopt},
      {"c+s", vec_add(cv, s), 1, std::nullopt},
      {"s+z'", vec_add(s, zp), 1, std::nullopt},
      {"1", id, 1,
       fe(d, 3) * (fe(d, 43) * al * al - fe(d, 46) * al + fe(d, 12)) /
           ((fe(d, 3) * al - two) * (fe(d, 12) * al * al - al - two))},
      {"1_{<a0,a2>}", id02, 2,
       (fe(d, 71) * al * al - fe(d, 76) * al + fe(d, 20)) /
           ((fe(d, 3) * al - two) * q7)},
      {"1 - 1_{<a0,a2>}", vec_sub(id, id02), 2, std::nullopt},
      {"1_{<a0,a2>} - z'", vec_sub(id02, zp), 2,
       -fe(d, 3) * (fe(d, 3) * al * al - fe(d, 10) * al + fe(d, 4)) / ((al + two) * q7)},
      {"1 - (1_{<a0,a2>} - z')", vec_sub(id, vec_sub(id02, zp)), 2, std::nullopt},
      {"1_{<a0,a4>}", id04, 3, fe(d, 3) / (al + one)},
      {"1 - 1_{<a0,a3>}", vec_sub(id, id03), 3, std::nullopt},
      {"1_{<a0,a3>} - c", vec_sub(id03, cv), 3, (two - al) / (al + one)},
      {"1 - (1_{<a0,a3>} - c)", vec_sub(id, vec_sub(id03, cv)), 3, std::nullopt},
      {"u1", u1, 3,
       (fe(d, 4) - fe(d, 7) * al) * (fe(d, 3) * al * al - fe(d, 10) * al + fe(d, 4)) /
           ((fe(d, 3) * al - two) * q7)},
      {"1 - u1", vec_sub(id, u1), 3, std::nullopt},
      {"u1 + c", vec_add(u1, cv), 3, std::nullopt},
      {"1 - (u1 + c)", vec_sub(id, vec_add(u1, cv)), 3, std::nullopt},
      {"a0", a0, 6, one},
      {"1 - a0", vec_sub(id, a0), 6,
       -two * (fe(d, 18) * al * al * al - fe(d, 78) * al * al + fe(d, 67) * al - fe(d, 16)) /
           ((fe(d, 3) * al - two) * (fe(d, 12) * al * al - al - two))},
      {"1_{<a0,a2>} - a0", vec_sub(id02, a0), 6, std::nullopt},
      {"1_{<a0,a3>} - a0", vec_sub(id03, a0), 6, (two - al) / (al + one)},
      {"1 - (1_{<a0,a2>} - a0)", vec_sub(id, vec_sub(id02, a0)), 6, std::nullopt},
      {"1 - (1_{<a0,a3>} - a0)", vec_sub(id, vec_sub(id03, a0)), 6, std::nullopt},
      {"u2", u2, 6,
       two * (fe(d, 7) * al - fe(d, 4)) / ((fe(d, 3) * al - two) * (al + two))},
      {"1 - u2", vec_sub(id, u2), 6, std::nullopt},
      {"1_{<a0,a2>} - u2", vec_sub(id02, u2), 6, std::nullopt},
      {"1 - (1_{<a0,a2>} - u2)", vec_sub(id, vec_sub(id02, u2)), 6, std::nullopt},
      {"u2 + a2", vec_add(u2, a2), 6,
       fe(d, 3) * (al * al + fe(d, 6) * al - fe(d, 4)) / ((fe(d, 3) * al - two) * (al + two))},
      {"1 - (u2 + a2)", vec_sub(id, vec_add(u2, a2)), 6, std::nullopt},
      {"u3", u3, 6, std::nullopt},
      {"1 - u3", vec_sub(id, u3), 6, std::nullopt},
  };
  check_reps(c, "6A", A, br.sigma, ax.miyamoto_gens, reps,
             {{1, 8}, {2, 4}, {3, 8}}, /*counts_complete=*/false, 8);
  (void)a1;
  (void)am1;
}

void criterion5_6J(Checker& c) {
  auto d0 = FieldDesc::make(0, {"beta"});
  FieldElem bt0 = FieldElem::generator(d0, "beta");
  FieldElem one0 = fe(d0, 1);
  FieldElem p = fe(d0, 384) * bt0.pow(5) - fe(d0, 960) * bt0.pow(4) + fe(d0, 373) * bt0.pow(3) -
                fe(d0, 21) * bt0 * bt0 - fe(d0, 9) * bt0 + one0;
  // towers: rho1, rho2 for u1; rho3 for u2..u5; (gamma, chi0) for u6
  auto d12a = adjoin_sqrt(d0, "p1", (fe(d0, 11) * bt0 - one0) / p);
  auto d12 = adjoin_sqrt(
      d12a, "p2",
      embed((fe(d0, 4) * bt0 - one0) *
                (fe(d0, 4) * bt0 * bt0 - fe(d0, 7) * bt0 + one0) / p,
            d12a));
  auto d3 = adjoin_sqrt(d0, "p3",
                        (fe(d0, 36) * bt0.pow(4) + fe(d0, 140) * bt0.pow(3) -
                         fe(d0, 43) * bt0 * bt0 - fe(d0, 2) * bt0 + one0)
                            .inv());

  BuildResult br = build_family("6J", d0, {{"beta", bt0}});
  const Algebra& A = br.A;
  AxetClosure ax = axet_closure(A, A.axes, br.law);
  Vec id = *find_identity(A);
  const Vec &a0 = A.axes[0], &a1 = A.axes[1], &a2 = A.axes[2], &a3 = A.axes[3];
  const Vec &am1 = A.axes[4], &am2 = A.axes[5];
  const Vec &uv = br.named.at("u"), &wv = br.named.at("w");
  Vec suma = vec_zero(d0, 8);
  for (int i = 0; i < 6; ++i) suma = vec_add(suma, A.axes[i]);
  FieldElem two0 = fe(d0, 2);
  Vec wp = vec_scale(vec_add(vec_scale(uv, -bt0), wv), (one0 + bt0).inv());
  Vec s = vec_scale(vec_sub(suma, vec_scale(vec_add(uv, wv), fe(d0, 6) * bt0 / (one0 + bt0))),
                    (fe(d0, 7) * bt0 + one0).inv());
  c.require(id == vec_add(vec_add(uv, wp), s), "6J: 1 = u + w' + s as printed");
  Vec id02 = *subalgebra_identity(A, {a0, a2});
  Vec id03 = *subalgebra_identity(A, {a0, a3});

  // rational-tower representatives first
  std::vector<Rep> reps = {
      {"u", uv, 1, fe(d0, 1)},
      {"w'", wp, 1, (two0 - bt0) / (one0 + bt0)},
      {"s", s, 1,
       fe(d0, 6) * (one0 - two0 * bt0) / ((one0 + bt0) * (one0 + fe(d0, 7) * bt0))},
      {"u+w'", vec_add(uv, wp), 1, fe(d0, 3) / (one0 + bt0)},
      {"u+s", vec_add(uv, s), 1,
       (fe(d0, 7) * bt0 * bt0 - fe(d0, 4) * bt0 + fe(d0, 7)) /
           (fe(d0, 7) * bt0 * bt0 + fe(d0, 8) * bt0 + one0)},
      {"s+w'", vec_add(s, wp), 1, (fe(d0, 8) - fe(d0, 7) * bt0) / (one0 + fe(d0, 7) * bt0)},
      {"1", id, 1, fe(d0, 9) / (one0 + fe(d0, 7) * bt0)},
      {"1_{<a0,a2>}", id02, 2, fe(d0, 3) / (one0 + bt0)},
      {"1-1_{<a0,a2>}", vec_sub(id, id02), 2,
       fe(d0, 6) * (one0 - two0 * bt0) / ((one0 + bt0) * (one0 + fe(d0, 7) * bt0))},
      {"1_{<a0,a3>}", id03, 3, fe(d0, 3) / (one0 + two0 * bt0)},
      {"1-1_{<a0,a3>}", vec_sub(id, id03), 3,
       fe(d0, 3) * (two0 - bt0) / ((one0 + fe(d0, 7) * bt0) * (one0 + two0 * bt0))},
      {"1_{<a0,a3>}-u", vec_sub(id03, uv), 3,
       two0 * (one0 - bt0) / (one0 + two0 * bt0)},
      {"1-(1_{<a0,a3>}-u)", vec_sub(id, vec_sub(id03, uv)), 3,
       (fe(d0, 14) * bt0 * bt0 + fe(d0, 6) * bt0 + fe(d0, 7)) /
           ((one0 + fe(d0, 7) * bt0) * (one0 + two0 * bt0))},
      {"a0", a0, 6, fe(d0, 1)},
      {"1-a0", vec_sub(id, a0), 6,
       (fe(d0, 8) - fe(d0, 7) * bt0) / (fe(d0, 7) * bt0 + one0)},
      {"1_{<a0,a2>}-a0", vec_sub(id02, a0), 6, (two0 - bt0) / (bt0 + one0)},
      {"1_{<a0,a3>}-a0", vec_sub(id03, a0), 6, two0 * (one0 - bt0) / (two0 * bt0 + one0)},
      {"1-(1_{<a0,a2>}-a0)", vec_sub(id, vec_sub(id02, a0)), 6,
       (fe(d0, 7) * bt0 * bt0 - fe(d0, 4) * bt0 + fe(d0, 7)) /
           ((bt0 + one0) * (fe(d0, 7) * bt0 + one0))},
      {"1-(1_{<a0,a3>}-a0)", vec_sub(id, vec_sub(id03, a0)), 6,
       (fe(d0, 14) * bt0 * bt0 + fe(d0, 6) * bt0 + fe(d0, 7)) /
           ((two0 * bt0 + one0) * (fe(d0, 7) * bt0 + one0))},
  };
  check_reps(c, "6J(rational reps)", A, br.sigma, ax.miyamoto_gens, reps,
             {}, false, 8);

  // +-u1 over Q(beta)(rho1, rho2): orbits of size 2
  {
    Algebra AX = embed_algebra(A, d12);
    FieldElem bt = embed(bt0, d12), one = fe(d12, 1), two = fe(d12, 2);
    FieldElem r1 = FieldElem::generator(d12, "p1"), r2 = FieldElem::generator(d12, "p2");
    FieldElem c1 = bt * (two * bt - one) / (one + fe(d12, 7) * bt) * r1;
    Vec u1 = vec_zero(d12, 8);
    int idx_of[6] = {2, 3, 4, 5, 1, 0};  // a0,a1,a2,a3,a-1,a-2 basis positions
    int par[6] = {1, -1, 1, -1, -1, 1};  // (-1)^i for i = 0,1,2,3,-1,-2
    for (int k = 0; k < 6; ++k) {
      FieldElem coeff = c1 + fe(d12, par[k]) * r2 / two;
      Vec basis = vec_zero(d12, 8);
      basis[idx_of[k]] = one;
      u1 = vec_add(u1, vec_scale(basis, coeff));
    }
    u1 = vec_add(u1, vec_scale(embed_vec(uv, d12),
                               (fe(d12, 46) * bt * bt - fe(d12, 3) * bt - one) /
                                   (two * (one + fe(d12, 7) * bt)) * r1));
    u1 = vec_sub(u1, vec_scale(embed_vec(wv, d12),
                               (fe(d12, 24) * bt * bt - bt - one) /
                                   (two * (one + fe(d12, 7) * bt)) * r1));
    Vec idx = embed_vec(id, d12);
    std::vector<Mat> gens;
    for (auto& g : ax.miyamoto_gens) gens.push_back(embed_mat(g, d12));
    gens.push_back(embed_mat(br.sigma, d12));
    std::vector<Mat> G = close_group(gens, d12, 8);
    FieldElem len_base = fe(d12, 9) / (two * (one + fe(d12, 7) * bt));
    FieldElem len_dev = (one - two * bt) * (one - fe(d12, 11) * bt) * r1 /
                        (two * (one + fe(d12, 7) * bt));
    for (int sgn = 0; sgn < 2; ++sgn) {
      Vec u = vec_add(vec_scale(idx, fr(d12, 1, 2)),
                      sgn ? vec_scale(u1, -one) : u1);
      c.require(AX.product(u, u) == u, "6J 1/2*1 +- u1 is an idempotent");
      c.require(AX.form_value(u, u) == (sgn ? len_base - len_dev : len_base + len_dev),
                "6J +-u1 printed length");
      c.require(orbit_of(u, G).size() == 2, "6J +-u1 orbit size 2");
    }
  }

  // +-u2..u5 over Q(beta)(rho3)
  {
    Algebra AX = embed_algebra(A, d3);
    FieldElem bt = embed(bt0, d3), one = fe(d3, 1), two = fe(d3, 2);
    FieldElem r3 = FieldElem::generator(d3, "p3");
    Vec idx = embed_vec(id, d3);
    Vec uvx = embed_vec(uv, d3), wpx = embed_vec(wp, d3), sx = embed_vec(s, d3);
    Vec a0x = embed_vec(a0, d3), a3x = embed_vec(a3, d3);
    Vec u2v = vec_add(
        vec_add(vec_scale(uvx, two * bt * (fe(d3, 5) * bt - one) * r3 - fr(d3, 1, 2)),
                vec_scale(wpx, (fe(d3, 26) * bt * bt - fe(d3, 9) * bt + one) / two * r3)),
        vec_add(vec_scale(sx, (fe(d3, 34) * bt * bt - fe(d3, 3) * bt - one) / two * r3),
                vec_scale(vec_add(a0x, a3x), (one - fe(d3, 5) * bt) * r3)));
    Vec u3v = vec_add(u2v, uvx);
    Vec a1x = embed_vec(a1, d3), am1x = embed_vec(am1, d3), a2x = embed_vec(a2, d3),
        am2x = embed_vec(am2, d3), wvx = embed_vec(wv, d3);
    FieldElem seven = fe(d3, 7);
    Vec u4v = vec_add(
        vec_scale(a0x, -fr(d3, 1, 2)),
        vec_scale(
            vec_add(
                vec_add(vec_scale(a0x, bt * (fe(d3, 42) * bt * bt - seven * bt - one)),
                        vec_scale(vec_add(vec_add(a1x, am1x), wvx),
                                  -(fe(d3, 34) * bt * bt - fe(d3, 3) * bt - one))),
                vec_add(vec_scale(vec_add(a2x, am2x),
                                  fe(d3, 22) * bt * bt - fe(d3, 3) * bt - one),
                        vec_scale(vec_add(a3x, uvx),
                                  fe(d3, 36) * bt * bt - bt - one))),
            r3 / (two * (seven * bt + one))));
    Vec u5v = vec_add(u4v, a0x);
    std::vector<Mat> gens;
    for (auto& g : ax.miyamoto_gens) gens.push_back(embed_mat(g, d3));
    gens.push_back(embed_mat(br.sigma, d3));
    std::vector<Mat> G = close_group(gens, d3, 8);
    FieldElem nine = fe(d3, 9);
    FieldElem base = nine / (two * (seven * bt + one));
    FieldElem dev1 = (seven * bt + one) / (two * (seven * bt + one));  // = 1/2
    FieldElem dev2 = fe(d3, 3) * bt * (one - two * bt) * (one - seven * bt) * r3 /
                     (two * (seven * bt + one));
    struct UD {
      const char* label;
      Vec* v;
      int orbit;
      int sign_u;  // +1: lengths base -+ dev1 -+ dev2 pattern per table
    };
    // lengths: u2: (9 -+ (1+7b) -+ 3b(1-2b)(1-7b) r3)/(2(1+7b)); u3: +- flips the
    // (1+7b) part; u4/u5 mirror with orbit 6
    std::vector<std::tuple<Vec*, int, int, int, const char*>> table = {
        {&u2v, 3, -1, -1, "u2"}, {&u3v, 3, +1, -1, "u3"}, {&u4v, 6, -1, +1, "u4"},
        {&u5v, 6, +1, +1, "u5"}};
    for (auto& [vp, orbit, s_mid, s_dev, label] : table) {
      for (int sgn = 0; sgn < 2; ++sgn) {
        FieldElem sg = sgn ? -one : one;
        Vec u = vec_add(vec_scale(idx, fr(d3, 1, 2)), vec_scale(*vp, sg));
        c.require(AX.product(u, u) == u, std::string("6J 1/2*1 +- ") + label + " idempotent");
        FieldElem expect = base + sg * fe(d3, s_mid) * dev1 + sg * fe(d3, s_dev) * dev2;
        c.require(AX.form_value(u, u) == expect,
                  std::string("6J +-") + label + " printed length");
        c.require((int)orbit_of(u, G).size() == orbit,
                  std::string("6J +-") + label + " orbit size");
      }
    }
  }

  // +-u6(i) over Q(beta)(gamma, chi0): orbits of size 6, 4 of them
  {
    FieldElem B = two0 * (fe(d0, 960) * bt0.pow(5) - fe(d0, 1536) * bt0.pow(4) +
                          fe(d0, 167) * bt0.pow(3) + fe(d0, 69) * bt0 * bt0 -
                          fe(d0, 3) * bt0 - one0);
    FieldElem Cc = (fe(d0, 608) * bt0.pow(5) - fe(d0, 1152) * bt0.pow(4) +
                    fe(d0, 47) * bt0.pow(3) + fe(d0, 77) * bt0 * bt0 - fe(d0, 3) * bt0 - one0);
    FieldElem S = Cc;  // 4(7b+1)^2 p chi0 chi1 = S
    auto dg = adjoin_sqrt(d0, "gam", B * B / fe(d0, 4) - Cc * Cc);
    FieldElem gamma0 = -embed(B, dg) / fe(dg, 2) + FieldElem::generator(dg, "gam");
    FieldElem denom = fe(dg, 4) * (fe(dg, 7) * embed(bt0, dg) + fe(dg, 1)).pow(2) * embed(p, dg);
    auto dchi = adjoin_sqrt(dg, "chi", gamma0 / denom);
    FieldElem chi0 = FieldElem::generator(dchi, "chi");
    FieldElem chi1 = embed(embed(S, dg) / denom, dchi) / chi0;
    Algebra AX = embed_algebra(A, dchi);
    FieldElem bt = embed(bt0, dchi), one = fe(dchi, 1), two = fe(dchi, 2);
    Vec idx = embed_vec(id, dchi);
    Vec a0x = embed_vec(a0, dchi), a1x = embed_vec(a1, dchi), am1x = embed_vec(am1, dchi);
    Vec a2x = embed_vec(a2, dchi), am2x = embed_vec(am2, dchi), a3x = embed_vec(a3, dchi);
    Vec uvx = embed_vec(uv, dchi), wvx = embed_vec(wv, dchi);
    std::vector<Mat> gens;
    for (auto& g : ax.miyamoto_gens) gens.push_back(embed_mat(g, dchi));
    gens.push_back(embed_mat(br.sigma, dchi));
    std::vector<Mat> G = close_group(gens, dchi, 8);
    FieldElem head = (chi0 + chi1) / (fe(dchi, 4) * bt * (two * bt - one));
    Vec common = vec_add(vec_scale(a0x, fe(dchi, 46) * bt * bt - fe(dchi, 3) * bt - one),
                         vec_scale(vec_add(a2x, am2x),
                                   -(fe(dchi, 24) * bt * bt - bt - one)));
    FieldElem chis[2] = {chi0, chi1};
    int verified_orbits = 0;
    for (int i = 0; i < 2; ++i) {
      Vec u6 = vec_add(vec_scale(common, head),
                       vec_add(vec_scale(vec_add(vec_add(a1x, am1x), a3x), chis[i]),
                               vec_scale(vec_add(uvx, wvx), chis[1 - i])));
      for (int sgn = 0; sgn < 2; ++sgn) {
        Vec u = vec_add(vec_scale(idx, fr(dchi, 1, 2)),
                        sgn ? vec_scale(u6, -one) : u6);
        c.require(AX.product(u, u) == u, "6J 1/2*1 +- u6(i) is an idempotent");
        FieldElem expect = fe(dchi, 9) / (two * (fe(dchi, 7) * bt + one)) +
                           (sgn ? -one : one) * (fe(dchi, 11) * bt - one) / (fe(dchi, 4) * bt) *
                               (chi0 + chi1);
        c.require(AX.form_value(u, u) == expect, "6J +-u6 printed length");
        c.require(orbit_of(u, G).size() == 6, "6J +-u6 orbit size 6");
        ++verified_orbits;
      }
    }
    c.require(verified_orbits == 4, "6J u6 contributes 4 orbits of size 6");
  }
  c.note("6J: u7 family excluded (the paper defers its cubic's coefficients to code)");
}

void criterion5(Checker& c) {
  auto d = FieldDesc::make(0, {});

  {  // 3A at (2,3)
    BuildResult br = build_family("3A", d, {{"alpha", fe(d, 2)}, {"beta", fe(d, 3)}});
    auto en = enumerate_idempotents(br, 4);
    c.require(en.complete && en.idempotents.size() == 15, "3A count 15");
    auto dt = adjoin_sqrt(d, "th", fr(d, -1, 4));
    FieldElem th = FieldElem::generator(dt, "th");
    std::vector<FieldElem> expect;
    expect.push_back(fr(dt, 8, 13));
    expect.push_back(fr(dt, 4, 13) + th / fe(dt, 13));
    expect.push_back(fr(dt, 4, 13) - th / fe(dt, 13));
    for (int i = 0; i < 3; ++i) expect.push_back(fe(dt, 1));
    for (int i = 0; i < 3; ++i) expect.push_back(fr(dt, -5, 13));
    auto a3 = build_family("3A", dt, {{"alpha", fe(dt, 2)}, {"beta", fe(dt, 3)}});
    Vec idv = *find_identity(a3.A);
    Vec y = vec_add(
        vec_add(vec_scale(a3.A.axes[0], fr(dt, 1, 3) * th),
                vec_scale(vec_add(a3.A.axes[1], a3.A.axes[2]), th)),
        vec_scale(a3.named.at("z"), fr(dt, 10, 13) * th));
    for (int sgn = 0; sgn < 2; ++sgn) {
      Vec u = vec_add(vec_scale(idv, fr(dt, 1, 2)), sgn ? vec_scale(y, -fe(dt, 1)) : y);
      c.require(a3.A.product(u, u) == u, "3A printed 1/2*1 +- y is an idempotent");
      for (int i = 0; i < 3; ++i) expect.push_back(a3.A.form_value(u, u));
    }
    Vec x = vec_add(
        vec_scale(vec_add(vec_add(a3.A.axes[0], a3.A.axes[1]), a3.A.axes[2]), th),
        vec_scale(a3.named.at("z"), fr(dt, 15, 13) * th));
    Vec ux = vec_add(vec_scale(idv, fr(dt, 1, 2)), x);
    c.require(a3.A.product(ux, ux) == ux, "3A printed 1/2*1 + x is an idempotent");
    c.require(a3.A.form_value(ux, ux) == fr(dt, 4, 13) - th / fe(dt, 13),
              "3A 1/2*1+x length 4/13 - th/13 (complementation-forced reading)");
    c.require(length_multiset(solver_lengths(br, en)) == length_multiset(expect),
              "3A length column multiset");
  }

  {  // 4A at beta = 2
    BuildResult br = build_family("4A", d, {{"beta", fe(d, 2)}});
    auto en = enumerate_idempotents(br, 6);
    c.require(en.complete && en.idempotents.size() == 17, "4A isolated count 17");
    c.require(en.matched_families == std::vector<std::string>{"x(lam,mu)"} &&
                  en.unmatched_positive_parts == 0,
              "4A conic family matched");
    auto dt = adjoin_sqrt(d, "r2", fr(d, 4, 7));
    FieldElem r2 = FieldElem::generator(dt, "r2");
    std::vector<FieldElem> expect{fe(dt, 4)};
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 1));
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 3));
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 2) * (fe(dt, 1) - r2));
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 2) * (fe(dt, 1) + r2));
    c.require(length_multiset(solver_lengths(br, en)) == length_multiset(expect),
              "4A isolated length multiset");
    auto dv = adjoin_sqrt(d, "r1", fe(d, -3));
    auto a4 = build_family("4A", dv, {{"beta", fe(dv, 2)}});
    FieldElem r1 = FieldElem::generator(dv, "r1");
    Vec v1 = vec_scale(
        vec_add(
            vec_add(vec_scale(vec_add(a4.A.axes[0], a4.A.axes[2]), fr(dv, 1, 4) - fe(dv, 2)),
                    vec_scale(vec_add(a4.A.axes[1], a4.A.axes[3]), fr(dv, 1, 4))),
            vec_scale(a4.named.at("e"), fe(dv, 2))),
        r1.inv());
    Vec idv = *find_identity(a4.A);
    AxetClosure ax = axet_closure(a4.A, a4.A.axes, a4.law);
    std::vector<Mat> gens = ax.miyamoto_gens;
    gens.push_back(a4.sigma);
    std::vector<Mat> G = close_group(gens, dv, 5);
    c.require(G.size() == 8, "4A <Miy, sigma> has order 8");
    auto fams = family_positive_families(a4);
    int resident = 0;
    for (int sgn = 0; sgn < 2; ++sgn) {
      Vec u = vec_add(vec_scale(idv, fr(dv, 1, 2)), sgn ? vec_scale(v1, -fe(dv, 1)) : v1);
      c.require(a4.A.product(u, u) == u, "4A printed 1/2*1 +- v1 is an idempotent");
      c.require(a4.A.form_value(u, u) == fe(dv, 2), "4A +-v1 length 2");
      c.require(orbit_of(u, G).size() == 2, "4A +-v1 orbit size 2");
      for (auto& f : fams)
        if (f.name == "x(lam,mu)" && on_family_membership(u, f, idv)) ++resident;
    }
    c.require(resident == 2,
              "4A +-v1 quadruple is conic-resident (isolated 17 + 4 = the printed 21)");
  }

  {  // 4J at beta = 3
    BuildResult br = build_family("4J", d, {{"beta", fe(d, 3)}});
    auto en = enumerate_idempotents(br, 6);
    c.require(en.complete && en.idempotents.size() == 31, "4J count 31");
    auto dt = adjoin_sqrt(d, "t4", fe(d, -107));
    FieldElem t4 = FieldElem::generator(dt, "t4");
    std::vector<FieldElem> expect{fr(dt, 6, 13), fe(dt, 2), fr(dt, -20, 13)};
    for (int i = 0; i < 2; ++i) expect.push_back(fe(dt, 2));
    for (int i = 0; i < 2; ++i) expect.push_back(fr(dt, -20, 13));
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 1));
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, -7, 13));
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, 3, 13) - fr(dt, 5, 1391) * t4);
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, 3, 13) + fr(dt, 5, 1391) * t4);
    for (int i = 0; i < 8; ++i) expect.push_back(fr(dt, 3, 13));
    c.require(length_multiset(solver_lengths(br, en)) == length_multiset(expect),
              "4J length column multiset");
  }

  {  // 4B and 4Ya at alpha = 3
    BuildResult bb = build_family("4B", d, {{"alpha", fe(d, 3)}});
    auto enb = enumerate_idempotents(bb, 6);
    c.require(enb.complete && enb.idempotents.size() == 31, "4B count 31");
    auto dtb = adjoin_sqrt(d, "tb", fr(d, -1, 11));
    FieldElem tb = FieldElem::generator(dtb, "tb");
    std::vector<FieldElem> expectb{fr(dtb, 1, 2), fe(dtb, 1), fr(dtb, -1, 2)};
    for (int i = 0; i < 2; ++i) expectb.push_back(fr(dtb, 3, 4));
    for (int i = 0; i < 2; ++i) expectb.push_back(fr(dtb, -1, 4));
    for (int i = 0; i < 4; ++i) expectb.push_back(fe(dtb, 1));
    for (int i = 0; i < 4; ++i) expectb.push_back(fr(dtb, -1, 2));
    for (int i = 0; i < 4; ++i) expectb.push_back(fr(dtb, -1, 4));
    for (int i = 0; i < 4; ++i) expectb.push_back(fr(dtb, 3, 4));
    for (int i = 0; i < 4; ++i) expectb.push_back((fe(dtb, 1) - (-fe(dtb, 2)) * tb) / fe(dtb, 4));
    for (int i = 0; i < 4; ++i) expectb.push_back((fe(dtb, 1) + (-fe(dtb, 2)) * tb) / fe(dtb, 4));
    c.require(length_multiset(solver_lengths(bb, enb)) == length_multiset(expectb),
              "4B length column multiset");
    BuildResult by = build_family("4Ya", d, {{"alpha", fe(d, 3)}});
    auto eny = enumerate_idempotents(by, 6);
    c.require(eny.complete && eny.idempotents.size() == 31, "4Ya count 31");
    auto dt = adjoin_sqrt(d, "t1", fr(d, 13, 37));
    FieldElem t1 = FieldElem::generator(dt, "t1");
    std::vector<FieldElem> expect{fr(dt, 7, 4), fr(dt, -1, 4), fe(dt, 2)};
    for (int i = 0; i < 2; ++i) expect.push_back(fr(dt, 3, 4));
    for (int i = 0; i < 2; ++i) expect.push_back(fe(dt, 1));
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 1));
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, 3, 4));
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, -1, 4));
    for (int i = 0; i < 4; ++i) expect.push_back(fe(dt, 2));
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, 7, 8) - fr(dt, 13, 8) * t1);
    for (int i = 0; i < 4; ++i) expect.push_back(fr(dt, 7, 8) + fr(dt, 13, 8) * t1);
    c.require(length_multiset(solver_lengths(by, eny)) == length_multiset(expect),
              "4Ya length column multiset");
  }

  {  // 5A at alpha = 3
    BuildResult br = build_family("5A", d, {{"alpha", fe(d, 3)}});
    auto en = enumerate_idempotents(br, 8);
    c.require(en.complete && en.idempotents.size() == 63, "5A count 63");
    auto dt = adjoin_sqrt(d, "t4", fr(d, 7, 13));
    FieldElem t4 = FieldElem::generator(dt, "t4");
    std::vector<FieldElem> expect{fr(dt, 4, 5)};
    expect.push_back(fr(dt, 2, 5));
    expect.push_back(fr(dt, 2, 5));
    for (int i = 0; i < 5; ++i) expect.push_back(fe(dt, 1));
    for (int i = 0; i < 5; ++i) expect.push_back(fr(dt, -1, 5));
    for (int i = 0; i < 10; ++i) expect.push_back(fr(dt, 2, 5));
    for (int i = 0; i < 10; ++i) expect.push_back(fr(dt, 9, 10));
    for (int i = 0; i < 10; ++i) expect.push_back(fr(dt, -1, 10));
    for (int i = 0; i < 10; ++i) expect.push_back((fe(dt, 4) + fe(dt, 7) * t4) / fe(dt, 10));
    for (int i = 0; i < 10; ++i) expect.push_back((fe(dt, 4) - fe(dt, 7) * t4) / fe(dt, 10));
    c.require(length_multiset(solver_lengths(br, en)) == length_multiset(expect),
              "5A length column multiset (with the forced +-v1 reading 4/(3a+1))");
  }

  {  // 4Yb at beta = 3 and 6Y: 0-dim part + printed line families
    BuildResult br = build_family("4Yb", d, {{"beta", fe(d, 3)}});
    auto en = enumerate_idempotents(br, 4);
    std::multiset<std::string> fams(en.matched_families.begin(), en.matched_families.end());
    c.require(en.complete && en.idempotents.size() == 1 &&
                  fams == std::multiset<std::string>{"1-x0(lam,mu)", "1-x1(lam,mu)",
                                                     "x0(lam,mu)", "x1(lam,mu)"},
              "4Yb: isolated identity + four printed families");
    Vec id = *find_identity(br.A);
    const Vec& z = br.named.at("z");
    Vec zc = vec_sub(id, z);
    c.require(br.A.form_value(id, id) == fe(d, 3) && br.A.form_value(z, z) == fe(d, 1) &&
                  br.A.form_value(zc, zc) == fe(d, 2),
              "4Yb printed lengths 3, 1, 2 for {1, z, 1-z}");
    BuildResult y6 = build_family("6Y", d, {});
    auto en6 = enumerate_idempotents(y6, 4);
    std::multiset<std::string> fams6(en6.matched_families.begin(), en6.matched_families.end());
    c.require(en6.complete && en6.idempotents.size() == 3 &&
                  fams6 == std::multiset<std::string>{"x0(lam)", "x1(lam)", "x2(lam)", "y(lam)"},
              "6Y: the 1_{B0}-a_0 orbit + four printed line families");
    Algebra AX = embed_algebra(y6.A, en6.desc);
    for (auto& u : en6.idempotents)
      c.require(AX.form_value(u, u).is_zero(), "6Y zero-length representatives");
  }

  criterion5_6A(c);
  criterion5_6J(c);
}

// ---------------------------------------------------------------- criterion 6

void criterion6(Checker& c) {
  auto d = FieldDesc::make(0, {});
  {  // 4A(1/4,1/8) ~ 4J(1/4,1/8) with the printed witness image
    auto a4 = build_family("4A", d, {{"beta", fr(d, 1, 8)}});
    auto j4 = build_family("4J", d, {{"beta", fr(d, 1, 8)}});
    auto w = axial_iso(j4, a4);
    c.require(w && w->axial, "4A(1/4,1/8) ~ 4J(1/4,1/8)");
    if (w) {
      Vec suma = vec_zero(d, 5);
      for (auto& a : j4.A.axes) suma = vec_add(suma, a);
      Vec lhs = vec_scale(vec_add(suma, j4.named.at("w")), fr(d, -1, 16));
      c.require(mat_apply(w->matrix, lhs) == a4.named.at("e"),
                "witness maps -1/16(sum a_i + w) to e");
    }
  }
  {  // 4J(1/2,1/4) ~ 4Y(1/2,1/4) with the printed witness image
    auto j4 = build_family("4J", d, {{"beta", fr(d, 1, 4)}});
    auto y4 = build_family("4Yb", d, {{"beta", fr(d, 1, 4)}});
    auto w = axial_iso(j4, y4);
    c.require(w && w->axial, "4J(1/2,1/4) ~ 4Y(1/2,1/4)");
    if (w) {
      Vec suma = vec_zero(d, 5);
      for (auto& a : j4.A.axes) suma = vec_add(suma, a);
      Vec lhs = vec_scale(vec_sub(suma, j4.named.at("w")), fr(d, 1, 2));
      c.require(mat_apply(w->matrix, lhs) == y4.named.at("z"),
                "witness maps 1/2(sum a_i - w) to z");
    }
  }
  {  // 4B(1/2,1/8) ~ 4Y(1/2,1/8)
    auto b4 = build_family("4B", d, {{"alpha", fr(d, 1, 2)}});
    auto y4 = build_family("4Yb", d, {{"beta", fr(d, 1, 8)}});
    auto w = axial_iso(b4, y4);
    c.require(w && w->axial, "4B(1/2,1/8) ~ 4Y(1/2,1/8)");
  }
  {  // the claimed 4B(+-1/sqrt2,1/4) ~ 4Y(+-1/sqrt2,1/4): refuted exactly
    auto dq = adjoin_sqrt(d, "s2", fe(d, 2));
    FieldElem invs2 = FieldElem::generator(dq, "s2") / fe(dq, 2);
    bool any = false;
    for (int sb = 0; sb < 2; ++sb)
      for (int sy = 0; sy < 2; ++sy) {
        auto b4 = build_family("4B", dq, {{"alpha", sb ? -invs2 : invs2}});
        auto y4 = build_family("4Ya", dq, {{"alpha", sy ? -invs2 : invs2}});
        if (axial_iso(b4, y4)) any = true;
      }
    c.require(any,
              "4B(+-1/sqrt2,1/4) ~ 4Y(+-1/sqrt2,1/4) [REFUTED by exact computation: the "
              "Frobenius form is unique up to scalar and axis-normalized, and the "
              "generating-pair value is 1/8 in 4B against (3+-sqrt2)/8, +-sqrt2/4 in 4Y; "
              "the exhaustive generator-image search confirms no witness exists at any "
              "sign pairing. See the decisions ledger.]");
  }
  {  // 6A(2/5) ~ 6J(2/5) with the printed witness image
    auto a6 = build_family("6A", d, {{"alpha", fr(d, 2, 5)}});
    auto j6 = build_family("6J", d, {{"beta", fr(d, 1, 5)}});
    auto w = axial_iso(a6, j6);
    c.require(w && w->axial, "6A(2/5) ~ 6J(2/5)");
    if (w) {
      Vec prod = a6.A.product(a6.A.axes[0], a6.A.axes[1]);
      Vec lhs = vec_sub(vec_scale(vec_add(a6.A.axes[0], a6.A.axes[1]), fe(d, 2)),
                        vec_scale(prod, fe(d, 10)));
      c.require(mat_apply(w->matrix, lhs) == j6.named.at("w"),
                "witness maps 2(a0+a1) - 10 a0a1 to w");
    }
  }
  {  // IY3(alpha,1/2,-1/2) ~ 3A(alpha,1/2) symbolically
    auto da = FieldDesc::make(0, {"alpha"});
    FieldElem al = FieldElem::generator(da, "alpha");
    auto a3 = build_family("3A", da, {{"alpha", al}, {"beta", fr(da, 1, 2)}});
    auto iy = build_family("IY3", da, {{"alpha", al}, {"mu", fr(da, -1, 2)}});
    c.require(axial_iso(a3, iy).has_value(), "IY3(a,1/2,-1/2) ~ 3A(a,1/2)");
  }
  {  // characteristic 5: 5A(alpha,1/2) ~ IY5(alpha,1/2)
    auto d5 = FieldDesc::make(5, {"alpha"});
    FieldElem al = FieldElem::generator(d5, "alpha");
    auto a5 = build_family("5A", d5, {{"alpha", al}});
    auto iy = build_family("IY5", d5, {{"alpha", al}});
    auto w = axial_iso(a5, iy);
    c.require(w && w->axial, "char 5: 5A(a,1/2) ~ IY5(a,1/2)");
  }
  {  // negatives
    auto b4 = build_family("4B", d, {{"alpha", -fe(d, 1)}});
    auto y4 = build_family("4Ya", d, {{"alpha", fe(d, 2)}});
    c.require(!axial_iso(b4, y4).has_value(), "negative: 4B(-1) vs 4Y(2) has no witness");
    {
      bool threw = false;
      try {
        algebra_iso_4B4Y(b4);
      } catch (const AxlError& e) {
        threw = e.code() == Err::ExcludedParameter;
      }
      c.require(threw, "negative: algebra_iso_4B4Y raises ExcludedParameter at alpha~ = -1");
    }
    auto ya = build_family("4Ya", d, {{"alpha", fr(d, 1, 2)}});
    auto yb = build_family("4Yb", d, {{"beta", fr(d, 1, 5)}});
    c.require(!axial_iso(ya, yb).has_value(), "negative: 4Y pair off (1/2, 3/8) has no witness");
  }
  {  // the 4B ~ 4Y algebra (not axial) isomorphism at a generic parameter
    auto b4 = build_family("4B", d, {{"alpha", fe(d, 3)}});
    AlgebraIso4B4Y iso = algebra_iso_4B4Y(b4);
    c.require(iso.target.params.at("alpha") == fe(d, -2) &&
                  intertwines_products(iso.target.A, b4.A, iso.witness.matrix) &&
                  !iso.witness.axial,
              "4B(3) ~ 4Y(-2) as algebras but not axially");
  }
}

// ---------------------------------------------------------------- criterion 7

void criterion7(Checker& c) {
  auto d = FieldDesc::make(0, {"beta"});
  FieldElem bt = FieldElem::generator(d, "beta");
  BuildResult lit = build_family("6J", d, {{"beta", bt}}, true);
  c.require(!validate(lit).frobenius, "literal 6J w^2 coefficient fails associativity");
  BuildResult fix = build_family("6J", d, {{"beta", bt}});
  c.require(validate(fix).pass(), "repaired 6J passes");
  int w = fix.A.label_index("w"), u = fix.A.label_index("u");
  c.require(repair_constant(lit.A, w, w, vec_scale(fix.A.basis_vec(u), -bt),
                            fix.A.basis_vec(w)) == bt + fe(d, 1),
            "repair_constant derives the 6J coefficient beta + 1");
  auto da = FieldDesc::make(0, {"alpha"});
  FieldElem al = FieldElem::generator(da, "alpha");
  BuildResult lit5 = build_family("5A", da, {{"alpha", al}}, true);
  c.require(!validate(lit5).frobenius, "literal 5A w^2 scalar fails associativity");
  BuildResult fix5 = build_family("5A", da, {{"alpha", al}});
  c.require(validate(fix5).pass(), "repaired 5A passes");
  FieldElem bt5 = (fe(da, 5) * al - fe(da, 1)) / fe(da, 8);
  int w5 = fix5.A.label_index("w");
  Vec suma = vec_zero(da, 6);
  for (int i = 0; i < 5; ++i) suma = vec_add(suma, fix5.A.basis_vec(i));
  c.require(repair_constant(lit5.A, w5, w5, vec_zero(da, 6), suma) ==
                (al - bt5) * (fe(da, 7) - fe(da, 3) * al) / (fe(da, 8) * bt5),
            "repair_constant derives the 5A scalar (a-b)(7-3a)/(8b)");
}

// ---------------------------------------------------------------- criterion 8

void criterion8(Checker& c) {
  auto d = FieldDesc::make(0, {});
  struct Row {
    std::string fam;
    std::map<std::string, FieldElem> ps;
    int axes;
    long miy;
    long sym;
  };
  std::vector<Row> rows = {
      {"3A", {{"alpha", fe(d, 2)}, {"beta", fe(d, 3)}}, 3, 6, 6},
      {"4A", {{"beta", fe(d, 2)}}, 4, 4, 8},
      {"4J", {{"beta", fe(d, 3)}}, 4, 4, 8},
      {"4B", {{"alpha", fe(d, 3)}}, 4, 4, 8},
      {"4Ya", {{"alpha", fe(d, 3)}}, 4, 4, 8},
      {"4Yb", {{"beta", fe(d, 3)}}, 4, 4, 8},
      {"5A", {{"alpha", fe(d, 3)}}, 5, 10, 10},
      {"6A", {{"alpha", fe(d, 3)}}, 6, 6, 12},
      {"6J", {{"beta", fe(d, 3)}}, 6, 6, 12},
      {"6Y", {}, 6, 6, 12},
  };
  for (auto& r : rows) {
    BuildResult br = build_family(r.fam, d, r.ps);
    AxetClosure ax = axet_closure(br.A, br.A.axes, br.law);
    c.require(!ax.axes_capped && (int)ax.axes.size() == r.axes, r.fam + " axet size");
    c.require(!ax.group_capped && ax.group_order == r.miy, r.fam + " Miyamoto group order");
    std::vector<Mat> gens = ax.miyamoto_gens;
    gens.push_back(br.sigma);
    c.require((long)close_group(gens, d, br.A.n).size() == r.sym,
              r.fam + " full symmetry group <Miy, sigma> order (the spec's X(6) value 12)");
  }
  for (auto [p, expect] : std::vector<std::pair<uint32_t, size_t>>{{5, 5}, {7, 7}, {3, 9}}) {
    auto dp = FieldDesc::make(p, {"alpha"});
    auto iy = build_family("IY5", dp, {{"alpha", FieldElem::generator(dp, "alpha")}});
    AxetClosure ax = axet_closure(iy.A, {iy.A.axes[0], iy.A.axes[1]}, iy.law, 32, 0x7fffffff);
    c.require(!ax.axes_capped && ax.axes.size() == expect,
              "IY5 axet over characteristic " + std::to_string(p));
  }
  {  // 5A order-4 automorphism extends Miy to F20
    auto a5 = build_family("5A", d, {{"alpha", fe(d, 3)}});
    Mat s4(d, 6, 6);
    auto axp = [&](int i) { return ((i + 2) % 5 + 5) % 5; };
    for (int i = -2; i <= 2; ++i) {
      Vec img = a5.A.basis_vec(axp(2 * i));
      for (int r = 0; r < 6; ++r) s4.at(r, axp(i)) = img[r];
    }
    s4.at(5, 5) = -fe(d, 1);
    c.require(is_automorphism(a5.A, s4), "5A sigma4 is an automorphism");
    c.require(mat_mul(mat_mul(s4, s4), mat_mul(s4, s4)) == Mat::identity(d, 6),
              "5A sigma4 has order 4");
    AxetClosure ax = axet_closure(a5.A, a5.A.axes, a5.law);
    std::vector<Mat> gens = ax.miyamoto_gens;
    gens.push_back(s4);
    c.require(close_group(gens, d, 6).size() == 20, "<Miy(5A), sigma4> has order 20");
  }
}

// ---------------------------------------------------------------- criterion 9

void criterion9(Checker& c) {
  std::mt19937 rng(20260810);
  // field axioms: 1000 trials across representative fields
  {
    std::vector<DescP> fields;
    fields.push_back(FieldDesc::make(0, {}));
    fields.push_back(FieldDesc::make(7, {}));
    fields.push_back(FieldDesc::make(0, {"alpha"}));
    fields.push_back(FieldDesc::make(5, {"alpha"}));
    {
      auto dd = FieldDesc::make(0, {"alpha"});
      fields.push_back(
          adjoin_sqrt(dd, "th", FieldElem::generator(dd, "alpha") * fe(dd, 2) - fe(dd, 1)));
    }
    int trials = 0;
    bool ok = true;
    while (trials < 1000) {
      for (auto& dd : fields) {
        FieldElem a = random_fe(dd, rng), b = random_fe(dd, rng), cc = random_fe(dd, rng);
        ok = ok && (a + b) + cc == a + (b + cc) && (a * b) * cc == a * (b * cc) &&
             a * (b + cc) == a * b + a * cc;
        if (!a.is_zero()) ok = ok && a * a.inv() == FieldElem::one(dd);
        ++trials;
      }
    }
    c.require(ok, "field axioms, 1000 randomized trials");
  }
  // Cayley-Hamilton, 1000 trials over matrices up to 6x6
  {
    auto dd = FieldDesc::make(0, {});
    bool ok = true;
    for (int t = 0; t < 1000; ++t) {
      int n = 2 + (int)(rng() % 5);
      Mat m(dd, n, n);
      std::uniform_int_distribution<long> val(-6, 6);
      for (auto& e : m.a) e = fe(dd, val(rng));
      UPoly chi = charpoly(m);
      Mat acc(dd, n, n);
      Mat pw = Mat::identity(dd, n);
      for (size_t i = 0; i < chi.size(); ++i) {
        if (!chi[i].is_zero())
          for (int r = 0; r < n; ++r)
            for (int c2 = 0; c2 < n; ++c2) acc.at(r, c2) = acc.at(r, c2) + chi[i] * pw.at(r, c2);
        if (i + 1 < chi.size()) pw = mat_mul(pw, m);
      }
      ok = ok && mat_is_zero(acc);
    }
    c.require(ok, "Cayley-Hamilton, 1000 randomized trials");
  }
  // quotient homomorphism, 1000 trials
  {
    auto dd = FieldDesc::make(0, {});
    BuildResult br = build_family("6Y", dd, {});
    IdealSub I = ideal_closure(br.A, {br.named.at("d")});
    Quotient q = quotient(br.A, I);
    bool ok = true;
    std::uniform_int_distribution<long> val(-9, 9);
    for (int t = 0; t < 1000; ++t) {
      Vec x, y;
      for (int i = 0; i < br.A.n; ++i) {
        x.push_back(fe(dd, val(rng)));
        y.push_back(fe(dd, val(rng)));
      }
      ok = ok && mat_apply(q.projection, br.A.product(x, y)) ==
                     q.algebra.product(mat_apply(q.projection, x), mat_apply(q.projection, y));
    }
    c.require(ok, "quotient projection is an algebra homomorphism, 1000 trials");
  }
  // involution: every Miyamoto map squares to the identity (across families)
  {
    auto dd = FieldDesc::make(0, {});
    bool ok = true;
    int count = 0;
    std::vector<std::pair<std::string, std::map<std::string, FieldElem>>> fams = {
        {"3A", {{"alpha", fe(dd, 2)}, {"beta", fe(dd, 3)}}},
        {"4J", {{"beta", fe(dd, 3)}}},
        {"5A", {{"alpha", fe(dd, 3)}}},
        {"6A", {{"alpha", fe(dd, 3)}}},
        {"6Y", {}}};
    while (count < 1000) {
      for (auto& [fam, ps] : fams) {
        BuildResult br = build_family(fam, dd, ps);
        AxetClosure ax = axet_closure(br.A, br.A.axes, br.law);
        for (auto& g : ax.miyamoto_gens) {
          ok = ok && mat_mul(g, g) == Mat::identity(dd, br.A.n) && is_automorphism(br.A, g);
          ++count;
        }
      }
    }
    c.require(ok, "Miyamoto involutions square to 1 and are automorphisms (1000 checks)");
  }
  // u <-> 1-u complementation on the solved 3A idempotent set, 1000 trials
  {
    auto dd = FieldDesc::make(0, {});
    BuildResult br = build_family("3A", dd, {{"alpha", fe(dd, 2)}, {"beta", fe(dd, 3)}});
    auto en = enumerate_idempotents(br, 4);
    Algebra AX = embed_algebra(br.A, en.desc);
    Vec id = embed_vec(*find_identity(br.A), en.desc);
    FieldElem total = AX.form_value(id, id);
    bool ok = en.complete;
    int count = 0;
    while (count < 1000) {
      for (auto& u : en.idempotents) {
        Vec comp = vec_sub(id, u);
        bool found = vec_is_zero(comp);
        for (auto& v : en.idempotents) found = found || v == comp;
        ok = ok && found && AX.form_value(u, u) + AX.form_value(comp, comp) == total;
        ++count;
      }
    }
    c.require(ok, "u <-> 1-u complementation and length additivity (1000 checks)");
  }
}

}  // namespace

int main() {
  std::printf("axial-lab acceptance suite\n");
  run_criterion(1, "catalog validation (12 Monster + 7 Jordan-type, 3 points each)", criterion1);
  run_criterion(2, "determinant formulas (9 printed closed forms)", criterion2);
  run_criterion(3, "eigenspace fingerprints", criterion3);
  run_criterion(4, "ideal and quotient tables (all rows, characteristics 0/3/5)", criterion4);
  run_criterion(5, "idempotent counts, lengths, 6A/6J representatives", criterion5);
  run_criterion(6, "exceptional isomorphisms", criterion6);
  run_criterion(7, "structure-repair regressions", criterion7);
  run_criterion(8, "axets and Miyamoto groups", criterion8);
  run_criterion(9, "randomized property suites (1000 trials each)", criterion9);
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf(
        "%d criterion(s) failed (criterion 6 contains the 4B/4Y +-1/sqrt2 item, which exact "
        "computation refutes; see the decisions ledger)\n",
        g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
