// axial-lab: build, inspect, and test the symmetric 2-generated axial algebras
// of Monster type from exact structure constants.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "axl/isomorph.hpp"
#include "axl/report.hpp"

using namespace axl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitExcluded = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIncomplete = 4;
constexpr int kExitUsage = 5;

struct FieldArgs {
  std::vector<std::string> params;   // k=v
  unsigned characteristic = 0;
  std::vector<std::string> adjoins;  // name=square-expr
  std::vector<std::string> symbolic; // leave these parameters symbolic
};

void add_field_args(CLI::App* cmd, FieldArgs& fa) {
  cmd->add_option("--param", fa.params, "parameter assignment k=v (exact rationals, repeatable)");
  cmd->add_option("--char", fa.characteristic, "field characteristic (0 or odd prime)");
  cmd->add_option("--adjoin", fa.adjoins, "adjoin a square root name=square (repeatable)");
  cmd->add_option("--symbolic", fa.symbolic, "keep a parameter as an indeterminate (repeatable)");
}

BuildResult build_from_args(const std::string& family, const FieldArgs& fa, bool literal) {
  DescP d = FieldDesc::make(fa.characteristic, fa.symbolic);
  for (auto& a : fa.adjoins) {
    size_t eq = a.find('=');
    if (eq == std::string::npos) fail(Err::CorpusParseError, "--adjoin expects name=square");
    d = adjoin_sqrt(d, a.substr(0, eq), parse_expr(d, a.substr(eq + 1)));
  }
  std::map<std::string, FieldElem> ps;
  for (auto& s : fa.symbolic) ps.emplace(s, FieldElem::generator(d, s));
  for (auto& p : fa.params) {
    size_t eq = p.find('=');
    if (eq == std::string::npos) fail(Err::CorpusParseError, "--param expects k=v");
    FieldElem v = parse_expr(d, p.substr(eq + 1));
    ps.erase(p.substr(0, eq));
    ps.emplace(p.substr(0, eq), v);
  }
  return build_family(family, d, ps, literal);
}

void emit(const Json& j, const std::string& out, bool text) {
  std::string s = text ? j.dump(2) : j.dump();
  if (out.empty()) {
    std::cout << s << "\n";
  } else {
    std::ofstream f(out);
    f << s << "\n";
  }
}

int exit_code_for(const AxlError& e) {
  switch (e.code()) {
    case Err::ExcludedParameter:
    case Err::DenominatorVanishes:
      return kExitExcluded;
    case Err::SolverIncomplete:
      return kExitIncomplete;
    case Err::CorpusParseError:
    case Err::UnassignedIndeterminate:
      return kExitUsage;
    default:
      return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for symmetric 2-generated axial algebras of Monster type"};
  app.require_subcommand(1);

  std::string out_path;
  bool as_text = false;
  app.add_option("--out", out_path, "write JSON output to a file");
  app.add_flag("--text,!--json", as_text, "pretty-print output (default: compact JSON)");

  FieldArgs fa;
  std::string family;
  bool literal = false;

  auto* cb = app.add_subcommand("build", "construct a catalog algebra and emit its JSON");
  cb->add_option("family", family)->required();
  add_field_args(cb, fa);
  cb->add_flag("--literal", literal, "keep the printed constants that fail associativity");

  auto* cv = app.add_subcommand("validate", "run commutativity/Frobenius/axis/fusion checks");
  cv->add_option("family", family)->required();
  add_field_args(cv, fa);
  cv->add_flag("--literal", literal);

  auto* cr = app.add_subcommand("report", "aggregate report: identity, radical, axet, ideals");
  cr->add_option("family", family)->required();
  add_field_args(cr, fa);
  bool with_idem = false;
  cr->add_flag("--idempotents", with_idem, "include idempotent enumeration in the report");

  auto* crad = app.add_subcommand("radical", "radical of the Frobenius form");
  crad->add_option("family", family)->required();
  add_field_args(crad, fa);

  auto* cid = app.add_subcommand("ideals", "subideal lattice of the radical");
  cid->add_option("family", family)->required();
  add_field_args(cid, fa);

  auto* cip = app.add_subcommand("idempotents", "enumerate idempotents exactly");
  cip->add_option("family", family)->required();
  add_field_args(cip, fa);
  int budget = 4;
  long timeout_s = 0;
  cip->add_option("--budget", budget, "square-root adjunction budget");
  cip->add_option("--timeout", timeout_s, "soft wall-clock limit in seconds (0 = none)");

  auto* ciso = app.add_subcommand("iso", "axial isomorphism between two algebra JSON files");
  std::string file_a, file_b;
  ciso->add_option("a", file_a)->required();
  ciso->add_option("b", file_b)->required();

  auto* cg = app.add_subcommand("golden", "run the golden regression corpus");
  std::string corpus_path;
  cg->add_option("corpus", corpus_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cb->parsed()) {
      emit(algebra_to_json(build_from_args(family, fa, literal)), out_path, as_text);
      return kExitOk;
    }
    if (cv->parsed()) {
      BuildResult br = build_from_args(family, fa, literal);
      ValidationReport rep = validate(br);
      Json j;
      j["family"] = br.family;
      j["commutative"] = rep.commutative;
      j["frobenius"] = rep.frobenius;
      j["axes_ok"] = rep.axes_ok;
      j["failures"] = rep.failures;
      emit(j, out_path, as_text);
      return rep.pass() ? kExitOk : kExitValidation;
    }
    if (cr->parsed()) {
      ReportOptions opts;
      opts.idempotents = with_idem;
      emit(cmd_report(build_from_args(family, fa, false), opts), out_path, as_text);
      return kExitOk;
    }
    if (crad->parsed()) {
      BuildResult br = build_from_args(family, fa, false);
      Subspace R = radical(br.A, br.A.axes);
      Json j;
      j["dim"] = R.dim();
      Json basis = Json::array();
      for (auto& v : R.basis) basis.push_back(vec_to_json(v));
      j["basis"] = basis;
      emit(j, out_path, as_text);
      return kExitOk;
    }
    if (cid->parsed()) {
      BuildResult br = build_from_args(family, fa, false);
      Subspace R = radical(br.A, br.A.axes);
      AxetClosure ax = axet_closure(br.A, br.A.axes, br.law);
      IdealLattice lat = enumerate_subideals(br.A, R, ax.miyamoto_gens, ax.axes, br.law);
      Json j;
      j["radical_dim"] = R.dim();
      j["certified"] = lat.certified;
      Json ideals = Json::array();
      for (auto& e : lat.ideals) {
        Json basis = Json::array();
        for (auto& v : e.space.basis) basis.push_back(vec_to_json(v));
        ideals.push_back({{"dim", e.dim}, {"basis", basis}});
      }
      j["ideals"] = ideals;
      j["pencil_families"] = (int)lat.pencil_families.size();
      emit(j, out_path, as_text);
      return kExitOk;
    }
    if (cip->parsed()) {
      BuildResult br = build_from_args(family, fa, false);
      if (timeout_s > 0) set_deadline_ms(timeout_s * 1000);
      IdempotentEnumeration en = enumerate_idempotents(br, budget);
      clear_deadline();
      Json j;
      j["complete"] = en.complete;
      j["families"] = en.matched_families;
      j["unmatched_positive_parts"] = en.unmatched_positive_parts;
      Json pts = Json::array();
      Algebra AX(en.desc, br.A.labels);
      for (size_t i = 0; i < br.A.sc.size(); ++i) {
        Vec v;
        for (auto& c : br.A.sc[i]) v.push_back(embed(c, en.desc));
        AX.sc[i] = std::move(v);
      }
      if (br.A.form) {
        Mat f(en.desc, br.A.n, br.A.n);
        for (int i = 0; i < br.A.n; ++i)
          for (int k = 0; k < br.A.n; ++k) f.at(i, k) = embed(br.A.form->at(i, k), en.desc);
        AX.form = f;
      }
      std::vector<Mat> group;
      {
        AxetClosure ax = axet_closure(br.A, br.A.axes, br.law);
        if (!ax.group_capped) {
          for (auto& g : ax.group) {
            Mat ge(en.desc, br.A.n, br.A.n);
            for (int r = 0; r < br.A.n; ++r)
              for (int c2 = 0; c2 < br.A.n; ++c2) ge.at(r, c2) = embed(g.at(r, c2), en.desc);
            group.push_back(ge);
          }
        }
      }
      OrbitPartition orb = orbit_partition(en.idempotents, group);
      for (size_t i = 0; i < en.idempotents.size(); ++i) {
        Json e;
        e["coordinates"] = vec_to_json(en.idempotents[i]);
        if (AX.form) e["length"] = AX.form_value(en.idempotents[i], en.idempotents[i]).str();
        for (size_t o = 0; o < orb.orbits.size(); ++o)
          for (int m : orb.orbits[o])
            if (m == (int)i) e["orbit"] = (int)o;
        IdempotentLaw lawr = fusion_law_of_idempotent(AX, en.idempotents[i], false);
        Json evs = Json::array();
        for (auto& ev : lawr.eigenvalues) evs.push_back(ev.str());
        e["eigenvalues"] = evs;
        e["fusion_tag"] = lawr.classification;
        pts.push_back(e);
      }
      j["idempotents"] = pts;
      emit(j, out_path, as_text);
      return en.complete ? kExitOk : kExitIncomplete;
    }
    if (ciso->parsed()) {
      std::ifstream fa2(file_a), fb(file_b);
      if (!fa2 || !fb) fail(Err::CorpusParseError, "cannot open input algebra files");
      Json ja = Json::parse(fa2), jb = Json::parse(fb);
      BuildResult A = algebra_from_json(ja), B = algebra_from_json(jb);
      auto w = axial_iso(A, B);
      if (!w) {
        std::cout << "none\n";
        return 1;
      }
      Json j;
      Json rows = Json::array();
      for (int r = 0; r < w->matrix.rows; ++r) {
        Json row = Json::array();
        for (int c2 = 0; c2 < w->matrix.cols; ++c2) row.push_back(w->matrix.at(r, c2).str());
        rows.push_back(row);
      }
      j["matrix"] = rows;
      j["axial"] = w->axial;
      j["form_preserving"] = w->form_preserving;
      emit(j, out_path, as_text);
      return kExitOk;
    }
    if (cg->parsed()) {
      std::ifstream f(corpus_path);
      if (!f) fail(Err::CorpusParseError, "cannot open corpus " + corpus_path);
      Json corpus = Json::parse(f);
      GoldenResult res = run_golden(corpus);
      for (auto& m : res.messages) std::cout << m << "\n";
      std::cout << res.passed << " passed, " << res.failed << " failed\n";
      return res.failed == 0 ? kExitOk : kExitValidation;
    }
  } catch (const AxlError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
