#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "urs/report.hpp"
#include "urs/text_format.hpp"

namespace {

using namespace urs;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
  std::string output = "human";
  int precision = kDefaultPrecisionBits;
  std::string radius_hex;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--output", c.output, "human|machine")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--precision", c.precision, "working precision in bits");
  cmd->add_option("--radius", c.radius_hex, "disk radius bound (hex float)");
}

struct FamilyOpts {
  std::string family;
  int n = 0, m = 0;
  std::string a, b, c;
  std::string mode = "mero";
  std::string threshold_rule = "LiYang15";
};

void add_family(CLI::App* cmd, FamilyOpts& f, bool required) {
  auto* opt = cmd->add_option("--family", f.family,
                              "li-yang|an|frank-reinders|alzahary|bcj|bc|an-hoa");
  if (required) opt->required();
  cmd->add_option("--n", f.n, "degree parameter n");
  cmd->add_option("--m", f.m, "exponent parameter m");
  cmd->add_option("--a", f.a, "coefficient a (exact literal)");
  cmd->add_option("--b", f.b, "coefficient b (exact literal)");
  cmd->add_option("--c", f.c, "coefficient c (exact literal)");
  cmd->add_option("--mode", f.mode, "mero|entire")
      ->check(CLI::IsMember({"mero", "entire"}));
  cmd->add_option("--threshold-rule", f.threshold_rule, "LiYang15|Yi13")
      ->check(CLI::IsMember({"LiYang15", "Yi13"}));
}

GaussRat coeff(const std::string& text, const char* which) {
  if (text.empty())
    throw ParseError(std::string("missing coefficient --") + which, 0);
  return parse_gauss_rat(text);
}

FamilyInstance build_family(const FamilyOpts& f) {
  Mode mode = f.mode == "entire" ? Mode::Entire : Mode::Meromorphic;
  switch (family_id_from_str(f.family)) {
    case FamilyId::LiYang: {
      LiYangThreshold rule = f.threshold_rule == "Yi13" ? LiYangThreshold::Yi13
                                                        : LiYangThreshold::LiYang15;
      return construct_li_yang(f.n, f.m, coeff(f.a, "a"), coeff(f.b, "b"), mode, rule);
    }
    case FamilyId::An:
      return construct_an(f.n, f.m, coeff(f.a, "a"), coeff(f.b, "b"), coeff(f.c, "c"));
    case FamilyId::FrankReinders:
      return construct_frank_reinders(f.n, coeff(f.c, "c"));
    case FamilyId::Alzahary:
      return construct_alzahary(f.n, coeff(f.a, "a"), coeff(f.b, "b"));
    case FamilyId::BCJ:
      return construct_bcj(f.n, f.m, coeff(f.c, "c"));
    case FamilyId::BC:
      return construct_bc(f.m, f.n, coeff(f.a, "a"), coeff(f.b, "b"), coeff(f.c, "c"));
    case FamilyId::AnHoa:
      return construct_an_hoa(f.n, coeff(f.a, "a"), coeff(f.b, "b"), coeff(f.c, "c"));
  }
  throw std::invalid_argument("unknown family");
}

void emit(const CommonOpts& c, const Json& machine, const std::string& human) {
  if (c.output == "machine")
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

int run_construct(const FamilyOpts& fam, const CommonOpts& common) {
  FamilyInstance inst = build_family(fam);
  emit(common, to_json(inst), render_human(inst));
  return inst.ok() ? kExitPass : kExitFail;
}

int run_certify(const FamilyOpts& fam, const std::string& poly_literal,
                bool assert_uniqueness, const std::string& theorem,
                const CommonOpts& common) {
  Poly p;
  Json report;
  std::string human;
  if (!fam.family.empty()) {
    FamilyInstance inst = build_family(fam);
    p = inst.poly;
    report["family"] = to_json(inst);
    human += render_human(inst);
  } else if (!poly_literal.empty()) {
    p = parse_poly(poly_literal);
  } else {
    throw ParseError("certify needs --family or --poly", 0);
  }
  Mode mode = fam.mode == "entire" ? Mode::Entire : Mode::Meromorphic;

  CriticalStructure cs = critical_structure(p);
  report["k"] = cs.k;
  report["separation"] = cs.separation;
  report["no_simple_critical_zero"] = cs.no_simple_critical_zero;
  Json clusters = Json::array();
  mpq_class bound =
      common.radius_hex.empty() ? default_radius_bound() : hex_to_dyadic(common.radius_hex);
  for (const auto& cl : cs.clusters) clusters.push_back(to_json(refine(cl, bound)));
  report["critical_points"] = clusters;
  human += "k = " + std::to_string(cs.k) +
           ", separation = " + (cs.separation ? "true" : "false") + "\n";

  std::vector<Certificate> certs;
  for (auto& c : certify_fujimoto(p, mode, assert_uniqueness)) certs.push_back(std::move(c));
  for (auto& c : certify_weight_equivalence(p, mode)) certs.push_back(std::move(c));
  TwoSetResult two = certify_two_set(p, mode);
  for (auto& c : two.certificates) certs.push_back(std::move(c));

  GapFormResult gap = gap_form_check(p);
  Certificate gap_cert{TheoremId::GapForm_TB, mode, {}, "", {}};
  gap_cert.hypotheses.push_back({"gap_form_shape", gap.pass, gap.reason});
  if (gap.pass)
    gap_cert.conclusion = "polynomial has the gap form with witness index p = " +
                          std::to_string(gap.witness_p);
  certs.push_back(std::move(gap_cert));

  Json carr = Json::array();
  for (const auto& c : certs) {
    carr.push_back(to_json(c));
    human += render_human(c);
  }
  report["certificates"] = carr;
  emit(common, report, human);

  if (!theorem.empty()) {
    for (const auto& c : certs)
      if (theorem_id_str(c.theorem_id) == theorem)
        return c.all_pass() ? kExitPass : kExitFail;
    throw ParseError("unknown theorem id: " + theorem, 0);
  }
  for (const auto& c : certs)
    if (c.all_pass()) return kExitPass;
  return kExitFail;
}

int run_symmetry(const std::string& poly_literal, const CommonOpts& common) {
  Poly p = parse_poly(poly_literal);
  SymmetryReport rep = affine_symmetry(p);
  emit(common, to_json(rep), render_human(rep));
  return kExitPass;
}

int run_share_check(const std::string& f_lit, const std::string& g_lit,
                    const std::string& poly_literal, const std::string& mode, int k,
                    const CommonOpts& common) {
  auto fl = parse_rational_map_literal(f_lit);
  auto gl = parse_rational_map_literal(g_lit);
  RationalMap f(fl.num, fl.den), g(gl.num, gl.den);
  Poly p = parse_poly(poly_literal);
  ShareMode m = mode == "cm"         ? ShareMode::cm()
                : mode == "weighted" ? ShareMode::weighted(k)
                : mode == "weak"     ? ShareMode::weak_weight(k)
                                     : ShareMode::im();
  ShareResult r = share_check(f, g, p, m);
  Json j{{"mode", mode}, {"equal", r.equal}, {"detail", r.detail}};
  if (r.witness) j["witness"] = to_string(*r.witness);
  std::string human = std::string(r.equal ? "Equal" : "Differ") + ": " + r.detail + "\n";
  if (r.witness) human += "witness stratum: " + to_string(*r.witness) + "\n";
  emit(common, j, human);
  return r.equal ? kExitPass : kExitFail;
}

int run_deficiency(const std::string& f_lit, const std::string& a_lit,
                   const CommonOpts& common) {
  auto fl = parse_rational_map_literal(f_lit);
  RationalMap f(fl.num, fl.den);
  std::optional<GaussRat> a;
  if (a_lit != "inf") a = parse_gauss_rat(a_lit);
  DeficiencyResult d = deficiency(f, a);
  Json j{{"a", a_lit}, {"delta", rational_str(d.delta)}, {"theta", rational_str(d.theta)}};
  emit(common, j,
       "delta = " + rational_str(d.delta) + ", theta = " + rational_str(d.theta) + "\n");
  return kExitPass;
}

int run_transform(const FamilyOpts& fam, const std::string& poly_literal,
                  const std::string& alpha, const std::string& beta, bool reverse,
                  int reverse_len, const CommonOpts& common) {
  if (!fam.family.empty()) {
    // affine shift of a whole family instance, geometric checks re-run
    FamilyInstance inst = build_family(fam);
    FamilyInstance shifted =
        shift_family(inst, coeff(alpha, "alpha"), coeff(beta.empty() ? "0" : beta, "beta"));
    emit(common, to_json(shifted), render_human(shifted));
    return shifted.ok() ? kExitPass : kExitFail;
  }
  Poly p = parse_poly(poly_literal);
  Poly out;
  if (reverse) {
    out = reverse_len > 0 ? reversal(p, reverse_len) : reversal(p);
  } else {
    out = affine_substitute(p, coeff(alpha, "alpha"),
                            parse_gauss_rat(beta.empty() ? "0" : beta));
  }
  emit(common, Json{{"poly", to_string(out)}}, to_string(out) + "\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact unique-range-set toolkit"};
  app.require_subcommand(1);

  CommonOpts common;
  FamilyOpts fam;
  std::string poly_literal, f_lit, g_lit, a_lit = "inf", share_mode = "cm", theorem;
  std::string alpha, beta;
  bool assert_uniqueness = false, reverse = false;
  int share_k = 0, reverse_len = 0;

  auto* c_construct = app.add_subcommand("construct", "build and validate a family instance");
  add_family(c_construct, fam, true);
  add_common(c_construct, common);

  auto* c_certify = app.add_subcommand("certify", "check theorem hypotheses and emit certificates");
  add_family(c_certify, fam, false);
  c_certify->add_option("--poly", poly_literal, "polynomial literal");
  c_certify->add_flag("--assert-uniqueness", assert_uniqueness,
                      "caller asserts the uniqueness-polynomial property");
  c_certify->add_option("--theorem", theorem, "exit status follows this theorem id");
  add_common(c_certify, common);

  auto* c_symmetry = app.add_subcommand("symmetry", "detect affine self-symmetries");
  c_symmetry->add_option("--poly", poly_literal, "polynomial literal")->required();
  add_common(c_symmetry, common);

  auto* c_share = app.add_subcommand("share-check", "compare set-sharing spectra of two maps");
  c_share->add_option("--f", f_lit, "rational map {num:[...],den:[...]}")->required();
  c_share->add_option("--g", g_lit, "rational map {num:[...],den:[...]}")->required();
  c_share->add_option("--poly", poly_literal, "polynomial literal")->required();
  c_share->add_option("--mode", share_mode, "cm|weighted|weak|im")
      ->check(CLI::IsMember({"cm", "weighted", "weak", "im"}));
  c_share->add_option("--k", share_k, "weight for weighted/weak modes");
  add_common(c_share, common);

  auto* c_def = app.add_subcommand("deficiency", "exact Nevanlinna deficiencies");
  c_def->add_option("--f", f_lit, "rational map {num:[...],den:[...]}")->required();
  c_def->add_option("--a", a_lit, "target value literal, or 'inf'");
  add_common(c_def, common);

  auto* c_transform = app.add_subcommand("transform", "affine substitution / reversal / family shift");
  add_family(c_transform, fam, false);
  c_transform->add_option("--poly", poly_literal, "polynomial literal");
  c_transform->add_option("--alpha", alpha, "affine scale");
  c_transform->add_option("--beta", beta, "affine offset");
  c_transform->add_flag("--reverse", reverse, "reverse coefficients (z^n p(1/z))");
  c_transform->add_option("--length", reverse_len, "reversal length n (default deg p)");
  add_common(c_transform, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError&) {
    std::cerr << "error: bad command line\n";
    return kExitBadInput;
  }

  try {
    if (c_construct->parsed()) return run_construct(fam, common);
    if (c_certify->parsed())
      return run_certify(fam, poly_literal, assert_uniqueness, theorem, common);
    if (c_symmetry->parsed()) return run_symmetry(poly_literal, common);
    if (c_share->parsed())
      return run_share_check(f_lit, g_lit, poly_literal, share_mode, share_k, common);
    if (c_def->parsed()) return run_deficiency(f_lit, a_lit, common);
    if (c_transform->parsed())
      return run_transform(fam, poly_literal, alpha, beta, reverse, reverse_len, common);
  } catch (const urs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const urs::FamilyValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
