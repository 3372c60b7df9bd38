#include "urs/report.hpp"

#include <sstream>

#include "urs/text_format.hpp"

namespace urs {

Json to_json(const Hypothesis& h) {
  return Json{{"name", h.name}, {"pass", h.pass}, {"evidence", h.evidence}};
}

Json to_json(const Certificate& c) {
  Json hyps = Json::array();
  for (const auto& h : c.hypotheses) hyps.push_back(to_json(h));
  return Json{{"theorem_id", theorem_id_str(c.theorem_id)},
              {"mode", mode_str(c.mode)},
              {"hypotheses", hyps},
              {"conclusion", c.conclusion},
              {"conditional_on", c.conditional_on}};
}

Json to_json(const Disk& d) {
  return Json{{"center_re_hex", dyadic_to_hex(d.center_re)},
              {"center_im_hex", dyadic_to_hex(d.center_im)},
              {"radius_hex", dyadic_to_hex(d.radius)}};
}

Json to_json(const RootCluster& c) {
  Json j = to_json(c.disk);
  j["multiplicity"] = c.multiplicity;
  return j;
}

Json to_json(const CheckedCondition& c) {
  std::string status = c.status == CheckStatus::Pass     ? "pass"
                       : c.status == CheckStatus::Fail   ? "fail"
                                                         : "unevaluated";
  return Json{{"name", c.name}, {"status", status}, {"evidence", c.evidence}};
}

Json to_json(const FamilyInstance& inst) {
  Json params = Json::object();
  for (const auto& [k, v] : inst.params) params[k] = v;
  Json conds = Json::array();
  for (const auto& c : inst.checked_conditions) conds.push_back(to_json(c));
  Json j{{"family", family_id_str(inst.family_id)},
         {"params", params},
         {"poly", to_string(inst.poly)},
         {"mode", mode_str(inst.mode)},
         {"checked_conditions", conds},
         {"valid", inst.ok()}};
  if (inst.published_k >= 0) j["k"] = inst.published_k;
  if (inst.cardinality_claim >= 0) j["cardinality"] = inst.cardinality_claim;
  return j;
}

Json to_json(const SymmetryReport& s) {
  Json j;
  switch (s.kind) {
    case SymmetryKind::TrivialOnly: j["kind"] = "trivial-only"; break;
    case SymmetryKind::Cyclic: j["kind"] = "cyclic"; break;
    case SymmetryKind::Continuous: j["kind"] = "continuous"; break;
  }
  j["centroid"] = to_string(s.centroid);
  if (s.kind == SymmetryKind::Cyclic) {
    j["order"] = s.order;
    if (s.generator_exact) {
      j["generator"] = Json{{"a", to_string(s.gen_a)},
                            {"b", to_string(s.gen_b)},
                            {"c", to_string(s.gen_c)}};
    } else {
      j["generator_tag"] = s.generator_tag;
    }
  }
  return j;
}

Json to_json(const SharedSpectrum& s) {
  Json strata = Json::array();
  for (const auto& [f, m] : s.strata)
    strata.push_back(Json{{"stratum", to_string(f)}, {"multiplicity", m}});
  return Json{{"strata", strata}, {"infinity_mult", s.infinity_mult}};
}

std::string render_human(const Certificate& c) {
  std::ostringstream os;
  os << theorem_id_str(c.theorem_id) << " [" << mode_str(c.mode) << "]  "
     << (c.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& h : c.hypotheses)
    os << "  " << (h.pass ? "+" : "-") << " " << h.name << ": " << h.evidence << "\n";
  if (!c.conclusion.empty()) os << "  => " << c.conclusion << "\n";
  for (const auto& cond : c.conditional_on) os << "  (conditional: " << cond << ")\n";
  return os.str();
}

std::string render_human(const FamilyInstance& inst) {
  std::ostringstream os;
  os << "family " << family_id_str(inst.family_id) << "  "
     << (inst.ok() ? "VALID" : "INVALID") << "\n";
  os << "  P = " << to_string(inst.poly) << "\n";
  for (const auto& [k, v] : inst.params) os << "  " << k << " = " << v << "\n";
  for (const auto& c : inst.checked_conditions) {
    char mark = c.status == CheckStatus::Pass ? '+' : c.status == CheckStatus::Fail ? '-' : '?';
    os << "  " << mark << " " << c.name << ": " << c.evidence << "\n";
  }
  return os.str();
}

std::string render_human(const SymmetryReport& s) {
  std::ostringstream os;
  switch (s.kind) {
    case SymmetryKind::TrivialOnly: os << "trivial-only"; break;
    case SymmetryKind::Cyclic: os << "cyclic order " << s.order; break;
    case SymmetryKind::Continuous: os << "continuous"; break;
  }
  os << ", centroid " << to_string(s.centroid);
  if (s.kind == SymmetryKind::Cyclic) {
    if (s.generator_exact)
      os << ", generator (a, b, c) = (" << to_string(s.gen_a) << ", "
         << to_string(s.gen_b) << ", " << to_string(s.gen_c) << ")";
    else
      os << ", generator " << s.generator_tag;
  }
  os << "\n";
  return os.str();
}

}  // namespace urs
