#include "nslattice/json_io.hpp"

namespace nslattice::json_io {

namespace {

Json coeffs_array(const DivisorClass& d) {
  Json arr = Json::array();
  for (Int c : d.coeffs()) arr.push_back(c);
  return arr;
}

Json ab(const hirzebruch::HirzebruchClass& c) {
  Json j;
  j["a"] = c.a;
  j["b"] = c.b;
  return j;
}

Json report(const std::string& verdict, Json details, Json violators) {
  Json j;
  j["verdict"] = verdict;
  j["details"] = std::move(details);
  j["violators"] = std::move(violators);
  return j;
}

Json witnesses_to_json(const std::vector<blowup::CurveWitness>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) arr.push_back(witness_to_json(w));
  return arr;
}

}  // namespace

Json family_to_json(const Family& family) {
  Json j;
  j["family"] = family_name(family.kind);
  if (family.kind != FamilyKind::BlowupP2) j["n"] = family.n;
  if (family.kind != FamilyKind::Hirzebruch) j["r"] = family.r;
  return j;
}

Family family_from_json(const Json& j) {
  Family f;
  f.kind = parse_family_name(j.at("family").get<std::string>());
  f.n = j.value("n", Int{0});
  f.r = j.value("r", Int{0});
  return f;
}

Json class_to_json(const DivisorClass& d) {
  Json j;
  j["coeffs"] = coeffs_array(d);
  return j;
}

DivisorClass class_from_json(const Json& j) {
  return DivisorClass(j.at("coeffs").get<std::vector<Int>>());
}

Json classes_to_json(const std::vector<DivisorClass>& classes) {
  Json arr = Json::array();
  for (const auto& c : classes) arr.push_back(class_to_json(c));
  return arr;
}

std::vector<DivisorClass> classes_from_json(const Json& j) {
  std::vector<DivisorClass> out;
  for (const auto& item : j) out.push_back(class_from_json(item));
  return out;
}

Json witness_to_json(const blowup::CurveWitness& w) {
  Json j;
  j["coeffs"] = coeffs_array(w.cls);
  j["prime"] = w.asserted_prime;
  return j;
}

blowup::CurveWitness witness_from_json(const Json& j) {
  return {class_from_json(j), j.value("prime", true)};
}

Json model_to_json(const blowup::SurfaceModel& m) {
  Json j;
  j["lattice"] = family_to_json(m.lattice().family());
  j["curves"] = witnesses_to_json(m.curves());
  return j;
}

blowup::SurfaceModel model_from_json(const Json& j) {
  std::vector<blowup::CurveWitness> curves;
  if (j.contains("curves")) {
    for (const auto& c : j.at("curves")) curves.push_back(witness_from_json(c));
  }
  return {make_lattice(family_from_json(j.at("lattice"))), std::move(curves)};
}

Json hirzebruch_class_to_json(const hirzebruch::HirzebruchClass& c) {
  Json j;
  j["n"] = c.n;
  j["a"] = c.a;
  j["b"] = c.b;
  return j;
}

hirzebruch::HirzebruchClass hirzebruch_class_from_json(const Json& j) {
  return {j.at("n").get<Int>(), j.at("a").get<Int>(), j.at("b").get<Int>()};
}

Json effective_to_json(const std::optional<hirzebruch::EffectiveWitness>& w) {
  Json j;
  j["effective"] = w.has_value();
  if (w) {
    Json witness;
    witness["C"] = w->c_multiplicity;
    witness["F"] = w->f_multiplicity;
    j["witness"] = std::move(witness);
  }
  return j;
}

std::optional<hirzebruch::EffectiveWitness> effective_from_json(const Json& j) {
  if (!j.at("effective").get<bool>()) return std::nullopt;
  const auto& w = j.at("witness");
  return hirzebruch::EffectiveWitness{w.at("C").get<Int>(), w.at("F").get<Int>()};
}

Json nef_to_json(const hirzebruch::NefVerdict& v) {
  Json j;
  if (const auto* d = std::get_if<hirzebruch::NefDecomposition>(&v)) {
    j["nef"] = true;
    j["s"] = d->s;
    j["t"] = d->t;
  } else {
    const auto& bad = std::get<hirzebruch::NotNef>(v);
    j["nef"] = false;
    j["violator"] = bad.violator == hirzebruch::Generator::C ? "C" : "F";
    j["pairing"] = bad.pairing;
  }
  return j;
}

hirzebruch::NefVerdict nef_from_json(const Json& j) {
  if (j.at("nef").get<bool>()) {
    return hirzebruch::NefDecomposition{j.at("s").get<Int>(), j.at("t").get<Int>()};
  }
  const auto name = j.at("violator").get<std::string>();
  if (name != "C" && name != "F") throw InvalidParameterError("unknown generator " + name);
  return hirzebruch::NotNef{name == "C" ? hirzebruch::Generator::C : hirzebruch::Generator::F,
                            j.at("pairing").get<Int>()};
}

Json fixed_mobile_to_json(const hirzebruch::FixedMobileDecomposition& d) {
  Json j;
  j["j"] = d.j;
  j["fixed"] = ab(d.fixed);
  j["mobile"] = ab(d.mobile);
  return j;
}

hirzebruch::FixedMobileDecomposition fixed_mobile_from_json(const Json& j, Int n) {
  const auto& f = j.at("fixed");
  const auto& m = j.at("mobile");
  return {{n, f.at("a").get<Int>(), f.at("b").get<Int>()},
          {n, m.at("a").get<Int>(), m.at("b").get<Int>()},
          j.at("j").get<Int>()};
}

Json nef_report_to_json(const blowup::SurfaceModel& m, const blowup::NefVerdict& v) {
  Json details;
  details["empty_evidence"] = v.empty_evidence;
  Json violators = Json::array();
  if (v.violator_index) {
    details["violator_index"] = *v.violator_index;
    details["pairing"] = v.pairing;
    violators.push_back(witness_to_json(m.curves()[*v.violator_index]));
  }
  return report(v.nef_relative ? "nef_relative" : "violated", std::move(details),
                std::move(violators));
}

blowup::NefVerdict nef_report_from_json(const Json& j) {
  blowup::NefVerdict v;
  v.nef_relative = j.at("verdict").get<std::string>() == "nef_relative";
  const auto& details = j.at("details");
  v.empty_evidence = details.at("empty_evidence").get<bool>();
  if (details.contains("violator_index")) {
    v.violator_index = details.at("violator_index").get<std::size_t>();
    v.pairing = details.at("pairing").get<Int>();
  }
  return v;
}

Json forced_report_to_json(const std::vector<blowup::CurveWitness>& forced) {
  Json details;
  details["count"] = forced.size();
  return report(forced.empty() ? "none" : "forced", std::move(details),
                witnesses_to_json(forced));
}

std::vector<blowup::CurveWitness> forced_report_from_json(const Json& j) {
  std::vector<blowup::CurveWitness> out;
  for (const auto& w : j.at("violators")) out.push_back(witness_from_json(w));
  return out;
}

Json classify_report_to_json(const blowup::CurveWitness& g,
                             const blowup::FixedComponentKind& kind) {
  Json details;
  Json violators = Json::array();
  if (const auto* nr = std::get_if<blowup::NegativeRational>(&kind)) {
    details["n"] = nr->n;
  } else if (const auto* g1 = std::get_if<blowup::GenusOne>(&kind)) {
    details["self_int"] = g1->self_int;
  } else {
    details["reason"] = std::get<blowup::TheoremViolation>(kind).reason;
    violators.push_back(witness_to_json(g));
  }
  return report(blowup::kind_name(kind), std::move(details), std::move(violators));
}

blowup::FixedComponentKind classify_report_from_json(const Json& j) {
  const auto verdict = j.at("verdict").get<std::string>();
  const auto& details = j.at("details");
  if (verdict == "negative_rational") {
    return blowup::NegativeRational{details.at("n").get<Int>()};
  }
  if (verdict == "genus_one") return blowup::GenusOne{details.at("self_int").get<Int>()};
  if (verdict == "theorem_violation") {
    return blowup::TheoremViolation{details.at("reason").get<std::string>()};
  }
  throw InvalidParameterError("unknown classification '" + verdict + "'");
}

Json consequence_report_to_json(const blowup::ConsequenceReport& r) {
  Json details;
  details["nef_relative"] = r.nef_relative;
  details["witness_complete"] = r.witness_complete;
  details["k_squared"] = r.k_squared;
  details["rank"] = r.rank;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["passed"] = c.passed;
    checks.push_back(std::move(cj));
  }
  details["checks"] = std::move(checks);
  details["forced"] = classes_to_json(r.forced);
  return report(blowup::verdict_name(r.verdict), std::move(details),
                classes_to_json(r.violators));
}

blowup::ConsequenceReport consequence_report_from_json(const Json& j) {
  blowup::ConsequenceReport r;
  r.verdict = blowup::parse_verdict_name(j.at("verdict").get<std::string>());
  const auto& details = j.at("details");
  r.nef_relative = details.at("nef_relative").get<bool>();
  r.witness_complete = details.at("witness_complete").get<bool>();
  r.k_squared = details.at("k_squared").get<Int>();
  r.rank = details.at("rank").get<Int>();
  for (const auto& c : details.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("lhs").get<Int>(),
                        c.at("rhs").get<Int>(), c.at("passed").get<bool>()});
  }
  r.forced = classes_from_json(details.at("forced"));
  r.violators = classes_from_json(j.at("violators"));
  return r;
}

Json lemma_move_report_to_json(const blowup::CurveWitness& g,
                               const blowup::LemmaMoveReport& r) {
  Json details;
  details["self_int"] = r.self_int;
  details["k_dot"] = r.k_dot;
  details["bound"] = r.bound;
  Json violators = Json::array();
  if (r.verdict == blowup::Verdict::TheoremViolation) violators.push_back(witness_to_json(g));
  return report(blowup::verdict_name(r.verdict), std::move(details), std::move(violators));
}

blowup::LemmaMoveReport lemma_move_report_from_json(const Json& j) {
  blowup::LemmaMoveReport r;
  r.verdict = blowup::parse_verdict_name(j.at("verdict").get<std::string>());
  const auto& details = j.at("details");
  r.self_int = details.at("self_int").get<Int>();
  r.k_dot = details.at("k_dot").get<Int>();
  r.bound = details.at("bound").get<Int>();
  return r;
}

}  // namespace nslattice::json_io
