#include "nslattice/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "nslattice/blowup.hpp"
#include "nslattice/hirzebruch.hpp"
#include "nslattice/json_io.hpp"
#include "nslattice/lattice.hpp"
#include "nslattice/selfcheck.hpp"

namespace nslattice::cli {

namespace {

using json_io::Json;

// Bad command-line input that CLI11 itself cannot see (payload shape,
// coefficient lists, missing lattice description).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool strict = false;
  bool pretty = false;
  bool check_canonical = false;

  std::string family;
  Int n = 0;
  Int r = 0;
  Int a = 0;
  Int b = 0;
  std::string d;
  std::string d1;
  std::string d2;
  Int self_int = -1;
  Int degree_bound = 7;
  std::string json_file;
};

std::vector<Int> parse_coeffs(const std::string& text, const char* flag) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw UsageError(std::string(flag) + ": '" + text +
                       "' is not a comma-separated list of integers");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

class Dispatcher {
 public:
  Dispatcher(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Divisor-class calculus on Neron-Severi lattices of rational surfaces",
                 "nslattice"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--strict", opt_.strict, "Exit 3 on theorem_violation verdicts");
    app.add_flag("--pretty", opt_.pretty, "Indent the JSON output");
    app.add_flag("--check-canonical", opt_.check_canonical,
                 "Verify the canonical class of the lattice in use");

    auto* intersect_cmd = app.add_subcommand("intersect", "Intersection number D1.D2");
    add_lattice_flags(intersect_cmd);
    intersect_cmd->add_option("--d1", opt_.d1, "First class, comma-separated");
    intersect_cmd->add_option("--d2", opt_.d2, "Second class, comma-separated");
    intersect_cmd->callback([this] { action_ = [this] { return cmd_intersect(); }; });

    add_single_class_command(app, "genus", "Arithmetic genus 1 + (D^2 + K.D)/2",
                             [this] { return cmd_scalar(&arithmetic_genus); });
    add_single_class_command(app, "chi", "Euler characteristic 1 + (D^2 - K.D)/2",
                             [this] { return cmd_scalar(&euler_characteristic); });
    add_single_class_command(app, "h0-bound", "Riemann-Roch lower bound for h0",
                             [this] { return cmd_h0_bound(); });
    add_single_class_command(app, "basis-change",
                             "Map a class from F_1 or Bl_1 F_0 onto a blowup of P^2",
                             [this] { return cmd_basis_change(); });

    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "Rational classes of given square on Bl_r P^2");
    enumerate_cmd->add_option("--r", opt_.r, "Number of blown-up points");
    enumerate_cmd->add_option("--self-int", opt_.self_int, "Self-intersection (<= -1)")
        ->capture_default_str();
    enumerate_cmd->add_option("--degree-bound", opt_.degree_bound, "Largest degree searched")
        ->capture_default_str();
    enumerate_cmd->add_option("--json", opt_.json_file, "Payload file ('-' for stdin)");
    enumerate_cmd->callback([this] { action_ = [this] { return cmd_enumerate(); }; });

    auto* hz = app.add_subcommand("hirzebruch", "Divisor classes aC_n + bF on F_n");
    hz->require_subcommand(1);
    hz->fallthrough();
    add_hirzebruch_command(hz, "effective", "Membership in N C_n + N F",
                           [this] { return cmd_effective(); });
    add_hirzebruch_command(hz, "nef", "Decomposition over C_n + nF and F",
                           [this] { return cmd_nef(); });
    add_hirzebruch_command(hz, "fixed-mobile", "Fixed and mobile parts of |aC_n + bF|",
                           [this] { return cmd_fixed_mobile(); });
    auto* anti = hz->add_subcommand("anticanonical", "Fixed part of |-K| on F_n");
    anti->add_option("--n", opt_.n, "Surface parameter n >= 0")->required();
    anti->callback([this] { action_ = [this] { return cmd_anticanonical(); }; });

    auto* bl = app.add_subcommand("blowup", "Witness-based checks on blown-up surfaces");
    bl->require_subcommand(1);
    bl->fallthrough();
    add_model_command(bl, "nef-test", "Nefness of a class relative to the witnesses",
                      [this] { return cmd_nef_test(); }, true);
    add_model_command(bl, "forced-fixed", "Prime witnesses meeting -K negatively",
                      [this] { return cmd_forced_fixed(); }, false);
    add_model_command(bl, "classify", "Classify a fixed component of |-K|",
                      [this] { return cmd_classify(); }, false);
    add_model_command(bl, "consequences", "Consistency checks derived from -K",
                      [this] { return cmd_consequences(); }, false);
    add_model_command(bl, "lemma-move", "Positive-square prime classes move",
                      [this] { return cmd_lemma_move(); }, false);

    auto* sc = app.add_subcommand("selfcheck", "Run the built-in property oracles");
    sc->add_option("--json", opt_.json_file, "Config file (default: $NSLATTICE_CONFIG)");
    sc->callback([this] { action_ = [this] { return cmd_selfcheck(); }; });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsageError;
    }

    try {
      return action_();
    } catch (const UsageError& e) {
      err_ << "nslattice: " << e.what() << '\n';
      return kUsageError;
    } catch (const nlohmann::json::exception& e) {
      err_ << "nslattice: malformed JSON payload: " << e.what() << '\n';
      return kUsageError;
    } catch (const Error& e) {
      Json doc;
      doc["error"] = error_kind(e);
      doc["message"] = e.what();
      emit(doc);
      err_ << "nslattice: " << e.what() << '\n';
      return kDomainError;
    }
  }

 private:
  static std::string error_kind(const Error& e) {
    if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
    if (dynamic_cast<const NotEffectiveError*>(&e)) return "not_effective";
    if (dynamic_cast<const FamilyError*>(&e)) return "family";
    if (dynamic_cast<const InvalidParameterError*>(&e)) return "invalid_parameter";
    if (dynamic_cast<const LatticeCorruptionError*>(&e)) return "lattice_corruption";
    if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
    return "domain";
  }

  void add_lattice_flags(CLI::App* cmd) {
    cmd->add_option("--family", opt_.family, "hirzebruch | blowup_p2 | blowup_hirzebruch");
    cmd->add_option("--n", opt_.n, "Hirzebruch parameter");
    cmd->add_option("--r", opt_.r, "Number of blown-up points");
    cmd->add_option("--json", opt_.json_file, "Payload file ('-' for stdin)");
  }

  void add_single_class_command(CLI::App& app, const char* name, const char* help,
                                std::function<int()> action) {
    auto* cmd = app.add_subcommand(name, help);
    add_lattice_flags(cmd);
    cmd->add_option("--d", opt_.d, "Class, comma-separated in basis order");
    cmd->callback([this, action] { action_ = action; });
  }

  void add_hirzebruch_command(CLI::App* parent, const char* name, const char* help,
                              std::function<int()> action) {
    auto* cmd = parent->add_subcommand(name, help);
    auto* n = cmd->add_option("--n", opt_.n, "Surface parameter n >= 0");
    auto* a = cmd->add_option("--a", opt_.a, "Coefficient of C_n");
    auto* b = cmd->add_option("--b", opt_.b, "Coefficient of F");
    cmd->add_option("--json", opt_.json_file, "Payload {\"n\",\"a\",\"b\"}");
    cmd->callback([this, action, n, a, b] {
      if (opt_.json_file.empty() && (!n->count() || !a->count() || !b->count())) {
        throw CLI::RequiredError("--n, --a and --b (or --json)");
      }
      action_ = action;
    });
  }

  void add_model_command(CLI::App* parent, const char* name, const char* help,
                         std::function<int()> action, bool takes_class) {
    auto* cmd = parent->add_subcommand(name, help);
    cmd->add_option("--json", opt_.json_file, "SurfaceModel payload ('-' for stdin)")
        ->required();
    if (takes_class) cmd->add_option("--d", opt_.d, "Class to test, comma-separated");
    cmd->callback([this, action] { action_ = action; });
  }

  // Payload from --json, or an empty object.
  const Json& payload() {
    if (!payload_loaded_) {
      payload_loaded_ = true;
      payload_ = Json::object();
      if (!opt_.json_file.empty()) {
        if (opt_.json_file == "-") {
          payload_ = Json::parse(in_);
        } else {
          std::ifstream file(opt_.json_file);
          if (!file) throw UsageError("cannot open " + opt_.json_file);
          payload_ = Json::parse(file);
        }
        if (!payload_.is_object()) throw UsageError("JSON payload must be an object");
      }
    }
    return payload_;
  }

  SurfaceLattice lattice_from_options() {
    const auto& p = payload();
    if (p.contains("lattice")) return make_lattice(json_io::family_from_json(p.at("lattice")));
    if (opt_.family.empty()) throw UsageError("--family (or a \"lattice\" payload) is required");
    Family f;
    f.kind = parse_family_name(opt_.family);
    f.n = opt_.n;
    f.r = opt_.r;
    return make_lattice(f);
  }

  DivisorClass class_from_options(const char* key, const std::string& flag_value,
                                  const char* flag) {
    const auto& p = payload();
    if (p.contains(key)) return json_io::class_from_json(p.at(key));
    if (flag_value.empty()) {
      throw UsageError(std::string(flag) + " (or a \"" + key + "\" payload) is required");
    }
    return DivisorClass(parse_coeffs(flag_value, flag));
  }

  hirzebruch::HirzebruchClass hirzebruch_from_options() {
    const auto& p = payload();
    return {p.value("n", opt_.n), p.value("a", opt_.a), p.value("b", opt_.b)};
  }

  // Adjunction on the basis curves: every basis element of the built-in
  // families is the class of a smooth rational curve (line, C_n, fibre, E_i).
  Json canonical_check(const SurfaceLattice& lattice) {
    const Int k2 = self_intersection(lattice, lattice.canonical());
    const auto& f = lattice.family();
    const Int expected = f.kind == FamilyKind::BlowupP2 ? 9 - f.r : 8 - lattice.blowups();
    bool adjunction = true;
    for (std::size_t i = 0; i < lattice.rank(); ++i) {
      adjunction = adjunction &&
                   arithmetic_genus(lattice, DivisorClass::unit(lattice.rank(), i)) == 0;
    }
    Json j;
    j["canonical"] = json_io::class_to_json(lattice.canonical());
    j["k_squared"] = k2;
    j["expected_k_squared"] = expected;
    j["basis_curves_rational"] = adjunction;
    j["passed"] = adjunction && k2 == expected;
    return j;
  }

  int finish(Json doc, const SurfaceLattice* lattice, bool violation = false) {
    int code = kOk;
    if (opt_.check_canonical && lattice != nullptr) {
      auto check = canonical_check(*lattice);
      if (!check["passed"].get<bool>()) code = kDomainError;
      doc["canonical_check"] = std::move(check);
    }
    emit(doc);
    if (code == kOk && violation && opt_.strict) code = kTheoremViolation;
    return code;
  }

  void emit(const Json& doc) {
    out_ << (opt_.pretty ? doc.dump(2) : doc.dump()) << '\n';
  }

  int cmd_intersect() {
    const auto lattice = lattice_from_options();
    const auto d1 = class_from_options("d1", opt_.d1, "--d1");
    const auto d2 = class_from_options("d2", opt_.d2, "--d2");
    Json doc;
    doc["value"] = intersect(lattice, d1, d2);
    return finish(doc, &lattice);
  }

  int cmd_scalar(Int (*op)(const SurfaceLattice&, const DivisorClass&)) {
    const auto lattice = lattice_from_options();
    const auto d = class_from_options("d", opt_.d, "--d");
    Json doc;
    doc["value"] = op(lattice, d);
    return finish(doc, &lattice);
  }

  int cmd_h0_bound() {
    const auto lattice = lattice_from_options();
    const auto d = class_from_options("d", opt_.d, "--d");
    Json doc;
    doc["value"] = h0_lower_bound(lattice, d);
    const bool not_effective = provably_not_effective(lattice, d);
    doc["provably_not_effective"] = not_effective;
    if (not_effective) {
      err_ << "nslattice: warning: D meets a nef class negatively, so it is not effective "
              "and the bound says nothing about h0\n";
    }
    return finish(doc, &lattice);
  }

  int cmd_basis_change() {
    const auto lattice = lattice_from_options();
    const auto d = class_from_options("d", opt_.d, "--d");
    const auto& f = lattice.family();
    const bool from_blf0 = f.kind == FamilyKind::BlowupHirzebruch && f.n == 0 && f.r == 1;
    const auto image = from_blf0 ? basis_change_blf0_to_p2(lattice, d)
                                 : basis_change_f1_to_p2(lattice, d);
    Json doc;
    doc["lattice"] = json_io::family_to_json(Family::blowup_p2(from_blf0 ? 2 : 1));
    doc["class"] = json_io::class_to_json(image);
    return finish(doc, &lattice);
  }

  int cmd_enumerate() {
    const auto& p = payload();
    const Int r = p.value("r", opt_.r);
    const Int self_int = p.value("self_int", opt_.self_int);
    const Int bound = p.value("degree_bound", opt_.degree_bound);
    const auto lattice = make_lattice(Family::blowup_p2(r));
    const auto classes = enumerate_negative_rational_classes(lattice, self_int, bound);
    Json doc;
    doc["lattice"] = json_io::family_to_json(lattice.family());
    doc["self_int"] = self_int;
    doc["degree_bound"] = bound;
    doc["count"] = classes.size();
    doc["classes"] = json_io::classes_to_json(classes);
    return finish(doc, &lattice);
  }

  int cmd_effective() {
    const auto c = hirzebruch_from_options();
    const auto lattice = make_lattice(Family::hirzebruch(c.n));
    return finish(json_io::effective_to_json(hirzebruch::is_effective(c.n, c.a, c.b)), &lattice);
  }

  int cmd_nef() {
    const auto c = hirzebruch_from_options();
    const auto lattice = make_lattice(Family::hirzebruch(c.n));
    return finish(json_io::nef_to_json(hirzebruch::nef_decompose(c.n, c.a, c.b)), &lattice);
  }

  int cmd_fixed_mobile() {
    const auto c = hirzebruch_from_options();
    const auto lattice = make_lattice(Family::hirzebruch(c.n));
    return finish(json_io::fixed_mobile_to_json(hirzebruch::fixed_mobile_decompose(c.n, c.a, c.b)),
                  &lattice);
  }

  int cmd_anticanonical() {
    const auto& p = payload();
    const Int n = p.value("n", opt_.n);
    const auto lattice = make_lattice(Family::hirzebruch(n));
    Json doc;
    doc["class"] = json_io::hirzebruch_class_to_json(hirzebruch::anticanonical_class(n));
    const Json locus = json_io::fixed_mobile_to_json(hirzebruch::anticanonical_fixed_locus(n));
    for (const auto& [key, value] : locus.items()) doc[key] = value;
    return finish(doc, &lattice);
  }

  blowup::SurfaceModel model() { return json_io::model_from_json(payload()); }

  blowup::CurveWitness witness_g() {
    const auto& p = payload();
    if (!p.contains("g")) throw UsageError("payload needs a \"g\" witness");
    return json_io::witness_from_json(p.at("g"));
  }

  int cmd_nef_test() {
    const auto m = model();
    const auto d = class_from_options("d", opt_.d, "--d");
    return finish(json_io::nef_report_to_json(m, blowup::nef_against_witnesses(m, d)),
                  &m.lattice());
  }

  int cmd_forced_fixed() {
    const auto m = model();
    return finish(json_io::forced_report_to_json(blowup::forced_fixed_components(m)),
                  &m.lattice());
  }

  int cmd_classify() {
    const auto m = model();
    const auto g = witness_g();
    const auto kind = blowup::classify_fixed_component(m, g);
    return finish(json_io::classify_report_to_json(g, kind), &m.lattice(),
                  std::holds_alternative<blowup::TheoremViolation>(kind));
  }

  int cmd_consequences() {
    const auto m = model();
    const bool complete = payload().value("witness_complete", false);
    const auto report = blowup::anticanonical_consequence_check(m, complete);
    return finish(json_io::consequence_report_to_json(report), &m.lattice(),
                  report.verdict == blowup::Verdict::TheoremViolation);
  }

  int cmd_lemma_move() {
    const auto m = model();
    const auto g = witness_g();
    const auto report = blowup::lemma_move_check(m, g);
    return finish(json_io::lemma_move_report_to_json(g, report), &m.lattice(),
                  report.verdict == blowup::Verdict::TheoremViolation);
  }

  int cmd_selfcheck() {
    if (opt_.json_file.empty()) {
      if (const char* env = std::getenv("NSLATTICE_CONFIG"); env && *env) opt_.json_file = env;
    }
    const auto config = selfcheck::config_from_json(nlohmann::json(payload()));
    const auto results = selfcheck::run_all(config);
    Json doc;
    bool all = true;
    Json checks = Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      Json c;
      c["name"] = r.name;
      c["passed"] = r.passed;
      c["cases"] = r.cases;
      if (!r.passed) c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    doc["passed"] = all;
    doc["config"] = selfcheck::config_to_json(config);
    doc["checks"] = std::move(checks);
    emit(doc);
    return all ? kOk : kDomainError;
  }

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  std::function<int()> action_;
  Json payload_;
  bool payload_loaded_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  return Dispatcher(in, out, err).run(args);
}

}  // namespace nslattice::cli
