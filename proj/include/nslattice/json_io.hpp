#pragma once

#include "json.hpp"

#include "nslattice/blowup.hpp"
#include "nslattice/hirzebruch.hpp"
#include "nslattice/lattice.hpp"

// JSON forms used by the command-line tool. Writers emit ordered objects so
// the output is byte-stable; each writer has a reader that accepts what it
// emits. Readers throw nlohmann::json::exception on malformed input and
// nslattice errors on well-formed but invalid values.
namespace nslattice::json_io {

using Json = nlohmann::ordered_json;

// {"family":"hirzebruch","n":3} / {"family":"blowup_p2","r":6} /
// {"family":"blowup_hirzebruch","n":5,"r":1}
Json family_to_json(const Family& family);
Family family_from_json(const Json& j);

// {"coeffs":[...]}
Json class_to_json(const DivisorClass& d);
DivisorClass class_from_json(const Json& j);
Json classes_to_json(const std::vector<DivisorClass>& classes);
std::vector<DivisorClass> classes_from_json(const Json& j);

// {"coeffs":[...],"prime":true}
Json witness_to_json(const blowup::CurveWitness& w);
blowup::CurveWitness witness_from_json(const Json& j);

// {"lattice":{...},"curves":[witness...]}
Json model_to_json(const blowup::SurfaceModel& m);
blowup::SurfaceModel model_from_json(const Json& j);

// {"n":..,"a":..,"b":..}
Json hirzebruch_class_to_json(const hirzebruch::HirzebruchClass& c);
hirzebruch::HirzebruchClass hirzebruch_class_from_json(const Json& j);

Json effective_to_json(const std::optional<hirzebruch::EffectiveWitness>& w);
std::optional<hirzebruch::EffectiveWitness> effective_from_json(const Json& j);

Json nef_to_json(const hirzebruch::NefVerdict& v);
hirzebruch::NefVerdict nef_from_json(const Json& j);

// {"j":..,"fixed":{"a","b"},"mobile":{"a","b"}}; n is not part of the form.
Json fixed_mobile_to_json(const hirzebruch::FixedMobileDecomposition& d);
hirzebruch::FixedMobileDecomposition fixed_mobile_from_json(const Json& j, Int n);

// Blowup reports share the shape {"verdict":..,"details":{..},"violators":[..]}.
Json nef_report_to_json(const blowup::SurfaceModel& m, const blowup::NefVerdict& v);
blowup::NefVerdict nef_report_from_json(const Json& j);

Json forced_report_to_json(const std::vector<blowup::CurveWitness>& forced);
std::vector<blowup::CurveWitness> forced_report_from_json(const Json& j);

Json classify_report_to_json(const blowup::CurveWitness& g,
                             const blowup::FixedComponentKind& kind);
blowup::FixedComponentKind classify_report_from_json(const Json& j);

Json consequence_report_to_json(const blowup::ConsequenceReport& r);
blowup::ConsequenceReport consequence_report_from_json(const Json& j);

Json lemma_move_report_to_json(const blowup::CurveWitness& g,
                               const blowup::LemmaMoveReport& r);
blowup::LemmaMoveReport lemma_move_report_from_json(const Json& j);

}  // namespace nslattice::json_io
