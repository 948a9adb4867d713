#pragma once

// JSON forms of semigroups, Lipman chains, reports and survey records.
// Keys are emitted in a fixed order so output is byte-for-byte
// reproducible.

#include "json.hpp"

#include "arfkit/classify.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/oracle.hpp"

namespace arfkit {

  using Json = nlohmann::ordered_json;

  //! {gens, frobenius, genus, multiplicity, embdim}
  Json to_json(NumericalSemigroup const& h);

  //! Reads the "gens" member of a semigroup object; the remaining members
  //! are checked against the recomputed values.
  //!
  //! \throws InvalidInput if the object is malformed or inconsistent.
  NumericalSemigroup semigroup_from_json(Json const& j);

  Json to_json(LipmanSequence const& seq);
  Json to_json(CriterionVerdict const& v);
  Json to_json(Violation const& v);
  Json to_json(Flags const& f);
  Json to_json(ClassificationReport const& r);
  Json to_json(SurveyRecord const& r);

}  // namespace arfkit
