#include "arfkit/serialize.hpp"

namespace arfkit {

  Json to_json(NumericalSemigroup const& h) {
    Json j;
    j["gens"]         = h.generators();
    j["frobenius"]    = h.frobenius();
    j["genus"]        = h.genus();
    j["multiplicity"] = h.multiplicity();
    j["embdim"]       = h.embedding_dimension();
    return j;
  }

  NumericalSemigroup semigroup_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("gens") || !j["gens"].is_array()) {
      throw InvalidInput("semigroup object needs a \"gens\" array");
    }
    std::vector<value_type> gens;
    for (auto const& g : j["gens"]) {
      if (!g.is_number_integer()) {
        throw InvalidInput("generators must be integers");
      }
      gens.push_back(g.get<value_type>());
    }
    auto h = NumericalSemigroup::from_generators(gens);
    auto expected = to_json(h);
    for (auto const& [key, value] : j.items()) {
      if (expected.contains(key) && key != "gens" && expected[key] != value) {
        throw InvalidInput("field \"" + key + "\" disagrees with generators");
      }
    }
    return h;
  }

  Json to_json(LipmanSequence const& seq) {
    Json j = Json::array();
    for (auto const& s : seq.steps) {
      auto step           = to_json(s);
      step["max_embdim"] = s.has_max_embedding_dimension();
      j.push_back(std::move(step));
    }
    return j;
  }

  Json to_json(CriterionVerdict const& v) {
    Json j;
    j["name"]       = v.name;
    j["applicable"] = v.applicable;
    if (v.applicable) {
      j["holds"] = v.holds;
    } else {
      j["holds"] = "unknown";
    }
    // non-authoritative when not applicable
    j["raw_holds"] = v.holds;
    j["witnesses"] = v.witnesses;
    j["notes"]     = v.notes;
    return j;
  }

  Json to_json(Violation const& v) {
    Json j;
    j["check"]     = v.check;
    j["witnesses"] = v.witnesses;
    j["detail"]    = v.detail;
    return j;
  }

  Json to_json(Flags const& f) {
    Json j;
    j["symmetric"]        = f.symmetric;
    j["almost_symmetric"] = f.almost_symmetric;
    j["max_embdim"]       = f.max_embdim;
    j["arf"]              = f.arf;
    j["ggl"]              = std::string(to_string(f.ggl));
    return j;
  }

  Json to_json(ClassificationReport const& r) {
    Json j;
    j["semigroup"] = to_json(r.semigroup);

    Json inv;
    inv["m"]         = r.invariants.multiplicity;
    inv["embdim"]    = r.invariants.embdim;
    inv["F"]         = r.invariants.frobenius;
    inv["genus"]     = r.invariants.genus;
    inv["type"]      = r.invariants.type;
    inv["ell"]       = r.invariants.ell;
    j["invariants"]  = std::move(inv);
    j["flags"]       = to_json(r.flags);

    Json can;
    can["K_finite_part"]           = r.canonical.canonical.finite_part();
    can["K_bound"]                 = r.canonical.canonical.bound();
    can["S_gens"]                  = r.canonical.extension.generators();
    can["conductor_finite_part"]   = r.canonical.conductor.finite_part();
    can["conductor_min_full_tail"] = r.canonical.conductor.bound();
    can["ell"]                     = r.canonical.ell;
    j["canonical"]                 = std::move(can);

    j["criteria"] = Json::array();
    for (auto const& c : r.criteria) {
      j["criteria"].push_back(to_json(c));
    }
    j["violations"] = Json::array();
    for (auto const& v : r.violations) {
      j["violations"].push_back(to_json(v));
    }
    j["consistent"] = r.consistent;
    return j;
  }

  Json to_json(SurveyRecord const& r) {
    Json j;
    j["gens"]       = r.gens;
    j["genus"]      = r.genus;
    j["flags"]      = to_json(r.flags);
    j["violations"] = Json::array();
    for (auto const& v : r.violations) {
      j["violations"].push_back(to_json(v));
    }
    return j;
  }

}  // namespace arfkit
