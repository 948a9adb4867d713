#include "arfkit/lipman.hpp"

namespace arfkit {

  std::vector<value_type> LipmanSequence::multiplicities() const {
    std::vector<value_type> out;
    out.reserve(steps.size());
    for (auto const& s : steps) {
      out.push_back(s.multiplicity());
    }
    return out;
  }

  NumericalSemigroup blowup(NumericalSemigroup const& h) {
    auto gens = h.generators();
    for (std::size_t i = 1; i < gens.size(); ++i) {
      gens[i] -= gens[0];
    }
    return NumericalSemigroup::from_generators(gens);
  }

  NumericalSemigroup blowup_oracle(NumericalSemigroup const& h) {
    auto const m     = RelativeIdeal::maximal(h);
    auto       power = m;
    while (true) {
      auto next = ideal_sum(power, m);
      if (next.same_set(power.translate(m.min()))) {
        break;
      }
      power = std::move(next);
    }
    return monoid_generated_by(ideal_quotient(power, power));
  }

  LipmanSequence lipman_sequence(NumericalSemigroup const& h) {
    LipmanSequence seq{{h}};
    while (!seq.steps.back().is_natural_numbers()) {
      seq.steps.push_back(blowup(seq.steps.back()));
    }
    return seq;
  }

  NumericalSemigroup endomorphism_semigroup(NumericalSemigroup const& h) {
    auto const m = RelativeIdeal::maximal(h);
    return monoid_generated_by(ideal_quotient(m, m));
  }

}  // namespace arfkit
