#pragma once

// Blowups of a numerical semigroup at its maximal ideal.

#include <vector>

#include "arfkit/semigroup.hpp"

namespace arfkit {

  //! The chain H = H_0 < H_1 < ... < H_T = N of iterated blowups.
  struct LipmanSequence {
    std::vector<NumericalSemigroup> steps;

    [[nodiscard]] std::vector<value_type> multiplicities() const;
    //! Number of strict blowups performed, T.
    [[nodiscard]] std::size_t length() const noexcept {
      return steps.size() - 1;
    }
  };

  //! <a_1, a_2 - a_1, ..., a_l - a_1> for minimal generators a_1 < ... < a_l.
  NumericalSemigroup blowup(NumericalSemigroup const& h);

  //! The blowup as the union of nM - nM, computed with ideal arithmetic
  //! only.  Stops at the first n with (n + 1)M = m + nM.  Used to
  //! cross-check blowup().
  NumericalSemigroup blowup_oracle(NumericalSemigroup const& h);

  LipmanSequence lipman_sequence(NumericalSemigroup const& h);

  //! B = M - M.
  NumericalSemigroup endomorphism_semigroup(NumericalSemigroup const& h);

}  // namespace arfkit
