#pragma once

// The canonical ideal K, the extension S generated by K, the conductor
// c = H - S, and the lengths built from them.

#include <optional>

#include "arfkit/semigroup.hpp"

namespace arfkit {

  struct CanonicalData {
    RelativeIdeal      canonical;   // K, with H <= K <= N and min K = 0
    NumericalSemigroup extension;   // S, the monoid generated by K
    RelativeIdeal      conductor;   // c = H - S
    value_type         ell;         // |H \ c|
  };

  //! K = {x : F - x is not in H}.
  RelativeIdeal canonical_ideal(NumericalSemigroup const& h);

  NumericalSemigroup extension_S(NumericalSemigroup const& h);

  struct ConductorAndLength {
    RelativeIdeal conductor;
    value_type    ell;
  };

  ConductorAndLength conductor_and_length(NumericalSemigroup const& h);

  CanonicalData canonical_data(NumericalSemigroup const& h);

  //! |B \ (B - B[L])| where B = M - M and L = K + B.
  //!
  //! Returns nullopt (inapplicable) unless H has maximal embedding
  //! dimension, is not symmetric and has multiplicity at least 3.
  std::optional<value_type> b_extension_length(NumericalSemigroup const& h);

}  // namespace arfkit
