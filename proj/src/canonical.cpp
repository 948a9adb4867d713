#include "arfkit/canonical.hpp"

#include "arfkit/classify.hpp"
#include "arfkit/lipman.hpp"

namespace arfkit {

  RelativeIdeal canonical_ideal(NumericalSemigroup const& h) {
    auto const f = h.frobenius();
    // x < 0 gives F - x > F, a member; x > F gives a negative, a non-member
    return RelativeIdeal::from_predicate(
        h, 0, f + 1, [&](value_type x) { return !h.contains(f - x); });
  }

  NumericalSemigroup extension_S(NumericalSemigroup const& h) {
    return monoid_generated_by(canonical_ideal(h));
  }

  ConductorAndLength conductor_and_length(NumericalSemigroup const& h) {
    auto const whole     = RelativeIdeal::whole(h);
    auto       conductor = ideal_quotient(
        whole, RelativeIdeal::of_oversemigroup(h, extension_S(h)));
    auto const ell = ideal_colength(whole, conductor);
    return {std::move(conductor), ell};
  }

  CanonicalData canonical_data(NumericalSemigroup const& h) {
    auto k = canonical_ideal(h);
    auto s = monoid_generated_by(k);
    auto c = ideal_quotient(RelativeIdeal::whole(h),
                            RelativeIdeal::of_oversemigroup(h, s));
    auto ell = ideal_colength(RelativeIdeal::whole(h), c);
    return {std::move(k), std::move(s), std::move(c), ell};
  }

  std::optional<value_type> b_extension_length(NumericalSemigroup const& h) {
    if (!h.has_max_embedding_dimension() || is_symmetric(h)
        || h.multiplicity() < 3) {
      return std::nullopt;
    }
    auto const b = endomorphism_semigroup(h);
    // L = K + B is an ideal over B since B + B = B
    auto const l = ideal_sum(canonical_ideal(h),
                             RelativeIdeal::of_oversemigroup(h, b))
                       .over(b);
    auto const bl      = monoid_generated_by(l);
    auto const b_whole = RelativeIdeal::whole(b);
    auto const cond
        = ideal_quotient(b_whole, RelativeIdeal::of_oversemigroup(b, bl));
    return ideal_colength(b_whole, cond);
  }

}  // namespace arfkit
