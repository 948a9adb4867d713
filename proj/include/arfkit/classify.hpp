#pragma once

// Arf, almost symmetric and generalized Gorenstein classification of a
// numerical semigroup, the criteria that characterize these properties,
// and an audit that evaluates every known equivalence both ways.

#include <string>
#include <string_view>
#include <vector>

#include "arfkit/canonical.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

  enum class Tristate { no, yes, unknown };

  std::string_view to_string(Tristate t) noexcept;

  //! 2g = F + 1 (Gorenstein).
  bool is_symmetric(NumericalSemigroup const& h);

  //! M + K <= H (almost Gorenstein).
  bool is_almost_symmetric(NumericalSemigroup const& h);

  //! Every step of the Lipman sequence has maximal embedding dimension.
  bool is_arf(NumericalSemigroup const& h);

  //! Smallest Arf semigroup containing \p h.
  NumericalSemigroup arf_closure(NumericalSemigroup const& h);

  //! Generalized Gorenstein with minimal multiplicity.
  //!
  //! Symmetric semigroups are `yes`.  Semigroups that are neither symmetric
  //! nor of maximal embedding dimension are `unknown`: the only decision
  //! procedure available needs minimal multiplicity.  Otherwise the answer
  //! is `yes` iff S is symmetric, S is step ell of the Lipman sequence, and
  //! every earlier step has embedding dimension = multiplicity = m(H).
  Tristate is_ggl_min_mult(NumericalSemigroup const& h);

  struct CriterionVerdict {
    std::string name;
    bool        applicable = true;
    //! Computed even when not applicable; authoritative only when it is.
    bool                    holds = false;
    std::vector<value_type> witnesses{};
    std::string             notes{};
  };

  //! Minimal multiplicity and e(S) <= 2.  Applicable when GGL holds.
  CriterionVerdict criterion_main(NumericalSemigroup const& h);
  //! 2 + a_i in H for every minimal generator.  Always applicable.
  CriterionVerdict criterion_bf(NumericalSemigroup const& h);
  //! e(M - M) <= 2.  Always applicable.
  CriterionVerdict criterion_endo(NumericalSemigroup const& h);
  //! Minimal multiplicity, 2 + ell * a_1 in H, 2 + a_i in H for i >= 2.
  //! Applicable when GGL holds.
  CriterionVerdict criterion_gg(NumericalSemigroup const& h);
  //! Whether the idealization over the conductor is Arf: minimal
  //! multiplicity and S = N.  Applicable when GGL holds.
  CriterionVerdict idealization_c_arf(NumericalSemigroup const& h);
  //! Whether the idealization over M is almost Gorenstein Arf: m + N <= H,
  //! i.e. F < m.  The witness on failure is the least n > m outside H.
  CriterionVerdict idealization_m_ag_arf(NumericalSemigroup const& h);

  struct Invariants {
    value_type multiplicity;
    value_type embdim;
    value_type frobenius;
    value_type genus;
    value_type type;
    value_type ell;
  };

  struct Flags {
    bool     symmetric;
    bool     almost_symmetric;
    bool     max_embdim;
    bool     arf;
    Tristate ggl;

    friend bool operator==(Flags const&, Flags const&) = default;
  };

  struct Violation {
    std::string             check;
    std::vector<value_type> witnesses;
    std::string             detail;
  };

  struct ClassificationReport {
    NumericalSemigroup            semigroup;
    Invariants                    invariants;
    Flags                         flags;
    CanonicalData                 canonical;
    std::vector<CriterionVerdict> criteria;
    std::vector<Violation>        violations;
    bool                          consistent;
  };

  Flags classify_flags(NumericalSemigroup const& h);

  ClassificationReport classify_report(NumericalSemigroup const& h);

  //! Every applicable equivalence evaluated both ways; empty when the
  //! semigroup is consistent with all of them.
  std::vector<Violation> consistency_audit(NumericalSemigroup const& h);

  //! Names of the checks consistency_audit() can report.
  std::vector<std::string_view> audit_check_names();

}  // namespace arfkit
