#pragma once

// Brute-force checks and exhaustive enumeration of numerical semigroups.

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arfkit/classify.hpp"
#include "arfkit/semigroup.hpp"

namespace arfkit {

  //! A triple x >= y >= z of members with x + y - z outside H, if any.
  //!
  //! Only members below the conductor need checking: x + y - z >= x, so a
  //! triple with x >= F + 1 always lands in H.
  std::optional<std::array<value_type, 3>>
  arf_pattern_violation(NumericalSemigroup const& h);

  inline bool arf_by_pattern(NumericalSemigroup const& h) {
    return !arf_pattern_violation(h).has_value();
  }

  //! Children of \p h in the semigroup tree: H \ {a} for each minimal
  //! generator a > F(H).
  std::vector<NumericalSemigroup> tree_children(NumericalSemigroup const& h);

  //! Calls \p visit on every numerical semigroup of genus <= g_max exactly
  //! once, genus by genus, each level in tree order.
  void for_each_by_genus(value_type                                     g_max,
                         std::function<void(NumericalSemigroup const&)> visit);

  std::vector<NumericalSemigroup> enumerate_by_genus(value_type g_max);

  struct SurveyRecord {
    std::vector<value_type> gens;
    value_type              genus;
    Flags                   flags;
    std::vector<Violation>  violations;
  };

  struct SurveyRow {
    value_type  genus            = 0;
    std::size_t semigroups       = 0;
    std::size_t arf              = 0;
    std::size_t almost_symmetric = 0;
    std::size_t ggl_true         = 0;
    std::size_t violations       = 0;

    friend bool operator==(SurveyRow const&, SurveyRow const&) = default;
  };

  struct SurveySummary {
    std::vector<SurveyRow> rows;

    [[nodiscard]] std::size_t total_semigroups() const;
    [[nodiscard]] std::size_t total_violations() const;
  };

  struct SurveyOptions {
    value_type max_genus = 0;
    //! Audit check names to keep; empty keeps every check.
    std::vector<std::string> checks{};
    unsigned                 jobs = 1;
  };

  //! Classifies and audits every semigroup of genus <= max_genus.  Records
  //! are passed to \p sink in enumeration order regardless of \p jobs.
  SurveySummary survey(SurveyOptions const&                      opts,
                       std::function<void(SurveyRecord const&)> sink = {});

  void print_summary(std::ostream& os, SurveySummary const& summary);

}  // namespace arfkit
