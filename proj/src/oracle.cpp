#include "arfkit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <ostream>
#include <thread>

namespace arfkit {

  std::optional<std::array<value_type, 3>>
  arf_pattern_violation(NumericalSemigroup const& h) {
    auto const members = h.members_below(h.conductor());
    for (auto x : members) {
      for (auto y : members) {
        if (y > x) {
          break;
        }
        for (auto z : members) {
          if (z > y) {
            break;
          }
          if (!h.contains(x + y - z)) {
            return std::array<value_type, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<NumericalSemigroup> tree_children(NumericalSemigroup const& h) {
    std::vector<NumericalSemigroup> out;
    for (auto a : h.generators()) {
      if (a <= h.frobenius()) {
        continue;
      }
      std::vector<bool> table(static_cast<std::size_t>(a) + 1);
      for (value_type n = 0; n < a; ++n) {
        table[static_cast<std::size_t>(n)] = h.contains(n);
      }
      table[static_cast<std::size_t>(a)] = false;
      out.push_back(NumericalSemigroup::from_membership(table));
    }
    return out;
  }

  void for_each_by_genus(value_type                                     g_max,
                         std::function<void(NumericalSemigroup const&)> visit) {
    std::vector<NumericalSemigroup> level{NumericalSemigroup()};
    for (value_type g = 0; g <= g_max; ++g) {
      std::vector<NumericalSemigroup> next;
      for (auto const& h : level) {
        visit(h);
        if (g < g_max) {
          auto children = tree_children(h);
          std::move(children.begin(), children.end(), std::back_inserter(next));
        }
      }
      level = std::move(next);
    }
  }

  std::vector<NumericalSemigroup> enumerate_by_genus(value_type g_max) {
    std::vector<NumericalSemigroup> out;
    for_each_by_genus(g_max,
                      [&out](NumericalSemigroup const& h) { out.push_back(h); });
    return out;
  }

  std::size_t SurveySummary::total_semigroups() const {
    std::size_t n = 0;
    for (auto const& r : rows) {
      n += r.semigroups;
    }
    return n;
  }

  std::size_t SurveySummary::total_violations() const {
    std::size_t n = 0;
    for (auto const& r : rows) {
      n += r.violations;
    }
    return n;
  }

  SurveySummary survey(SurveyOptions const&                      opts,
                       std::function<void(SurveyRecord const&)> sink) {
    if (opts.max_genus < 0) {
      throw InvalidInput("max genus must be nonnegative");
    }
    auto const known = audit_check_names();
    for (auto const& c : opts.checks) {
      if (std::find(known.begin(), known.end(), c) == known.end()) {
        throw InvalidInput("unknown check '" + c + "'");
      }
    }

    auto const                semigroups = enumerate_by_genus(opts.max_genus);
    std::vector<SurveyRecord> records(semigroups.size());

    std::atomic<std::size_t> next{0};
    auto                     work = [&] {
      for (auto i = next++; i < semigroups.size(); i = next++) {
        auto const& h          = semigroups[i];
        auto        violations = consistency_audit(h);
        if (!opts.checks.empty()) {
          std::erase_if(violations, [&](Violation const& v) {
            return std::find(opts.checks.begin(), opts.checks.end(), v.check)
                   == opts.checks.end();
          });
        }
        records[i] = {h.generators(), h.genus(), classify_flags(h),
                      std::move(violations)};
      }
    };
    unsigned const jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back(work);
      }
    }

    SurveySummary summary;
    for (value_type g = 0; g <= opts.max_genus; ++g) {
      summary.rows.push_back({.genus = g});
    }
    for (auto const& r : records) {
      auto& row = summary.rows[static_cast<std::size_t>(r.genus)];
      ++row.semigroups;
      row.arf += r.flags.arf;
      row.almost_symmetric += r.flags.almost_symmetric;
      row.ggl_true += r.flags.ggl == Tristate::yes;
      row.violations += r.violations.size();
      if (sink) {
        sink(r);
      }
    }
    return summary;
  }

  void print_summary(std::ostream& os, SurveySummary const& summary) {
    os << std::setw(6) << "genus" << std::setw(12) << "semigroups"
       << std::setw(8) << "arf" << std::setw(10) << "almost"
       << std::setw(10) << "ggl" << std::setw(12) << "violations" << '\n';
    for (auto const& r : summary.rows) {
      os << std::setw(6) << r.genus << std::setw(12) << r.semigroups
         << std::setw(8) << r.arf << std::setw(10) << r.almost_symmetric
         << std::setw(10) << r.ggl_true << std::setw(12) << r.violations
         << '\n';
    }
    os << "total: " << summary.total_semigroups() << " semigroups, "
       << summary.total_violations() << " violations\n";
  }

}  // namespace arfkit
