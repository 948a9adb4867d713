#include "arfkit/golden.hpp"

#include "arfkit/canonical.hpp"
#include "arfkit/classify.hpp"
#include "arfkit/lipman.hpp"

namespace arfkit {

  namespace {
    class Suite {
     public:
      explicit Suite(std::string name) : _result{std::move(name), {}} {}

      void check(bool ok, std::string what) {
        if (!ok) {
          _result.failures.push_back(std::move(what));
        }
      }

      GoldenResult take() {
        return std::move(_result);
      }

     private:
      GoldenResult _result;
    };

    NumericalSemigroup sg(std::vector<value_type> const& gens) {
      return NumericalSemigroup::from_generators(gens);
    }

    // H u (1 + H) u ... u (k + H)
    RelativeIdeal translates_union(NumericalSemigroup const& h,
                                   std::vector<value_type> const& shifts) {
      return RelativeIdeal::from_predicate(
          h, 0, h.conductor() + 1, [&](value_type n) {
            for (auto s : shifts) {
              if (h.contains(n - s)) {
                return true;
              }
            }
            return false;
          });
    }

    GoldenResult almost_symmetric_not_arf() {
      Suite s("<3,7,11>: almost symmetric of type 2, not Arf");
      auto  h = sg({3, 7, 11});
      s.check(is_almost_symmetric(h), "almost symmetric");
      s.check(!is_symmetric(h) && type(h) == 2, "type 2, not symmetric");
      s.check(!is_arf(h), "not Arf");
      s.check(blowup(h) == sg({3, 4}), "blowup = <3,4>");
      s.check(canonical_ideal(h) == translates_union(h, {0, 4}),
              "K = H u (4 + H)");
      s.check(ideal_sum(RelativeIdeal::maximal(h), canonical_ideal(h))
                  .is_subset_of(RelativeIdeal::whole(h)),
              "M + K inside H");
      s.check(is_ggl_min_mult(h) == Tristate::yes, "generalized Gorenstein");
      return s.take();
    }

    GoldenResult arf_not_ggl() {
      Suite s("<4,7,9,10>: Arf, not generalized Gorenstein");
      auto  h   = sg({4, 7, 9, 10});
      auto  seq = lipman_sequence(h);
      s.check(is_arf(h), "Arf");
      s.check(is_ggl_min_mult(h) == Tristate::no, "ggl = false");
      s.check(seq.steps
                  == std::vector<NumericalSemigroup>{h, sg({3, 4, 5}),
                                                     NumericalSemigroup()},
              "Lipman chain [H, <3,4,5>, N]");
      return s.take();
    }

    GoldenResult interval_semigroups() {
      Suite s("<e,...,2e-1>, e = 2..8: generator criterion, B = N");
      for (value_type e = 2; e <= 8; ++e) {
        std::vector<value_type> gens;
        for (value_type a = e; a < 2 * e; ++a) {
          gens.push_back(a);
        }
        auto const h   = sg(gens);
        auto const tag = " (e = " + std::to_string(e) + ")";
        s.check(criterion_bf(h).holds, "2 + a_i in H" + tag);
        s.check(endomorphism_semigroup(h).is_natural_numbers(), "B = N" + tag);
        s.check(criterion_endo(h).holds, "e(B) <= 2" + tag);
        s.check(is_arf(h) && is_almost_symmetric(h),
                "almost symmetric Arf" + tag);
      }
      return s.take();
    }

    GoldenResult gapped_interval_semigroups() {
      Suite s("<e,e+2,...,2e-1,2e+1>, e = 3..8: generator criterion, "
              "B = <2,3>");
      for (value_type e = 3; e <= 8; ++e) {
        std::vector<value_type> gens{e};
        for (value_type a = e + 2; a < 2 * e; ++a) {
          gens.push_back(a);
        }
        gens.push_back(2 * e + 1);
        auto const h   = sg(gens);
        auto const tag = " (e = " + std::to_string(e) + ")";
        s.check(criterion_bf(h).holds, "2 + a_i in H" + tag);
        s.check(endomorphism_semigroup(h) == sg({2, 3}), "B = <2,3>" + tag);
        s.check(criterion_endo(h).holds, "e(B) <= 2" + tag);
        s.check(is_arf(h) && is_almost_symmetric(h),
                "almost symmetric Arf" + tag);
      }
      return s.take();
    }

    GoldenResult ggl_arf_not_almost_symmetric() {
      Suite s("<5,16,17,18,19>: generalized Gorenstein Arf, not almost "
              "symmetric");
      auto  h  = sg({5, 16, 17, 18, 19});
      auto  cd = canonical_data(h);
      s.check(is_ggl_min_mult(h) == Tristate::yes, "ggl = true");
      s.check(is_arf(h), "Arf");
      s.check(!is_almost_symmetric(h), "not almost symmetric");
      s.check(cd.ell == 3, "ell = 3");
      s.check(cd.conductor.min() == 15 && cd.conductor.bound() == 15,
              "conductor = [15, oo)");
      s.check(cd.canonical == translates_union(h, {0, 1, 2, 3}),
              "K = H u (1+H) u (2+H) u (3+H)");
      s.check(cd.extension.is_natural_numbers(), "S = N");
      auto gg = criterion_gg(h);
      s.check(gg.applicable && gg.holds && !gg.witnesses.empty()
                  && gg.witnesses.front() == 17,
              "2 + ell * a_1 = 17 in H");
      auto main = criterion_main(h);
      s.check(main.applicable && main.holds, "e(S) <= 2");
      s.check(ideal_sum(RelativeIdeal::maximal(h), canonical_ideal(h))
                      .contains(6)
                  && !h.contains(6),
              "6 = 5 + 1 in M + K but not in H");
      return s.take();
    }

    GoldenResult maximal_idealization() {
      Suite s("<4,5,6>: idealization over M not Arf, witness 7");
      auto  h = sg({4, 5, 6});
      auto  v = idealization_m_ag_arf(h);
      s.check(is_symmetric(h), "symmetric");
      s.check(!v.holds, "criterion fails");
      s.check(v.witnesses == std::vector<value_type>{7}, "witness 7");
      return s.take();
    }
  }  // namespace

  std::vector<GoldenResult> run_golden_examples() {
    return {almost_symmetric_not_arf(),
            arf_not_ggl(),
            interval_semigroups(),
            gapped_interval_semigroups(),
            ggl_arf_not_almost_symmetric(),
            maximal_idealization()};
  }

}  // namespace arfkit
