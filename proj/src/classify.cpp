#include "arfkit/classify.hpp"

#include <algorithm>

#include "arfkit/lipman.hpp"
#include "arfkit/oracle.hpp"

namespace arfkit {

  std::string_view to_string(Tristate t) noexcept {
    switch (t) {
      case Tristate::yes:
        return "true";
      case Tristate::no:
        return "false";
      default:
        return "unknown";
    }
  }

  bool is_symmetric(NumericalSemigroup const& h) {
    return 2 * h.genus() == h.frobenius() + 1;
  }

  bool is_almost_symmetric(NumericalSemigroup const& h) {
    return ideal_sum(RelativeIdeal::maximal(h), canonical_ideal(h))
        .is_subset_of(RelativeIdeal::whole(h));
  }

  bool is_arf(NumericalSemigroup const& h) {
    if (h.multiplicity() <= 2) {
      return true;
    }
    auto const seq = lipman_sequence(h);
    return std::all_of(seq.steps.begin(), seq.steps.end(), [](auto const& s) {
      return s.has_max_embedding_dimension();
    });
  }

  NumericalSemigroup arf_closure(NumericalSemigroup const& h) {
    // Saturate below the conductor under x + y - z (x >= y >= z); anything
    // at or above the conductor is already present.
    auto const        c = static_cast<std::size_t>(h.conductor());
    std::vector<bool> table(c);
    for (std::size_t n = 0; n < c; ++n) {
      table[n] = h.contains(static_cast<value_type>(n));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = 0; x < c; ++x) {
        if (!table[x]) {
          continue;
        }
        for (std::size_t y = 0; y <= x; ++y) {
          if (!table[y]) {
            continue;
          }
          for (std::size_t z = 0; z <= y; ++z) {
            if (x + y - z < c && table[z] && !table[x + y - z]) {
              table[x + y - z] = true;
              changed          = true;
            }
          }
        }
      }
    }
    return NumericalSemigroup::from_membership(table);
  }

  Tristate is_ggl_min_mult(NumericalSemigroup const& h) {
    if (is_symmetric(h)) {
      return Tristate::yes;
    }
    if (!h.has_max_embedding_dimension()) {
      return Tristate::unknown;
    }
    auto const cd = canonical_data(h);
    if (!is_symmetric(cd.extension)) {
      return Tristate::no;
    }
    auto const seq = lipman_sequence(h);
    auto const n   = static_cast<std::size_t>(cd.ell);
    if (n >= seq.steps.size() || !(seq.steps[n] == cd.extension)) {
      return Tristate::no;
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const& step = seq.steps[i];
      if (!step.has_max_embedding_dimension()
          || step.multiplicity() != h.multiplicity()) {
        return Tristate::no;
      }
    }
    return Tristate::yes;
  }

  ////////////////////////////////////////////////////////////////////////
  // Criteria
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void fail_embdim(CriterionVerdict& v, NumericalSemigroup const& h) {
      v.holds = false;
      v.witnesses.push_back(h.embedding_dimension());
      v.witnesses.push_back(h.multiplicity());
      v.notes = "embedding dimension below multiplicity";
    }

    void mark_applicability(CriterionVerdict& v, NumericalSemigroup const& h) {
      v.applicable = is_ggl_min_mult(h) == Tristate::yes;
      if (!v.applicable) {
        v.notes += v.notes.empty() ? "" : "; ";
        v.notes += "not known to be generalized Gorenstein, verdict not "
                   "authoritative";
      }
    }
  }  // namespace

  CriterionVerdict criterion_main(NumericalSemigroup const& h) {
    CriterionVerdict v{.name = "extension_multiplicity"};
    if (!h.has_max_embedding_dimension()) {
      fail_embdim(v, h);
    } else {
      auto const ms = extension_S(h).multiplicity();
      v.holds       = ms <= 2;
      v.witnesses   = {ms};
      v.notes       = "multiplicity of S";
    }
    mark_applicability(v, h);
    return v;
  }

  CriterionVerdict criterion_bf(NumericalSemigroup const& h) {
    CriterionVerdict        v{.name = "two_plus_generators"};
    std::vector<value_type> missing, present;
    for (auto a : h.generators()) {
      (h.contains(a + 2) ? present : missing).push_back(a + 2);
    }
    v.holds     = missing.empty();
    v.witnesses = v.holds ? present : missing;
    v.notes     = v.holds ? "2 + a in H for every generator a"
                          : "2 + a outside H";
    return v;
  }

  CriterionVerdict criterion_endo(NumericalSemigroup const& h) {
    CriterionVerdict v{.name = "endomorphism_multiplicity"};
    auto const       mb = endomorphism_semigroup(h).multiplicity();
    v.holds             = mb <= 2;
    v.witnesses         = {mb};
    v.notes             = "multiplicity of M - M";
    return v;
  }

  CriterionVerdict criterion_gg(NumericalSemigroup const& h) {
    CriterionVerdict v{.name = "two_plus_ell_multiplicity"};
    if (!h.has_max_embedding_dimension()) {
      fail_embdim(v, h);
    } else {
      auto const              ell  = conductor_and_length(h).ell;
      auto const&             gens = h.generators();
      std::vector<value_type> candidates{2 + ell * gens.front()};
      for (std::size_t i = 1; i < gens.size(); ++i) {
        candidates.push_back(2 + gens[i]);
      }
      std::vector<value_type> missing;
      std::copy_if(candidates.begin(),
                   candidates.end(),
                   std::back_inserter(missing),
                   [&h](value_type n) { return !h.contains(n); });
      v.holds     = missing.empty();
      v.witnesses = v.holds ? candidates : missing;
      v.notes     = "ell = " + std::to_string(ell);
    }
    mark_applicability(v, h);
    return v;
  }

  CriterionVerdict idealization_c_arf(NumericalSemigroup const& h) {
    CriterionVerdict v{.name = "conductor_idealization_arf"};
    if (!h.has_max_embedding_dimension()) {
      fail_embdim(v, h);
    } else {
      auto const s = extension_S(h);
      v.holds      = s.is_natural_numbers();
      if (v.holds) {
        v.notes = "S = N";
      } else {
        v.witnesses = {s.gaps().front()};
        v.notes     = "smallest gap of S";
      }
    }
    mark_applicability(v, h);
    return v;
  }

  CriterionVerdict idealization_m_ag_arf(NumericalSemigroup const& h) {
    CriterionVerdict v{.name = "maximal_idealization_ag_arf"};
    auto const       m = h.multiplicity();
    v.holds            = h.frobenius() < m;
    if (v.holds) {
      v.notes = "m + N inside H";
    } else {
      value_type n = m + 1;
      while (h.contains(n)) {
        ++n;
      }
      v.witnesses = {n};
      v.notes     = "smallest element of m + N outside H";
    }
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Report
  ////////////////////////////////////////////////////////////////////////

  Flags classify_flags(NumericalSemigroup const& h) {
    return {is_symmetric(h),
            is_almost_symmetric(h),
            h.has_max_embedding_dimension(),
            is_arf(h),
            is_ggl_min_mult(h)};
  }

  ClassificationReport classify_report(NumericalSemigroup const& h) {
    auto cd         = canonical_data(h);
    auto invariants = Invariants{h.multiplicity(),
                                 h.embedding_dimension(),
                                 h.frobenius(),
                                 h.genus(),
                                 type(h),
                                 cd.ell};
    auto violations = consistency_audit(h);
    bool consistent = violations.empty();
    return {h,
            invariants,
            classify_flags(h),
            std::move(cd),
            {criterion_main(h),
             criterion_bf(h),
             criterion_endo(h),
             criterion_gg(h),
             idealization_c_arf(h),
             idealization_m_ag_arf(h)},
            std::move(violations),
            consistent};
  }

  ////////////////////////////////////////////////////////////////////////
  // Audit
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::string_view check_names[] = {
        "arf-two-algorithms",
        "two-plus-generators",
        "endomorphism-vs-generators",
        "endomorphism-gorenstein",
        "extension-multiplicity",
        "two-plus-ell-multiplicity",
        "ggl-structure",
        "small-multiplicity-arf",
        "conductor-idealization",
        "extension-length",
        "canonical-chain",
        "canonical-size",
        "almost-symmetric-tests",
        "ell-symmetric",
        "ell-almost-symmetric",
        "conductor",
        "blowup-oracle",
        "endomorphism-in-blowup",
        "stable-maximal-ideal",
        "blowup-shift",
        "lipman-monotone",
        "semigroup-bounds",
        "apery-membership",
        "quotient-then-sum",
        "arf-closure",
    };

    class Auditor {
     public:
      void expect(std::string_view        check,
                  bool                    ok,
                  std::vector<value_type> witnesses,
                  std::string             detail) {
        if (!ok) {
          _out.push_back({std::string(check), std::move(witnesses),
                          std::move(detail)});
        }
      }
      std::vector<Violation> take() {
        return std::move(_out);
      }

     private:
      std::vector<Violation> _out;
    };

    std::string yn(bool b) {
      return b ? "true" : "false";
    }
  }  // namespace

  std::vector<std::string_view> audit_check_names() {
    return {std::begin(check_names), std::end(check_names)};
  }

  std::vector<Violation> consistency_audit(NumericalSemigroup const& h) {
    Auditor a;

    auto const m        = h.multiplicity();
    auto const maxemb   = h.has_max_embedding_dimension();
    auto const sym      = is_symmetric(h);
    auto const asym     = is_almost_symmetric(h);
    auto const arf      = is_arf(h);
    auto const ggl      = is_ggl_min_mult(h);
    auto const cd       = canonical_data(h);
    auto const b        = endomorphism_semigroup(h);
    auto const h1       = blowup(h);
    auto const seq      = lipman_sequence(h);
    auto const whole    = RelativeIdeal::whole(h);
    auto const maximal  = RelativeIdeal::maximal(h);
    auto const t        = type(h);
    auto const bf       = criterion_bf(h);
    auto const endo     = criterion_endo(h);
    auto const mainc    = criterion_main(h);
    auto const gg       = criterion_gg(h);
    auto const idc      = idealization_c_arf(h);

    // Arf, two ways
    auto const triple = arf_pattern_violation(h);
    a.expect("arf-two-algorithms",
             arf == !triple.has_value(),
             triple ? std::vector<value_type>{(*triple)[0], (*triple)[1],
                                              (*triple)[2]}
                    : std::vector<value_type>{m},
             "lipman " + yn(arf) + ", pattern " + yn(!triple));

    a.expect("two-plus-generators",
             bf.holds == (arf && asym),
             bf.witnesses,
             "criterion " + yn(bf.holds) + ", arf " + yn(arf)
                 + ", almost symmetric " + yn(asym));
    a.expect("endomorphism-vs-generators",
             endo.holds == bf.holds,
             endo.witnesses,
             "endomorphism " + yn(endo.holds) + ", generators "
                 + yn(bf.holds));
    a.expect("endomorphism-gorenstein",
             is_symmetric(b) == (asym && maxemb),
             b.generators(),
             "B symmetric " + yn(is_symmetric(b)));

    if (ggl == Tristate::yes) {
      a.expect("extension-multiplicity",
               mainc.holds == arf,
               mainc.witnesses,
               "criterion " + yn(mainc.holds) + ", arf " + yn(arf));
      a.expect("two-plus-ell-multiplicity",
               gg.holds == arf,
               gg.witnesses,
               "criterion " + yn(gg.holds) + ", arf " + yn(arf));
      if (m >= 3) {
        auto const n  = static_cast<std::size_t>(cd.ell);
        bool const ok = is_symmetric(cd.extension) && n < seq.steps.size()
                        && seq.steps[n] == cd.extension;
        a.expect("ggl-structure",
                 ok,
                 {cd.ell, static_cast<value_type>(seq.length())},
                 "S = " + to_string(cd.extension));
      }
    }
    a.expect("small-multiplicity-arf", m > 2 || arf, {m}, "");
    a.expect("conductor-idealization",
             !(idc.applicable && idc.holds) || arf,
             {m},
             "idealization Arf but H is not");

    if (auto bl = b_extension_length(h); bl && ggl == Tristate::yes && !asym) {
      a.expect("extension-length",
               *bl == cd.ell - 1,
               {*bl, cd.ell},
               "B-length versus ell - 1");
    }

    // canonical
    auto const n_whole = RelativeIdeal::of_oversemigroup(h, NumericalSemigroup());
    a.expect("canonical-chain",
             cd.canonical.min() == 0 && whole.is_subset_of(cd.canonical)
                 && cd.canonical.is_subset_of(n_whole)
                 && h.is_subset_of(cd.extension),
             {cd.canonical.min()},
             "H <= K <= N and H <= S");
    if (!h.is_natural_numbers()) {
      auto const extra = ideal_colength(cd.canonical, whole);
      a.expect("canonical-size",
               extra == 2 * h.genus() - h.frobenius() - 1,
               {extra},
               "|K \\ H| versus 2g - F - 1");
    }
    a.expect("almost-symmetric-tests",
             asym == (2 * h.genus() == h.frobenius() + t),
             {h.genus(), h.frobenius(), t},
             "M + K <= H versus 2g = F + t");
    a.expect("ell-symmetric",
             (cd.ell == 0) == sym && (cd.canonical == whole) == sym,
             {cd.ell},
             "");
    a.expect("ell-almost-symmetric",
             (cd.ell == 1) == (asym && !sym),
             {cd.ell},
             "");
    {
      auto const s_ideal = RelativeIdeal::of_oversemigroup(h, cd.extension);
      bool ok = cd.conductor.is_subset_of(whole)
                && ideal_sum(cd.conductor, s_ideal).is_subset_of(whole);
      std::vector<value_type> bad;
      for (value_type x = 0; x < cd.conductor.bound(); ++x) {
        if (cd.conductor.contains(x)) {
          continue;
        }
        bool escapes = false;
        for (value_type s = 0; s <= h.conductor() && !escapes;
             ++s) {
          escapes = cd.extension.contains(s) && !h.contains(x + s);
        }
        if (!escapes) {
          ok = false;
          bad.push_back(x);
        }
      }
      a.expect("conductor", ok, bad, "c + S <= H with c maximal");
    }

    // lipman
    auto const oracle = blowup_oracle(h);
    a.expect("blowup-oracle",
             oracle == h1,
             oracle.generators(),
             "generator formula " + to_string(h1));
    bool const stable = is_stable(maximal);
    a.expect("endomorphism-in-blowup",
             b.is_subset_of(h1) && ((b == h1) == maxemb),
             b.generators(),
             "B versus blowup " + to_string(h1));
    a.expect("stable-maximal-ideal",
             stable == maxemb,
             {h.embedding_dimension(), m},
             "stable " + yn(stable));
    if (maxemb) {
      std::vector<value_type> bad;
      for (value_type x = 0; x <= h.conductor() + m; ++x) {
        if (h1.contains(x) != h.contains(x + m)) {
          bad.push_back(x);
        }
      }
      a.expect("blowup-shift", bad.empty(), bad, "x in H1 iff x + m in H");
    }
    {
      bool ok = seq.steps.back().is_natural_numbers()
                && static_cast<value_type>(seq.length()) <= h.genus();
      for (std::size_t i = 0; i + 1 < seq.steps.size(); ++i) {
        ok = ok && seq.steps[i + 1].genus() < seq.steps[i].genus()
             && seq.steps[i + 1].multiplicity() <= seq.steps[i].multiplicity()
             && seq.steps[i].is_subset_of(seq.steps[i + 1]);
      }
      a.expect("lipman-monotone", ok, seq.multiplicities(), "");
    }

    // semigroup
    a.expect("semigroup-bounds",
             h.embedding_dimension() <= m
                 && h.frobenius() + 1 <= 2 * h.genus(),
             {h.embedding_dimension(), m, h.frobenius(), h.genus()},
             "");
    {
      auto const              ap = apery_set(h, m);
      std::vector<value_type> bad;
      for (value_type n = 0; n <= h.conductor() + m; ++n) {
        if (h.contains(n) != (n >= ap[static_cast<std::size_t>(n % m)])) {
          bad.push_back(n);
        }
      }
      a.expect("apery-membership", bad.empty(), bad, "");
    }
    {
      std::vector<value_type> bad;
      for (auto const* e : {&whole, &maximal, &cd.canonical}) {
        for (auto const* f : {&whole, &maximal, &cd.canonical}) {
          if (!ideal_sum(ideal_quotient(*e, *f), *f).is_subset_of(*e)) {
            bad.push_back(e->min());
            bad.push_back(f->min());
          }
        }
      }
      a.expect("quotient-then-sum", bad.empty(), bad, "(E - F) + F <= E");
    }

    // closure
    auto const closure = arf_closure(h);
    a.expect("arf-closure",
             h.is_subset_of(closure) && arf_by_pattern(closure)
                 && arf_closure(closure) == closure
                 && ((closure == h) == arf),
             closure.generators(),
             "closure " + to_string(closure));

    return a.take();
  }

}  // namespace arfkit
