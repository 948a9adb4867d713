#include "arfkit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "arfkit/canonical.hpp"
#include "arfkit/classify.hpp"
#include "arfkit/golden.hpp"
#include "arfkit/lipman.hpp"
#include "arfkit/oracle.hpp"
#include "arfkit/serialize.hpp"

namespace arfkit::cli {

  namespace {
    template <typename T>
    std::string join(std::vector<T> const& xs) {
      std::string s;
      for (auto const& x : xs) {
        s += (s.empty() ? "" : " ") + std::to_string(x);
      }
      return s.empty() ? "-" : s;
    }

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    int cmd_info(NumericalSemigroup const& h,
                 CliInvocation const&      inv,
                 std::ostream&             out) {
      if (inv.json) {
        out << to_json(h).dump() << '\n';
        return success;
      }
      out << "semigroup         " << to_string(h, inv.unicode) << '\n'
          << "multiplicity      " << h.multiplicity() << '\n'
          << "embdim            " << h.embedding_dimension() << '\n'
          << "frobenius         " << h.frobenius() << '\n'
          << "conductor         " << h.conductor() << '\n'
          << "genus             " << h.genus() << '\n'
          << "type              " << type(h) << '\n'
          << "pseudo-frobenius  " << join(pseudo_frobenius(h)) << '\n'
          << "gaps              " << join(h.gaps()) << '\n'
          << "apery(m)          " << join(apery_set(h, h.multiplicity()))
          << '\n';
      return success;
    }

    int cmd_classify(NumericalSemigroup const& h,
                     CliInvocation const&      inv,
                     std::ostream&             out) {
      auto const r = classify_report(h);
      if (inv.json) {
        out << to_json(r).dump() << '\n';
        return r.consistent ? success : check_failed;
      }
      auto const& i = r.invariants;
      out << "semigroup         " << to_string(h, inv.unicode) << '\n'
          << "invariants        m=" << i.multiplicity << " embdim=" << i.embdim
          << " F=" << i.frobenius << " genus=" << i.genus
          << " type=" << i.type << " ell=" << i.ell << '\n'
          << "symmetric         " << yes_no(r.flags.symmetric) << '\n'
          << "almost symmetric  " << yes_no(r.flags.almost_symmetric) << '\n'
          << "max embdim        " << yes_no(r.flags.max_embdim) << '\n'
          << "arf               " << yes_no(r.flags.arf) << '\n'
          << "ggl (min mult)    " << to_string(r.flags.ggl) << '\n'
          << "S                 " << to_string(r.canonical.extension, inv.unicode)
          << '\n'
          << "criteria:\n";
      for (auto const& c : r.criteria) {
        out << "  " << c.name << ": "
            << (c.applicable ? (c.holds ? "holds" : "fails") : "n/a")
            << (c.applicable ? "" : (c.holds ? " (raw: holds)" : " (raw: fails)"))
            << " [" << join(c.witnesses) << "]";
        if (!c.notes.empty()) {
          out << " " << c.notes;
        }
        out << '\n';
      }
      for (auto const& v : r.violations) {
        out << "VIOLATION " << v.check << " [" << join(v.witnesses) << "] "
            << v.detail << '\n';
      }
      out << "consistent        " << yes_no(r.consistent) << '\n';
      return r.consistent ? success : check_failed;
    }

    int cmd_lipman(NumericalSemigroup const& h,
                   CliInvocation const&      inv,
                   std::ostream&             out) {
      auto const seq = lipman_sequence(h);
      if (inv.json) {
        out << to_json(seq).dump() << '\n';
        return success;
      }
      for (std::size_t n = 0; n < seq.steps.size(); ++n) {
        auto const& s = seq.steps[n];
        out << "H" << n << "  " << to_string(s, inv.unicode)
            << "  m=" << s.multiplicity()
            << " embdim=" << s.embedding_dimension()
            << " max-embdim=" << yes_no(s.has_max_embedding_dimension())
            << '\n';
      }
      return success;
    }

    int cmd_arf_closure(NumericalSemigroup const& h,
                        CliInvocation const&      inv,
                        std::ostream&             out) {
      auto const c = arf_closure(h);
      if (inv.json) {
        out << to_json(c).dump() << '\n';
      } else {
        out << to_string(c, inv.unicode) << '\n';
      }
      return success;
    }

    int cmd_survey(CliInvocation const& inv,
                   std::ostream&        out,
                   std::ostream&        err) {
      SurveyOptions opts{inv.max_genus, inv.checks, inv.jobs};
      if (char const* cap_text = std::getenv("ARFKIT_MAX_GENUS")) {
        std::string_view sv(cap_text);
        value_type       cap = 0;
        auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), cap);
        if (ec != std::errc() || p != sv.data() + sv.size() || cap < 0) {
          err << "error: ARFKIT_MAX_GENUS must be a nonnegative integer\n";
          return invalid_input;
        }
        if (opts.max_genus > cap) {
          err << "warning: max genus " << opts.max_genus
              << " capped to ARFKIT_MAX_GENUS = " << cap << '\n';
          opts.max_genus = cap;
        }
      }
      std::ofstream file;
      std::ostream* sink = &out;
      if (!inv.out.empty()) {
        file.open(inv.out);
        if (!file) {
          err << "error: cannot open '" << inv.out << "' for writing\n";
          return invalid_input;
        }
        sink = &file;
      }
      auto summary = survey(opts, [sink](SurveyRecord const& r) {
        *sink << to_json(r).dump() << '\n';
      });
      sink->flush();
      if (!*sink) {
        err << "error: write to survey output failed\n";
        return invalid_input;
      }
      print_summary(err, summary);
      return summary.total_violations() == 0 ? success : check_failed;
    }

    int cmd_verify(std::ostream& out) {
      auto const results = run_golden_examples();
      std::size_t passed = 0;
      for (auto const& r : results) {
        out << (r.passed() ? "PASS  " : "FAIL  ") << r.name << '\n';
        for (auto const& f : r.failures) {
          out << "        failed: " << f << '\n';
        }
        passed += r.passed();
      }
      out << passed << "/" << results.size() << " PASS\n";
      return passed == results.size() ? success : check_failed;
    }
  }  // namespace

  int run(CliInvocation const& inv, std::ostream& out, std::ostream& err) {
    try {
      if (inv.command == "survey") {
        if (inv.max_genus < 0) {
          err << "error: --max-genus must be nonnegative\n";
          return invalid_input;
        }
        return cmd_survey(inv, out, err);
      }
      if (inv.command == "verify-paper") {
        return cmd_verify(out);
      }
      using Handler = int (*)(NumericalSemigroup const&,
                              CliInvocation const&,
                              std::ostream&);
      Handler handler = nullptr;
      if (inv.command == "info") {
        handler = cmd_info;
      } else if (inv.command == "classify") {
        handler = cmd_classify;
      } else if (inv.command == "lipman") {
        handler = cmd_lipman;
      } else if (inv.command == "arf-closure") {
        handler = cmd_arf_closure;
      } else {
        err << "error: unknown command '" << inv.command << "'\n";
        return invalid_input;
      }
      if (inv.gens.empty()) {
        err << "error: " << inv.command << " needs a generator list\n";
        return invalid_input;
      }
      return handler(NumericalSemigroup::from_generators(inv.gens), inv, out);
    } catch (InvalidInput const& e) {
      err << "error: " << e.what() << '\n';
      return invalid_input;
    } catch (InvalidSemigroup const& e) {
      err << "error: " << e.what() << '\n';
      return invalid_input;
    }
  }

  int main(std::vector<std::string> const& args,
           std::ostream&                   out,
           std::ostream&                   err) {
    CLI::App app{"Exact classification of numerical semigroups: Arf, almost "
                 "symmetric, generalized Gorenstein"};
    app.name("arfkit");
    app.require_subcommand(1);

    CliInvocation inv;
    std::string   gens_text;

    auto per_semigroup = [&](std::string const& name,
                             std::string const& help) {
      auto* sub = app.add_subcommand(name, help);
      sub->add_option("gens", gens_text, "generators, e.g. 4,7,9,10 or <4,7,9,10>")
          ->required();
      sub->add_flag("--json", inv.json, "JSON output");
      sub->add_flag("--unicode", inv.unicode, "angle brackets in text output");
      return sub;
    };
    per_semigroup("info", "basic invariants");
    per_semigroup("classify", "full classification report with audit");
    per_semigroup("lipman", "blowup chain down to N");
    per_semigroup("arf-closure", "smallest Arf oversemigroup");

    auto* sv = app.add_subcommand("survey",
                                  "classify and audit every semigroup up to a "
                                  "genus; JSON lines out, summary on stderr");
    sv->add_option("--max-genus", inv.max_genus, "largest genus")->required();
    sv->add_option("--out", inv.out, "JSON-lines output file");
    sv->add_option("--jobs", inv.jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    sv->add_option("--check", inv.checks, "restrict to these audit checks");
    app.add_subcommand("verify-paper", "run the worked-example suites");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) {
      rev.pop_back();  // program name
    }
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return invalid_input;
    }
    inv.command = app.get_subcommands().front()->get_name();
    if (!gens_text.empty()) {
      try {
        inv.gens = parse_generators(gens_text);
      } catch (InvalidInput const& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
      }
    }
    return run(inv, out, err);
  }

}  // namespace arfkit::cli
