#include "magnus/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "magnus/engine.hpp"
#include "magnus/free_product.hpp"
#include "magnus/heg.hpp"
#include "magnus/purity.hpp"
#include "magnus/serialize.hpp"

namespace magnus::cli {

  namespace {

    std::string join_symbols(auto const& range, char const* sep = ", ") {
      std::string out;
      for (auto s : range) {
        out += (out.empty() ? "" : sep) + s.name();
      }
      return out;
    }

    void render(DecompositionTrace const& t, int depth, std::ostream& os) {
      std::string pad(static_cast<std::size_t>(2 * depth), ' ');
      os << pad << t.case_name() << " " << to_string(t.group) << "\n";
      std::visit(
          [&](auto const& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BaseSingleGenerator>) {
              os << pad << "  <" << s.generator.name() << " | "
                 << s.generator.name() << "^" << s.power << "> free factor\n";
            } else if constexpr (std::is_same_v<T, FreeSplit>) {
              os << pad << "  free part {" << join_symbols(s.free_part);
              for (auto f : s.free_families) {
                os << (s.free_part.empty() ? "" : ", ") << f.name() << "_*";
              }
              os << "}\n";
            } else if constexpr (std::is_same_v<T, Balanced>) {
              auto const& h = s.hnn;
              os << pad << "  stable " << h.stable.name() << ", b "
                 << h.distinguished.name() << ", mu " << h.mu << ", M "
                 << h.M << "\n"
                 << pad << "  s = " << to_string(h.relator()) << ", K = <"
                 << join_symbols(h.assoc_K()) << ">, L = <"
                 << join_symbols(h.assoc_L()) << ">\n";
            } else if constexpr (std::is_same_v<T, UnbalancedEmbed>) {
              auto const& e = s.embedding;
              os << pad << "  t " << e.t.name() << ", b " << e.b.name()
                 << ", alpha " << e.alpha << ", beta " << e.beta << ", psi: "
                 << e.t.name() << " -> " << to_string(e.psi.at(e.t)) << ", "
                 << e.b.name() << " -> " << to_string(e.psi.at(e.b)) << "\n";
            }
          },
          t.step);
      if (t.child) {
        render(*t.child, depth + 1, os);
      }
    }

    std::string purity_text(PurityReport const& r) {
      std::ostringstream os;
      os << to_string(r.mode) << ": " << to_string(r.presentation)
         << ", H = <" << join_symbols(r.subgroup) << ">, exponent "
         << r.exponent() << ", words up to length " << r.max_length << "\n";
      os << "tested " << r.tested << ", with g^" << r.exponent() << " in H: "
         << r.members << "\n";
      if (r.mode == SuiteMode::counterexample_search) {
        os << "counterexamples: " << r.counterexamples.size() << "\n";
        for (auto const& g : r.counterexamples) {
          os << "  " << to_string(g) << "\n";
        }
      } else {
        os << "violations: " << r.violations.size() << "\n";
        for (auto const& v : r.violations) {
          os << "  " << to_string(v.g) << "  (power = "
             << to_string(v.power_rewrite) << " in H)\n";
        }
      }
      if (r.mode == SuiteMode::newman_probe) {
        os << "witnesses verified: " << r.witnesses_verified << "\n";
      }
      os << "inconclusive: " << r.inconclusive.size();
      return os.str();
    }

    std::string heg_blocks_text(std::vector<HegBlock> const& blocks) {
      std::ostringstream os;
      for (auto const& b : blocks) {
        if (b.low) {
          os << "low  " << to_string(b.low_word) << "\n";
        } else {
          os << "high " << to_string(b.high) << "\n";
        }
      }
      auto s = os.str();
      if (!s.empty()) {
        s.pop_back();
      }
      return s;
    }

    struct Globals {
      std::size_t   max_depth   = Budget{}.max_depth;
      std::uint64_t max_steps   = Budget{}.max_steps;
      std::size_t   max_wordlen = Budget{}.max_word_length;

      Budget budget() const {
        return {max_depth, max_wordlen, max_steps};
      }
    };

  }  // namespace

  CommandOutcome run(std::vector<std::string> const& args) {
    CLI::App app{"Magnus-method tools for one-relator groups", "magnus"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--max-depth", g.max_depth, "Recursion depth budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-steps", g.max_steps, "Step budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-wordlen", g.max_wordlen,
                   "Intermediate word length budget")
        ->check(CLI::PositiveNumber);

    std::string pres, word, subgroup, term, term2;
    bool        json = false, no_tietze = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check and normalise a presentation");
    validate_cmd->add_option("presentation", pres)->required();

    auto* torsion_cmd = app.add_subcommand("torsion", "Report whether the group has torsion");
    torsion_cmd->add_option("presentation", pres)->required();

    auto* wp_cmd = app.add_subcommand("wp", "Decide whether a word is trivial");
    wp_cmd->add_option("presentation", pres)->required();
    wp_cmd->add_option("word", word)->required();
    wp_cmd->add_flag("--no-tietze", no_tietze,
                     "Disable the single-occurrence shortcut");

    auto* member_cmd = app.add_subcommand("member", "Magnus subgroup membership");
    member_cmd->add_option("presentation", pres)->required();
    member_cmd->add_option("word", word)->required();
    member_cmd->add_option("--subgroup", subgroup, "Comma-separated generators")
        ->required();
    member_cmd->add_flag("--no-tietze", no_tietze,
                         "Disable the single-occurrence shortcut");

    auto* decompose_cmd = app.add_subcommand("decompose", "Show the Magnus decomposition");
    decompose_cmd->add_option("presentation", pres)->required();
    decompose_cmd->add_flag("--json", json, "Emit the structured trace");

    std::int64_t prime = 0, height = 1;
    std::size_t  maxlen = 0, sample = 0;
    std::uint64_t seed = 1;
    bool below = false, serial = false;
    std::string output;
    auto* purity_cmd = app.add_subcommand("purity", "Exhaustive g^p in H => g in H check");
    purity_cmd->add_option("presentation", pres)->required();
    purity_cmd->add_option("--subgroup", subgroup)->required();
    purity_cmd->add_option("--prime", prime)->required();
    purity_cmd->add_option("--maxlen", maxlen)->required();
    purity_cmd->add_option("--height", height, "Probe g^(p^height) (Newman)");
    purity_cmd->add_flag("--below-bound", below,
                         "Search for counterexamples with any prime");
    purity_cmd->add_flag("--serial", serial, "Use the serial reference path");
    purity_cmd->add_option("--sample", sample, "Evaluate a random sample");
    purity_cmd->add_option("--seed", seed, "Seed for --sample");
    purity_cmd->add_flag("--json", json);
    purity_cmd->add_option("--output", output, "Also write the JSON report here");

    std::vector<std::string> factors;
    std::size_t              target = 0;
    std::int64_t             exponent = 2;
    auto* fp_cmd = app.add_subcommand("fp", "Free products of one-relator factors");
    fp_cmd->require_subcommand(1);
    auto* fp_nf = fp_cmd->add_subcommand("nf", "Alternating normal form");
    fp_nf->add_option("--factor", factors, "Factor presentation, repeatable")
        ->required();
    fp_nf->add_option("word", word)->required();
    auto* fp_power = fp_cmd->add_subcommand("power", "Classify g with g^n in a factor");
    fp_power->add_option("--factor", factors)->required();
    fp_power->add_option("--target", target, "Index of the factor holding g^n")
        ->required();
    fp_power->add_option("--exponent", exponent)->required();
    fp_power->add_option("word", word)->required();

    std::int64_t level = 1, cap = HegWord::default_cap;
    auto* heg_cmd = app.add_subcommand("heg", "Hawaiian earring words");
    heg_cmd->require_subcommand(1);
    heg_cmd->add_option("--cap", cap, "Certified coherence cap");
    auto add_level = [&](CLI::App* c) {
      c->add_option("--level", level)->required()->check(CLI::PositiveNumber);
    };
    auto* heg_project = heg_cmd->add_subcommand("project", "p_N");
    heg_project->add_option("term", term)->required();
    add_level(heg_project);
    auto* heg_coproject = heg_cmd->add_subcommand("coproject", "p^N");
    heg_coproject->add_option("term", term)->required();
    add_level(heg_coproject);
    auto* heg_eq = heg_cmd->add_subcommand("eq", "Equality up to a level");
    heg_eq->add_option("first", term)->required();
    heg_eq->add_option("second", term2)->required();
    add_level(heg_eq);
    auto* heg_split = heg_cmd->add_subcommand("split", "Low/high block split");
    heg_split->add_option("term", term)->required();
    add_level(heg_split);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::Error const& e) {
      std::ostringstream out, err;
      int                code = app.exit(e, out, err);
      return {code == 0 ? answered : input_error, out.str() + err.str(), {}};
    }

    EngineOptions options{!no_tietze};
    try {
      Budget limits = g.budget();
      if (validate_cmd->parsed()) {
        auto checked = validate(parse_presentation(pres));
        std::string text = "valid: " + to_string(checked.presentation);
        if (!checked.conjugator.empty()) {
          text += "\nrelator conjugated by " + to_string(checked.conjugator);
        }
        return {answered, text, {}};
      }
      if (torsion_cmd->parsed()) {
        auto p = validate(parse_presentation(pres)).presentation;
        auto r = is_torsion_free(p);
        if (r.torsion_free) {
          return {answered, "torsion-free", {}};
        }
        return {answered,
                "torsion: root=(" + to_string(r.root)
                    + "), power=" + std::to_string(r.power),
                {}};
      }
      if (wp_cmd->parsed()) {
        auto p = parse_presentation(pres);
        bool trivial = is_identity(p, parse_word(word), limits, options);
        return {trivial ? answered : negative,
                trivial ? "trivial" : "nontrivial", {}};
      }
      if (member_cmd->parsed()) {
        auto p = parse_presentation(pres);
        auto m = magnus_member(p, parse_symbol_set(subgroup), parse_word(word),
                               limits, options);
        if (m) {
          return {answered, "member: " + to_string(*m), {}};
        }
        return {negative, "not a member", {}};
      }
      if (decompose_cmd->parsed()) {
        auto trace = decompose(parse_presentation(pres), limits);
        if (json) {
          auto doc = decomposition_document(*trace);
          return {answered, doc.dump(2), doc};
        }
        std::ostringstream os;
        render(*trace, 0, os);
        os << "descent:";
        for (auto const& e : descent_edges(*trace)) {
          os << " " << e.label << " " << e.parent_length << "->"
             << e.child_length;
        }
        return {answered, os.str(), {}};
      }
      if (purity_cmd->parsed()) {
        auto         p = parse_presentation(pres);
        auto         Y = parse_symbol_set(subgroup);
        SuiteOptions so;
        so.budget    = limits;
        so.execution = serial ? Execution::serial : Execution::parallel;
        so.seed      = seed;
        if (sample > 0) {
          so.sample = sample;
        }
        PurityReport r
            = below ? counterexample_search(p, Y, prime, maxlen, so)
              : height > 1 ? newman_probe(p, Y, prime, height, maxlen, so)
                           : theorem_a_suite(p, Y, prime, maxlen, so);
        auto doc = report_to_json(r);
        if (!output.empty()) {
          std::ofstream f(output);
          if (!f) {
            return {input_error, "error: cannot write " + output, {}};
          }
          f << doc.dump(2) << "\n";
        }
        int code = r.violations.empty() ? answered : negative;
        return {code, json ? doc.dump(2) : purity_text(r), doc};
      }
      if (fp_cmd->parsed()) {
        std::vector<Factor> fs;
        for (auto const& f : factors) {
          fs.emplace_back(parse_presentation(f));
        }
        FreeProduct fp(std::move(fs));
        auto        nf = fp_normal_form(fp, parse_word(word), limits);
        if (fp_nf->parsed()) {
          std::string text = to_string(nf);
          for (auto const& s : nf) {
            text += "\n  factor " + std::to_string(s.factor) + ": "
                    + to_string(s.element);
          }
          return {answered, text, {}};
        }
        auto c = power_in_factor(fp, nf, exponent, target, limits);
        if (auto const* in = std::get_if<InFactor>(&c)) {
          return {answered, "in factor: " + to_string(in->rewrite), {}};
        }
        if (auto const* ct = std::get_if<ConjugateTorsion>(&c)) {
          return {answered,
                  "conjugate torsion: conjugator=" + to_string(ct->conjugator)
                      + ", torsion=" + to_string(ct->torsion.element)
                      + " in factor " + std::to_string(ct->torsion.factor),
                  {}};
        }
        return {negative,
                "contradiction: " + std::get<Contradiction>(c).reason, {}};
      }
      if (heg_cmd->parsed()) {
        auto w = parse_heg(term, cap);
        if (heg_project->parsed()) {
          return {answered, to_string(project(w, level)), {}};
        }
        if (heg_coproject->parsed()) {
          return {answered, to_string(coproject(w, level)), {}};
        }
        if (heg_split->parsed()) {
          return {answered, heg_blocks_text(split_blocks(w, level)), {}};
        }
        auto w2 = parse_heg(term2, cap);
        for (std::int64_t k = 1; k <= level; ++k) {
          if (!eq_up_to(w, w2, k)) {
            return {negative, "differ at level " + std::to_string(k), {}};
          }
        }
        return {answered, "equal up to level " + std::to_string(level), {}};
      }
    } catch (BudgetExceeded const& e) {
      return {ExitCode::budget, std::string("budget exceeded: ") + e.what(), {}};
    } catch (std::exception const& e) {
      return {input_error, std::string("error: ") + e.what(), {}};
    }
    return {input_error, app.help(), {}};
  }

}  // namespace magnus::cli
