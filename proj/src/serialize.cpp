#include "magnus/serialize.hpp"

namespace magnus {

  namespace {

    using nlohmann::json;

    json symbols(auto const& range) {
      json out = json::array();
      for (auto s : range) {
        out.push_back(s.name());
      }
      return out;
    }

    json words(std::vector<Word> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(to_string(w));
      }
      return out;
    }

    json presentation(OneRelatorPresentation const& p) {
      return {{"text", to_string(p)},
              {"generators", symbols(p.generators)},
              {"families", symbols(p.families)},
              {"relator", to_string(p.relator)},
              {"relator_length", p.relator.size()}};
    }

  }  // namespace

  json trace_to_json(DecompositionTrace const& trace) {
    json node = {{"case", trace.case_name()},
                 {"group", presentation(trace.group)}};
    std::visit(
        [&](auto const& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, BaseSingleGenerator>) {
            node["generator"] = s.generator.name();
            node["power"]     = s.power;
          } else if constexpr (std::is_same_v<T, FreeSplit>) {
            node["free_part"]     = symbols(s.free_part);
            node["free_families"] = symbols(s.free_families);
          } else if constexpr (std::is_same_v<T, Balanced>) {
            auto const& h     = s.hnn;
            node["stable"]    = h.stable.name();
            node["b"]         = h.distinguished.name();
            node["mu"]        = h.mu;
            node["M"]         = h.M;
            node["base_relator"] = to_string(h.relator());
            node["K"]         = symbols(h.assoc_K());
            node["L"]         = symbols(h.assoc_L());
            node["families"]  = symbols(h.families);
          } else if constexpr (std::is_same_v<T, UnbalancedEmbed>) {
            auto const& e = s.embedding;
            json        psi = json::object();
            for (auto const& [k, v] : e.psi) {
              psi[k.name()] = to_string(v);
            }
            node["t"]       = e.t.name();
            node["b"]       = e.b.name();
            node["x"]       = e.x.name();
            node["y"]       = e.y.name();
            node["alpha"]   = e.alpha;
            node["beta"]    = e.beta;
            node["psi"]     = psi;
            node["relator"] = to_string(e.target.relator);
          }
        },
        trace.step);
    if (trace.child) {
      node["child"] = trace_to_json(*trace.child);
    }
    return node;
  }

  json decomposition_document(DecompositionTrace const& trace) {
    json edges = json::array();
    for (auto const& e : descent_edges(trace)) {
      edges.push_back({{"label", e.label},
                       {"parent_length", e.parent_length},
                       {"child_length", e.child_length}});
    }
    return {{"kind", "decomposition"},
            {"trace", trace_to_json(trace)},
            {"descent", edges}};
  }

  json report_to_json(PurityReport const& r) {
    json violations = json::array();
    for (auto const& v : r.violations) {
      violations.push_back(
          {{"g", to_string(v.g)}, {"power_rewrite", to_string(v.power_rewrite)}});
    }
    json inconclusive = json::array();
    for (auto const& i : r.inconclusive) {
      inconclusive.push_back({{"g", to_string(i.g)}, {"reason", i.reason}});
    }
    return {{"kind", "purity_report"},
            {"mode", to_string(r.mode)},
            {"presentation", presentation(r.presentation)},
            {"subgroup", symbols(r.subgroup)},
            {"prime", r.prime},
            {"height", r.height},
            {"max_length", r.max_length},
            {"totals",
             {{"tested", r.tested},
              {"members", r.members},
              {"witnesses_verified", r.witnesses_verified},
              {"violations", r.violations.size()},
              {"counterexamples", r.counterexamples.size()},
              {"inconclusive", r.inconclusive.size()}}},
            {"violations", violations},
            {"counterexamples", words(r.counterexamples)},
            {"inconclusive", inconclusive}};
  }

  json report_to_json(AlphaReport const& r) {
    return {{"kind", "alpha_report"},
            {"alpha", r.alpha},
            {"prime", r.prime},
            {"max_length", r.max_length},
            {"totals",
             {{"tested", r.tested},
              {"members", r.members},
              {"counterexamples", r.counterexamples.size()}}},
            {"counterexamples", words(r.counterexamples)}};
  }

}  // namespace magnus
