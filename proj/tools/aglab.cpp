// aglab: command-line front end for the aglab library.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "aglab/aglab.hpp"

namespace {

  using namespace aglab;

  struct global_options {
    bool json  = false;
    bool quiet = false;
  };

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  cayley_table read_single(std::string const& path) {
    auto tables = parse_stream(read_input(path));
    if (tables.size() != 1) {
      throw std::runtime_error(path + ": expected one table, found "
                               + std::to_string(tables.size()));
    }
    return tables.front();
  }

  std::string tuple_text(witness const& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out += (i == 0 ? "" : ",") + std::to_string(w[i] + 1);
    }
    return out + ")";
  }

  std::string result_text(check_result const& r) {
    return r.holds ? "holds" : "fails at " + tuple_text(*r.counterexample);
  }

  template <class T>
  std::string triple_text(std::optional<std::array<T, 3>> const& w) {
    return w ? tuple_text(witness(w->begin(), w->end())) : "none";
  }

  // check: selected identities on every table of a stream. Exit status 1
  // when any of them fails somewhere.
  int run_check(global_options const& g, std::string const& path,
                std::vector<std::string> const& names) {
    std::vector<identity_id> ids;
    for (auto const& name : names) {
      auto id = identity_from_name(name);
      if (!id) {
        throw std::invalid_argument("unknown identity " + name);
      }
      ids.push_back(*id);
    }
    if (ids.empty()) {
      ids.push_back(identity_id::left_invertive);
    }
    auto tables   = parse_stream(read_input(path));
    bool all_hold = true;
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < tables.size(); ++i) {
      nlohmann::json results = nlohmann::json::array();
      for (auto id : ids) {
        auto r   = check_identity(tables[i], id);
        all_hold = all_hold && r.holds;
        if (g.json) {
          results.push_back(json::check(r));
        } else if (!g.quiet) {
          if (tables.size() > 1) {
            std::cout << "table " << i + 1 << ": ";
          }
          std::cout << info(id).name << ": " << result_text(r) << '\n';
        }
      }
      out.push_back(std::move(results));
    }
    if (g.json) {
      std::cout << (tables.size() == 1 ? out.front() : out).dump(2) << '\n';
    }
    return all_hold ? 0 : 1;
  }

  int run_classify(global_options const& g, std::string const& path) {
    auto tables = parse_stream(read_input(path));
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < tables.size(); ++i) {
      auto r = classify(tables[i]);
      if (g.json) {
        out.push_back(json::classification(r));
        continue;
      }
      if (i != 0) {
        std::cout << "---\n";
      }
      std::cout << "order " << r.table.order() << '\n';
      for (auto const& c : r.results) {
        std::cout << "  " << std::left << std::setw(20) << info(c.identity).name
                  << result_text(c) << '\n';
      }
      std::cout << "idempotents " << format_subset(r.idempotent_elements)
                << '\n'
                << "left identities " << format_subset(r.left_identity_elements)
                << '\n'
                << "AG-groupoid " << (r.is_ag_groupoid ? "yes" : "no") << '\n'
                << "AG-monoid " << (r.is_ag_monoid ? "yes" : "no") << '\n';
    }
    if (g.json) {
      std::cout << (tables.size() == 1 ? out.front() : out).dump(2) << '\n';
    }
    return 0;
  }

  template <class Report>
  int print_extended(global_options const& g, Report const& r,
                     std::string_view label, bool show) {
    if (g.json) {
      auto j = json::extended(r);
      if (show) {
        j["rendered"] = render(r);
      }
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (show) {
      std::cout << render(r);
    }
    if (!g.quiet) {
      std::cout << label << ": " << (r.verdict ? "yes" : "no") << '\n';
    }
    return 0;
  }

  int run_ideals(global_options const& g, std::string const& path,
                 std::optional<int> element_label,
                 std::optional<std::string> const& subset_text) {
    auto const t = read_single(path);
    nlohmann::json out = nlohmann::json::object();
    if (subset_text) {
      auto r = examine_ideal(t, parse_subset(*subset_text, t.order()));
      if (g.json) {
        out["ideal"] = json::ideal(r);
      } else {
        auto pair_text = [](auto const& p) {
          return p ? "(" + std::to_string(p->first + 1) + ","
                         + std::to_string(p->second + 1) + ")"
                   : std::string("none");
        };
        std::cout << "subset " << format_subset(r.subset) << '\n'
                  << "left ideal " << (r.is_left_ideal ? "yes" : "no")
                  << ", violation " << pair_text(r.left_violation) << '\n'
                  << "right ideal " << (r.is_right_ideal ? "yes" : "no")
                  << ", violation " << pair_text(r.right_violation) << '\n'
                  << "ideal " << (r.is_ideal ? "yes" : "no") << '\n';
      }
    }
    std::vector<element> elements;
    if (element_label) {
      if (*element_label < 1 || static_cast<std::size_t>(*element_label) > t.order()) {
        throw std::invalid_argument("element " + std::to_string(*element_label)
                                    + " out of range");
      }
      elements.push_back(static_cast<element>(*element_label - 1));
    } else if (!subset_text) {
      for (element a = 0; a < t.order(); ++a) {
        elements.push_back(a);
      }
    }
    nlohmann::json generated = nlohmann::json::array();
    for (element a : elements) {
      auto gs     = generated_sets(t, a);
      auto left   = minimal_ideal_oracle(t, a, ideal_kind::left);
      auto right  = minimal_ideal_oracle(t, a, ideal_kind::right);
      auto both   = minimal_ideal_oracle(t, a, ideal_kind::two_sided);
      if (g.json) {
        auto j = json::generated(a, gs);
        j["minimalLeftIdeal"]  = json::subset(left);
        j["minimalRightIdeal"] = json::subset(right);
        j["minimalIdeal"]      = json::subset(both);
        generated.push_back(std::move(j));
        continue;
      }
      std::cout << "a=" << a + 1 << "  aS=" << format_subset(gs.aS)
                << "  Sa=" << format_subset(gs.Sa)
                << "  J=" << format_subset(gs.J)
                << "  a(Sa)=" << format_subset(gs.a_Sa)
                << "  R=(aS)a=" << format_subset(gs.R()) << '\n'
                << "     smallest left ideal " << format_subset(left)
                << ", right ideal " << format_subset(right) << ", ideal "
                << format_subset(both) << '\n';
    }
    if (g.json) {
      if (!elements.empty()) {
        out["elements"] = std::move(generated);
      }
      std::cout << out.dump(2) << '\n';
    }
    return 0;
  }

  int run_congruences(global_options const& g, std::string const& path,
                      std::string const& relation,
                      std::optional<std::string> const& semantics_name) {
    auto const t = read_single(path);
    auto print_report = [&](congruence_report const& r) {
      if (g.json) {
        return;
      }
      std::cout << "blocks";
      for (auto const& b : r.relation.blocks()) {
        std::cout << ' ' << format_subset(b);
      }
      std::cout << '\n'
                << "left compatible " << (r.left_compatible ? "yes" : "no")
                << ", witness " << triple_text(r.left_witness) << '\n'
                << "right compatible " << (r.right_compatible ? "yes" : "no")
                << ", witness " << triple_text(r.right_witness) << '\n'
                << "congruence " << (r.is_congruence ? "yes" : "no") << '\n'
                << "idempotent separative "
                << (r.idempotent_separative.value_or(false) ? "yes" : "no")
                << '\n';
    };

    if (relation == "rho") {
      if (semantics_name) {
        throw std::invalid_argument("--eta-semantics applies to eta only");
      }
      auto r = verify_congruence(t, rho(t));
      if (g.json) {
        auto j        = json::congruence(r);
        j["relation"] = "rho";
        std::cout << j.dump(2) << '\n';
      }
      print_report(r);
      return 0;
    }

    auto semantics = eta_semantics::exists_witness;
    if (!semantics_name) {
      if (!g.quiet) {
        std::cerr << "aglab: warning: eta semantics not given, using "
                     "'exists'\n";
      }
    } else if (*semantics_name == "forall") {
      semantics = eta_semantics::forall_witness;
    }
    auto e = eta(t, semantics);
    nlohmann::json j{{"relation", "eta"},
                     {"semantics", semantics == eta_semantics::exists_witness
                                       ? "exists"
                                       : "forall"},
                     {"pairs", json::relation_pairs(e.relation)},
                     {"reflexive", e.equivalence.reflexive},
                     {"symmetric", e.equivalence.symmetric},
                     {"transitive", e.equivalence.transitive}};
    if (!g.json) {
      std::cout << "pairs";
      for (auto [a, b] : e.relation.pairs()) {
        std::cout << " (" << a + 1 << ',' << b + 1 << ')';
      }
      std::cout << '\n'
                << "reflexive " << (e.equivalence.reflexive ? "yes" : "no")
                << ", symmetric " << (e.equivalence.symmetric ? "yes" : "no")
                << ", transitive " << (e.equivalence.transitive ? "yes" : "no")
                << '\n';
    }
    if (e.blocks) {
      auto r = verify_congruence(t, *e.blocks);
      if (g.json) {
        j["congruence"] = json::congruence(r);
      }
      print_report(r);
    } else if (!g.json) {
      std::cout << "not an equivalence; congruence check skipped\n";
    }
    if (g.json) {
      std::cout << j.dump(2) << '\n';
    }
    return 0;
  }

  int run_enumerate(global_options const& g, enumeration_task task,
                    std::string const& class_name,
                    std::optional<std::string> const& emit_path) {
    auto f = class_filter_from_name(class_name);
    if (!f) {
      throw std::invalid_argument("unknown class " + class_name);
    }
    task.filter = *f;
    std::ofstream emit;
    if (emit_path) {
      emit.open(*emit_path, std::ios::trunc);
      if (!emit) {
        throw std::runtime_error("cannot write " + *emit_path);
      }
      task.emit_representatives = true;
    }
    bool first = true;
    auto r     = enumerate(task, [&](cayley_table const& t) {
      if (!first) {
        emit << "---\n";
      }
      first = false;
      emit << format_table(t);
    });
    if (g.json) {
      std::cout << json::enumeration(r).dump(2) << '\n';
    } else {
      std::cout << "order=" << r.order << " class=" << to_string(r.filter)
                << " count=" << r.class_count << " elapsed=" << std::fixed
                << std::setprecision(3) << r.elapsed.count() << '\n';
    }
    return 0;
  }

  int run_verify(global_options const& g, verify_options const& opt) {
    auto r = verify_paper(opt);
    if (g.json) {
      std::cout << json::paper(r).dump(2) << '\n';
      return r.exit_code();
    }
    if (!g.quiet) {
      std::cout << "known errata list version " << r.errata_version << '\n';
      for (auto const& c : r.claims) {
        std::cout << std::left << std::setw(11) << to_string(c.status) << ' '
                  << c.fixture << ' ' << c.key << " (claimed "
                  << (c.claimed ? "true" : "false") << ")";
        if (!c.witness.empty()) {
          std::cout << ": " << c.witness;
        }
        if (c.status == claim_status::discrepant) {
          std::cout << (c.known ? " [known erratum]" : " [NEW]");
        } else if (c.known) {
          std::cout << " [listed erratum no longer reproduces]";
        }
        std::cout << '\n';
      }
      for (auto const& s : r.sweeps) {
        std::cout << "theorems order " << s.order << ": " << s.tables
                  << " tables, " << s.refutation_count << " refutations\n";
        for (auto const& f : s.refutations) {
          std::cout << "  (" << f.label << ") refuted by\n"
                    << format_table(f.table);
        }
      }
      for (auto const& c : r.counts) {
        std::cout << "count order " << c.order << ' ' << to_string(c.filter)
                  << ": " << c.actual << " expected " << c.expected
                  << (c.matches() ? "" : " MISMATCH") << '\n';
      }
    }
    auto fresh = r.new_discrepancies();
    std::cout << (r.passed() ? "PASS" : "FAIL") << ": " << fresh.size()
              << " new discrepancies, " << r.stale_errata().size()
              << " stale errata\n";
    return r.exit_code();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley table tools for AG-groupoids"};
  app.require_subcommand(1);
  global_options g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_flag("--quiet", g.quiet, "Suppress warnings and detail");

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Table file, or - for stdin")->required();
  };

  std::vector<std::string> identities;
  auto* check = app.add_subcommand("check", "Check identities (default: left invertive)");
  add_input(check);
  check->add_option("-i,--identity", identities, "Identity name, repeatable");

  auto* classify_cmd = app.add_subcommand("classify", "Report every catalog identity");
  add_input(classify_cmd);

  bool show_extended = false;
  auto* lc = app.add_subcommand("lc-test", "Extended-table test for left commutativity");
  add_input(lc);
  lc->add_flag("--show-extended", show_extended, "Print the extended table");
  auto* rc = app.add_subcommand("rc-test", "Extended-table test for right commutativity");
  add_input(rc);
  rc->add_flag("--show-extended", show_extended, "Print the extended table");

  std::optional<int>         element_label;
  std::optional<std::string> subset_text;
  auto* ideals = app.add_subcommand("ideals", "Ideals and generated sets");
  add_input(ideals);
  ideals->add_option("--element", element_label, "Element (one-based)");
  ideals->add_option("--subset", subset_text, "Subset such as 1,2,3");

  std::string                relation;
  std::optional<std::string> semantics;
  auto* cong = app.add_subcommand("congruences", "rho and eta relations");
  add_input(cong);
  cong->add_option("--relation", relation, "rho or eta")
      ->required()
      ->check(CLI::IsMember({"rho", "eta"}));
  cong->add_option("--eta-semantics", semantics, "exists or forall")
      ->check(CLI::IsMember({"exists", "forall"}));

  enumeration_task           task;
  std::string                class_name = "ag";
  std::optional<std::string> emit_path;
  std::optional<std::string> checkpoint;
  auto* en = app.add_subcommand("enumerate", "Count AG-groupoids up to isomorphism");
  en->add_option("--order", task.order, "Order, 1 to 6")->required();
  en->add_option("--class", class_name, "ag, lc, rc or bc")
      ->check(CLI::IsMember({"ag", "lc", "rc", "bc"}));
  en->add_flag("--include-associative", task.include_associative,
               "Count associative tables too");
  en->add_option("--emit", emit_path, "Write representatives to FILE");
  en->add_option("--workers", task.worker_count, "Worker threads")
      ->check(CLI::PositiveNumber);
  en->add_option("--checkpoint", checkpoint, "Progress file for resuming");

  verify_options vopt;
  auto* vp = app.add_subcommand("verify-paper",
                                "Re-check fixtures, implications and counts");
  vp->add_option("--theorem-order", vopt.theorem_max_order,
                 "Largest order for the implication sweep")
      ->check(CLI::Range(3, 6));
  vp->add_option("--count-order", vopt.count_max_order,
                 "Largest order for count reproduction")
      ->check(CLI::Range(3, 6));
  vp->add_option("--workers", vopt.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      return run_check(g, input, identities);
    }
    if (*classify_cmd) {
      return run_classify(g, input);
    }
    if (*lc) {
      return print_extended(g, lc_extended_test(read_single(input)), "LC",
                            show_extended);
    }
    if (*rc) {
      return print_extended(g, rc_extended_test(read_single(input)), "RC",
                            show_extended);
    }
    if (*ideals) {
      return run_ideals(g, input, element_label, subset_text);
    }
    if (*cong) {
      return run_congruences(g, input, relation, semantics);
    }
    if (*en) {
      if (checkpoint) {
        task.checkpoint = *checkpoint;
      }
      return run_enumerate(g, task, class_name, emit_path);
    }
    if (*vp) {
      return run_verify(g, vopt);
    }
  } catch (std::exception const& e) {
    std::cerr << "aglab: error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
