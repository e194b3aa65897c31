// glab: command-line front end. One subcommand per invocation; --json switches
// the output to machine-readable certificates. Exit codes: 0 success,
// 1 negative verdict, 2 usage error, 3 resource limit.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "glab/encodings.hpp"
#include "glab/gl.hpp"
#include "glab/goedel.hpp"
#include "glab/hilbert.hpp"
#include "glab/klab.hpp"
#include "glab/syntax.hpp"

namespace {

using nlohmann::json;

std::string to_hex(const glab::syntax::BigInt& n) {
  std::ostringstream os;
  os << std::hex << n;
  return "0x" + os.str();
}

void print_trace(std::ostream& os, const glab::gl::DerivPtr& d, int depth) {
  static const char* names[] = {"axiom", "bottom-left", "imp-left", "imp-right",
                                "box-step"};
  os << std::string(2 * depth, ' ');
  std::string l, r;
  for (const auto& f : d->left) l += (l.empty() ? "" : ", ") + glab::gl::print(f);
  for (const auto& f : d->right) r += (r.empty() ? "" : ", ") + glab::gl::print(f);
  os << l << " => " << r << "   [" << names[static_cast<int>(d->rule)] << "]\n";
  for (const auto& p : d->premises) print_trace(os, p, depth + 1);
}

void print_model(std::ostream& os, const glab::gl::KripkeModel& m) {
  os << "countermodel: " << m.worlds << " worlds, root " << m.root << "\n";
  os << "  edges:";
  for (auto [a, b] : m.edges) os << " " << a << "->" << b;
  os << "\n";
  for (const auto& [atom, ws] : m.valuation) {
    os << "  " << atom << " true at:";
    for (int w : ws) os << " " << w;
    os << "\n";
  }
}

// Shared rendering for every subcommand that yields a gl::Verdict.
int report_verdict(const glab::gl::Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << glab::gl::verdict_to_json(v).dump(2) << "\n";
  } else if (v.is_theorem) {
    std::cout << "theorem\n";
    print_trace(std::cout, v.trace, 0);
  } else {
    std::cout << "non-theorem\n";
    if (v.counter) print_model(std::cout, *v.counter);
  }
  return v.is_theorem ? 0 : 1;
}

std::vector<glab::syntax::FormulaPtr> load_axioms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--axioms", "cannot open " + path);
  std::vector<glab::syntax::FormulaPtr> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    out.push_back(glab::syntax::parse(line));
  }
  return out;
}

json proof_report(const glab::hilbert::HilbertProof& p) {
  json j;
  j["lines"] = glab::hilbert::proof_to_json(p);
  j["size_bytes"] = glab::hilbert::serialize(p).size();
  return j;
}

void print_proof(std::ostream& os, const glab::hilbert::HilbertProof& p) {
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& ln = p.lines[i];
    os << "  " << (i + 1) << ". " << glab::syntax::print(ln.formula) << "   [";
    std::visit(
        [&](const auto& j) {
          using T = std::decay_t<decltype(j)>;
          if constexpr (std::is_same_v<T, glab::hilbert::PropAxiom>)
            os << "axiom schema " << j.schema;
          else if constexpr (std::is_same_v<T, glab::hilbert::Given>)
            os << "given " << j.index;
          else if constexpr (std::is_same_v<T, glab::hilbert::Sigma1Witness>)
            os << "sigma1 witness \"" << j.program.bits << "\"";
          else
            os << "mp " << (j.implication + 1) << "," << (j.antecedent + 1);
        },
        ln.just);
    os << "]\n";
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Goedel/GL laboratory: provability-logic decisions, "
               "diagonalization, and exact Kolmogorov complexity"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  std::string formula_text, mode_name = "gl", variant_name = "plain";
  std::string query_name = "self-refuting", axioms_path, value_text;
  int days = 2, atoms = 2, L = 2, count = 1;
  bool negative_control = false, sigma1 = false;
  std::uint64_t budget = 10'000'000;
  glab::hilbert::TheoryConfig theory;

  auto* parse_cmd = app.add_subcommand("parse", "parse an arithmetic formula and reprint it canonically");
  parse_cmd->add_option("--formula", formula_text)->required();

  auto* encode_cmd = app.add_subcommand("encode", "Goedel number of an arithmetic formula");
  encode_cmd->add_option("--formula", formula_text)->required();

  auto* decode_cmd = app.add_subcommand("decode", "formula of a Goedel number (decimal or 0x hex)");
  decode_cmd->add_option("--value", value_text)->required();

  auto* diag_cmd = app.add_subcommand("diagonalize", "build the n-day template and its diagonal sentence");
  diag_cmd->add_option("--days", days)->required()->check(CLI::PositiveNumber);
  diag_cmd->add_option("--variant", variant_name)->check(CLI::IsMember({"plain", "exclusive"}));

  auto* prove_cmd = app.add_subcommand("prove-gl", "decide a modal formula");
  prove_cmd->add_option("--formula", formula_text)->required();
  prove_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"gl", "k4"}));
  prove_cmd->add_option("--budget", budget);

  auto* paradox_cmd = app.add_subcommand("paradox", "surprise-exam verdicts");
  paradox_cmd->add_option("--days", days)->required()->check(CLI::PositiveNumber);
  paradox_cmd->add_option("--variant", variant_name)->check(CLI::IsMember({"plain", "exclusive"}));
  paradox_cmd->add_option("--query", query_name)->check(CLI::IsMember({"self-refuting", "con-conditional"}));
  paradox_cmd->add_option("--budget", budget);

  auto* incom_cmd = app.add_subcommand("incompleteness", "second-incompleteness schema verdict");
  incom_cmd->add_option("--atoms", atoms)->required()->check(CLI::PositiveNumber);
  incom_cmd->add_flag("--negative-control", negative_control,
                      "check that the schema does not prove []ff");
  incom_cmd->add_option("--budget", budget);

  auto* census_cmd = app.add_subcommand("census", "incompressibility census m(L)");
  census_cmd->add_option("--L", L)->required()->check(CLI::NonNegativeNumber);

  auto* ktable_cmd = app.add_subcommand("ktable", "table of K(x) for x in [0, 2^{L+1}]");
  ktable_cmd->add_option("--L", L)->required()->check(CLI::NonNegativeNumber);

  auto add_theory_flags = [&](CLI::App* c) {
    c->add_option("--axioms", axioms_path, "file with one formula per line");
    c->add_flag("--sigma1", sigma1, "enable the sigma1 witness rule");
    c->add_option("--budget", budget, "max proof candidates inspected");
    c->add_option("--max-lines", theory.max_lines);
    c->add_option("--max-formula-bytes", theory.max_formula_bytes);
  };
  auto* chaitin_cmd = app.add_subcommand("chaitin-extract", "hunt for a provable incompressibility claim");
  chaitin_cmd->add_option("--L", L)->required()->check(CLI::NonNegativeNumber);
  add_theory_flags(chaitin_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate-proofs", "list checker-valid proofs in canonical order");
  enum_cmd->add_option("--count", count, "number of proofs to print")->check(CLI::PositiveNumber);
  add_theory_flags(enum_cmd);

  for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->add_flag("--json", as_json, "emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    auto variant = variant_name == "plain" ? glab::goedel::Variant::Plain
                                           : glab::goedel::Variant::Exclusive;
    glab::gl::DecideOptions opts;
    opts.mode = mode_name == "gl" ? glab::gl::Mode::GL : glab::gl::Mode::K4;
    opts.node_budget = budget;

    if (*parse_cmd) {
      auto f = glab::syntax::parse(formula_text);
      if (as_json)
        std::cout << json{{"formula", glab::syntax::print(f)}}.dump(2) << "\n";
      else
        std::cout << glab::syntax::print(f) << "\n";
      return 0;
    }
    if (*encode_cmd) {
      auto f = glab::syntax::parse(formula_text);
      auto g = glab::goedel::encode(f);
      if (as_json)
        std::cout << json{{"formula", glab::syntax::print(f)},
                          {"decimal", g.value.str()},
                          {"hex", to_hex(g.value)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << g.value << "  (" << to_hex(g.value) << ")\n";
      return 0;
    }
    if (*decode_cmd) {
      glab::syntax::BigInt v(value_text);
      auto f = glab::goedel::decode({v});
      if (as_json)
        std::cout << json{{"formula", glab::syntax::print(f)}}.dump(2) << "\n";
      else
        std::cout << glab::syntax::print(f) << "\n";
      return 0;
    }
    if (*diag_cmd) {
      auto tmpl = glab::goedel::build_template(days, variant);
      auto d = glab::goedel::diagonalize(tmpl);
      bool fixed_point = d.s == glab::goedel::sub_meta(d.q, d.q.value);
      if (!fixed_point) throw std::logic_error("diagonalize: s != Sub(q, q)");
      if (as_json)
        std::cout << json{{"days", days},
                          {"variant", variant_name},
                          {"q", d.q.value.str()},
                          {"s", d.s.value.str()},
                          {"fixed_point", true}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "q = " << d.q.value << "\ns = " << d.s.value
                  << "\ns = Sub(q, q): verified\n";
      return 0;
    }
    if (*prove_cmd)
      return report_verdict(glab::gl::decide(glab::gl::parse(formula_text), opts), as_json);
    if (*paradox_cmd) {
      auto p = glab::encodings::build_paradox(days, variant);
      auto q = query_name == "self-refuting"
                   ? glab::encodings::ParadoxQuery::SelfRefuting
                   : glab::encodings::ParadoxQuery::ConConditionalLastDay;
      return report_verdict(glab::encodings::paradox_verdict(p, q, opts), as_json);
    }
    if (*incom_cmd) {
      auto s = glab::encodings::build_schema(atoms);
      auto v = negative_control
                   ? glab::encodings::schema_consistency_check(s, opts)
                   : glab::encodings::second_incompleteness_verdict(s, opts);
      return report_verdict(v, as_json);
    }
    if (*census_cmd || *ktable_cmd) {
      auto r = glab::klab::census(L);
      if (as_json)
        std::cout << glab::klab::census_to_json(r).dump(2) << "\n";
      else if (*ktable_cmd)
        std::cout << glab::klab::census_to_table(r);
      else
        std::cout << "L = " << r.L << "  m = " << r.m
                  << "  programs = " << r.program_count << "\n";
      return 0;
    }

    // Proof-system subcommands.
    if (!axioms_path.empty()) theory.given_axioms = load_axioms(axioms_path);
    theory.sigma1_rule_enabled = sigma1;
    if (*chaitin_cmd) {
      auto hit = glab::hilbert::chaitin_extract(theory, L, budget);
      if (as_json) {
        json j{{"L", L}, {"found", hit.has_value()}};
        if (hit) {
          j["x"] = hit->first.str();
          j["proof"] = proof_report(hit->second);
        }
        std::cout << j.dump(2) << "\n";
      } else if (hit) {
        std::cout << "extracted x = " << hit->first << " from:\n";
        print_proof(std::cout, hit->second);
      } else {
        std::cout << "no incompressibility claim provable within the budget\n";
      }
      return hit ? 0 : 1;
    }
    if (*enum_cmd) {
      int printed = 0;
      json all = json::array();
      glab::hilbert::enumerate(theory, budget, [&](const glab::hilbert::HilbertProof& p) {
        if (as_json) {
          all.push_back(proof_report(p));
        } else {
          std::cout << "proof " << (printed + 1) << " ("
                    << glab::hilbert::serialize(p).size() << " bytes):\n";
          print_proof(std::cout, p);
        }
        return ++printed < count;
      });
      if (as_json) std::cout << all.dump(2) << "\n";
      return printed > 0 ? 0 : 1;
    }
  } catch (const glab::gl::BudgetError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const glab::syntax::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int main(int argc, char** argv) { return run_cli(argc, argv); }
