// Decision procedure for the provability logic GL: backward sequent search
// with the GL box rule and memoization, proof traces, countermodels over
// finite transitive irreflexive frames, a model checker, and a small-frame
// enumeration oracle.

#ifndef GLAB_GL_HPP
#define GLAB_GL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace glab::gl {

// ---------------------------------------------------------------------------
// Modal formulas. Core connectives are Atom, Bottom, Implies, Box; everything
// else normalizes to the core at construction time.

enum class MKind { Atom, Bottom, Implies, Box };

struct MNode;
using MF = std::shared_ptr<const MNode>;

struct MNode {
  MKind kind;
  std::string name;  // Atom
  MF a, b;           // Implies; Box uses a
};

MF atom(const std::string& name);
MF bottom();
MF implies(MF l, MF r);
MF box(MF f);

MF top();
MF m_not(MF f);
MF m_and(MF l, MF r);
MF m_or(MF l, MF r);
MF iff(MF l, MF r);
MF diamond(MF f);

bool equal(const MF& x, const MF& y);
std::set<std::string> atoms_of(const MF& f);
std::string print(const MF& f);
MF parse(const std::string& text);  // "[]" box, "<>" diamond, "ff"/"tt", ~ & | -> <->

// ---------------------------------------------------------------------------
// Kripke models: finite transitive irreflexive frames.

struct KripkeModel {
  int worlds = 0;                                  // world indices 0..worlds-1
  std::vector<std::pair<int, int>> edges;          // ordered pairs
  std::map<std::string, std::set<int>> valuation;  // atom -> worlds where true
  int root = 0;
};

bool is_transitive(const KripkeModel& m);
bool is_irreflexive(const KripkeModel& m);
bool model_check(const KripkeModel& m, int world, const MF& f);

nlohmann::json model_to_json(const KripkeModel& m);
KripkeModel model_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Derivations (sequent proof traces) and the trace checker.

enum class Rule { Axiom, BottomLeft, ImpLeft, ImpRight, BoxStep };

struct Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

struct Derivation {
  Rule rule;
  std::vector<MF> left, right;   // the concluded sequent
  MF principal;                  // decomposed/shared formula
  std::vector<DerivPtr> premises;
};

enum class Mode { GL, K4 };

// Replays a derivation bottom-up and checks every rule application.
bool replay(const DerivPtr& d, Mode mode = Mode::GL);

// ---------------------------------------------------------------------------
// Verdicts.

struct Verdict {
  bool is_theorem = false;
  DerivPtr trace;                       // set when is_theorem
  std::optional<KripkeModel> counter;   // set when !is_theorem (GL mode always)
};

struct BudgetError : std::runtime_error {
  BudgetError(std::uint64_t nodes, std::size_t memo_size)
      : std::runtime_error("search node budget exceeded after " +
                           std::to_string(nodes) + " nodes (" +
                           std::to_string(memo_size) + " memoized sequents)"),
        nodes(nodes),
        memo_size(memo_size) {}
  std::uint64_t nodes;
  std::size_t memo_size;
};

struct DecideOptions {
  Mode mode = Mode::GL;
  std::uint64_t node_budget = 10'000'000;
  bool minimize_countermodel = true;
};

// Theorem iff f is valid on all finite transitive irreflexive frames.
Verdict decide(const MF& f, const DecideOptions& opts = {});

// Global consequence, reduced to decide(boxplus(axioms) -> goal) where
// boxplus conjoins (g & []g) over the axioms.
Verdict global_consequence(const std::vector<MF>& axioms, const MF& goal,
                           const DecideOptions& opts = {});
MF boxplus(const std::vector<MF>& axioms, const MF& goal);

// Exhaustive oracle: first model over <= max_worlds labeled worlds (all
// transitive irreflexive relations, all valuations, all roots) falsifying f.
std::optional<KripkeModel> enumerate_refutation(const MF& f, int max_worlds);

nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace glab::gl

#endif
