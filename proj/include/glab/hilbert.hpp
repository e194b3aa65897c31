// Toy Hilbert-style proof system over the arithmetic syntax: a checker, a
// canonical proof enumerator, the extraction procedure that hunts for
// incompressibility claims, and an inconsistency detector.

#ifndef GLAB_HILBERT_HPP
#define GLAB_HILBERT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "glab/klab.hpp"
#include "glab/syntax.hpp"

namespace glab::hilbert {

using syntax::BigInt;
using syntax::FormulaPtr;

// Propositional schemata:
//   1: A -> (B -> A)
//   2: (A -> (B -> C)) -> ((A -> B) -> (A -> C))
//   3: (~B -> ~A) -> (A -> B)
struct PropAxiom {
  int schema = 1;
  std::vector<FormulaPtr> inst;  // {A,B} for schemata 1 and 3, {A,B,C} for 2
};

struct Given {
  std::size_t index = 0;
};

// Certifies KLe(x, bound) by a program of length <= bound that outputs x.
struct Sigma1Witness {
  BigInt x;
  int bound = 0;
  klab::Program program;
};

// Line `implication` is X -> Y, line `antecedent` is X; concludes Y.
struct ModusPonens {
  std::size_t implication = 0;
  std::size_t antecedent = 0;
};

using Justification = std::variant<PropAxiom, Given, Sigma1Witness, ModusPonens>;

struct ProofLine {
  FormulaPtr formula;
  Justification just;
};

struct HilbertProof {
  std::vector<ProofLine> lines;

  FormulaPtr conclusion() const {
    return lines.empty() ? nullptr : lines.back().formula;
  }
};

struct TheoryConfig {
  std::vector<FormulaPtr> given_axioms;
  bool sigma1_rule_enabled = false;
  // Enumeration bounds; the candidate space they induce is finite.
  int max_lines = 2;
  int max_formula_bytes = 12;
  std::uint64_t max_literal = 4;  // Lit value / Var index cap in instantiations
  int max_witness_bits = 4;       // caps both the bound and the program length
};

struct CheckReport {
  bool ok = false;
  std::size_t line = 0;  // first failing line when !ok
  std::string reason;
};

CheckReport check(const TheoryConfig& t, const HilbertProof& p);

// Byte form used for size accounting and canonical ordering (docs/formats.md).
std::vector<std::uint8_t> serialize(const HilbertProof& p);

nlohmann::json proof_to_json(const HilbertProof& p);

// Yields the checker-valid proofs within the configured bounds in canonical
// order (ascending serialized size, ties lexicographic); stops after
// inspecting `budget` candidates or when `yield` returns false.
void enumerate(const TheoryConfig& t, std::uint64_t budget,
               const std::function<bool(const HilbertProof&)>& yield);

// First enumerated proof concluding ~KLe(x, L') with L' >= L.
std::optional<std::pair<BigInt, HilbertProof>> chaitin_extract(
    const TheoryConfig& t, int L, std::uint64_t budget);

// First pair of enumerated proofs concluding F and ~F.
std::optional<std::pair<HilbertProof, HilbertProof>> inconsistency_scan(
    const TheoryConfig& t, std::uint64_t budget);

}  // namespace glab::hilbert

#endif
