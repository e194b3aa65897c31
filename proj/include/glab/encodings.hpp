// Builders translating the self-referential sentences into modal formulas
// and running the verdicts: the two surprise-exam formalizations and the
// Kolmogorov-based incompleteness schema.

#ifndef GLAB_ENCODINGS_HPP
#define GLAB_ENCODINGS_HPP

#include <vector>

#include "glab/gl.hpp"
#include "glab/goedel.hpp"

namespace glab::encodings {

using goedel::Variant;

struct ParadoxInstance {
  int n = 0;
  Variant variant = Variant::Plain;
  gl::MF s;                   // the announcement atom
  std::vector<gl::MF> days;   // d_1..d_n
  gl::MF body;                // s occurs in body only under Box
  gl::MF axiom;               // Iff(s, body), used as a global axiom
  std::vector<gl::MF> memory; // ~d_i -> []~d_i for i < n ("the past is provable")
};

// g_i = ~d_1 & ... & ~d_{i-1} renders "m >= i"; Box(s -> A) renders Pr_{T,S}.
ParadoxInstance build_paradox(int n, Variant variant);

// SelfRefuting: [axiom] |= ~s.
// ConConditionalLastDay: [axiom] + memory |= s -> (Con -> ~d_n); the memory
// axioms model that the theory proves which days have already passed.
enum class ParadoxQuery { SelfRefuting, ConConditionalLastDay };

gl::Verdict paradox_verdict(const ParadoxInstance& p, ParadoxQuery query,
                            const gl::DecideOptions& opts = {});

struct IncompletenessSchema {
  int atom_count = 0;          // conceptually 2^{L+1}+1
  std::vector<gl::MF> ks;      // k_x plays "K(x) > L"
  gl::MF a1;                   // Con -> conjunction of ~[]k_x
  gl::MF a2;                   // conjunction of (~k_x -> []~k_x)
  gl::MF a3;                   // disjunction of k_x
};

IncompletenessSchema build_schema(int atom_count);

// Global consequence [A1,A2,A3] |= []Con -> []ff.
gl::Verdict second_incompleteness_verdict(const IncompletenessSchema& schema,
                                          const gl::DecideOptions& opts = {});

// Negative control: [A1,A2,A3] |= []ff, expected NonTheorem for N >= 2.
gl::Verdict schema_consistency_check(const IncompletenessSchema& schema,
                                     const gl::DecideOptions& opts = {});

}  // namespace glab::encodings

#endif
