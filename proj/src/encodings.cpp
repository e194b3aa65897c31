#include "glab/encodings.hpp"

#include <stdexcept>
#include <string>

namespace glab::encodings {

using namespace glab::gl;

ParadoxInstance build_paradox(int n, Variant variant) {
  if (n < 1) throw std::invalid_argument("build_paradox: day count must be >= 1");
  ParadoxInstance p;
  p.n = n;
  p.variant = variant;
  p.s = atom("s");
  for (int i = 1; i <= n; ++i) p.days.push_back(atom("d" + std::to_string(i)));

  // Exactly one of d_1..d_n.
  MF exactly_one = p.days[0];
  for (int i = 1; i < n; ++i) exactly_one = m_or(exactly_one, p.days[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      exactly_one = m_and(exactly_one, m_not(m_and(p.days[i], p.days[j])));

  // g_i -> d_j renders "m >= i -> m = j", with g_i = ~d_1 & ... & ~d_{i-1}.
  // g_1 is empty, so the claim collapses to d_j.
  auto day_claim = [&](int i, int j) {
    if (i == 1) return p.days[j - 1];
    MF g = m_not(p.days[0]);
    for (int k = 2; k < i; ++k) g = m_and(g, m_not(p.days[k - 1]));
    return implies(g, p.days[j - 1]);
  };
  auto provable_from_s = [&](const MF& a) { return box(implies(p.s, a)); };

  MF body = exactly_one;
  for (int i = 1; i <= n; ++i) {
    MF ante = provable_from_s(day_claim(i, i));
    if (variant == Variant::Exclusive) {
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        ante = m_and(ante, m_not(provable_from_s(day_claim(i, j))));
      }
    }
    body = m_and(body, implies(ante, m_not(p.days[i - 1])));
  }
  p.body = body;
  p.axiom = iff(p.s, body);
  // On the eve of day i the elapsed days are checkable facts, so the theory
  // proves them: ~d_i -> []~d_i for every non-final day (the modal image of
  // Sigma1-completeness, same shape as the incompleteness schema's A2).
  for (int i = 1; i < n; ++i)
    p.memory.push_back(implies(m_not(p.days[i - 1]), box(m_not(p.days[i - 1]))));
  return p;
}

Verdict paradox_verdict(const ParadoxInstance& p, ParadoxQuery query,
                        const DecideOptions& opts) {
  switch (query) {
    case ParadoxQuery::SelfRefuting:
      return global_consequence({p.axiom}, m_not(p.s), opts);
    case ParadoxQuery::ConConditionalLastDay: {
      // Con(T,S) = ~Pr_{T,S}(ff) = ~[](s -> ff) = ~[]~s. The memory axioms
      // are essential: without them a consistent theory may "prove" an
      // already-elapsed day and the conditional fails (see the countermodel
      // checks in the tests).
      MF con = m_not(box(m_not(p.s)));
      MF goal = implies(p.s, implies(con, m_not(p.days.back())));
      std::vector<MF> axioms = {p.axiom};
      axioms.insert(axioms.end(), p.memory.begin(), p.memory.end());
      return global_consequence(axioms, goal, opts);
    }
  }
  throw std::logic_error("paradox_verdict: bad query");
}

IncompletenessSchema build_schema(int atom_count) {
  if (atom_count < 1) throw std::invalid_argument("build_schema: atom count must be >= 1");
  IncompletenessSchema s;
  s.atom_count = atom_count;
  for (int i = 0; i < atom_count; ++i) s.ks.push_back(atom("k" + std::to_string(i)));

  MF con = m_not(box(bottom()));

  MF nonprov = m_not(box(s.ks[0]));
  for (int i = 1; i < atom_count; ++i)
    nonprov = m_and(nonprov, m_not(box(s.ks[i])));
  s.a1 = implies(con, nonprov);

  MF sigma = implies(m_not(s.ks[0]), box(m_not(s.ks[0])));
  for (int i = 1; i < atom_count; ++i)
    sigma = m_and(sigma, implies(m_not(s.ks[i]), box(m_not(s.ks[i]))));
  s.a2 = sigma;

  MF some = s.ks[0];
  for (int i = 1; i < atom_count; ++i) some = m_or(some, s.ks[i]);
  s.a3 = some;
  return s;
}

Verdict second_incompleteness_verdict(const IncompletenessSchema& schema,
                                      const DecideOptions& opts) {
  MF con = m_not(box(bottom()));
  MF goal = implies(box(con), box(bottom()));
  return global_consequence({schema.a1, schema.a2, schema.a3}, goal, opts);
}

Verdict schema_consistency_check(const IncompletenessSchema& schema,
                                 const DecideOptions& opts) {
  return global_consequence({schema.a1, schema.a2, schema.a3}, box(bottom()), opts);
}

}  // namespace glab::encodings
