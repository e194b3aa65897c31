// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion enforces its own wall-clock ceiling.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "glab/encodings.hpp"
#include "glab/gl.hpp"
#include "glab/goedel.hpp"
#include "glab/hilbert.hpp"
#include "glab/klab.hpp"
#include "glab/syntax.hpp"

namespace {

int failures = 0;

void criterion(int n, const std::string& what, double limit_s,
               const std::function<bool()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt > limit_s) {
    ok = false;
    note += " (over time limit)";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %d: %s  [%.2fs / limit %.0fs]%s\n",
              ok ? "PASS" : "FAIL", n, what.c_str(), dt, limit_s, note.c_str());
  std::fflush(stdout);
}

bool verified_counter(const glab::gl::Verdict& v, const glab::gl::MF& f) {
  if (!v.counter) return false;
  return glab::gl::is_transitive(*v.counter) && glab::gl::is_irreflexive(*v.counter) &&
         !glab::gl::model_check(*v.counter, v.counter->root, f);
}

}  // namespace

// --------------------------------------------------------------------------

static bool gl_battery() {
  using namespace glab::gl;
  auto p = atom("p"), q = atom("q");
  std::vector<std::pair<MF, bool>> rows = {
      {implies(box(implies(p, q)), implies(box(p), box(q))), true},
      {implies(box(p), box(box(p))), true},
      {implies(box(implies(box(p), p)), box(p)), true},
      {implies(box(p), p), false},
      {implies(p, box(p)), false},
      {m_not(box(bottom())), false},
  };
  for (const auto& [f, want] : rows) {
    auto t0 = std::chrono::steady_clock::now();
    auto v = decide(f);
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > 1.0) return false;
    if (v.is_theorem != want) return false;
    if (v.is_theorem) {
      if (!replay(v.trace)) return false;
    } else if (!verified_counter(v, f)) {
      return false;
    }
  }
  return true;
}

static bool oracle_agreement() {
  using namespace glab::gl;
  // All modal formulas over one atom with at most 7 connectives (Box and
  // Implies over leaves p, ff), generated exhaustively by connective count.
  std::vector<std::vector<MF>> by_size(8);
  by_size[0] = {atom("p"), bottom()};
  for (int s = 1; s <= 7; ++s) {
    for (const auto& f : by_size[s - 1]) by_size[s].push_back(box(f));
    for (int a = 0; a <= s - 1; ++a)
      for (const auto& l : by_size[a])
        for (const auto& r : by_size[s - 1 - a]) by_size[s].push_back(implies(l, r));
  }
  DecideOptions opts;
  opts.minimize_countermodel = false;  // sweep speed; minimization covered elsewhere
  std::size_t total = 0, theorems = 0;
  for (int s = 0; s <= 7; ++s)
    for (const auto& f : by_size[s]) {
      ++total;
      auto v = decide(f, opts);
      if (v.is_theorem) {
        ++theorems;
        if (enumerate_refutation(f, 4)) return false;
      } else if (!v.counter || model_check(*v.counter, v.counter->root, f)) {
        return false;
      }
    }
  std::printf("      (swept %zu formulas, %zu theorems)\n", total, theorems);
  // Expected count from the tree recurrence t(n) = t(n-1) + sum t(a)t(b).
  return total == 685376 && theorems > 0;
}

static bool second_incompleteness() {
  using namespace glab::encodings;
  for (int n : {1, 2, 3}) {
    auto t0 = std::chrono::steady_clock::now();
    if (!second_incompleteness_verdict(build_schema(n)).is_theorem) return false;
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > 60) return false;
  }
  for (int n : {2, 3}) {
    auto t0 = std::chrono::steady_clock::now();
    auto v = schema_consistency_check(build_schema(n));
    if (v.is_theorem) return false;
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > 60) return false;
  }
  return true;
}

static bool paradox_first_form() {
  using namespace glab::encodings;
  for (int n : {1, 2, 3}) {
    auto t0 = std::chrono::steady_clock::now();
    auto p = build_paradox(n, Variant::Plain);
    if (!paradox_verdict(p, ParadoxQuery::SelfRefuting).is_theorem) return false;
    if (std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > 60) return false;
  }
  // n = 5: either a verdict (which must be Theorem) or an explicit
  // resource-limit report; never a wrong verdict.
  try {
    auto p = build_paradox(5, Variant::Plain);
    auto v = paradox_verdict(p, ParadoxQuery::SelfRefuting);
    if (!v.is_theorem) return false;
    std::printf("      (n = 5 decided within budget)\n");
  } catch (const glab::gl::BudgetError& e) {
    std::printf("      (n = 5 resource limit: %s)\n", e.what());
  }
  return true;
}

static bool paradox_second_form() {
  using namespace glab::encodings;
  for (int n : {2, 3}) {
    auto p = build_paradox(n, Variant::Exclusive);
    auto v = paradox_verdict(p, ParadoxQuery::SelfRefuting);
    if (v.is_theorem) return false;
    if (!verified_counter(v, glab::gl::boxplus({p.axiom}, glab::gl::m_not(p.s)))) return false;
    auto c = paradox_verdict(p, ParadoxQuery::ConConditionalLastDay);
    if (!c.is_theorem || !glab::gl::replay(c.trace)) return false;
  }
  return true;
}

static bool census_bounds() {
  using glab::syntax::BigInt;
  for (int L = 0; L <= 12; ++L) {
    auto r = glab::klab::census(L);
    if (r.m < 1) return false;
    if (BigInt(r.m) > r.range_max + 1) return false;
    if (BigInt(r.program_count) >= r.range_max) return false;
  }
  auto r2 = glab::klab::census(2);
  return r2.m == 7 && r2.program_count == 5;
}

static bool diagonal_fixed_point() {
  using namespace glab::goedel;
  for (auto variant : {Variant::Plain, Variant::Exclusive})
    for (int n = 1; n <= 5; ++n) {
      auto d = diagonalize(build_template(n, variant));
      if (d.s != sub_meta(d.q, d.q.value)) return false;
      if (!glab::syntax::equal(decode(d.s), d.sentence)) return false;
    }
  return true;
}

static bool chaitin_extraction() {
  using namespace glab::hilbert;
  using namespace glab::syntax;
  TheoryConfig rigged;
  rigged.given_axioms = {f_not(k_le(lit(3), lit(2)))};
  auto hit = chaitin_extract(rigged, 2, 100000);
  if (!hit || hit->first != 3 || !check(rigged, hit->second).ok) return false;

  TheoryConfig incon;
  incon.given_axioms = {f_not(k_le(lit(1), lit(2)))};
  incon.sigma1_rule_enabled = true;
  auto pair = inconsistency_scan(incon, 100000);
  if (!pair || !check(incon, pair->first).ok || !check(incon, pair->second).ok) return false;
  auto a = pair->first.conclusion(), b = pair->second.conclusion();
  bool contra = (b->kind == FormulaKind::Not && equal(b->f1, a)) ||
                (a->kind == FormulaKind::Not && equal(a->f1, b));
  if (!contra) return false;

  return chaitin_extract(TheoryConfig{}, 2, 50000) == std::nullopt;
}

static bool codec() {
  using namespace glab::goedel;
  using namespace glab::syntax;
  std::mt19937 rng(2024);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  std::function<TermPtr(int)> gt = [&](int d) -> TermPtr {
    if (d <= 0)
      return pick(2) ? TermPtr(lit(BigInt(1) << pick(128))) : TermPtr(var(pick(1000)));
    switch (pick(5)) {
      case 0: return succ(gt(d - 1));
      case 1: return plus(gt(d - 1), gt(d - 1));
      case 2: return times(gt(d - 1), gt(d - 1));
      case 3: return sub_fn(gt(d - 1), gt(d - 1));
      default: return zero();
    }
  };
  std::function<FormulaPtr(int)> gf = [&](int d) -> FormulaPtr {
    if (d <= 0) return pick(2) ? eq(gt(1), gt(1)) : FormulaPtr(pr(gt(1)));
    switch (pick(6)) {
      case 0: return f_not(gf(d - 1));
      case 1: return f_and(gf(d - 1), gf(d - 1));
      case 2: return f_or(gf(d - 1), gf(d - 1));
      case 3: return f_implies(gf(d - 1), gf(d - 1));
      case 4: return forall(pick(1000), gf(d - 1));
      default: return leq(gt(d), gt(d));
    }
  };
  for (int i = 0; i < 1000; ++i) {
    auto f = gf(3);
    if (!equal(decode(encode(f)), f)) return false;
  }

  // Injectivity sweep: all formulas of serialized length <= 6 whose varint
  // payloads are single-group, plus exhaustive varint distinctness — any two
  // length-<= 6 serializations differing only in multi-group payload bytes
  // are separated by the varint check.
  std::vector<std::vector<TermPtr>> terms(6);
  terms[1].push_back(zero());
  for (std::uint64_t v = 0; v < 128; ++v) {
    terms[2].push_back(var(v));
    terms[2].push_back(lit(v));
  }
  for (int s = 2; s <= 5; ++s) {
    for (const auto& c : terms[s - 1]) terms[s].push_back(succ(c));
    for (int a = 1; a <= s - 2; ++a)
      for (const auto& l : terms[a])
        for (const auto& r : terms[s - 1 - a]) {
          terms[s].push_back(plus(l, r));
          terms[s].push_back(times(l, r));
          terms[s].push_back(sub_fn(l, r));
          terms[s].push_back(imp_fn(l, r));
        }
  }
  std::vector<std::vector<FormulaPtr>> fs(7);
  for (int s = 1; s <= 6; ++s) {
    for (int a = 1; a <= s - 2; ++a)
      for (const auto& l : terms[a])
        for (const auto& r : terms[s - 1 - a]) {
          fs[s].push_back(eq(l, r));
          fs[s].push_back(leq(l, r));
          fs[s].push_back(k_le(l, r));
        }
    if (s >= 2) {
      for (const auto& t : terms[s - 1]) fs[s].push_back(pr(t));
      for (const auto& c : fs[s - 1]) fs[s].push_back(f_not(c));
    }
    for (int a = 1; a <= s - 2; ++a)
      for (const auto& l : fs[a])
        for (const auto& r : fs[s - 1 - a]) {
          fs[s].push_back(f_and(l, r));
          fs[s].push_back(f_or(l, r));
          fs[s].push_back(f_implies(l, r));
        }
    if (s >= 3)
      for (std::uint64_t v = 0; v < 128; ++v)
        for (const auto& c : fs[s - 2]) {
          fs[s].push_back(forall(v, c));
          fs[s].push_back(exists(v, c));
        }
  }
  std::unordered_set<std::string> seen;
  std::size_t total = 0;
  for (int s = 1; s <= 6; ++s)
    for (const auto& f : fs[s]) {
      auto bytes = serialize(f);
      if (static_cast<int>(bytes.size()) != s) return false;
      if (!seen.insert(std::string(bytes.begin(), bytes.end())).second) return false;
      if (!equal(decode(encode(f)), f)) return false;
      ++total;
    }
  std::printf("      (injectivity over %zu small formulas)\n", total);

  std::unordered_set<std::string> vkeys;
  for (std::uint64_t v = 0; v < (1u << 21); ++v) {
    auto bytes = serialize(pr(lit(v)));
    if (!vkeys.insert(std::string(bytes.begin(), bytes.end())).second) return false;
  }
  return total > 100000;
}

int main() {
  criterion(1, "GL battery with verified certificates", 10, gl_battery);
  criterion(2, "decide vs frame-enumeration oracle, <= 7 connectives", 600, oracle_agreement);
  criterion(3, "second incompleteness schema verdicts, N in {1,2,3}", 300, second_incompleteness);
  criterion(4, "plain surprise-exam announcement refutes itself", 200, paradox_first_form);
  criterion(5, "exclusive variant: satisfiable, last day needs consistency", 600, paradox_second_form);
  criterion(6, "census bounds L = 0..12 and spot values", 60, census_bounds);
  criterion(7, "diagonal fixed point s = Sub(q, q), n = 1..5", 5, diagonal_fixed_point);
  criterion(8, "Chaitin extraction, inconsistency scan, empty control", 30, chaitin_extraction);
  criterion(9, "codec roundtrips and injectivity", 30, codec);
  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 9 criteria passed\n");
  return failures ? 1 : 0;
}
