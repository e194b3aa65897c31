#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <unordered_set>

#include "glab/goedel.hpp"

using namespace glab::goedel;
using namespace glab::syntax;

namespace {

// Counts Pr atoms, split by whether the nearest enclosing propositional
// context negates them.
void count_pr(const FormulaPtr& f, bool negated, int& pos, int& neg) {
  switch (f->kind) {
    case FormulaKind::Pr:
      (negated ? neg : pos)++;
      return;
    case FormulaKind::Not:
      count_pr(f->f1, !negated, pos, neg);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      count_pr(f->f1, negated, pos, neg);
      count_pr(f->f2, negated, pos, neg);
      return;
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      count_pr(f->f1, negated, pos, neg);
      return;
    default:
      return;
  }
}

bool contains_lit(const TermPtr& t, const BigInt& v) {
  if (!t) return false;
  if (t->kind == TermKind::Lit && t->lit == v) return true;
  return contains_lit(t->left, v) || contains_lit(t->right, v);
}

bool contains_var(const FormulaPtr& f, std::uint64_t v) {
  return free_vars(f).count(v) > 0;
}

}  // namespace

TEST_CASE("byte table: encode(0 = 0) = 0x100101") {
  auto g = encode(eq(zero(), zero()));
  CHECK(g.value == BigInt(0x100101));
  auto bytes = serialize(eq(zero(), zero()));
  CHECK(bytes == std::vector<std::uint8_t>{0x10, 0x01, 0x01});
}

TEST_CASE("decode rejects invalid inputs with an offset") {
  CHECK_THROWS_AS(decode(GoedelNumber{0}), DecodeError);
  CHECK_THROWS_AS(decode(GoedelNumber{1}), DecodeError);  // term opcode at top level
  // 0x10 with missing children.
  CHECK_THROWS_AS(decode(GoedelNumber{0x10}), DecodeError);
  // Trailing garbage after a complete formula.
  CHECK_THROWS_AS(decode(GoedelNumber{0x10010101}), DecodeError);
}

TEST_CASE("roundtrip on random formulas") {
  std::mt19937 rng(99);
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  std::function<TermPtr(int)> gt = [&](int d) -> TermPtr {
    if (d <= 0) {
      switch (pick(3)) {
        case 0: return zero();
        case 1: return var(pick(600));
        default: return lit(BigInt(1) << pick(200));
      }
    }
    switch (pick(6)) {
      case 0: return succ(gt(d - 1));
      case 1: return plus(gt(d - 1), gt(d - 1));
      case 2: return times(gt(d - 1), gt(d - 1));
      case 3: return sub_fn(gt(d - 1), gt(d - 1));
      case 4: return imp_fn(gt(d - 1), gt(d - 1));
      default: return gt(0);
    }
  };
  std::function<FormulaPtr(int)> gf = [&](int d) -> FormulaPtr {
    if (d <= 0) {
      switch (pick(4)) {
        case 0: return eq(gt(1), gt(1));
        case 1: return leq(gt(1), gt(1));
        case 2: return k_le(gt(1), gt(1));
        default: return pr(gt(1));
      }
    }
    switch (pick(6)) {
      case 0: return f_not(gf(d - 1));
      case 1: return f_and(gf(d - 1), gf(d - 1));
      case 2: return f_or(gf(d - 1), gf(d - 1));
      case 3: return f_implies(gf(d - 1), gf(d - 1));
      case 4: return forall(pick(600), gf(d - 1));
      default: return gf(0);
    }
  };
  for (int i = 0; i < 500; ++i) {
    auto f = gf(3);
    CHECK(equal(decode(encode(f)), f));
  }
}

TEST_CASE("varint payloads roundtrip at every group length") {
  for (int bits = 0; bits <= 300; ++bits) {
    BigInt v = (BigInt(1) << bits) - 1;
    auto f = eq(lit(v), var(bits < 64 ? static_cast<std::uint64_t>(bits) : 0));
    CHECK(equal(decode(encode(f)), f));
  }
  // Exhaustive over the first three varint group lengths.
  std::unordered_set<std::string> seen;
  for (std::uint64_t v = 0; v < (1u << 16) + 300; ++v) {
    auto bytes = serialize(eq(lit(v), zero()));
    auto key = std::string(bytes.begin(), bytes.end());
    CHECK(seen.insert(key).second);
    CHECK(equal(decode(GoedelNumber{from_bytes(bytes)}), eq(lit(v), zero())));
  }
}

TEST_CASE("injectivity: exhaustive over small serializations") {
  // All formulas of serialized length <= 6 bytes whose varint payloads fit a
  // single group (0..127); multi-group payloads differ from these only in
  // varint bytes, which the previous case covers exhaustively.
  std::vector<std::vector<TermPtr>> terms(6);
  for (std::uint64_t v = 0; v < 128; ++v) {
    terms[2].push_back(var(v));
    terms[2].push_back(lit(v));
  }
  terms[1].push_back(zero());
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
    if (s >= 2)
      for (const auto& t : terms[s - 1]) fs[s].push_back(pr(t));
    if (s >= 2)
      for (const auto& c : fs[s - 1]) fs[s].push_back(f_not(c));
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
      REQUIRE(static_cast<int>(bytes.size()) == s);
      auto key = std::string(bytes.begin(), bytes.end());
      std::string msg = "collision at " + print(f);
      REQUIRE_MESSAGE(seen.insert(key).second, msg);
      ++total;
    }
  CHECK(total == seen.size());
  CHECK(total > 100000);  // the sweep is genuinely exhaustive, not a sample
}

TEST_CASE("sub_meta substitutes at the meta level") {
  auto a = encode(eq(var(1), zero()));
  CHECK(sub_meta(a, 5) == encode(eq(lit(5), zero())));
  CHECK_THROWS(sub_meta(encode(eq(zero(), zero())), 5));  // no free Var(1)
}

TEST_CASE("imp_code builds the implication code") {
  auto a = encode(eq(zero(), zero()));
  CHECK(imp_code(a, a) == encode(f_implies(eq(zero(), zero()), eq(zero(), zero()))));
  auto d = decode(imp_code(encode(leq(zero(), var(0))), a));
  CHECK(d->kind == FormulaKind::Implies);
}

TEST_CASE("v_code is the coded day implication") {
  auto want = encode(f_implies(leq(lit(5), var(0)), eq(var(0), lit(5))));
  CHECK(v_code(5, 5, 5) == want);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      auto d = decode(v_code(i, j, 5));
      REQUIRE(d->kind == FormulaKind::Implies);
      CHECK(d->f1->kind == FormulaKind::Leq);
      CHECK(d->f2->kind == FormulaKind::Eq);
    }
  CHECK_THROWS(v_code(6, 1, 5));
  CHECK_THROWS(v_code(0, 1, 5));
}

TEST_CASE("template shapes") {
  int pos = 0, neg = 0;
  count_pr(build_template(5, Variant::Exclusive), false, pos, neg);
  CHECK(pos == 5);
  CHECK(neg == 20);

  pos = neg = 0;
  count_pr(build_template(5, Variant::Plain), false, pos, neg);
  CHECK(pos == 5);
  CHECK(neg == 0);

  pos = neg = 0;
  auto t1 = build_template(1, Variant::Plain);
  count_pr(t1, false, pos, neg);
  CHECK(pos == 1);
  CHECK(t1->kind == FormulaKind::And);  // domain conjunct plus one implication
  CHECK(contains_var(t1, 0));
  CHECK(contains_var(t1, 1));
  CHECK_THROWS(build_template(0, Variant::Plain));
}

TEST_CASE("diagonalize reaches the fixed point") {
  for (auto variant : {Variant::Plain, Variant::Exclusive})
    for (int n = 1; n <= 5; ++n) {
      auto tmpl = build_template(n, variant);
      auto d = diagonalize(tmpl);
      CHECK(d.q == encode(tmpl));
      CHECK(d.s == sub_meta(d.q, d.q.value));
      CHECK(equal(decode(d.s), d.sentence));
      CHECK(!contains_var(d.sentence, 1));
      CHECK(contains_var(d.sentence, 0));
      // Every former Var(1) occurrence now holds the template's own code.
      bool found = false;
      std::function<void(const FormulaPtr&)> scan = [&](const FormulaPtr& f) {
        if (f->t1 && contains_lit(f->t1, d.q.value)) found = true;
        if (f->t2 && contains_lit(f->t2, d.q.value)) found = true;
        if (f->f1) scan(f->f1);
        if (f->f2) scan(f->f2);
      };
      scan(d.sentence);
      CHECK(found);
    }
  CHECK_THROWS(diagonalize(eq(zero(), zero())));
}
