#include "glab/hilbert.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "glab/goedel.hpp"

namespace glab::hilbert {

using namespace glab::syntax;

namespace {

FormulaPtr schema_instance(int schema, const std::vector<FormulaPtr>& inst) {
  if (schema == 1 && inst.size() == 2)
    return f_implies(inst[0], f_implies(inst[1], inst[0]));
  if (schema == 2 && inst.size() == 3)
    return f_implies(f_implies(inst[0], f_implies(inst[1], inst[2])),
                     f_implies(f_implies(inst[0], inst[1]),
                               f_implies(inst[0], inst[2])));
  if (schema == 3 && inst.size() == 2)
    return f_implies(f_implies(f_not(inst[1]), f_not(inst[0])),
                     f_implies(inst[0], inst[1]));
  return nullptr;
}

void put_varint(std::vector<std::uint8_t>& out, BigInt v) {
  for (;;) {
    auto group = static_cast<std::uint8_t>(v & 0x7f);
    v >>= 7;
    if (v == 0) {
      out.push_back(group);
      return;
    }
    out.push_back(group | 0x80);
  }
}

void serialize_line(std::vector<std::uint8_t>& out, const ProofLine& line) {
  if (const auto* pa = std::get_if<PropAxiom>(&line.just)) {
    out.push_back(0x01);
    out.push_back(static_cast<std::uint8_t>(pa->schema));
    for (const auto& f : pa->inst) {
      auto bytes = goedel::serialize(f);
      out.insert(out.end(), bytes.begin(), bytes.end());
    }
  } else if (const auto* g = std::get_if<Given>(&line.just)) {
    out.push_back(0x02);
    put_varint(out, BigInt(g->index));
  } else if (const auto* sw = std::get_if<Sigma1Witness>(&line.just)) {
    out.push_back(0x03);
    put_varint(out, sw->x);
    put_varint(out, BigInt(sw->bound));
    put_varint(out, BigInt(sw->program.bits.size()));
    std::uint8_t cur = 0;
    int fill = 0;
    for (char c : sw->program.bits) {
      cur = static_cast<std::uint8_t>((cur << 1) | (c == '1'));
      if (++fill == 8) {
        out.push_back(cur);
        cur = 0;
        fill = 0;
      }
    }
    if (fill) out.push_back(static_cast<std::uint8_t>(cur << (8 - fill)));
  } else if (const auto* mp = std::get_if<ModusPonens>(&line.just)) {
    out.push_back(0x04);
    put_varint(out, BigInt(mp->implication));
    put_varint(out, BigInt(mp->antecedent));
  }
}

}  // namespace

std::vector<std::uint8_t> serialize(const HilbertProof& p) {
  std::vector<std::uint8_t> out;
  for (const auto& line : p.lines) serialize_line(out, line);
  return out;
}

CheckReport check(const TheoryConfig& t, const HilbertProof& p) {
  auto fail = [](std::size_t line, std::string reason) {
    return CheckReport{false, line, std::move(reason)};
  };
  if (p.lines.empty()) return fail(0, "empty proof");
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    const auto& line = p.lines[i];
    if (!line.formula) return fail(i, "missing formula");
    if (const auto* pa = std::get_if<PropAxiom>(&line.just)) {
      FormulaPtr want = schema_instance(pa->schema, pa->inst);
      if (!want) return fail(i, "bad propositional schema or instantiation arity");
      if (!equal(line.formula, want))
        return fail(i, "formula does not match the schema instance");
    } else if (const auto* g = std::get_if<Given>(&line.just)) {
      if (g->index >= t.given_axioms.size())
        return fail(i, "given axiom index out of range");
      if (!equal(line.formula, t.given_axioms[g->index]))
        return fail(i, "formula does not match the cited axiom");
    } else if (const auto* sw = std::get_if<Sigma1Witness>(&line.just)) {
      if (!t.sigma1_rule_enabled) return fail(i, "sigma1 rule disabled");
      if (sw->program.length() > sw->bound)
        return fail(i, "witness program longer than the claimed bound");
      auto out = klab::run(sw->program);
      if (!out) return fail(i, "witness program is invalid");
      if (*out != sw->x) return fail(i, "witness program outputs the wrong value");
      FormulaPtr want = k_le(lit(sw->x), lit(sw->bound));
      if (!equal(line.formula, want))
        return fail(i, "formula does not match KLe(x, bound)");
    } else if (const auto* mp = std::get_if<ModusPonens>(&line.just)) {
      if (mp->implication >= i || mp->antecedent >= i)
        return fail(i, "modus ponens must cite earlier lines");
      const auto& imp = p.lines[mp->implication].formula;
      if (imp->kind != FormulaKind::Implies)
        return fail(i, "cited line is not an implication");
      if (!equal(imp->f1, p.lines[mp->antecedent].formula))
        return fail(i, "antecedent line does not match the implication");
      if (!equal(imp->f2, line.formula))
        return fail(i, "formula does not match the implication's consequent");
    }
  }
  return CheckReport{true, 0, ""};
}

// ---------------------------------------------------------------------------
// Canonical enumeration

namespace {

struct LineOption {
  ProofLine line;
  std::vector<std::uint8_t> ser;
};

bool lex_less(const LineOption& a, const LineOption& b) { return a.ser < b.ser; }

// All formulas with serialized size <= max_bytes, Lit/Var values <= cap.
// Grouped by exact serialized size.
std::vector<std::vector<FormulaPtr>> formula_pool(int max_bytes, std::uint64_t cap) {
  auto varint_len = [](BigInt v) {
    int len = 1;
    v >>= 7;
    while (v > 0) {
      ++len;
      v >>= 7;
    }
    return len;
  };

  std::vector<std::vector<TermPtr>> terms(max_bytes + 1);
  for (int s = 1; s <= max_bytes; ++s) {
    auto& out = terms[s];
    if (s == 1) out.push_back(zero());
    if (s >= 2)
      for (const auto& t : terms[s - 1]) out.push_back(succ(t));
    for (std::uint64_t v = 0; v <= cap; ++v) {
      if (1 + varint_len(BigInt(v)) == s) {
        out.push_back(lit(BigInt(v)));
        out.push_back(var(v));
      }
    }
    for (int ls = 1; ls + 2 <= s; ++ls) {
      int rs = s - 1 - ls;
      for (const auto& l : terms[ls])
        for (const auto& r : terms[rs]) {
          out.push_back(plus(l, r));
          out.push_back(times(l, r));
          out.push_back(sub_fn(l, r));
          out.push_back(imp_fn(l, r));
        }
    }
  }

  std::vector<std::vector<FormulaPtr>> formulas(max_bytes + 1);
  for (int s = 2; s <= max_bytes; ++s) {
    auto& out = formulas[s];
    for (int ls = 1; ls + 2 <= s; ++ls) {
      int rs = s - 1 - ls;
      for (const auto& l : terms[ls])
        for (const auto& r : terms[rs]) {
          out.push_back(eq(l, r));
          out.push_back(leq(l, r));
          out.push_back(k_le(l, r));
        }
    }
    for (const auto& t : terms[s - 1]) out.push_back(pr(t));
    for (const auto& f : formulas[s - 1]) out.push_back(f_not(f));
    for (int ls = 2; ls + 3 <= s; ++ls) {
      int rs = s - 1 - ls;
      for (const auto& l : formulas[ls])
        for (const auto& r : formulas[rs]) {
          out.push_back(f_and(l, r));
          out.push_back(f_or(l, r));
          out.push_back(f_implies(l, r));
        }
    }
    for (std::uint64_t v = 0; v <= cap; ++v) {
      int head = 1 + varint_len(BigInt(v));
      if (s - head >= 2)
        for (const auto& b : formulas[s - head]) {
          out.push_back(forall(v, b));
          out.push_back(exists(v, b));
        }
    }
  }
  return formulas;
}

struct Enumerator {
  const TheoryConfig& t;
  std::uint64_t budget;
  const std::function<bool(const HilbertProof&)>& yield;

  std::vector<LineOption> fixed;  // prefix-independent options, lex-sorted
  std::uint64_t inspected = 0;
  bool stopped = false;

  void build_fixed_options() {
    for (std::size_t i = 0; i < t.given_axioms.size(); ++i) {
      const auto& ax = t.given_axioms[i];
      if (static_cast<int>(goedel::serialize(ax).size()) > t.max_formula_bytes) continue;
      LineOption o;
      o.line = ProofLine{ax, Given{i}};
      serialize_line(o.ser, o.line);
      fixed.push_back(std::move(o));
    }

    if (t.sigma1_rule_enabled) {
      for (int len = 0; len <= t.max_witness_bits; len += 2) {
        for (std::uint64_t code = 0; code < (1ull << len); ++code) {
          klab::Program p;
          p.bits.resize(len);
          for (int b = 0; b < len; ++b)
            p.bits[b] = ((code >> (len - 1 - b)) & 1) ? '1' : '0';
          auto out = klab::run(p);
          if (!out) continue;
          for (int bound = len; bound <= t.max_witness_bits; ++bound) {
            FormulaPtr f = k_le(lit(*out), lit(bound));
            if (static_cast<int>(goedel::serialize(f).size()) > t.max_formula_bytes)
              continue;
            LineOption o;
            o.line = ProofLine{f, Sigma1Witness{*out, bound, p}};
            serialize_line(o.ser, o.line);
            fixed.push_back(std::move(o));
          }
        }
      }
    }

    // The smallest schema line is 2+2|A|+|B| bytes, so instantiation
    // formulas larger than max_formula_bytes - 6 can never fit.
    int pool_max = t.max_formula_bytes - 6;
    if (pool_max < 2) {
      std::sort(fixed.begin(), fixed.end(), lex_less);
      return;
    }
    auto pool = formula_pool(pool_max, t.max_literal);
    auto add_schema = [&](int schema, const std::vector<FormulaPtr>& inst) {
      FormulaPtr f = schema_instance(schema, inst);
      if (static_cast<int>(goedel::serialize(f).size()) > t.max_formula_bytes) return;
      LineOption o;
      o.line = ProofLine{f, PropAxiom{schema, inst}};
      serialize_line(o.ser, o.line);
      fixed.push_back(std::move(o));
    };
    // Size filters: schema 1 line is 2+2|A|+|B| bytes, schema 3 is
    // 5+2|A|+2|B|, schema 2 is 6+3|A|+2|B|+2|C|.
    int mb = t.max_formula_bytes;
    for (int sa = 2; sa <= pool_max; ++sa)
      for (int sb = 2; sb <= pool_max; ++sb) {
        bool s1 = 2 + 2 * sa + sb <= mb;
        bool s3 = 5 + 2 * sa + 2 * sb <= mb;
        if (!s1 && !s3 && 6 + 3 * sa + 2 * sb + 2 * 2 > mb) continue;
        for (const auto& A : pool[sa])
          for (const auto& B : pool[sb]) {
            if (s1) add_schema(1, {A, B});
            if (s3) add_schema(3, {A, B});
            for (int sc = 2; 6 + 3 * sa + 2 * sb + 2 * sc <= mb; ++sc)
              for (const auto& C : pool[sc]) add_schema(2, {A, B, C});
          }
      }

    std::sort(fixed.begin(), fixed.end(), lex_less);
  }

  std::vector<LineOption> mp_options(const std::vector<ProofLine>& prefix) const {
    std::vector<LineOption> out;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i].formula->kind != FormulaKind::Implies) continue;
      for (std::size_t j = 0; j < prefix.size(); ++j) {
        if (!equal(prefix[i].formula->f1, prefix[j].formula)) continue;
        const auto& conclusion = prefix[i].formula->f2;
        if (static_cast<int>(goedel::serialize(conclusion).size()) > t.max_formula_bytes)
          continue;
        LineOption o;
        o.line = ProofLine{conclusion, ModusPonens{i, j}};
        serialize_line(o.ser, o.line);
        out.push_back(std::move(o));
      }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
  }

  void emit(const std::vector<ProofLine>& lines) {
    if (++inspected > budget) {
      stopped = true;
      return;
    }
    HilbertProof p{lines};
    if (!check(t, p).ok) return;  // candidates are valid by construction
    if (!yield(p)) stopped = true;
  }

  // by_fit[r]: fixed options of serialized size <= r, in lex order.
  std::vector<std::vector<const LineOption*>> by_fit;

  void dfs(std::vector<ProofLine>& lines, int remaining) {
    if (stopped) return;
    if (static_cast<int>(lines.size()) >= t.max_lines) return;
    auto mp = mp_options(lines);
    const auto& fit = by_fit[remaining];
    // Merge the two lex-sorted option lists.
    std::size_t fi = 0, mi = 0;
    while (!stopped && (fi < fit.size() || mi < mp.size())) {
      const LineOption* opt;
      if (mi < mp.size() && static_cast<int>(mp[mi].ser.size()) > remaining) {
        ++mi;
        continue;
      }
      if (mi >= mp.size() || (fi < fit.size() && fit[fi]->ser < mp[mi].ser))
        opt = fit[fi++];
      else
        opt = &mp[mi++];
      int sz = static_cast<int>(opt->ser.size());
      lines.push_back(opt->line);
      if (sz == remaining)
        emit(lines);
      else
        dfs(lines, remaining - sz);
      lines.pop_back();
    }
  }

  void go() {
    build_fixed_options();
    int max_line_bytes = 0;
    for (const auto& o : fixed)
      max_line_bytes = std::max(max_line_bytes, static_cast<int>(o.ser.size()));
    // MP lines are at most 1 + 2 varints.
    max_line_bytes = std::max(max_line_bytes, 1 + 2 * 10);
    int hard_cap = t.max_lines * max_line_bytes;
    by_fit.resize(hard_cap + 1);
    for (int r = 0; r <= hard_cap; ++r)
      for (const auto& o : fixed)
        if (static_cast<int>(o.ser.size()) <= r) by_fit[r].push_back(&o);
    std::vector<ProofLine> lines;
    for (int total = 1; total <= hard_cap && !stopped; ++total) dfs(lines, total);
  }
};

FormulaPtr extract_negated_kle(const FormulaPtr& f, int min_bound, BigInt* x_out) {
  if (!f || f->kind != FormulaKind::Not) return nullptr;
  const auto& a = f->f1;
  if (a->kind != FormulaKind::KLe) return nullptr;
  if (a->t1->kind != TermKind::Lit || a->t2->kind != TermKind::Lit) return nullptr;
  if (a->t2->lit < min_bound) return nullptr;
  *x_out = a->t1->lit;
  return a;
}

}  // namespace

void enumerate(const TheoryConfig& t, std::uint64_t budget,
               const std::function<bool(const HilbertProof&)>& yield) {
  Enumerator e{t, budget, yield, {}, {}};
  e.go();
}

std::optional<std::pair<BigInt, HilbertProof>> chaitin_extract(
    const TheoryConfig& t, int L, std::uint64_t budget) {
  std::optional<std::pair<BigInt, HilbertProof>> found;
  enumerate(t, budget, [&](const HilbertProof& p) {
    BigInt x;
    if (extract_negated_kle(p.conclusion(), L, &x)) {
      found = {x, p};
      return false;
    }
    return true;
  });
  return found;
}

std::optional<std::pair<HilbertProof, HilbertProof>> inconsistency_scan(
    const TheoryConfig& t, std::uint64_t budget) {
  std::map<std::string, HilbertProof> seen;  // conclusion text -> first proof
  std::optional<std::pair<HilbertProof, HilbertProof>> found;
  enumerate(t, budget, [&](const HilbertProof& p) {
    FormulaPtr c = p.conclusion();
    std::string key = print(c);
    if (c->kind == FormulaKind::Not) {
      auto it = seen.find(print(c->f1));
      if (it != seen.end()) {
        found = {it->second, p};
        return false;
      }
    }
    auto it = seen.find("~" + key);
    if (it != seen.end()) {
      found = {it->second, p};
      return false;
    }
    seen.emplace(std::move(key), p);
    return true;
  });
  return found;
}

nlohmann::json proof_to_json(const HilbertProof& p) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : p.lines) {
    nlohmann::json j;
    j["formula"] = print(line.formula);
    if (const auto* pa = std::get_if<PropAxiom>(&line.just)) {
      j["just"] = {{"kind", "prop-axiom"}, {"schema", pa->schema}};
      auto inst = nlohmann::json::array();
      for (const auto& f : pa->inst) inst.push_back(print(f));
      j["just"]["inst"] = inst;
    } else if (const auto* g = std::get_if<Given>(&line.just)) {
      j["just"] = {{"kind", "given"}, {"index", g->index}};
    } else if (const auto* sw = std::get_if<Sigma1Witness>(&line.just)) {
      j["just"] = {{"kind", "sigma1-witness"},
                   {"x", sw->x.str()},
                   {"bound", sw->bound},
                   {"program", sw->program.bits}};
    } else if (const auto* mp = std::get_if<ModusPonens>(&line.just)) {
      j["just"] = {{"kind", "modus-ponens"},
                   {"implication", mp->implication},
                   {"antecedent", mp->antecedent}};
    }
    lines.push_back(std::move(j));
  }
  return lines;
}

}  // namespace glab::hilbert
