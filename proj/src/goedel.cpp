#include "glab/goedel.hpp"

#include <iterator>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

namespace glab::goedel {

using namespace glab::syntax;

namespace {

// Opcodes. Terms live below 0x10, formulas at 0x10 and above, so the first
// byte of a serialized formula is never 0x00.
enum : std::uint8_t {
  OP_ZERO = 0x01,
  OP_SUCC = 0x02,
  OP_PLUS = 0x03,
  OP_TIMES = 0x04,
  OP_LIT = 0x05,
  OP_VAR = 0x06,
  OP_SUBFN = 0x07,
  OP_IMPFN = 0x08,
  OP_EQ = 0x10,
  OP_LEQ = 0x11,
  OP_PR = 0x12,
  OP_KLE = 0x13,
  OP_NOT = 0x20,
  OP_AND = 0x21,
  OP_OR = 0x22,
  OP_IMPLIES = 0x23,
  OP_FORALL = 0x24,
  OP_EXISTS = 0x25,
};

// varint: base-128 groups, MSB continuation, little-endian group order.
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

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  put_varint(out, BigInt(v));
}

void ser_term(std::vector<std::uint8_t>& out, const Term* t) {
  switch (t->kind) {
    case TermKind::Zero: out.push_back(OP_ZERO); return;
    case TermKind::Succ: out.push_back(OP_SUCC); ser_term(out, t->left.get()); return;
    case TermKind::Plus: out.push_back(OP_PLUS); break;
    case TermKind::Times: out.push_back(OP_TIMES); break;
    case TermKind::Lit: out.push_back(OP_LIT); put_varint(out, t->lit); return;
    case TermKind::Var: out.push_back(OP_VAR); put_varint(out, t->var); return;
    case TermKind::SubFn: out.push_back(OP_SUBFN); break;
    case TermKind::ImpFn: out.push_back(OP_IMPFN); break;
  }
  ser_term(out, t->left.get());
  ser_term(out, t->right.get());
}

void ser_formula(std::vector<std::uint8_t>& out, const Formula* f) {
  switch (f->kind) {
    case FormulaKind::Eq: out.push_back(OP_EQ); break;
    case FormulaKind::Leq: out.push_back(OP_LEQ); break;
    case FormulaKind::Pr: out.push_back(OP_PR); break;
    case FormulaKind::KLe: out.push_back(OP_KLE); break;
    case FormulaKind::Not: out.push_back(OP_NOT); break;
    case FormulaKind::And: out.push_back(OP_AND); break;
    case FormulaKind::Or: out.push_back(OP_OR); break;
    case FormulaKind::Implies: out.push_back(OP_IMPLIES); break;
    case FormulaKind::ForAll: out.push_back(OP_FORALL); put_varint(out, f->var); break;
    case FormulaKind::Exists: out.push_back(OP_EXISTS); put_varint(out, f->var); break;
  }
  switch (f->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Leq:
    case FormulaKind::KLe:
      ser_term(out, f->t1.get());
      ser_term(out, f->t2.get());
      return;
    case FormulaKind::Pr:
      ser_term(out, f->t1.get());
      return;
    case FormulaKind::Not:
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      ser_formula(out, f->f1.get());
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      ser_formula(out, f->f1.get());
      ser_formula(out, f->f2.get());
      return;
  }
}

struct Reader {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  std::uint8_t byte() {
    if (pos >= bytes.size()) throw DecodeError(pos, "unexpected end of input");
    return bytes[pos++];
  }

  BigInt varint() {
    BigInt v = 0;
    int shift = 0;
    std::size_t start = pos;
    for (;;) {
      std::uint8_t b = byte();
      v |= BigInt(b & 0x7f) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
      if (pos - start > 4096) throw DecodeError(pos, "varint too long");
    }
  }

  std::uint64_t var_index() {
    std::size_t at = pos;
    BigInt v = varint();
    if (v > std::numeric_limits<std::uint64_t>::max())
      throw DecodeError(at, "variable index too large");
    return static_cast<std::uint64_t>(v);
  }

  TermPtr term() {
    std::size_t at = pos;
    switch (byte()) {
      case OP_ZERO: return zero();
      case OP_SUCC: return succ(term());
      case OP_PLUS: { auto l = term(); return plus(std::move(l), term()); }
      case OP_TIMES: { auto l = term(); return times(std::move(l), term()); }
      case OP_LIT: return lit(varint());
      case OP_VAR: return var(var_index());
      case OP_SUBFN: { auto l = term(); return sub_fn(std::move(l), term()); }
      case OP_IMPFN: { auto l = term(); return imp_fn(std::move(l), term()); }
      default: throw DecodeError(at, "invalid term opcode");
    }
  }

  FormulaPtr formula() {
    std::size_t at = pos;
    switch (byte()) {
      case OP_EQ: { auto l = term(); return eq(std::move(l), term()); }
      case OP_LEQ: { auto l = term(); return leq(std::move(l), term()); }
      case OP_PR: return pr(term());
      case OP_KLE: { auto l = term(); return k_le(std::move(l), term()); }
      case OP_NOT: return f_not(formula());
      case OP_AND: { auto l = formula(); return f_and(std::move(l), formula()); }
      case OP_OR: { auto l = formula(); return f_or(std::move(l), formula()); }
      case OP_IMPLIES: { auto l = formula(); return f_implies(std::move(l), formula()); }
      case OP_FORALL: { auto v = var_index(); return forall(v, formula()); }
      case OP_EXISTS: { auto v = var_index(); return exists(v, formula()); }
      default: throw DecodeError(at, "invalid formula opcode");
    }
  }
};

}  // namespace

std::vector<std::uint8_t> serialize(const FormulaPtr& f) {
  std::vector<std::uint8_t> out;
  ser_formula(out, f.get());
  return out;
}

FormulaPtr deserialize(std::span<const std::uint8_t> bytes) {
  Reader r{bytes};
  auto f = r.formula();
  if (r.pos != bytes.size()) throw DecodeError(r.pos, "trailing bytes");
  return f;
}

std::vector<std::uint8_t> to_bytes(const BigInt& n) {
  std::vector<std::uint8_t> out;
  if (n == 0) return out;
  export_bits(n, std::back_inserter(out), 8);
  return out;
}

BigInt from_bytes(std::span<const std::uint8_t> bytes) {
  BigInt n = 0;
  for (auto b : bytes) {
    n <<= 8;
    n |= b;
  }
  return n;
}

GoedelNumber encode(const FormulaPtr& f) {
  return GoedelNumber{from_bytes(serialize(f))};
}

FormulaPtr decode(const GoedelNumber& n) {
  if (n.value < 0) throw DecodeError(0, "negative number");
  auto bytes = to_bytes(n.value);
  if (bytes.empty()) throw DecodeError(0, "leading byte 0x00 invalid");
  return deserialize(bytes);
}

GoedelNumber sub_meta(const GoedelNumber& a, const BigInt& b) {
  FormulaPtr f = decode(a);
  if (!free_vars(f).count(1))
    throw std::invalid_argument("sub_meta: Var(1) is not free in the decoded formula");
  return encode(substitute(f, 1, lit(b)));
}

GoedelNumber imp_code(const GoedelNumber& a, const GoedelNumber& b) {
  return encode(f_implies(decode(a), decode(b)));
}

GoedelNumber v_code(int i, int j, int n) {
  if (n < 1 || i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("v_code: day index out of range");
  // "m >= i -> m = j" with m = Var(0).
  return encode(f_implies(leq(lit(i), var(0)), eq(var(0), lit(j))));
}

FormulaPtr build_template(int n, Variant variant) {
  if (n < 1) throw std::invalid_argument("build_template: day count must be >= 1");
  // m in {1..n}
  FormulaPtr domain = eq(var(0), lit(1));
  for (int i = 2; i <= n; ++i) domain = f_or(domain, eq(var(0), lit(i)));

  auto pr_of = [&](int i, int j) {
    // Pr(Sub(x,x) => v_ij) with x = Var(1).
    return pr(imp_fn(sub_fn(var(1), var(1)),
                     lit(v_code(i, j, n).value)));
  };

  FormulaPtr out = domain;
  for (int i = 1; i <= n; ++i) {
    FormulaPtr ante = pr_of(i, i);
    if (variant == Variant::Exclusive) {
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        ante = f_and(ante, f_not(pr_of(i, j)));
      }
    }
    out = f_and(out, f_implies(ante, f_not(eq(var(0), lit(i)))));
  }
  return out;
}

DiagonalResult diagonalize(const FormulaPtr& tmpl) {
  if (!free_vars(tmpl).count(1))
    throw std::invalid_argument("diagonalize: Var(1) is not free in the template");
  DiagonalResult r;
  r.q = encode(tmpl);
  r.sentence = substitute(tmpl, 1, lit(r.q.value));
  r.s = encode(r.sentence);
  // Fixed point: substituting the template's own code must give the sentence.
  if (r.s != sub_meta(r.q, r.q.value))
    throw std::logic_error("diagonalize: fixed-point identity s = Sub(q,q) failed");
  return r;
}

}  // namespace glab::goedel
