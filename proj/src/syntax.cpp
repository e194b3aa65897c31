#include "glab/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

namespace glab::syntax {

namespace {

TermPtr make_term(TermKind k, TermPtr l = nullptr, TermPtr r = nullptr) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

FormulaPtr make_formula(FormulaKind k) { return std::make_shared<Formula>(Formula{k, nullptr, nullptr, nullptr, nullptr, 0}); }

}  // namespace

TermPtr zero() {
  static const TermPtr z = make_term(TermKind::Zero);
  return z;
}

TermPtr succ(TermPtr t) { return make_term(TermKind::Succ, std::move(t)); }
TermPtr plus(TermPtr l, TermPtr r) { return make_term(TermKind::Plus, std::move(l), std::move(r)); }
TermPtr times(TermPtr l, TermPtr r) { return make_term(TermKind::Times, std::move(l), std::move(r)); }
TermPtr sub_fn(TermPtr code, TermPtr arg) { return make_term(TermKind::SubFn, std::move(code), std::move(arg)); }
TermPtr imp_fn(TermPtr ante, TermPtr cons) { return make_term(TermKind::ImpFn, std::move(ante), std::move(cons)); }

TermPtr var(std::uint64_t index) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->var = index;
  return t;
}

TermPtr lit(BigInt value) {
  if (value < 0) throw std::invalid_argument("lit: negative value");
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Lit;
  t->lit = std::move(value);
  return t;
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Zero: return true;
    case TermKind::Succ: return equal(a->left, b->left);
    case TermKind::Var: return a->var == b->var;
    case TermKind::Lit: return a->lit == b->lit;
    case TermKind::Plus:
    case TermKind::Times:
    case TermKind::SubFn:
    case TermKind::ImpFn:
      return equal(a->left, b->left) && equal(a->right, b->right);
  }
  return false;
}

FormulaPtr eq(TermPtr l, TermPtr r) {
  auto f = make_formula(FormulaKind::Eq);
  auto m = std::const_pointer_cast<Formula>(f);
  m->t1 = std::move(l);
  m->t2 = std::move(r);
  return f;
}

FormulaPtr leq(TermPtr l, TermPtr r) {
  auto f = std::const_pointer_cast<Formula>(make_formula(FormulaKind::Leq));
  f->t1 = std::move(l);
  f->t2 = std::move(r);
  return f;
}

FormulaPtr k_le(TermPtr x, TermPtr bound) {
  auto f = std::const_pointer_cast<Formula>(make_formula(FormulaKind::KLe));
  f->t1 = std::move(x);
  f->t2 = std::move(bound);
  return f;
}

FormulaPtr pr(TermPtr code) {
  auto f = std::const_pointer_cast<Formula>(make_formula(FormulaKind::Pr));
  f->t1 = std::move(code);
  return f;
}

FormulaPtr f_not(FormulaPtr g) {
  auto f = std::const_pointer_cast<Formula>(make_formula(FormulaKind::Not));
  f->f1 = std::move(g);
  return f;
}

static FormulaPtr binop(FormulaKind k, FormulaPtr l, FormulaPtr r) {
  auto f = std::const_pointer_cast<Formula>(make_formula(k));
  f->f1 = std::move(l);
  f->f2 = std::move(r);
  return f;
}

FormulaPtr f_and(FormulaPtr l, FormulaPtr r) { return binop(FormulaKind::And, std::move(l), std::move(r)); }
FormulaPtr f_or(FormulaPtr l, FormulaPtr r) { return binop(FormulaKind::Or, std::move(l), std::move(r)); }
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r) { return binop(FormulaKind::Implies, std::move(l), std::move(r)); }

static FormulaPtr quant(FormulaKind k, std::uint64_t v, FormulaPtr body) {
  auto f = std::const_pointer_cast<Formula>(make_formula(k));
  f->var = v;
  f->f1 = std::move(body);
  return f;
}

FormulaPtr forall(std::uint64_t v, FormulaPtr body) { return quant(FormulaKind::ForAll, v, std::move(body)); }
FormulaPtr exists(std::uint64_t v, FormulaPtr body) { return quant(FormulaKind::Exists, v, std::move(body)); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Leq:
    case FormulaKind::KLe:
      return equal(a->t1, b->t1) && equal(a->t2, b->t2);
    case FormulaKind::Pr:
      return equal(a->t1, b->t1);
    case FormulaKind::Not:
      return equal(a->f1, b->f1);
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return equal(a->f1, b->f1) && equal(a->f2, b->f2);
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      return a->var == b->var && equal(a->f1, b->f1);
  }
  return false;
}

std::set<std::uint64_t> term_vars(const TermPtr& t) {
  std::set<std::uint64_t> out;
  std::vector<const Term*> stack{t.get()};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (!cur) continue;
    if (cur->kind == TermKind::Var) out.insert(cur->var);
    stack.push_back(cur->left.get());
    stack.push_back(cur->right.get());
  }
  return out;
}

static void free_vars_rec(const Formula* f, std::set<std::uint64_t>& bound,
                          std::set<std::uint64_t>& out) {
  switch (f->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Leq:
    case FormulaKind::KLe:
    case FormulaKind::Pr: {
      for (const TermPtr* tp : {&f->t1, &f->t2}) {
        if (!*tp) continue;
        for (auto v : term_vars(*tp))
          if (!bound.count(v)) out.insert(v);
      }
      return;
    }
    case FormulaKind::Not:
      free_vars_rec(f->f1.get(), bound, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      free_vars_rec(f->f1.get(), bound, out);
      free_vars_rec(f->f2.get(), bound, out);
      return;
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f->var).second;
      free_vars_rec(f->f1.get(), bound, out);
      if (fresh) bound.erase(f->var);
      return;
    }
  }
}

std::set<std::uint64_t> free_vars(const FormulaPtr& f) {
  std::set<std::uint64_t> bound, out;
  free_vars_rec(f.get(), bound, out);
  return out;
}

// Largest variable index occurring anywhere (free or bound); 0 if none.
static void all_vars(const Formula* f, std::set<std::uint64_t>& out) {
  switch (f->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Leq:
    case FormulaKind::KLe:
    case FormulaKind::Pr:
      if (f->t1) for (auto v : term_vars(f->t1)) out.insert(v);
      if (f->t2) for (auto v : term_vars(f->t2)) out.insert(v);
      return;
    case FormulaKind::Not:
      all_vars(f->f1.get(), out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      all_vars(f->f1.get(), out);
      all_vars(f->f2.get(), out);
      return;
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      out.insert(f->var);
      all_vars(f->f1.get(), out);
      return;
  }
}

static TermPtr subst_term(const TermPtr& in, std::uint64_t v, const TermPtr& t) {
  if (!in) return nullptr;
  switch (in->kind) {
    case TermKind::Zero:
    case TermKind::Lit:
      return in;
    case TermKind::Var:
      return in->var == v ? t : in;
    case TermKind::Succ:
      return succ(subst_term(in->left, v, t));
    case TermKind::Plus:
      return plus(subst_term(in->left, v, t), subst_term(in->right, v, t));
    case TermKind::Times:
      return times(subst_term(in->left, v, t), subst_term(in->right, v, t));
    case TermKind::SubFn:
      return sub_fn(subst_term(in->left, v, t), subst_term(in->right, v, t));
    case TermKind::ImpFn:
      return imp_fn(subst_term(in->left, v, t), subst_term(in->right, v, t));
  }
  return in;
}

FormulaPtr substitute(const FormulaPtr& f, std::uint64_t v, const TermPtr& t) {
  switch (f->kind) {
    case FormulaKind::Eq:
      return eq(subst_term(f->t1, v, t), subst_term(f->t2, v, t));
    case FormulaKind::Leq:
      return leq(subst_term(f->t1, v, t), subst_term(f->t2, v, t));
    case FormulaKind::KLe:
      return k_le(subst_term(f->t1, v, t), subst_term(f->t2, v, t));
    case FormulaKind::Pr:
      return pr(subst_term(f->t1, v, t));
    case FormulaKind::Not:
      return f_not(substitute(f->f1, v, t));
    case FormulaKind::And:
      return f_and(substitute(f->f1, v, t), substitute(f->f2, v, t));
    case FormulaKind::Or:
      return f_or(substitute(f->f1, v, t), substitute(f->f2, v, t));
    case FormulaKind::Implies:
      return f_implies(substitute(f->f1, v, t), substitute(f->f2, v, t));
    case FormulaKind::ForAll:
    case FormulaKind::Exists: {
      if (f->var == v) return f;  // occurrence is bound
      auto free_body = free_vars(f->f1);
      if (!free_body.count(v)) return f;  // nothing to substitute below
      auto tvars = term_vars(t);
      std::uint64_t bv = f->var;
      FormulaPtr body = f->f1;
      if (tvars.count(bv)) {
        // Capture: rename the bound variable to a fresh index.
        std::set<std::uint64_t> used;
        all_vars(f->f1.get(), used);
        used.insert(tvars.begin(), tvars.end());
        used.insert(v);
        std::uint64_t fresh = *used.rbegin() + 1;
        body = substitute(body, bv, var(fresh));
        bv = fresh;
      }
      body = substitute(body, v, t);
      return f->kind == FormulaKind::ForAll ? forall(bv, body) : exists(bv, body);
    }
  }
  return f;
}

// ---------------------------------------------------------------------------
// Printing

std::string print(const TermPtr& t) {
  std::ostringstream os;
  struct P {
    std::ostringstream& os;
    void go(const Term* t) {
      switch (t->kind) {
        case TermKind::Zero: os << "0"; return;
        case TermKind::Succ: os << "S("; go(t->left.get()); os << ")"; return;
        case TermKind::Plus: pair("plus", t); return;
        case TermKind::Times: pair("times", t); return;
        case TermKind::SubFn: pair("sub", t); return;
        case TermKind::ImpFn: pair("imp", t); return;
        case TermKind::Var: os << "v" << t->var; return;
        case TermKind::Lit: os << "lit " << t->lit; return;
      }
    }
    void pair(const char* name, const Term* t) {
      os << name << "(";
      go(t->left.get());
      os << ", ";
      go(t->right.get());
      os << ")";
    }
  } p{os};
  p.go(t.get());
  return os.str();
}

static void print_rec(std::ostringstream& os, const Formula* f) {
  switch (f->kind) {
    case FormulaKind::Eq:
      os << print(f->t1) << " = " << print(f->t2);
      return;
    case FormulaKind::Leq:
      os << print(f->t1) << " <= " << print(f->t2);
      return;
    case FormulaKind::KLe:
      os << "KLe(" << print(f->t1) << ", " << print(f->t2) << ")";
      return;
    case FormulaKind::Pr:
      os << "Pr(" << print(f->t1) << ")";
      return;
    case FormulaKind::Not:
      os << "~";
      print_rec(os, f->f1.get());
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      const char* op = f->kind == FormulaKind::And ? " & "
                       : f->kind == FormulaKind::Or ? " | "
                                                    : " -> ";
      os << "(";
      print_rec(os, f->f1.get());
      os << op;
      print_rec(os, f->f2.get());
      os << ")";
      return;
    }
    case FormulaKind::ForAll:
    case FormulaKind::Exists:
      os << (f->kind == FormulaKind::ForAll ? "forall v" : "exists v") << f->var
         << " ";
      print_rec(os, f->f1.get());
      return;
  }
}

std::string print(const FormulaPtr& f) {
  std::ostringstream os;
  print_rec(os, f.get());
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool try_consume(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& s) {
    if (!try_consume(s)) throw ParseError(pos, "expected '" + s + "'");
  }

  // Peeks a full identifier without consuming.
  std::string peek_word() {
    skip_ws();
    std::size_t p = pos;
    while (p < text.size() && (std::isalnum(static_cast<unsigned char>(text[p])) || text[p] == '_')) ++p;
    return text.substr(pos, p - pos);
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (pos == start) throw ParseError(pos, "expected identifier");
    return text.substr(start, pos - start);
  }

  BigInt number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError(pos, "expected number");
    return BigInt(text.substr(start, pos - start));
  }

  std::uint64_t index() {
    BigInt n = number();
    if (n > std::numeric_limits<std::uint64_t>::max())
      throw ParseError(pos, "variable index too large");
    return static_cast<std::uint64_t>(n);
  }
};

struct Parser {
  Lexer lx;

  TermPtr term() {
    lx.skip_ws();
    std::size_t at = lx.pos;
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt n = lx.number();
      if (n != 0) throw ParseError(at, "bare numerals other than 0 must be written 'lit n'");
      return zero();
    }
    if (c == 'v' ) {
      // v<digits> or v <digits>
      lx.pos++;
      return var(lx.index());
    }
    std::string w = lx.word();
    if (w == "S") return one_arg([](TermPtr t) { return succ(std::move(t)); });
    if (w == "plus") return two_arg(plus);
    if (w == "times") return two_arg(times);
    if (w == "sub") return two_arg(sub_fn);
    if (w == "imp") return two_arg(imp_fn);
    if (w == "lit") return lit(lx.number());
    throw ParseError(at, "unknown term head '" + w + "'");
  }

  TermPtr one_arg(const std::function<TermPtr(TermPtr)>& mk) {
    lx.expect("(");
    auto t = term();
    lx.expect(")");
    return mk(t);
  }

  TermPtr two_arg(TermPtr (*mk)(TermPtr, TermPtr)) {
    lx.expect("(");
    auto a = term();
    lx.expect(",");
    auto b = term();
    lx.expect(")");
    return mk(std::move(a), std::move(b));
  }

  FormulaPtr formula() {
    lx.skip_ws();
    std::size_t at = lx.pos;
    char c = lx.peek();
    if (c == '~') {
      lx.pos++;
      return f_not(formula());
    }
    if (c == '(') {
      lx.pos++;
      auto l = formula();
      FormulaPtr (*mk)(FormulaPtr, FormulaPtr) = nullptr;
      if (lx.try_consume(")")) return l;  // redundant grouping
      if (lx.try_consume("->")) mk = f_implies;
      else if (lx.try_consume("&")) mk = f_and;
      else if (lx.try_consume("|")) mk = f_or;
      else throw ParseError(lx.pos, "expected '->', '&', '|' or ')'");
      auto r = formula();
      lx.expect(")");
      return mk(std::move(l), std::move(r));
    }
    std::string w = lx.peek_word();
    if (w == "KLe") {
      lx.word();
      lx.expect("(");
      auto a = term();
      lx.expect(",");
      auto b = term();
      lx.expect(")");
      return k_le(std::move(a), std::move(b));
    }
    if (w == "Pr") {
      lx.word();
      lx.expect("(");
      auto a = term();
      lx.expect(")");
      return pr(std::move(a));
    }
    if (w == "forall" || w == "exists") {
      lx.word();
      lx.skip_ws();
      if (lx.peek() != 'v') throw ParseError(lx.pos, "expected variable after quantifier");
      lx.pos++;
      std::uint64_t v = lx.index();
      auto body = formula();
      return w == "forall" ? forall(v, std::move(body)) : exists(v, std::move(body));
    }
    // Atom: term (= | <=) term.
    auto l = term();
    if (lx.try_consume("<=")) {
      auto r = term();
      return leq(std::move(l), std::move(r));
    }
    if (lx.try_consume("=")) {
      auto r = term();
      return eq(std::move(l), std::move(r));
    }
    throw ParseError(at, "expected '=' or '<=' after term");
  }
};

}  // namespace

FormulaPtr parse(const std::string& text) {
  Parser p{Lexer{text}};
  auto f = p.formula();
  if (!p.lx.eof()) throw ParseError(p.lx.pos, "trailing input");
  return f;
}

TermPtr parse_term(const std::string& text) {
  Parser p{Lexer{text}};
  auto t = p.term();
  if (!p.lx.eof()) throw ParseError(p.lx.pos, "trailing input");
  return t;
}

}  // namespace glab::syntax
