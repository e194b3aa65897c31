// First-order arithmetic syntax kernel: terms, formulas, parsing,
// canonical printing, capture-avoiding substitution.

#ifndef GLAB_SYNTAX_HPP
#define GLAB_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace glab::syntax {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Terms

enum class TermKind { Zero, Succ, Plus, Times, Var, Lit, SubFn, ImpFn };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  TermPtr left;    // Succ/Plus/Times/SubFn/ImpFn
  TermPtr right;   // Plus/Times/SubFn/ImpFn
  std::uint64_t var = 0;  // Var index
  BigInt lit;             // Lit value, nonnegative
};

TermPtr zero();
TermPtr succ(TermPtr t);
TermPtr plus(TermPtr l, TermPtr r);
TermPtr times(TermPtr l, TermPtr r);
TermPtr var(std::uint64_t index);
TermPtr lit(BigInt value);
TermPtr sub_fn(TermPtr code, TermPtr arg);
TermPtr imp_fn(TermPtr ante, TermPtr cons);

bool equal(const TermPtr& a, const TermPtr& b);

// ---------------------------------------------------------------------------
// Formulas

enum class FormulaKind { Eq, Leq, KLe, Pr, Not, And, Or, Implies, ForAll, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  TermPtr t1, t2;      // atoms; Pr uses t1 only
  FormulaPtr f1, f2;   // connectives; Not/ForAll/Exists use f1 only
  std::uint64_t var = 0;  // quantifier variable index
};

FormulaPtr eq(TermPtr l, TermPtr r);
FormulaPtr leq(TermPtr l, TermPtr r);
FormulaPtr k_le(TermPtr x, TermPtr bound);
FormulaPtr pr(TermPtr code);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_implies(FormulaPtr l, FormulaPtr r);
FormulaPtr forall(std::uint64_t v, FormulaPtr body);
FormulaPtr exists(std::uint64_t v, FormulaPtr body);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::uint64_t> free_vars(const FormulaPtr& f);
std::set<std::uint64_t> term_vars(const TermPtr& t);

// Replaces every free occurrence of Var(v) by t; bound variables are renamed
// to fresh indices when t's variables would be captured.
FormulaPtr substitute(const FormulaPtr& f, std::uint64_t v, const TermPtr& t);

// ---------------------------------------------------------------------------
// Concrete syntax (grammar in docs/grammar.md)

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + what),
        position(pos) {}
  std::size_t position;
};

std::string print(const TermPtr& t);
std::string print(const FormulaPtr& f);
FormulaPtr parse(const std::string& text);
TermPtr parse_term(const std::string& text);

}  // namespace glab::syntax

#endif
