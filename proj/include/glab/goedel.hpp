// Goedel-numbering codec and the diagonalization engine.
//
// Formulas serialize to a prefix byte code (table in docs/formats.md) and the
// byte string is read as a big-endian integer. The first byte of any formula
// opcode is >= 0x10, so the integer determines the bytes uniquely.

#ifndef GLAB_GOEDEL_HPP
#define GLAB_GOEDEL_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "glab/syntax.hpp"

namespace glab::goedel {

using syntax::BigInt;
using syntax::FormulaPtr;

struct GoedelNumber {
  BigInt value;

  bool operator==(const GoedelNumber& o) const { return value == o.value; }
  bool operator!=(const GoedelNumber& o) const { return value != o.value; }
};

struct DecodeError : std::runtime_error {
  DecodeError(std::size_t offset, const std::string& what)
      : std::runtime_error("decode error at byte " + std::to_string(offset) +
                           ": " + what),
        offset(offset) {}
  std::size_t offset;
};

// Byte-level codec.
std::vector<std::uint8_t> serialize(const FormulaPtr& f);
FormulaPtr deserialize(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> to_bytes(const BigInt& n);
BigInt from_bytes(std::span<const std::uint8_t> bytes);

GoedelNumber encode(const FormulaPtr& f);
FormulaPtr decode(const GoedelNumber& n);

// The meta-level Sub operation: a must decode to a formula with Var(1) free.
GoedelNumber sub_meta(const GoedelNumber& a, const BigInt& b);

// Code of the implication between two coded statements.
GoedelNumber imp_code(const GoedelNumber& a, const GoedelNumber& b);

// Code of "lit i <= v0 -> v0 = lit j" (Var(0) plays the exam day m).
GoedelNumber v_code(int i, int j, int n);

enum class Variant { Plain, Exclusive };

// The self-reference template Q(x) over free Var(1) = x and Var(0) = m.
FormulaPtr build_template(int n, Variant variant);

struct DiagonalResult {
  GoedelNumber q;            // code of the template
  FormulaPtr sentence;       // template with Lit(q) substituted for Var(1)
  GoedelNumber s;            // code of the sentence; s == sub_meta(q, q)
};

DiagonalResult diagonalize(const FormulaPtr& tmpl);

}  // namespace glab::goedel

#endif
