// Kolmogorov-complexity laboratory: a tiny bit-coded machine, exact
// exhaustive K computation, and the incompressibility census m(L).
//
// The machine is loop-free, so every program halts and K is exactly
// computable. Programs are sequences of 2-bit opcodes acting on an
// accumulator that starts at 0:
//   00 INC   acc <- acc + 1
//   01 DBL   acc <- acc * 2
//   10 SQR   acc <- acc * acc
//   11 HALT  stop immediately
// A bit string of odd length is not a valid program and produces no output.

#ifndef GLAB_KLAB_HPP
#define GLAB_KLAB_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "glab/syntax.hpp"

namespace glab::klab {

using syntax::BigInt;

struct Program {
  std::string bits;  // '0'/'1' characters

  int length() const { return static_cast<int>(bits.size()); }
};

std::optional<BigInt> run(const Program& p);

// Exact K(x) restricted to programs of length <= max_len bits; nullopt if x
// is not reachable within the bound. Search order: increasing length, then
// lexicographic.
std::optional<int> kolmogorov(const BigInt& x, int max_len);

// First (length-lex) program of length <= max_len that outputs x.
std::optional<Program> witness(const BigInt& x, int max_len);

struct CensusReport {
  int L = 0;
  BigInt range_max;                 // 2^{L+1}; census covers x in [0, range_max]
  std::vector<int> k_values;        // k_values[x] = K(x), or -1 when K(x) > L
  std::uint64_t m = 0;              // count of x with K(x) > L
  std::uint64_t program_count = 0;  // valid programs of length <= L
};

CensusReport census(int L, int ceiling = 16);

nlohmann::json census_to_json(const CensusReport& r);
std::string census_to_table(const CensusReport& r);

}  // namespace glab::klab

#endif
