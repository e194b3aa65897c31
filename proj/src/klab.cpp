#include "glab/klab.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace glab::klab {

std::optional<BigInt> run(const Program& p) {
  if (p.bits.size() % 2 != 0) return std::nullopt;
  for (char c : p.bits)
    if (c != '0' && c != '1') return std::nullopt;
  BigInt acc = 0;
  for (std::size_t i = 0; i < p.bits.size(); i += 2) {
    int op = (p.bits[i] - '0') * 2 + (p.bits[i + 1] - '0');
    switch (op) {
      case 0: acc += 1; break;        // INC
      case 1: acc *= 2; break;        // DBL
      case 2: acc *= acc; break;      // SQR
      case 3: return acc;             // HALT
    }
  }
  return acc;
}

namespace {

// Visits valid programs in increasing length, then lexicographic order;
// stops when fn returns false.
template <typename F>
void for_each_program(int max_len, F&& fn) {
  for (int len = 0; len <= max_len; len += 2) {
    std::uint64_t total = 1ull << len;
    for (std::uint64_t code = 0; code < total; ++code) {
      Program p;
      p.bits.resize(len);
      for (int b = 0; b < len; ++b)
        p.bits[b] = ((code >> (len - 1 - b)) & 1) ? '1' : '0';
      if (!fn(p)) return;
    }
  }
}

}  // namespace

std::optional<Program> witness(const BigInt& x, int max_len) {
  if (x < 0) throw std::invalid_argument("witness: negative integer");
  if (max_len > 40) throw std::invalid_argument("witness: bound too large");
  std::optional<Program> found;
  for_each_program(max_len, [&](const Program& p) {
    auto out = run(p);
    if (out && *out == x) {
      found = p;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<int> kolmogorov(const BigInt& x, int max_len) {
  auto w = witness(x, max_len);
  if (!w) return std::nullopt;
  return w->length();
}

CensusReport census(int L, int ceiling) {
  if (L < 0) throw std::invalid_argument("census: L must be >= 0");
  if (L > ceiling)
    throw std::invalid_argument("census: L exceeds the configured ceiling of " +
                                std::to_string(ceiling));
  CensusReport r;
  r.L = L;
  r.range_max = BigInt(1) << (L + 1);
  std::uint64_t range = (1ull << (L + 1)) + 1;  // integers 0..2^{L+1}
  r.k_values.assign(range, -1);

  std::uint64_t reachable = 0;
  for_each_program(L, [&](const Program& p) {
    ++r.program_count;
    auto out = run(p);
    if (out && *out <= r.range_max) {
      auto x = static_cast<std::uint64_t>(*out);
      if (r.k_values[x] < 0) {
        r.k_values[x] = p.length();
        ++reachable;
      }
    }
    return true;
  });
  r.m = range - reachable;
  return r;
}

nlohmann::json census_to_json(const CensusReport& r) {
  nlohmann::json j;
  j["L"] = r.L;
  j["range_max"] = r.range_max.str();
  j["m"] = r.m;
  j["program_count"] = r.program_count;
  auto kv = nlohmann::json::array();
  for (std::size_t x = 0; x < r.k_values.size(); ++x)
    kv.push_back({x, r.k_values[x]});
  j["k_values"] = kv;
  return j;
}

std::string census_to_table(const CensusReport& r) {
  std::ostringstream os;
  os << "L = " << r.L << "   range = [0, " << r.range_max << "]   m = " << r.m
     << "   programs = " << r.program_count << "\n";
  os << std::setw(10) << "x" << std::setw(8) << "K(x)" << "\n";
  for (std::size_t x = 0; x < r.k_values.size(); ++x) {
    os << std::setw(10) << x;
    if (r.k_values[x] >= 0)
      os << std::setw(8) << r.k_values[x];
    else
      os << std::setw(8) << (">" + std::to_string(r.L));
    os << "\n";
  }
  return os.str();
}

}  // namespace glab::klab
