#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace cia {

// Coefficient word. Submessages are t-bit strings, t <= 64; addition is XOR,
// so every element is its own inverse and cancellation is a single XOR.
using Word = std::uint64_t;

constexpr Word word_mask(int t) {
  return t >= 64 ? ~Word{0} : ((Word{1} << t) - 1);
}

// Reduce an arbitrary (possibly negative) exponent to the canonical residue
// in [0, n).
int reduce_exponent(long long k, int n);

// Element of F(x)/(x^n - 1): n coefficient words of t bits each.
class CyclicPoly {
 public:
  CyclicPoly(int n, int t);
  CyclicPoly(std::vector<Word> coeffs, int t);

  int n() const { return static_cast<int>(c_.size()); }
  int t() const { return t_; }
  Word coeff(int pos) const { return c_[static_cast<size_t>(pos)]; }
  void set_coeff(int pos, Word w);
  // XOR-accumulate a word into one position.
  void add_at(int pos, Word w);

  bool operator==(const CyclicPoly&) const = default;

 private:
  int t_;
  std::vector<Word> c_;
};

// Multiply by x^k: coefficient at l moves to (l + k) mod n.
CyclicPoly shift(const CyclicPoly& p, int k);

// Coefficient-wise XOR. Throws DimensionError on n or t mismatch.
CyclicPoly add(const CyclicPoly& p, const CyclicPoly& q);

// Positions with nonzero coefficient.
std::set<int> support(const CyclicPoly& p);

std::string to_string(const CyclicPoly& p);

}  // namespace cia
