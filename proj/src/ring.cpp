#include "cia/ring.hpp"

#include <sstream>

#include "cia/errors.hpp"

namespace cia {

int reduce_exponent(long long k, int n) {
  if (n < 1) throw DimensionError("reduce_exponent: n must be >= 1");
  long long r = k % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

CyclicPoly::CyclicPoly(int n, int t) : t_(t) {
  if (n < 1) throw DimensionError("CyclicPoly: n must be >= 1");
  if (t < 1 || t > 64) throw DimensionError("CyclicPoly: t must be in [1, 64]");
  c_.assign(static_cast<size_t>(n), 0);
}

CyclicPoly::CyclicPoly(std::vector<Word> coeffs, int t) : t_(t), c_(std::move(coeffs)) {
  if (c_.empty()) throw DimensionError("CyclicPoly: n must be >= 1");
  if (t < 1 || t > 64) throw DimensionError("CyclicPoly: t must be in [1, 64]");
  for (Word& w : c_) w &= word_mask(t_);
}

void CyclicPoly::set_coeff(int pos, Word w) {
  c_[static_cast<size_t>(pos)] = w & word_mask(t_);
}

void CyclicPoly::add_at(int pos, Word w) {
  c_[static_cast<size_t>(pos)] ^= w & word_mask(t_);
}

CyclicPoly shift(const CyclicPoly& p, int k) {
  const int n = p.n();
  const int r = reduce_exponent(k, n);
  CyclicPoly out(n, p.t());
  for (int l = 0; l < n; ++l) out.set_coeff((l + r) % n, p.coeff(l));
  return out;
}

CyclicPoly add(const CyclicPoly& p, const CyclicPoly& q) {
  if (p.n() != q.n() || p.t() != q.t())
    throw DimensionError("add: operands must share n and t");
  CyclicPoly out(p.n(), p.t());
  for (int l = 0; l < p.n(); ++l) out.set_coeff(l, p.coeff(l) ^ q.coeff(l));
  return out;
}

std::set<int> support(const CyclicPoly& p) {
  std::set<int> s;
  for (int l = 0; l < p.n(); ++l)
    if (p.coeff(l) != 0) s.insert(l);
  return s;
}

std::string to_string(const CyclicPoly& p) {
  std::ostringstream os;
  os << "[";
  for (int l = 0; l < p.n(); ++l) {
    if (l) os << ",";
    os << p.coeff(l);
  }
  os << "]";
  return os.str();
}

}  // namespace cia
