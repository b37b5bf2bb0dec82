#pragma once

#include "genergy/common.hpp"

#include <string>
#include <vector>

namespace genergy {

// Characteristic polynomial with exact integer coefficients:
//   phi(lambda) = sum_{i=0..n} a[i] * lambda^{n-i},  a[0] = 1 for charpolys.
struct IntPoly {
  std::vector<BigInt> a;  // a[0] is the leading coefficient

  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : a(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(a.size()) - 1; }
  const BigInt& coeff(int i) const { return a[i]; }

  bool operator==(const IntPoly& o) const = default;

  // "lambda^6-6lambda^4+9lambda^2-4" with a unicode lambda
  std::string to_string() const;
  // {"n":6,"a":[1,0,-6,0,9,0,-4]}
  std::string to_json() const;
  static IntPoly from_json(const std::string& text);
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_add(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);
// p * lambda^k
IntPoly poly_shift(const IntPoly& p, int k);
IntPoly poly_scale(const IntPoly& p, const BigInt& c);
// constant 1 viewed as a degree-0 polynomial
IntPoly poly_one();
// lambda^k
IntPoly poly_lambda_pow(int k);

// b-coefficient vector of a bipartite graph: b[i] = b_{2i} = (-1)^i a_{2i},
// indices 0..floor(n/2).  n records the source order; sequences are only
// compared between equal orders.
struct BSeq {
  int n = 0;
  std::vector<BigInt> b;

  const BigInt& at(int i) const {
    static const BigInt zero = 0;
    return (i >= 0 && i < static_cast<int>(b.size())) ? b[i] : zero;
  }
  bool operator==(const BSeq& o) const { return n == o.n && b == o.b; }

  std::string to_string() const;
};

// Union product (Sachs):  b_{2k}(G1 u G2) = sum_i b_{2i}(G1) b_{2k-2i}(G2).
BSeq bseq_convolve(const BSeq& x, const BSeq& y);

}  // namespace genergy
