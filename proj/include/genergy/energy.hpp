#pragma once

#include "genergy/graph.hpp"
#include "genergy/intpoly.hpp"

#include <string>

namespace genergy {

// Dyadic rational num / 2^exp, kept normalized (num odd, or num = 0 and exp = 0).
// All enclosure endpoints are dyadic so interval arithmetic stays exact.
struct Dyadic {
  BigInt num = 0;
  int exp = 0;

  static Dyadic make(BigInt n, int e);
  static Dyadic from_double(double x);  // doubles are dyadic; conversion is exact
  double to_double() const;
  std::string to_string() const;
};

Dyadic operator+(const Dyadic& x, const Dyadic& y);
Dyadic operator-(const Dyadic& x, const Dyadic& y);
bool operator<(const Dyadic& x, const Dyadic& y);
bool operator<=(const Dyadic& x, const Dyadic& y);
bool operator==(const Dyadic& x, const Dyadic& y);

// Certified interval around E(G) = sum |lambda_i|.
struct EnergyEnclosure {
  Dyadic lo, hi;
  std::string method = "sturm";
  double width() const { return (hi - lo).to_double(); }
  bool contains(double x) const { return lo.to_double() <= x && x <= hi.to_double(); }
};

// Isolates all real roots of the exact characteristic polynomial with Sturm
// sequences over exact arithmetic and refines by dyadic bisection until the
// enclosure width is <= tol.  Bipartite graphs go through the squared-variable
// polynomial (half the degree, roots come in +- pairs); general graphs use
// the degree-n polynomial in lambda^2.  Square-free factorization keeps
// Sturm isolation valid with repeated eigenvalues.
EnergyEnclosure energy_certified(const Graph& g, double tol = 1e-9);

// Coulson-integral estimate by adaptive quadrature; diagnostic only (the
// certified path is authoritative).  Uses the bipartite single-sum form when
// the graph is bipartite and the general two-sum form otherwise.  Throws
// QuadratureFailure if the estimated error exceeds target_err.
double coulson_energy(const Graph& g, double target_err = 1e-6);

enum class EnergyOrder { Less, Greater, Undecided };
const char* energy_order_name(EnergyOrder o);

// Refines both enclosures until they separate or both widths drop below
// gap_tol; Undecided means |E(g1) - E(g2)| < gap_tol could not be resolved.
EnergyOrder energy_compare(const Graph& g1, const Graph& g2, double gap_tol = 1e-6);

}  // namespace genergy
