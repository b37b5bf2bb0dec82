#include "genergy/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <functional>
#include <tuple>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "genergy/charpoly.hpp"

namespace genergy {

// ---- dyadic rationals ----

Dyadic Dyadic::make(BigInt n, int e) {
  if (e < 0) {
    n <<= -e;
    e = 0;
  }
  while (n != 0 && e > 0 && (n & 1) == 0) {
    n >>= 1;
    --e;
  }
  if (n == 0) e = 0;
  return Dyadic{std::move(n), e};
}

Dyadic Dyadic::from_double(double x) {
  if (x == 0) return Dyadic{};
  int e2 = 0;
  double m = std::frexp(x, &e2);  // x = m * 2^e2, |m| in [0.5, 1)
  auto num = BigInt(static_cast<long long>(std::ldexp(m, 53)));
  return make(std::move(num), 53 - e2);
}

double Dyadic::to_double() const { return std::ldexp(num.convert_to<double>(), -exp); }

std::string Dyadic::to_string() const { return num.str() + "/2^" + std::to_string(exp); }

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  int e = std::max(x.exp, y.exp);
  return Dyadic::make((x.num << (e - x.exp)) + (y.num << (e - y.exp)), e);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) {
  int e = std::max(x.exp, y.exp);
  return Dyadic::make((x.num << (e - x.exp)) - (y.num << (e - y.exp)), e);
}

bool operator<(const Dyadic& x, const Dyadic& y) {
  int e = std::max(x.exp, y.exp);
  return (x.num << (e - x.exp)) < (y.num << (e - y.exp));
}

bool operator<=(const Dyadic& x, const Dyadic& y) { return !(y < x); }
bool operator==(const Dyadic& x, const Dyadic& y) { return x.num == y.num && x.exp == y.exp; }

namespace {

Dyadic midpoint(const Dyadic& x, const Dyadic& y) {
  int e = std::max(x.exp, y.exp);
  return Dyadic::make((x.num << (e - x.exp)) + (y.num << (e - y.exp)), e + 1);
}

Dyadic mul_int(const Dyadic& x, const BigInt& c) { return Dyadic::make(x.num * c, x.exp); }

// ---- integer polynomials, ascending coefficients ----

using ZPoly = std::vector<BigInt>;  // p(x) = sum c[j] x^j

void strip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly derivative(const ZPoly& p) {
  ZPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<int>(j));
  return d;
}

// sign of p(num/2^e), exactly: sign of sum c_j num^j 2^{e(d-j)}
int sign_at(const ZPoly& p, const Dyadic& x) {
  if (p.empty()) return 0;
  BigInt acc = 0, pw = 1;
  int d = deg(p);
  for (int j = 0; j <= d; ++j) {
    acc += p[j] * pw * (BigInt(1) << static_cast<std::size_t>(x.exp) * (d - j));
    pw *= x.num;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

void make_primitive(ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// ---- rational polynomials for gcd / Yun / Sturm remainders ----

using QPoly = std::vector<BigRat>;

QPoly to_q(const ZPoly& p) {
  QPoly q;
  for (const auto& c : p) q.emplace_back(c);
  return q;
}

void qstrip(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  qstrip(a);
  while (a.size() >= b.size() && !a.empty()) {
    BigRat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    a.pop_back();
    qstrip(a);
  }
  return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
  qstrip(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigRat(0));
  while (a.size() >= b.size() && !a.empty()) {
    BigRat f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    q[off] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
    a.pop_back();
    qstrip(a);
  }
  return q;
}

QPoly qderiv(const QPoly& p) {
  QPoly d;
  for (std::size_t j = 1; j < p.size(); ++j) d.push_back(p[j] * static_cast<int>(j));
  return d;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  qstrip(a);
  return a;
}

QPoly qmonic(QPoly p) {
  qstrip(p);
  if (p.empty()) return p;
  BigRat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

QPoly qgcd(QPoly a, QPoly b) {
  qstrip(a);
  qstrip(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return qmonic(a);
}

// Monic divisors of monic integer polynomials have integer coefficients.
ZPoly to_z_exact(const QPoly& q) {
  ZPoly z;
  for (const auto& c : q) {
    if (boost::multiprecision::denominator(c) != 1) fail(Errc::Internal, "expected integer polynomial");
    z.push_back(boost::multiprecision::numerator(c));
  }
  return z;
}

// Yun square-free decomposition of a monic integer polynomial.
std::vector<std::pair<ZPoly, int>> yun_squarefree(const ZPoly& p) {
  std::vector<std::pair<ZPoly, int>> out;
  if (deg(p) < 1) return out;
  QPoly f = to_q(p);
  QPoly fp = qderiv(f);
  QPoly a0 = qgcd(f, fp);
  if (a0.size() <= 1) {
    out.emplace_back(p, 1);
    return out;
  }
  QPoly c = qdiv(f, a0);
  QPoly d = qsub(qdiv(fp, a0), qderiv(c));
  for (int mult = 1; c.size() > 1; ++mult) {
    QPoly fac = qgcd(c, d);
    if (fac.size() > 1) out.emplace_back(to_z_exact(qmonic(fac)), mult);
    QPoly c2 = qdiv(c, fac);
    d = qsub(qdiv(d, fac), qderiv(c2));
    c = std::move(c2);
  }
  return out;
}

// Sturm chain of a square-free integer polynomial; members primitivized
// (positive scaling preserves sign sequences).
std::vector<ZPoly> sturm_chain(const ZPoly& p) {
  std::vector<ZPoly> chain;
  chain.push_back(p);
  ZPoly d = derivative(p);
  strip(d);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (chain.back().size() > 1) {
    QPoly r = qrem(to_q(chain[chain.size() - 2]), to_q(chain.back()));
    if (r.empty()) break;
    BigInt den = 1;
    for (const auto& c : r) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
    ZPoly z;
    for (const auto& c : r)
      z.push_back(-boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
    make_primitive(z);
    chain.push_back(std::move(z));
  }
  return chain;
}

// Sign variations with zeros skipped; V(lo) - V(hi) counts roots in (lo, hi].
int variations(const std::vector<ZPoly>& chain, const Dyadic& x) {
  int last = 0, var = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// floor/ceil of sqrt(x) on the 2^-prec grid (x >= 0)
Dyadic sqrt_floor(const Dyadic& x, int prec) {
  int shift = 2 * prec - x.exp;
  BigInt scaled = shift >= 0 ? BigInt(x.num << shift) : BigInt(x.num >> -shift);
  return Dyadic::make(boost::multiprecision::sqrt(scaled), prec);
}

Dyadic sqrt_ceil(const Dyadic& x, int prec) {
  int shift = 2 * prec - x.exp;
  BigInt scaled = shift >= 0 ? BigInt(x.num << shift) : BigInt((x.num >> -shift) + 1);
  BigInt r = boost::multiprecision::sqrt(scaled);
  if (r * r < scaled) ++r;
  return Dyadic::make(std::move(r), prec);
}

// Divide monic p by (x - r), r an exact integer root.
ZPoly deflate_int_root(const ZPoly& p, const BigInt& r) {
  ZPoly q(p.size() - 1);
  BigInt carry = p.back();
  for (int j = deg(p) - 1; j >= 0; --j) {
    q[j] = carry;
    carry = p[j] + carry * r;
  }
  if (carry != 0) fail(Errc::Internal, "deflation by non-root");
  return q;
}

constexpr int kMaxBisections = 200000;

struct MuRoot {
  int factor_id = -1;  // -1: exact integer root, sqrt may still be irrational
  Dyadic lo, hi;       // mu-interval; lo == hi for exact roots
  BigInt weight;       // eigenvalue multiplicity x bipartite doubling
};

// The squared-eigenvalue polynomial: monic with roots {lambda_i^2 != 0}.
// Returns the polynomial and the per-root eigenvalue duplication (2 for the
// bipartite half-degree route, else 1).
std::pair<ZPoly, int> squared_eigenvalue_poly(const Graph& g, const IntPoly& phi, bool bip) {
  const int n = g.n;
  ZPoly mu;
  int dup;
  if (bip) {
    int m = n / 2;
    mu.assign(m + 1, BigInt(0));
    for (int i = 0; i <= m; ++i) mu[m - i] = phi.a[2 * i];
    dup = 2;
  } else {
    // psi(y) = (-1)^n (E(y)^2 - y O(y)^2), phi(lambda) = E(lambda^2) + lambda O(lambda^2)
    ZPoly E, O;
    for (int i = 0; i <= n; ++i) {
      int e = n - i;
      if (e % 2 == 0) {
        if (static_cast<int>(E.size()) <= e / 2) E.resize(e / 2 + 1, BigInt(0));
        E[e / 2] = phi.a[i];
      } else {
        if (static_cast<int>(O.size()) <= (e - 1) / 2) O.resize((e - 1) / 2 + 1, BigInt(0));
        O[(e - 1) / 2] = phi.a[i];
      }
    }
    ZPoly acc(std::max(2 * E.size(), 2 * O.size()), BigInt(0));
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = 0; j < E.size(); ++j) acc[i + j] += E[i] * E[j];
    for (std::size_t i = 0; i < O.size(); ++i)
      for (std::size_t j = 0; j < O.size(); ++j) acc[i + j + 1] -= O[i] * O[j];
    if (n % 2 != 0)
      for (auto& c : acc) c = -c;
    mu = std::move(acc);
    dup = 1;
  }
  strip(mu);
  while (!mu.empty() && mu[0] == 0) mu.erase(mu.begin());  // drop zero eigenvalues
  return {mu, dup};
}

}  // namespace

const char* energy_order_name(EnergyOrder o) {
  switch (o) {
    case EnergyOrder::Less: return "Less";
    case EnergyOrder::Greater: return "Greater";
    case EnergyOrder::Undecided: return "Undecided";
  }
  return "?";
}

EnergyEnclosure energy_certified(const Graph& g, double tol) {
  if (tol <= 0) fail(Errc::BadParam, "energy_certified: tol must be positive");
  if (g.n > 64) fail(Errc::TooLarge, "energy_certified: order exceeds 64");
  EnergyEnclosure enc;
  if (g.n == 0 || g.edge_count() == 0) return enc;  // every eigenvalue is zero

  IntPoly phi = charpoly_oracle(g);
  auto [mu, dup] = squared_eigenvalue_poly(g, phi, is_bipartite(g));
  if (deg(mu) < 1) return enc;

  int maxdeg = 0;
  for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
  const BigInt root_cap = BigInt(maxdeg) * maxdeg;  // spectral radius <= max degree

  std::vector<MuRoot> roots;
  std::vector<ZPoly> factors;  // deflated square-free factors, for refinement
  for (auto& [factor, mult] : yun_squarefree(mu)) {
    ZPoly f = factor;
    BigInt weight = BigInt(mult) * dup;
    for (BigInt r = 1; r <= root_cap && deg(f) >= 1; ++r) {
      Dyadic d = Dyadic::make(r, 0);
      if (sign_at(f, d) == 0) {
        roots.push_back({-1, d, d, weight});
        f = deflate_int_root(f, r);
      }
    }
    if (deg(f) < 1) continue;
    int fid = static_cast<int>(factors.size());
    BigInt bound = 0;
    for (const auto& c : f) bound = std::max(bound, BigInt(boost::multiprecision::abs(c)));
    Dyadic U = Dyadic::make(bound + 1, 0);
    auto chain = sturm_chain(f);
    Dyadic zero;
    std::vector<std::tuple<Dyadic, Dyadic, int, int>> stack{
        {zero, U, variations(chain, zero), variations(chain, U)}};
    int guard = 0;
    while (!stack.empty()) {
      if (++guard > kMaxBisections) fail(Errc::ToleranceUnreachable, "root isolation did not converge");
      auto [lo, hi, vlo, vhi] = stack.back();
      stack.pop_back();
      int count = vlo - vhi;
      if (count == 0) continue;
      if (count == 1) {
        roots.push_back({fid, lo, hi, weight});
        continue;
      }
      Dyadic mid = midpoint(lo, hi);
      int vm = variations(chain, mid);
      stack.emplace_back(lo, mid, vlo, vm);
      stack.emplace_back(mid, hi, vm, vhi);
    }
    factors.push_back(std::move(f));
  }

  // Per-root budget: every weighted sqrt enclosure gets tol / W so the sum
  // of widths is at most tol.
  BigInt W = 0;
  for (const auto& r : roots) W += r.weight;
  if (W == 0) return enc;
  Dyadic tol_d = Dyadic::from_double(tol);
  int prec = 8;
  {
    // 2 * 2^-prec * W <= tol / 2   (sqrt-grid slack well below the budget)
    Dyadic grid = Dyadic::make(4 * W, prec);
    while (tol_d < grid && prec < 8192) {
      ++prec;
      grid = Dyadic::make(4 * W, prec);
    }
    if (prec >= 8192) fail(Errc::ToleranceUnreachable, "tolerance below dyadic precision cap");
  }

  Dyadic total_lo, total_hi;
  for (auto& r : roots) {
    Dyadic slo, shi;
    if (r.factor_id < 0) {
      // exact integer mu: sqrt is exact when mu is a perfect square
      BigInt s = boost::multiprecision::sqrt(r.lo.num);
      if (s * s == r.lo.num) {
        slo = shi = Dyadic::make(s, 0);
      } else {
        slo = sqrt_floor(r.lo, prec);
        shi = sqrt_ceil(r.hi, prec);
      }
    } else {
      const ZPoly& f = factors[r.factor_id];
      int slo_sign = sign_at(f, r.lo);
      int guard = 0;
      for (;;) {
        if (++guard > kMaxBisections) fail(Errc::ToleranceUnreachable, "root refinement did not converge");
        slo = sqrt_floor(r.lo, prec);
        shi = sqrt_ceil(r.hi, prec);
        if (mul_int(shi - slo, W) <= tol_d) break;
        Dyadic mid = midpoint(r.lo, r.hi);
        int sm = sign_at(f, mid);
        if (sm == slo_sign) {
          r.lo = mid;
        } else {
          r.hi = mid;  // sm == 0 cannot occur: dyadic roots were deflated
        }
      }
    }
    total_lo = total_lo + mul_int(slo, r.weight);
    total_hi = total_hi + mul_int(shi, r.weight);
  }
  enc.lo = total_lo;
  enc.hi = total_hi;
  return enc;
}

namespace {

double poly_eval(const std::vector<double>& c, double x) {
  double s = 0;
  for (std::size_t j = c.size(); j-- > 0;) s = s * x + c[j];
  return s;
}

// strips the t^v factor of a coefficient vector (ascending); returns v
int strip_zero_root(std::vector<double>& c) {
  int v = 0;
  while (!c.empty() && c.front() == 0.0) {
    c.erase(c.begin());
    ++v;
  }
  return v;
}

}  // namespace

double coulson_energy(const Graph& g, double target_err) {
  if (target_err <= 0) fail(Errc::BadParam, "coulson_energy: target_err must be positive");
  if (g.n == 0 || g.edge_count() == 0) return 0.0;
  IntPoly phi = charpoly_oracle(g);
  const int n = g.n;
  boost::math::quadrature::tanh_sinh<double> integ;
  const double qtol = 1e-11;  // tanh_sinh converges double-exponentially; ask for slack below any target
  double err1 = 0, err2 = 0, value = 0;
  // head integrand: log1p(W(x)) / x^2 with W(0) = 0 and W'' (0)/2 = w2;
  // below the underflow zone the x -> 0 limit w2 is returned directly
  auto head = [&](const std::function<double(double)>& Wm1, double w2) {
    return [&Wm1, w2](double x) {
      if (x < 1e-8) return w2;
      return std::log1p(Wm1(x)) / (x * x);
    };
  };
  if (is_bipartite(g)) {
    BSeq bs = b_sequence(phi, true);
    std::vector<double> b(bs.b.size());
    for (std::size_t i = 0; i < b.size(); ++i) b[i] = bs.b[i].convert_to<double>();
    int m = static_cast<int>(b.size()) - 1;
    // F(x) - 1: the sum without its constant term, accurate near 0
    std::function<double(double)> Fm1 = [&](double x) {
      double x2 = x * x, p = x2, s = 0;
      for (int i = 1; i <= m; ++i) {
        s += b[i] * p;
        p *= x2;
      }
      return s;
    };
    // tail: ln F(1/t) = -2m ln t + ln G(t) with G(t) = sum b_i t^{2(m-i)};
    // pulling out the t^{2(m-j*)} factor keeps the integrand finite at 0
    std::vector<double> G(2 * m + 1, 0.0);
    for (int i = 0; i <= m; ++i) G[2 * (m - i)] = b[i];
    int v = strip_zero_root(G);
    double i1 = integ.integrate(head(Fm1, m >= 1 ? b[1] : 0.0), 0.0, 1.0, qtol, &err1);
    double i2 = integ.integrate([&](double t) { return std::log(poly_eval(G, t)); }, 0.0, 1.0, qtol, &err2);
    value = 2.0 / std::numbers::pi * (i1 + i2 + 2.0 * m - v);
    err1 = 2.0 / std::numbers::pi * (std::abs(i1) * err1 + std::abs(i2) * err2);
  } else {
    std::vector<double> a(phi.a.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = phi.a[i].convert_to<double>();
    // P(x) = sum (-1)^i a_{2i} x^{2i},  Q(x) = sum (-1)^i a_{2i+1} x^{2i+1};
    // R - 1 = 2(P-1) + (P-1)^2 + Q^2 avoids cancellation in log near 0.
    std::function<double(double)> Rm1 = [&](double x) {
      double pm1 = 0, q = 0, xp = x * x;
      for (int i = 1; 2 * i <= n; ++i) {
        double s = i % 2 == 0 ? 1.0 : -1.0;
        pm1 += s * a[2 * i] * xp;
        xp *= x * x;
      }
      xp = x;
      for (int i = 0; 2 * i + 1 <= n; ++i) {
        double s = i % 2 == 0 ? 1.0 : -1.0;
        q += s * a[2 * i + 1] * xp;
        xp *= x * x;
      }
      return 2 * pm1 + pm1 * pm1 + q * q;
    };
    // tail polynomials: t^n P(1/t) and t^n Q(1/t), squared and summed
    std::vector<double> pt(n + 1, 0.0), qt(n + 1, 0.0);
    for (int i = 0; 2 * i <= n; ++i) {
      double s = i % 2 == 0 ? 1.0 : -1.0;
      pt[n - 2 * i] = s * a[2 * i];
      if (2 * i + 1 <= n) qt[n - 2 * i - 1] = s * a[2 * i + 1];
    }
    std::vector<double> R(2 * n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) R[i + j] += pt[i] * pt[j] + qt[i] * qt[j];
    int v = strip_zero_root(R);
    double i1 = integ.integrate(head(Rm1, -2.0 * a[2]), 0.0, 1.0, qtol, &err1);
    double i2 = integ.integrate([&](double t) { return std::log(poly_eval(R, t)); }, 0.0, 1.0, qtol, &err2);
    // ln R(1/t) = ln(R poly) - 2n ln t; the log terms integrate exactly
    value = 1.0 / std::numbers::pi * (i1 + i2 + 2.0 * n - v);
    err1 = 1.0 / std::numbers::pi * (std::abs(i1) * err1 + std::abs(i2) * err2);
  }
  if (!std::isfinite(value) || err1 > target_err)
    fail(Errc::QuadratureFailure, "coulson_energy: estimated error above target");
  return value;
}

EnergyOrder energy_compare(const Graph& g1, const Graph& g2, double gap_tol) {
  if (gap_tol <= 0) fail(Errc::BadParam, "energy_compare: gap_tol must be positive");
  double t = 0.125;
  for (;;) {
    EnergyEnclosure e1 = energy_certified(g1, t);
    EnergyEnclosure e2 = energy_certified(g2, t);
    if (e1.hi < e2.lo) return EnergyOrder::Less;
    if (e2.hi < e1.lo) return EnergyOrder::Greater;
    if (t <= gap_tol / 4) return EnergyOrder::Undecided;
    t = std::max(t / 64, gap_tol / 8);
  }
}

}  // namespace genergy
