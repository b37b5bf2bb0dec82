#include "genergy/intpoly.hpp"

#include <sstream>

#include "json.hpp"

namespace genergy {

std::string IntPoly::to_string() const {
  const int n = degree();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= n; ++i) {
    const BigInt& c = a[i];
    if (c == 0) continue;
    int e = n - i;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    if (mag != 1 || e == 0) os << mag.str();
    if (e >= 1) {
      os << "λ";
      if (e >= 2) os << "^" << e;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string IntPoly::to_json() const {
  nlohmann::json j;
  j["n"] = degree();
  auto& arr = j["a"] = nlohmann::json::array();
  for (const auto& c : a) arr.push_back(c.str());
  return j.dump();
}

IntPoly IntPoly::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(Errc::ParseError, std::string("poly json: ") + e.what());
  }
  IntPoly p;
  for (const auto& c : j.at("a")) {
    if (c.is_number_integer())
      p.a.emplace_back(c.get<long long>());
    else
      p.a.emplace_back(BigInt(c.get<std::string>()));
  }
  if (j.contains("n") && j["n"].get<int>() != p.degree()) fail(Errc::ParseError, "poly json: degree mismatch");
  return p;
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  if (p.a.empty() || q.a.empty()) return IntPoly{};
  std::vector<BigInt> r(p.a.size() + q.a.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < p.a.size(); ++i)
    for (std::size_t j = 0; j < q.a.size(); ++j) r[i + j] += p.a[i] * q.a[j];
  return IntPoly(std::move(r));
}

IntPoly poly_add(const IntPoly& p, const IntPoly& q) {
  // align by degree (a[0] is the top coefficient)
  const IntPoly& hi = p.degree() >= q.degree() ? p : q;
  const IntPoly& lo = p.degree() >= q.degree() ? q : p;
  std::vector<BigInt> r = hi.a;
  int off = hi.degree() - lo.degree();
  for (std::size_t i = 0; i < lo.a.size(); ++i) r[off + i] += lo.a[i];
  return IntPoly(std::move(r));
}

IntPoly poly_sub(const IntPoly& p, const IntPoly& q) { return poly_add(p, poly_scale(q, BigInt(-1))); }

IntPoly poly_shift(const IntPoly& p, int k) {
  std::vector<BigInt> r = p.a;
  r.insert(r.end(), k, BigInt(0));
  return IntPoly(std::move(r));
}

IntPoly poly_scale(const IntPoly& p, const BigInt& c) {
  std::vector<BigInt> r = p.a;
  for (auto& x : r) x *= c;
  return IntPoly(std::move(r));
}

IntPoly poly_one() { return IntPoly({BigInt(1)}); }

IntPoly poly_lambda_pow(int k) {
  std::vector<BigInt> r(k + 1, BigInt(0));
  r[0] = 1;
  return IntPoly(std::move(r));
}

std::string BSeq::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) os << ",";
    os << b[i].str();
  }
  os << "]";
  return os.str();
}

BSeq bseq_convolve(const BSeq& x, const BSeq& y) {
  BSeq r;
  r.n = x.n + y.n;
  r.b.assign(r.n / 2 + 1, BigInt(0));
  for (std::size_t i = 0; i < x.b.size(); ++i)
    for (std::size_t j = 0; j < y.b.size(); ++j)
      if (i + j < r.b.size()) r.b[i + j] += x.b[i] * y.b[j];
  return r;
}

}  // namespace genergy
