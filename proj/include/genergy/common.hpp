#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace genergy {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Error categories shared by all modules.  The CLI maps BadInput-ish codes
// to exit code 2, everything else to 1.
enum class Errc {
  MissingEdge,
  BadVertex,
  BadParam,
  CountMismatch,
  TooLarge,
  OrderMismatch,
  NotBipartite,
  NotBipartitePolynomial,
  NotCentralStructure,
  ToleranceUnreachable,
  QuadratureFailure,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingEdge: return "MissingEdge";
    case Errc::BadVertex: return "BadVertex";
    case Errc::BadParam: return "BadParam";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::NotBipartite: return "NotBipartite";
    case Errc::NotBipartitePolynomial: return "NotBipartitePolynomial";
    case Errc::NotCentralStructure: return "NotCentralStructure";
    case Errc::ToleranceUnreachable: return "ToleranceUnreachable";
    case Errc::QuadratureFailure: return "QuadratureFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "?";
}

}  // namespace genergy
