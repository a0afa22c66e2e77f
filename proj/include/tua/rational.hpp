#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace tua {

// Exact rational scalar. All arithmetic in the toolkit goes through this
// type; there is no floating point anywhere.
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a model is infeasible/unbounded in a context where the caller
// required an optimum.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal inconsistency (cycling guard, failed certificate, falsified
// theorem assertion). Must abort loudly.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Parses "p" or "p/q" with positive q. Throws ValidationError otherwise.
Rational parse_rational(const std::string& token);

// Renders canonically as "p" or "p/q".
std::string to_string(const Rational& value);

// mpq_class has no long long constructor; matrix entries are small.
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

bool is_integer(const Rational& value);
long long to_integer(const Rational& value);  // requires is_integer

bool is_binary_vector(const std::vector<Rational>& x);

}  // namespace tua
