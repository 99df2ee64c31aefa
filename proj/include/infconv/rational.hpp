#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace infconv {

// Exact rational scalar. Everything user-visible in the library is computed
// with these; nothing is ever rounded.
using Rat = mpq_class;

// Input data failed a structural or semantic invariant.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input text/JSON could not be parsed.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verifier was invoked on a carrier that does not satisfy the hypotheses
// of the statement it checks (e.g. a non-invariant law where invariance is
// assumed). Distinct from a failed check: no conclusion is drawn.
struct HypothesisUnmet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" (base 10, optional sign on the numerator only).
Rat rat_from_string(const std::string& s);

// Canonical "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Rational extended with +infinity: absorbing for +, maximal for the order.
class ExtRat {
 public:
  ExtRat() : q_(0) {}
  ExtRat(Rat q) : q_(std::move(q)) {}
  ExtRat(long v) : q_(v) {}
  static ExtRat inf() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }
  const Rat& finite() const {
    if (inf_) throw InvariantViolation("+inf where a finite value is required");
    return q_;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return inf();
    return ExtRat(Rat(a.q_ + b.q_));
  }
  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.q_ == b.q_;
  }
  friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.q_ < b.q_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  std::string str() const { return inf_ ? "+inf" : rat_to_string(q_); }

 private:
  bool inf_ = false;
  Rat q_;
};

// Parses "p/q", "p" or "+inf".
ExtRat ext_from_string(const std::string& s);

}  // namespace infconv
