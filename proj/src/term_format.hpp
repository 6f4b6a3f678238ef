#pragma once

#include <string>

#include "cremona/gauss_rational.hpp"

namespace cremona::detail {

// Accumulates "coefficient*monomial" terms into grammar-compatible text:
// "x^2 - 2*x + 1", "(1 + 2*i)*x*y", "-i*y".
class TermWriter {
 public:
  void add(const GaussRational& c, const std::string& mono) {
    if (c.is_zero()) return;
    std::string body;
    bool negative = false;
    if (c.is_real() || sgn(c.re()) == 0) {
      const mpq_class& part = c.is_real() ? c.re() : c.im();
      negative = sgn(part) < 0;
      mpq_class mag = abs(part);
      std::string m = c.is_real() ? mag.get_str() : (mag == 1 ? std::string("i") : mag.get_str() + "*i");
      if (mono.empty()) body = m;
      else if (c.is_real() && mag == 1) body = mono;
      else body = m + "*" + mono;
    } else {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (out_.empty()) out_ = negative ? "-" + body : body;
    else out_ += (negative ? " - " : " + ") + body;
    ++count_;
  }

  std::string str() const { return out_.empty() ? std::string("0") : out_; }
  int count() const { return count_; }

 private:
  std::string out_;
  int count_ = 0;
};

}  // namespace cremona::detail
