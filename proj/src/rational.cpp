#include "quivoa/rational.hpp"

#include <boost/multiprecision/integer.hpp>

namespace quivoa {

namespace {

// Exact rational square root; returns false if q is not a perfect square.
bool rational_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt sn = boost::multiprecision::sqrt(num);
  const BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return false;
  out = Rational(sn, sd);
  return true;
}

}  // namespace

double abs_upper(const GaussianRational& z) {
  const Rational n2 = z.norm2();
  if (n2 == 0) return 0.0;
  Rational root;
  if (rational_sqrt(n2, root)) return static_cast<double>(root);
  const double approx = std::sqrt(static_cast<double>(n2));
  return std::nextafter(approx, std::numeric_limits<double>::infinity());
}

std::string GaussianRational::str() const {
  if (im == 0) return re.str();
  if (re == 0) return im.str() + "i";
  std::string s = re.str();
  s += (im < 0) ? "-" : "+";
  s += Rational(im < 0 ? -im : im).str();
  s += "i";
  return s;
}

}  // namespace quivoa
