#include "toroidal/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace toroidal {

namespace {

std::string rational_text(const Rational& q) {
  return q.get_str();
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw std::invalid_argument("bad rational: " + std::string(s));
  }
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  Rational q;
  if (q.set_str(str, 10) != 0) throw std::invalid_argument("bad rational: " + str);
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + str);
  q.canonicalize();
  return q;
}

}  // namespace

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  Rational n = o.norm();
  GaussianRational c = o.conj();
  *this *= c;
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return rational_text(re_);
  auto imag = [](const Rational& q) -> std::string {
    if (q == 1) return "i";
    return rational_text(q) + "*i";
  };
  if (!has_re) {
    if (im_ == -1) return "-i";
    return imag(im_);
  }
  if (sgn(im_) > 0) return rational_text(re_) + " + " + imag(im_);
  return rational_text(re_) + " - " + imag(Rational(-im_));
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");

  // Split into signed summands at a sign that does not follow "/" or another sign.
  Rational re = 0, im = 0;
  std::size_t start = 0;
  auto take = [&](std::string_view term) {
    if (term.empty()) throw std::invalid_argument("malformed Gaussian rational: " + s);
    if (term.back() == 'i') {
      std::string_view body = term.substr(0, term.size() - 1);
      if (!body.empty() && body.back() == '*') body.remove_suffix(1);
      if (body.empty() || body == "+") {
        im += 1;
      } else if (body == "-") {
        im -= 1;
      } else {
        im += parse_rational(body);
      }
    } else {
      re += parse_rational(term);
    }
  };
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
      take(std::string_view(s).substr(start, k - start));
      start = k;
    }
  }
  take(std::string_view(s).substr(start));
  return {re, im};
}

GaussianRational arith(ArithOp op, const GaussianRational& x, const GaussianRational& y) {
  switch (op) {
    case ArithOp::add: return x + y;
    case ArithOp::sub: return x - y;
    case ArithOp::mul: return x * y;
    case ArithOp::div: return x / y;
    case ArithOp::neg: return -x;
  }
  throw std::logic_error("unreachable");
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

std::string coefficient_prefix(const GaussianRational& c) {
  if (c == GaussianRational(1)) return "";
  if (c == GaussianRational(-1)) return "-";
  if (c == GaussianRational::i()) return "sqrt(-1)*";
  if (c == -GaussianRational::i()) return "-sqrt(-1)*";
  if (sgn(c.im()) == 0) return c.to_string() + "*";
  if (sgn(c.re()) == 0) {
    const std::string mag = GaussianRational(abs(c.im())).to_string();
    return (sgn(c.im()) < 0 ? "-" : "") + mag + "*sqrt(-1)*";
  }
  return "(" + c.to_string() + ")*";
}

}  // namespace toroidal
