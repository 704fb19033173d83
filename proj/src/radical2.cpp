#include "weylpert/radical2.hpp"

#include <cctype>
#include <stdexcept>

#include "weylpert/errors.hpp"

namespace weylpert {

namespace {

const std::string kRadicalMark = "√2";  // "√2"

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ValidationError("empty number");

  bool negative = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    i = 1;
  }
  std::string body = s.substr(i);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ValidationError("bad fraction: " + text);
    if (Integer(den) == 0) throw ValidationError("zero denominator: " + text);
    value = make_rational(Integer(num), Integer(den));
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw ValidationError("bad decimal: " + text);
    Integer scale = 1;
    for (std::size_t d = 0; d < frac.size(); ++d) scale *= 10;
    value = make_rational(Integer(whole) * scale + (frac.empty() ? Integer(0) : Integer(frac)),
                          scale);
  } else {
    if (!all_digits(body)) throw ValidationError("bad number: " + text);
    value = Rational(Integer(body));
  }
  return negative ? Rational(-value) : value;
}

Radical2Scalar& Radical2Scalar::operator/=(const Radical2Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(sqrt 2)");
  // multiply by the conjugate; c² − 2d² ≠ 0 for nonzero c + d·sqrt(2)
  Rational norm = o.rat * o.rat - 2 * o.rad * o.rad;
  Radical2Scalar conj(o.rat, -o.rad);
  *this *= conj;
  rat /= norm;
  rad /= norm;
  return *this;
}

std::string Radical2Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (rat != 0) out += weylpert::to_string(rat);
  if (rad != 0) {
    if (rad > 0 && !out.empty()) out += "+";
    if (rad == -1)
      out += "-";
    else if (rad != 1)
      out += weylpert::to_string(rad);
    out += kRadicalMark;
  }
  return out;
}

Radical2Scalar Radical2Scalar::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ValidationError("empty scalar");

  auto mark = s.find(kRadicalMark);
  if (mark == std::string::npos) return Radical2Scalar(rational_from_string(s));
  if (mark + kRadicalMark.size() != s.size())
    throw ValidationError("radical part must be trailing: " + text);

  std::string head = s.substr(0, mark);
  // Split "A+B" / "A-B" at the last sign that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < head.size(); ++i)
    if (head[i] == '+' || head[i] == '-') split = i;

  std::string rat_text, rad_text;
  if (split == std::string::npos) {
    rad_text = head;
  } else {
    rat_text = head.substr(0, split);
    rad_text = head.substr(split);  // keeps the sign
    if (rad_text == "+") rad_text = "1";
    if (rad_text == "-") rad_text = "-1";
  }
  if (rad_text.empty() || rad_text == "+") rad_text = "1";
  if (rad_text == "-") rad_text = "-1";

  Radical2Scalar out;
  if (!rat_text.empty()) out.rat = rational_from_string(rat_text);
  out.rad = rational_from_string(rad_text);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Radical2Scalar& v) {
  return os << v.to_string();
}

}  // namespace weylpert
