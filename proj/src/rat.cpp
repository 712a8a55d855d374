#include "ztile/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace ztile {

namespace {

Int parse_int(const std::string& s, const std::string& what) {
  if (s.empty()) throw std::invalid_argument(what + ": empty integer");
  size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument(what + ": sign without digits");
  for (size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument(what + ": not an integer: '" + s + "'");
  }
  return Int(s, 10);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rat(parse_int(text, "rational"));
  }
  Int num = parse_int(text.substr(0, slash), "numerator");
  Int den = parse_int(text.substr(slash + 1), "denominator");
  if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return rat_from(num, den);
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

bool is_zero(const RatVec& v) {
  for (const Rat& q : v)
    if (q != 0) return false;
  return true;
}

RatVec scaled(const RatVec& v, const Rat& c) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<std::string> vec_str(const RatVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const Rat& q : v) out.push_back(rat_str(q));
  return out;
}

}  // namespace ztile
