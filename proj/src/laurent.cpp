#include "lvelab/laurent.hpp"

#include <json.hpp>

namespace lvelab {

std::string rat_str(const BigRat& r) {
  if (boost::multiprecision::denominator(r) == 1)
    return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

BigRat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

LaurentPolyN LaurentPolyN::term(int power, const BigRat& coeff) {
  LaurentPolyN p;
  p.add_term(power, coeff);
  return p;
}

BigRat LaurentPolyN::coeff(int power) const {
  auto it = c_.find(power);
  return it == c_.end() ? BigRat(0) : it->second;
}

int LaurentPolyN::min_power() const {
  if (c_.empty()) throw domain_error("min_power of zero Laurent polynomial");
  return c_.begin()->first;
}

int LaurentPolyN::max_power() const {
  if (c_.empty()) throw domain_error("max_power of zero Laurent polynomial");
  return c_.rbegin()->first;
}

void LaurentPolyN::prune(int power) {
  auto it = c_.find(power);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

void LaurentPolyN::add_term(int power, const BigRat& coeff) {
  c_[power] += coeff;
  prune(power);
}

LaurentPolyN LaurentPolyN::operator-() const {
  LaurentPolyN r;
  for (const auto& [p, v] : c_) r.c_[p] = -v;
  return r;
}

LaurentPolyN LaurentPolyN::operator+(const LaurentPolyN& o) const {
  LaurentPolyN r = *this;
  for (const auto& [p, v] : o.c_) r.add_term(p, v);
  return r;
}

LaurentPolyN LaurentPolyN::operator-(const LaurentPolyN& o) const { return *this + (-o); }

LaurentPolyN LaurentPolyN::operator*(const LaurentPolyN& o) const {
  LaurentPolyN r;
  for (const auto& [p, v] : c_)
    for (const auto& [q, w] : o.c_) r.add_term(p + q, v * w);
  return r;
}

LaurentPolyN LaurentPolyN::operator*(const BigRat& s) const {
  LaurentPolyN r;
  if (s == 0) return r;
  for (const auto& [p, v] : c_) r.c_[p] = v * s;
  return r;
}

LaurentPolyN LaurentPolyN::divide_exact(const LaurentPolyN& o) const {
  if (o.is_zero()) throw domain_error("Laurent division by zero");
  if (is_zero()) return LaurentPolyN();
  // long division from the top power down
  LaurentPolyN rem = *this, quot;
  const int od = o.max_power();
  const BigRat olead = o.c_.rbegin()->second;
  int guard = static_cast<int>(c_.size() + o.c_.size()) * 64 + 64;
  while (!rem.is_zero()) {
    if (--guard < 0) throw invariant_error("Laurent division does not terminate");
    int rd = rem.max_power();
    BigRat q = rem.c_.rbegin()->second / olead;
    int qp = rd - od;
    quot.add_term(qp, q);
    for (const auto& [p, v] : o.c_) rem.add_term(p + qp, -(v * q));
  }
  // verify exactness against span growth: rem is zero here by construction
  return quot;
}

BigRat LaurentPolyN::eval(const BigRat& n) const {
  BigRat acc = 0;
  for (const auto& [p, v] : c_) {
    if (p >= 0) {
      BigRat x = 1;
      for (int i = 0; i < p; ++i) x *= n;
      acc += v * x;
    } else {
      if (n == 0) throw domain_error("Laurent eval at zero with negative power");
      BigRat x = 1;
      for (int i = 0; i < -p; ++i) x *= n;
      acc += v / x;
    }
  }
  return acc;
}

std::complex<double> LaurentPolyN::eval(const std::complex<double>& n) const {
  std::complex<double> acc = 0;
  for (const auto& [p, v] : c_) acc += v.convert_to<double>() * std::pow(n, p);
  return acc;
}

std::string LaurentPolyN::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += rat_str(it->second);
    if (it->first != 0) s += "*N^" + std::to_string(it->first);
  }
  return s;
}

std::string LaurentPolyN::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [p, v] : c_) j[std::to_string(p)] = rat_str(v);
  return j.dump();
}

LaurentPolyN LaurentPolyN::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LaurentPolyN r;
  for (auto it = j.begin(); it != j.end(); ++it)
    r.add_term(std::stoi(it.key()), rat_parse(it.value().get<std::string>()));
  return r;
}

}  // namespace lvelab
