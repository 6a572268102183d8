#include "lvelab/rational_function.hpp"

#include <json.hpp>

#include <limits>

namespace lvelab {

RationalFunctionN::RationalFunctionN(PolyZ num, PolyZ den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw domain_error("rational function with zero denominator");
  reduce();
}

RationalFunctionN RationalFunctionN::from_rat(const BigRat& r) {
  return RationalFunctionN(PolyZ(boost::multiprecision::numerator(r)),
                           PolyZ(boost::multiprecision::denominator(r)));
}

void RationalFunctionN::reduce() {
  if (num_.is_zero()) {
    den_ = PolyZ(1);
    return;
  }
  PolyZ g = PolyZ::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  BigInt cg = boost::multiprecision::gcd(num_.content(), den_.content());
  if (cg > 1) {
    num_ = num_.divide_exact(PolyZ(cg));
    den_ = den_.divide_exact(PolyZ(cg));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunctionN RationalFunctionN::operator-() const {
  RationalFunctionN r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunctionN RationalFunctionN::operator+(const RationalFunctionN& o) const {
  return RationalFunctionN(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunctionN RationalFunctionN::operator-(const RationalFunctionN& o) const {
  return RationalFunctionN(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunctionN RationalFunctionN::operator*(const RationalFunctionN& o) const {
  return RationalFunctionN(num_ * o.num_, den_ * o.den_);
}

RationalFunctionN RationalFunctionN::operator/(const RationalFunctionN& o) const {
  if (o.is_zero()) throw domain_error("rational function division by zero");
  return RationalFunctionN(num_ * o.den_, den_ * o.num_);
}

BigRat RationalFunctionN::eval(const BigInt& n) const {
  BigRat x(n);
  BigRat d = den_.eval(x);
  if (d == 0) throw domain_error("rational function pole at N=" + n.str());
  return num_.eval(x) / d;
}

double RationalFunctionN::eval(double n) const {
  double d = den_.eval(n);
  if (d == 0.0) throw domain_error("rational function pole");
  return num_.eval(n) / d;
}

std::string RationalFunctionN::str() const {
  if (den_ == PolyZ(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {

/* Coefficients that fit in int64 are emitted as JSON numbers, larger ones as
   decimal strings; the parser accepts both. */
void push_coeff(nlohmann::json& arr, const BigInt& c) {
  static const BigInt lo = std::numeric_limits<long long>::min();
  static const BigInt hi = std::numeric_limits<long long>::max();
  if (c >= lo && c <= hi)
    arr.push_back(static_cast<long long>(c));
  else
    arr.push_back(c.str());
}

}  // namespace

std::string RationalFunctionN::to_json() const {
  nlohmann::json j;
  j["num"] = nlohmann::json::array();
  j["den"] = nlohmann::json::array();
  for (int i = 0; i <= num_.degree(); ++i) push_coeff(j["num"], num_.coeff(i));
  if (num_.is_zero()) j["num"].push_back(0);
  for (int i = 0; i <= den_.degree(); ++i) push_coeff(j["den"], den_.coeff(i));
  return j.dump();
}

RationalFunctionN RationalFunctionN::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto read = [](const nlohmann::json& arr) {
    std::vector<BigInt> v;
    for (const auto& x : arr) {
      if (x.is_string())
        v.push_back(BigInt(x.get<std::string>()));
      else
        v.push_back(BigInt(x.get<long long>()));
    }
    return PolyZ(std::move(v));
  };
  return RationalFunctionN(read(j.at("num")), read(j.at("den")));
}

}  // namespace lvelab
