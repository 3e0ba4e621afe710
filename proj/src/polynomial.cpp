#include "severi/polynomial.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace severi {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  for (Rational& c : coefficients_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::linear_factor(const Rational& root) {
  return RationalPolynomial({-root, Rational(1)});
}

void RationalPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational RationalPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(power)];
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * x + *it;
  return value;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0);
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(product);
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (Rational& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<Rational> result;
  for (std::size_t power = 1; power < coefficients_.size(); ++power) {
    result.push_back(coefficients_[power] * static_cast<long>(power));
  }
  return RationalPolynomial(std::move(result));
}

namespace {

std::string monomial(const std::string& variable, int power) {
  if (power == 0) return "";
  if (power == 1) return variable;
  return variable + "^" + std::to_string(power);
}

}  // namespace

std::string RationalPolynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const Rational& c = coefficients_[static_cast<std::size_t>(power)];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (power == 0) {
      out << severi::to_string(magnitude);
    } else if (!unit) {
      if (is_integer(magnitude)) {
        out << magnitude.get_num().get_str();
      } else {
        out << '(' << severi::to_string(magnitude) << ')';
      }
    }
    out << monomial(variable, power);
  }
  return out.str();
}

std::string RationalPolynomial::factored_string(const std::string& variable) const {
  if (degree() < 1) return to_string(variable);

  // Scale to a primitive integer polynomial with positive leading coefficient.
  Integer lcm_den = 1;
  for (const Rational& c : coefficients_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const Rational& c : coefficients_) {
    ints.push_back(c.get_num() * (lcm_den / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  for (Integer& c : ints) c /= content;
  Rational scale(content, lcm_den);
  scale.canonicalize();

  // Peel off integer roots (they divide the lowest nonzero coefficient).
  std::map<Integer, int> roots;
  auto evaluate = [&ints](const Integer& x) {
    Integer value = 0;
    for (auto it = ints.rbegin(); it != ints.rend(); ++it) value = value * x + *it;
    return value;
  };
  auto deflate = [&ints](const Integer& root) {
    std::vector<Integer> quotient(ints.size() - 1);
    Integer carry = 0;
    for (std::size_t i = ints.size() - 1; i-- > 0;) {
      carry = carry * root + ints[i + 1];
      quotient[i] = carry;
    }
    ints = std::move(quotient);
  };
  bool progress = true;
  while (progress && ints.size() > 1) {
    progress = false;
    if (ints.front() == 0) {
      ++roots[0];
      ints.erase(ints.begin());
      progress = true;
      continue;
    }
    const Integer bound = abs(ints.front());
    // Bounded search keeps this cosmetic helper cheap.
    if (bound > 1000000) break;
    for (Integer candidate = 1; candidate <= bound && !progress; ++candidate) {
      if (bound % candidate != 0) continue;
      for (const Integer& root : {candidate, Integer(-candidate)}) {
        if (evaluate(root) == 0) {
          ++roots[root];
          deflate(root);
          progress = true;
          break;
        }
      }
    }
  }
  if (roots.empty()) return to_string(variable);

  std::ostringstream out;
  if (scale == -1) {
    out << '-';
  } else if (is_integer(scale)) {
    if (scale != 1) out << severi::to_string(scale);
  } else {
    out << '(' << severi::to_string(scale) << ')';
  }
  for (const auto& [root, power] : roots) {
    out << '(' << variable;
    if (root > 0) out << " - " << root.get_str();
    if (root < 0) out << " + " << Integer(-root).get_str();
    out << ')';
    if (power > 1) out << '^' << power;
  }
  if (ints.size() > 1 || ints.front() != 1) {
    std::vector<Rational> rest(ints.begin(), ints.end());
    out << '(' << RationalPolynomial(std::move(rest)).to_string(variable) << ')';
  }
  return out.str();
}

std::vector<std::string> RationalPolynomial::coefficient_strings() const {
  std::vector<std::string> result;
  for (const Rational& c : coefficients_) result.push_back(to_fraction_string(c));
  return result;
}

RationalPolynomial RationalPolynomial::from_coefficient_strings(std::span<const std::string> strings) {
  std::vector<Rational> coefficients;
  for (const std::string& s : strings) coefficients.push_back(parse_rational(s));
  return RationalPolynomial(std::move(coefficients));
}

std::string RationalPolynomial::to_json() const { return nlohmann::json(coefficient_strings()).dump(); }

RationalPolynomial RationalPolynomial::from_json(const std::string& json) {
  const auto parsed = nlohmann::json::parse(json);
  if (!parsed.is_array()) throw std::invalid_argument("polynomial JSON must be an array of strings");
  std::vector<std::string> strings;
  for (const auto& item : parsed) {
    if (!item.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
    strings.push_back(item.get<std::string>());
  }
  return from_coefficient_strings(strings);
}

RationalPolynomial interpolate(std::span<const InterpolationPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].x == points[j].x) {
        throw std::invalid_argument("duplicate interpolation abscissa " + points[i].x.get_str());
      }
    }
  }
  RationalPolynomial result;
  for (std::size_t j = 0; j < points.size(); ++j) {
    RationalPolynomial basis = RationalPolynomial::constant(points[j].y);
    for (std::size_t m = 0; m < points.size(); ++m) {
      if (m == j) continue;
      basis *= RationalPolynomial::linear_factor(Rational(points[m].x));
      basis *= Rational(1) / Rational(points[j].x - points[m].x);
    }
    result += basis;
  }
  return result;
}

std::vector<Rational> forward_differences(std::span<const Rational> values, int order) {
  std::vector<Rational> current(values.begin(), values.end());
  for (int step = 0; step < order && !current.empty(); ++step) {
    for (std::size_t i = 0; i + 1 < current.size(); ++i) current[i] = current[i + 1] - current[i];
    current.pop_back();
  }
  return current;
}

int finite_difference_degree(std::span<const Rational> values) {
  if (values.size() < 2) throw std::invalid_argument("finite_difference_degree needs at least two values");
  const int count = static_cast<int>(values.size());
  for (int m = 0; m < count - 1; ++m) {
    const std::vector<Rational> next = forward_differences(values, m + 1);
    if (std::all_of(next.begin(), next.end(), [](const Rational& v) { return v == 0; })) return m;
  }
  return count - 1;
}

std::vector<Rational> series_log(std::span<const Rational> a) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("series_log needs constant term 1");
  std::vector<Rational> q(a.size(), 0);
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational sum = 0;
    for (std::size_t k = 1; k < n; ++k) sum += Rational(static_cast<long>(k)) * q[k] * a[n - k];
    q[n] = a[n] - sum / Rational(static_cast<long>(n));
  }
  return q;
}

std::vector<Rational> series_exp(std::span<const Rational> q) {
  if (q.empty() || q[0] != 0) throw std::invalid_argument("series_exp needs constant term 0");
  std::vector<Rational> a(q.size(), 0);
  a[0] = 1;
  for (std::size_t n = 1; n < q.size(); ++n) {
    Rational sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += Rational(static_cast<long>(k)) * q[k] * a[n - k];
    a[n] = sum / Rational(static_cast<long>(n));
  }
  return a;
}

}  // namespace severi
