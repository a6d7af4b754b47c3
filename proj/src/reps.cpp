#include "mplab/reps.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mplab/error.hpp"
#include "mplab/random.hpp"

namespace mplab {

namespace {

template <typename T>
T tpow(const T& base, int e) {
  T r(1);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

// Terms of f(x1 - t y1, y1, x2 - t y2, y2) with positive t-degree, keyed by
// (monomial, t-degree).
using ShiftKey = std::pair<Exponents, int>;

void accumulate_shift(const Exponents& e, const Integer& coeff, std::map<ShiftKey, Integer>& out) {
  const auto [a, b, c, d] = e;
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= c; ++j) {
      if (i + j == 0) continue;
      Integer v = coeff * binomial(a, i) * binomial(c, j);
      if ((i + j) % 2) v = -v;
      out[{{a - i, b + i, c - j, d + j}, i + j}] += v;
    }
}

std::vector<Exponents> monomials_of_weight(long d1, long d2, long weight) {
  std::vector<Exponents> out;
  for (long a = d1; a >= 0; --a)
    for (long c = d2; c >= 0; --c) {
      const long b = d1 - a, d = d2 - c;
      if ((b - a) + (d - c) == weight)
        out.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), static_cast<int>(d)});
    }
  std::sort(out.begin(), out.end(), std::greater<Exponents>());
  return out;
}

}  // namespace

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BiHomogPoly::BiHomogPoly(int d1, int d2) : d1_(d1), d2_(d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("BiHomogPoly: negative bidegree");
}

BiHomogPoly BiHomogPoly::monomial(const Exponents& e, const Integer& coeff) {
  BiHomogPoly f(e[0] + e[1], e[2] + e[3]);
  f.add_term(e, coeff);
  return f;
}

void BiHomogPoly::add_term(const Exponents& e, const Integer& coeff) {
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }) || e[0] + e[1] != d1_ || e[2] + e[3] != d2_)
    throw std::invalid_argument("BiHomogPoly: term does not have the polynomial's bidegree");
  if (coeff == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
  } else if ((it->second += coeff) == 0) {
    terms_.erase(it);
  }
}

Integer BiHomogPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

GaussianRational BiHomogPoly::evaluate(const std::array<GaussianRational, 4>& v) const {
  GaussianRational sum;
  for (const auto& [e, coeff] : terms_) {
    GaussianRational term{Rational(coeff)};
    for (int i = 0; i < 4; ++i) term = term * tpow(v[i], e[i]);
    sum = sum + term;
  }
  return sum;
}

std::complex<double> BiHomogPoly::evaluate(const std::array<std::complex<double>, 4>& v) const {
  std::complex<double> sum = 0;
  for (const auto& [e, coeff] : terms_) {
    std::complex<double> term = coeff.convert_to<double>();
    for (int i = 0; i < 4; ++i) term *= tpow(v[i], e[i]);
    sum += term;
  }
  return sum;
}

BiHomogPoly operator+(const BiHomogPoly& f, const BiHomogPoly& g) {
  if (f.d1_ != g.d1_ || f.d2_ != g.d2_) throw DimensionMismatch("BiHomogPoly +: bidegrees differ");
  BiHomogPoly h = f;
  for (const auto& [e, c] : g.terms_) h.add_term(e, c);
  return h;
}

BiHomogPoly operator-(const BiHomogPoly& f, const BiHomogPoly& g) { return f + Integer(-1) * g; }

BiHomogPoly operator*(const BiHomogPoly& f, const BiHomogPoly& g) {
  BiHomogPoly h(f.d1_ + g.d1_, f.d2_ + g.d2_);
  for (const auto& [e, c] : f.terms_)
    for (const auto& [e2, c2] : g.terms_)
      h.add_term({e[0] + e2[0], e[1] + e2[1], e[2] + e2[2], e[3] + e2[3]}, c * c2);
  return h;
}

BiHomogPoly operator*(const Integer& s, const BiHomogPoly& f) {
  BiHomogPoly h(f.d1_, f.d2_);
  for (const auto& [e, c] : f.terms_) h.add_term(e, s * c);
  return h;
}

std::string to_string(const BiHomogPoly& f) {
  if (f.is_zero()) return "0";
  static const char* names[4] = {"x1", "y1", "x2", "y2"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, coeff] : f.terms()) {
    Integer mag = coeff < 0 ? Integer(-coeff) : coeff;
    if (first) {
      if (coeff < 0) os << "-";
    } else {
      os << (coeff < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? names[i] : std::string(names[i]) + "^" + std::to_string(e[i]));
    }
    if (mag != 1 || factors.empty()) factors.insert(factors.begin(), mag.str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

bool is_proportional(const BiHomogPoly& f, const BiHomogPoly& g) {
  if (f.is_zero() || g.is_zero()) return false;
  if (f.degree1() != g.degree1() || f.degree2() != g.degree2()) return false;
  if (f.terms().size() != g.terms().size()) return false;
  const auto& [e0, c0] = *f.terms().begin();
  const Rational ratio(g.coefficient(e0), c0);
  if (ratio == 0) return false;
  for (const auto& [e, c] : f.terms())
    if (Rational(g.coefficient(e)) != ratio * c) return false;
  return true;
}

void SectionSpaceSpec::validate() const {
  if (r < 1 || lambda1 < 1 || lambda2 < 1)
    throw std::invalid_argument("SectionSpaceSpec: need r >= 1 and nonzero dominant weights lambda1, lambda2 >= 1");
}

long section_space_dim(const SectionSpaceSpec& spec) {
  spec.validate();
  return (spec.degree1() + 1) * (spec.degree2() + 1);
}

std::vector<long> clebsch_gordan_highest_weights(const SectionSpaceSpec& spec) {
  spec.validate();
  std::vector<long> out;
  for (long k = 0; k <= spec.max_k(); ++k) out.push_back(spec.weight_of(k));
  return out;
}

BiHomogPoly hwv_sum_form(const SectionSpaceSpec& spec, long k) {
  spec.validate();
  if (k < 0 || k > spec.max_k()) throw std::out_of_range("F_{r,k}: k out of range");
  const int d1 = static_cast<int>(spec.degree1()), d2 = static_cast<int>(spec.degree2());
  const int kk = static_cast<int>(k);
  BiHomogPoly f(d1, d2);
  for (int j = 0; j <= kk; ++j) {
    Integer c = binomial(kk, j);
    if ((kk - j) % 2) c = -c;
    f.add_term({j, d1 - j, kk - j, d2 - kk + j}, c);
  }
  return f;
}

BiHomogPoly hwv_product_form(const SectionSpaceSpec& spec, long k) {
  spec.validate();
  if (k < 0 || k > spec.max_k()) throw std::out_of_range("F_{r,k}: k out of range");
  const int d1 = static_cast<int>(spec.degree1()), d2 = static_cast<int>(spec.degree2());
  const int kk = static_cast<int>(k);
  BiHomogPoly f = BiHomogPoly::monomial({0, d1 - kk, 0, d2 - kk});
  BiHomogPoly det = BiHomogPoly::monomial({1, 0, 0, 1}) - BiHomogPoly::monomial({0, 1, 1, 0});
  for (int i = 0; i < kk; ++i) f = f * det;
  return f;
}

BiHomogPoly highest_weight_vector(const SectionSpaceSpec& spec, long k) {
  BiHomogPoly sum = hwv_sum_form(spec, k);
  if (sum != hwv_product_form(spec, k))
    throw std::logic_error("F_{r,k}: sum and product closed forms disagree");
  return sum;
}

bool verify_n_invariance(const BiHomogPoly& f) {
  std::map<ShiftKey, Integer> shifted;
  for (const auto& [e, c] : f.terms()) accumulate_shift(e, c, shifted);
  return std::all_of(shifted.begin(), shifted.end(), [](const auto& kv) { return kv.second == 0; });
}

bool verify_n_invariance_sampled(const BiHomogPoly& f, std::uint64_t seed) {
  CounterRng rng(seed, 0xf00d);
  std::array<GaussianRational, 4> v;
  for (auto& z : v) z = GaussianRational(Rational(rng.uniform_int(-97, 97)));
  const GaussianRational base = f.evaluate(v);
  // f(u_t^-1 v) - f(v) is a polynomial in t of degree <= d1 + d2.
  const int samples = f.degree1() + f.degree2() + 1;
  for (int s = 1; s <= samples; ++s) {
    const Rational t(s);
    const std::array<GaussianRational, 4> w{v[0] - GaussianRational(t) * v[1], v[1],
                                            v[2] - GaussianRational(t) * v[3], v[3]};
    if (f.evaluate(w) != base) return false;
  }
  return true;
}

long torus_weight(const BiHomogPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("torus_weight: zero polynomial has no weight");
  std::optional<long> w;
  for (const auto& [e, c] : f.terms()) {
    const long we = (e[1] - e[0]) + (e[3] - e[2]);
    if (w && *w != we)
      throw MixedWeights("torus_weight: terms of weights " + std::to_string(*w) + " and " + std::to_string(we));
    w = we;
  }
  return *w;
}

std::map<long, long, std::greater<long>> weight_decomposition(const SectionSpaceSpec& spec) {
  spec.validate();
  std::map<long, long, std::greater<long>> out;
  for (long a = 0; a <= spec.degree1(); ++a)
    for (long c = 0; c <= spec.degree2(); ++c) ++out[(spec.degree1() - 2 * a) + (spec.degree2() - 2 * c)];
  return out;
}

std::vector<BiHomogPoly> n_invariant_subspace(const SectionSpaceSpec& spec, long weight) {
  spec.validate();
  const long d1 = spec.degree1(), d2 = spec.degree2();
  const auto unknowns = monomials_of_weight(d1, d2, weight);
  if (unknowns.empty()) return {};

  std::map<ShiftKey, std::size_t> row_of;
  std::vector<std::map<ShiftKey, Integer>> columns;
  for (const auto& e : unknowns) {
    std::map<ShiftKey, Integer> col;
    accumulate_shift(e, 1, col);
    for (const auto& [key, v] : col)
      if (v != 0) row_of.emplace(key, 0);
    columns.push_back(std::move(col));
  }
  std::size_t next = 0;
  for (auto& [key, idx] : row_of) idx = next++;

  RatMatrix system(row_of.size(), unknowns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [key, v] : columns[j])
      if (v != 0) system(row_of.at(key), j) = Rational(v);

  std::vector<BiHomogPoly> basis;
  for (const RatVector& v : kernel(system)) {
    Integer lcm_den = 1;
    for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(q)));
    Integer g = 0;
    for (const auto& q : v) g = boost::multiprecision::gcd(g, Integer(numerator(q) * (lcm_den / denominator(q))));
    BiHomogPoly f(static_cast<int>(d1), static_cast<int>(d2));
    for (std::size_t j = 0; j < v.size(); ++j) {
      const Integer scaled = numerator(v[j]) * (lcm_den / denominator(v[j]));
      f.add_term(unknowns[j], scaled / g);
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace mplab
