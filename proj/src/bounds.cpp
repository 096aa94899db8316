#include "occam/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "occam/errors.hpp"
#include "occam/harness.hpp"

namespace occam {

bool is_infinite_samples(std::uint64_t m) { return m == kInfiniteSamples; }

std::string sample_count_text(std::uint64_t m) {
  return is_infinite_samples(m) ? "INFINITY" : std::to_string(m);
}

namespace {

void check_rates(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !(delta > 0.0) || epsilon > 1.0 || delta >= 1.0)
    throw std::invalid_argument("epsilon must be in (0,1], delta in (0,1)");
}

// Ceiling with a relative guard so values that are mathematically integers
// but computed a few ulps high do not round up twice.
std::uint64_t guarded_ceil(double v) {
  if (!(v >= 0.0)) return 0;
  if (v >= 9.0e18) throw InfeasibleError("sample bound exceeds 2^63");
  double adjusted = v - std::max(1e-9, std::abs(v) * 1e-12);
  double c = std::ceil(adjusted);
  if (c < 0.0) c = 0.0;
  return std::uint64_t(c);
}

}  // namespace

std::uint64_t vc_upper_bound(std::uint64_t d, double epsilon, double delta) {
  if (d < 1) throw std::invalid_argument("VC dimension must be >= 1");
  check_rates(epsilon, delta);
  double v = (4.0 / epsilon) *
             (double(d) * std::log2(12.0 / epsilon) + std::log2(2.0 / delta));
  return guarded_ceil(v);
}

std::uint64_t vc_lower_bound(std::uint64_t d, double epsilon, double delta) {
  if (d < 1) throw std::invalid_argument("VC dimension must be >= 1");
  check_rates(epsilon, delta);
  double v = std::max(double(d - 1) / (32.0 * epsilon),
                      std::log(1.0 / delta) / epsilon);
  if (v >= 9.0e18) throw InfeasibleError("sample bound exceeds 2^63");
  // Strict inequality m > v: floor then add one.
  return std::uint64_t(std::floor(v + 1e-9)) + 1;
}

std::uint64_t finite_class_bound(double class_size, double epsilon,
                                 double delta) {
  if (!(class_size >= 1.0))
    throw std::invalid_argument("class size must be >= 1");
  check_rates(epsilon, delta);
  return guarded_ceil(std::log(class_size / delta) / epsilon);
}

std::uint64_t length_based_bound(double s, double epsilon, double delta,
                                 double alpha, double beta) {
  if (!(alpha < 1.0)) throw std::invalid_argument("alpha must be < 1");
  if (!(s >= 0.0) || !(beta >= 0.0))
    throw std::invalid_argument("s and beta must be nonnegative");
  // The formula is meaningful for any positive accuracy, and epsilon > 1
  // arises in closed-form comparisons, so only delta is range-restricted.
  if (!(epsilon > 0.0) || !(delta > 0.0) || delta >= 1.0)
    throw std::invalid_argument("epsilon must be positive, delta in (0,1)");
  double first = (2.0 / epsilon) * std::log(1.0 / delta);
  double second = std::pow(2.0 * std::log(2.0) * std::pow(s, beta) / epsilon,
                           1.0 / (1.0 - alpha));
  return guarded_ceil(std::max(first, second));
}

CompressionSpec CompressionSpec::poly(
    double alpha, std::function<double(double, double, double)> p) {
  if (!(alpha >= 0.0) || !(alpha < 1.0))
    throw std::invalid_argument("polynomial form needs alpha in [0,1)");
  if (!p) throw std::invalid_argument("polynomial form needs p");
  CompressionSpec spec;
  spec.polynomial = PolynomialForm{alpha, std::move(p)};
  return spec;
}

CompressionSpec CompressionSpec::fn(GeneralForm f) {
  if (!f) throw std::invalid_argument("general form needs a callable");
  CompressionSpec spec;
  spec.general = std::move(f);
  return spec;
}

double CompressionSpec::eval(double m, double n, double s,
                             double gamma) const {
  if (polynomial) {
    double p = polynomial->p(n, s, gamma);
    if (!(p > 0.0))
      throw std::invalid_argument("compression polynomial must be positive");
    return std::pow(m, 1.0 - polynomial->alpha) / p;
  }
  if (general) return (*general)(m, n, s, gamma);
  throw std::invalid_argument("empty compression spec");
}

namespace {

constexpr double kSearchCeiling = 9.223372036854776e18;  // 2^63

std::uint64_t inverse_polynomial(const PolynomialForm& form, double x,
                                 double n, double s, double gamma) {
  if (x <= 0.0) return 1;
  double p = form.p(n, s, gamma);
  if (!(p > 0.0))
    throw std::invalid_argument("compression polynomial must be positive");
  double v = std::pow(x * p, 1.0 / (1.0 - form.alpha));
  if (v >= kSearchCeiling) return kInfiniteSamples;
  std::uint64_t m = guarded_ceil(v);
  if (m < 1) m = 1;
  auto f = [&](std::uint64_t mm) {
    return std::pow(double(mm), 1.0 - form.alpha) / p;
  };
  // Fix up floating error around the boundary.
  while (m > 1 && f(m - 1) >= x) --m;
  while (f(m) < x) ++m;
  return m;
}

std::uint64_t inverse_general(const CompressionSpec& spec, double x, double n,
                              double s, double gamma) {
  if (x <= 0.0) return 1;
  auto f = [&](std::uint64_t m) { return spec.eval(double(m), n, s, gamma); };
  std::uint64_t lo = 1;
  if (f(lo) >= x) return lo;
  // Exponential probe for an upper bracket.
  std::uint64_t hi = 2;
  double prev = f(lo);
  while (true) {
    double v = f(hi);
    if (v + 1e-12 < prev)
      throw std::invalid_argument(
          "compression spec is not monotone nondecreasing in m");
    if (v >= x) break;
    prev = v;
    if (hi >= (std::uint64_t(1) << 62)) return kInfiniteSamples;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (f(mid) >= x)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

std::uint64_t inverse_compression(const CompressionSpec& spec, double x,
                                  double n, double s, double gamma) {
  if (spec.polynomial)
    return inverse_polynomial(*spec.polynomial, x, n, s, gamma);
  return inverse_general(spec, x, n, s, gamma);
}

std::uint64_t kc_bound(const CompressionSpec& spec, double n, double s,
                       double epsilon, double delta, bool deterministic) {
  check_rates(epsilon, delta);
  double failure_log = deterministic ? std::log(1.0 / delta)
                                     : std::log(2.0 / delta);
  double gamma = deterministic ? delta : delta / 2.0;
  std::uint64_t first = guarded_ceil((2.0 / epsilon) * failure_log);
  std::uint64_t second =
      inverse_compression(spec, 2.0 * std::log(2.0) / epsilon, n, s, gamma);
  if (is_infinite_samples(second)) return kInfiniteSamples;
  return std::max(first, second);
}

bool cardinality_chain_holds(int d, double class_size, int n) {
  if (d < 0 || n < 0 || !(class_size >= 1.0))
    throw std::invalid_argument("degenerate cardinality chain inputs");
  double log_size = std::log2(class_size);
  return double(d) <= log_size + 1e-9 &&
         log_size <= double(n) * double(d) + 1e-9;
}

bool vc_cardinality_check(SystemId system, int n) {
  if (system != SystemId::Monomial)
    throw InfeasibleError(
        "cardinality check enumerates monomial classes only");
  if (n < 1 || n > 4)
    throw InfeasibleError("cardinality check limited to n <= 4");
  int d = vc_dim_bruteforce(system, n, full_domain(Alphabet::Binary, n));
  return cardinality_chain_holds(d, double(monomial_class_size(n)), n);
}

}  // namespace occam
