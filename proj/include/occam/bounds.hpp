#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "occam/core.hpp"

namespace occam {

// Sentinel for "no finite sample size exists"; rendered as INFINITY in all
// outputs. A defined outcome, never an exception.
inline constexpr std::uint64_t kInfiniteSamples = ~std::uint64_t(0);
bool is_infinite_samples(std::uint64_t m);
std::string sample_count_text(std::uint64_t m);

std::uint64_t vc_upper_bound(std::uint64_t d, double epsilon, double delta);
std::uint64_t vc_lower_bound(std::uint64_t d, double epsilon, double delta);
std::uint64_t finite_class_bound(double class_size, double epsilon,
                                 double delta);
std::uint64_t length_based_bound(double s, double epsilon, double delta,
                                 double alpha, double beta);

// Compression function f(m, n, s, gamma), either in the closed polynomial
// shape m^(1-alpha)/p(n,s,gamma) or as an arbitrary monotone-in-m callable.
struct PolynomialForm {
  double alpha = 0.0;  // in [0, 1)
  std::function<double(double n, double s, double gamma)> p;
};

using GeneralForm =
    std::function<double(double m, double n, double s, double gamma)>;

struct CompressionSpec {
  std::optional<PolynomialForm> polynomial;
  std::optional<GeneralForm> general;

  static CompressionSpec poly(double alpha,
                              std::function<double(double, double, double)> p);
  static CompressionSpec fn(GeneralForm f);
  double eval(double m, double n, double s, double gamma) const;
};

// Least m >= 1 with f(m,n,s,gamma) >= x, or the INFINITY sentinel. Polynomial
// specs use the closed form; general specs use exponential-then-binary search
// capped at 2^63.
std::uint64_t inverse_compression(const CompressionSpec& spec, double x,
                                  double n, double s, double gamma);

// Occam-to-PAC sample bound. Randomized form:
//   max(ceil((2/eps) ln(2/delta)), f_inv(2 ln 2 / eps, n, s, delta/2));
// deterministic = true replaces 2/delta -> 1/delta and delta/2 -> delta.
std::uint64_t kc_bound(const CompressionSpec& spec, double n, double s,
                       double epsilon, double delta, bool deterministic);

// Chain d <= log2|H| <= n*d.
bool cardinality_chain_holds(int d, double class_size, int n);
// Brute-force d against the exact class size; monomials only, n <= 4.
bool vc_cardinality_check(SystemId system, int n);

struct BoundReport {
  double epsilon = 0.0, delta = 0.0;
  double n = 0.0, s = 0.0;
  std::optional<std::uint64_t> vc_upper, vc_lower;
  std::optional<std::uint64_t> finite_class;
  std::optional<std::uint64_t> length_based;
  std::optional<std::uint64_t> kc;
};

}  // namespace occam
