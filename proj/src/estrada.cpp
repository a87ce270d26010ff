#include <algorithm>
#include <cmath>
#include <limits>

#include "dee/errors.hpp"
#include "dee/estrada_bounds.hpp"

namespace dee {

EstradaValue estrada_index(const Spectrum& s) {
  EstradaValue out;
  if (s.size() == 0) {
    out.log_value = -std::numeric_limits<double>::infinity();
    return out;
  }
  // Neumaier-compensated sum of exponentials.
  double sum = 0.0;
  double carry = 0.0;
  for (double x : s.values()) {
    const double term = std::exp(x);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  out.value = std::isfinite(sum) ? sum + carry : std::numeric_limits<double>::infinity();

  const double top = s.largest();
  double scaled = 0.0;
  for (double x : s.values()) scaled += std::exp(x - top);
  out.log_value = top + std::log(scaled);
  out.overflowed = top > kLogDomainThreshold;
  return out;
}

double ShiftedExp::value() const { return constant + std::exp(exponent); }

double ShiftedExp::log() const {
  // log(c + e^x) = x + log1p(c e^{-x}); exact enough whichever term dominates.
  return exponent + std::log1p(constant * std::exp(-exponent));
}

}  // namespace dee
