#include "hvc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace hvc {

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw InputError("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      long long num = std::stoll(text.substr(0, slash));
      long long den = std::stoll(text.substr(slash + 1));
      return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || frac_len > 17)
      throw InputError("unsupported decimal literal: " + text);
    long long num = std::stoll(digits);
    long long den = 1;
    for (size_t i = 0; i < frac_len; ++i) {
      if (den > INT64_MAX / 10) throw InputError("decimal literal too long: " + text);
      den *= 10;
    }
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InputError("not a rational literal: " + text);
  } catch (const std::out_of_range&) {
    throw InputError("rational literal out of range: " + text);
  }
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact: partial products are binomials
    if (result > INT64_MAX) throw Error("binomial overflow: C(" + std::to_string(n) +
                                        "," + std::to_string(k) + ")");
  }
  return static_cast<long long>(result);
}

}  // namespace hvc
