#include "bjorth/random.hpp"

#include <cmath>

namespace bjorth {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t k : keys) h = mix64(h ^ mix64(k + 0x632be59bd9b4e019ULL));
  return h;
}

cx Rng::gaussian(Field field) {
  if (field == Field::Real) return {normal(), 0.0};
  const double s = std::sqrt(0.5);
  const double re = normal(s);
  const double im = normal(s);
  return {re, im};
}

Vector Rng::unit_vector(std::size_t n, Field field) {
  Vector v(n, field);
  double norm2 = 0.0;
  while (norm2 == 0.0) {
    for (std::size_t i = 0; i < n; ++i) v[i] = gaussian(field);
    norm2 = v.norm_squared();
  }
  return v.normalized();
}

}  // namespace bjorth
