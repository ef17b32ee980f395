#include "segsec/la/rng.hpp"

#include <algorithm>

namespace segsec::la {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(Seed seed) noexcept : key_(mix64(seed.value + kGamma)) {}

Rng Rng::split(std::uint64_t tag) const noexcept {
  return Rng(mix64(key_ ^ mix64(tag * kGamma + 0x632BE59BD9B4E019ull)), 0);
}

std::uint64_t Rng::next() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGamma);
}

std::uint64_t Rng::uniform(std::uint64_t bound) noexcept {
  const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

std::vector<Elem> random_vector(std::size_t len, const PrimeField& f, Rng& rng) {
  std::vector<Elem> v(len);
  for (auto& e : v) e = rng.uniform(f);
  return v;
}

void normalize_projective(std::vector<Elem>& v, const PrimeField& f) {
  const auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (lead == v.end() || *lead == 1) return;
  const Elem inv = f.inv(*lead);
  for (auto& e : v) e = f.mul(e, inv);
}

std::vector<Elem> random_projective_point(std::size_t dim, const PrimeField& f, Rng& rng) {
  std::vector<Elem> v;
  do {
    v = random_vector(dim + 1, f, rng);
  } while (std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; }));
  normalize_projective(v, f);
  return v;
}

}  // namespace segsec::la
