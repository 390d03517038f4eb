#pragma once

#include <cstdint>
#include <random>

#include "carlitz/local_element.hpp"

namespace testsupport {

using carlitz::FieldConfig;
using carlitz::FieldPtr;
using carlitz::LocalElement;

inline FieldPtr field(std::uint32_t p = 3, std::uint32_t m = 1, std::uint32_t e = 1, std::int64_t ram = 2,
                      std::int64_t prec = 200) {
  FieldConfig c;
  c.p = p;
  c.m = m;
  c.e = e;
  c.ram = ram;
  c.default_prec = prec;
  return carlitz::make_field(c);
}

/// Exact element with random digits on [lo, hi] and nonzero leading digit.
inline LocalElement random_exact(std::mt19937_64& rng, const FieldPtr& f, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::uint32_t> dig(0, f->residue().size() - 1);
  std::uniform_int_distribution<std::uint32_t> nz(1, f->residue().size() - 1);
  std::map<std::int64_t, carlitz::Residue> terms;
  terms[lo] = nz(rng);
  for (std::int64_t e = lo + 1; e <= hi; ++e) terms[e] = dig(rng);
  return LocalElement::from_terms(f, terms);
}

inline LocalElement random_inexact(std::mt19937_64& rng, const FieldPtr& f, std::int64_t lo, std::int64_t prec) {
  return random_exact(rng, f, lo, prec - 1).truncate(prec);
}

}  // namespace testsupport
