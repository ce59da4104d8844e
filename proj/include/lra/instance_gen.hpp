#pragma once

#include <cstdint>

#include "lra/deformation.hpp"
#include "lra/ns_leibniz.hpp"

namespace lra {

// SplitMix64 (public-domain constants). Fixed here, rather than delegating
// to <random> distributions, so that a seed produces the same instance bytes
// under every compiler and standard library. next() is
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
// and bounded draws reduce by plain modulo.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform-ish in [0, bound)
  long range(long lo, long hi);              // inclusive ends

 private:
  std::uint64_t state_;
};

struct GenProfile {
  std::size_t dim_g = 2;
  std::size_t dim_v = 2;
  long max_numerator = 2;    // |p| <= max_numerator
  long max_denominator = 1;  // 1 <= q <= max_denominator
};

Rational gen_rational(SplitMix64& rng, const GenProfile& p);
Matrix gen_matrix(SplitMix64& rng, const GenProfile& p, std::size_t rows,
                  std::size_t cols);

// Constructive sampler over known-good families (abelian; a small verified
// catalog; random brackets landing in an annihilating tail subspace;
// Nijenhuis deformations of those; twisted semidirect sums with coboundary
// twists). Every result passes check_leibniz before being returned; the same
// seed always returns the same algebra.
LeibnizAlgebra gen_leibniz(std::uint64_t seed, const GenProfile& p);

// Regular or trivial module over g, by seed. Always passes
// check_representation.
Representation gen_representation(const LeibnizAlgebra& g, std::uint64_t seed,
                                  const GenProfile& p);

// Nijenhuis map for g: scalar + a map into the annihilating tail when the
// algebra has one, else a scalar. Always passes check_nijenhuis.
Matrix gen_nijenhuis(const LeibnizAlgebra& g, std::uint64_t seed,
                     const GenProfile& p);

// Random element of the exact kernel of the degree-n differential: a seeded
// rational combination of kernel basis vectors.
Cochain gen_cocycle(const Representation& r, std::size_t degree,
                    std::uint64_t seed,
                    Degree0Convention conv = Degree0Convention::literal);

// Verified bundle by one of three constructions, chosen by seed: zero
// operator with a random cocycle twist, inverse of an invertible degree-1
// cochain, or a Nijenhuis bundle. Always passes check_twisted_rb.
TwistedRBData gen_twisted_rb(std::uint64_t seed, const GenProfile& p);

// Bundle failing check_twisted_rb: a verified bundle whose operator is
// perturbed until the check breaks (the twist stays a genuine cocycle).
TwistedRBData gen_failing_twisted_rb(std::uint64_t seed, const GenProfile& p);

}  // namespace lra
