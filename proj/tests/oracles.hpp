#pragma once

// Brute-force reference computations used as independent oracles. None of
// them call into the library code they check; they only read group tables
// and module action matrices.

#include <cstdint>
#include <vector>

#include "stablelab/gmodule.hpp"

namespace oracle {

using stablelab::Element;

/// m_H(g) as the number of left cosets xH with g x H = x H.
std::vector<std::int64_t> fixed_point_character(const stablelab::FiniteGroup& g, const std::vector<Element>& h);
/// m_H(g) = |C_G(g)| |C(g) ∩ H| / |H|.
std::vector<std::int64_t> centralizer_character(const stablelab::FiniteGroup& g, const std::vector<Element>& h);

/// H^1 and H^2 of a cyclic group from the periodic resolution:
/// H^1 = ker N / (s - 1)A and H^2 = A^G / N A, with s the given generator.
std::vector<std::int64_t> herbrand_h1(const stablelab::ModulePtr& a, Element s);
std::vector<std::int64_t> herbrand_h2(const stablelab::ModulePtr& a, Element s);

/// |H^1_*(G, A)| by enumerating crossed homomorphisms and testing each
/// restriction to every cyclic subgroup for being a coboundary.
std::int64_t h1_star_order(const stablelab::ModulePtr& a);

/// Number of primes <= x by trial division.
std::uint64_t trial_division_pi(std::uint64_t x);
bool is_prime(std::uint64_t n);

}  // namespace oracle
