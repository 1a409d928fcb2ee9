#pragma once

#include <cstdint>
#include <vector>

#include "coxid/caps.hpp"
#include "coxid/complex.hpp"

namespace coxid {

/// Rank over GF(2) of a 0/1 matrix stored as packed rows of `columns` bits.
std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t columns);

/// Reduced Betti numbers over GF(2), entry d+1 for d = -1, ..., n-2.
///
/// Computed on the order complex of B(lambda) minus its bottom and top: a face
/// with k blocks is the chain of its k-1 prefix unions, and its boundary drops
/// one subset from the chain, i.e. merges one pair of adjacent blocks. The
/// empty face sits in dimension -1, giving reduced homology. The empty complex
/// returns all zeros. Throws CapExceeded beyond caps.homology.
std::vector<long long> homology_gf2(const WeightedComplex& c, const Caps& caps = {});

}  // namespace coxid
