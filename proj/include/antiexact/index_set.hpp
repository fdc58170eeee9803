#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace antiexact {

/// Strictly increasing coordinate subsets encoded as bitmasks: coordinate
/// i in {1..n} corresponds to bit (i-1). The encoding makes the canonical
/// ordering and the sign bookkeeping single bit-twiddling routines.
using IndexMask = std::uint32_t;

inline int mask_degree(IndexMask m) { return std::popcount(m); }

inline bool mask_contains(IndexMask m, int i) { return (m >> (i - 1)) & 1u; }

inline IndexMask mask_all(int n) { return (n == 32) ? ~IndexMask(0) : ((IndexMask(1) << n) - 1); }

/// 1-based ascending coordinate indices of the set.
std::vector<int> mask_indices(IndexMask m);

IndexMask mask_from_indices(const std::vector<int>& indices);

/// Sign of dx_I ^ dx_J relative to dx_{I u J} in ascending order;
/// 0 when the sets overlap.
int wedge_sign(IndexMask I, IndexMask J);

/// Sign s with dx_I ^ dx_{I^c} = s * dx_1 ^ ... ^ dx_n.
int hodge_sign(IndexMask I, int n);

/// Sign (-1)^{p-1} where p is the 1-based position of i within I
/// (the interior-product antiderivation sign); requires i in I.
int interior_sign(IndexMask I, int i);

/// All index sets of the given cardinality on {1..n}, ascending as masks.
std::vector<IndexMask> all_masks(int n, int k);

std::string mask_str(IndexMask m, const std::vector<std::string>& vars);

}  // namespace antiexact
