#pragma once

#include <cstdint>

// Bit codes for the spin strings of the tree contraction.
//
// Full form (width 2p+1): a = (a_1,...,a_p,a_0,a_-p,...,a_-1), bit 0 holds
// a_1 and ascending bits follow that order.  Grown form (width 2m):
// a = (a_1,...,a_m,a_-m,...,a_-1).  Bit value 0 encodes spin +1, bit value 1
// encodes spin -1.

namespace treeqaoa {

using Code = std::uint32_t;

inline int spin(Code code, int slot) { return (code >> slot) & 1u ? -1 : +1; }

// slots in the full (2p+1)-wide string
inline int full_slot_plus(int /*p*/, int j) { return j - 1; }        // a_j, 1<=j<=p
inline int full_slot_zero(int p) { return p; }                       // a_0
inline int full_slot_minus(int p, int j) { return 2 * p + 1 - j; }   // a_-j

// slots in a grown 2m-wide string
inline int grown_slot_plus(int j) { return j - 1; }                  // a_j, 1<=j<=m
inline int grown_slot_minus(int m, int j) { return 2 * m - j; }      // a_-j

// reflection a_j <-> a_-j == reversal of the 2m bits
inline Code reflect(Code code, int m) {
  Code r = 0;
  for (int k = 0; k < 2 * m; ++k) {
    r <<= 1;
    r |= code & 1u;
    code >>= 1;
  }
  return r;
}

// largest j with a_j != a_-j, or 0 for a fully symmetric string
inline int symmetry_label(Code code, int m) {
  for (int j = m; j >= 1; --j)
    if (((code >> grown_slot_plus(j)) & 1u) != ((code >> grown_slot_minus(m, j)) & 1u)) return j;
  return 0;
}

// drop the outer components |j| > t: width 2m -> width 2t
inline Code truncate_center(Code code, int m, int t) {
  const Code low = code & ((Code{1} << t) - 1);
  const Code high = (code >> (2 * m - t)) & ((Code{1} << t) - 1);
  return low | (high << t);
}

}  // namespace treeqaoa
