#include "antiexact/index_set.hpp"

#include "antiexact/errors.hpp"

namespace antiexact {

std::vector<int> mask_indices(IndexMask m) {
    std::vector<int> out;
    for (int i = 1; m != 0; ++i, m >>= 1)
        if (m & 1u) out.push_back(i);
    return out;
}

IndexMask mask_from_indices(const std::vector<int>& indices) {
    IndexMask m = 0;
    for (int i : indices) {
        if (i < 1 || i > 32) throw Error("coordinate index out of range");
        IndexMask bit = IndexMask(1) << (i - 1);
        if (m & bit) throw Error("repeated coordinate index in index set");
        m |= bit;
    }
    return m;
}

int wedge_sign(IndexMask I, IndexMask J) {
    if (I & J) return 0;
    // Count inversions: pairs (i in I, j in J) with i > j.
    int inversions = 0;
    for (IndexMask rest = I; rest != 0;) {
        IndexMask low = rest & (~rest + 1);
        inversions += std::popcount(J & (low - 1));
        rest ^= low;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

int hodge_sign(IndexMask I, int n) {
    return wedge_sign(I, mask_all(n) & ~I);
}

int interior_sign(IndexMask I, int i) {
    if (!mask_contains(I, i)) throw Error("interior sign: index not in set");
    int pos = std::popcount(I & ((IndexMask(1) << (i - 1)) - 1));
    return (pos % 2 == 0) ? 1 : -1;
}

std::vector<IndexMask> all_masks(int n, int k) {
    std::vector<IndexMask> out;
    if (k < 0 || k > n) return out;
    IndexMask top = mask_all(n);
    for (IndexMask m = 0; m <= top; ++m)
        if (mask_degree(m) == k) out.push_back(m);
    return out;
}

std::string mask_str(IndexMask m, const std::vector<std::string>& vars) {
    if (m == 0) return "";
    std::string out;
    for (int i : mask_indices(m)) {
        if (!out.empty()) out += "^";
        out += "d" + vars[static_cast<size_t>(i - 1)];
    }
    return out;
}

}  // namespace antiexact
