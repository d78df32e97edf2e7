#pragma once

#include <complex>
#include <cstdint>

namespace qsim {

// Amplitudes are double-precision complex numbers, 16 bytes each.
using Amp = std::complex<double>;
using Index = std::uint64_t;

constexpr Index index_bit(int k) { return Index{1} << k; }

// Inserts a zero bit at position k, shifting higher bits up. Maps the
// j-th pair index to the index of the pair member whose k-th bit is 0.
constexpr Index insert_zero_bit(Index j, int k) {
    Index low = j & (index_bit(k) - 1);
    return ((j >> k) << (k + 1)) | low;
}

} // namespace qsim
