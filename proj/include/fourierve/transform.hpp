#pragma once

#include <cstddef>
#include <span>

#include "fourierve/dense_table.hpp"
#include "fourierve/fourier_factor.hpp"

namespace fve {

/// Largest scope accepted by any dense (2^k-sized) routine.
inline constexpr std::size_t kMaxDenseVars = 30;

/// In-place normalized Walsh-Hadamard transform on 2^k values laid out in
/// the DenseTable convention. Afterwards slot m holds fhat(S) where S is
/// the set of bits of m, with fhat(S) = 2^-k sum_x f(x) chi_S(x).
void wht_forward_inplace(std::span<double> data);

/// Inverse of wht_forward_inplace: coefficients by subset mask to values.
void wht_inverse_inplace(std::span<double> data);

/// Fourier coefficients of a value table. O(k 2^k). Zero coefficients are
/// dropped. Throws ScopeTooLarge above kMaxDenseVars.
FourierFactor wht_forward(const DenseTable& table);

/// Value table of `factor` laid out over `scope_order`. Throws
/// ScopeMismatch if some term uses a variable outside `scope_order`, and
/// ScopeTooLarge above kMaxDenseVars.
DenseTable wht_inverse(const FourierFactor& factor, std::span<const VarId> scope_order);

}  // namespace fve
