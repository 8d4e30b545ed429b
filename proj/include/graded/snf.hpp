#pragma once

#include <cstdint>
#include <vector>

namespace graded {

/// Smith decomposition of an integer matrix whose columns generate a
/// full-rank sublattice L of Z^k.  After reduction,
///
///     L = P * diag(d_0, ..., d_{k-1}) * Z^k,       P unimodular,
///
/// so Z^k / L is the product of cyclic groups Z_{d_t}, the coordinates of
/// a coset are (Pinv * x) mod d, and column t of P is a representative of
/// the t-th cyclic generator.  Invariant: d_t | d_{t+1}, all d_t > 0.
struct SmithResult {
    std::vector<long long> diag;
    std::vector<std::vector<long long>> P;    // k x k, column t = generator rep
    std::vector<std::vector<long long>> Pinv; // k x k, quotient coordinates
};

/// cols: list of lattice generators, each of length k (k >= 1).
/// The generated lattice must have full rank k (guaranteed in this codebase
/// because the basis relations n_i * e_i are always included).
SmithResult smith_normal_form(std::vector<std::vector<long long>> cols, int k);

} // namespace graded
