#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qst/linalg.hpp"

namespace qst {

// Proximal / projection toolbox: soft thresholding, positive-eigenvalue
// thresholding, PSD projection, rank truncation, trace normalization.

// Elementwise soft threshold sgn(x) * max(|x| - tau, 0); the complex
// extension scales each entry toward zero along its phase.
std::vector<double> shrink(std::span<const double> x, double tau);
std::vector<cplx> shrink(std::span<const cplx> x, double tau);
ComplexMatrix shrink(const ComplexMatrix& m, double tau);

// Symmetrize, eigendecompose, clamp eigenvalues at zero, soft-threshold the
// positive part by tau, then reconstruct; clamping happens before the shrink.
// rank_cap additionally keeps only the largest rank_cap eigenvalues (ties
// broken by eigensolver order). kept_sum, when given, receives the sum of the
// surviving eigenvalues (the nuclear norm of the result).
ComplexMatrix eig_threshold(const ComplexMatrix& m, double tau,
                            std::optional<int> rank_cap = std::nullopt,
                            double* kept_sum = nullptr);

// Frobenius-nearest Hermitian PSD matrix: eig_threshold with tau = 0.
ComplexMatrix project_psd(const ComplexMatrix& m);

// Nearest PSD matrix of rank <= r: clamp at zero, keep the r largest.
ComplexMatrix project_rank(const ComplexMatrix& m, int r);

enum class TraceMode { kScale, kNone };

// kScale divides by the (real) trace; requires trace > 1e-12. kNone is the
// identity.
ComplexMatrix trace_normalize(const ComplexMatrix& m, TraceMode mode);

}  // namespace qst
