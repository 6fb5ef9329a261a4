#pragma once

#include <memory>
#include <span>
#include <vector>

#include "shipwave/linalg.hpp"

namespace shipwave {

enum class ChebyshevKind { second_kind, first_kind };

// Chebyshev point set on [0,1] with barycentric weights.
//
// second_kind: tau_k = (1 - cos(k pi / m)) / 2, k = 0..m, with Salzer weights
//   w_k = (-1)^k sigma_k, sigma_k = 1 at both endpoints and 2 inside.
// first_kind:  tau_k = (1 - cos((k + 1/2) pi / (m + 1))) / 2, k = 0..m,
//   strictly inside (0,1), with w_k = (-1)^k sin((k + 1/2) pi / (m + 1)).
struct ChebyshevGrid {
    ChebyshevKind kind;
    int order;  // polynomial order m; node count is m + 1
    std::vector<double> nodes;
    std::vector<double> bary_weights;
};

ChebyshevGrid grid_second_kind(int m);
ChebyshevGrid grid_first_kind(int m_check);

// Cached immutable grids, shared between threads.
std::shared_ptr<const ChebyshevGrid> shared_grid(ChebyshevKind kind, int m);

// Second barycentric formula. A query landing on a node (exactly, or within
// 4 machine epsilons) returns the stored value.
Complex bary_eval(const ChebyshevGrid& grid, std::span<const Complex> values, double tau);

// Value and first derivative of the interpolant at a point that is not a node.
void bary_eval_with_derivative(const ChebyshevGrid& grid, std::span<const Complex> values,
                               double tau, Complex& value, Complex& derivative);

// Coefficient of (f_l - f_k) in the nodal derivative formula at node l:
// w_k / (w_l (tau_k - tau_l)) for k != l, zero on the diagonal (the diagonal
// is absorbed by the row-sum trick when building differentiation matrices).
double diff_entry(const ChebyshevGrid& grid, int l, int k);

}  // namespace shipwave
