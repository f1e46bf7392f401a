#ifndef GLIOSIM_EXPACT_HPP
#define GLIOSIM_EXPACT_HPP

#include <vector>

#include "gliosim/sparse.hpp"

namespace gliosim {

/*
 * Action of the matrix exponential and of phi_1 on vectors, for sparse A,
 * by scaling plus truncated Taylor series.
 *
 * The phi family
 *     phi_0(z) = e^z,   phi_p(z) = int_0^1 e^{(1-theta) z} theta^{p-1}/(p-1)! dtheta
 * obeys phi_{p+1}(z) = (phi_p(z) - 1/p!) / z; in particular
 * phi_1(z) = (e^z - 1)/z.
 *
 * exp(tA) b is evaluated in s stages of a degree-m Taylor sum,
 *     b <- sum_{p=0..m} ((t/s) A)^p b / p!,
 * with (s, m) chosen so the forward truncation bound
 *     (|t| ||A||_1 / s)^{m+1} / (m+1)!  <=  tol
 * holds, minimizing the work estimate s*m. The per-stage norm is also capped
 * so intermediate Taylor terms stay within a factor ~e^6 of the result;
 * beyond that, floating-point cancellation would visibly erode long runs.
 *
 * phi_1(tA) b rides on the same kernel through the bordered operator
 *     At = [[A, c], [0, 0]],  c = b * (||A||_1/||b||_1):
 * exp(t*At) e_{n+1} carries t*phi_1(tA) c in its top block. Scaling the
 * border column keeps ||At||_1 = ||A||_1.
 */

struct ActionParams {
    int s = 1;   // scaling stages
    int m = 1;   // Taylor truncation degree
    double tol = 1e-8;
};

inline constexpr int kMaxTaylorDegree = 55;

// Picks (s, m) satisfying the truncation bound for the given ||tA||_1.
ActionParams select_params(double norm_tA, double tol);

// y ~ exp(tA) b.
std::vector<double> expmv(double t, const SparseOperator& a, const std::vector<double>& b,
                          double tol, int workers = 1);

// y ~ phi_1(tA) b; phi_1(0) = identity.
std::vector<double> phi1v(double t, const SparseOperator& a, const std::vector<double>& b,
                          double tol, int workers = 1);

// Scalar phi_p(z) by the recurrence from phi_0 = e^z. Diagnostic only;
// z must be nonzero (the z -> 0 limit is 1/p!).
double phi_recurrence(double z, int p);

}  // namespace gliosim

#endif
