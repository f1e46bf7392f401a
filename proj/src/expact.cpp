#include "gliosim/expact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "gliosim/errors.hpp"

namespace gliosim {

namespace {

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double one_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

}  // namespace

ActionParams select_params(double norm_tA, double tol) {
    if (!std::isfinite(norm_tA) || norm_tA < 0.0)
        throw std::invalid_argument("select_params: operator norm must be finite and nonnegative");
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("select_params: tolerance must lie in (0, 1)");

    ActionParams best;
    best.tol = tol;
    if (norm_tA == 0.0) return best;

    // Per-stage norm cap: with r = ||tA||_1/s beyond ~6 the intermediate
    // Taylor terms exceed the result by e^r and their rounding errors survive
    // the cancellation, which matters once runs take thousands of stages.
    const double r_cap = 6.0;

    double best_cost = -1.0;
    for (int m = 1; m <= kMaxTaylorDegree; ++m) {
        // Largest per-stage norm with truncation error r^{m+1}/(m+1)! <= tol.
        double r = std::exp((std::log(tol) + std::lgamma(m + 2.0)) / (m + 1.0));
        r = std::min(r, r_cap);
        const double stages = std::max(1.0, std::ceil(norm_tA / r));
        if (stages > 2e9) continue;
        const double cost = stages * m;
        if (best_cost < 0.0 || cost < best_cost) {
            best_cost = cost;
            best.s = static_cast<int>(stages);
            best.m = m;
        }
    }
    if (best_cost < 0.0)
        throw numeric_error("select_params: scaled operator norm too large for any stage count");
    return best;
}

std::vector<double> expmv(double t, const SparseOperator& a, const std::vector<double>& b,
                          double tol, int workers) {
    if (b.size() != static_cast<std::size_t>(a.dim()))
        throw std::invalid_argument("expmv: vector length does not match operator dimension");
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("expmv: tolerance must lie in (0, 1)");
    if (t == 0.0) return b;

    const double norm_tA = std::abs(t) * a.one_norm();
    const ActionParams p = select_params(norm_tA, tol);
    const double tau = t / p.s;

    std::vector<double> f = b;       // accumulated stage result
    std::vector<double> term = b;    // current Taylor term
    std::vector<double> scratch(b.size());

    for (int stage = 0; stage < p.s; ++stage) {
        double prev = inf_norm(term);
        for (int j = 1; j <= p.m; ++j) {
            a.apply(term, scratch, workers);
            const double c = tau / j;
            for (std::size_t i = 0; i < term.size(); ++i) {
                term[i] = c * scratch[i];
                f[i] += term[i];
            }
            const double cur = inf_norm(term);
            const double fn = inf_norm(f);
            if (!std::isfinite(cur) || !std::isfinite(fn))
                throw numeric_error("expmv: series diverged to non-finite values; reduce t");
            // Two consecutive small terms end the stage early.
            if (prev + cur <= tol * fn) break;
            prev = cur;
        }
        term = f;
    }
    return f;
}

std::vector<double> phi1v(double t, const SparseOperator& a, const std::vector<double>& b,
                          double tol, int workers) {
    const std::int64_t n = a.dim();
    if (b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("phi1v: vector length does not match operator dimension");
    if (!(tol > 0.0 && tol < 1.0))
        throw std::invalid_argument("phi1v: tolerance must lie in (0, 1)");
    if (t == 0.0) return b;

    const double bnorm = one_norm(b);
    if (bnorm == 0.0) return std::vector<double>(b.size(), 0.0);

    const double anorm = a.one_norm();
    if (std::abs(t) * anorm <= 1e-8) {
        // phi_1(tA) b = b + tAb/2 + O(||tA||^2); the dropped terms are below
        // double precision here. Also covers A = 0, where phi_1 is the identity.
        std::vector<double> ab(b.size());
        a.apply(b, ab, workers);
        std::vector<double> out = b;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += 0.5 * t * ab[i];
        return out;
    }

    // Bordered operator [[A, b/gamma], [0, 0]]; gamma makes the border
    // column sum to ||A||_1 so the stage count is unchanged.
    const double gamma = bnorm / anorm;
    const auto& offs = a.row_offsets();
    const auto& cols = a.column_indices();
    const auto& vals = a.coefficients();

    CsrBuilder builder(n + 1);
    std::vector<std::pair<std::int32_t, double>> row;
    for (std::int64_t i = 0; i < n; ++i) {
        row.clear();
        for (std::int64_t k = offs[i]; k < offs[i + 1]; ++k)
            row.emplace_back(cols[k], vals[k]);
        if (b[i] != 0.0)
            row.emplace_back(static_cast<std::int32_t>(n), b[i] / gamma);
        builder.push_row(row);
    }
    builder.push_row({});
    const SparseOperator bordered = builder.finish();

    std::vector<double> unit(n + 1, 0.0);
    unit[n] = 1.0;
    const std::vector<double> y = expmv(t, bordered, unit, tol, workers);

    // Top block of exp(t*At) e_{n+1} is t * phi_1(tA) b / gamma.
    std::vector<double> out(b.size());
    const double scale = gamma / t;
    for (std::int64_t i = 0; i < n; ++i) out[i] = scale * y[i];
    return out;
}

double phi_recurrence(double z, int p) {
    if (p < 0) throw std::invalid_argument("phi_recurrence: order must be nonnegative");
    if (z == 0.0) throw std::invalid_argument("phi_recurrence: z must be nonzero");
    double phi = std::exp(z);
    double factorial = 1.0;  // (k-1)! when computing phi_k
    for (int k = 1; k <= p; ++k) {
        phi = (phi - 1.0 / factorial) / z;
        factorial *= k;
    }
    return phi;
}

}  // namespace gliosim
