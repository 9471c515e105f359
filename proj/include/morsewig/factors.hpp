#ifndef MORSEWIG_FACTORS_HPP
#define MORSEWIG_FACTORS_HPP

#include <complex>
#include <vector>

#include "morsewig/model.hpp"

namespace morsewig {

// Closed-form solutions w_b(t, k) of the half-shift difference equation
//   w(t-1, k) - (b/2) w(t-1/2, k) = [t^2 + k^2/(2 alpha)^2] w(t, k),
// which is the Mellin image of the stationary phase-space equations.
// Each family is a Mellin factor of the Wigner function; poles of the
// gamma functions live on right-going ladders in Re t.

// b = 0 (pure exponential wall)
cplx w_liouville(cplx t, cplx k, double alpha);
// explicit two-term form at b = 1
cplx w_b1(cplx t, cplx k, double alpha);
// explicit forms at b = 2 (two equivalent presentations)
cplx w_b2(cplx t, cplx k, double alpha);
cplx w_b2_alt(cplx t, cplx k, double alpha);
// expansion coefficients of the integer-b solution
cplx coeff_cnb(int n, int b, cplx k, double alpha);
// finite gamma-sum solution for integer b >= 0
cplx w_integer(cplx t, cplx k, int b, double alpha);
// general-b solution built from 2F1 evaluated at argument 2;
// requires 2ik/alpha away from the integers (ResonanceError otherwise)
cplx w_real(cplx t, cplx k, double b, double alpha);
// bound-level solution at k = i alpha (nu - b/2 + 1/2)
cplx w_bound(cplx t, int nu, double b, double alpha);

enum class FactorFamily { LiouvilleB0, ExplicitB1, ExplicitB2, IntegerB, RealB, Bound };

// A concrete factor: family + parameters, evaluable at complex t.
struct FactorSolution {
    FactorFamily family = FactorFamily::RealB;
    double b = 0.0;
    cplx k = 1.0;
    int nu = 0;
    double alpha = 1.0;

    cplx operator()(cplx t) const;

    // Starting Re t of every pole ladder (ladders extend rightward).
    std::vector<double> pole_ladder_origins() const;
    double leftmost_pole_re() const;

    static FactorSolution liouville(cplx k, double alpha = 1.0);
    static FactorSolution explicit_b1(cplx k, double alpha = 1.0);
    static FactorSolution explicit_b2(cplx k, double alpha = 1.0);
    static FactorSolution integer_b(int b, cplx k, double alpha = 1.0);
    static FactorSolution real_b(double b, cplx k, double alpha = 1.0);
    static FactorSolution bound(double b, int nu, double alpha = 1.0);
};

// Relative residual of the difference equation at t, normalized by the
// largest of the three participating term magnitudes.
double difference_residual(const FactorSolution& w, cplx t);

struct DifferenceReport {
    std::vector<cplx> points;
    std::vector<double> residuals;
    double max_residual = 0.0;
};

DifferenceReport difference_report(const FactorSolution& w,
                                   const std::vector<cplx>& points);

}  // namespace morsewig

#endif
