#ifndef MORSEWIG_QUADRATURE_HPP
#define MORSEWIG_QUADRATURE_HPP

#include <vector>

namespace morsewig {

// Gauss-Legendre rule on [-1, 1]. Nodes/weights are computed once per order
// (Newton iteration on the Legendre recurrence) and cached.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};

const GaussLegendre& gauss_legendre(int n);

// Composite Gauss-Legendre integral of f over [a, b] split into `panels`
// equal panels with an n-point rule on each.
template <class F>
auto composite_gl(F&& f, double a, double b, int panels, int n)
    -> decltype(f(0.0)) {
    const GaussLegendre& rule = gauss_legendre(n);
    decltype(f(0.0)) total{};
    double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * h;
        for (int i = 0; i < n; ++i) {
            double t = lo + 0.5 * h * (rule.x[i] + 1.0);
            total += (0.5 * h * rule.w[i]) * f(t);
        }
    }
    return total;
}

}  // namespace morsewig

#endif
