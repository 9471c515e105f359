#include "morsewig/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "morsewig/errors.hpp"
#include "morsewig/quadrature.hpp"
#include "morsewig/specfun.hpp"

namespace morsewig {

static const double PI = 3.14159265358979323846;

MellinResult inverse_mellin(const std::function<cplx(cplx)>& F, double u,
                            const ContourSpec& spec) {
    if (!(u > 0.0)) throw DomainError("inverse_mellin: u must be positive");
    const double panel = 0.5;
    // u^{-s} oscillates along the contour at |log u| radians per unit height,
    // so the node density must grow with it to keep the panels resolved
    int npu = std::max(spec.nodes_per_unit,
                       int(std::lround(3.0 * std::abs(std::log(u)))));
    int n = std::max(4, int(std::lround(npu * panel)));
    const GaussLegendre& rule = gauss_legendre(n);
    double lu = std::log(u);

    auto do_panel = [&](double lo, double& amax) {
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i) {
            double y = lo + 0.5 * panel * (rule.x[i] + 1.0);
            cplx s(spec.c, y);
            cplx v = F(s) * std::exp(-s * lu);
            acc += (0.5 * panel * rule.w[i]) * v;
            amax = std::max(amax, std::abs(v));
        }
        return acc;
    };

    cplx total = 0.0;
    if (spec.half_length > 0.0) {
        double T = spec.half_length;
        int pairs = int(std::ceil(T / panel));
        double amax = 0.0;
        for (int j = 0; j < pairs; ++j) {
            total += do_panel(j * panel, amax);
            total += do_panel(-(j + 1) * panel, amax);
        }
        return {total / (2.0 * PI), 0.0, pairs * panel};
    }

    double T = 0.0, peak = 0.0, prev_tail = 1e300;
    int stagnant = 0;
    while (true) {
        double amax = 0.0;
        total += do_panel(T, amax);
        total += do_panel(-T - panel, amax);
        peak = std::max(peak, amax);
        T += panel;
        if (amax <= spec.rel_tol * peak)
            return {total / (2.0 * PI), amax / peak, T};
        // noise-floor detection: small relative tail that stops decreasing
        if (amax <= 1e-5 * peak) {
            if (amax >= 0.7 * prev_tail) ++stagnant; else stagnant = 0;
            if (stagnant >= 2) return {total / (2.0 * PI), amax / peak, T};
        }
        prev_tail = amax;
        if (T >= spec.max_half_length)
            throw ContourError("inverse_mellin: truncation cap reached");
    }
}

// ---------------------------------------------------------------------------

static FactorSolution factor_for(const MorseSystem& sys,
                                 const SpectralLabel& label, FactorForm form) {
    double b = sys.b();
    if (label.is_bound()) return FactorSolution::bound(b, label.nu, sys.alpha);
    if (form == FactorForm::IntegerGammaSum) {
        long bi = std::lround(b);
        if (std::abs(b - bi) > 1e-9)
            throw DomainError("integer factor form requires integer b");
        return FactorSolution::integer_b(int(bi), label.k, sys.alpha);
    }
    return FactorSolution::real_b(b, label.k, sys.alpha);
}

MellinIntegrand assemble_integrand(const MorseSystem& sys,
                                   const SpectralLabel& left,
                                   const SpectralLabel& right, double x,
                                   cplx p, FactorForm form) {
    FactorSolution wl = factor_for(sys, left, form);
    FactorSolution wr = factor_for(sys, right, form);
    cplx shift = cplx(0, 1) * p / (2.0 * sys.alpha * sys.hbar);

    MellinIntegrand out;
    out.u = sys.u_of_x(x);
    // t_L = s - shift: pole Re t = o  =>  Re s = o + Re(shift)
    for (double o : wl.pole_ladder_origins())
        out.pole_origins.push_back(o + shift.real());
    for (double o : wr.pole_ladder_origins())
        out.pole_origins.push_back(o - shift.real());
    out.leftmost_pole_re = *std::min_element(out.pole_origins.begin(),
                                             out.pole_origins.end());
    out.F = [wl, wr, shift](cplx s) { return wl(s - shift) * wr(s + shift); };
    return out;
}

cplx meijer_g4004(double z, const std::array<cplx, 4>& a,
                  const ContourSpec& spec) {
    if (!(z > 0.0)) throw DomainError("meijer_g4004: z must be positive");
    // Gamma(a_j + s) poles run left from s = -a_j; contour stays right.
    double cmin = -1e300;
    for (const cplx& aj : a) cmin = std::max(cmin, -aj.real());
    ContourSpec s2 = spec;
    s2.c = cmin + 0.5;
    auto F = [&a](cplx s) {
        cplx prod = 1.0;
        for (const cplx& aj : a) prod *= gamma_c(aj + s);
        return prod;
    };
    return inverse_mellin(F, z, s2).value;
}

static PointResult contour_point(const MorseSystem& sys,
                                 const SpectralLabel& left,
                                 const SpectralLabel& right, double x, cplx p,
                                 int order,
                                 const std::optional<ContourSpec>& user,
                                 FactorForm form) {
    MellinIntegrand ig = assemble_integrand(sys, left, right, x, p, form);
    ContourSpec spec = user.value_or(ContourSpec{});
    if (!user || !(spec.c < ig.leftmost_pole_re)) {
        // The integrand magnitude scales like u^{-c}, so the roundoff left in
        // the contour sum is amplified by u^{-c} relative to the result. For
        // large u the abscissa therefore has to hug the leftmost pole ladder;
        // the node density is raised to resolve the nearby pole.
        double lnu = std::log(ig.u);
        if (lnu > 3.0) {
            double delta = std::clamp(1.5 / lnu, 0.1, 0.5);
            spec.c = ig.leftmost_pole_re - delta;
            spec.nodes_per_unit = std::max(spec.nodes_per_unit,
                                           int(std::lround(8.0 / delta)));
        } else {
            spec.c = std::min(ig.leftmost_pole_re - 0.5, -0.25);
        }
    }
    std::function<cplx(cplx)> F = ig.F;
    if (order > 0) {
        double a4 = -4.0 * sys.alpha;
        F = [F, a4, order](cplx s) {
            cplx w = std::pow(a4 * s, order);
            return w * F(s);
        };
    }
    MellinResult r = inverse_mellin(F, ig.u, spec);
    return {r.value, r.tail};
}

PointResult wigner_point(const MorseSystem& sys, const SpectralLabel& left,
                         const SpectralLabel& right, double x, cplx p,
                         const std::optional<ContourSpec>& spec,
                         FactorForm form) {
    return contour_point(sys, left, right, x, p, 0, spec, form);
}

PointResult wigner_x_derivative(const MorseSystem& sys,
                                const SpectralLabel& left,
                                const SpectralLabel& right, double x, cplx p,
                                int order, const std::optional<ContourSpec>& spec,
                                FactorForm form) {
    if (order < 0) throw DomainError("wigner_x_derivative: negative order");
    return contour_point(sys, left, right, x, p, order, spec, form);
}

WignerField wigner_field(const MorseSystem& sys, const SpectralLabel& left,
                         const SpectralLabel& right,
                         const std::vector<double>& xs,
                         const std::vector<double>& ps,
                         const std::optional<ContourSpec>& spec, int threads,
                         FactorForm form) {
    if (xs.empty() || ps.empty()) throw FieldError("wigner_field: empty grid");
    WignerField f;
    f.x = xs;
    f.p = ps;
    size_t total = xs.size() * ps.size();
    f.values.assign(total, cplx(0.0));
    f.err.assign(total, 0.0);
    f.ok.assign(total, 0);

    auto run_range = [&](size_t lo, size_t hi) {
        for (size_t idx = lo; idx < hi; ++idx) {
            size_t ix = idx / ps.size(), ip = idx % ps.size();
            try {
                PointResult r =
                    wigner_point(sys, left, right, xs[ix], ps[ip], spec, form);
                f.values[idx] = r.value;
                f.err[idx] = r.err;
                f.ok[idx] = 1;
            } catch (const Error&) {
                f.ok[idx] = 0;
            }
        }
    };

    int nw = threads > 0 ? threads
                         : int(std::min<size_t>(std::thread::hardware_concurrency(),
                                                total));
    if (nw <= 1) {
        run_range(0, total);
    } else {
        std::vector<std::future<void>> futs;
        size_t chunk = (total + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            size_t lo = w * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            futs.push_back(std::async(std::launch::async, run_range, lo, hi));
        }
        for (auto& fu : futs) fu.get();
    }
    return f;
}

}  // namespace morsewig
