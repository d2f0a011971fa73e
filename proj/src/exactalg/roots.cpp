#include "exactalg/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dahazeta::exactalg {

namespace {

using CLD = std::complex<long double>;

CLD eval_poly(const std::vector<long double>& c, CLD z) {
    CLD r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

}  // namespace

ComplexRootSet complex_roots(const UniRealPoly& p, double tol, int max_iter) {
    if (p.degree() < 1) throw std::domain_error("complex_roots: degree < 1");

    // strip roots at zero
    size_t val = 0;
    while (val < p.coeffs().size() && p.coeffs()[val] == 0) ++val;
    std::vector<long double> c;
    for (size_t i = val; i < p.coeffs().size(); ++i)
        c.push_back(p.coeffs()[i].convert_to<long double>());
    int n = static_cast<int>(c.size()) - 1;

    ComplexRootSet out;
    if (val > 0) out.roots.push_back({{0.0, 0.0}, static_cast<int>(val)});
    if (n == 0) return out;

    std::vector<long double> dc(n);
    for (int i = 1; i <= n; ++i) dc[i - 1] = c[i] * i;

    // Fujiwara-style radius
    long double r = 0;
    for (int i = 0; i < n; ++i) {
        long double v = std::pow(std::abs(c[i] / c[n]), 1.0L / (n - i));
        r = std::max(r, v);
    }
    r = 2 * std::max(r, (long double)0.5);

    std::vector<CLD> z(n);
    const long double pi = std::acos(-1.0L);
    for (int i = 0; i < n; ++i) {
        long double ang = 2 * pi * i / n + 0.79L / n + 0.35L;
        long double rad = r * (0.5L + 0.5L * (i % 7 + 1) / 7.0L);
        z[i] = CLD(rad * std::cos(ang), rad * std::sin(ang));
    }

    long double resid = 0;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        converged = true;
        resid = 0;
        for (int i = 0; i < n; ++i) {
            CLD pv = eval_poly(c, z[i]);
            CLD dv = eval_poly(dc, z[i]);
            if (pv == CLD(0)) continue;
            if (dv == CLD(0)) { z[i] += CLD(1e-8L, 1e-8L); converged = false; continue; }
            CLD N = pv / dv;
            CLD S = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) S += CLD(1) / (z[i] - z[j]);
            CLD w = N / (CLD(1) - N * S);
            z[i] -= w;
            long double err = std::abs(w) / (1 + std::abs(z[i]));
            resid = std::max(resid, err);
            if (err > tol / 4) converged = false;
        }
    }
    if (!converged && resid > tol)
        throw std::runtime_error("complex_roots: no convergence, residual " + std::to_string((double)resid));

    // conjugate symmetry: snap near-real roots, then pair the rest
    for (auto& zi : z)
        if (std::abs(zi.imag()) < 1e-13L * (1 + std::abs(zi))) zi = CLD(zi.real(), 0);
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (used[i] || z[i].imag() == 0) continue;
        int best = -1;
        long double bd = 1e30L;
        for (int j = 0; j < n; ++j) {
            if (j == i || used[j] || z[j].imag() == 0) continue;
            long double d = std::abs(z[j] - std::conj(z[i]));
            if (d < bd) { bd = d; best = j; }
        }
        if (best >= 0 && bd < 1e-6L * (1 + std::abs(z[i]))) {
            CLD avg = (z[i] + std::conj(z[best])) / (long double)2;
            z[i] = avg;
            z[best] = std::conj(avg);
            used[i] = used[best] = true;
        }
    }

    // cluster for multiplicities
    std::vector<CLD> sorted = z;
    std::sort(sorted.begin(), sorted.end(), [](CLD a, CLD b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    long double cluster_eps = 4e-7L;
    for (size_t i = 0; i < sorted.size();) {
        size_t j = i;
        CLD sum = 0;
        while (j < sorted.size() && std::abs(sorted[j] - sorted[i]) < cluster_eps * (1 + std::abs(sorted[i]))) {
            sum += sorted[j];
            ++j;
        }
        CLD mean = sum / (long double)(j - i);
        out.roots.push_back({{(double)mean.real(), (double)mean.imag()}, static_cast<int>(j - i)});
        i = j;
    }
    out.residual = (double)resid;
    return out;
}

std::complex<double> polish_exact(const UniRealPoly& p, std::complex<double> z0, int steps) {
    // complex arithmetic over Q, with rounding to 2^-200 between steps
    const Int scale = Int(1) << 200;
    auto round_rat = [&](const Rat& x) {
        Int num = numerator(x) * scale;
        Int den = denominator(x);
        Int q = num / den;  // truncation is fine at this precision
        return Rat(q, scale);
    };
    Rat x(z0.real()), y(z0.imag());
    const auto& c = p.coeffs();
    for (int s = 0; s < steps; ++s) {
        // Horner for p and p' at x+iy
        Rat pr = 0, pi = 0, dr = 0, di = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            // d = d*z + p ; p = p*z + coeff
            Rat ndr = dr * x - di * y + pr;
            Rat ndi = dr * y + di * x + pi;
            dr = ndr; di = ndi;
            Rat npr = pr * x - pi * y + *it;
            Rat npi = pr * y + pi * x;
            pr = npr; pi = npi;
        }
        Rat dn = dr * dr + di * di;
        if (dn == 0) break;
        Rat wx = (pr * dr + pi * di) / dn;
        Rat wy = (pi * dr - pr * di) / dn;
        x = round_rat(x - wx);
        y = round_rat(y - wy);
    }
    return {rat_to_double(x), rat_to_double(y)};
}

}  // namespace dahazeta::exactalg
