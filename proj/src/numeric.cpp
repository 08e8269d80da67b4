#include "galois/numeric.hpp"

#include <cmath>
#include <algorithm>

#include "galois/errors.hpp"

namespace galois {

Cplx operator+(const Cplx& a, const Cplx& b) {
    return Cplx(mpf_class(a.re + b.re), mpf_class(a.im + b.im));
}

Cplx operator-(const Cplx& a, const Cplx& b) {
    return Cplx(mpf_class(a.re - b.re), mpf_class(a.im - b.im));
}

Cplx operator*(const Cplx& a, const Cplx& b) {
    return Cplx(mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re));
}

Cplx operator/(const Cplx& a, const Cplx& b) {
    mpf_class d(b.re * b.re + b.im * b.im);
    return Cplx(mpf_class((a.re * b.re + a.im * b.im) / d),
                mpf_class((a.im * b.re - a.re * b.im) / d));
}

Cplx conj(const Cplx& a) { return Cplx(a.re, mpf_class(-a.im)); }

mpf_class abs2(const Cplx& a) { return mpf_class(a.re * a.re + a.im * a.im); }

mpf_class cabs(const Cplx& a) { return sqrt(abs2(a)); }

mpf_class mpf_from_rational(const Rational& q, long bits) {
    mpf_class f(0, bits);
    f = mpf_class(q, bits);
    return f;
}

mpf_class pow2_mpf(long e, long bits) {
    mpf_class f(1, bits);
    if (e >= 0)
        mpf_mul_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpf_div_2exp(f.get_mpf_t(), f.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
    return f;
}

namespace {

Cplx horner(const std::vector<Cplx>& coeffs, const Cplx& z, long bits) {
    Cplx acc = Cplx::make(bits);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

std::vector<Cplx> derivative_coeffs(const std::vector<Cplx>& coeffs, long bits) {
    std::vector<Cplx> d;
    for (size_t i = 1; i < coeffs.size(); ++i) {
        mpf_class k(static_cast<long>(i), bits);
        d.push_back(Cplx(mpf_class(coeffs[i].re * k), mpf_class(coeffs[i].im * k)));
    }
    return d;
}

}  // namespace

RootFindResult find_roots(const std::vector<Cplx>& monic_coeffs, long bits) {
    RootFindResult res;
    const int n = static_cast<int>(monic_coeffs.size()) - 1;
    if (n <= 0) return res;

    if (n == 1) {
        // z + a0 = 0
        ComplexApprox r;
        r.re = mpf_class(-monic_coeffs[0].re, bits);
        r.im = mpf_class(-monic_coeffs[0].im, bits);
        r.error_radius = pow2_mpf(-bits + 8, bits);
        r.precision_bits = bits;
        res.roots.push_back(std::move(r));
        res.separated = true;
        return res;
    }

    // Cauchy bound: all roots lie within |z| <= 1 + max |a_i|.
    mpf_class bound(1, bits);
    for (int i = 0; i < n; ++i) {
        mpf_class m = cabs(monic_coeffs[static_cast<size_t>(i)]);
        if (m > bound) bound = m;
    }
    bound = mpf_class(bound + 1);

    // Deterministic initial points on a slightly eccentric circle; the
    // angle offset breaks the symmetry of even real polynomials.
    std::vector<Cplx> z;
    z.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * i / n + 0.3537;
        double rad = 0.5 + 0.5 * (i + 1.0) / n;
        mpf_class zr(std::cos(ang) * rad, bits), zi(std::sin(ang) * rad, bits);
        z.push_back(Cplx(mpf_class(zr * bound), mpf_class(zi * bound)));
    }

    const std::vector<Cplx> dcoeffs = derivative_coeffs(monic_coeffs, bits);
    const mpf_class tol = pow2_mpf(-bits + 16, bits) * bound;
    const long max_iter = 64 + 8 * static_cast<long>(std::sqrt(static_cast<double>(bits))) + 4 * n;

    for (long iter = 0; iter < max_iter; ++iter) {
        mpf_class max_step(0, bits);
        for (int i = 0; i < n; ++i) {
            Cplx pz = horner(monic_coeffs, z[static_cast<size_t>(i)], bits);
            Cplx dpz = horner(dcoeffs, z[static_cast<size_t>(i)], bits);
            if (abs2(dpz) == 0) {
                // Nudge off a critical point; deterministic.
                z[static_cast<size_t>(i)].re += tol + 1e-3;
                continue;
            }
            Cplx newton = pz / dpz;
            Cplx sum = Cplx::make(bits);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Cplx diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                if (abs2(diff) == 0) {
                    diff.re += tol + 1e-3;
                }
                sum = sum + one_like(sum) / diff;
            }
            Cplx denom = one_like(newton) - newton * sum;
            Cplx step = abs2(denom) == 0 ? newton : newton / denom;
            z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - step;
            mpf_class s = cabs(step);
            if (s > max_step) max_step = s;
        }
        if (max_step < tol) break;
    }

    // Weierstrass a posteriori bound: the disc of radius n*|p(z_i)| /
    // |prod_{j != i} (z_i - z_j)| around z_i contains a root; when all
    // discs are pairwise disjoint each contains exactly one.
    std::vector<ComplexApprox> roots;
    roots.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Cplx pz = horner(monic_coeffs, z[static_cast<size_t>(i)], bits);
        mpf_class denom(1, bits);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= cabs(z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]);
        }
        ComplexApprox r;
        r.re = z[static_cast<size_t>(i)].re;
        r.im = z[static_cast<size_t>(i)].im;
        if (denom == 0) {
            r.error_radius = bound;  // collapsed points: certification fails
        } else {
            r.error_radius = mpf_class(mpf_class(n, bits) * cabs(pz) / denom * 16);
        }
        r.precision_bits = bits;
        roots.push_back(std::move(r));
    }

    std::sort(roots.begin(), roots.end(), [](const ComplexApprox& a, const ComplexApprox& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });

    res.separated = true;
    for (size_t i = 0; i < roots.size() && res.separated; ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            mpf_class dist = cabs(Cplx(mpf_class(roots[i].re - roots[j].re),
                                       mpf_class(roots[i].im - roots[j].im)));
            if (dist <= roots[i].error_radius + roots[j].error_radius) {
                res.separated = false;
                break;
            }
        }
    res.roots = std::move(roots);
    return res;
}

RootFindResult find_roots(const QPoly& f, long bits) {
    if (f.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
    QPoly m = f.monic();
    std::vector<Cplx> coeffs;
    coeffs.reserve(static_cast<size_t>(m.degree()) + 1);
    for (int i = 0; i <= m.degree(); ++i)
        coeffs.push_back(Cplx(mpf_from_rational(m[i], bits), mpf_class(0, bits)));
    return find_roots(coeffs, bits);
}

std::optional<Rational> rational_reconstruct(const mpf_class& x, const Integer& den_bound) {
    if (den_bound < 1) throw std::invalid_argument("denominator bound must be >= 1");
    Rational target(x);  // exact dyadic value of the float
    target.canonicalize();

    // Continued-fraction convergents h/k of target, ascending k.
    Integer h_prev(1), k_prev(0);
    Integer h(0), k(1);  // convergent after absorbing a0 below
    Rational rest = target;
    bool first = true;
    while (true) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
        if (first) {
            h = a;
            k = 1;
            first = false;
        } else {
            Integer h_next = a * h + h_prev;
            Integer k_next = a * k + k_prev;
            h_prev = h;
            k_prev = k;
            h = h_next;
            k = k_next;
        }
        if (k > den_bound) return std::nullopt;
        Rational conv(h, k);
        conv.canonicalize();
        Rational err = target - conv;
        if (sgn(err) < 0) err = -err;
        // acceptance threshold 1/(2 q B)
        Rational thresh(Integer(1), 2 * k * den_bound);
        thresh.canonicalize();
        if (err < thresh) return conv;
        Rational frac = rest - Rational(a);
        if (sgn(frac) == 0) return std::nullopt;  // exact CF ended, nothing accepted
        rest = Rational(1) / frac;
    }
}

std::optional<std::vector<std::vector<Cplx>>> complex_inverse(
    const std::vector<std::vector<Cplx>>& a, long bits) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Cplx>> m = a;
    std::vector<std::vector<Cplx>> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        inv[static_cast<size_t>(i)].assign(static_cast<size_t>(n), Cplx::make(bits));
        inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = one_like(Cplx::make(bits));
    }
    const mpf_class tiny = pow2_mpf(-bits / 2, bits);
    for (int col = 0; col < n; ++col) {
        int p = col;
        mpf_class best = abs2(m[static_cast<size_t>(col)][static_cast<size_t>(col)]);
        for (int i = col + 1; i < n; ++i) {
            mpf_class v = abs2(m[static_cast<size_t>(i)][static_cast<size_t>(col)]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best < tiny * tiny) return std::nullopt;
        std::swap(m[static_cast<size_t>(p)], m[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(p)], inv[static_cast<size_t>(col)]);
        Cplx piv = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int j = 0; j < n; ++j) {
            m[static_cast<size_t>(col)][static_cast<size_t>(j)] =
                m[static_cast<size_t>(col)][static_cast<size_t>(j)] / piv;
            inv[static_cast<size_t>(col)][static_cast<size_t>(j)] =
                inv[static_cast<size_t>(col)][static_cast<size_t>(j)] / piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Cplx f = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (abs2(f) == 0) continue;
            for (int j = 0; j < n; ++j) {
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * m[static_cast<size_t>(col)][static_cast<size_t>(j)];
                inv[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    inv[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * inv[static_cast<size_t>(col)][static_cast<size_t>(j)];
            }
        }
    }
    return inv;
}

std::vector<Cplx> mat_vec(const std::vector<std::vector<Cplx>>& m, const std::vector<Cplx>& v) {
    std::vector<Cplx> r;
    r.reserve(m.size());
    for (const auto& row : m) {
        Cplx acc = zero_like(v.empty() ? row[0] : v[0]);
        for (size_t j = 0; j < row.size(); ++j) acc = acc + row[j] * v[j];
        r.push_back(std::move(acc));
    }
    return r;
}

bool conj_disc_intersects(const ComplexApprox& a, const ComplexApprox& b) {
    Cplx ca = a.value();
    ca.im = -ca.im;
    mpf_class dist = cabs(ca - b.value());
    return dist <= a.error_radius + b.error_radius;
}

std::vector<int> pair_conjugate_roots(const std::vector<ComplexApprox>& roots) {
    const int d = static_cast<int>(roots.size());
    std::vector<int> conj_idx(static_cast<size_t>(d), -1);
    for (int i = 0; i < d; ++i) {
        int match = -1;
        for (int j = 0; j < d; ++j) {
            if (conj_disc_intersects(roots[static_cast<size_t>(i)], roots[static_cast<size_t>(j)])) {
                if (match >= 0)
                    throw UndecidedError("conjugation pairing ambiguous at " +
                                         std::to_string(roots[static_cast<size_t>(i)].precision_bits) +
                                         " bits");
                match = j;
            }
        }
        if (match < 0)
            throw UndecidedError("conjugation pairing found no partner at " +
                                 std::to_string(roots[static_cast<size_t>(i)].precision_bits) +
                                 " bits");
        conj_idx[static_cast<size_t>(i)] = match;
    }
    for (int i = 0; i < d; ++i)
        if (conj_idx[static_cast<size_t>(conj_idx[static_cast<size_t>(i)])] != i)
            throw UndecidedError("conjugation pairing is not an involution");
    return conj_idx;
}

}  // namespace galois
