#pragma once

#include <optional>
#include <vector>

#include "galois/poly.hpp"
#include "galois/rational.hpp"

namespace galois {

// Complex number backed by GMP floats. Values are created at an explicit
// working precision; gmpxx propagates the larger operand precision
// through expressions, so arithmetic on same-precision inputs stays at
// that precision.
struct Cplx {
    mpf_class re, im;

    Cplx() = default;
    Cplx(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}

    static Cplx make(long bits) { return Cplx(mpf_class(0, bits), mpf_class(0, bits)); }
};

Cplx operator+(const Cplx& a, const Cplx& b);
Cplx operator-(const Cplx& a, const Cplx& b);
Cplx operator*(const Cplx& a, const Cplx& b);
Cplx operator/(const Cplx& a, const Cplx& b);
Cplx conj(const Cplx& a);
mpf_class abs2(const Cplx& a);
mpf_class cabs(const Cplx& a);

inline Cplx zero_like(const Cplx& model) {
    return Cplx(mpf_class(0, model.re.get_prec()), mpf_class(0, model.re.get_prec()));
}
inline Cplx one_like(const Cplx& model) {
    return Cplx(mpf_class(1, model.re.get_prec()), mpf_class(0, model.re.get_prec()));
}

mpf_class mpf_from_rational(const Rational& q, long bits);

// 2^e at the given working precision.
mpf_class pow2_mpf(long e, long bits);

// Numeric approximation of one complex root with a certified inclusion
// radius.  The radius is a Weierstrass-style a posteriori bound computed
// alongside the iteration; exact acceptance always happens downstream,
// so the radius only steers candidate generation and separation checks.
struct ComplexApprox {
    mpf_class re, im;
    mpf_class error_radius;
    long precision_bits = 0;

    Cplx value() const { return Cplx(re, im); }
};

struct RootFindResult {
    std::vector<ComplexApprox> roots;  // sorted by (re, im)
    bool separated = false;            // pairwise disjoint inclusion discs
};

// Whether the disc of conj(a) meets the disc of b. For root lists of
// polynomials with real coefficients this drives a sound conjugation
// pairing: with separation certified, a root is real exactly when its
// conjugate disc meets only its own disc.
bool conj_disc_intersects(const ComplexApprox& a, const ComplexApprox& b);

// Conjugation pairing within one separated root list of a polynomial
// with real coefficients: result[i] = j when conj(root_i) = root_j
// (i == j marks a real root). Throws UndecidedError when the pairing is
// ambiguous at this precision.
std::vector<int> pair_conjugate_roots(const std::vector<ComplexApprox>& roots);

// All complex roots of a monic polynomial given by its coefficients
// (constant term first, leading 1 included). Aberth-Ehrlich simultaneous
// iteration with deterministic initial points.
RootFindResult find_roots(const std::vector<Cplx>& monic_coeffs, long bits);

RootFindResult find_roots(const QPoly& f, long bits);

// Continued-fraction best approximation: returns p/q with q <= den_bound
// and |x - p/q| < 1/(2 q den_bound), if such a fraction exists (it is
// then unique). Absence is a normal outcome.
std::optional<Rational> rational_reconstruct(const mpf_class& x, const Integer& den_bound);

// Dense complex inverse via Gaussian elimination with magnitude
// pivoting. Returns nothing when a pivot falls below 2^(-bits/2), which
// callers treat as a precision escalation signal.
std::optional<std::vector<std::vector<Cplx>>> complex_inverse(
    const std::vector<std::vector<Cplx>>& a, long bits);

std::vector<Cplx> mat_vec(const std::vector<std::vector<Cplx>>& m, const std::vector<Cplx>& v);

}  // namespace galois
