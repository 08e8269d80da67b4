#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galois/rational.hpp"

namespace galois {

// Dense univariate polynomial over a field K, coefficients lowest degree
// first. Invariant: the leading coefficient is nonzero; the zero
// polynomial has an empty coefficient vector and degree -1.
//
// K must supply +, -, *, /, ==, and zero_like/one_like (ADL). Operations
// that have to conjure a 0 or 1 out of thin air derive it from some
// available coefficient, so the zero polynomial never needs a field
// context of its own.
template <class K>
class Poly {
  public:
    Poly() = default;

    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }

    static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }

    // x - a
    static Poly linear_root(const K& a) {
        return Poly(std::vector<K>{zero_like(a) - a, one_like(a)});
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    const K& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }

    // Coefficient of x^i, with an explicit zero for i beyond the degree.
    K coeff_or_zero(int i, const K& model) const {
        if (i < 0 || i > degree()) return zero_like(model);
        return c_[static_cast<size_t>(i)];
    }

    const K& leading() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && leading() == one_like(leading()); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& a : c_) r.push_back(zero_like(a) - a);
        return Poly(std::move(r));
    }

    Poly operator+(const Poly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const K& model = c_[0];
        std::vector<K> r;
        size_t n = std::max(c_.size(), o.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            K a = i < c_.size() ? c_[i] : zero_like(model);
            if (i < o.c_.size()) a = a + o.c_[i];
            r.push_back(std::move(a));
        }
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        const K zero = zero_like(c_[0]);
        std::vector<K> r(c_.size() + o.c_.size() - 1, zero);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const K& s) const {
        if (is_zero_elem(s)) return Poly();
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& a : c_) r.push_back(a * s);
        return Poly(std::move(r));
    }

    K eval(const K& x) const {
        K acc = zero_like(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Evaluation with coefficients mapped into another field first.
    template <class M, class F>
    M eval_mapped(const M& x, F&& map_coeff) const {
        M acc = zero_like(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + map_coeff(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (degree() < 1) return Poly();
        std::vector<K> r;
        r.reserve(c_.size() - 1);
        K k = one_like(c_[0]);
        const K one = k;
        for (size_t i = 1; i < c_.size(); ++i) {
            r.push_back(c_[i] * k);
            k = k + one;
        }
        return Poly(std::move(r));
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        const K& l = leading();
        if (l == one_like(l)) return *this;
        std::vector<K> r;
        r.reserve(c_.size());
        for (const K& a : c_) r.push_back(a / l);
        return Poly(std::move(r));
    }

  private:
    void normalize() {
        while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

// Exact Euclidean division: num = den*q + r with deg r < deg den.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divrem(const Poly<K>& num, const Poly<K>& den) {
    if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (num.is_zero() || num.degree() < den.degree()) return {Poly<K>(), num};
    const K& model = den.leading();
    const K zero = zero_like(model);
    std::vector<K> rem(num.coeffs());
    std::vector<K> quot(static_cast<size_t>(num.degree() - den.degree() + 1), zero);
    const K& lead = den.leading();
    for (int i = num.degree(); i >= den.degree(); --i) {
        K coef = rem[static_cast<size_t>(i)];
        if (is_zero_elem(coef)) continue;
        K q = coef / lead;
        quot[static_cast<size_t>(i - den.degree())] = q;
        for (int j = 0; j <= den.degree(); ++j) {
            size_t idx = static_cast<size_t>(i - den.degree() + j);
            rem[idx] = rem[idx] - q * den[j];
        }
    }
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return poly_divrem(a, b).second;
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return poly_divrem(a, b).first;
}

template <class K>
bool divides_exactly(const Poly<K>& d, const Poly<K>& a) {
    return poly_divrem(a, d).second.is_zero();
}

// Monic gcd by the Euclidean algorithm.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Extended Euclid: returns (g, s, t) monic g with s*a + t*b = g.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("xgcd(0, 0) undefined");
    const K model = a.is_zero() ? b.leading() : a.leading();
    Poly<K> r0 = a, r1 = b;
    Poly<K> s0 = Poly<K>::constant(one_like(model)), s1;
    Poly<K> t0, t1 = Poly<K>::constant(one_like(model));
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Poly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const K& lead = r0.leading();
    K inv = one_like(lead) / lead;
    return {r0 * inv, s0 * inv, t0 * inv};
}

// Squarefree part f / gcd(f, f').
template <class K>
Poly<K> squarefree_part(const Poly<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    if (f.degree() == 0) return f.monic();
    Poly<K> g = poly_gcd(f, f.derivative());
    return (f / g).monic();
}

using QPoly = Poly<Rational>;

std::string to_string(const QPoly& f, const std::string& var = "x");

// Accepts sums of terms in one variable "x" with integer or rational
// coefficients, explicit "*", "^" with nonnegative integer exponents,
// unary minus, and parentheses. Throws ParseError with a position on
// malformed input.
QPoly parse_poly(const std::string& text);

}  // namespace galois
