#include "galois/number_field.hpp"

#include <stdexcept>
#include <utility>

#include "galois/counters.hpp"
#include "galois/errors.hpp"

namespace galois {

WorkCounters& work_counters() {
    static thread_local WorkCounters counters;
    return counters;
}

void reset_work_counters() { work_counters() = WorkCounters{}; }

NfElem::NfElem(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw std::invalid_argument("NfElem: null field");
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw std::invalid_argument("NfElem: coordinate count does not match field degree");
}

void NfElem::check_compatible(const NfElem& o) const {
    if (is_null() || o.is_null()) throw std::invalid_argument("NfElem: null element in arithmetic");
    if (field_ != o.field_ && field_->modulus() != o.field_->modulus())
        throw std::invalid_argument("NfElem: elements of different fields");
}

bool NfElem::is_zero() const {
    for (const auto& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool NfElem::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

Rational NfElem::rational_value() const {
    if (!is_rational()) throw std::domain_error("NfElem: element is not rational");
    return coords_.empty() ? Rational(0) : coords_[0];
}

NfElem NfElem::operator-() const {
    std::vector<Rational> r(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) r[i] = -coords_[i];
    return NfElem(field_, std::move(r));
}

NfElem NfElem::operator+(const NfElem& o) const {
    check_compatible(o);
    std::vector<Rational> r(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) r[i] = coords_[i] + o.coords_[i];
    return NfElem(field_, std::move(r));
}

NfElem NfElem::operator-(const NfElem& o) const {
    check_compatible(o);
    std::vector<Rational> r(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) r[i] = coords_[i] - o.coords_[i];
    return NfElem(field_, std::move(r));
}

namespace {

// Reduces a coefficient vector of length up to 2n-1 modulo the monic
// modulus, in place, leaving exactly n entries.
void reduce_mod(std::vector<Rational>& a, const QPoly& modulus) {
    const int n = modulus.degree();
    for (int i = static_cast<int>(a.size()) - 1; i >= n; --i) {
        Rational c = a[static_cast<size_t>(i)];
        if (sgn(c) != 0) {
            for (int j = 0; j < n; ++j) a[static_cast<size_t>(i - n + j)] -= c * modulus[j];
        }
    }
    a.resize(static_cast<size_t>(n));
}

}  // namespace

NfElem NfElem::operator*(const NfElem& o) const {
    check_compatible(o);
    const size_t n = coords_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (size_t i = 0; i < n; ++i) {
        if (sgn(coords_[i]) == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (sgn(o.coords_[j]) == 0) continue;
            prod[i + j] += coords_[i] * o.coords_[j];
        }
    }
    reduce_mod(prod, field_->modulus());
    return NfElem(field_, std::move(prod));
}

NfElem NfElem::inverse() const {
    if (is_null()) throw std::invalid_argument("NfElem: null element");
    if (is_zero()) throw std::domain_error("NfElem: division by zero");
    QPoly a(coords_);
    auto [g, s, t] = poly_xgcd(a, field_->modulus());
    if (g.degree() != 0)
        throw InvariantViolation("NfElem: modulus not coprime to nonzero element");
    std::vector<Rational> r = s.coeffs();
    r.resize(static_cast<size_t>(field_->degree()), Rational(0));
    return NfElem(field_, std::move(r));
}

NfElem NfElem::operator/(const NfElem& o) const { return *this * o.inverse(); }

bool NfElem::operator==(const NfElem& o) const {
    check_compatible(o);
    return coords_ == o.coords_;
}

bool NfElem::operator<(const NfElem& o) const {
    if (field_ != o.field_) {
        const auto& m1 = field_->modulus().coeffs();
        const auto& m2 = o.field_->modulus().coeffs();
        if (m1 != m2) return m1 < m2;
    }
    return coords_ < o.coords_;
}

NfElem NfElem::pow(unsigned long e) const {
    NfElem acc = field_->one();
    NfElem base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

NfElem NfElem::scaled(const Rational& c) const {
    std::vector<Rational> r(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) r[i] = coords_[i] * c;
    return NfElem(field_, std::move(r));
}

NfElem zero_like(const NfElem& model) { return model.field()->zero(); }
NfElem one_like(const NfElem& model) { return model.field()->one(); }
bool is_zero_elem(const NfElem& x) { return x.is_zero(); }

NumberField::NumberField(QPoly modulus) : modulus_(std::move(modulus)) {
    degree_ = modulus_.degree();
}

FieldPtr NumberField::rationals() {
    static FieldPtr q(new NumberField(QPoly({Rational(0), Rational(1)})));
    return q;
}

FieldPtr NumberField::create(QPoly monic_irreducible) {
    if (monic_irreducible.degree() < 1)
        throw std::invalid_argument("NumberField: modulus must have degree >= 1");
    if (!monic_irreducible.is_monic())
        throw std::invalid_argument("NumberField: modulus must be monic");
    return FieldPtr(new NumberField(std::move(monic_irreducible)));
}

NfElem NumberField::zero() const { return from_rational(Rational(0)); }
NfElem NumberField::one() const { return from_rational(Rational(1)); }

NfElem NumberField::generator() const {
    // For Q = Q[x]/(x) the generator is 0.
    std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
    if (degree_ > 1) c[1] = Rational(1);
    return NfElem(shared_from_this(), std::move(c));
}

NfElem NumberField::from_rational(const Rational& q) const {
    std::vector<Rational> c(static_cast<size_t>(degree_), Rational(0));
    c[0] = q;
    return NfElem(shared_from_this(), std::move(c));
}

NfElem NumberField::from_coords(std::vector<Rational> coords) const {
    if (static_cast<int>(coords.size()) > degree_)
        throw std::invalid_argument("NumberField: too many coordinates");
    coords.resize(static_cast<size_t>(degree_), Rational(0));
    return NfElem(shared_from_this(), std::move(coords));
}

std::shared_ptr<const EmbeddingData> NumberField::embeddings(long bits) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = embedding_cache_.find(bits);
        if (it != embedding_cache_.end()) return it->second;
    }
    auto data = std::make_shared<EmbeddingData>();
    data->bits = bits;
    RootFindResult rf = find_roots(modulus_, bits);
    if (!rf.separated)
        throw UndecidedError("embeddings: modulus roots not separable at " +
                             std::to_string(bits) + " bits");
    data->roots = std::move(rf.roots);
    const int n = degree_;

    // The modulus has real coefficients, so conjugation permutes the root
    // discs and the pairing below is certified given separation.
    data->conj_index = pair_conjugate_roots(data->roots);
    for (int i = 0; i < n; ++i) {
        int j = data->conj_index[static_cast<size_t>(i)];
        if (data->is_real_embedding(i) || i < j) data->orbit_reps.push_back(i);
    }

    // Inverse of the Vandermonde matrix V[m][j] = root_m^j. Coordinates of
    // an element are recovered as Vinv * (embedding values).
    std::vector<std::vector<Cplx>> vand(static_cast<size_t>(n),
                                        std::vector<Cplx>(static_cast<size_t>(n), Cplx::make(bits)));
    for (int m = 0; m < n; ++m) {
        Cplx p = Cplx::make(bits);
        p.re = 1;
        for (int j = 0; j < n; ++j) {
            vand[static_cast<size_t>(m)][static_cast<size_t>(j)] = p;
            p = p * data->roots[static_cast<size_t>(m)].value();
        }
    }
    auto inv = complex_inverse(vand, bits);
    if (!inv)
        throw UndecidedError("embeddings: Vandermonde inversion failed at " +
                             std::to_string(bits) + " bits");
    data->vandermonde_inv = std::move(*inv);

    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = embedding_cache_.emplace(bits, std::move(data));
    (void)inserted;
    return it->second;
}

NfPoly lift_poly(const QPoly& f, const FieldPtr& L) {
    std::vector<NfElem> cs;
    cs.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(L->from_rational(f[static_cast<size_t>(i)]));
    return NfPoly(cs);
}

QPoly minimal_polynomial(const NfElem& a) {
    if (a.is_null()) throw std::invalid_argument("minimal_polynomial: null element");
    const int n = a.field()->degree();
    const NfElem one = a.field()->one();
    std::vector<NfElem> powers{one};
    for (int k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * a);
        // Try to express a^k over the previous powers.
        QMatrix m(n, k, Rational(0));
        for (int j = 0; j < k; ++j)
            for (int i = 0; i < n; ++i)
                m.at(i, j) = powers[static_cast<size_t>(j)].coords()[static_cast<size_t>(i)];
        auto sol = solve_linear(m, powers.back().coords(), Rational(0));
        if (sol) {
            std::vector<Rational> cs(static_cast<size_t>(k + 1), Rational(0));
            for (int j = 0; j < k; ++j) cs[static_cast<size_t>(j)] = -(*sol)[static_cast<size_t>(j)];
            cs[static_cast<size_t>(k)] = 1;
            return QPoly(cs);
        }
    }
    throw InvariantViolation("minimal_polynomial: no dependence up to field degree");
}

Cplx embed_value(const NfElem& a, const EmbeddingData& emb, int m) {
    const long bits = emb.bits;
    Cplx alpha = emb.roots[static_cast<size_t>(m)].value();
    Cplx acc = Cplx::make(bits);
    const auto& cs = a.coords();
    for (size_t i = cs.size(); i-- > 0;) {
        acc = acc * alpha;
        Cplx c = Cplx::make(bits);
        c.re = mpf_from_rational(cs[i], bits);
        acc = acc + c;
    }
    return acc;
}

}  // namespace galois
