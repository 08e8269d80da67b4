#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galois/matrix.hpp"
#include "galois/numeric.hpp"
#include "galois/poly.hpp"
#include "galois/rational.hpp"

namespace galois {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a NumberField, stored as coordinates over the power basis
// 1, t, ..., t^{n-1} of the field's generator. Default-constructed
// elements are null placeholders for containers; every operation requires
// a real owner.
class NfElem {
  public:
    NfElem() = default;
    NfElem(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return coords_; }
    bool is_null() const { return field_ == nullptr; }

    bool is_zero() const;
    // True when the element lies in the prime field (all coordinates past
    // the constant vanish).
    bool is_rational() const;
    Rational rational_value() const;

    NfElem operator-() const;
    NfElem operator+(const NfElem& o) const;
    NfElem operator-(const NfElem& o) const;
    NfElem operator*(const NfElem& o) const;
    NfElem operator/(const NfElem& o) const;
    NfElem& operator+=(const NfElem& o) { return *this = *this + o; }
    NfElem& operator-=(const NfElem& o) { return *this = *this - o; }
    NfElem& operator*=(const NfElem& o) { return *this = *this * o; }
    bool operator==(const NfElem& o) const;
    bool operator!=(const NfElem& o) const { return !(*this == o); }
    // Total order on (field modulus, coordinates); used only to keep
    // containers and output deterministic, no arithmetic meaning.
    bool operator<(const NfElem& o) const;

    NfElem inverse() const;
    NfElem pow(unsigned long e) const;
    NfElem scaled(const Rational& c) const;

  private:
    void check_compatible(const NfElem& o) const;

    FieldPtr field_;
    std::vector<Rational> coords_;
};

NfElem zero_like(const NfElem& model);
NfElem one_like(const NfElem& model);
bool is_zero_elem(const NfElem& x);

using NfPoly = Poly<NfElem>;

// Escalation policy for the numeric layer. Precision only ever affects
// whether an answer is reached, not which answer; running past the cap
// raises UndecidedError.
struct PrecisionPolicy {
    long start_bits = 128;
    long cap_bits = 8192;
    // Upper bound on candidate tuples examined inside one reconstruction
    // pass before giving up with CapacityError.
    std::uint64_t work_cap = 4'000'000;
};

// Numeric data for all complex embeddings of a field at one precision:
// the certified roots of the modulus in a canonical order, the pairing of
// complex-conjugate embeddings, and the inverse Vandermonde matrix used
// to recover power-basis coordinates from embedding values.
struct EmbeddingData {
    long bits = 0;
    std::vector<ComplexApprox> roots;
    // conj_index[m] = index of the embedding conjugate to m (itself for
    // real embeddings).
    std::vector<int> conj_index;
    // One representative per conjugation orbit: every real embedding and
    // the lower-indexed member of each conjugate pair.
    std::vector<int> orbit_reps;
    std::vector<std::vector<Cplx>> vandermonde_inv;

    bool is_real_embedding(int m) const { return conj_index[static_cast<size_t>(m)] == m; }
};

// Q[x]/(modulus) for a monic irreducible modulus over Q. Immutable and
// shared; Q itself is the degenerate case with modulus x.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    // The rationals as a degree-1 field. Always the same shared instance.
    static FieldPtr rationals();
    // Caller certifies irreducibility (construction sites obtain it from
    // factor_over_field or a minimal polynomial computation).
    static FieldPtr create(QPoly monic_irreducible);

    const QPoly& modulus() const { return modulus_; }
    int degree() const { return degree_; }
    bool is_rationals() const { return degree_ == 1; }

    NfElem zero() const;
    NfElem one() const;
    NfElem generator() const;
    NfElem from_rational(const Rational& q) const;
    NfElem from_coords(std::vector<Rational> coords) const;

    // Computed once per precision and cached. Throws UndecidedError if the
    // modulus roots cannot be separated at this precision.
    std::shared_ptr<const EmbeddingData> embeddings(long bits) const;

  private:
    explicit NumberField(QPoly modulus);

    QPoly modulus_;
    int degree_;
    mutable std::mutex cache_mutex_;
    mutable std::map<long, std::shared_ptr<const EmbeddingData>> embedding_cache_;
};

// f with rational coefficients viewed over L.
NfPoly lift_poly(const QPoly& f, const FieldPtr& L);

// Monic minimal polynomial of a over Q; degree divides [L:Q].
QPoly minimal_polynomial(const NfElem& a);

// Numeric value of a under embedding m of its field.
Cplx embed_value(const NfElem& a, const EmbeddingData& emb, int m);

// All roots of g that lie in L, as exact verified elements, sorted by
// their value under embedding 0 (real part, then imaginary part).
// g need not be squarefree. Completeness comes from conjugate-tuple
// reconstruction across all embeddings with escalating precision.
std::vector<NfElem> roots_in_field(const NfPoly& g, const PrecisionPolicy& policy = {});

// Convenience for rational g over L.
std::vector<NfElem> roots_in_field(const QPoly& g, const FieldPtr& L,
                                   const PrecisionPolicy& policy = {});

// Monic irreducible factors of g over the field of its coefficients, with
// multiplicities, sorted by degree then coefficient order. The product of
// the factors (with multiplicity) times the leading coefficient is
// verified to reproduce g exactly.
std::vector<std::pair<NfPoly, int>> factor_over_field(const NfPoly& g,
                                                      const PrecisionPolicy& policy = {},
                                                      int degree_cap = 12);

// True iff g is irreducible over the field of its coefficients.
bool is_irreducible(const NfPoly& g, const PrecisionPolicy& policy = {});

// A tower of successive root adjunctions, kept collapsed: after every
// adjunction the whole tower is re-expressed as a single simple extension
// Q(s) with s an integer combination of the adjoined generators.
class FieldTower {
  public:
    struct Level {
        std::string name;
        // Defining polynomial of this level's generator over the previous
        // collapsed field (monic irreducible there).
        NfPoly rel_defining;
        // Collapsed simple field for the tower up to and including this
        // level.
        FieldPtr collapsed;
        // Maps coordinates in the previous collapsed field to coordinates
        // of the same element in this collapsed field.
        QMatrix embed_prev;
        // Images of all generators adjoined so far, as elements of
        // `collapsed` (one entry per level up to this one).
        std::vector<NfElem> gens;
        // The primitive element s of `collapsed` equals
        // sum_i combo[i] * gens[i], built stepwise as s = ct*s_prev + cy*y.
        std::vector<long> combo;
        long ct = 0;
        long cy = 0;
        // Change of basis between the tower product basis (monomials in
        // the generators, exponents in lexicographic order) and the power
        // basis of `collapsed`.
        QMatrix tower_to_simple;
        QMatrix simple_to_tower;
    };

    static FieldTower rationals();

    const FieldPtr& field() const;
    int absolute_degree() const;
    int levels() const { return static_cast<int>(levels_.size()); }
    const Level& level(int i) const { return levels_.at(static_cast<size_t>(i)); }
    const std::vector<Level>& all_levels() const { return levels_; }

    // Adjoin a root of g, monic irreducible over the current field.
    // Certifies irreducibility via factor_over_field unless the caller
    // already holds a certificate. Returns the extended tower; *this is
    // unchanged.
    FieldTower adjoined(const NfPoly& g, const std::string& name,
                        const PrecisionPolicy& policy = {}, bool certified_irreducible = false) const;

    // Image in the current collapsed field of an element of the collapsed
    // field from `levels_back` adjunctions ago (0 = current).
    NfElem embed_from(const NfElem& x, int levels_back) const;

  private:
    std::vector<Level> levels_;
};

// Splitting field of a squarefree rational polynomial: the collapsed
// tower, and all roots of the polynomial as exact elements sorted by
// embedding-0 value. The product of (x - root) over the list is verified
// to equal the monic input.
struct SplitField {
    QPoly poly;
    FieldTower tower;
    std::vector<NfElem> roots;

    const FieldPtr& field() const { return tower.field(); }
    int degree() const { return tower.absolute_degree(); }
};

SplitField splitting_field(const QPoly& f, const PrecisionPolicy& policy = {},
                           int total_degree_cap = 24);

}  // namespace galois
