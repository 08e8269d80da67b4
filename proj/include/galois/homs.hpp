#pragma once

#include <vector>

#include "galois/number_field.hpp"

namespace galois {

// Field homomorphism between number fields (always fixing Q), determined
// by the image of the source generator. The matrix over the power basis
// is derived from that image at construction and revalidated against it,
// so the two representations cannot drift apart.
class FieldHom {
  public:
    FieldHom(FieldPtr source, FieldPtr target, NfElem gen_image);

    const FieldPtr& source() const { return source_; }
    const FieldPtr& target() const { return target_; }
    const NfElem& gen_image() const { return gen_image_; }
    const QMatrix& matrix() const { return matrix_; }

    NfElem apply(const NfElem& x) const;
    bool is_identity() const;

    bool operator==(const FieldHom& o) const;
    bool operator!=(const FieldHom& o) const { return !(*this == o); }

  private:
    FieldPtr source_;
    FieldPtr target_;
    NfElem gen_image_;
    QMatrix matrix_;
};

FieldHom identity_hom(const FieldPtr& L);

// x -> outer(inner(x)); inner's target must be outer's source.
FieldHom compose(const FieldHom& outer, const FieldHom& inner);

// All field endomorphisms of the tower's collapsed field over Q, found by
// extending partial maps one adjunction at a time: the images of each
// level's generator are the roots of its (mapped) defining polynomial.
// Sorted with the identity first, then by generator image.
std::vector<FieldHom> enumerate_endomorphisms(const FieldTower& tower,
                                              const PrecisionPolicy& policy = {});

// Same procedure, but root images are taken from `root_pool` by exact
// evaluation instead of numeric search. Sound for any pool; complete only
// when the pool contains every root in the field of every mapped defining
// polynomial. The root list of a splitting field over its own tower has
// that property: each defining polynomial divides the split polynomial
// over its level, so homomorphic images of its roots are again roots of
// the split polynomial, all of which the list holds.
std::vector<FieldHom> enumerate_endomorphisms(const FieldTower& tower,
                                              const PrecisionPolicy& policy,
                                              const std::vector<NfElem>& root_pool);

// Same, for a bare field: generator images are the roots of the modulus
// in the field itself.
std::vector<FieldHom> enumerate_endomorphisms(const FieldPtr& L,
                                              const PrecisionPolicy& policy = {});

// Checks that every endomorphism is invertible (exact matrix rank), that
// the collection is distinct, closed under composition, and contains the
// identity, then returns it canonically sorted. Throws InvariantViolation
// on any failure; for a number field every endomorphism over Q is
// automatically bijective, so a failure means an engine bug.
std::vector<FieldHom> certify_automorphisms(std::vector<FieldHom> homs);

// Normality of L over Q: the modulus has a full set of roots in L, or
// equivalently the endomorphism count equals the degree.
bool is_normal_field(const FieldTower& tower, const PrecisionPolicy& policy = {});
bool is_normal_field(const FieldPtr& L, const PrecisionPolicy& policy = {});

// gcd(f, f') = 1; in characteristic zero every irreducible factor is
// automatically separable, so this only rejects repeated factors.
bool separability_check(const QPoly& f);

// Checks the ground-field criterion on one element: every listed
// automorphism fixes a exactly when a is rational. Returns that truth
// value; throws InvariantViolation if the two sides disagree (callers
// pass the full automorphism group of a normal field, for which the
// equivalence is a theorem).
bool verify_ground_element(const std::vector<FieldHom>& autos, const NfElem& a);

}  // namespace galois
