#include "galois/homs.hpp"

#include <algorithm>
#include <utility>

#include "galois/errors.hpp"

namespace galois {

namespace {

// Value of sigma on x, where sigma is known through the image of the
// power-basis generator of x's field inside the target field.
NfElem apply_via_image(const NfElem& x, const NfElem& gen_image) {
    const FieldPtr& target = gen_image.field();
    NfElem acc = target->zero();
    const auto& cs = x.coords();
    for (size_t i = cs.size(); i-- > 0;) {
        acc = acc * gen_image;
        acc += target->from_rational(cs[i]);
    }
    return acc;
}

NfPoly map_poly_coeffs(const NfPoly& f, const NfElem& gen_image) {
    std::vector<NfElem> cs;
    cs.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(apply_via_image(f[i], gen_image));
    return NfPoly(std::move(cs));
}

}  // namespace

FieldHom::FieldHom(FieldPtr source, FieldPtr target, NfElem gen_image)
    : source_(std::move(source)), target_(std::move(target)), gen_image_(std::move(gen_image)) {
    if (!source_ || !target_) throw std::invalid_argument("FieldHom: null field");
    if (gen_image_.field()->modulus() != target_->modulus())
        throw std::invalid_argument("FieldHom: generator image not in target field");
    // A well-defined hom needs the image to be a root of the source
    // modulus in the target.
    NfElem check = target_->zero();
    const QPoly& mod = source_->modulus();
    for (int i = mod.degree(); i >= 0; --i) {
        check = check * gen_image_;
        check += target_->from_rational(mod[i]);
    }
    if (!check.is_zero())
        throw std::invalid_argument("FieldHom: generator image is not a root of the modulus");

    const int n = source_->degree();
    const int m = target_->degree();
    matrix_ = QMatrix::zero(m, n, Rational(0));
    NfElem power = target_->one();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) matrix_.at(i, j) = power.coords()[static_cast<size_t>(i)];
        power = power * gen_image_;
    }
}

NfElem FieldHom::apply(const NfElem& x) const {
    if (x.field()->modulus() != source_->modulus())
        throw std::invalid_argument("FieldHom: element not in source field");
    return NfElem(target_, matrix_.apply(x.coords()));
}

bool FieldHom::is_identity() const {
    return source_->modulus() == target_->modulus() && gen_image_ == target_->generator();
}

bool FieldHom::operator==(const FieldHom& o) const {
    return source_->modulus() == o.source_->modulus() &&
           target_->modulus() == o.target_->modulus() &&
           gen_image_.coords() == o.gen_image_.coords();
}

FieldHom identity_hom(const FieldPtr& L) { return FieldHom(L, L, L->generator()); }

FieldHom compose(const FieldHom& outer, const FieldHom& inner) {
    if (inner.target()->modulus() != outer.source()->modulus())
        throw std::invalid_argument("compose: inner target does not match outer source");
    return FieldHom(inner.source(), outer.target(), outer.apply(inner.gen_image()));
}

namespace {

std::vector<FieldHom> enumerate_endos_impl(const FieldTower& tower, const PrecisionPolicy& policy,
                                           const std::vector<NfElem>* root_pool) {
    const FieldPtr& L = tower.field();
    if (tower.levels() == 0) return {identity_hom(L)};

    auto pool_roots = [&](const NfPoly& g) {
        std::vector<NfElem> out;
        for (const NfElem& r : *root_pool)
            if (g.eval(r).is_zero()) out.push_back(r);
        return out;
    };

    // Partial maps carry the image in L of the current level's primitive
    // element; extending to the next level means choosing a root of that
    // level's defining polynomial with already-mapped coefficients.
    std::vector<NfElem> partial;
    {
        const FieldTower::Level& lv0 = tower.level(0);
        std::vector<Rational> cs;
        for (int i = 0; i <= lv0.rel_defining.degree(); ++i)
            cs.push_back(lv0.rel_defining[i].rational_value());
        QPoly rel0(std::move(cs));
        std::vector<NfElem> roots = root_pool ? pool_roots(lift_poly(rel0, L))
                                              : roots_in_field(rel0, L, policy);
        for (const NfElem& root : roots) partial.push_back(root.scaled(Rational(lv0.cy)));
    }
    for (int li = 1; li < tower.levels(); ++li) {
        const FieldTower::Level& lv = tower.level(li);
        std::vector<NfElem> next;
        for (const NfElem& s_img : partial) {
            NfPoly mapped = map_poly_coeffs(lv.rel_defining, s_img);
            std::vector<NfElem> roots =
                root_pool ? pool_roots(mapped) : roots_in_field(mapped, policy);
            for (const NfElem& root : roots)
                next.push_back(s_img.scaled(Rational(lv.ct)) + root.scaled(Rational(lv.cy)));
        }
        partial = std::move(next);
    }

    std::vector<FieldHom> homs;
    homs.reserve(partial.size());
    for (const NfElem& img : partial) homs.push_back(FieldHom(L, L, img));
    return certify_automorphisms(std::move(homs));
}

}  // namespace

std::vector<FieldHom> enumerate_endomorphisms(const FieldTower& tower,
                                              const PrecisionPolicy& policy) {
    return enumerate_endos_impl(tower, policy, nullptr);
}

std::vector<FieldHom> enumerate_endomorphisms(const FieldTower& tower,
                                              const PrecisionPolicy& policy,
                                              const std::vector<NfElem>& root_pool) {
    return enumerate_endos_impl(tower, policy, &root_pool);
}

std::vector<FieldHom> enumerate_endomorphisms(const FieldPtr& L, const PrecisionPolicy& policy) {
    std::vector<FieldHom> homs;
    for (const NfElem& root : roots_in_field(L->modulus(), L, policy))
        homs.push_back(FieldHom(L, L, root));
    return certify_automorphisms(std::move(homs));
}

std::vector<FieldHom> certify_automorphisms(std::vector<FieldHom> homs) {
    for (const FieldHom& h : homs) {
        if (h.source()->modulus() != h.target()->modulus())
            throw InvariantViolation("certify_automorphisms: not an endomorphism");
        if (h.matrix().rank() != h.source()->degree())
            throw InvariantViolation("certify_automorphisms: endomorphism not invertible");
    }
    for (size_t i = 0; i < homs.size(); ++i)
        for (size_t j = i + 1; j < homs.size(); ++j)
            if (homs[i] == homs[j])
                throw InvariantViolation("certify_automorphisms: duplicate automorphism");
    // A hom out of a simple field is determined by its generator image, so
    // closure under composition reduces to: applying any member to any
    // member's generator image lands on a generator image in the set.
    for (size_t i = 0; i < homs.size(); ++i) {
        for (size_t j = 0; j < homs.size(); ++j) {
            NfElem c = homs[i].apply(homs[j].gen_image());
            bool present = false;
            for (const FieldHom& h : homs) present = present || h.gen_image() == c;
            if (!present)
                throw InvariantViolation("certify_automorphisms: set not closed under composition");
        }
    }
    bool has_id = false;
    for (const FieldHom& h : homs) has_id = has_id || h.is_identity();
    if (!homs.empty() && !has_id)
        throw InvariantViolation("certify_automorphisms: identity missing");

    std::sort(homs.begin(), homs.end(), [](const FieldHom& a, const FieldHom& b) {
        if (a.is_identity() != b.is_identity()) return a.is_identity();
        return a.gen_image() < b.gen_image();
    });
    return homs;
}

bool is_normal_field(const FieldTower& tower, const PrecisionPolicy& policy) {
    return static_cast<int>(enumerate_endomorphisms(tower, policy).size()) ==
           tower.absolute_degree();
}

bool is_normal_field(const FieldPtr& L, const PrecisionPolicy& policy) {
    return static_cast<int>(roots_in_field(L->modulus(), L, policy).size()) == L->degree();
}

bool separability_check(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("separability_check: zero polynomial");
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

bool verify_ground_element(const std::vector<FieldHom>& autos, const NfElem& a) {
    bool all_fix = true;
    for (const FieldHom& h : autos) all_fix = all_fix && h.apply(a) == a;
    if (all_fix != a.is_rational())
        throw InvariantViolation("verify_ground_element: fixed-by-all disagrees with rationality");
    return all_fix;
}

}  // namespace galois
