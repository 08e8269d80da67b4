#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "galois/errors.hpp"
#include "galois/number_field.hpp"

// Tower construction keeps every extension collapsed to a simple one:
// adjoining a root y of g over the current collapsed field Q(t) searches
// integer combinations s = ct*t + cy*y until the powers of s span the
// whole relative algebra, then rewrites everything over Q(s). The search
// runs in max-norm rings with components ordered 0, 1, -1, 2, -2, ...,
// so the accepted combination is deterministic.

namespace galois {

namespace {

using RelElem = NfPoly;  // element of P[y]/(g), coefficients in P, degree < deg g

std::vector<Rational> flatten(const RelElem& r, int p, int d) {
    std::vector<Rational> flat(static_cast<size_t>(p) * static_cast<size_t>(d), Rational(0));
    for (int b = 0; b <= r.degree(); ++b) {
        const auto& cs = r[b].coords();
        for (int a = 0; a < p; ++a) flat[static_cast<size_t>(a * d + b)] = cs[static_cast<size_t>(a)];
    }
    return flat;
}

// Successive components 0, 1, -1, 2, -2, ... up to max-norm m.
std::vector<long> signed_range(long m) {
    std::vector<long> r{0};
    for (long v = 1; v <= m; ++v) {
        r.push_back(v);
        r.push_back(-v);
    }
    return r;
}

}  // namespace

FieldTower FieldTower::rationals() { return FieldTower(); }

const FieldPtr& FieldTower::field() const {
    static FieldPtr q = NumberField::rationals();
    return levels_.empty() ? q : levels_.back().collapsed;
}

int FieldTower::absolute_degree() const { return field()->degree(); }

NfElem FieldTower::embed_from(const NfElem& x, int levels_back) const {
    if (levels_back < 0 || levels_back > levels())
        throw std::invalid_argument("embed_from: bad level count");
    NfElem cur = x;
    for (int i = levels() - levels_back; i < levels(); ++i) {
        const Level& lv = levels_[static_cast<size_t>(i)];
        cur = NfElem(lv.collapsed, lv.embed_prev.apply(cur.coords()));
    }
    return cur;
}

FieldTower FieldTower::adjoined(const NfPoly& g, const std::string& name,
                                const PrecisionPolicy& policy, bool certified_irreducible) const {
    if (g.degree() < 2)
        throw std::invalid_argument("adjoined: defining polynomial must have degree >= 2");
    if (!g.is_monic()) throw std::invalid_argument("adjoined: defining polynomial must be monic");
    FieldPtr P = field();
    for (int i = 0; i <= g.degree(); ++i)
        if (g[i].field()->modulus() != P->modulus())
            throw std::invalid_argument("adjoined: coefficients not over the current field");
    if (!certified_irreducible && !is_irreducible(g, policy))
        throw std::invalid_argument("adjoined: defining polynomial is reducible");

    const int p = P->degree();
    const int d = g.degree();
    const int n = p * d;

    const NfElem t = P->generator();
    const NfElem one = P->one();

    // Search for a primitive combination s = ct*t + cy*y.
    for (long ring = 1;; ++ring) {
        if (ring > 64)
            throw InvariantViolation("adjoined: primitive element search ran away");
        for (long ct : signed_range(ring)) {
            for (long cy : signed_range(ring)) {
                if (std::max(std::labs(ct), std::labs(cy)) != ring) continue;

                RelElem s(std::vector<NfElem>{t.scaled(Rational(ct)), one.scaled(Rational(cy))});
                std::vector<RelElem> pows;
                pows.reserve(static_cast<size_t>(n + 1));
                RelElem acc = RelElem::constant(one);
                for (int j = 0; j <= n; ++j) {
                    pows.push_back(acc);
                    if (j < n) acc = (acc * s) % g;
                }
                std::vector<std::vector<Rational>> cols;
                cols.reserve(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j) cols.push_back(flatten(pows[static_cast<size_t>(j)], p, d));
                QMatrix m = QMatrix::from_columns(cols, Rational(0));
                auto m_inv = m.inverse();
                if (!m_inv) continue;

                // Powers of s form a basis, so s generates the whole
                // extension; its minimal polynomial is the new modulus.
                std::vector<Rational> top = m_inv->apply(flatten(pows[static_cast<size_t>(n)], p, d));
                std::vector<Rational> mod_coeffs(static_cast<size_t>(n + 1), Rational(0));
                for (int j = 0; j < n; ++j) mod_coeffs[static_cast<size_t>(j)] = -top[static_cast<size_t>(j)];
                mod_coeffs[static_cast<size_t>(n)] = 1;
                FieldPtr F = NumberField::create(QPoly(std::move(mod_coeffs)));

                Level lv;
                lv.name = name;
                lv.rel_defining = g;
                lv.collapsed = F;

                // Previous field elements sit at y-degree 0 of the
                // relative algebra; columns of the embedding matrix are
                // the images of the old power basis.
                lv.embed_prev = QMatrix::zero(n, p, Rational(0));
                for (int a = 0; a < p; ++a) {
                    std::vector<Rational> flat(static_cast<size_t>(n), Rational(0));
                    flat[static_cast<size_t>(a * d)] = 1;
                    std::vector<Rational> coords = m_inv->apply(flat);
                    for (int i = 0; i < n; ++i) lv.embed_prev.at(i, a) = coords[static_cast<size_t>(i)];
                }

                std::vector<Rational> y_flat(static_cast<size_t>(n), Rational(0));
                y_flat[1] = 1;
                NfElem y_new(F, m_inv->apply(y_flat));

                for (size_t li = 0; li < levels_.size(); ++li) {
                    const NfElem& old_gen = levels_.back().gens[li];
                    lv.gens.push_back(NfElem(F, lv.embed_prev.apply(old_gen.coords())));
                }
                lv.gens.push_back(y_new);

                if (!levels_.empty())
                    for (long c : levels_.back().combo) lv.combo.push_back(ct * c);
                lv.combo.push_back(cy);
                lv.ct = ct;
                lv.cy = cy;

                // Change of basis from the tower product basis (monomials
                // in the generators, exponents lexicographic) to the power
                // basis of F.
                QMatrix prev_t2s = levels_.empty() ? QMatrix::identity(1, Rational(0))
                                                   : levels_.back().tower_to_simple;
                std::vector<NfElem> y_pows;
                y_pows.reserve(static_cast<size_t>(d));
                NfElem yp = F->one();
                for (int b = 0; b < d; ++b) {
                    y_pows.push_back(yp);
                    yp = yp * y_new;
                }
                lv.tower_to_simple = QMatrix::zero(n, n, Rational(0));
                for (int jp = 0; jp < p; ++jp) {
                    NfElem mapped(F, lv.embed_prev.apply(prev_t2s.column(jp)));
                    for (int b = 0; b < d; ++b) {
                        NfElem col = mapped * y_pows[static_cast<size_t>(b)];
                        for (int i = 0; i < n; ++i)
                            lv.tower_to_simple.at(i, jp * d + b) = col.coords()[static_cast<size_t>(i)];
                    }
                }
                auto inv_t2s = lv.tower_to_simple.inverse();
                if (!inv_t2s)
                    throw InvariantViolation("adjoined: tower basis change not invertible");
                lv.simple_to_tower = std::move(*inv_t2s);

                // Cross-checks of the plumbing: the generator image list
                // must reproduce s, and y must be a root of g mapped up.
                NfElem s_check = F->zero();
                for (size_t li = 0; li < lv.gens.size(); ++li)
                    s_check += lv.gens[li].scaled(Rational(lv.combo[li]));
                if (s_check != F->generator())
                    throw InvariantViolation("adjoined: primitive combination mismatch");
                NfElem g_at_y = F->zero();
                for (int i = g.degree(); i >= 0; --i) {
                    g_at_y = g_at_y * y_new;
                    g_at_y += NfElem(F, lv.embed_prev.apply(g[i].coords()));
                }
                if (!g_at_y.is_zero())
                    throw InvariantViolation("adjoined: adjoined generator is not a root");

                FieldTower out = *this;
                out.levels_.push_back(std::move(lv));
                return out;
            }
        }
    }
}

namespace {

// Splits the roots of g (over the field of its coefficients) off exactly
// and factors what is left; linear leftovers mean the root search missed
// something, which is an engine bug.
void split_factor(const NfPoly& g, const PrecisionPolicy& policy, std::vector<NfElem>& roots_out,
                  std::vector<NfPoly>& pending_out, const NfElem* known_root = nullptr) {
    NfPoly rem = g;
    if (known_root) {
        auto [q, rr] = poly_divrem(rem, NfPoly::linear_root(*known_root));
        if (!rr.is_zero())
            throw InvariantViolation("splitting_field: adjoined generator fails division");
        rem = std::move(q);
        roots_out.push_back(*known_root);
        if (rem.degree() == 0) return;
    }
    for (const NfElem& r : roots_in_field(rem, policy)) {
        auto [q, rr] = poly_divrem(rem, NfPoly::linear_root(r));
        if (!rr.is_zero()) throw InvariantViolation("splitting_field: found root fails division");
        rem = std::move(q);
        roots_out.push_back(r);
    }
    if (rem.degree() == 0) return;
    for (const auto& [p, mult] : factor_over_field(rem, policy, std::max(12, rem.degree()))) {
        if (p.degree() < 2)
            throw InvariantViolation("splitting_field: cofactor has an unnoticed root");
        if (mult != 1) throw InvariantViolation("splitting_field: repeated factor of a squarefree input");
        pending_out.push_back(p);
    }
}

}  // namespace

SplitField splitting_field(const QPoly& f, const PrecisionPolicy& policy, int total_degree_cap) {
    if (f.degree() < 1) throw std::invalid_argument("splitting_field: polynomial must be nonconstant");
    if (poly_gcd(f, f.derivative()).degree() != 0)
        throw std::invalid_argument("splitting_field: polynomial must be squarefree");

    SplitField out;
    out.poly = f.monic();
    out.tower = FieldTower::rationals();

    // The irreducible factors not yet split to linears, always over the
    // current field. Working factor by factor keeps every root search
    // small: a factor of degree d only ever asks for d images per
    // embedding, where a whole-polynomial rescan would multiply the
    // candidate counts of all factors together.
    std::vector<NfPoly> pending;
    split_factor(lift_poly(out.poly, out.tower.field()), policy, out.roots, pending);

    int guard = 0;
    while (!pending.empty()) {
        if (++guard > out.poly.degree())
            throw InvariantViolation("splitting_field: adjunction loop did not converge");
        NfPoly h = pending.front();
        if (out.tower.absolute_degree() * h.degree() > total_degree_cap)
            throw CapacityError("splitting_field: splitting degree exceeds cap " +
                                std::to_string(total_degree_cap));
        out.tower = out.tower.adjoined(h, "r" + std::to_string(out.tower.levels() + 1), policy,
                                       /*certified_irreducible=*/true);

        std::vector<NfElem> roots_up;
        for (const NfElem& r : out.roots) roots_up.push_back(out.tower.embed_from(r, 1));
        out.roots = std::move(roots_up);

        // The adjoined factor has the new generator as a root by
        // construction; dividing it out first shrinks that search by a
        // whole candidate dimension.
        const NfElem& adjoined_root = out.tower.level(out.tower.levels() - 1).gens.back();
        std::vector<NfPoly> still_pending;
        for (size_t gi = 0; gi < pending.size(); ++gi) {
            const NfPoly& g = pending[gi];
            std::vector<NfElem> cs;
            for (int i = 0; i <= g.degree(); ++i) cs.push_back(out.tower.embed_from(g[i], 1));
            split_factor(NfPoly(std::move(cs)), policy, out.roots, still_pending,
                         gi == 0 ? &adjoined_root : nullptr);
        }
        pending = std::move(still_pending);
    }

    // The recorded roots must reproduce the polynomial exactly.
    const FieldPtr& L = out.tower.field();
    NfPoly prod = NfPoly::constant(L->one());
    for (const NfElem& r : out.roots) prod = prod * NfPoly::linear_root(r);
    if (prod != lift_poly(out.poly, L))
        throw InvariantViolation("splitting_field: root product does not reproduce the input");
    return out;
}

}  // namespace galois
