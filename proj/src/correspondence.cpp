#include "galois/correspondence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "galois/errors.hpp"

namespace galois {

namespace {

// Deterministic enumeration of integer combination vectors: rings of
// increasing max-norm, each component running 0, 1, -1, 2, -2, ...
// Visitor returns true to stop; enumeration order fixes which primitive
// element gets picked.
bool enumerate_combos(int dim, long ring, std::vector<long>& c, int pos, long current_max,
                      const std::function<bool(const std::vector<long>&)>& visit) {
    if (pos == dim) {
        if (current_max != ring) return false;
        return visit(c);
    }
    for (long mag = 0; mag <= ring; ++mag) {
        for (int sign = 0; sign < (mag == 0 ? 1 : 2); ++sign) {
            long v = sign == 0 ? mag : -mag;
            c[static_cast<size_t>(pos)] = v;
            if (enumerate_combos(dim, ring, c, pos + 1, std::max(current_max, mag), visit))
                return true;
        }
    }
    return false;
}

IntermediateField make_intermediate(const FieldPtr& L,
                                    const std::vector<std::vector<Rational>>& spanning) {
    const int n = L->degree();
    IntermediateField e;
    e.ambient = L;

    QMatrix m = QMatrix::from_rows(spanning, Rational(0));
    m.rref();
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row;
        bool nonzero = false;
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(m.at(i, j));
            nonzero = nonzero || sgn(m.at(i, j)) != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    e.echelon_rows = QMatrix::from_rows(rows, Rational(0));
    for (const auto& r : rows) e.basis.push_back(L->from_coords(std::vector<Rational>(r)));

    if (!e.contains_element(L->one()))
        throw InvariantViolation("intermediate field does not contain 1");
    for (size_t i = 0; i < e.basis.size(); ++i)
        for (size_t j = i; j < e.basis.size(); ++j)
            if (!e.contains_element(e.basis[i] * e.basis[j]))
                throw InvariantViolation("intermediate subspace is not multiplicatively closed");

    const int dim = e.degree();
    for (long ring = 0; ring <= 64; ++ring) {
        std::vector<long> c(static_cast<size_t>(dim), 0);
        bool done = enumerate_combos(
            dim, ring, c, 0, 0, [&](const std::vector<long>& combo) {
                NfElem cand = L->zero();
                for (int i = 0; i < dim; ++i)
                    cand += e.basis[static_cast<size_t>(i)].scaled(Rational(combo[static_cast<size_t>(i)]));
                QPoly mp = minimal_polynomial(cand);
                if (mp.degree() != dim) return false;
                e.primitive = cand;
                e.min_poly = mp;
                return true;
            });
        if (done) break;
        if (ring == 64)
            throw InvariantViolation("primitive element search for intermediate field ran away");
    }
    if (n % dim != 0)
        throw InvariantViolation("intermediate field degree does not divide ambient degree");
    return e;
}

}  // namespace

std::optional<std::vector<Rational>> IntermediateField::coords_in_basis(const NfElem& x) const {
    // The basis rows are in reduced echelon form, so membership is a
    // single back-reduction pass against the pivots rather than a fresh
    // elimination.
    const int n = ambient->degree();
    const int dim = degree();
    std::vector<Rational> rem = x.coords();
    std::vector<Rational> cs(static_cast<size_t>(dim), Rational(0));
    for (int i = 0; i < dim; ++i) {
        int p = -1;
        for (int j = 0; j < n; ++j)
            if (sgn(echelon_rows.at(i, j)) != 0) { p = j; break; }
        if (p < 0) throw InvariantViolation("coords_in_basis: zero echelon row");
        Rational c = rem[static_cast<size_t>(p)] / echelon_rows.at(i, p);
        cs[static_cast<size_t>(i)] = c;
        if (sgn(c) != 0)
            for (int j = p; j < n; ++j) rem[static_cast<size_t>(j)] -= c * echelon_rows.at(i, j);
    }
    for (const Rational& v : rem)
        if (sgn(v) != 0) return std::nullopt;
    return cs;
}

bool IntermediateField::contains_subfield(const IntermediateField& o) const {
    for (const NfElem& b : o.basis)
        if (!contains_element(b)) return false;
    return true;
}

IntermediateField fixed_field(const std::vector<FieldHom>& sub_autos, const FieldPtr& L) {
    if (sub_autos.empty()) throw std::invalid_argument("fixed_field: empty automorphism list");
    const int n = L->degree();
    QMatrix stacked(static_cast<int>(sub_autos.size()) * n, n, Rational(0));
    for (size_t k = 0; k < sub_autos.size(); ++k) {
        const QMatrix& m = sub_autos[k].matrix();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational v = m.at(i, j);
                if (i == j) v -= 1;
                stacked.at(static_cast<int>(k) * n + i, j) = v;
            }
    }
    auto kernel = kernel_basis(stacked, Rational(0));
    return make_intermediate(L, kernel);
}

std::vector<int> stabilizer(const IntermediateField& e, const std::vector<FieldHom>& autos) {
    std::vector<int> out;
    for (size_t k = 0; k < autos.size(); ++k) {
        bool fixes = true;
        for (const NfElem& b : e.basis)
            if (autos[k].apply(b) != b) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(static_cast<int>(k));
    }
    return out;
}

namespace {

// Spanning rows of the compositum: the span of all pairwise basis
// products is multiplicatively closed, since (a_i b_j)(a_k b_l) =
// (a_i a_k)(b_j b_l) expands over A and B back into such products, and
// it contains A and B (write 1 in the other factor's basis).
std::vector<std::vector<Rational>> compositum_rows(const IntermediateField& a,
                                                   const IntermediateField& b) {
    if (a.ambient->modulus() != b.ambient->modulus())
        throw std::invalid_argument("compositum: different ambient fields");
    std::vector<std::vector<Rational>> rows;
    for (const NfElem& x : a.basis)
        for (const NfElem& y : b.basis) rows.push_back((x * y).coords());
    return rows;
}

// Spanning rows of the intersection, from the kernel of [A | -B].
std::vector<std::vector<Rational>> intersection_rows(const IntermediateField& a,
                                                     const IntermediateField& b) {
    if (a.ambient->modulus() != b.ambient->modulus())
        throw std::invalid_argument("intersect_fields: different ambient fields");
    const int n = a.ambient->degree();
    const int da = a.degree();
    const int db = b.degree();
    QMatrix m(n, da + db, Rational(0));
    for (int j = 0; j < da; ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, j) = a.basis[static_cast<size_t>(j)].coords()[static_cast<size_t>(i)];
    for (int j = 0; j < db; ++j)
        for (int i = 0; i < n; ++i)
            m.at(i, da + j) = -b.basis[static_cast<size_t>(j)].coords()[static_cast<size_t>(i)];
    auto kernel = kernel_basis(m, Rational(0));
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : kernel) {
        NfElem x = a.ambient->zero();
        for (int j = 0; j < da; ++j)
            x += a.basis[static_cast<size_t>(j)].scaled(v[static_cast<size_t>(j)]);
        rows.push_back(x.coords());
    }
    return rows;
}

// Canonical echelon form of a row span, matching the normalization used
// when intermediate fields are built.
QMatrix span_echelon(const std::vector<std::vector<Rational>>& rows, int cols) {
    QMatrix m = rows.empty() ? QMatrix(0, cols, Rational(0)) : QMatrix::from_rows(rows, Rational(0));
    m.rref();
    std::vector<std::vector<Rational>> reduced;
    for (int i = 0; i < m.rows(); ++i) {
        bool nonzero = false;
        std::vector<Rational> row;
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(m.at(i, j));
            nonzero = nonzero || sgn(m.at(i, j)) != 0;
        }
        if (nonzero) reduced.push_back(std::move(row));
    }
    return reduced.empty() ? QMatrix(0, cols, Rational(0)) : QMatrix::from_rows(reduced, Rational(0));
}

}  // namespace

IntermediateField compositum(const IntermediateField& a, const IntermediateField& b) {
    return make_intermediate(a.ambient, compositum_rows(a, b));
}

IntermediateField intersect_fields(const IntermediateField& a, const IntermediateField& b) {
    std::vector<std::vector<Rational>> rows = intersection_rows(a, b);
    if (rows.empty()) rows.push_back(a.ambient->one().coords());
    return make_intermediate(a.ambient, rows);
}

Restriction restrict_hom(const FieldHom& sigma, const IntermediateField& e) {
    Restriction r;
    r.primitive_image = sigma.apply(e.primitive);
    const int n = e.ambient->degree();
    const int dim = e.degree();
    QMatrix powers(n, dim, Rational(0));
    NfElem p = e.ambient->one();
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < n; ++i) powers.at(i, j) = p.coords()[static_cast<size_t>(i)];
        p = p * e.primitive;
    }
    auto sol = solve_linear(powers, r.primitive_image.coords(), Rational(0));
    r.stabilizes = sol.has_value();
    if (sol) r.coords = std::move(*sol);
    return r;
}

NfPoly proof_polynomial(const std::vector<FieldHom>& sub_autos, const NfElem& a,
                        const IntermediateField& fixed) {
    if (sub_autos.empty()) throw std::invalid_argument("proof_polynomial: empty automorphism list");
    const FieldPtr& L = a.field();
    NfPoly p = NfPoly::constant(L->one());
    for (const FieldHom& s : sub_autos) p = p * NfPoly::linear_root(s.apply(a));
    if (p.degree() != static_cast<int>(sub_autos.size()) || !p.is_monic())
        throw InvariantViolation("proof_polynomial: wrong shape");
    if (!p.eval(a).is_zero())
        throw InvariantViolation("proof_polynomial: does not vanish at the element");
    for (int i = 0; i <= p.degree(); ++i)
        if (!fixed.contains_element(p[i]))
            throw InvariantViolation("proof_polynomial: coefficient escapes the fixed field");
    return p;
}

namespace {

std::string subgroup_name(const Subgroup& h) {
    std::string s = "{";
    for (size_t i = 0; i < h.members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(h.members[static_cast<size_t>(i)]);
    }
    return s + "}";
}

}  // namespace

CorrespondenceReport verify_fundamental_theorem(const SplitField& sf,
                                                const PrecisionPolicy& policy,
                                                int group_order_cap) {
    CorrespondenceReport rep;
    rep.split = sf;
    const FieldPtr& L = sf.field();
    const int n = L->degree();

    if (!separability_check(sf.poly))
        throw std::invalid_argument("verify_fundamental_theorem: polynomial is not squarefree");

    rep.autos = enumerate_endomorphisms(sf.tower, policy, sf.roots);
    if (static_cast<int>(rep.autos.size()) > group_order_cap)
        throw CapacityError("verify_fundamental_theorem: group order exceeds cap " +
                            std::to_string(group_order_cap));

    rep.verdicts.push_back(
        {"order", static_cast<int>(rep.autos.size()) == n,
         std::to_string(rep.autos.size()) + " automorphisms, degree " + std::to_string(n)});

    // The permutation action on the recorded roots; distinctness of the
    // permutations is re-verified by the group constructor.
    std::vector<Permutation> perms;
    for (const FieldHom& h : rep.autos) {
        Permutation p(sf.roots.size());
        for (size_t i = 0; i < sf.roots.size(); ++i) {
            NfElem img = h.apply(sf.roots[i]);
            int at = -1;
            for (size_t j = 0; j < sf.roots.size(); ++j)
                if (sf.roots[j] == img) {
                    at = static_cast<int>(j);
                    break;
                }
            if (at < 0)
                throw InvariantViolation("verify_fundamental_theorem: automorphism moves a root "
                                         "outside the root set");
            p[i] = at;
        }
        perms.push_back(std::move(p));
    }
    rep.group = PermGroup::from_elements(static_cast<int>(sf.roots.size()), std::move(perms));

    auto subgroups = all_subgroups(rep.group, group_order_cap);
    std::map<std::vector<int>, int> subgroup_index;
    for (size_t i = 0; i < subgroups.size(); ++i) {
        SubgroupData data;
        data.subgroup = subgroups[i];
        std::vector<FieldHom> sub_autos;
        for (int m : subgroups[i].members) sub_autos.push_back(rep.autos[static_cast<size_t>(m)]);
        data.fixed = fixed_field(sub_autos, L);
        subgroup_index[subgroups[i].members] = static_cast<int>(i);
        rep.lattice.push_back(std::move(data));
    }

    // Part 1: the two maps are mutually inverse, and distinct subgroups
    // get distinct fields.
    {
        bool pass = true;
        std::string detail;
        for (size_t i = 0; i < rep.lattice.size() && pass; ++i) {
            auto stab = stabilizer(rep.lattice[i].fixed, rep.autos);
            if (stab != rep.lattice[i].subgroup.members) {
                pass = false;
                detail = "stabilizer of fixed field differs for subgroup " +
                         subgroup_name(rep.lattice[i].subgroup);
            }
        }
        for (size_t i = 0; i < rep.lattice.size() && pass; ++i)
            for (size_t j = i + 1; j < rep.lattice.size() && pass; ++j)
                if (rep.lattice[i].fixed == rep.lattice[j].fixed) {
                    pass = false;
                    detail = "two subgroups share a fixed field";
                }
        if (pass)
            detail = std::to_string(rep.lattice.size()) + " subgroups, maps mutually inverse";
        rep.verdicts.push_back({"correspondence_bijective", pass, detail});
    }

    // Part 2: inclusion reversal over every ordered pair.
    {
        bool pass = true;
        std::string detail;
        int pairs = 0;
        for (size_t i = 0; i < rep.lattice.size() && pass; ++i)
            for (size_t j = 0; j < rep.lattice.size(); ++j) {
                bool sub_incl = rep.lattice[j].subgroup.contains_all(rep.lattice[i].subgroup);
                bool field_incl = rep.lattice[i].fixed.contains_subfield(rep.lattice[j].fixed);
                ++pairs;
                if (sub_incl != field_incl) {
                    pass = false;
                    detail = "inclusion mismatch for subgroups " +
                             subgroup_name(rep.lattice[i].subgroup) + " and " +
                             subgroup_name(rep.lattice[j].subgroup);
                    break;
                }
            }
        if (pass) detail = std::to_string(pairs) + " ordered pairs consistent";
        rep.verdicts.push_back({"inclusion_reversing", pass, detail});
    }

    // Part 3: degree of the fixed field equals the subgroup index, and
    // the subextension above it has degree |H|.
    {
        bool pass = true;
        std::string detail;
        for (const SubgroupData& d : rep.lattice) {
            int index = rep.group.order() / d.subgroup.order();
            if (d.fixed.degree() != index || d.fixed.degree() * d.subgroup.order() != n) {
                pass = false;
                detail = "degree/index mismatch at subgroup " + subgroup_name(d.subgroup);
                break;
            }
        }
        if (pass) detail = "degrees match indices for all subgroups";
        rep.verdicts.push_back({"degree_index", pass, detail});
    }

    // Part 4: the four lattice identities over every pair. The compositum
    // and intersection spans are compared against the fixed field of the
    // subgroup meet and join; since those targets already carry verified
    // stabilizers equal to their subgroups, span equality settles the
    // group side of the identity as well. Both operations are symmetric,
    // so unordered pairs cover everything.
    {
        bool pass = true;
        std::string detail;
        int pairs = 0;
        const int n_amb = L->degree();
        for (size_t i = 0; i < rep.lattice.size() && pass; ++i)
            for (size_t j = i; j < rep.lattice.size() && pass; ++j) {
                const SubgroupData& A = rep.lattice[i];
                const SubgroupData& B = rep.lattice[j];
                std::vector<int> meet_members;
                std::set_intersection(A.subgroup.members.begin(), A.subgroup.members.end(),
                                      B.subgroup.members.begin(), B.subgroup.members.end(),
                                      std::back_inserter(meet_members));
                std::vector<int> join_gens = A.subgroup.members;
                join_gens.insert(join_gens.end(), B.subgroup.members.begin(),
                                 B.subgroup.members.end());
                auto join = closure_subgroup(rep.group, join_gens);
                auto meet_it = subgroup_index.find(meet_members);
                auto join_it = subgroup_index.find(join.members);
                if (meet_it == subgroup_index.end() || join_it == subgroup_index.end())
                    throw InvariantViolation("verify_fundamental_theorem: lattice lookup failed");
                const IntermediateField& fix_meet =
                    rep.lattice[static_cast<size_t>(meet_it->second)].fixed;
                const IntermediateField& fix_join =
                    rep.lattice[static_cast<size_t>(join_it->second)].fixed;

                ++pairs;
                if (span_echelon(compositum_rows(A.fixed, B.fixed), n_amb) !=
                        fix_meet.echelon_rows ||
                    span_echelon(intersection_rows(A.fixed, B.fixed), n_amb) !=
                        fix_join.echelon_rows) {
                    pass = false;
                    detail = "lattice identity fails for subgroups " +
                             subgroup_name(A.subgroup) + " and " + subgroup_name(B.subgroup);
                }
            }
        if (pass) detail = std::to_string(pairs) + " pairs satisfy all four identities";
        rep.verdicts.push_back({"lattice_identities", pass, detail});
    }

    // Part 5: H normal in G exactly when the fixed field is normal over
    // Q; in that case restriction is an epimorphism G -> Aut(E) with
    // kernel H, and the quotient has matching order.
    //
    // Everything here is exact. The roots of E's minimal polynomial that
    // lie in L are exactly the G-conjugates of E's primitive: the product
    // of (T - c) over the distinct conjugates is checked to equal the
    // minimal polynomial, so no root can exist outside the conjugate set.
    // E is normal over Q precisely when all of them already lie in E.
    {
        bool pass = true;
        std::string detail;
        for (SubgroupData& d : rep.lattice) {
            d.subgroup_normal = is_normal_subgroup(rep.group, d.subgroup);
            const int dim = d.fixed.degree();

            std::vector<NfElem> conj;
            for (const FieldHom& s : rep.autos) {
                NfElem c = s.apply(d.fixed.primitive);
                if (std::find(conj.begin(), conj.end(), c) == conj.end()) conj.push_back(c);
            }
            NfPoly orbit_poly = NfPoly::constant(L->one());
            for (const NfElem& c : conj) orbit_poly = orbit_poly * NfPoly::linear_root(c);
            if (orbit_poly != lift_poly(d.fixed.min_poly, L))
                throw InvariantViolation(
                    "verify_fundamental_theorem: conjugates do not reproduce the minimal "
                    "polynomial");

            std::vector<NfElem> in_e;
            for (const NfElem& c : conj)
                if (d.fixed.contains_element(c)) in_e.push_back(c);
            d.field_normal = static_cast<int>(in_e.size()) == dim;

            if (d.subgroup_normal != d.field_normal) {
                pass = false;
                detail = "normality mismatch at subgroup " + subgroup_name(d.subgroup);
                break;
            }
            if (!d.subgroup_normal) continue;

            // Abstract copy of E with the conjugates transported along
            // the primitive-power basis.
            FieldPtr fe = NumberField::create(d.fixed.min_poly);
            const int na = L->degree();
            QMatrix powers(na, dim, Rational(0));
            NfElem pw = L->one();
            for (int j = 0; j < dim; ++j) {
                for (int i = 0; i < na; ++i)
                    powers.at(i, j) = pw.coords()[static_cast<size_t>(i)];
                pw = pw * d.fixed.primitive;
            }
            std::vector<NfElem> roots_e;
            for (const NfElem& c : in_e) {
                auto sol = solve_linear(powers, c.coords(), Rational(0));
                if (!sol)
                    throw InvariantViolation(
                        "verify_fundamental_theorem: conjugate in E escapes the primitive basis");
                sol->resize(static_cast<size_t>(dim), Rational(0));
                roots_e.push_back(fe->from_coords(std::move(*sol)));
            }
            std::vector<FieldHom> autsE;
            for (const NfElem& r : roots_e) autsE.push_back(FieldHom(fe, fe, r));
            autsE = certify_automorphisms(std::move(autsE));

            std::vector<Permutation> permsE;
            for (const FieldHom& h : autsE) {
                Permutation p(roots_e.size());
                for (size_t r = 0; r < roots_e.size(); ++r) {
                    NfElem img = h.apply(roots_e[r]);
                    int at = -1;
                    for (size_t s = 0; s < roots_e.size(); ++s)
                        if (roots_e[s] == img) at = static_cast<int>(s);
                    if (at < 0)
                        throw InvariantViolation(
                            "verify_fundamental_theorem: fixed-field automorphism loses a root");
                    p[r] = at;
                }
                permsE.push_back(std::move(p));
            }
            PermGroup ge = PermGroup::from_elements(static_cast<int>(roots_e.size()),
                                                    std::move(permsE));

            std::vector<int> to_e(static_cast<size_t>(rep.group.order()), -1);
            bool mapped_all = true;
            for (int gi = 0; gi < rep.group.order(); ++gi) {
                Restriction r = restrict_hom(rep.autos[static_cast<size_t>(gi)], d.fixed);
                if (!r.stabilizes) {
                    mapped_all = false;
                    break;
                }
                NfElem img_e = fe->from_coords(std::vector<Rational>(r.coords));
                int at = -1;
                for (size_t k = 0; k < autsE.size(); ++k)
                    if (autsE[k].gen_image() == img_e) at = static_cast<int>(k);
                if (at < 0) {
                    mapped_all = false;
                    break;
                }
                to_e[static_cast<size_t>(gi)] = at;
            }
            if (!mapped_all) {
                pass = false;
                detail = "restriction does not stabilize the fixed field of " +
                         subgroup_name(d.subgroup);
                break;
            }
            auto hc = check_epimorphism(rep.group, ge, to_e);
            auto q = quotient_group(rep.group, d.subgroup);
            if (!hc.is_hom || !hc.surjective || hc.kernel != d.subgroup.members ||
                ge.order() * d.subgroup.order() != rep.group.order() ||
                q.group.order() != ge.order()) {
                pass = false;
                detail = "restriction epimorphism fails at subgroup " + subgroup_name(d.subgroup);
                break;
            }
        }
        if (pass) detail = "normality equivalence and restriction epimorphisms hold";
        rep.verdicts.push_back({"normal_subgroups", pass, detail});
    }

    // Part 6: the correspondence restricts to a bijection between normal
    // subgroups and normal subfields.
    {
        int normal_subs = 0;
        int normal_fields = 0;
        bool aligned = true;
        for (const SubgroupData& d : rep.lattice) {
            normal_subs += d.subgroup_normal ? 1 : 0;
            normal_fields += d.field_normal ? 1 : 0;
            aligned = aligned && (d.subgroup_normal == d.field_normal);
        }
        bool pass = aligned && normal_subs == normal_fields;
        rep.verdicts.push_back({"normal_restriction_bijective", pass,
                                std::to_string(normal_subs) + " normal subgroups and " +
                                    std::to_string(normal_fields) + " normal subfields"});
    }

    // Proof polynomials for the standard samples over every subgroup.
    {
        bool pass = true;
        std::string detail;
        int checked = 0;
        NfElem theta = L->generator();
        std::vector<NfElem> samples{theta, theta * theta, theta + theta * theta};
        for (const SubgroupData& d : rep.lattice) {
            std::vector<FieldHom> sub_autos;
            for (int m : d.subgroup.members) sub_autos.push_back(rep.autos[static_cast<size_t>(m)]);
            for (const NfElem& a : samples) {
                try {
                    proof_polynomial(sub_autos, a, d.fixed);
                    ++checked;
                } catch (const InvariantViolation& err) {
                    pass = false;
                    detail = std::string("sample failed at subgroup ") +
                             subgroup_name(d.subgroup) + ": " + err.what();
                }
                if (!pass) break;
            }
            if (!pass) break;
        }
        if (pass) detail = std::to_string(checked) + " sample polynomials verified";
        rep.verdicts.push_back({"proof_polynomials", pass, detail});
    }

    rep.all_pass = true;
    for (const Verdict& v : rep.verdicts) rep.all_pass = rep.all_pass && v.pass;
    return rep;
}

}  // namespace galois
