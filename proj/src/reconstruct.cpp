#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "galois/counters.hpp"
#include "galois/errors.hpp"
#include "galois/number_field.hpp"

// Exact recovery of roots and factors over a number field from certified
// numeric data. The pattern throughout: enumerate candidate tuples of
// embedding values consistent with complex conjugation, solve the inverse
// Vandermonde system for power-basis coordinates, reconstruct each
// coordinate as a rational by continued fractions, and accept only after
// an exact verification in the field. Precision failures escalate;
// nothing numeric is ever trusted on its own.

namespace galois {

namespace {

template <class F>
auto with_precision(const PrecisionPolicy& policy, F&& fn) {
    long bits = std::min(policy.start_bits, policy.cap_bits);
    for (;;) {
        work_counters().note_precision(bits);
        try {
            return fn(bits);
        } catch (const UndecidedError&) {
            if (bits >= policy.cap_bits) throw;
            bits = std::min(bits * 2, policy.cap_bits);
        }
    }
}

Integer denominator_bound(long bits) { return Integer(1) << static_cast<unsigned long>(bits / 4); }

// Numeric candidate roots at one orbit representative embedding.
struct RepCand {
    int emb = 0;
    int partner = 0;
    bool real_emb = false;
    std::vector<ComplexApprox> roots;
    std::vector<int> conj;  // pairing within `roots`; real embeddings only
};

std::vector<Cplx> poly_values_at_embedding(const NfPoly& h, const EmbeddingData& emb, int m,
                                           bool force_real) {
    std::vector<Cplx> cs;
    cs.reserve(static_cast<size_t>(h.degree() + 1));
    for (int i = 0; i <= h.degree(); ++i) {
        Cplx v = embed_value(h[i], emb, m);
        // Coefficients at a real embedding are exactly real; zeroing the
        // numeric imaginary part restores the conjugation symmetry the
        // root pairing certificate expects.
        if (force_real) v.im = 0;
        cs.push_back(std::move(v));
    }
    return cs;
}

std::vector<RepCand> build_rep_candidates(const NfPoly& h, const EmbeddingData& emb, long bits) {
    std::vector<RepCand> reps;
    for (int m : emb.orbit_reps) {
        RepCand rc;
        rc.emb = m;
        rc.partner = emb.conj_index[static_cast<size_t>(m)];
        rc.real_emb = emb.is_real_embedding(m);
        auto rf = find_roots(poly_values_at_embedding(h, emb, m, rc.real_emb), bits);
        if (!rf.separated)
            throw UndecidedError("candidate roots not separable at " + std::to_string(bits) +
                                 " bits");
        rc.roots = std::move(rf.roots);
        if (rc.real_emb) rc.conj = pair_conjugate_roots(rc.roots);
        reps.push_back(std::move(rc));
    }
    return reps;
}

std::optional<NfElem> reconstruct_element(const std::vector<Cplx>& w, const FieldPtr& L,
                                          const EmbeddingData& emb, const Integer& den_bound,
                                          const mpf_class& im_eps) {
    work_counters().reconstructions++;
    std::vector<Cplx> coords_c = mat_vec(emb.vandermonde_inv, w);
    std::vector<Rational> coords;
    coords.reserve(coords_c.size());
    for (const Cplx& c : coords_c) {
        mpf_class im_abs = abs(c.im);
        if (im_abs > im_eps) return std::nullopt;
        auto q = rational_reconstruct(c.re, den_bound);
        if (!q) return std::nullopt;
        coords.push_back(std::move(*q));
    }
    return L->from_coords(std::move(coords));
}

// Depth-first enumeration of embedding-value tuples for a single element.
// Two modes share the walk: per-embedding candidate lists (general
// coefficients), or one shared list with per-root capacities (roots of an
// irreducible rational polynomial hit each complex root equally often
// across the embeddings).
struct RootSearch {
    FieldPtr L;
    const EmbeddingData* emb = nullptr;
    const NfPoly* target = nullptr;  // exact acceptance test: target(x) == 0
    std::vector<RepCand> reps;
    const std::vector<ComplexApprox>* shared_roots = nullptr;
    const std::vector<int>* shared_conj = nullptr;
    std::vector<int> caps;
    Integer den_bound;
    mpf_class im_eps;
    std::uint64_t work_cap = 0;
    std::uint64_t used = 0;
    size_t max_found = 0;

    std::vector<Cplx> w;
    std::set<std::vector<Rational>> seen;
    std::vector<NfElem> found;

    void run() {
        w.assign(static_cast<size_t>(L->degree()), Cplx::make(emb->bits));
        dfs(0);
    }

    void dfs(size_t ri) {
        if (found.size() >= max_found) return;
        if (ri == reps.size()) {
            leaf();
            return;
        }
        const RepCand& rc = reps[ri];
        const auto& roots = shared_roots ? *shared_roots : rc.roots;
        const std::vector<int>* conj_idx = shared_conj ? shared_conj : &rc.conj;
        const int d = static_cast<int>(roots.size());
        for (int i = 0; i < d; ++i) {
            if (rc.real_emb) {
                // The value of the element at a real embedding is real.
                if ((*conj_idx)[static_cast<size_t>(i)] != i) continue;
                if (shared_roots) {
                    if (caps[static_cast<size_t>(i)] < 1) continue;
                    caps[static_cast<size_t>(i)] -= 1;
                }
                Cplx v = roots[static_cast<size_t>(i)].value();
                v.im = 0;
                w[static_cast<size_t>(rc.emb)] = v;
                dfs(ri + 1);
                if (shared_roots) caps[static_cast<size_t>(i)] += 1;
            } else {
                int ic = shared_roots ? (*conj_idx)[static_cast<size_t>(i)] : -1;
                if (shared_roots) {
                    if (ic == i) {
                        if (caps[static_cast<size_t>(i)] < 2) continue;
                        caps[static_cast<size_t>(i)] -= 2;
                    } else {
                        if (caps[static_cast<size_t>(i)] < 1 || caps[static_cast<size_t>(ic)] < 1)
                            continue;
                        caps[static_cast<size_t>(i)] -= 1;
                        caps[static_cast<size_t>(ic)] -= 1;
                    }
                }
                Cplx v = roots[static_cast<size_t>(i)].value();
                w[static_cast<size_t>(rc.emb)] = v;
                w[static_cast<size_t>(rc.partner)] = conj(v);
                dfs(ri + 1);
                if (shared_roots) {
                    if (ic == i) {
                        caps[static_cast<size_t>(i)] += 2;
                    } else {
                        caps[static_cast<size_t>(i)] += 1;
                        caps[static_cast<size_t>(ic)] += 1;
                    }
                }
            }
            if (found.size() >= max_found) return;
        }
    }

    void leaf() {
        work_counters().tuples_tested++;
        if (++used > work_cap)
            throw CapacityError("roots_in_field: candidate tuple budget exhausted");
        auto x = reconstruct_element(w, L, *emb, den_bound, im_eps);
        if (!x) return;
        work_counters().exact_checks++;
        if (!target->eval(*x).is_zero()) return;
        if (seen.insert(x->coords()).second) found.push_back(*x);
    }
};

bool all_coeffs_rational(const NfPoly& f) {
    for (int i = 0; i <= f.degree(); ++i)
        if (!f[i].is_rational()) return false;
    return true;
}

QPoly lower_poly(const NfPoly& f) {
    std::vector<Rational> cs;
    cs.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(f[i].rational_value());
    return QPoly(std::move(cs));
}

// Exact root of a linear polynomial.
NfElem linear_root_of(const NfPoly& f) { return -(f[0] / f[1]); }

void sort_by_first_embedding(std::vector<NfElem>& xs, const FieldPtr& L, long bits) {
    if (xs.size() < 2) return;
    auto emb = L->embeddings(bits);
    std::vector<std::pair<Cplx, size_t>> keyed;
    keyed.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) keyed.emplace_back(embed_value(xs[i], *emb, 0), i);
    std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        if (a.first.re != b.first.re) return a.first.re < b.first.re;
        if (a.first.im != b.first.im) return a.first.im < b.first.im;
        return xs[a.second] < xs[b.second];
    });
    std::vector<NfElem> out;
    out.reserve(xs.size());
    for (const auto& [v, i] : keyed) out.push_back(xs[i]);
    xs = std::move(out);
}

// Roots in L of an irreducible rational polynomial p of degree >= 2.
// Every root of p in L meets each complex root of p in exactly
// [L:Q]/deg(p) embeddings, which caps the search sharply.
std::vector<NfElem> roots_of_rational_irreducible(const QPoly& p, const FieldPtr& L,
                                                  const PrecisionPolicy& policy) {
    const int n = L->degree();
    const int k = p.degree();
    if (n % k != 0) return {};
    return with_precision(policy, [&](long bits) {
        auto emb = L->embeddings(bits);
        std::vector<Cplx> pc;
        pc.reserve(static_cast<size_t>(k + 1));
        for (int i = 0; i <= k; ++i) {
            Cplx c = Cplx::make(bits);
            c.re = mpf_from_rational(p[i], bits);
            pc.push_back(std::move(c));
        }
        auto rf = find_roots(pc, bits);
        if (!rf.separated)
            throw UndecidedError("rational factor roots not separable at " +
                                 std::to_string(bits) + " bits");
        std::vector<int> conj_idx = pair_conjugate_roots(rf.roots);

        RootSearch search;
        search.L = L;
        search.emb = emb.get();
        NfPoly lifted = lift_poly(p, L);
        search.target = &lifted;
        for (int m : emb->orbit_reps) {
            RepCand rc;
            rc.emb = m;
            rc.partner = emb->conj_index[static_cast<size_t>(m)];
            rc.real_emb = emb->is_real_embedding(m);
            search.reps.push_back(std::move(rc));
        }
        search.shared_roots = &rf.roots;
        search.shared_conj = &conj_idx;
        search.caps.assign(static_cast<size_t>(k), n / k);
        search.den_bound = denominator_bound(bits);
        search.im_eps = pow2_mpf(-bits / 4, bits);
        search.work_cap = policy.work_cap;
        search.max_found = static_cast<size_t>(k);
        search.run();
        sort_by_first_embedding(search.found, L, bits);
        return search.found;
    });
}

// Roots in L of a squarefree polynomial with coefficients genuinely in L.
std::vector<NfElem> roots_general(const NfPoly& sqf, const FieldPtr& L,
                                  const PrecisionPolicy& policy) {
    return with_precision(policy, [&](long bits) {
        auto emb = L->embeddings(bits);
        RootSearch search;
        search.L = L;
        search.emb = emb.get();
        search.target = &sqf;
        search.reps = build_rep_candidates(sqf, *emb, bits);
        search.den_bound = denominator_bound(bits);
        search.im_eps = pow2_mpf(-bits / 4, bits);
        search.work_cap = policy.work_cap;
        search.max_found = static_cast<size_t>(sqf.degree());
        search.run();
        sort_by_first_embedding(search.found, L, bits);
        return search.found;
    });
}

bool factor_order_less(const NfPoly& a, const NfPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

// One full factorization pass over the squarefree monic h at a fixed
// precision. Scans factor degrees k in increasing order; for each k,
// enumerates conjugation-consistent k-subsets of the remaining numeric
// roots at every orbit representative, reconstructs the would-be
// coefficients, and keeps any candidate that exactly divides the
// remaining cofactor. Increasing k guarantees minimal (hence
// irreducible) factors come out first.
struct FactorSearch {
    FieldPtr L;
    const EmbeddingData* emb = nullptr;
    std::vector<RepCand> reps;
    std::vector<std::vector<int>> remaining;
    Integer den_bound;
    mpf_class im_eps;
    std::uint64_t work_cap = 0;
    std::uint64_t used = 0;

    NfPoly rem_cof;

    std::vector<NfPoly> run(const NfPoly& h) {
        rem_cof = h;
        remaining.clear();
        for (const RepCand& rc : reps) {
            std::vector<int> all(rc.roots.size());
            for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
            remaining.push_back(std::move(all));
        }
        std::vector<NfPoly> factors;
        int k = 1;
        while (rem_cof.degree() > 0) {
            if (k >= rem_cof.degree()) {
                // Every proper subset has been ruled out, so the cofactor
                // itself is irreducible; no reconstruction needed.
                factors.push_back(rem_cof);
                break;
            }
            NfPoly f;
            if (find_one(k, f)) {
                auto [q, r] = poly_divrem(rem_cof, f);
                if (!r.is_zero())
                    throw InvariantViolation("factor_over_field: verified factor fails division");
                factors.push_back(std::move(f));
                rem_cof = std::move(q);
            } else {
                ++k;
            }
        }
        return factors;
    }

    bool find_one(int k, NfPoly& out) {
        chosen_.assign(reps.size(), {});
        return choose_rep(0, k, out);
    }

  private:
    std::vector<std::vector<int>> chosen_;

    bool choose_rep(size_t ri, int k, NfPoly& out) {
        if (ri == reps.size()) return attempt(k, out);
        const auto& pool = remaining[ri];
        if (static_cast<int>(pool.size()) < k) return false;
        std::vector<int> pick(static_cast<size_t>(k));
        return combos(ri, k, pool, pick, 0, 0, out);
    }

    bool combos(size_t ri, int k, const std::vector<int>& pool, std::vector<int>& pick,
                int depth, size_t start, NfPoly& out) {
        if (depth == k) {
            if (reps[ri].real_emb && !conj_closed(reps[ri], pick)) return false;
            chosen_[ri] = pick;
            return choose_rep(ri + 1, k, out);
        }
        for (size_t i = start; i + static_cast<size_t>(k - depth) <= pool.size(); ++i) {
            pick[static_cast<size_t>(depth)] = pool[i];
            if (combos(ri, k, pool, pick, depth + 1, i + 1, out)) return true;
        }
        return false;
    }

    bool conj_closed(const RepCand& rc, const std::vector<int>& pick) const {
        for (int i : pick) {
            int j = rc.conj[static_cast<size_t>(i)];
            if (std::find(pick.begin(), pick.end(), j) == pick.end()) return false;
        }
        return true;
    }

    bool attempt(int k, NfPoly& out) {
        work_counters().tuples_tested++;
        if (++used > work_cap)
            throw CapacityError("factor_over_field: candidate subset budget exhausted");
        const long bits = emb->bits;
        const int n = L->degree();
        // Monic product over the chosen roots at each representative.
        std::vector<std::vector<Cplx>> coeffs_at_rep;
        coeffs_at_rep.reserve(reps.size());
        for (size_t ri = 0; ri < reps.size(); ++ri) {
            std::vector<Cplx> cs{one_like(Cplx::make(bits))};
            for (int idx : chosen_[ri]) {
                Cplx v = reps[ri].roots[static_cast<size_t>(idx)].value();
                if (reps[ri].real_emb && reps[ri].conj[static_cast<size_t>(idx)] == idx) v.im = 0;
                std::vector<Cplx> next(cs.size() + 1, Cplx::make(bits));
                for (size_t j = 0; j < cs.size(); ++j) {
                    next[j + 1] = next[j + 1] + cs[j];
                    next[j] = next[j] - v * cs[j];
                }
                cs = std::move(next);
            }
            // cs holds the coefficients lowest degree first, leading 1.
            coeffs_at_rep.push_back(std::move(cs));
        }
        std::vector<NfElem> fc;
        fc.reserve(static_cast<size_t>(k));
        for (int j = 0; j < k; ++j) {
            std::vector<Cplx> w(static_cast<size_t>(n), Cplx::make(bits));
            for (size_t ri = 0; ri < reps.size(); ++ri) {
                const Cplx& c = coeffs_at_rep[ri][static_cast<size_t>(j)];
                w[static_cast<size_t>(reps[ri].emb)] = c;
                if (!reps[ri].real_emb) w[static_cast<size_t>(reps[ri].partner)] = conj(c);
            }
            auto e = reconstruct_element(w, L, *emb, den_bound, im_eps);
            if (!e) return false;
            fc.push_back(std::move(*e));
        }
        fc.push_back(L->one());
        NfPoly cand(std::move(fc));
        if (cand.degree() != k) return false;
        work_counters().exact_checks++;
        if (!divides_exactly(cand, rem_cof)) return false;
        // Retire the matched numeric roots before handing the factor back.
        for (size_t ri = 0; ri < reps.size(); ++ri) {
            auto& pool = remaining[ri];
            for (int idx : chosen_[ri])
                pool.erase(std::remove(pool.begin(), pool.end(), idx), pool.end());
        }
        out = std::move(cand);
        return true;
    }
};

std::vector<NfPoly> factor_squarefree(const NfPoly& h, const FieldPtr& L,
                                      const PrecisionPolicy& policy) {
    if (h.degree() <= 1) {
        if (h.degree() == 1) return {h};
        return {};
    }
    return with_precision(policy, [&](long bits) {
        auto emb = L->embeddings(bits);
        FactorSearch search;
        search.L = L;
        search.emb = emb.get();
        search.reps = build_rep_candidates(h, *emb, bits);
        search.den_bound = denominator_bound(bits);
        search.im_eps = pow2_mpf(-bits / 4, bits);
        search.work_cap = policy.work_cap;
        return search.run(h);
    });
}

}  // namespace

std::vector<NfElem> roots_in_field(const NfPoly& g, const PrecisionPolicy& policy) {
    if (g.is_zero()) throw std::invalid_argument("roots_in_field: zero polynomial");
    if (g.degree() == 0) return {};
    FieldPtr L = g.leading().field();
    NfPoly sqf = squarefree_part(g);
    if (sqf.degree() == 1) return {linear_root_of(sqf)};

    std::vector<NfElem> roots;
    if (all_coeffs_rational(sqf)) {
        QPoly q = lower_poly(sqf);
        std::vector<QPoly> rational_factors;
        if (q == L->modulus()) {
            // The field modulus is irreducible by construction; skip the
            // factorization (whose degree can exceed the factoring cap).
            rational_factors.push_back(q);
        } else {
            auto fs = factor_over_field(lift_poly(q, NumberField::rationals()), policy,
                                        std::max(12, q.degree()));
            for (const auto& [p_lifted, mult] : fs) rational_factors.push_back(lower_poly(p_lifted));
        }
        for (const QPoly& p : rational_factors) {
            if (p.degree() == 1)
                roots.push_back(linear_root_of(lift_poly(p, L)));
            else {
                auto block = roots_of_rational_irreducible(p, L, policy);
                roots.insert(roots.end(), block.begin(), block.end());
            }
        }
        with_precision(policy, [&](long bits) {
            sort_by_first_embedding(roots, L, bits);
            return 0;
        });
    } else {
        roots = roots_general(sqf, L, policy);
    }
    return roots;
}

std::vector<NfElem> roots_in_field(const QPoly& g, const FieldPtr& L,
                                   const PrecisionPolicy& policy) {
    return roots_in_field(lift_poly(g, L), policy);
}

std::vector<std::pair<NfPoly, int>> factor_over_field(const NfPoly& g,
                                                      const PrecisionPolicy& policy,
                                                      int degree_cap) {
    if (g.is_zero()) throw std::invalid_argument("factor_over_field: zero polynomial");
    if (g.degree() > degree_cap)
        throw CapacityError("factor_over_field: degree " + std::to_string(g.degree()) +
                            " exceeds cap " + std::to_string(degree_cap));
    if (g.degree() == 0) return {};
    FieldPtr L = g.leading().field();
    NfPoly h = squarefree_part(g);
    std::vector<NfPoly> factors = factor_squarefree(h, L, policy);

    NfPoly rem = g.monic();
    std::vector<std::pair<NfPoly, int>> out;
    for (const NfPoly& f : factors) {
        int e = 0;
        for (;;) {
            auto [q, r] = poly_divrem(rem, f);
            if (!r.is_zero()) break;
            rem = std::move(q);
            ++e;
        }
        if (e == 0)
            throw InvariantViolation("factor_over_field: factor of squarefree part misses input");
        out.emplace_back(f, e);
    }
    if (rem.degree() != 0)
        throw InvariantViolation("factor_over_field: factors do not exhaust the input");
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return factor_order_less(a.first, b.first); });
    return out;
}

bool is_irreducible(const NfPoly& g, const PrecisionPolicy& policy) {
    if (g.degree() < 1) return false;
    auto f = factor_over_field(g, policy, std::max(12, g.degree()));
    return f.size() == 1 && f[0].second == 1;
}

}  // namespace galois
