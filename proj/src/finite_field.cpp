#include "galois/finite_field.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "galois/errors.hpp"

namespace galois {

namespace {

std::vector<int> decode(const Fq& f, int a) {
    std::vector<int> c(static_cast<size_t>(f.n), 0);
    for (int i = 0; i < f.n && a > 0; ++i) {
        c[static_cast<size_t>(i)] = a % f.p;
        a /= f.p;
    }
    return c;
}

int encode(const Fq& f, const std::vector<int>& c) {
    int a = 0;
    for (int i = f.n - 1; i >= 0; --i) a = a * f.p + c[static_cast<size_t>(i)];
    return a;
}

// Multiplies two residue polynomials and reduces by the monic modulus.
int mul_reduce(const Fq& f, int a, int b) {
    std::vector<int> ca = decode(f, a);
    std::vector<int> cb = decode(f, b);
    std::vector<int> prod(static_cast<size_t>(2 * f.n - 1), 0);
    for (int i = 0; i < f.n; ++i) {
        if (ca[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < f.n; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] +
                 ca[static_cast<size_t>(i)] * cb[static_cast<size_t>(j)]) %
                f.p;
    }
    for (int d = 2 * f.n - 2; d >= f.n; --d) {
        int lead = prod[static_cast<size_t>(d)];
        if (lead == 0) continue;
        prod[static_cast<size_t>(d)] = 0;
        for (int i = 0; i < f.n; ++i) {
            int& slot = prod[static_cast<size_t>(d - f.n + i)];
            slot = (slot - lead * f.modulus[static_cast<size_t>(i)]) % f.p;
            if (slot < 0) slot += f.p;
        }
    }
    prod.resize(static_cast<size_t>(f.n));
    return encode(f, prod);
}

// Plain polynomial arithmetic over F_p on coefficient vectors, used only
// while hunting for an irreducible modulus.
using PPoly = std::vector<int>;  // lowest degree first, no trailing zeros

PPoly ptrim(PPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

PPoly pmod(PPoly a, const PPoly& m, int p) {
    a = ptrim(std::move(a));
    int inv_lead = 1;
    for (int i = 1; i < p; ++i)
        if (i * m.back() % p == 1) inv_lead = i;
    while (a.size() >= m.size()) {
        int c = a.back() * inv_lead % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            int& slot = a[shift + i];
            slot = (slot - c * m[i]) % p;
            if (slot < 0) slot += p;
        }
        a = ptrim(std::move(a));
    }
    return a;
}

bool divides_poly(const PPoly& d, const PPoly& m, int p) { return pmod(m, d, p).empty(); }

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_mod_p(const PPoly& m, int p) {
    int deg = static_cast<int>(m.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            PPoly cand(static_cast<size_t>(d + 1), 0);
            long c = code;
            for (int i = 0; i < d; ++i) {
                cand[static_cast<size_t>(i)] = static_cast<int>(c % p);
                c /= p;
            }
            cand[static_cast<size_t>(d)] = 1;
            if (divides_poly(cand, m, p)) return false;
        }
    }
    return true;
}

std::vector<int> prime_factors(int m) {
    std::vector<int> out;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) out.push_back(m);
    return out;
}

}  // namespace

bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

bool is_prime_power(int m, int& p_out, int& n_out) {
    if (m < 2) return false;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int n = 0;
        int rest = m;
        while (rest % p == 0) {
            rest /= p;
            ++n;
        }
        if (rest != 1) return false;
        p_out = p;
        n_out = n;
        return true;
    }
    p_out = m;
    n_out = 1;
    return true;
}

Fq build_fq(int p, int n, int cap) {
    if (!is_prime(p)) throw std::invalid_argument("build_fq: p is not prime");
    if (n < 1) throw std::invalid_argument("build_fq: n must be positive");
    long q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > cap) throw CapacityError("build_fq: p^n exceeds cap " + std::to_string(cap));
    }

    Fq f;
    f.p = p;
    f.n = n;
    f.q = static_cast<int>(q);

    for (int code = 0;; ++code) {
        if (code >= f.q) throw InvariantViolation("build_fq: no irreducible modulus found");
        PPoly cand(static_cast<size_t>(n + 1), 0);
        int c = code;
        for (int i = 0; i < n; ++i) {
            cand[static_cast<size_t>(i)] = c % p;
            c /= p;
        }
        cand[static_cast<size_t>(n)] = 1;
        if (!irreducible_mod_p(cand, p)) continue;
        f.modulus.assign(cand.begin(), cand.end() - 1);
        break;
    }

    // Exhaustive checks elsewhere loop over element pairs; a one-time
    // product table keeps those loops at array-lookup speed without
    // blowing up memory for the largest fields the cap admits.
    if (n >= 2 && f.q <= 2048) {
        f.mul_table.resize(static_cast<size_t>(f.q) * static_cast<size_t>(f.q));
        for (int a = 0; a < f.q; ++a)
            for (int b = 0; b <= a; ++b) {
                int v = mul_reduce(f, a, b);
                f.mul_table[static_cast<size_t>(a) * static_cast<size_t>(f.q) +
                            static_cast<size_t>(b)] = v;
                f.mul_table[static_cast<size_t>(b) * static_cast<size_t>(f.q) +
                            static_cast<size_t>(a)] = v;
            }
    }

    auto factors = prime_factors(f.q - 1);
    for (int g = 1; g < f.q; ++g) {
        if (fq_pow(f, g, f.q - 1) != 1) continue;
        bool full_order = true;
        for (int ell : factors)
            if (fq_pow(f, g, (f.q - 1) / ell) == 1) {
                full_order = false;
                break;
            }
        if (full_order) {
            f.generator = g;
            return f;
        }
    }
    throw InvariantViolation("build_fq: multiplicative group has no generator");
}

int fq_add(const Fq& f, int a, int b) {
    int out = 0;
    int place = 1;
    for (int i = 0; i < f.n; ++i) {
        out += (a % f.p + b % f.p) % f.p * place;
        a /= f.p;
        b /= f.p;
        place *= f.p;
    }
    return out;
}

int fq_sub(const Fq& f, int a, int b) {
    int out = 0;
    int place = 1;
    for (int i = 0; i < f.n; ++i) {
        out += ((a % f.p - b % f.p) % f.p + f.p) % f.p * place;
        a /= f.p;
        b /= f.p;
        place *= f.p;
    }
    return out;
}

int fq_mul(const Fq& f, int a, int b) {
    if (f.n == 1) return a * b % f.p;
    if (!f.mul_table.empty())
        return f.mul_table[static_cast<size_t>(a) * static_cast<size_t>(f.q) +
                           static_cast<size_t>(b)];
    return mul_reduce(f, a, b);
}

int fq_pow(const Fq& f, int a, long e) {
    int acc = 1;
    int base = a;
    while (e > 0) {
        if (e & 1) acc = fq_mul(f, acc, base);
        base = fq_mul(f, base, base);
        e >>= 1;
    }
    return acc;
}

int fq_inverse(const Fq& f, int a) {
    if (a == 0) throw std::invalid_argument("fq_inverse: zero");
    return fq_pow(f, a, f.q - 2);
}

std::vector<std::vector<int>> frobenius_group(const Fq& f) {
    std::vector<std::vector<int>> maps;
    for (int k = 0; k < f.n; ++k) {
        long e = 1;
        for (int i = 0; i < k; ++i) e *= f.p;
        std::vector<int> table(static_cast<size_t>(f.q));
        for (int x = 0; x < f.q; ++x) table[static_cast<size_t>(x)] = fq_pow(f, x, e);
        maps.push_back(std::move(table));
    }

    for (size_t i = 0; i < maps.size(); ++i)
        for (size_t j = i + 1; j < maps.size(); ++j)
            if (maps[i] == maps[j])
                throw InvariantViolation("frobenius_group: repeated power map");

    for (const auto& t : maps) {
        if (t[0] != 0 || t[1] != 1)
            throw InvariantViolation("frobenius_group: map moves 0 or 1");
        for (int a = 0; a < f.q; ++a)
            for (int b = 0; b <= a; ++b) {
                if (t[static_cast<size_t>(fq_add(f, a, b))] !=
                    fq_add(f, t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]))
                    throw InvariantViolation("frobenius_group: map is not additive");
                if (t[static_cast<size_t>(fq_mul(f, a, b))] !=
                    fq_mul(f, t[static_cast<size_t>(a)], t[static_cast<size_t>(b)]))
                    throw InvariantViolation("frobenius_group: map is not multiplicative");
            }
    }
    return maps;
}

FqSubfield fixed_subfield(const Fq& f, int d) {
    long e = 1;
    for (int i = 0; i < d; ++i) e *= f.p;

    FqSubfield s;
    s.d = d;
    for (int x = 0; x < f.q; ++x)
        if (fq_pow(f, x, e) == x) s.members.push_back(x);

    int g = std::gcd(d, f.n);
    long expect = 1;
    for (int i = 0; i < g; ++i) expect *= f.p;
    if (static_cast<long>(s.members.size()) != expect)
        throw InvariantViolation("fixed_subfield: wrong fixed-set size");

    std::vector<char> mem(static_cast<size_t>(f.q), 0);
    for (int x : s.members) mem[static_cast<size_t>(x)] = 1;
    if (!mem[0] || !mem[1]) throw InvariantViolation("fixed_subfield: missing 0 or 1");
    for (int a : s.members)
        for (int b : s.members) {
            if (!mem[static_cast<size_t>(fq_add(f, a, b))] ||
                !mem[static_cast<size_t>(fq_mul(f, a, b))])
                throw InvariantViolation("fixed_subfield: not closed under field operations");
        }
    for (int a : s.members)
        if (a != 0 && !mem[static_cast<size_t>(fq_inverse(f, a))])
            throw InvariantViolation("fixed_subfield: not closed under inversion");
    return s;
}

FqCorrespondenceReport verify_correspondence_fq(const Fq& f) {
    FqCorrespondenceReport rep;
    auto frob = frobenius_group(f);

    std::vector<int> divisors;
    for (int d = 1; d <= f.n; ++d)
        if (f.n % d == 0) divisors.push_back(d);
    rep.subgroup_count = static_cast<int>(divisors.size());

    // Subgroup for divisor d: generated by Frobenius^d, order n/d. Its
    // member exponents are the multiples of d below n.
    std::vector<std::vector<int>> subgroup_exps;
    std::vector<FqSubfield> fields;
    for (int d : divisors) {
        std::vector<int> exps;
        for (int e = 0; e < f.n; e += d) exps.push_back(e);
        subgroup_exps.push_back(exps);
        fields.push_back(fixed_subfield(f, d));
    }

    // Size law for every power, not just divisors.
    for (int d = 1; d < std::max(f.n, 1); ++d) {
        long expect = 1;
        for (int i = 0; i < std::gcd(d, f.n); ++i) expect *= f.p;
        int count = 0;
        long e = 1;
        for (int i = 0; i < d; ++i) e *= f.p;
        for (int x = 0; x < f.q; ++x)
            if (fq_pow(f, x, e) == x) ++count;
        if (count != expect) {
            rep.pass = false;
            rep.detail = "fixed-set size law fails at power " + std::to_string(d);
            return rep;
        }
    }

    for (size_t i = 0; i < divisors.size(); ++i) {
        // fix -> stab: the exponents whose power map fixes the subfield
        // pointwise must be exactly the subgroup.
        std::vector<int> stab;
        for (int e = 0; e < f.n; ++e) {
            bool fixes = true;
            for (int x : fields[i].members)
                if (frob[static_cast<size_t>(e)][static_cast<size_t>(x)] != x) {
                    fixes = false;
                    break;
                }
            if (fixes) stab.push_back(e);
        }
        if (stab != subgroup_exps[i]) {
            rep.pass = false;
            rep.detail = "stabilizer of fixed field differs at divisor " +
                         std::to_string(divisors[i]);
            return rep;
        }
        // Degree/index: [fixed : F_p] = d = index of the subgroup.
        long size = 1;
        for (int k = 0; k < divisors[i]; ++k) size *= f.p;
        if (static_cast<long>(fields[i].members.size()) != size) {
            rep.pass = false;
            rep.detail = "degree/index mismatch at divisor " + std::to_string(divisors[i]);
            return rep;
        }
    }

    // Inclusion reversal across all ordered pairs of divisors.
    for (size_t i = 0; i < divisors.size(); ++i)
        for (size_t j = 0; j < divisors.size(); ++j) {
            bool sub_incl = std::includes(subgroup_exps[j].begin(), subgroup_exps[j].end(),
                                          subgroup_exps[i].begin(), subgroup_exps[i].end());
            bool field_incl = std::includes(fields[i].members.begin(), fields[i].members.end(),
                                            fields[j].members.begin(), fields[j].members.end());
            if (sub_incl != field_incl) {
                rep.pass = false;
                rep.detail = "inclusion reversal fails for divisors " +
                             std::to_string(divisors[i]) + "," + std::to_string(divisors[j]);
                return rep;
            }
        }

    // Distinct subgroups must give distinct subfields.
    for (size_t i = 0; i < fields.size(); ++i)
        for (size_t j = i + 1; j < fields.size(); ++j)
            if (fields[i].members == fields[j].members) {
                rep.pass = false;
                rep.detail = "two subgroups share a fixed field";
                return rep;
            }

    rep.pass = true;
    rep.detail = std::to_string(divisors.size()) + " subgroups matched to " +
                 std::to_string(fields.size()) + " subfields";
    return rep;
}

bool union_check_subfields(const Fq& f, int* union_size) {
    std::vector<char> in_union(static_cast<size_t>(f.q), 0);
    for (int d = 1; d < f.n; ++d) {
        if (f.n % d != 0) continue;
        for (int x : fixed_subfield(f, d).members) in_union[static_cast<size_t>(x)] = 1;
    }
    int covered = 0;
    for (char c : in_union) covered += c;
    if (union_size) *union_size = covered;
    return covered < f.q;
}

namespace {

// All proper subspaces of F_q^dim, each as a sorted list of vector codes
// (base-q encoding of coordinate tuples). Built by closing generator
// sets of fewer than dim vectors under span.
std::vector<std::vector<int>> proper_subspaces(const Fq& fq, int dim, long space) {
    auto decode_vec = [&](int code) {
        std::vector<int> v(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            v[static_cast<size_t>(i)] = code % fq.q;
            code /= fq.q;
        }
        return v;
    };
    auto add_vec = [&](int a, int b) {
        auto va = decode_vec(a);
        auto vb = decode_vec(b);
        int out = 0;
        for (int i = dim - 1; i >= 0; --i)
            out = out * fq.q + fq_add(fq, va[static_cast<size_t>(i)], vb[static_cast<size_t>(i)]);
        return out;
    };
    auto scale_vec = [&](int s, int a) {
        auto va = decode_vec(a);
        int out = 0;
        for (int i = dim - 1; i >= 0; --i)
            out = out * fq.q + fq_mul(fq, s, va[static_cast<size_t>(i)]);
        return out;
    };

    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> out;
    std::vector<int> zero_only{0};
    seen.insert(zero_only);
    out.push_back(zero_only);

    // Grow spans one generator at a time; every proper subspace has a
    // generating set of size < dim, so this reaches all of them.
    std::vector<std::vector<int>> frontier{zero_only};
    for (int round = 1; round < dim; ++round) {
        std::vector<std::vector<int>> next;
        for (const auto& base : frontier)
            for (int g = 1; g < space; ++g) {
                std::set<int> span(base.begin(), base.end());
                std::vector<int> todo{g};
                while (!todo.empty()) {
                    int v = todo.back();
                    todo.pop_back();
                    for (int s = 0; s < fq.q; ++s) {
                        int sv = scale_vec(s, v);
                        for (int b : std::vector<int>(span.begin(), span.end())) {
                            int w = add_vec(sv, b);
                            if (!span.count(w)) {
                                span.insert(w);
                                todo.push_back(w);
                            }
                        }
                    }
                }
                if (static_cast<long>(span.size()) >= space) continue;
                std::vector<int> members(span.begin(), span.end());
                if (seen.insert(members).second) {
                    next.push_back(members);
                    out.push_back(members);
                }
            }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

std::optional<int> union_check_subspaces(int q, int dim, int cap) {
    int p = 0;
    int n = 0;
    if (!is_prime_power(q, p, n)) throw std::invalid_argument("union_check_subspaces: q not a prime power");
    if (dim < 1) throw std::invalid_argument("union_check_subspaces: dim must be positive");
    long space = 1;
    for (int i = 0; i < dim; ++i) {
        space *= q;
        if (space > cap)
            throw CapacityError("union_check_subspaces: q^dim exceeds cap " + std::to_string(cap));
    }
    if (dim == 1) return std::nullopt;

    Fq fq = build_fq(p, n, cap);
    auto subs = proper_subspaces(fq, dim, space);

    // Exhaustive minimum cover over subsets, smallest size first.
    int m = static_cast<int>(subs.size());
    std::vector<std::vector<char>> masks;
    for (const auto& s : subs) {
        std::vector<char> mask(static_cast<size_t>(space), 0);
        for (int v : s) mask[static_cast<size_t>(v)] = 1;
        masks.push_back(std::move(mask));
    }
    for (int k = 1; k <= m; ++k) {
        std::vector<int> pick(static_cast<size_t>(k));
        std::function<bool(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                std::vector<char> covered(static_cast<size_t>(space), 0);
                for (int idx : pick)
                    for (long v = 0; v < space; ++v)
                        covered[static_cast<size_t>(v)] =
                            covered[static_cast<size_t>(v)] | masks[static_cast<size_t>(idx)][static_cast<size_t>(v)];
                for (long v = 0; v < space; ++v)
                    if (!covered[static_cast<size_t>(v)]) return false;
                return true;
            }
            for (int i = start; i < m; ++i) {
                pick[static_cast<size_t>(depth)] = i;
                if (rec(i + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return std::nullopt;
}

}  // namespace galois
