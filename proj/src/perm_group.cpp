#include "galois/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "galois/errors.hpp"

namespace galois {

bool is_valid_perm(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

Permutation compose_perms(const Permutation& outer, const Permutation& inner) {
    if (outer.size() != inner.size())
        throw std::invalid_argument("compose_perms: degree mismatch");
    Permutation r(outer.size());
    for (size_t i = 0; i < inner.size(); ++i)
        r[i] = outer[static_cast<size_t>(inner[i])];
    return r;
}

Permutation invert_perm(const Permutation& p) {
    Permutation r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
    if (elements.empty()) throw std::invalid_argument("PermGroup: no elements");
    PermGroup g;
    g.degree_ = degree;
    g.elements_ = std::move(elements);
    const int n = static_cast<int>(g.elements_.size());
    for (int i = 0; i < n; ++i) {
        const Permutation& p = g.elements_[static_cast<size_t>(i)];
        if (static_cast<int>(p.size()) != degree || !is_valid_perm(p))
            throw std::invalid_argument("PermGroup: invalid permutation");
        if (!g.index_.emplace(p, i).second)
            throw std::invalid_argument("PermGroup: duplicate element");
    }
    Permutation id(static_cast<size_t>(degree));
    std::iota(id.begin(), id.end(), 0);
    auto it = g.index_.find(id);
    if (it == g.index_.end()) throw std::invalid_argument("PermGroup: identity missing");
    g.id_index_ = it->second;

    g.cayley_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Permutation c = compose_perms(g.elements_[static_cast<size_t>(i)],
                                          g.elements_[static_cast<size_t>(j)]);
            auto cit = g.index_.find(c);
            if (cit == g.index_.end())
                throw std::invalid_argument("PermGroup: not closed under composition");
            g.cayley_[static_cast<size_t>(i)][static_cast<size_t>(j)] = cit->second;
        }
    g.inverse_.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        auto iit = g.index_.find(invert_perm(g.elements_[static_cast<size_t>(i)]));
        if (iit == g.index_.end()) throw std::invalid_argument("PermGroup: inverse missing");
        g.inverse_[static_cast<size_t>(i)] = iit->second;
    }
    return g;
}

int PermGroup::index_of(const Permutation& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

bool Subgroup::contains(int i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

bool Subgroup::contains_all(const Subgroup& other) const {
    return std::includes(members.begin(), members.end(), other.members.begin(),
                         other.members.end());
}

Subgroup closure_subgroup(const PermGroup& g, const std::vector<int>& generators) {
    std::set<int> have{g.identity_index()};
    std::vector<int> frontier(have.begin(), have.end());
    for (int gen : generators)
        if (have.insert(gen).second) frontier.push_back(gen);
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int b : have) {
                for (int c : {g.compose(a, b), g.compose(b, a)})
                    if (have.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    Subgroup h;
    h.members.assign(have.begin(), have.end());
    return h;
}

std::vector<Subgroup> all_subgroups(const PermGroup& g, int order_cap) {
    if (g.order() > order_cap)
        throw CapacityError("all_subgroups: group order " + std::to_string(g.order()) +
                            " exceeds cap " + std::to_string(order_cap));
    std::set<std::vector<int>> found;
    found.insert({g.identity_index()});
    for (int i = 0; i < g.order(); ++i) found.insert(closure_subgroup(g, {i}).members);

    // Saturate under pairwise joins; every subgroup is a join of cyclic
    // ones, so the fixed point is the full lattice.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(found.begin(), found.end());
        for (size_t i = 0; i < current.size(); ++i)
            for (size_t j = i + 1; j < current.size(); ++j) {
                std::vector<int> gens = current[i];
                gens.insert(gens.end(), current[j].begin(), current[j].end());
                auto joined = closure_subgroup(g, gens).members;
                if (found.insert(joined).second) grew = true;
            }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& m : found) {
        if (g.order() % static_cast<int>(m.size()) != 0)
            throw InvariantViolation("all_subgroups: subgroup order fails divisibility");
        out.push_back(Subgroup{m});
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members < b.members;
    });
    return out;
}

bool is_normal_subgroup(const PermGroup& g, const Subgroup& h) {
    for (int a = 0; a < g.order(); ++a) {
        int ai = g.inverse(a);
        for (int m : h.members)
            if (!h.contains(g.compose(g.compose(a, m), ai))) return false;
    }
    return true;
}

CosetDecomposition left_cosets(const PermGroup& g, const Subgroup& h) {
    CosetDecomposition d;
    d.coset_of.assign(static_cast<size_t>(g.order()), -1);
    for (int a = 0; a < g.order(); ++a) {
        if (d.coset_of[static_cast<size_t>(a)] >= 0) continue;
        std::vector<int> coset;
        for (int m : h.members) coset.push_back(g.compose(a, m));
        std::sort(coset.begin(), coset.end());
        int pos = static_cast<int>(d.cosets.size());
        for (int x : coset) {
            if (d.coset_of[static_cast<size_t>(x)] >= 0)
                throw InvariantViolation("left_cosets: cosets are not disjoint");
            d.coset_of[static_cast<size_t>(x)] = pos;
        }
        d.cosets.push_back(std::move(coset));
    }
    d.index = static_cast<int>(d.cosets.size());
    if (d.index * h.order() != g.order())
        throw InvariantViolation("left_cosets: order does not factor");
    return d;
}

QuotientGroup quotient_group(const PermGroup& g, const Subgroup& h) {
    if (!is_normal_subgroup(g, h))
        throw std::invalid_argument("quotient_group: subgroup is not normal");
    QuotientGroup q;
    q.cosets = left_cosets(g, h);
    const int k = q.cosets.index;

    std::map<Permutation, int> quotient_index;
    std::vector<Permutation> quotient_elems;
    q.projection.assign(static_cast<size_t>(g.order()), -1);
    for (int a = 0; a < g.order(); ++a) {
        Permutation act(static_cast<size_t>(k));
        for (int c = 0; c < k; ++c) {
            int rep = q.cosets.cosets[static_cast<size_t>(c)][0];
            act[static_cast<size_t>(c)] = q.cosets.coset_of[static_cast<size_t>(g.compose(a, rep))];
        }
        auto [it, inserted] = quotient_index.emplace(act, static_cast<int>(quotient_elems.size()));
        if (inserted) quotient_elems.push_back(act);
        q.projection[static_cast<size_t>(a)] = it->second;
    }
    if (static_cast<int>(quotient_elems.size()) != k)
        throw InvariantViolation("quotient_group: action order does not match index");
    q.group = PermGroup::from_elements(k, std::move(quotient_elems));
    return q;
}

HomCheckResult check_epimorphism(const PermGroup& domain, const PermGroup& codomain,
                                 const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != domain.order())
        throw std::invalid_argument("check_epimorphism: map size mismatch");
    HomCheckResult r;
    r.is_hom = true;
    for (int i = 0; r.is_hom && i < domain.order(); ++i)
        for (int j = 0; j < domain.order(); ++j) {
            if (map[static_cast<size_t>(domain.compose(i, j))] !=
                codomain.compose(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)])) {
                r.is_hom = false;
                break;
            }
        }
    std::set<int> image;
    for (int i = 0; i < domain.order(); ++i) {
        image.insert(map[static_cast<size_t>(i)]);
        if (map[static_cast<size_t>(i)] == codomain.identity_index()) r.kernel.push_back(i);
    }
    r.surjective = static_cast<int>(image.size()) == codomain.order();
    return r;
}

}  // namespace galois
