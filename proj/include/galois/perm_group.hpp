#pragma once

#include <map>
#include <vector>

namespace galois {

// A permutation on points 0..n-1 as its image list.
using Permutation = std::vector<int>;

bool is_valid_perm(const Permutation& p);
Permutation compose_perms(const Permutation& outer, const Permutation& inner);
Permutation invert_perm(const Permutation& p);

// Finite permutation group given by its complete element list.
// Construction verifies closure, identity, and inverses exhaustively and
// precomputes the Cayley table; element order is preserved from the
// caller, so callers control labeling.
class PermGroup {
  public:
    // Empty placeholder; every usable instance comes from from_elements.
    PermGroup() = default;

    static PermGroup from_elements(int degree, std::vector<Permutation> elements);

    int degree() const { return degree_; }
    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(int i) const { return elements_.at(static_cast<size_t>(i)); }

    int identity_index() const { return id_index_; }
    int compose(int i, int j) const { return cayley_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    int inverse(int i) const { return inverse_[static_cast<size_t>(i)]; }
    // -1 when the permutation is not an element.
    int index_of(const Permutation& p) const;

  private:
    int degree_ = 0;
    int id_index_ = -1;
    std::vector<Permutation> elements_;
    std::map<Permutation, int> index_;
    std::vector<std::vector<int>> cayley_;
    std::vector<int> inverse_;
};

// Subgroup as sorted indices into the parent's element list. Equality of
// the index lists is subgroup equality.
struct Subgroup {
    std::vector<int> members;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int i) const;
    bool contains_all(const Subgroup& other) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }
};

Subgroup closure_subgroup(const PermGroup& g, const std::vector<int>& generators);

// Every subgroup, via cyclic subgroups and pairwise-join saturation,
// sorted by order then member list. Throws CapacityError when the group
// order exceeds the cap.
std::vector<Subgroup> all_subgroups(const PermGroup& g, int order_cap = 48);

bool is_normal_subgroup(const PermGroup& g, const Subgroup& h);

struct CosetDecomposition {
    int index = 0;
    // Cosets ordered by their smallest member; members sorted within.
    std::vector<std::vector<int>> cosets;
    // coset_of[element index] = coset position in `cosets`.
    std::vector<int> coset_of;
};

CosetDecomposition left_cosets(const PermGroup& g, const Subgroup& h);

struct QuotientGroup {
    PermGroup group;              // acts on coset positions
    std::vector<int> projection;  // element index -> quotient element index
    CosetDecomposition cosets;
};

// Quotient by a normal subgroup as the permutation action on left cosets.
QuotientGroup quotient_group(const PermGroup& g, const Subgroup& h);

struct HomCheckResult {
    bool is_hom = false;
    bool surjective = false;
    std::vector<int> kernel;  // sorted element indices mapping to identity
};

// Exhaustively checks that `map` (domain element index -> codomain
// element index) respects composition, and reports kernel/surjectivity.
HomCheckResult check_epimorphism(const PermGroup& domain, const PermGroup& codomain,
                                 const std::vector<int>& map);

}  // namespace galois
