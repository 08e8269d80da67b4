#pragma once

#include <optional>
#include <string>
#include <vector>

namespace galois {

// Arithmetic for F_{p^n} with elements encoded as integers 0..p^n-1:
// the base-p digits of a code are the coefficients of the residue
// polynomial, least-significant digit first. Everything here is table
// and loop driven so that exhaustive checks stay trivial; none of it
// shares logic with the number-field side, which lets each act as an
// oracle for the other.
struct Fq {
    int p = 0;
    int n = 0;
    int q = 0;                 // p^n
    std::vector<int> modulus;  // low n coefficients in [0, p); leading 1 implicit
    int generator = 0;         // certified generator of the multiplicative group
    std::vector<int> mul_table;  // q*q products for mid-size fields, else empty

    bool operator==(const Fq& o) const { return p == o.p && n == o.n && modulus == o.modulus; }
};

bool is_prime(int m);
// Writes p and n when m = p^n with p prime, n >= 1.
bool is_prime_power(int m, int& p_out, int& n_out);

// Builds F_{p^n} with the first irreducible modulus in increasing code
// order (the candidate x^n + c is scanned by the integer encoding of c),
// and a multiplicative generator certified by checking its order against
// the prime factorization of p^n - 1.
Fq build_fq(int p, int n, int cap = 4096);

int fq_add(const Fq& f, int a, int b);
int fq_sub(const Fq& f, int a, int b);
int fq_mul(const Fq& f, int a, int b);
int fq_pow(const Fq& f, int a, long e);
int fq_inverse(const Fq& f, int a);

// The n maps x -> x^(p^k) for k = 0..n-1, each as a full value table,
// exhaustively verified to be pairwise distinct field automorphisms.
std::vector<std::vector<int>> frobenius_group(const Fq& f);

struct FqSubfield {
    int d = 0;                 // degree over F_p; divides n
    std::vector<int> members;  // sorted element codes, size p^d
};

// Fixed set of Frobenius^d, verified to be closed under the field
// operations and of size p^gcd(d, n).
FqSubfield fixed_subfield(const Fq& f, int d);

struct FqCorrespondenceReport {
    int subgroup_count = 0;  // = number of divisors of n
    bool pass = false;
    std::string detail;
};

// Exhaustive instance of the subgroup/subfield correspondence for the
// cyclic group generated by Frobenius: one subgroup per divisor of n,
// mutual inverseness of the two maps, inclusion reversal, and the
// degree/index formula, each checked by complete enumeration.
FqCorrespondenceReport verify_correspondence_fq(const Fq& f);

// True when the union of all proper subfields misses at least one
// element, checked by exhaustive membership. Also reports the union's
// size for callers that want the count.
bool union_check_subfields(const Fq& f, int* union_size = nullptr);

// Minimum number of proper subspaces of F_q^dim whose union is the whole
// space, by exhaustive search over covers; empty when no cover exists
// (dim <= 1, where the only proper subspace is the origin).
std::optional<int> union_check_subspaces(int q, int dim, int cap = 4096);

}  // namespace galois
