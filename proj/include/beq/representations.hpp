#pragma once

#include "beq/haar.hpp"
#include "beq/partition.hpp"
#include "beq/rational.hpp"

#include <vector>

namespace beq {

/// A distinguished vector of L^2(S_n): the constant function 1-hat, or
/// P-hat_{ij}(sigma) = delta_{i, sigma(j)}.
struct PermLabel {
    bool is_one = true;
    int i = 0, j = 0;

    static PermLabel one() { return {}; }
    static PermLabel p(int i, int j) { return {false, i, j}; }
};

/// <a, b> in L^2(S_n) with the normalized counting measure, evaluated
/// combinatorially (no n!-dimensional object).
Rat perm_inner(const PermLabel& a, const PermLabel& b, int n);

/// omega(pi_s(word)): the vector state at 1-hat of the rank-1 projection
/// chain Q(1) Q(P_{i1 j1}) ... Q(1). O(word length), exact.
Rat chain_state_value(const GeneratorWord& w);

/// All of S_n in lexicographic order (for explicit relation checks only).
std::vector<std::vector<int>> enumerate_permutations(int n);

/// Concrete vectors in Q^{n!} and their normalized inner product.
std::vector<Rat> perm_vector(const PermLabel& label, int n);
Rat perm_vector_inner(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// The three rank-1 projection relations satisfied by Q(P-hat_{ij}), Q(1-hat):
/// same-row and same-column products collapse with a Kronecker delta, and
/// Q(P_{ij}) Q(1) = |P_{ij}><1|. Checked as operator identities on a
/// spanning set of Q^{n!}.
bool verify_liu_relations(int n);

/// Generator relations in the representation for category x: for every
/// pi in I_x(k) and all opposite multi-indices,
///   sum over {i : pi <= ker i} of u_{i1 j1}...u_{ik jk} p = delta(pi <= ker j) p
/// and the transposed family. Verified by applying both sides to the
/// generating vector of p.
bool verify_semigroup_relations(CategoryId x, int n, int k);

/// Kernel-class relations: sum over {r : inf ker r = pi} of u_{r j} p equals
/// delta(pi, inf ker j) p (and the column version). For x in {o, h} the
/// opposite index runs over multi-indices above pair^(k/2) only.
bool verify_kernel_class_relations(CategoryId x, int n, int k);

/// omega_x(pi_x(p u_{ij} p)) for x in {o, h}; 0 for odd length.
Rat omega_value(CategoryId x, const MultiIndex& i, const MultiIndex& j, int n);

} // namespace beq
