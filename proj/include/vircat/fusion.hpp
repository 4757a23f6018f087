#pragma once

#include <vector>

#include "vircat/cyclotomic.hpp"
#include "vircat/labels.hpp"

namespace vircat {

/// Closed-form tensor product of two indecomposables (simple or
/// projective cover) over the same p.  Commutative; any P_{k,p} summand
/// produced by the index sums is normalized to L_{k,p}.
Decomp tensor(const ModuleLabel& a, const ModuleLabel& b);

// Additive extensions.
Decomp tensor(const Decomp& a, const ModuleLabel& b);
Decomp tensor(const Decomp& a, const Decomp& b);

namespace detail {
/// Evaluates the closed forms with the arguments in the given order
/// (a Proj/Simple pair is still dispatched by kind).  Exists so the
/// test suite can verify that the formulas are symmetric instead of
/// relying on the canonical sort in tensor().
Decomp tensor_as_given(const ModuleLabel& a, const ModuleLabel& b);
}  // namespace detail

/// Categorical dimension as an exact element of Z[zeta_{2p}]:
/// dim L_{r,s} = (-1)^{(p+1)(r+1)+s+1} r [s]_q, and projectives get the
/// sum over their composition factors.
CycScalar cat_dim(const ModuleLabel& a);
CycScalar cat_dim(const Decomp& d);

/// Multiset of simple composition factors.
Decomp composition_factors(const ModuleLabel& a);
Decomp composition_factors(const Decomp& d);

/// Socle series layers (socle and head coincide for these self-dual
/// modules; simples have an empty middle layer).
struct LoewyData {
    std::vector<ModuleLabel> socle;
    std::vector<ModuleLabel> middle;
    std::vector<ModuleLabel> head;
};
LoewyData loewy(const ModuleLabel& a);

/// Projectivity in the subcategory where the P_{r,s} are projective
/// covers: all Proj labels, and the simples L_{r,p}.
bool projective_in_oc0(const ModuleLabel& a);

/// Kills the negligible objects: every projective cover and every
/// simple L_{r,p}.
Decomp semisimplify(const Decomp& d);

/// Tensor product of simples in the semisimplification; requires
/// s, s' <= p-1.
Decomp ss_tensor(const ModuleLabel& a, const ModuleLabel& b);

/// h_{r+2(n-k+1),s} - h_{r,s} - h_{2n+1,1}, which must be an integer
/// for the monodromy with L_{2n+1,1} to be trivial.  Throws a
/// verification_error on a non-integer value.
long monodromy_exponent_check(int p, int r, int s, int n, int k);

}  // namespace vircat
