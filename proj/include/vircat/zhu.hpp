#pragma once

#include <utility>
#include <vector>

#include "vircat/poly.hpp"
#include "vircat/verma.hpp"

namespace vircat {

/// Class of a singular vector in the Zhu bimodule A(V_{r,s}) = C[x,y],
/// where x acts as [omega] on the left and y on the right.
struct BimodPoly {
    std::pair<int, int> generator;  // (r,s) of the generating module
    Poly2 f;
    Rat hw;  // h_{r,s}
};

/// L_0 spectrum on the top level of a fusion product, as exact roots
/// with multiplicity.
struct Spectrum {
    std::vector<std::pair<Rat, int>> roots;
    std::pair<int, int> generator;
    std::pair<int, int> target;

    int total_multiplicity() const {
        int n = 0;
        for (const auto& [r, m] : roots) n += m;
        return n;
    }
    bool has_root(const Rat& r, int mult) const;
};

/// Rewrites a homogeneous singular vector into C[x,y], innermost mode
/// first, tracking intermediate weights:
///   [L_{-1} w] -> (x - y - wt w) [w]
///   [L_{-2} w] -> (2y - x + wt w) [w]
///   [L_{-n} w] -> (-1)^n ((n-1)(2y - x + wt w) + (n-2)(x - y - wt w)) [w]
Poly2 reduce_singular(const VermaElement& sv, const Rat& hw);

/// Builds the singular vector of V_{gr,gs} at level gr*gs and reduces it;
/// the kernel there must be exactly one-dimensional.
BimodPoly bimod_poly(const CentralData& cd, int gr, int gs);

/// Substitutes y = h_{r,s} into bp.f and factors the result over the
/// candidate weights h_{r',s'} with |r'-r|, |s'-s| <= deg.  Throws a
/// verification_error if any factor remains unexplained.
Spectrum top_level_spectrum(const BimodPoly& bp, const CentralData& cd, int r, int s);

/// True iff h_{r,s-1} = h_{r,s+1}, i.e. the top level of the fusion
/// product with the (1,2) module carries a Jordan block.
bool logarithmic_flag(const CentralData& cd, int r, int s);

}  // namespace vircat
