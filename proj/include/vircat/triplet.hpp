#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vircat/labels.hpp"
#include "vircat/oracle.hpp"

namespace vircat {

enum class TKind { W, R };

/// Label of an indecomposable module for the triplet algebra W(p):
/// W_{r,s} (simple) or R_{r,s} (projective cover), r in {1,2},
/// 1 <= s <= p.  R_{r,p} normalizes to W_{r,p}.
struct TripletLabel {
    TKind kind;
    int r;
    int s;
    int p;

    TripletLabel(TKind k, int r_, int s_, int p_);
    static TripletLabel w(int r, int s, int p) { return TripletLabel(TKind::W, r, s, p); }
    static TripletLabel rr(int r, int s, int p) { return TripletLabel(TKind::R, r, s, p); }

    /// Parses "W:r,s" or "R:r,s".
    static TripletLabel parse(const std::string& text, int p);
    std::string str() const;
    const char* kind_str() const { return kind == TKind::W ? "W" : "R"; }

    friend bool operator==(const TripletLabel&, const TripletLabel&) = default;
    friend std::strong_ordering operator<=>(const TripletLabel&, const TripletLabel&) = default;
};

struct TripletDecomp {
    int p = 0;
    std::map<TripletLabel, long> entries;

    TripletDecomp() = default;
    explicit TripletDecomp(int p_) : p(p_) {}
    static TripletDecomp of(const TripletLabel& a, long mult = 1) {
        TripletDecomp d(a.p);
        d.add(a, mult);
        return d;
    }

    void add(const TripletLabel& a, long mult);
    void add(const TripletDecomp& d, long mult = 1);
    long mult(const TripletLabel& a) const;
    friend bool operator==(const TripletDecomp& a, const TripletDecomp& b) {
        return a.entries == b.entries;
    }
    std::string str() const;
};

/// Induction to W(p): L_{r,s} -> r W_{rbar,s} and P_{r,s} -> r R_{rbar,s},
/// where rbar in {1,2} has the parity of r.
TripletDecomp induce(const ModuleLabel& a);
TripletDecomp induce(const Decomp& d);

struct TripletProduct {
    TripletDecomp decomp;
    /// True when the value came from induction transport instead of a
    /// tabulated product.
    bool transported = false;
};

/// Tensor product of W(p)-modules.  Products of W_{2,1} and W_{1,2}
/// with anything are tabulated; every other pair is computed by
/// transporting Virasoro products through induction, with an exact
/// divisibility assertion (a non-divisible multiplicity throws a
/// verification_error).
TripletProduct triplet_tensor(const TripletLabel& a, const TripletLabel& b);

/// Restriction to the Virasoro subalgebra, truncated after cutoff+1
/// terms: W_{r,s} -> (2n+r) L_{2n+r,s}, R_{1,s} -> (2n+1) P_{2n+1,s},
/// R_{2,s} -> (2n+2) P_{2n+2,s}.
std::vector<std::pair<ModuleLabel, long>> restrict_module(const TripletLabel& a, int cutoff);

/// Verifies that the multiplicity of L_{2m+rbar,s} in
/// sum_n (2n+1) (L_{2n+1,1} x L_{r,s}) equals r (2m+rbar) for m <= m_max,
/// by direct summation of the sl2-type ranges.
CheckReport multiplicity_identity_check(int p, int r, int s, int m_max);

/// Verifies induce(a x b) = induce(a) x induce(b) over all Virasoro
/// label pairs with r <= cutoff.
CheckReport check_monoidal(int p, int cutoff);

}  // namespace vircat
