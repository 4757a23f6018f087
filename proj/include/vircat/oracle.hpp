#pragma once

#include <map>
#include <string>
#include <vector>

#include "vircat/fusion.hpp"
#include "vircat/labels.hpp"

namespace vircat {

/// Formal integer combination of labels; appears only as an
/// intermediate in Krull-Schmidt subtraction.
struct VirtualDecomp {
    int p = 0;
    std::map<ModuleLabel, long> entries;

    VirtualDecomp() = default;
    explicit VirtualDecomp(int p_) : p(p_) {}
    explicit VirtualDecomp(const Decomp& d) : p(d.p), entries(d.entries) {}

    void add(const ModuleLabel& a, long mult);
    void add(const VirtualDecomp& d, long mult = 1);
    void sub(const VirtualDecomp& d) { add(d, -1); }
    bool nonnegative() const;
    /// Throws a verification_error when a negative multiplicity survives.
    Decomp to_decomp() const;
};

/// Re-derives every tensor product from the generator data alone:
/// the printed products of L_{r',1} and L_{1,2} with simples and
/// projective covers, bilinearity, the splittings
///   L_{r,s} = L_{r,1} x L_{1,s},   P_{r,s} = L_{r,1} x P_{1,s},
///   P_{1,s} x X = 2 (L_{1,s} x X) + (L_{2,p-s} x X),
/// and the Krull-Schmidt recursion
///   L_{1,s+1} x X = L_{1,2} x (L_{1,s} x X) - L_{1,s-1} x X.
/// Memoizes per instance; use one instance per thread.
class FusionOracle {
public:
    explicit FusionOracle(int p);

    int p() const { return p_; }

    /// Tabulated base products; the first argument must be some
    /// L_{r',1} or L_{1,2}.
    Decomp generator_tensor(const ModuleLabel& a, const ModuleLabel& b) const;

    Decomp recursive_tensor(const ModuleLabel& a, const ModuleLabel& b);

private:
    Decomp l12_times(const ModuleLabel& x) const;
    Decomp lr1_times(int r, const ModuleLabel& x) const;
    Decomp lr1_times(int r, const Decomp& d) const;
    const Decomp& l1s_times(int s, const ModuleLabel& x);

    int p_;
    std::map<std::pair<int, ModuleLabel>, Decomp> l1s_cache_;
};

/// [|r-r'|+1, |r-r'|+3, ..., r+r'-1]
std::vector<int> sl2_fusion(int r, int rp);

/// [|s-s'|+1, ..., min(s+s'-1, 2p-1-s-s')] in steps of 2.
std::vector<int> verlinde_sl2(int p, int s, int sp);

struct CheckFailure {
    std::string check;
    int p = 0;
    std::string a, b, c;
    std::string detail;

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct CheckReport {
    long checks = 0;
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }
    void merge(const CheckReport& o);
    std::string summary() const;
    /// One JSON object per line, failures only, preceded by a header line.
    std::string to_json_lines() const;
    static CheckReport from_json_lines(const std::string& text);
};

/// Exhaustive commutativity / unit / associativity / oracle-agreement /
/// dimension-multiplicativity sweep over labels with r <= rmax.  The
/// associativity sweep is capped at assoc_rmax (triples grow fast).
CheckReport check_ring_axioms(int p, int rmax, int jobs = 1, int assoc_rmax = 4);

/// All labels (both kinds) with r <= rmax.
std::vector<ModuleLabel> all_labels(int p, int rmax);

}  // namespace vircat
