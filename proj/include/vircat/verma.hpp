#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vircat/linalg.hpp"
#include "vircat/partition.hpp"
#include "vircat/rational.hpp"

namespace vircat {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Central charge c = 13 - 6t - 6/t.  p is the integer value of t when
/// t is an integer >= 2, and 0 otherwise.
struct CentralData {
    int p = 0;
    Rat t;
    Rat c;

    static CentralData from_p(int p);
    static CentralData from_t(const Rat& t);
};

/// Kac conformal weight h_{r,s} = ((tr-s)^2 - (t-1)^2) / (4t).
Rat h_weight(const CentralData& cd, int r, int s);

/// Graded vector in the Verma module V(c,h): a finite Rat-linear
/// combination of PBW monomials L_{-lam} |h>.
struct VermaElement {
    Rat h;
    std::map<Partition, Rat> terms;

    VermaElement() = default;
    explicit VermaElement(Rat hw) : h(std::move(hw)) {}

    bool is_zero() const { return terms.empty(); }
    void add_term(const Partition& lam, const Rat& coeff);
    /// Common level of all terms; throws when the element is mixed-grade.
    int level() const;
    Rat coeff(const Partition& lam) const;

    friend bool operator==(const VermaElement& a, const VermaElement& b) {
        return a.h == b.h && a.terms == b.terms;
    }

    /// "c1 * L(-a)L(-b)|h> + ..."
    std::string str() const;
};

/// Virasoro action on V(c,h) by recursive normal ordering, with a cache
/// of reordered monomials.  All arithmetic is exact.
class VermaEngine {
public:
    VermaEngine(CentralData cd, Rat h) : cd_(std::move(cd)), h_(std::move(h)) {}

    const CentralData& central() const { return cd_; }
    const Rat& h() const { return h_; }

    VermaElement act_L(int n, const VermaElement& v) const;

    /// Shapovalov matrix of the given level over partitions in
    /// descending lexicographic order, normalized by <v,v> = 1.
    RatMatrix gram_matrix(int level) const;

    /// Basis of the joint kernel of L_1 and L_2 at the given level
    /// (L_1, L_2 generate all raising operators).  Each vector is
    /// normalized to unit coefficient on L_{-1}^level when that
    /// coefficient is nonzero, otherwise on its leading partition.
    std::vector<VermaElement> singular_vectors(int level) const;

private:
    using TermMap = std::map<Partition, Rat>;
    const TermMap& act_mono(int n, const Partition& lam) const;

    CentralData cd_;
    Rat h_;
    mutable std::map<std::pair<int, Partition>, TermMap> cache_;
};

// Free-function forms of the engine operations.
VermaElement act_L(const CentralData& cd, int n, const VermaElement& v);
RatMatrix gram_matrix(const CentralData& cd, const Rat& h, int level);
std::vector<VermaElement> singular_vectors(const CentralData& cd, const Rat& h, int level);

/// Descending chain of Verma submodules of V_{r,s} as (r,s) label pairs,
/// starting with (r,s) itself and truncated at `depth` entries.
/// For 1 <= s <= p-1 the chain is (r,s), (r+1,p-s), (r+2,s), ...;
/// for s = p it is (r,p), (r+2,p), (r+4,p), ...
std::vector<std::pair<int, int>> embedding_chain(int p, int r, int s, int depth);

}  // namespace vircat
