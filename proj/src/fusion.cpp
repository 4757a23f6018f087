#include "vircat/fusion.hpp"

#include <cstdlib>

#include "vircat/error.hpp"
#include "vircat/verma.hpp"

namespace vircat {

namespace {

// Adds P_{k,l} for l in [lo, hi] with l + anchor odd.  The Proj
// constructor turns l = p into the simple L_{k,p}.
void add_proj_range(Decomp& d, int p, int k, int lo, int hi, int anchor, long mult = 1) {
    for (int l = std::max(lo, 1); l <= std::min(hi, p); ++l)
        if ((l + anchor) % 2 == 1) d.add(ModuleLabel::proj(k, l, p), mult);
}

// L_{r,s} x L_{r',s'}
Decomp tensor_ll(int p, int r, int s, int rp, int sp) {
    Decomp d(p);
    for (int k = std::abs(r - rp) + 1; k <= r + rp - 1; ++k) {
        if ((k + r + rp) % 2 != 1) continue;
        int hi = std::min(s + sp - 1, 2 * p - 1 - s - sp);
        for (int l = std::abs(s - sp) + 1; l <= hi; ++l)
            if ((l + s + sp) % 2 == 1) d.add(ModuleLabel::simple(k, l, p), 1);
        add_proj_range(d, p, k, 2 * p + 1 - s - sp, p, s + sp);
    }
    return d;
}

// L_{r,s} x P_{r',s'} with s' <= p-1
Decomp tensor_lp(int p, int r, int s, int rp, int sp) {
    Decomp d(p);
    for (int k = std::abs(r - rp) + 1; k <= r + rp - 1; ++k) {
        if ((k + r + rp) % 2 != 1) continue;
        add_proj_range(d, p, k, std::abs(s - sp) + 1, std::min(s + sp - 1, p), s + sp);
        add_proj_range(d, p, k, 2 * p + 1 - s - sp, p, s + sp);
    }
    for (int l = p - s + sp + 1; l <= p; ++l) {
        if ((l + p + s + sp) % 2 != 1) continue;
        for (int k = std::max(std::abs(r - rp), 1); k <= r + rp - 2; ++k)
            if ((k + r + rp) % 2 == 0) d.add(ModuleLabel::proj(k, l, p), 1);
        for (int k = std::abs(r - rp) + 2; k <= r + rp; ++k)
            if ((k + r + rp) % 2 == 0) d.add(ModuleLabel::proj(k, l, p), 1);
    }
    return d;
}

// P_{r,s} x P_{r',s'} with s, s' <= p-1
Decomp tensor_pp(int p, int r, int s, int rp, int sp) {
    Decomp d(p);
    for (int k = std::abs(r - rp) + 1; k <= r + rp - 1; ++k) {
        if ((k + r + rp) % 2 != 1) continue;
        add_proj_range(d, p, k, std::abs(s - sp) + 1, std::min(s + sp - 1, p), s + sp, 2);
        add_proj_range(d, p, k, 2 * p + 1 - s - sp, p, s + sp, 2);
    }
    for (int l = s + sp + 1; l <= p; ++l) {
        if ((l + s + sp) % 2 != 1) continue;
        auto add_k_range = [&](int lo, int hi) {
            for (int k = lo; k <= hi; ++k)
                if ((k + r + rp) % 2 == 1) d.add(ModuleLabel::proj(k, l, p), 1);
        };
        add_k_range(std::max(std::abs(r - rp) - 1, 1), r + rp - 3);
        add_k_range(std::max(std::abs(r - rp) + 1, 2), r + rp - 1);
        add_k_range(std::abs(r - rp) + 1, r + rp - 1);
        add_k_range(std::abs(r - rp) + 3, r + rp + 1);
    }
    auto add_l_blocks = [&](int k) {
        add_proj_range(d, p, k, std::abs(p - s - sp) + 1, p, p + s + sp);
        add_proj_range(d, p, k, p - std::abs(s - sp) + 1, p, p + s + sp);
    };
    for (int k = std::max(std::abs(r - rp), 1); k <= r + rp - 2; ++k)
        if ((k + r + rp) % 2 == 0) add_l_blocks(k);
    for (int k = std::abs(r - rp) + 2; k <= r + rp; ++k)
        if ((k + r + rp) % 2 == 0) add_l_blocks(k);
    return d;
}

}  // namespace

Decomp tensor(const ModuleLabel& a, const ModuleLabel& b) {
    if (a.p != b.p) throw std::invalid_argument("tensor: mixed p");
    // canonical order makes the product commutative by construction
    const ModuleLabel& x = a <= b ? a : b;
    const ModuleLabel& y = a <= b ? b : a;
    return detail::tensor_as_given(x, y);
}

namespace detail {

Decomp tensor_as_given(const ModuleLabel& a, const ModuleLabel& b) {
    if (a.p != b.p) throw std::invalid_argument("tensor: mixed p");
    if (a.kind == Kind::Simple && b.kind == Kind::Simple)
        return tensor_ll(a.p, a.r, a.s, b.r, b.s);
    if (a.kind == Kind::Simple) return tensor_lp(a.p, a.r, a.s, b.r, b.s);
    if (b.kind == Kind::Simple) return tensor_lp(a.p, b.r, b.s, a.r, a.s);
    return tensor_pp(a.p, a.r, a.s, b.r, b.s);
}

}  // namespace detail

Decomp tensor(const Decomp& a, const ModuleLabel& b) {
    Decomp out(b.p);
    for (const auto& [x, m] : a.entries) out.add(tensor(x, b), m);
    return out;
}

Decomp tensor(const Decomp& a, const Decomp& b) {
    Decomp out(a.p == 0 ? b.p : a.p);
    for (const auto& [x, m] : a.entries)
        for (const auto& [y, n] : b.entries) out.add(tensor(x, y), m * n);
    return out;
}

CycScalar cat_dim(const ModuleLabel& a) {
    if (a.kind == Kind::Proj) return cat_dim(composition_factors(a));
    int exp = (a.p + 1) * (a.r + 1) + a.s + 1;
    Rat sign = (exp % 2 == 0) ? Rat(1) : Rat(-1);
    return (sign * Rat(a.r)) * qint(a.s, a.p);
}

CycScalar cat_dim(const Decomp& d) {
    if (d.p == 0) throw std::invalid_argument("cat_dim: decomposition without p");
    CycScalar acc = CycScalar::zero(d.p);
    for (const auto& [a, m] : d.entries) acc += Rat(m) * cat_dim(a);
    return acc;
}

Decomp composition_factors(const ModuleLabel& a) {
    Decomp d(a.p);
    if (a.kind == Kind::Simple) {
        d.add(a, 1);
        return d;
    }
    d.add(ModuleLabel::simple(a.r, a.s, a.p), 2);
    if (a.r == 1) {
        d.add(ModuleLabel::simple(2, a.p - a.s, a.p), 1);
    } else {
        d.add(ModuleLabel::simple(a.r - 1, a.p - a.s, a.p), 1);
        d.add(ModuleLabel::simple(a.r + 1, a.p - a.s, a.p), 1);
    }
    return d;
}

Decomp composition_factors(const Decomp& d) {
    Decomp out(d.p);
    for (const auto& [a, m] : d.entries) out.add(composition_factors(a), m);
    return out;
}

LoewyData loewy(const ModuleLabel& a) {
    LoewyData ld;
    ld.socle = {ModuleLabel::simple(a.r, a.s, a.p)};
    ld.head = ld.socle;
    if (a.kind == Kind::Proj) {
        if (a.r == 1)
            ld.middle = {ModuleLabel::simple(2, a.p - a.s, a.p)};
        else
            ld.middle = {ModuleLabel::simple(a.r - 1, a.p - a.s, a.p),
                         ModuleLabel::simple(a.r + 1, a.p - a.s, a.p)};
    }
    return ld;
}

bool projective_in_oc0(const ModuleLabel& a) {
    return a.kind == Kind::Proj || a.s == a.p;
}

Decomp semisimplify(const Decomp& d) {
    Decomp out(d.p);
    for (const auto& [a, m] : d.entries)
        if (a.kind == Kind::Simple && a.s != a.p) out.add(a, m);
    return out;
}

Decomp ss_tensor(const ModuleLabel& a, const ModuleLabel& b) {
    if (a.p != b.p) throw std::invalid_argument("ss_tensor: mixed p");
    if (a.kind != Kind::Simple || b.kind != Kind::Simple || a.s > a.p - 1 || b.s > b.p - 1)
        throw std::invalid_argument("ss_tensor: arguments must be simples with s <= p-1");
    int p = a.p;
    Decomp d(p);
    for (int k = std::abs(a.r - b.r) + 1; k <= a.r + b.r - 1; ++k) {
        if ((k + a.r + b.r) % 2 != 1) continue;
        int hi = std::min(a.s + b.s - 1, 2 * p - 1 - a.s - b.s);
        for (int l = std::abs(a.s - b.s) + 1; l <= hi; ++l)
            if ((l + a.s + b.s) % 2 == 1) d.add(ModuleLabel::simple(k, l, p), 1);
    }
    return d;
}

long monodromy_exponent_check(int p, int r, int s, int n, int k) {
    if (r < 1 || s < 1 || s > p || n < 0)
        throw std::invalid_argument("monodromy_exponent_check: label out of domain");
    if (k < 1 || k > std::min(r, 2 * n + 1))
        throw std::invalid_argument("monodromy_exponent_check: need 1 <= k <= min(r, 2n+1)");
    CentralData cd = CentralData::from_p(p);
    Rat delta = h_weight(cd, r + 2 * (n - k + 1), s) - h_weight(cd, r, s) -
                h_weight(cd, 2 * n + 1, 1);
    if (!delta.is_integer())
        throw verification_error("monodromy exponent " + delta.str() + " is not an integer at (p,r,s,n,k)=(" +
                                 std::to_string(p) + "," + std::to_string(r) + "," + std::to_string(s) +
                                 "," + std::to_string(n) + "," + std::to_string(k) + ")");
    return delta.to_long();
}

}  // namespace vircat
