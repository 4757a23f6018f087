#include "vircat/triplet.hpp"

#include <sstream>

#include "vircat/error.hpp"
#include "vircat/fusion.hpp"

namespace vircat {

TripletLabel::TripletLabel(TKind k, int r_, int s_, int p_) : kind(k), r(r_), s(s_), p(p_) {
    if (p < 2) throw std::invalid_argument("TripletLabel: p must be >= 2");
    if (r != 1 && r != 2) throw std::invalid_argument("TripletLabel: r must be 1 or 2");
    if (s < 1 || s > p) throw std::invalid_argument("TripletLabel: need 1 <= s <= p");
    if (kind == TKind::R && s == p) kind = TKind::W;  // R_{r,p} = W_{r,p}
}

TripletLabel TripletLabel::parse(const std::string& text, int p) {
    char kc = 0, colon = 0, comma = 0;
    int r = 0, s = 0;
    std::istringstream is(text);
    if (!(is >> kc >> colon >> r >> comma >> s) || colon != ':' || comma != ',' || !is.eof() ||
        (kc != 'W' && kc != 'R'))
        throw std::invalid_argument("TripletLabel: cannot parse '" + text + "' (expected W:r,s or R:r,s)");
    return TripletLabel(kc == 'W' ? TKind::W : TKind::R, r, s, p);
}

std::string TripletLabel::str() const {
    std::ostringstream os;
    os << kind_str() << ":" << r << "," << s;
    return os.str();
}

void TripletDecomp::add(const TripletLabel& a, long mult) {
    if (p == 0) p = a.p;
    if (a.p != p) throw std::invalid_argument("TripletDecomp: mixed p");
    if (mult < 0) throw std::invalid_argument("TripletDecomp: negative multiplicity");
    if (mult == 0) return;
    entries[a] += mult;
}

void TripletDecomp::add(const TripletDecomp& d, long mult) {
    for (const auto& [a, m] : d.entries) add(a, m * mult);
}

long TripletDecomp::mult(const TripletLabel& a) const {
    auto it = entries.find(a);
    return it == entries.end() ? 0 : it->second;
}

std::string TripletDecomp::str() const {
    if (entries.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, m] : entries) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << a.str();
    }
    return os.str();
}

namespace {
int rbar(int r) { return r % 2 == 1 ? 1 : 2; }
}  // namespace

TripletDecomp induce(const ModuleLabel& a) {
    TKind k = a.kind == Kind::Simple ? TKind::W : TKind::R;
    return TripletDecomp::of(TripletLabel(k, rbar(a.r), a.s, a.p), a.r);
}

TripletDecomp induce(const Decomp& d) {
    TripletDecomp out(d.p);
    for (const auto& [a, m] : d.entries) out.add(induce(a), m);
    return out;
}

namespace {

// Tabulated products of the simple current W_{2,1} and of W_{1,2}.
bool tabulated_product(const TripletLabel& a, const TripletLabel& b, TripletDecomp& out) {
    const int p = a.p;
    if (a.kind == TKind::W && a.r == 1 && a.s == 1) {  // unit
        out = TripletDecomp::of(b);
        return true;
    }
    if (a.kind == TKind::W && a.r == 2 && a.s == 1) {
        out = TripletDecomp::of(TripletLabel(b.kind, 3 - b.r, b.s, p));
        return true;
    }
    if (!(a.kind == TKind::W && a.r == 1 && a.s == 2)) return false;

    // a = W_{1,2}
    out = TripletDecomp(p);
    if (b.kind == TKind::W && b.s <= p - 1) {
        if (b.s == 1) {
            out.add(TripletLabel::w(b.r, 2, p), 1);
        } else {
            out.add(TripletLabel::w(b.r, b.s - 1, p), 1);
            out.add(TripletLabel::w(b.r, b.s + 1, p), 1);
        }
        return true;
    }
    // b is R_{r,s} (s <= p-1) or W_{r,p} = R_{r,p}
    int s = b.s;
    if (p >= 3) {
        if (s == 1) {
            out.add(TripletLabel::rr(b.r, 2, p), 1);
            out.add(TripletLabel::rr(3 - b.r, p, p), 2);
        } else if (s <= p - 2) {
            out.add(TripletLabel::rr(b.r, s - 1, p), 1);
            out.add(TripletLabel::rr(b.r, s + 1, p), 1);
        } else if (s == p - 1) {
            out.add(TripletLabel::rr(b.r, p - 2, p), 1);
            out.add(TripletLabel::rr(b.r, p, p), 2);
        } else {  // s = p
            out.add(TripletLabel::rr(b.r, p - 1, p), 1);
        }
    } else {  // p = 2
        if (s == 1) {
            out.add(TripletLabel::rr(b.r, 2, p), 2);
            out.add(TripletLabel::rr(3 - b.r, 2, p), 2);
        } else {  // s = 2
            out.add(TripletLabel::rr(b.r, 1, p), 1);
        }
    }
    return true;
}

ModuleLabel preimage(const TripletLabel& a) {
    return ModuleLabel(a.kind == TKind::W ? Kind::Simple : Kind::Proj, a.r, a.s, a.p);
}

}  // namespace

TripletProduct triplet_tensor(const TripletLabel& a, const TripletLabel& b) {
    if (a.p != b.p) throw std::invalid_argument("triplet_tensor: mixed p");
    TripletDecomp out;
    if (tabulated_product(a, b, out)) return {out, false};
    if (tabulated_product(b, a, out)) return {out, false};

    // induction transport: divide induce(a0 x b0) by rbar(a0) rbar(b0)
    ModuleLabel a0 = preimage(a), b0 = preimage(b);
    TripletDecomp big = induce(tensor(a0, b0));
    long div = static_cast<long>(a0.r) * b0.r;
    TripletDecomp d(a.p);
    for (const auto& [x, m] : big.entries) {
        if (m % div != 0)
            throw verification_error("triplet_tensor: multiplicity " + std::to_string(m) + " of " +
                                     x.str() + " in " + a.str() + " x " + b.str() +
                                     " is not divisible by " + std::to_string(div));
        d.add(x, m / div);
    }
    return {d, true};
}

std::vector<std::pair<ModuleLabel, long>> restrict_module(const TripletLabel& a, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("restrict_module: negative cutoff");
    std::vector<std::pair<ModuleLabel, long>> out;
    for (int n = 0; n <= cutoff; ++n) {
        int k = 2 * n + a.r;
        if (a.kind == TKind::W)
            out.emplace_back(ModuleLabel::simple(k, a.s, a.p), k);
        else
            out.emplace_back(ModuleLabel::proj(k, a.s, a.p), k);
    }
    return out;
}

CheckReport multiplicity_identity_check(int p, int r, int s, int m_max) {
    if (r < 1 || s < 1 || s > p)
        throw std::invalid_argument("multiplicity_identity_check: label out of domain");
    CheckReport rep;
    int rb = rbar(r);
    for (int m = 0; m <= m_max; ++m) {
        int target = 2 * m + rb;
        // multiplicity of L_{target,s} in sum_n (2n+1) (L_{2n+1,1} x L_{r,s})
        long mult = 0;
        for (int n = 0; n <= m + r; ++n) {
            int lo = std::abs(r - (2 * n + 1)) + 1, hi = r + 2 * n;
            if (target >= lo && target <= hi && (target + r + 2 * n + 1) % 2 == 1)
                mult += 2 * n + 1;
        }
        rep.checks++;
        long expect = static_cast<long>(r) * target;
        if (mult != expect)
            rep.failures.push_back({"induction-multiplicity", p, "L:" + std::to_string(r) + "," + std::to_string(s),
                                    "m=" + std::to_string(m), "",
                                    "got " + std::to_string(mult) + ", expected " + std::to_string(expect)});
    }
    return rep;
}

CheckReport check_monoidal(int p, int cutoff) {
    CheckReport rep;
    const auto labels = all_labels(p, cutoff);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            rep.checks++;
            TripletDecomp lhs = induce(tensor(a, b));
            TripletDecomp rhs(p);
            TripletDecomp fa = induce(a), fb = induce(b);
            for (const auto& [x, m] : fa.entries)
                for (const auto& [y, n] : fb.entries)
                    rhs.add(triplet_tensor(x, y).decomp, m * n);
            if (!(lhs == rhs))
                rep.failures.push_back({"monoidal", p, a.str(), b.str(), "",
                                        "F(a x b) = " + lhs.str() + " vs F(a) x F(b) = " + rhs.str()});
        }
    return rep;
}

}  // namespace vircat
