#include "vircat/zhu.hpp"

#include <algorithm>
#include <set>

#include "vircat/error.hpp"

namespace vircat {

bool Spectrum::has_root(const Rat& r, int mult) const {
    for (const auto& [root, m] : roots)
        if (root == r) return m == mult;
    return false;
}

Poly2 reduce_singular(const VermaElement& sv, const Rat& hw) {
    sv.level();  // rejects mixed-grade input
    Poly2 out;
    for (const auto& [lam, coeff] : sv.terms) {
        Poly2 term = Poly2::constant(Rat(1));
        Rat wt = hw;
        // innermost first: the last part acts closest to the vector
        for (auto it = lam.rbegin(); it != lam.rend(); ++it) {
            int n = *it;
            if (n < 1) throw std::invalid_argument("reduce_singular: positive mode present");
            Poly2 factor;
            if (n == 1) {
                factor = Poly2::linear(Rat(1), Rat(-1), -wt);
            } else if (n == 2) {
                factor = Poly2::linear(Rat(-1), Rat(2), wt);
            } else {
                Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
                Poly2 a = Poly2::linear(Rat(-1), Rat(2), wt);   // 2y - x + wt
                Poly2 b = Poly2::linear(Rat(1), Rat(-1), -wt);  // x - y - wt
                factor = sign * (Rat(n - 1) * a + Rat(n - 2) * b);
            }
            term = term * factor;
            wt += Rat(n);
        }
        out = out + coeff * term;
    }
    return out;
}

BimodPoly bimod_poly(const CentralData& cd, int gr, int gs) {
    if (gr < 1 || gs < 1) throw std::invalid_argument("bimod_poly: generator indices must be >= 1");
    Rat hw = h_weight(cd, gr, gs);
    int level = gr * gs;
    auto svs = singular_vectors(cd, hw, level);
    if (svs.size() != 1)
        throw verification_error("bimod_poly: singular space at (" + std::to_string(gr) + "," +
                                 std::to_string(gs) + ") level " + std::to_string(level) +
                                 " has dimension " + std::to_string(svs.size()));
    return BimodPoly{{gr, gs}, reduce_singular(svs[0], hw), hw};
}

Spectrum top_level_spectrum(const BimodPoly& bp, const CentralData& cd, int r, int s) {
    if (r < 1) throw std::invalid_argument("top_level_spectrum: r must be >= 1");
    if (cd.p >= 2 && (s < 1 || s > cd.p))
        throw std::invalid_argument("top_level_spectrum: need 1 <= s <= p");

    Poly1 g = bp.f.eval_y(h_weight(cd, r, s));
    int deg = g.degree();

    std::set<Rat> candidates;
    for (int dr = -deg; dr <= deg; ++dr)
        for (int ds = -deg; ds <= deg; ++ds) candidates.insert(h_weight(cd, r + dr, s + ds));

    Spectrum spec;
    spec.generator = bp.generator;
    spec.target = {r, s};
    Poly1 rest = g;
    for (const Rat& root : candidates) {
        if (rest.degree() < 1) break;
        auto [mult, quo] = exact_divide_check(rest, root);
        if (mult > 0) {
            spec.roots.emplace_back(root, mult);
            rest = quo;
        }
    }
    if (rest.degree() >= 1)
        throw verification_error("top_level_spectrum: unfactored remainder " + rest.str() +
                                 " outside the candidate weights");
    std::sort(spec.roots.begin(), spec.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return spec;
}

bool logarithmic_flag(const CentralData& cd, int r, int s) {
    if (r < 1) throw std::invalid_argument("logarithmic_flag: r must be >= 1");
    if (cd.p >= 2 && (s < 1 || s > cd.p))
        throw std::invalid_argument("logarithmic_flag: need 1 <= s <= p");
    return h_weight(cd, r, s - 1) == h_weight(cd, r, s + 1);
}

}  // namespace vircat
