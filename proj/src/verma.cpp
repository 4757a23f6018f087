#include "vircat/verma.hpp"

#include <algorithm>
#include <sstream>

namespace vircat {

CentralData CentralData::from_p(int p) {
    if (p < 2) throw std::invalid_argument("CentralData: p must be >= 2");
    CentralData cd = from_t(Rat(p));
    cd.p = p;
    return cd;
}

CentralData CentralData::from_t(const Rat& t) {
    if (t.is_zero()) throw std::invalid_argument("CentralData: t must be nonzero");
    CentralData cd;
    cd.t = t;
    cd.c = Rat(13) - Rat(6) * t - Rat(6) / t;
    if (t.is_integer() && t >= Rat(2)) cd.p = static_cast<int>(t.to_long());
    return cd;
}

Rat h_weight(const CentralData& cd, int r, int s) {
    Rat tr_s = cd.t * Rat(r) - Rat(s);
    Rat t1 = cd.t - Rat(1);
    return (tr_s * tr_s - t1 * t1) / (Rat(4) * cd.t);
}

void VermaElement::add_term(const Partition& lam, const Rat& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms.find(lam);
    if (it == terms.end()) {
        terms.emplace(lam, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

int VermaElement::level() const {
    if (terms.empty()) return 0;
    int lvl = partition_level(terms.begin()->first);
    for (const auto& [lam, c] : terms)
        if (partition_level(lam) != lvl)
            throw std::invalid_argument("VermaElement: mixed-grade element has no level");
    return lvl;
}

Rat VermaElement::coeff(const Partition& lam) const {
    auto it = terms.find(lam);
    return it == terms.end() ? Rat(0) : it->second;
}

std::string VermaElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms) {
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rat mag = abs(c);
        if (!(mag == Rat(1)) || lam.empty()) os << mag.str() << " * ";
        os << partition_str(lam) << "|" << h.str() << ">";
    }
    return os.str();
}

// L_n L_{-lam} |h>, normal ordered.  [L_m, L_n] = (m-n) L_{m+n} +
// (m^3-m)/12 delta_{m+n,0} c.
const VermaEngine::TermMap& VermaEngine::act_mono(int n, const Partition& lam) const {
    auto key = std::make_pair(n, lam);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    TermMap out;
    if (lam.empty()) {
        if (n == 0) {
            if (!h_.is_zero()) out[{}] = h_;
        } else if (n < 0) {
            out[{-n}] = Rat(1);
        }
        // n > 0 annihilates the lowest weight vector
    } else {
        int m = lam.front();
        Partition rest(lam.begin() + 1, lam.end());
        if (n <= -m) {
            // already normal ordered: prepend the part -n
            Partition whole;
            whole.reserve(lam.size() + 1);
            whole.push_back(-n);
            whole.insert(whole.end(), lam.begin(), lam.end());
            out[whole] = Rat(1);
        } else {
            // commute L_n past L_{-m}
            auto add_scaled = [&out](const TermMap& src, const Rat& f) {
                for (const auto& [mu, c] : src) {
                    Rat v = c * f;
                    if (v.is_zero()) continue;
                    auto it = out.find(mu);
                    if (it == out.end())
                        out.emplace(mu, v);
                    else {
                        it->second += v;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            };
            // L_{-m} (L_n rest)
            for (const auto& [mu, c] : act_mono(n, rest)) add_scaled(act_mono(-m, mu), c);
            // (n+m) L_{n-m} rest
            add_scaled(act_mono(n - m, rest), Rat(n + m));
            // central term when n = m
            if (n == m) {
                Rat cc = Rat(static_cast<long>(n) * n * n - n, 12) * cd_.c;
                add_scaled(TermMap{{rest, Rat(1)}}, cc);
            }
        }
    }
    return cache_.emplace(std::move(key), std::move(out)).first->second;
}

VermaElement VermaEngine::act_L(int n, const VermaElement& v) const {
    if (!(v.h == h_)) throw std::invalid_argument("VermaEngine: weight mismatch");
    VermaElement out(h_);
    for (const auto& [lam, c] : v.terms)
        for (const auto& [mu, d] : act_mono(n, lam)) out.add_term(mu, c * d);
    return out;
}

RatMatrix VermaEngine::gram_matrix(int level) const {
    if (level < 0) throw std::invalid_argument("gram_matrix: negative level");
    const auto& basis = partitions_of(level);
    const auto n = static_cast<Eigen::Index>(basis.size());
    RatMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        VermaElement w(h_);
        w.add_term(basis[j], Rat(1));
        for (Eigen::Index i = 0; i < n; ++i) {
            // <L_{-lam} v, L_{-mu} v> = coefficient of |h> in
            // L_{lam_1} ... L_{lam_k} L_{-mu} |h>
            VermaElement cur = w;
            for (int part : basis[i]) cur = act_L(part, cur);
            g(i, j) = cur.coeff({});
        }
    }
    return g;
}

std::vector<VermaElement> VermaEngine::singular_vectors(int level) const {
    if (level < 1) throw std::invalid_argument("singular_vectors: level must be >= 1");
    const auto& basis = partitions_of(level);
    const auto& rows1 = partitions_of(level - 1);
    const auto& rows2 = level >= 2 ? partitions_of(level - 2) : partitions_of(0);

    const auto ncols = static_cast<Eigen::Index>(basis.size());
    Eigen::Index nrows = static_cast<Eigen::Index>(rows1.size());
    if (level >= 2) nrows += static_cast<Eigen::Index>(rows2.size());

    RatMatrix m(nrows, ncols);
    for (Eigen::Index i = 0; i < nrows; ++i)
        for (Eigen::Index j = 0; j < ncols; ++j) m(i, j) = Rat(0);

    std::map<Partition, Eigen::Index> row1_index, row2_index;
    for (size_t i = 0; i < rows1.size(); ++i) row1_index[rows1[i]] = static_cast<Eigen::Index>(i);
    if (level >= 2)
        for (size_t i = 0; i < rows2.size(); ++i)
            row2_index[rows2[i]] = static_cast<Eigen::Index>(rows1.size() + i);

    for (Eigen::Index j = 0; j < ncols; ++j) {
        VermaElement w(h_);
        w.add_term(basis[j], Rat(1));
        for (const auto& [mu, c] : act_L(1, w).terms) m(row1_index.at(mu), j) = c;
        if (level >= 2)
            for (const auto& [mu, c] : act_L(2, w).terms) m(row2_index.at(mu), j) = c;
    }

    RatMatrix ker = exact_kernel<Rat>(m);
    Partition ones(level, 1);
    auto ones_row = static_cast<Eigen::Index>(
        std::find(basis.begin(), basis.end(), ones) - basis.begin());

    std::vector<VermaElement> out;
    for (Eigen::Index k = 0; k < ker.cols(); ++k) {
        Rat lead = ker(ones_row, k);
        if (lead.is_zero()) {
            for (Eigen::Index i = 0; i < ncols; ++i)
                if (!ker(i, k).is_zero()) { lead = ker(i, k); break; }
        }
        VermaElement v(h_);
        for (Eigen::Index i = 0; i < ncols; ++i) v.add_term(basis[i], ker(i, k) / lead);
        out.push_back(std::move(v));
    }
    return out;
}

VermaElement act_L(const CentralData& cd, int n, const VermaElement& v) {
    return VermaEngine(cd, v.h).act_L(n, v);
}

RatMatrix gram_matrix(const CentralData& cd, const Rat& h, int level) {
    return VermaEngine(cd, h).gram_matrix(level);
}

std::vector<VermaElement> singular_vectors(const CentralData& cd, const Rat& h, int level) {
    return VermaEngine(cd, h).singular_vectors(level);
}

std::vector<std::pair<int, int>> embedding_chain(int p, int r, int s, int depth) {
    if (p < 2) throw std::invalid_argument("embedding_chain: p must be >= 2");
    if (r < 1 || s < 1 || s > p)
        throw std::invalid_argument("embedding_chain: need r >= 1 and 1 <= s <= p");
    if (depth < 0) throw std::invalid_argument("embedding_chain: negative depth");
    std::vector<std::pair<int, int>> chain;
    chain.reserve(depth);
    for (int k = 0; k < depth; ++k) {
        if (s == p)
            chain.emplace_back(r + 2 * k, p);
        else
            chain.emplace_back(r + k, k % 2 == 0 ? s : p - s);
    }
    return chain;
}

}  // namespace vircat
