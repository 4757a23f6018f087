#include "vircat/oracle.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "vircat/error.hpp"

namespace vircat {

void VirtualDecomp::add(const ModuleLabel& a, long mult) {
    if (p == 0) p = a.p;
    if (a.p != p) throw std::invalid_argument("VirtualDecomp: mixed p");
    if (mult == 0) return;
    auto it = entries.find(a);
    if (it == entries.end()) {
        entries.emplace(a, mult);
    } else {
        it->second += mult;
        if (it->second == 0) entries.erase(it);
    }
}

void VirtualDecomp::add(const VirtualDecomp& d, long mult) {
    for (const auto& [a, m] : d.entries) add(a, m * mult);
}

bool VirtualDecomp::nonnegative() const {
    for (const auto& [a, m] : entries)
        if (m < 0) return false;
    return true;
}

Decomp VirtualDecomp::to_decomp() const {
    Decomp out(p);
    for (const auto& [a, m] : entries) {
        if (m < 0)
            throw verification_error("Krull-Schmidt subtraction left negative multiplicity " +
                                     std::to_string(m) + " on " + a.str());
        out.add(a, m);
    }
    return out;
}

FusionOracle::FusionOracle(int p) : p_(p) {
    if (p < 2) throw std::invalid_argument("FusionOracle: p must be >= 2");
}

// Tabulated products of L_{1,2} with any simple or projective cover.
Decomp FusionOracle::l12_times(const ModuleLabel& x) const {
    const int p = p_;
    Decomp d(p);
    if (x.kind == Kind::Simple) {
        if (x.s == 1) {
            d.add(ModuleLabel::simple(x.r, 2, p), 1);
        } else if (x.s <= p - 1) {
            d.add(ModuleLabel::simple(x.r, x.s - 1, p), 1);
            d.add(ModuleLabel::simple(x.r, x.s + 1, p), 1);
        } else {  // s = p
            d.add(ModuleLabel::proj(x.r, p - 1, p), 1);
        }
        return d;
    }
    // x = P_{r,s}, s <= p-1
    if (p >= 3) {
        if (x.s == 1 && x.r == 1) {
            d.add(ModuleLabel::proj(1, 2, p), 1);
            d.add(ModuleLabel::proj(2, p, p), 1);
        } else if (x.s == 1) {
            d.add(ModuleLabel::proj(x.r, 2, p), 1);
            d.add(ModuleLabel::proj(x.r - 1, p, p), 1);
            d.add(ModuleLabel::proj(x.r + 1, p, p), 1);
        } else if (x.s <= p - 2) {
            d.add(ModuleLabel::proj(x.r, x.s - 1, p), 1);
            d.add(ModuleLabel::proj(x.r, x.s + 1, p), 1);
        } else {  // s = p-1
            d.add(ModuleLabel::proj(x.r, p - 2, p), 1);
            d.add(ModuleLabel::proj(x.r, p, p), 2);
        }
    } else {  // p = 2, so s = 1
        if (x.r == 1) {
            d.add(ModuleLabel::proj(1, 2, p), 2);
            d.add(ModuleLabel::proj(2, 2, p), 1);
        } else {
            d.add(ModuleLabel::proj(x.r - 1, 2, p), 1);
            d.add(ModuleLabel::proj(x.r, 2, p), 2);
            d.add(ModuleLabel::proj(x.r + 1, 2, p), 1);
        }
    }
    return d;
}

// Tabulated sl2-type products of L_{r,1}: the second index is carried
// along unchanged, for simples and projective covers alike.
Decomp FusionOracle::lr1_times(int r, const ModuleLabel& x) const {
    Decomp d(p_);
    for (int k = std::abs(r - x.r) + 1; k <= r + x.r - 1; k += 2)
        d.add(ModuleLabel(x.kind, k, x.s, p_), 1);
    return d;
}

Decomp FusionOracle::lr1_times(int r, const Decomp& d) const {
    Decomp out(p_);
    for (const auto& [x, m] : d.entries) out.add(lr1_times(r, x), m);
    return out;
}

Decomp FusionOracle::generator_tensor(const ModuleLabel& a, const ModuleLabel& b) const {
    if (a.p != p_ || b.p != p_) throw std::invalid_argument("generator_tensor: wrong p");
    if (a.kind == Kind::Simple && a.s == 1) return lr1_times(a.r, b);
    if (a.kind == Kind::Simple && a.r == 1 && a.s == 2) return l12_times(b);
    throw std::invalid_argument("generator_tensor: first argument must be L:r,1 or L:1,2");
}

// L_{1,s} x X by the two-step recursion peeling the second index.
const Decomp& FusionOracle::l1s_times(int s, const ModuleLabel& x) {
    auto key = std::make_pair(s, x);
    auto hit = l1s_cache_.find(key);
    if (hit != l1s_cache_.end()) return hit->second;

    Decomp out(p_);
    if (s == 1) {
        out.add(x, 1);
    } else if (s == 2) {
        out = l12_times(x);
    } else {
        VirtualDecomp acc(p_);
        for (const auto& [y, m] : l1s_times(s - 1, x).entries)
            acc.add(VirtualDecomp(l12_times(y)), m);
        acc.sub(VirtualDecomp(l1s_times(s - 2, x)));
        out = acc.to_decomp();
    }
    return l1s_cache_.emplace(std::move(key), std::move(out)).first->second;
}

Decomp FusionOracle::recursive_tensor(const ModuleLabel& a, const ModuleLabel& b) {
    if (a.p != p_ || b.p != p_) throw std::invalid_argument("recursive_tensor: wrong p");
    if (a.kind == Kind::Simple) {
        // L_{r,s} = L_{r,1} x L_{1,s}
        return lr1_times(a.r, l1s_times(a.s, b));
    }
    if (b.kind == Kind::Simple) return recursive_tensor(b, a);
    // P_{r,s} x P: split P_{1,s} x X = 2 (L_{1,s} x X) + (L_{2,p-s} x X),
    // then apply L_{r,1}.
    Decomp inner(p_);
    inner.add(l1s_times(a.s, b), 2);
    inner.add(recursive_tensor(ModuleLabel::simple(2, p_ - a.s, p_), b), 1);
    return lr1_times(a.r, inner);
}

std::vector<int> sl2_fusion(int r, int rp) {
    if (r < 1 || rp < 1) throw std::invalid_argument("sl2_fusion: indices must be >= 1");
    std::vector<int> out;
    for (int k = std::abs(r - rp) + 1; k <= r + rp - 1; k += 2) out.push_back(k);
    return out;
}

std::vector<int> verlinde_sl2(int p, int s, int sp) {
    if (s < 1 || s > p - 1 || sp < 1 || sp > p - 1)
        throw std::invalid_argument("verlinde_sl2: need 1 <= s, s' <= p-1");
    std::vector<int> out;
    for (int l = std::abs(s - sp) + 1; l <= std::min(s + sp - 1, 2 * p - 1 - s - sp); l += 2)
        out.push_back(l);
    return out;
}

void CheckReport::merge(const CheckReport& o) {
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    os << failures.size() << " failures / " << checks << " checks";
    return os.str();
}

std::string CheckReport::to_json_lines() const {
    std::ostringstream os;
    nlohmann::ordered_json head;
    head["checks"] = checks;
    head["failures"] = static_cast<long>(failures.size());
    os << head.dump() << "\n";
    for (const auto& f : failures) {
        nlohmann::ordered_json j;
        j["check"] = f.check;
        j["p"] = f.p;
        j["a"] = f.a;
        j["b"] = f.b;
        j["c"] = f.c;
        j["detail"] = f.detail;
        os << j.dump() << "\n";
    }
    return os.str();
}

CheckReport CheckReport::from_json_lines(const std::string& text) {
    CheckReport rep;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        if (first) {
            rep.checks = j.at("checks").get<long>();
            first = false;
            continue;
        }
        CheckFailure f;
        f.check = j.at("check").get<std::string>();
        f.p = j.at("p").get<int>();
        f.a = j.at("a").get<std::string>();
        f.b = j.at("b").get<std::string>();
        f.c = j.at("c").get<std::string>();
        f.detail = j.at("detail").get<std::string>();
        rep.failures.push_back(std::move(f));
    }
    return rep;
}

std::vector<ModuleLabel> all_labels(int p, int rmax) {
    std::vector<ModuleLabel> out;
    for (int r = 1; r <= rmax; ++r) {
        for (int s = 1; s <= p; ++s) out.push_back(ModuleLabel::simple(r, s, p));
        for (int s = 1; s <= p - 1; ++s) out.push_back(ModuleLabel::proj(r, s, p));
    }
    return out;
}

CheckReport check_ring_axioms(int p, int rmax, int jobs, int assoc_rmax) {
    if (p < 2 || rmax < 1) throw std::invalid_argument("check_ring_axioms: bad parameters");
    const auto labels = all_labels(p, rmax);
    const ModuleLabel unit = ModuleLabel::simple(1, 1, p);

    // pair sweep: commutativity, unit, oracle agreement, dimensions
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i; j < labels.size(); ++j) pairs.emplace_back(i, j);

    jobs = std::max(1, jobs);
    std::vector<CheckReport> partial(jobs);
    std::atomic<size_t> next{0};
    auto worker = [&](int w) {
        FusionOracle oracle(p);
        CheckReport& rep = partial[w];
        for (;;) {
            size_t k = next.fetch_add(1);
            if (k >= pairs.size()) break;
            const ModuleLabel& a = labels[pairs[k].first];
            const ModuleLabel& b = labels[pairs[k].second];

            Decomp ab = detail::tensor_as_given(a, b);
            rep.checks++;
            if (!(ab == detail::tensor_as_given(b, a)))
                rep.failures.push_back({"commutativity", p, a.str(), b.str(), "", ""});

            rep.checks++;
            try {
                Decomp rec = oracle.recursive_tensor(a, b);
                if (!(rec == ab))
                    rep.failures.push_back({"oracle", p, a.str(), b.str(), "",
                                            "closed form " + ab.str() + " vs recursion " + rec.str()});
            } catch (const verification_error& e) {
                rep.failures.push_back({"oracle", p, a.str(), b.str(), "", e.what()});
            }

            rep.checks++;
            if (!(cat_dim(ab) == cat_dim(a) * cat_dim(b)))
                rep.failures.push_back({"dimension", p, a.str(), b.str(), "", ""});
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }

    CheckReport rep;
    for (const auto& r : partial) rep.merge(r);

    for (const auto& a : labels) {
        rep.checks++;
        if (!(tensor(unit, a) == Decomp::of(a)))
            rep.failures.push_back({"unit", p, a.str(), "", "", ""});
    }

    const auto small = all_labels(p, std::min(rmax, assoc_rmax));
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                rep.checks++;
                if (!(tensor(tensor(a, b), c) == tensor(Decomp::of(a), tensor(b, c))))
                    rep.failures.push_back({"associativity", p, a.str(), b.str(), c.str(), ""});
            }
    return rep;
}

}  // namespace vircat
