#include "vircat/labels.hpp"

#include <sstream>
#include <stdexcept>

namespace vircat {

ModuleLabel::ModuleLabel(Kind k, int r_, int s_, int p_) : kind(k), r(r_), s(s_), p(p_) {
    if (p < 2) throw std::invalid_argument("ModuleLabel: p must be >= 2");
    if (r < 1) throw std::invalid_argument("ModuleLabel: r must be >= 1");
    if (s < 1 || s > p) throw std::invalid_argument("ModuleLabel: need 1 <= s <= p");
    if (kind == Kind::Proj && s == p) kind = Kind::Simple;  // P_{r,p} = L_{r,p}
}

ModuleLabel ModuleLabel::parse(const std::string& text, int p) {
    char kc = 0, colon = 0, comma = 0;
    int r = 0, s = 0;
    std::istringstream is(text);
    if (!(is >> kc >> colon >> r >> comma >> s) || colon != ':' || comma != ',' || !is.eof() ||
        (kc != 'L' && kc != 'P'))
        throw std::invalid_argument("ModuleLabel: cannot parse '" + text + "' (expected L:r,s or P:r,s)");
    return ModuleLabel(kc == 'L' ? Kind::Simple : Kind::Proj, r, s, p);
}

std::string ModuleLabel::str() const {
    std::ostringstream os;
    os << kind_str() << ":" << r << "," << s;
    return os.str();
}

void Decomp::add(const ModuleLabel& a, long mult) {
    if (p == 0) p = a.p;
    if (a.p != p) throw std::invalid_argument("Decomp: mixed p");
    if (mult < 0) throw std::invalid_argument("Decomp: negative multiplicity");
    if (mult == 0) return;
    entries[a] += mult;
}

void Decomp::add(const Decomp& d, long mult) {
    for (const auto& [a, m] : d.entries) add(a, m * mult);
}

long Decomp::mult(const ModuleLabel& a) const {
    auto it = entries.find(a);
    return it == entries.end() ? 0 : it->second;
}

long Decomp::total() const {
    long n = 0;
    for (const auto& [a, m] : entries) n += m;
    return n;
}

std::string Decomp::str() const {
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

}  // namespace vircat
