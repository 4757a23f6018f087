#include "vircat/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace vircat {

void Poly1::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly1 Poly1::constant(const Rat& a) {
    Poly1 p;
    if (!a.is_zero()) p.c_ = {a};
    return p;
}

Poly1 Poly1::monomial(int degree, const Rat& a) {
    Poly1 p;
    if (a.is_zero()) return p;
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = a;
    return p;
}

const Rat& Poly1::leading() const {
    if (c_.empty()) throw std::invalid_argument("Poly1: zero polynomial has no leading coefficient");
    return c_.back();
}

Rat Poly1::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly1 Poly1::operator-() const {
    Poly1 r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly1(std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly1(std::move(c));
}

Poly1 operator*(const Rat& a, const Poly1& b) {
    std::vector<Rat> c = b.c_;
    for (auto& x : c) x *= a;
    return Poly1(std::move(c));
}

std::pair<Poly1, Poly1> Poly1::divmod(const Poly1& num, const Poly1& den) {
    if (den.is_zero()) throw std::invalid_argument("Poly1: division by zero polynomial");
    std::vector<Rat> rem = num.c_;
    int dn = den.degree();
    if (num.degree() < dn) return {Poly1(), num};
    std::vector<Rat> quo(num.degree() - dn + 1, Rat(0));
    for (int k = num.degree(); k >= dn; --k) {
        if (rem[k].is_zero()) continue;
        Rat q = rem[k] / den.leading();
        quo[k - dn] = q;
        for (int j = 0; j <= dn; ++j) rem[k - dn + j] -= q * den.c_[j];
    }
    return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 Poly1::exact_div(const Poly1& num, const Poly1& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::invalid_argument("Poly1: division not exact");
    return q;
}

std::string Poly1::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = c_[k];
        if (a.is_zero()) continue;
        Rat mag = abs(a);
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rat(1));
        if (k == 0 || !unit) os << mag.str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly1 cyclotomic_poly(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");

    static std::mutex mu;
    static std::map<int, Poly1> cache;
    {
        std::scoped_lock lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }

    // x^n - 1
    Poly1 num = Poly1::monomial(n) - Poly1::constant(Rat(1));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = Poly1::exact_div(num, cyclotomic_poly(d));

    std::scoped_lock lk(mu);
    cache.emplace(n, num);
    return num;
}

std::pair<int, Poly1> exact_divide_check(const Poly1& f, const Rat& root) {
    Poly1 lin = Poly1::monomial(1) - Poly1::constant(root);
    int mult = 0;
    Poly1 cur = f;
    while (!cur.is_zero()) {
        auto [q, r] = Poly1::divmod(cur, lin);
        if (!r.is_zero()) break;
        cur = q;
        ++mult;
    }
    return {mult, cur};
}

// ---------------------------------------------------------------------------
// Poly2

Poly2 Poly2::constant(const Rat& a) {
    Poly2 p;
    p.set_coeff(0, 0, a);
    return p;
}

Poly2 Poly2::x() { return linear(Rat(1), Rat(0), Rat(0)); }
Poly2 Poly2::y() { return linear(Rat(0), Rat(1), Rat(0)); }

Poly2 Poly2::linear(const Rat& a, const Rat& b, const Rat& c) {
    Poly2 p;
    p.set_coeff(1, 0, a);
    p.set_coeff(0, 1, b);
    p.set_coeff(0, 0, c);
    return p;
}

int Poly2::deg_x() const {
    int d = -1;
    for (const auto& [ij, a] : m_) d = std::max(d, ij.first);
    return d;
}

Rat Poly2::coeff(int i, int j) const {
    auto it = m_.find({i, j});
    return it == m_.end() ? Rat(0) : it->second;
}

void Poly2::set_coeff(int i, int j, const Rat& a) {
    if (a.is_zero())
        m_.erase({i, j});
    else
        m_[{i, j}] = a;
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [ij, a] : r.m_) a = -a;
    return r;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
    Poly2 r = a;
    for (const auto& [ij, c] : b.m_) {
        Rat s = r.coeff(ij.first, ij.second) + c;
        r.set_coeff(ij.first, ij.second, s);
    }
    return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) { return a + (-b); }

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ij, c1] : a.m_)
        for (const auto& [kl, c2] : b.m_) {
            int i = ij.first + kl.first, j = ij.second + kl.second;
            r.set_coeff(i, j, r.coeff(i, j) + c1 * c2);
        }
    return r;
}

Poly2 operator*(const Rat& a, const Poly2& b) {
    Poly2 r;
    if (a.is_zero()) return r;
    for (const auto& [ij, c] : b.m_) r.m_[ij] = a * c;
    return r;
}

Poly1 Poly2::eval_y(const Rat& h) const {
    std::vector<Rat> c(deg_x() + 1, Rat(0));
    for (const auto& [ij, a] : m_) c[ij.first] += a * pow(h, ij.second);
    return Poly1(std::move(c));
}

std::string Poly2::str() const {
    if (m_.empty()) return "0";
    // graded lex, x > y
    std::vector<std::pair<std::pair<int, int>, Rat>> terms(m_.begin(), m_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, a] : terms) {
        Rat mag = abs(a);
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rat(1));
        bool has_var = ij.first > 0 || ij.second > 0;
        if (!unit || !has_var) os << mag.str();
        if (!unit && has_var) os << "*";
        if (ij.first > 0) {
            os << "x";
            if (ij.first > 1) os << "^" << ij.first;
        }
        if (ij.second > 0) {
            os << "y";
            if (ij.second > 1) os << "^" << ij.second;
        }
    }
    return os.str();
}

}  // namespace vircat
