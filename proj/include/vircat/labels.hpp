#pragma once

#include <compare>
#include <map>
#include <string>

namespace vircat {

enum class Kind { Simple, Proj };

/// Canonical name of an indecomposable in the subcategory generated by
/// the simples L_{r,s} and their projective covers P_{r,s}.  P_{r,p} is
/// the simple L_{r,p}, so a Proj label with s = p normalizes to Simple
/// at construction.
struct ModuleLabel {
    Kind kind;
    int r;
    int s;
    int p;

    ModuleLabel(Kind k, int r_, int s_, int p_);
    static ModuleLabel simple(int r, int s, int p) { return ModuleLabel(Kind::Simple, r, s, p); }
    static ModuleLabel proj(int r, int s, int p) { return ModuleLabel(Kind::Proj, r, s, p); }

    /// Parses "L:r,s" or "P:r,s".
    static ModuleLabel parse(const std::string& text, int p);
    std::string str() const;
    const char* kind_str() const { return kind == Kind::Simple ? "L" : "P"; }

    friend bool operator==(const ModuleLabel&, const ModuleLabel&) = default;
    friend std::strong_ordering operator<=>(const ModuleLabel&, const ModuleLabel&) = default;
};

/// Direct-sum decomposition: labels with non-negative multiplicities.
struct Decomp {
    int p = 0;
    std::map<ModuleLabel, long> entries;

    Decomp() = default;
    explicit Decomp(int p_) : p(p_) {}
    static Decomp of(const ModuleLabel& a) {
        Decomp d(a.p);
        d.add(a, 1);
        return d;
    }

    void add(const ModuleLabel& a, long mult);
    void add(const Decomp& d, long mult = 1);
    long mult(const ModuleLabel& a) const;
    long total() const;
    bool empty() const { return entries.empty(); }

    friend bool operator==(const Decomp& a, const Decomp& b) {
        return a.entries == b.entries;
    }

    /// "L:1,1 + 2*P:2,1" (or "0" when empty).
    std::string str() const;
};

}  // namespace vircat
