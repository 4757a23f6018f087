#include "vircat/partition.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace vircat {

int partition_level(const Partition& lam) {
    int n = 0;
    for (int a : lam) n += a;
    return n;
}

namespace {

void gen(int n, int maxpart, Partition& prefix, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        prefix.push_back(k);
        gen(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative level");
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::scoped_lock lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    Partition prefix;
    gen(n, n == 0 ? 1 : n, prefix, out);
    return cache.emplace(n, std::move(out)).first->second;
}

std::string partition_str(const Partition& lam) {
    std::ostringstream os;
    for (int a : lam) os << "L(-" << a << ")";
    return os.str();
}

}  // namespace vircat
