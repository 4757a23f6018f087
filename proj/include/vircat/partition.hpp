#pragma once

#include <string>
#include <vector>

namespace vircat {

/// Integer partition with weakly decreasing positive parts; indexes the
/// PBW monomial L_{-parts[0]} ... L_{-parts[k-1]} applied to a lowest
/// weight vector.  The empty partition is the vector itself.
using Partition = std::vector<int>;

int partition_level(const Partition& lam);

/// All partitions of n in descending lexicographic order:
/// [n], [n-1,1], [n-2,2], [n-2,1,1], ...
const std::vector<Partition>& partitions_of(int n);

/// "L(-a)L(-b)..." (empty string for the empty partition).
std::string partition_str(const Partition& lam);

}  // namespace vircat
