#ifndef BAERMULT_GROUP_SPEC_HPP
#define BAERMULT_GROUP_SPEC_HPP

#include <string>
#include <vector>

namespace baermult {

// An n-th nilpotent product of m infinite cyclic groups and t finite cyclic
// groups of orders r_1, ..., r_t. Generators are numbered 1..m+t with the
// free generators first; generator m+j has torsion order r_j.
struct GroupSpec {
    long long m = 0;
    std::vector<long long> torsion;
    long long n = 1;

    long long t() const { return static_cast<long long>(torsion.size()); }
    long long alphabet_size() const { return m + t(); }

    // 0 for infinite order, r_j for generator m+j.
    long long torsion_order(long long generator_index) const;

    // Divisibility chain r_{i+1} | r_i.
    bool chain_ok() const;

    // Structural sanity: m >= 0, n >= 1, all r_i >= 2, at least one factor.
    // Throws HypothesisError otherwise. The chain is checked separately by
    // hypothesis validators so that failures can be reported by name.
    void validate_shape() const;

    std::string describe() const;  // e.g. "Z^2 * Z11 @ n=2"
};

bool operator==(const GroupSpec& a, const GroupSpec& b);

// Parses the compact form "Z^2 * Z11 * Z25 @ n=2". Whitespace is free;
// factors are 'Z' (one infinite cyclic), 'Z^k' (k of them) or 'Z<r>' with
// r >= 2. Free factors may appear in any position; torsion orders keep
// their given order. Throws HypothesisError on malformed input.
GroupSpec parse_group_expr(const std::string& text);

}  // namespace baermult

#endif
