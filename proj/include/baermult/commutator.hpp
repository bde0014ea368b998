#ifndef BAERMULT_COMMUTATOR_HPP
#define BAERMULT_COMMUTATOR_HPP

#include "baermult/group_spec.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace baermult {

// Immutable commutator term over an ordered alphabet x_1 < x_2 < ...:
// either a single generator or [left, right]. Weight (leaf count) is cached
// at construction. Whether a term is *basic* is a property checked by
// is_basic(), not enforced by the type; enumeration helpers only ever hand
// out basic terms.
class Commutator {
public:
    using Ptr = std::shared_ptr<const Commutator>;

    static Ptr leaf(int generator_index);
    static Ptr node(Ptr left, Ptr right);

    bool is_leaf() const { return !left_; }
    int generator() const { return gen_; }
    const Ptr& left() const { return left_; }
    const Ptr& right() const { return right_; }
    int weight() const { return weight_; }

private:
    explicit Commutator(int gen) : weight_(1), gen_(gen) {}
    Commutator(Ptr l, Ptr r)
        : weight_(l->weight() + r->weight()), left_(std::move(l)), right_(std::move(r)) {}

    int weight_;
    int gen_ = 0;
    Ptr left_;
    Ptr right_;
};

// Total order: weight first, then generator index on leaves, then (left,
// right) lexicographically on equal-weight nodes. Returns <0, 0 or >0.
int compare(const Commutator& a, const Commutator& b);

inline bool tree_equal(const Commutator& a, const Commutator& b) { return compare(a, b) == 0; }

struct CommutatorLess {
    bool operator()(const Commutator::Ptr& a, const Commutator::Ptr& b) const {
        return compare(*a, *b) < 0;
    }
};

// Both defining conditions at every node: left > right, and if the left
// child is itself a node then left->right() <= right.
bool is_basic(const Commutator& term);

// All basic commutators on x_1..x_d with weight in [min_weight, max_weight],
// in increasing order. Per weight w the count equals witt_chi(w, d).
std::vector<Commutator::Ptr> generate_basic(int alphabet_size, int min_weight, int max_weight);

// Distinct generator indices occurring in the term, increasing.
std::vector<int> generators_in(const Commutator& term);

// Largest j such that the torsion generator x_{m+j} occurs; empty if the
// term only involves free generators.
std::optional<long long> max_torsion_index(const Commutator& term, const GroupSpec& spec);

// Nested-bracket rendering, e.g. "[[x2,x1],x2]".
std::string to_string(const Commutator& term);

// Inverse of to_string. Also accepts the left-normed shorthand
// "[a,b,c]" meaning "[[a,b],c]". Throws HypothesisError on bad syntax.
Commutator::Ptr parse_commutator(const std::string& text);

}  // namespace baermult

#endif
