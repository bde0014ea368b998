#ifndef BAERMULT_HALL_ENGINE_HPP
#define BAERMULT_HALL_ENGINE_HPP

#include "baermult/arith.hpp"
#include "baermult/commutator.hpp"
#include "baermult/group_spec.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace baermult {

// Size guards for the free-nilpotent engine. Basic-commutator counts grow
// fast; these defaults keep everything at desk scale.
struct EngineLimits {
    int max_class = 6;
    int max_alphabet = 4;
    std::size_t max_basis = 5000;
};

namespace detail {
struct Series;
struct WeightSolver;
}  // namespace detail

// The Hall basis of the free group on x_1..x_d, nilpotent of class <= cap:
// all basic commutators of weight 1..cap in term order. Element normal forms
// are exponent vectors over this list. Built once, then read-only; the
// cached per-element data is filled lazily and idempotently.
class HallBasis {
public:
    HallBasis(int alphabet_size, int class_cap, EngineLimits limits = {});
    ~HallBasis();

    HallBasis(const HallBasis&) = delete;
    HallBasis& operator=(const HallBasis&) = delete;

    int alphabet_size() const { return alphabet_; }
    int class_cap() const { return cap_; }
    std::size_t size() const { return elements_.size(); }
    const Commutator::Ptr& element(std::size_t position) const { return elements_.at(position); }
    const std::vector<Commutator::Ptr>& elements() const { return elements_; }

    std::optional<std::size_t> position_of(const Commutator& term) const;

    // Positions [first, last) of the weight-w elements.
    std::pair<std::size_t, std::size_t> weight_window(int w) const;

private:
    friend struct EngineOps;

    const detail::Series& series_of(std::size_t position) const;
    const detail::WeightSolver& solver_for(int weight) const;

    int alphabet_;
    int cap_;
    std::vector<Commutator::Ptr> elements_;
    std::vector<std::size_t> weight_begin_;

    mutable std::recursive_mutex cache_mu_;
    mutable std::vector<std::unique_ptr<detail::Series>> series_;
    mutable std::vector<std::unique_ptr<detail::WeightSolver>> solvers_;
};

std::shared_ptr<const HallBasis> build_basis(int alphabet_size, int class_cap,
                                             EngineLimits limits = {});

// An element of the free nilpotent group in Hall normal form: the ordered
// product element(0)^e0 * element(1)^e1 * ... Exponents are sparse; two
// elements over the same basis are equal iff their exponent maps are equal.
// Values are immutable.
class GroupElement {
public:
    explicit GroupElement(std::shared_ptr<const HallBasis> basis)
        : basis_(std::move(basis)) {}
    GroupElement(std::shared_ptr<const HallBasis> basis, std::map<std::size_t, BigInt> exponents);

    const HallBasis& basis() const { return *basis_; }
    const std::shared_ptr<const HallBasis>& basis_ptr() const { return basis_; }
    const std::map<std::size_t, BigInt>& exponents() const { return exps_; }
    bool is_identity() const { return exps_.empty(); }
    BigInt exponent(std::size_t position) const;

private:
    std::shared_ptr<const HallBasis> basis_;
    std::map<std::size_t, BigInt> exps_;
};

bool operator==(const GroupElement& a, const GroupElement& b);
inline bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

GroupElement identity(std::shared_ptr<const HallBasis> basis);
GroupElement generator_element(std::shared_ptr<const HallBasis> basis, int generator_index);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement power(const GroupElement& a, const BigInt& k);

// [a, b] = a^-1 b^-1 a b, truncated at the class cap. With this convention
// x2 x1 = x1 x2 [x2,x1] and commutator(x2, x1) has exponent +1 on [x2,x1].
GroupElement commutator(const GroupElement& a, const GroupElement& b);

// Evaluates an arbitrary commutator term over the generators: leaves map to
// generator elements, nodes to commutator(). Weight beyond the cap truncates
// to the identity.
GroupElement evaluate(std::shared_ptr<const HallBasis> basis, const Commutator& term);

std::string to_string(const GroupElement& e);

// Memoized normal forms of [element(i), element(j)] for basis pairs.
// Concurrent lookups are safe; fills are idempotent.
class StructureTable {
public:
    explicit StructureTable(std::shared_ptr<const HallBasis> basis) : basis_(std::move(basis)) {}

    const GroupElement& commutator_of(std::size_t i, std::size_t j) const;
    std::size_t entries() const;

private:
    std::shared_ptr<const HallBasis> basis_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<std::size_t, std::size_t>, GroupElement> memo_;
};

// (a) per-weight element counts against the Witt formula, and (b) collection
// normal forms behave as group normal forms on a randomized sample
// (associativity triples and inverse round-trips). True iff everything holds.
bool verify_hall_ranks(int alphabet_size, int class_cap, int samples = 200,
                       std::uint64_t seed = 0x5eed5eedULL, EngineLimits limits = {});

// Quotient by the torsion relators: each coordinate whose basic commutator
// contains a torsion generator is reduced into [0, r_j) for the highest
// torsion index j occurring in it; free-only coordinates are untouched.
// Requires the divisibility chain and (p, r_1) = 1 for every prime
// p <= class cap; refuses otherwise rather than producing a wrong form.
GroupElement reduce_mod_torsion(const GroupElement& e, const GroupSpec& spec);

struct OrderBoundResult {
    bool holds = false;
    bool applicable = true;  // false when a free generator occurs (gcd treated as 0)
};

// Checks u^N = 1 in the torsion quotient, N = gcd of the orders of the
// generators appearing in the outer commutator u. Needs class cap >= wt(u).
OrderBoundResult order_bound_check(const Commutator& word, const GroupSpec& spec,
                                   std::shared_ptr<const HallBasis> basis);
OrderBoundResult order_bound_check(const Commutator& word, const GroupSpec& spec, int class_cap);

// Every bracketing of every generator tuple with weight in the window; used
// for exhaustive order-bound sweeps. Not restricted to basic terms.
std::vector<Commutator::Ptr> all_commutator_words(int alphabet_size, int min_weight,
                                                  int max_weight);

}  // namespace baermult

#endif
