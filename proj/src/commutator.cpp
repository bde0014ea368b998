#include "baermult/commutator.hpp"

#include "baermult/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace baermult {

Commutator::Ptr Commutator::leaf(int generator_index) {
    if (generator_index < 1) throw EngineError("generator indices are 1-based");
    return Ptr(new Commutator(generator_index));
}

Commutator::Ptr Commutator::node(Ptr left, Ptr right) {
    if (!left || !right) throw EngineError("null commutator component");
    return Ptr(new Commutator(std::move(left), std::move(right)));
}

int compare(const Commutator& a, const Commutator& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight() ? -1 : 1;
    if (a.is_leaf()) return a.generator() - b.generator();
    int c = compare(*a.left(), *b.left());
    if (c != 0) return c;
    return compare(*a.right(), *b.right());
}

bool is_basic(const Commutator& term) {
    if (term.is_leaf()) return true;
    const Commutator& l = *term.left();
    const Commutator& r = *term.right();
    if (!is_basic(l) || !is_basic(r)) return false;
    if (compare(l, r) <= 0) return false;
    if (!l.is_leaf() && compare(*l.right(), r) > 0) return false;
    return true;
}

std::vector<Commutator::Ptr> generate_basic(int alphabet_size, int min_weight, int max_weight) {
    if (alphabet_size < 0) throw EngineError("alphabet size must be >= 0");
    if (min_weight < 1 || min_weight > max_weight)
        throw EngineError("generate_basic: bad weight window");

    std::vector<std::vector<Commutator::Ptr>> by_weight(static_cast<std::size_t>(max_weight) + 1);
    for (int g = 1; g <= alphabet_size; ++g) by_weight[1].push_back(Commutator::leaf(g));
    for (int w = 2; w <= max_weight; ++w) {
        auto& out = by_weight[static_cast<std::size_t>(w)];
        for (int wl = 1; wl < w; ++wl) {
            for (const auto& l : by_weight[static_cast<std::size_t>(wl)]) {
                for (const auto& r : by_weight[static_cast<std::size_t>(w - wl)]) {
                    if (compare(*l, *r) <= 0) continue;
                    if (!l->is_leaf() && compare(*l->right(), *r) > 0) continue;
                    out.push_back(Commutator::node(l, r));
                }
            }
        }
        std::sort(out.begin(), out.end(), CommutatorLess{});
    }

    std::vector<Commutator::Ptr> result;
    for (int w = min_weight; w <= max_weight; ++w)
        for (auto& t : by_weight[static_cast<std::size_t>(w)]) result.push_back(std::move(t));
    return result;
}

namespace {

void collect_generators(const Commutator& term, std::set<int>& out) {
    if (term.is_leaf()) {
        out.insert(term.generator());
        return;
    }
    collect_generators(*term.left(), out);
    collect_generators(*term.right(), out);
}

}  // namespace

std::vector<int> generators_in(const Commutator& term) {
    std::set<int> s;
    collect_generators(term, s);
    return {s.begin(), s.end()};
}

std::optional<long long> max_torsion_index(const Commutator& term, const GroupSpec& spec) {
    long long best = 0;
    for (int g : generators_in(term)) {
        if (g > spec.alphabet_size()) throw EngineError("term uses a generator outside the spec");
        if (g > spec.m) best = std::max(best, g - spec.m);
    }
    if (best == 0) return std::nullopt;
    return best;
}

std::string to_string(const Commutator& term) {
    if (term.is_leaf()) {
        std::ostringstream os;
        os << "x" << term.generator();
        return os.str();
    }
    return "[" + to_string(*term.left()) + "," + to_string(*term.right()) + "]";
}

namespace {

Commutator::Ptr parse_term(const std::string& s, std::size_t& i);

void skip_spaces(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Commutator::Ptr parse_term(const std::string& s, std::size_t& i) {
    skip_spaces(s, i);
    if (i >= s.size()) throw HypothesisError("commutator: unexpected end of input");
    if (s[i] == '[') {
        ++i;
        auto acc = parse_term(s, i);
        skip_spaces(s, i);
        int components = 1;
        while (i < s.size() && s[i] == ',') {
            ++i;
            auto next = parse_term(s, i);
            acc = Commutator::node(std::move(acc), std::move(next));
            ++components;
            skip_spaces(s, i);
        }
        if (components < 2) throw HypothesisError("commutator: brackets need >= 2 components");
        if (i >= s.size() || s[i] != ']') throw HypothesisError("commutator: missing ']'");
        ++i;
        return acc;
    }
    if (s[i] == 'x') {
        ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw HypothesisError("commutator: expected generator index after 'x'");
        return Commutator::leaf(std::stoi(s.substr(start, i - start)));
    }
    throw HypothesisError("commutator: expected 'x<k>' or '['");
}

}  // namespace

Commutator::Ptr parse_commutator(const std::string& text) {
    std::size_t i = 0;
    auto t = parse_term(text, i);
    skip_spaces(text, i);
    if (i != text.size()) throw HypothesisError("commutator: trailing input");
    return t;
}

}  // namespace baermult
