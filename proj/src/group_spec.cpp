#include "baermult/group_spec.hpp"

#include "baermult/errors.hpp"

#include <cctype>
#include <sstream>

namespace baermult {

long long GroupSpec::torsion_order(long long generator_index) const {
    if (generator_index < 1 || generator_index > alphabet_size())
        throw EngineError("generator index out of range");
    if (generator_index <= m) return 0;
    return torsion[static_cast<std::size_t>(generator_index - m - 1)];
}

bool GroupSpec::chain_ok() const {
    for (std::size_t i = 0; i + 1 < torsion.size(); ++i)
        if (torsion[i] % torsion[i + 1] != 0) return false;
    return true;
}

void GroupSpec::validate_shape() const {
    if (m < 0) throw HypothesisError("group spec: m must be >= 0");
    if (n < 1) throw HypothesisError("group spec: n must be >= 1");
    if (alphabet_size() < 1) throw HypothesisError("group spec: need at least one factor");
    for (long long r : torsion)
        if (r < 2) throw HypothesisError("group spec: torsion orders must be >= 2");
}

std::string GroupSpec::describe() const {
    std::ostringstream os;
    bool first = true;
    if (m > 0) {
        os << "Z";
        if (m > 1) os << "^" << m;
        first = false;
    }
    for (long long r : torsion) {
        if (!first) os << " * ";
        os << "Z" << r;
        first = false;
    }
    os << " @ n=" << n;
    return os.str();
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.m == b.m && a.n == b.n && a.torsion == b.torsion;
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

long long parse_int(const std::string& s, std::size_t& i, const char* what) {
    skip_ws(s, i);
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw HypothesisError(std::string("group expression: expected ") + what);
    return std::stoll(s.substr(start, i - start));
}

}  // namespace

GroupSpec parse_group_expr(const std::string& text) {
    GroupSpec spec;
    spec.n = 0;
    std::size_t i = 0;
    bool expect_factor = true;
    while (true) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] == '@') {
            ++i;
            skip_ws(text, i);
            if (i >= text.size() || text[i] != 'n')
                throw HypothesisError("group expression: expected n=<degree> after '@'");
            ++i;
            skip_ws(text, i);
            if (i >= text.size() || text[i] != '=')
                throw HypothesisError("group expression: expected '=' in degree clause");
            ++i;
            spec.n = parse_int(text, i, "degree");
            skip_ws(text, i);
            if (i != text.size())
                throw HypothesisError("group expression: trailing input after degree");
            break;
        }
        if (!expect_factor)
            throw HypothesisError("group expression: expected '*' or '@'");
        if (text[i] != 'Z')
            throw HypothesisError("group expression: factors start with 'Z'");
        ++i;
        if (i < text.size() && text[i] == '^') {
            ++i;
            spec.m += parse_int(text, i, "free multiplicity");
        } else if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            spec.torsion.push_back(parse_int(text, i, "torsion order"));
        } else {
            spec.m += 1;
        }
        expect_factor = false;
        skip_ws(text, i);
        if (i < text.size() && text[i] == '*') {
            ++i;
            expect_factor = true;
        }
    }
    if (spec.n < 1)
        throw HypothesisError("group expression: missing or invalid '@ n=<degree>' clause");
    spec.validate_shape();
    return spec;
}

}  // namespace baermult
