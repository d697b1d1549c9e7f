#include "lgkit/error.hpp"
#include "lgkit/polynomial.hpp"

#include <cctype>
#include <limits>
#include <map>

namespace lgkit {

namespace {

constexpr std::size_t kMaxVariables = 64;
constexpr int kMaxExponent = 1 << 20;

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars_.push_back(text[i]);
            origin_.push_back(i);
        }
        origin_.push_back(text.size());
    }

    struct RawTerm {
        std::map<std::size_t, long> powers; // 1-based variable index -> exponent
        Rational coefficient{1};
        std::size_t position = 0;
    };

    std::vector<RawTerm> parse() {
        if (chars_.empty()) fail("empty input");
        std::vector<RawTerm> terms;
        terms.push_back(term(false));
        while (!at_end()) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                terms.push_back(term(false));
            } else if (c == '-') {
                ++pos_;
                terms.push_back(term(true));
            } else {
                fail(std::string("unexpected '") + c + "'");
            }
        }
        return terms;
    }

    bool used_aliases() const { return aliases_; }
    bool used_indices() const { return indices_; }
    std::size_t alias_position() const { return alias_pos_; }
    std::size_t index_position() const { return index_pos_; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t stripped, const std::string& message) const {
        throw ParseError(origin_[std::min(stripped, origin_.size() - 1)], message);
    }

    std::size_t original(std::size_t stripped) const { return origin_[stripped]; }

private:
    bool at_end() const { return pos_ >= chars_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < chars_.size() ? chars_[pos_ + ahead] : '\0';
    }
    bool is_digit(std::size_t ahead) const {
        return std::isdigit(static_cast<unsigned char>(peek(ahead))) != 0;
    }

    RawTerm term(bool negate) {
        RawTerm t;
        t.position = pos_;
        if (peek() == '-' && !is_digit(1)) {
            ++pos_;
            negate = !negate;
        }
        if (at_end()) fail("expected a term");
        if (peek() == '-' || is_digit(0)) {
            t.coefficient = coeff();
            if (peek() != '*') {
                // bare coefficient: a constant term
                if (negate) t.coefficient = -t.coefficient;
                return t;
            }
            ++pos_;
        }
        factor(t);
        while (peek() == '*') {
            ++pos_;
            factor(t);
        }
        if (negate) t.coefficient = -t.coefficient;
        return t;
    }

    Rational coeff() {
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        if (!is_digit(0)) fail("expected digits");
        Integer num(digits());
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            if (!is_digit(0)) fail("expected denominator digits");
            const std::size_t at = pos_;
            den = Integer(digits());
            if (den == 0) fail_at(at, "zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        return negative ? Rational(-r) : r;
    }

    std::string digits() {
        std::string s;
        while (is_digit(0)) s.push_back(chars_[pos_++]);
        return s;
    }

    long small_uint(const char* what) {
        const std::size_t at = pos_;
        if (!is_digit(0)) fail(std::string("expected ") + what);
        const std::string s = digits();
        if (s.size() > 9) fail_at(at, std::string(what) + " too large");
        return std::stol(s);
    }

    void factor(RawTerm& t) {
        const std::size_t at = pos_;
        std::size_t index = 0;
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            if (is_digit(0)) {
                const long v = small_uint("variable index");
                if (v < 1) fail_at(at, "variable indices start at 1");
                if (v > static_cast<long>(kMaxVariables)) fail_at(at, "variable index too large");
                index = static_cast<std::size_t>(v);
                if (!indices_) index_pos_ = at;
                indices_ = true;
            } else {
                index = 1;
                note_alias(at);
            }
        } else if (c == 'y' || c == 'z' || c == 'w') {
            ++pos_;
            index = c == 'y' ? 2 : c == 'z' ? 3 : 4;
            note_alias(at);
        } else {
            fail("expected a variable");
        }
        long power = 1;
        if (peek() == '^') {
            ++pos_;
            power = small_uint("exponent");
        }
        long& slot = t.powers[index];
        if (slot + power > kMaxExponent) fail_at(at, "exponent too large");
        slot += power;
    }

    void note_alias(std::size_t at) {
        if (!aliases_) alias_pos_ = at;
        aliases_ = true;
    }

    std::vector<char> chars_;
    std::vector<std::size_t> origin_;
    std::size_t pos_ = 0;
    bool aliases_ = false;
    bool indices_ = false;
    std::size_t alias_pos_ = 0;
    std::size_t index_pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> num_vars) {
    PolynomialParser parser(text);
    auto raw = parser.parse();

    if (parser.used_aliases() && parser.used_indices()) {
        const auto at = std::max(parser.alias_position(), parser.index_position());
        parser.fail_at(at, "mixed variable naming (x,y,z,w aliases together with indexed x<k>)");
    }

    std::size_t max_index = 0;
    for (const auto& t : raw)
        for (const auto& [v, e] : t.powers) max_index = std::max(max_index, v);
    if (max_index == 0) max_index = 1;

    std::size_t n = max_index;
    if (num_vars) {
        if (*num_vars == 0) throw Error(ErrorKind::InvalidArgument, "variable count must be positive");
        if (max_index > *num_vars) {
            for (const auto& t : raw)
                for (const auto& [v, e] : t.powers)
                    if (v > *num_vars)
                        parser.fail_at(t.position, "variable index " + std::to_string(v) +
                                                       " exceeds declared count " +
                                                       std::to_string(*num_vars));
        }
        n = *num_vars;
    }

    std::vector<Monomial> terms;
    terms.reserve(raw.size());
    for (const auto& t : raw) {
        Exponents e(n, 0);
        for (const auto& [v, p] : t.powers) e[v - 1] = static_cast<int>(p);
        terms.push_back({std::move(e), t.coefficient});
    }
    Polynomial p = Polynomial::from_terms(n, std::move(terms));
    if (p.is_zero()) throw ParseError(parser.original(0), "zero polynomial");
    if (p.has_constant_term()) {
        for (const auto& t : raw) {
            bool constant = true;
            for (const auto& [v, e] : t.powers) constant = constant && e == 0;
            if (constant) parser.fail_at(t.position, "constant term");
        }
        throw ParseError(parser.original(0), "constant term");
    }
    return p;
}

} // namespace lgkit
