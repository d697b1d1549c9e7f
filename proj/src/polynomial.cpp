#include "lgkit/polynomial.hpp"

#include "lgkit/error.hpp"

#include <algorithm>
#include <map>

namespace lgkit {

namespace {

using TermMap = std::map<Exponents, Rational>;

void accumulate(TermMap& acc, const Exponents& e, const Rational& c) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) acc.erase(it);
    } else if (c == 0) {
        acc.erase(it);
    }
}

Polynomial from_map(std::size_t num_vars, const TermMap& acc) {
    std::vector<Monomial> terms;
    terms.reserve(acc.size());
    for (const auto& [e, c] : acc) terms.push_back({e, c});
    return Polynomial::from_terms(num_vars, std::move(terms));
}

} // namespace

Polynomial Polynomial::from_terms(std::size_t num_vars, std::vector<Monomial> terms) {
    Polynomial p(num_vars);
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& a, const Monomial& b) { return a.exponents > b.exponents; });
    for (auto& t : terms) {
        if (t.exponents.size() != num_vars) {
            throw Error(ErrorKind::InvalidArgument, "monomial length does not match variable count");
        }
        if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e < 0; })) {
            throw Error(ErrorKind::InvalidArgument, "negative exponent");
        }
        if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
            p.terms_.back().coefficient += t.coefficient;
            if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
        } else if (t.coefficient != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::monomial(Exponents exponents, Rational coefficient) {
    const std::size_t n = exponents.size();
    return from_terms(n, {Monomial{std::move(exponents), std::move(coefficient)}});
}

Polynomial Polynomial::constant(std::size_t num_vars, const Rational& value) {
    return from_terms(num_vars, {Monomial{Exponents(num_vars, 0), value}});
}

bool Polynomial::has_constant_term() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Monomial& t) {
        return std::all_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e == 0; });
    });
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Monomial& t, const Exponents& key) { return t.exponents > key; });
    if (it != terms_.end() && it->exponents == e) return it->coefficient;
    return 0;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        if (t.exponents[var] == 0) continue;
        Monomial d = t;
        d.coefficient *= t.exponents[var];
        d.exponents[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(num_vars_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Monomial> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(num_vars_, std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + other * Rational(-1);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    TermMap acc;
    Exponents e(num_vars_);
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            for (std::size_t j = 0; j < num_vars_; ++j) e[j] = a.exponents[j] + b.exponents[j];
            accumulate(acc, e, a.coefficient * b.coefficient);
        }
    }
    return from_map(num_vars_, acc);
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    if (scalar == 0) return Polynomial(num_vars_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient *= scalar;
    return p;
}

Polynomial Polynomial::shifted(const Exponents& e) const {
    Polynomial p = *this;
    for (auto& t : p.terms_)
        for (std::size_t j = 0; j < num_vars_; ++j) t.exponents[j] += e[j];
    // adding a fixed vector preserves lexicographic order
    return p;
}

Polynomial Polynomial::restricted_to(const std::vector<std::size_t>& vars) const {
    std::vector<bool> keep(num_vars_, false);
    for (auto v : vars) keep[v] = true;
    Polynomial p(num_vars_);
    for (const auto& t : terms_) {
        bool supported = true;
        for (std::size_t j = 0; j < num_vars_; ++j) {
            if (t.exponents[j] != 0 && !keep[j]) {
                supported = false;
                break;
            }
        }
        if (supported) p.terms_.push_back(t);
    }
    return p;
}

Polynomial Polynomial::compressed(const std::vector<std::size_t>& vars) const {
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        Exponents e;
        e.reserve(vars.size());
        for (auto v : vars) e.push_back(t.exponents[v]);
        out.push_back({std::move(e), t.coefficient});
    }
    return from_terms(vars.size(), std::move(out));
}

ExponentMatrix exponent_matrix(const Polynomial& p) {
    ExponentMatrix m(p.size(), p.num_vars(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.num_vars(); ++j) m(i, j) = p.terms()[i].exponents[j];
    return m;
}

std::string format_monomial(const Exponents& e) {
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(j + 1);
        if (e[j] != 1) out += '^' + std::to_string(e[j]);
    }
    return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms()) {
        if (!out.empty()) out += " + ";
        const bool is_constant =
            std::all_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e == 0; });
        if (is_constant) {
            out += to_string(t.coefficient);
        } else if (t.coefficient == 1) {
            out += format_monomial(t.exponents);
        } else {
            out += to_string(t.coefficient) + "*" + format_monomial(t.exponents);
        }
    }
    return out;
}

Rational weighted_degree(const Exponents& e, const std::vector<Rational>& q) {
    Rational d = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] != 0) d += q[j] * e[j];
    return d;
}

} // namespace lgkit
