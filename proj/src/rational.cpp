#include "lgkit/rational.hpp"

namespace lgkit {

std::string to_string(const Rational& r) {
    // mpq_class keeps canonical form after every arithmetic operation.
    return r.get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Rational mod_one(const Rational& r) {
    Integer floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rational(floor_value);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer common_denominator(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    return l;
}

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

} // namespace lgkit
