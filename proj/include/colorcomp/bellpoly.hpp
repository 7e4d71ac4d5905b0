#pragma once

#include <map>
#include <string>
#include <vector>

#include "colorcomp/seq.hpp"

namespace colorcomp {

// Sparse multivariate polynomial over arbitrary-precision integers.
// Exponent vectors are dense, length nvars; no zero coefficients stored.
class MultiPoly {
public:
    using Exponents = std::vector<long>;
    using TermMap = std::map<Exponents, mpz_class>;

    explicit MultiPoly(long nvars) : nvars_(nvars) {}

    static MultiPoly constant(long nvars, const mpz_class& c);
    static MultiPoly variable(long nvars, long var_index);  // 1-based

    long nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents& exps, const mpz_class& coeff);

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;

    bool operator==(const MultiPoly&) const = default;

    mpz_class evaluate(const Seq& point) const;
    mpz_class coefficient_sum() const;

    // Canonical text: descending total degree, then ascending lexicographic
    // exponent order. Variables print as <prefix>1, <prefix>2, ...
    std::string to_string(const std::string& var_prefix = "t") const;

private:
    long nvars_;
    TermMap terms_;
};

// Partial ordinary Bell polynomial B_{n,k} in variables t_1..t_n:
// coefficient of t_1^{i_1}...t_n^{i_n} is k!/(i_1!...i_n!) over solutions of
// i_1 + 2 i_2 + ... + n i_n = n with i_1 + ... + i_n = k.
MultiPoly bell_partial(long n, long k);

// Complete ordinary Bell polynomial B_n = sum_{k=1}^n B_{n,k}.
MultiPoly bell_complete(long n);

// A_n(x_1..x_n) built by the recurrence A_m = x_1 A_{m-1} + ... + x_m with
// A_0 = 1. Structurally equal to bell_complete(n).
MultiPoly composition_polynomial(long n);

// Formal partial derivative with respect to variable var_index (1-based).
MultiPoly partial_derivative(const MultiPoly& p, long var_index);

// Multinomial coefficient (k_1,...,k_m)! = (sum k)! / prod k_i!.
mpz_class multinomial(const std::vector<long>& k);

}  // namespace colorcomp
