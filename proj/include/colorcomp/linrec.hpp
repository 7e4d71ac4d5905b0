#pragma once

#include "colorcomp/seq.hpp"

namespace colorcomp {

// Order-r linear recurrence a_n = h_1 a_{n-1} + ... + h_r a_{n-r} with
// explicit initial terms a_0..a_{r-1}. Coefficients and initials are exact
// rationals so transformed recurrences with rational parameters stay exact.
class LinearRecurrence {
public:
    LinearRecurrence(RatSeq coeffs, RatSeq initials);

    long order() const noexcept { return static_cast<long>(coeffs_.size()); }
    const RatSeq& coeffs() const noexcept { return coeffs_; }
    const RatSeq& initials() const noexcept { return initials_; }

    RatSeq generate_exact(long n_terms) const;
    // Integral view; raises nonintegral if a term is a proper fraction.
    Seq generate(long n_terms) const;

    bool operator==(const LinearRecurrence&) const = default;

private:
    RatSeq coeffs_;
    RatSeq initials_;
};

// Transport of the interpolated Invert across a recurrence: the transformed
// sequence satisfies an order-r recurrence with coefficients
//   g_1 = h_1 + x a_0,  g_{i+1} = h_{i+1} + x (a_i - sum_{j=1}^i h_j a_{i-j}).
// Initials are materialized through the transform itself.
LinearRecurrence invert_linrec(const LinearRecurrence& rec, const mpq_class& x);

// r-bonacci numbers F^{(r)}: order-r all-ones recurrence, initials
// (0,...,0,1). Output index i holds F^{(r)}_{i+1} (the paper-style sequence
// starts at n = 1).
Seq rbonacci(long r, long n_terms);

// Checks that the inverse transform of F^{(r+1)} equals 0 followed by F^{(r)}.
bool rbonacci_inverse_identity_check(long r, long n_terms);

}  // namespace colorcomp
