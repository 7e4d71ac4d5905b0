#pragma once

#include <optional>
#include <variant>

#include "colorcomp/seq.hpp"

namespace colorcomp {

// b(t) = a(t) / (1 - x t a(t)), computed by the recurrence
//   b_0 = a_0,  b_n = a_n + x * sum_{j=0}^{n-1} a_{n-1-j} b_j.
// All arithmetic is exact rational.
RatSeq invert_interpolated_exact(const RatSeq& a, const mpq_class& x, long n_terms);

// Same, but over integers; raises nonintegral if x is a proper fraction and
// some term does not come out integral.
Seq invert_interpolated(const Seq& a, const mpq_class& x, long n_terms);

// x = 1.
Seq invert(const Seq& a, long n_terms);

// First negative term of the inverse transform, refuting that the input
// counts colored compositions.
struct RefutationWitness {
    long index;
    mpz_class value;
};

// Either the coloration prefix (x_1..x_len) or a refutation witness.
using ColorationVerdict = std::variant<Seq, RefutationWitness>;

// Inverse-based criterion: a counts colored compositions of some coloration
// iff the inverse transform of a is non-negative, and then that inverse is
// the coloration. Verdict applies to the supplied prefix only.
ColorationVerdict coloration_of(const Seq& a);

// A_1(X)..A_{n_terms}(X): materialize a_n = x_{n+1} and apply invert.
Seq count_from_coloration(const Coloration& x, long n_terms);

// Oracle for the transform: coefficients of a(t) / (1 - x t a(t)) by
// truncated power-series long division. Independent of the recurrence path.
RatSeq invert_series_division(const RatSeq& a, const mpq_class& x, long n_terms);

}  // namespace colorcomp
