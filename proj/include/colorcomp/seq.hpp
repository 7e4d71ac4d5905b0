#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "colorcomp/error.hpp"

namespace colorcomp {

// Finite prefix of an integer sequence, index 0 first. Terms may be negative.
using Seq = std::vector<mpz_class>;
using RatSeq = std::vector<mpq_class>;

// Number of colors available for each part size. x_1 is the color count of
// part size 1 (1-based). Entries after the prefix repeat the tail cyclically,
// so (1,1,0,0,...), (1,1,1,...) and (1,0,1,0,...) are all representable.
class Coloration {
public:
    Coloration(Seq prefix, Seq tail);

    // x_i for i >= 1.
    const mpz_class& value_at(long i) const;

    const Seq& prefix() const noexcept { return prefix_; }
    const Seq& tail() const noexcept { return tail_; }

    // (x_1, ..., x_n) as a flat sequence.
    Seq first_values(long n) const;

    bool operator==(const Coloration&) const = default;

private:
    Seq prefix_;
    Seq tail_;
};

// Cauchy product; output length = min(len a, len b).
Seq convolve(const Seq& a, const Seq& b);

// Drops the index-0 term.
Seq sigma(const Seq& a);

// Term-wise difference of equal-length sequences.
Seq subtract(const Seq& a, const Seq& b);

Seq parse_terms(const std::string& comma_list);
std::string format_terms(const Seq& a, const std::string& sep = ",");

}  // namespace colorcomp
