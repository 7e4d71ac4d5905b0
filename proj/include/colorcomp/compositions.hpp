#pragma once

#include <string>
#include <vector>

#include "colorcomp/seq.hpp"

namespace colorcomp {

// One part of a colored composition. color >= 1 indexes into the coloration's
// budget for this size; color == 0 is the distinguished black square, which
// always has size 1.
struct Part {
    long size;
    mpz_class color;

    bool is_black() const { return color == 0; }
    bool operator==(const Part&) const = default;
};

struct ColoredComposition {
    std::vector<Part> parts;

    long part_count() const { return static_cast<long>(parts.size()); }
    long breakpoint_count() const { return part_count() + 1; }
    bool operator==(const ColoredComposition&) const = default;
};

// "size_color" tokens separated by spaces, black square as "B".
std::string render(const ColoredComposition& c);

inline constexpr long kDefaultEnumerationCap = 1'000'000;

// All of L_n(X), parts left to right with sizes then colors ascending.
// n = 0 yields the single empty composition. Raises a cap error if the
// output would exceed cap objects.
std::vector<ColoredComposition> enumerate_compositions(
    const Coloration& x, long n, long cap = kDefaultEnumerationCap);

// All of M_n(X): every element of L_{n-1}(X) with the black square inserted
// at each break point, in that order.
std::vector<ColoredComposition> enumerate_blacktie(
    const Coloration& x, long n, long cap = kDefaultEnumerationCap);

// A_n(X) by the recurrence A_m = x_1 A_{m-1} + ... + x_m, A_0 = 1.
mpz_class count_recurrence(const Coloration& x, long n);

// A_n(X) by the explicit multinomial sum.
mpz_class count_multinomial(const Coloration& x, long n);

// A_0..A_n as a sequence.
Seq count_prefix(const Coloration& x, long n);

// P_n(X) = (A*A)_n - A_n.
mpz_class parts_total(const Coloration& x, long n);

// R_n(X) = P_n(X) + A_n(X), defined for n >= 1.
mpz_class breakpoints_total(const Coloration& x, long n);

// B_n(X): 0 for n = 0, (A*A)_{n-1} for n >= 1.
mpz_class blacktie_count(const Coloration& x, long n);

// B_n(X) by the break-point-weighted multinomial sum.
mpz_class blacktie_count_t5(const Coloration& x, long n);

// B_n(X) by the replace-a-size-1-part multinomial sum (k_1 >= 1 terms only).
mpz_class blacktie_count_t6(const Coloration& x, long n);

// A_n, P_n, R_n, B_n together.
struct CountBundle {
    long n;
    mpz_class compositions;   // A_n
    mpz_class parts;          // P_n
    mpz_class breakpoints;    // R_n
    mpz_class blacktie;       // B_n
};

CountBundle count_bundle(const Coloration& x, long n);

}  // namespace colorcomp
