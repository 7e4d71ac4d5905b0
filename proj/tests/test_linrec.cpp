#include <doctest.h>

#include <random>

#include "colorcomp/compositions.hpp"
#include "colorcomp/linrec.hpp"
#include "colorcomp/transforms.hpp"

using namespace colorcomp;

namespace {

Seq seq_of(std::initializer_list<long> values) {
    Seq out;
    for (long v : values) out.emplace_back(v);
    return out;
}

RatSeq rat_of(std::initializer_list<long> values) {
    RatSeq out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("generate unrolls the recurrence") {
    const LinearRecurrence fib(rat_of({1, 1}), rat_of({0, 1}));
    CHECK(fib.generate(8) == seq_of({0, 1, 1, 2, 3, 5, 8, 13}));

    const LinearRecurrence trib(rat_of({1, 1, 1}), rat_of({0, 0, 1}));
    CHECK(trib.generate(8) == seq_of({0, 0, 1, 1, 2, 4, 7, 13}));

    const LinearRecurrence constant(rat_of({1}), rat_of({4}));
    CHECK(constant.generate(5) == seq_of({4, 4, 4, 4, 4}));

    CHECK_THROWS_AS(LinearRecurrence(RatSeq{}, RatSeq{}), Error);
    CHECK_THROWS_AS(LinearRecurrence(rat_of({1, 1}), rat_of({0})), Error);
}

TEST_CASE("invert_linrec transforms the constant recurrence") {
    const LinearRecurrence constant(rat_of({1}), rat_of({3}));
    const LinearRecurrence counted = invert_linrec(constant, 1);
    CHECK(counted.coeffs() == rat_of({4}));  // characteristic t - (k+1)
    CHECK(counted.initials() == rat_of({3}));
    // k(k+1)^(n-1)
    CHECK(counted.generate(5) == seq_of({3, 12, 48, 192, 768}));
}

TEST_CASE("invert_linrec transforms the avoid-k recurrence") {
    // coloration (1,...,1,0,1,1,...) with the zero at position k: order k+1,
    // characteristic polynomial t^(k+1) - t^k, initials x_1..x_(k+1)
    for (long k = 2; k <= 4; ++k) {
        RatSeq coeffs(k + 1, 0);
        coeffs[0] = 1;
        RatSeq initials(k + 1, 1);
        initials[k - 1] = 0;
        const LinearRecurrence avoid(coeffs, initials);
        const LinearRecurrence counted = invert_linrec(avoid, 1);
        // characteristic polynomial t^(k+1) - 2 t^k + t - 1
        RatSeq expected(k + 1, 0);
        expected[0] = 2;
        expected[k - 1] = -1;
        expected[k] = 1;
        CHECK(counted.coeffs() == expected);
    }
}

TEST_CASE("invert_linrec with x = 0 is the identity") {
    const LinearRecurrence rec(rat_of({2, -1, 3}), rat_of({1, 0, 2}));
    const LinearRecurrence same = invert_linrec(rec, 0);
    CHECK(same.coeffs() == rec.coeffs());
    CHECK(same.initials() == rec.initials());
}

TEST_CASE("transported recurrence matches the term-wise transform") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<long> small(-3, 3);
    const long params[] = {1, -1, 2};
    for (int trial = 0; trial < 30; ++trial) {
        const long r = 1 + rng() % 4;
        RatSeq coeffs(r), initials(r);
        for (auto& c : coeffs) c = small(rng);
        for (auto& a : initials) a = small(rng);
        if (coeffs.back() == 0) coeffs.back() = 1;
        const LinearRecurrence rec(coeffs, initials);
        for (long x : params) {
            const LinearRecurrence transported = invert_linrec(rec, x);
            const RatSeq direct = invert_interpolated_exact(
                rec.generate_exact(15), x, 15);
            CHECK(transported.generate_exact(15) == direct);
        }
    }
}

TEST_CASE("proposition-1 closed form end to end") {
    for (long k = 1; k <= 5; ++k) {
        const Coloration constant(Seq{}, Seq{mpz_class(k)});
        const Seq counts = count_from_coloration(constant, 10);
        mpz_class expect = k;
        for (long n = 1; n <= 10; ++n) {
            CHECK(counts[n - 1] == expect);
            expect *= k + 1;
        }
    }
}

TEST_CASE("avoid-k counts satisfy the forbidden-part recurrence shape") {
    for (long k = 2; k <= 4; ++k) {
        Seq prefix(k, 1);
        prefix[k - 1] = 0;
        const Coloration avoid(prefix, Seq{mpz_class(1)});
        // initial terms come from enumeration, not from a closed form
        Seq counts{1};  // A_0
        for (long n = 1; n <= 15; ++n)
            counts.push_back(enumerate_compositions(avoid, n).size());
        for (long n = k + 1; n <= 15; ++n)
            CHECK(counts[n] == 2 * counts[n - 1] - counts[n - k] +
                                   counts[n - k - 1]);
    }
}

TEST_CASE("rbonacci sequences") {
    CHECK(rbonacci(2, 8) == seq_of({0, 1, 1, 2, 3, 5, 8, 13}));
    CHECK(rbonacci(3, 8) == seq_of({0, 0, 1, 1, 2, 4, 7, 13}));
    CHECK(rbonacci(4, 5) == seq_of({0, 0, 0, 1, 1}));
    CHECK_THROWS_AS(rbonacci(1, 5), Error);
}

TEST_CASE("rbonacci inverse identity") {
    for (long r = 2; r <= 4; ++r)
        CHECK(rbonacci_inverse_identity_check(r, 12));
    CHECK(rbonacci_inverse_identity_check(2, 10));
    CHECK(rbonacci_inverse_identity_check(3, 10));
    // negative control: misaligned input is rejected
    Seq misaligned = rbonacci(3, 10);
    misaligned.erase(misaligned.begin());
    misaligned.push_back(misaligned.back() * 2);
    Seq expected = rbonacci(2, 9);
    expected.insert(expected.begin(), 0);
    CHECK(invert_interpolated(misaligned, -1, 10) != expected);
}
