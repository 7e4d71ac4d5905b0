#include <doctest.h>

#include <random>
#include <set>

#include "colorcomp/compositions.hpp"
#include "colorcomp/transforms.hpp"
#include "oracle.hpp"

using namespace colorcomp;

namespace {

Seq seq_of(std::initializer_list<long> values) {
    Seq out;
    for (long v : values) out.emplace_back(v);
    return out;
}

Coloration catalan8() {
    return Coloration(seq_of({1, 1, 2, 5, 14, 42, 132, 429}), seq_of({0}));
}

// random coloration in the acceptance shape: prefix length <= 5, entries
// 0..3, tail (0) or (1)
Coloration random_coloration(std::mt19937& rng) {
    Seq prefix(rng() % 6);
    for (auto& e : prefix) e = rng() % 4;
    return Coloration(std::move(prefix), seq_of({static_cast<long>(rng() % 2)}));
}

std::vector<long> first_entries(const Coloration& x, long n) {
    std::vector<long> out;
    for (long i = 1; i <= n; ++i) out.push_back(x.value_at(i).get_si());
    return out;
}

}  // namespace

TEST_CASE("enumerate_compositions fixtures") {
    const auto cat4 = enumerate_compositions(catalan8(), 4);
    CHECK(cat4.size() == 14);
    std::set<std::string> rendered;
    for (const auto& c : cat4) rendered.insert(render(c));
    CHECK(rendered.size() == 14);  // all distinct
    CHECK(rendered.count("1_1 1_1 1_1 1_1") == 1);
    CHECK(rendered.count("2_1 2_1") == 1);
    CHECK(rendered.count("1_1 3_1") == 1);
    CHECK(rendered.count("3_2 1_1") == 1);
    for (long color = 1; color <= 5; ++color)
        CHECK(rendered.count("4_" + std::to_string(color)) == 1);

    const auto empty = enumerate_compositions(catalan8(), 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].parts.empty());

    const Coloration zero(Seq{}, seq_of({0}));
    CHECK(enumerate_compositions(zero, 3).empty());
}

TEST_CASE("enumeration order is deterministic: sizes then colors ascending") {
    const Coloration x(seq_of({2, 1}), seq_of({0}));
    const auto all = enumerate_compositions(x, 2);
    std::vector<std::string> rendered;
    for (const auto& c : all) rendered.push_back(render(c));
    CHECK(rendered == std::vector<std::string>{"1_1 1_1", "1_1 1_2", "1_2 1_1",
                                               "1_2 1_2", "2_1"});
}

TEST_CASE("enumeration cap is an explicit error") {
    const Coloration ones(Seq{}, seq_of({1}));
    CHECK_THROWS_AS(enumerate_compositions(ones, 12, 100), Error);
    try {
        enumerate_compositions(ones, 12, 100);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::cap);
    }
    CHECK_THROWS_AS(enumerate_blacktie(ones, 12, 50), Error);
}

TEST_CASE("count_recurrence fixtures") {
    CHECK(count_recurrence(catalan8(), 4) == 14);
    const Coloration two(Seq{}, seq_of({2}));
    CHECK(count_recurrence(two, 3) == 18);  // k(k+1)^(n-1)
    CHECK(count_recurrence(two, 0) == 1);
}

TEST_CASE("count_multinomial fixtures") {
    const Coloration fib(seq_of({1, 1}), seq_of({0}));
    CHECK(count_multinomial(fib, 5) == 8);
    const Coloration ones(Seq{}, seq_of({1}));
    CHECK(count_multinomial(ones, 6) == 32);
    const Coloration x(seq_of({7}), seq_of({0}));
    CHECK(count_multinomial(x, 1) == 7);
}

TEST_CASE("parts_total fixtures") {
    const Coloration fib(seq_of({1, 1}), seq_of({0}));
    CHECK(parts_total(fib, 5) == 30);
    CHECK(parts_total(fib, 0) == 0);
    const Seq expected = seq_of({0, 1, 3, 9, 28, 90, 297, 1001, 3432, 11934});
    const Coloration cat(seq_of({1, 1, 2, 5, 14, 42, 132, 429, 1430}),
                         seq_of({0}));
    for (long n = 0; n <= 9; ++n) CHECK(parts_total(cat, n) == expected[n]);
}

TEST_CASE("breakpoints_total") {
    const Coloration fib(seq_of({1, 1}), seq_of({0}));
    CHECK(breakpoints_total(fib, 5) == 38);
    const Coloration ones(Seq{}, seq_of({1}));
    CHECK(breakpoints_total(ones, 1) == 2);
    CHECK(breakpoints_total(ones, 3) == 12);
    CHECK_THROWS_AS(breakpoints_total(ones, 0), Error);
}

TEST_CASE("blacktie counts") {
    const Coloration one(seq_of({1}), seq_of({0}));
    for (long n = 1; n <= 5; ++n) CHECK(blacktie_count(one, n) == n);
    CHECK(blacktie_count(one, 0) == 0);

    const Coloration fib(seq_of({1, 1}), seq_of({0}));
    CHECK(blacktie_count(fib, 6) == 38);
    CHECK(blacktie_count_t5(fib, 6) == 38);
    CHECK(blacktie_count_t6(fib, 6) == 38);

    CHECK(blacktie_count_t5(one, 4) == 4);
    CHECK(blacktie_count_t5(one, 1) == 1);

    const Coloration ones(Seq{}, seq_of({1}));
    CHECK(blacktie_count_t6(ones, 2) == 2);
    const Coloration zero(Seq{}, seq_of({0}));
    CHECK(blacktie_count_t6(zero, 1) == 1);
}

TEST_CASE("enumerate_blacktie") {
    const Coloration one(seq_of({1}), seq_of({0}));
    const auto m3 = enumerate_blacktie(one, 3);
    std::vector<std::string> rendered;
    for (const auto& c : m3) rendered.push_back(render(c));
    CHECK(rendered == std::vector<std::string>{"B 1_1 1_1", "1_1 B 1_1",
                                               "1_1 1_1 B"});

    const auto m1 = enumerate_blacktie(one, 1);
    REQUIRE(m1.size() == 1);
    CHECK(render(m1[0]) == "B");

    const Coloration zero(Seq{}, seq_of({0}));
    CHECK(enumerate_blacktie(zero, 2).empty());
}

TEST_CASE("composition invariants hold for the sum of sizes") {
    const auto all = enumerate_compositions(catalan8(), 6);
    for (const auto& c : all) {
        long total = 0;
        for (const auto& p : c.parts) {
            total += p.size;
            CHECK(p.color >= 1);
        }
        CHECK(total == 6);
    }
    const auto tilings = enumerate_blacktie(catalan8(), 5);
    for (const auto& t : tilings) {
        long blacks = 0;
        for (const auto& p : t.parts)
            if (p.is_black()) {
                ++blacks;
                CHECK(p.size == 1);
            }
        CHECK(blacks == 1);
    }
}

TEST_CASE("all counting routes agree with brute force") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const Coloration x = random_coloration(rng);
        const std::vector<long> entries = first_entries(x, 10);
        const Seq by_invert = count_from_coloration(x, 10);
        for (long n = 1; n <= 10; ++n) {
            const auto brute = oracle::brute_counts(entries, n);
            const mpz_class a = count_recurrence(x, n);
            CHECK(a == brute.compositions);
            CHECK(count_multinomial(x, n) == brute.compositions);
            CHECK(by_invert[n - 1] == brute.compositions);
            CHECK(parts_total(x, n) == brute.parts);
            const mpz_class b = blacktie_count(x, n);
            CHECK(b == oracle::brute_blacktie(entries, n));
            CHECK(blacktie_count_t5(x, n) == b);
            CHECK(blacktie_count_t6(x, n) == b);
        }
    }
}

TEST_CASE("theorem-level identities on random colorations") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        const Coloration x = random_coloration(rng);
        // black-tie tilings = break points one level down, and the whole
        // sequence is the self-convolution of the count prefix
        const Seq a = count_prefix(x, 9);
        const Seq aa = convolve(a, a);
        for (long n = 1; n <= 10; ++n) {
            const mpz_class b = blacktie_count(x, n);
            if (n >= 2) CHECK(b == breakpoints_total(x, n - 1));
            CHECK(b == parts_total(x, n - 1) + count_recurrence(x, n - 1));
            CHECK(b == aa[n - 1]);
        }
        // enumeration agrees where it is cheap
        for (long n = 1; n <= 7; ++n) {
            CHECK(enumerate_compositions(x, n).size() ==
                  count_recurrence(x, n));
            CHECK(enumerate_blacktie(x, n).size() == blacktie_count(x, n));
        }
    }
}

TEST_CASE("truncated series t*f^2 reproduces the blacktie sequence") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const Coloration x = random_coloration(rng);
        const Seq a = count_prefix(x, 9);
        Seq shifted = convolve(a, a);
        shifted.insert(shifted.begin(), 0);  // multiply by t
        for (long n = 0; n <= 10; ++n)
            CHECK(shifted[n] == blacktie_count(x, n));
    }
}

TEST_CASE("count_bundle ties the four statistics together") {
    const Coloration fib(seq_of({1, 1}), seq_of({0}));
    const CountBundle b = count_bundle(fib, 5);
    CHECK(b.compositions == 8);
    CHECK(b.parts == 30);
    CHECK(b.breakpoints == 38);
    CHECK(b.blacktie == 20);
    CHECK(b.breakpoints == b.parts + b.compositions);
}
