#include "colorcomp/compositions.hpp"

#include <numeric>

#include "colorcomp/diophantine.hpp"
#include "colorcomp/bellpoly.hpp"

namespace colorcomp {

std::string render(const ColoredComposition& c) {
    std::string out;
    for (const auto& p : c.parts) {
        if (!out.empty()) out += " ";
        if (p.is_black())
            out += "B";
        else
            out += std::to_string(p.size) + "_" + p.color.get_str();
    }
    return out;
}

namespace {

void extend(const Coloration& x, long remaining, long cap,
            ColoredComposition& current,
            std::vector<ColoredComposition>& out) {
    if (remaining == 0) {
        if (static_cast<long>(out.size()) >= cap)
            raise(ErrorKind::cap,
                  "enumeration exceeds cap of " + std::to_string(cap));
        out.push_back(current);
        return;
    }
    for (long size = 1; size <= remaining; ++size) {
        const mpz_class& budget = x.value_at(size);
        for (mpz_class color = 1; color <= budget; ++color) {
            current.parts.push_back({size, color});
            extend(x, remaining - size, cap, current, out);
            current.parts.pop_back();
        }
    }
}

}  // namespace

std::vector<ColoredComposition> enumerate_compositions(const Coloration& x,
                                                       long n, long cap) {
    if (n < 0) raise(ErrorKind::domain, "n must be >= 0");
    if (cap < 1) raise(ErrorKind::domain, "cap must be >= 1");
    std::vector<ColoredComposition> out;
    ColoredComposition current;
    extend(x, n, cap, current, out);
    return out;
}

std::vector<ColoredComposition> enumerate_blacktie(const Coloration& x, long n,
                                                   long cap) {
    if (n < 1) raise(ErrorKind::domain, "blacktie enumeration needs n >= 1");
    const auto base = enumerate_compositions(x, n - 1, cap);
    std::vector<ColoredComposition> out;
    const Part black{1, 0};
    for (const auto& b : base) {
        for (long pos = 0; pos <= b.part_count(); ++pos) {
            if (static_cast<long>(out.size()) >= cap)
                raise(ErrorKind::cap,
                      "enumeration exceeds cap of " + std::to_string(cap));
            ColoredComposition tiling = b;
            tiling.parts.insert(tiling.parts.begin() + pos, black);
            out.push_back(std::move(tiling));
        }
    }
    return out;
}

mpz_class count_recurrence(const Coloration& x, long n) {
    return count_prefix(x, n)[n];
}

Seq count_prefix(const Coloration& x, long n) {
    if (n < 0) raise(ErrorKind::domain, "n must be >= 0");
    Seq a(n + 1);
    a[0] = 1;
    for (long m = 1; m <= n; ++m) {
        mpz_class acc = 0;
        for (long i = 1; i <= m; ++i) acc += x.value_at(i) * a[m - i];
        a[m] = acc;
    }
    return a;
}

mpz_class count_multinomial(const Coloration& x, long n) {
    if (n < 1) raise(ErrorKind::domain, "n must be >= 1");
    mpz_class total = 0;
    for_each_weighted_solution(n, n, [&](const std::vector<long>& k) {
        mpz_class term = multinomial(k);
        for (long i = 0; i < n; ++i) {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), x.value_at(i + 1).get_mpz_t(),
                       static_cast<unsigned long>(k[i]));
            term *= power;
        }
        total += term;
    });
    return total;
}

mpz_class parts_total(const Coloration& x, long n) {
    if (n < 0) raise(ErrorKind::domain, "n must be >= 0");
    const Seq a = count_prefix(x, n);
    const Seq aa = convolve(a, a);
    return aa[n] - a[n];
}

mpz_class breakpoints_total(const Coloration& x, long n) {
    if (n < 1)
        raise(ErrorKind::domain, "break-points are defined for n >= 1");
    return parts_total(x, n) + count_recurrence(x, n);
}

mpz_class blacktie_count(const Coloration& x, long n) {
    if (n < 0) raise(ErrorKind::domain, "n must be >= 0");
    if (n == 0) return 0;
    const Seq a = count_prefix(x, n - 1);
    const Seq aa = convolve(a, a);
    return aa[n - 1];
}

mpz_class blacktie_count_t5(const Coloration& x, long n) {
    if (n < 1) raise(ErrorKind::domain, "n must be >= 1");
    const long m = n - 1;
    mpz_class total = 0;
    for_each_weighted_solution(m, m, [&](const std::vector<long>& k) {
        mpz_class term = multinomial(k);
        for (long i = 0; i < m; ++i) {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), x.value_at(i + 1).get_mpz_t(),
                       static_cast<unsigned long>(k[i]));
            term *= power;
        }
        const long part_sum = std::accumulate(k.begin(), k.end(), 0L);
        total += term * (1 + part_sum);
    });
    return total;
}

mpz_class blacktie_count_t6(const Coloration& x, long n) {
    if (n < 1) raise(ErrorKind::domain, "n must be >= 1");
    mpz_class total = 0;
    for_each_weighted_solution(n, n, [&](const std::vector<long>& k) {
        if (k[0] < 1) return;
        mpz_class term = multinomial(k) * k[0];
        for (long i = 0; i < n; ++i) {
            const long exp = i == 0 ? k[0] - 1 : k[i];
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), x.value_at(i + 1).get_mpz_t(),
                       static_cast<unsigned long>(exp));
            term *= power;
        }
        total += term;
    });
    return total;
}

CountBundle count_bundle(const Coloration& x, long n) {
    if (n < 1) raise(ErrorKind::domain, "count_bundle needs n >= 1");
    CountBundle out;
    out.n = n;
    out.compositions = count_recurrence(x, n);
    out.parts = parts_total(x, n);
    out.breakpoints = out.parts + out.compositions;
    out.blacktie = blacktie_count(x, n);
    return out;
}

}  // namespace colorcomp
