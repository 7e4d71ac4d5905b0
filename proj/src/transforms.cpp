#include "colorcomp/transforms.hpp"

namespace colorcomp {

RatSeq invert_interpolated_exact(const RatSeq& a, const mpq_class& x, long n_terms) {
    if (n_terms < 1) raise(ErrorKind::domain, "n_terms must be >= 1");
    if (static_cast<long>(a.size()) < n_terms)
        raise(ErrorKind::insufficient, "need at least n_terms input terms");
    RatSeq b;
    b.reserve(n_terms);
    b.push_back(a[0]);
    for (long n = 1; n < n_terms; ++n) {
        mpq_class acc = 0;
        for (long j = 0; j < n; ++j) acc += a[n - 1 - j] * b[j];
        b.push_back(a[n] + x * acc);
    }
    return b;
}

namespace {

RatSeq to_rational(const Seq& a) {
    RatSeq out;
    out.reserve(a.size());
    for (const auto& v : a) out.emplace_back(v);
    return out;
}

Seq to_integral(const RatSeq& b) {
    Seq out;
    out.reserve(b.size());
    for (const auto& v : b) {
        if (v.get_den() != 1)
            raise(ErrorKind::nonintegral,
                  "non-integral term " + v.get_str() + " in transform output");
        out.push_back(v.get_num());
    }
    return out;
}

}  // namespace

Seq invert_interpolated(const Seq& a, const mpq_class& x, long n_terms) {
    return to_integral(invert_interpolated_exact(to_rational(a), x, n_terms));
}

Seq invert(const Seq& a, long n_terms) {
    return invert_interpolated(a, 1, n_terms);
}

ColorationVerdict coloration_of(const Seq& a) {
    if (a.empty()) raise(ErrorKind::domain, "coloration_of needs at least one term");
    Seq c = invert_interpolated(a, -1, static_cast<long>(a.size()));
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] < 0) return RefutationWitness{static_cast<long>(i), c[i]};
    return c;
}

Seq count_from_coloration(const Coloration& x, long n_terms) {
    if (n_terms < 1) raise(ErrorKind::domain, "n_terms must be >= 1");
    return invert(x.first_values(n_terms), n_terms);
}

RatSeq invert_series_division(const RatSeq& a, const mpq_class& x, long n_terms) {
    if (n_terms < 1) raise(ErrorKind::domain, "n_terms must be >= 1");
    if (static_cast<long>(a.size()) < n_terms)
        raise(ErrorKind::insufficient, "need at least n_terms input terms");
    // denominator d(t) = 1 - x t a(t), truncated
    RatSeq d(n_terms, 0);
    d[0] = 1;
    for (long n = 1; n < n_terms; ++n) d[n] = -x * a[n - 1];
    // long division: b_n = a_n - sum_{k=1}^{n} d_k b_{n-k}
    RatSeq b(n_terms, 0);
    for (long n = 0; n < n_terms; ++n) {
        mpq_class acc = a[n];
        for (long k = 1; k <= n; ++k) acc -= d[k] * b[n - k];
        b[n] = acc;
    }
    return b;
}

}  // namespace colorcomp
