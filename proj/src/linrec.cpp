#include "colorcomp/linrec.hpp"

#include "colorcomp/transforms.hpp"

namespace colorcomp {

LinearRecurrence::LinearRecurrence(RatSeq coeffs, RatSeq initials)
    : coeffs_(std::move(coeffs)), initials_(std::move(initials)) {
    if (coeffs_.empty())
        raise(ErrorKind::domain, "recurrence order must be >= 1");
    if (coeffs_.size() != initials_.size())
        raise(ErrorKind::shape, "need exactly order initial terms");
}

RatSeq LinearRecurrence::generate_exact(long n_terms) const {
    if (n_terms < 1) raise(ErrorKind::domain, "n_terms must be >= 1");
    const long r = order();
    RatSeq out;
    out.reserve(n_terms);
    for (long i = 0; i < n_terms && i < r; ++i) out.push_back(initials_[i]);
    for (long m = r; m < n_terms; ++m) {
        mpq_class acc = 0;
        for (long i = 1; i <= r; ++i) acc += coeffs_[i - 1] * out[m - i];
        out.push_back(acc);
    }
    return out;
}

Seq LinearRecurrence::generate(long n_terms) const {
    Seq out;
    for (const auto& v : generate_exact(n_terms)) {
        if (v.get_den() != 1)
            raise(ErrorKind::nonintegral,
                  "non-integral recurrence term " + v.get_str());
        out.push_back(v.get_num());
    }
    return out;
}

LinearRecurrence invert_linrec(const LinearRecurrence& rec, const mpq_class& x) {
    const long r = rec.order();
    const RatSeq& h = rec.coeffs();
    const RatSeq a = rec.generate_exact(r);
    RatSeq g(r);
    g[0] = h[0] + x * a[0];
    for (long i = 1; i < r; ++i) {
        mpq_class acc = a[i];
        for (long j = 1; j <= i; ++j) acc -= h[j - 1] * a[i - j];
        g[i] = h[i] + x * acc;
    }
    RatSeq initials = invert_interpolated_exact(a, x, r);
    return LinearRecurrence(std::move(g), std::move(initials));
}

Seq rbonacci(long r, long n_terms) {
    if (r < 2) raise(ErrorKind::domain, "rbonacci requires r >= 2");
    RatSeq coeffs(r, 1);
    RatSeq initials(r, 0);
    initials[r - 1] = 1;
    return LinearRecurrence(std::move(coeffs), std::move(initials))
        .generate(n_terms);
}

bool rbonacci_inverse_identity_check(long r, long n_terms) {
    if (r < 2) raise(ErrorKind::domain, "rbonacci requires r >= 2");
    if (n_terms < 3) raise(ErrorKind::domain, "need n_terms >= 3");
    const Seq upper = rbonacci(r + 1, n_terms);
    const Seq inverse = invert_interpolated(upper, -1, n_terms);
    Seq expected = rbonacci(r, n_terms - 1);
    expected.insert(expected.begin(), 0);
    return inverse == expected;
}

}  // namespace colorcomp
