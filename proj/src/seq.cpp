#include "colorcomp/seq.hpp"

#include <algorithm>
#include <sstream>

namespace colorcomp {

Coloration::Coloration(Seq prefix, Seq tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    if (tail_.empty()) raise(ErrorKind::domain, "coloration tail must be non-empty");
    for (const auto& x : prefix_)
        if (x < 0) raise(ErrorKind::domain, "coloration entries must be >= 0");
    for (const auto& x : tail_)
        if (x < 0) raise(ErrorKind::domain, "coloration entries must be >= 0");
}

const mpz_class& Coloration::value_at(long i) const {
    if (i < 1) raise(ErrorKind::domain, "coloration index must be >= 1");
    const long p = static_cast<long>(prefix_.size());
    if (i <= p) return prefix_[i - 1];
    return tail_[(i - p - 1) % static_cast<long>(tail_.size())];
}

Seq Coloration::first_values(long n) const {
    Seq out;
    out.reserve(n > 0 ? n : 0);
    for (long i = 1; i <= n; ++i) out.push_back(value_at(i));
    return out;
}

Seq convolve(const Seq& a, const Seq& b) {
    const size_t len = std::min(a.size(), b.size());
    Seq out(len, 0);
    for (size_t n = 0; n < len; ++n)
        for (size_t k = 0; k <= n; ++k) out[n] += a[k] * b[n - k];
    return out;
}

Seq sigma(const Seq& a) {
    if (a.empty()) raise(ErrorKind::shape, "sigma of an empty sequence");
    return Seq(a.begin() + 1, a.end());
}

Seq subtract(const Seq& a, const Seq& b) {
    if (a.size() != b.size())
        raise(ErrorKind::shape, "subtract: length mismatch");
    Seq out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Seq parse_terms(const std::string& comma_list) {
    Seq out;
    std::string token;
    std::istringstream in(comma_list);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos)
            raise(ErrorKind::parse, "empty term in sequence list");
        const auto last = token.find_last_not_of(" \t");
        token = token.substr(first, last - first + 1);
        mpz_class v;
        if (v.set_str(token, 10) != 0)
            raise(ErrorKind::parse, "not an integer: '" + token + "'");
        out.push_back(std::move(v));
    }
    return out;
}

std::string format_terms(const Seq& a, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += sep;
        out += a[i].get_str();
    }
    return out;
}

}  // namespace colorcomp
