#include "colorcomp/bellpoly.hpp"

#include <algorithm>
#include <numeric>

#include "colorcomp/diophantine.hpp"

namespace colorcomp {

MultiPoly MultiPoly::constant(long nvars, const mpz_class& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(long nvars, long var_index) {
    if (var_index < 1 || var_index > nvars)
        raise(ErrorKind::domain, "variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[var_index - 1] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& exps, const mpz_class& coeff) {
    if (static_cast<long>(exps.size()) != nvars_)
        raise(ErrorKind::shape, "exponent vector length != nvars");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) raise(ErrorKind::shape, "nvars mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    if (nvars_ != other.nvars_) raise(ErrorKind::shape, "nvars mismatch");
    MultiPoly out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (long i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

mpz_class MultiPoly::evaluate(const Seq& point) const {
    if (static_cast<long>(point.size()) != nvars_)
        raise(ErrorKind::shape, "evaluation point length != nvars");
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class term = c;
        for (long i = 0; i < nvars_; ++i)
            for (long j = 0; j < e[i]; ++j) term *= point[i];
        total += term;
    }
    return total;
}

mpz_class MultiPoly::coefficient_sum() const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto total_degree = [](const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0L);
    };
    std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
        const long da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first < b->first;
    });
    std::string out;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        mpz_class abs_c = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (long i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_prefix + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += abs_c.get_str();
        } else {
            if (abs_c != 1) out += abs_c.get_str() + "*";
            out += mono;
        }
    }
    return out;
}

mpz_class multinomial(const std::vector<long>& k) {
    long total = std::accumulate(k.begin(), k.end(), 0L);
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(total));
    for (long ki : k) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ki));
        num /= f;
    }
    return num;
}

MultiPoly bell_partial(long n, long k) {
    if (n < 1 || k < 1 || k > n)
        raise(ErrorKind::domain, "bell_partial requires 1 <= k <= n");
    MultiPoly out(n);
    for_each_weighted_solution(n, n, [&](const std::vector<long>& i) {
        if (std::accumulate(i.begin(), i.end(), 0L) != k) return;
        out.add_term(i, multinomial(i));
    });
    return out;
}

MultiPoly bell_complete(long n) {
    if (n < 1) raise(ErrorKind::domain, "bell_complete requires n >= 1");
    MultiPoly out(n);
    for_each_weighted_solution(n, n, [&](const std::vector<long>& i) {
        out.add_term(i, multinomial(i));
    });
    return out;
}

MultiPoly composition_polynomial(long n) {
    if (n < 1) raise(ErrorKind::domain, "composition_polynomial requires n >= 1");
    std::vector<MultiPoly> a;
    a.push_back(MultiPoly::constant(n, 1));  // A_0
    for (long m = 1; m <= n; ++m) {
        MultiPoly am(n);
        for (long i = 1; i <= m; ++i)
            am = am + MultiPoly::variable(n, i) * a[m - i];
        a.push_back(std::move(am));
    }
    return a.back();
}

MultiPoly partial_derivative(const MultiPoly& p, long var_index) {
    if (var_index < 1 || var_index > p.nvars())
        raise(ErrorKind::domain, "derivative variable index out of range");
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var_index - 1] == 0) continue;
        MultiPoly::Exponents d = e;
        d[var_index - 1] -= 1;
        out.add_term(d, c * e[var_index - 1]);
    }
    return out;
}

}  // namespace colorcomp
