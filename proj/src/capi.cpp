#include "colorcomp.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "colorcomp/bellpoly.hpp"
#include "colorcomp/compositions.hpp"
#include "colorcomp/linrec.hpp"
#include "colorcomp/transforms.hpp"

using namespace colorcomp;

struct cc_seq {
    Seq value;
};
struct cc_coloration {
    Coloration value;
};
struct cc_poly {
    MultiPoly value;
};
struct cc_linrec {
    LinearRecurrence value;
};

namespace {

thread_local std::string g_last_error;

cc_status status_of(const Error& e) {
    g_last_error = e.what();
    switch (e.kind()) {
        case ErrorKind::domain: return CC_ERR_DOMAIN;
        case ErrorKind::shape: return CC_ERR_SHAPE;
        case ErrorKind::cap: return CC_ERR_CAP;
        case ErrorKind::insufficient: return CC_ERR_INSUFFICIENT;
        case ErrorKind::nonintegral: return CC_ERR_NONINTEGRAL;
        case ErrorKind::parse: return CC_ERR_PARSE;
    }
    return CC_ERR_DOMAIN;
}

template <typename Fn>
cc_status guard(Fn&& fn) {
    try {
        fn();
        return CC_OK;
    } catch (const Error& e) {
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CC_ERR_DOMAIN;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mpq_class parse_rational(const char* text) {
    mpq_class q;
    if (!text || q.set_str(text, 10) != 0)
        raise(ErrorKind::parse,
              std::string("not a rational: '") + (text ? text : "") + "'");
    q.canonicalize();
    return q;
}

RatSeq parse_rational_list(const char* text) {
    RatSeq out;
    std::string item;
    const std::string s = text ? text : "";
    size_t pos = 0;
    while (pos <= s.size() && !s.empty()) {
        const size_t comma = s.find(',', pos);
        item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(parse_rational(item.c_str()));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

extern "C" {

const char* cc_last_error(void) { return g_last_error.c_str(); }

void cc_string_free(char* s) { std::free(s); }

cc_status cc_seq_parse(const char* comma_list, cc_seq** out) {
    return guard([&] {
        *out = new cc_seq{parse_terms(comma_list ? comma_list : "")};
    });
}

cc_status cc_seq_format(const cc_seq* s, const char* sep, char** out) {
    return guard([&] {
        *out = dup_string(format_terms(s->value, sep ? sep : ","));
    });
}

size_t cc_seq_len(const cc_seq* s) { return s->value.size(); }

cc_status cc_seq_term(const cc_seq* s, size_t index, char** out) {
    return guard([&] {
        if (index >= s->value.size())
            raise(ErrorKind::domain, "sequence index out of range");
        *out = dup_string(s->value[index].get_str());
    });
}

void cc_seq_free(cc_seq* s) { delete s; }

cc_status cc_convolve(const cc_seq* a, const cc_seq* b, cc_seq** out) {
    return guard([&] { *out = new cc_seq{convolve(a->value, b->value)}; });
}

cc_status cc_sigma(const cc_seq* a, cc_seq** out) {
    return guard([&] { *out = new cc_seq{sigma(a->value)}; });
}

cc_status cc_subtract(const cc_seq* a, const cc_seq* b, cc_seq** out) {
    return guard([&] { *out = new cc_seq{subtract(a->value, b->value)}; });
}

cc_status cc_coloration_new(const char* prefix_list, const char* tail_list,
                            cc_coloration** out) {
    return guard([&] {
        Seq prefix = parse_terms(prefix_list ? prefix_list : "");
        Seq tail = parse_terms(tail_list ? tail_list : "0");
        *out = new cc_coloration{Coloration(std::move(prefix), std::move(tail))};
    });
}

cc_status cc_coloration_value_at(const cc_coloration* x, long i, char** out) {
    return guard([&] { *out = dup_string(x->value.value_at(i).get_str()); });
}

void cc_coloration_free(cc_coloration* x) { delete x; }

cc_status cc_invert_interpolated(const cc_seq* a, const char* x_rational,
                                 long n_terms, cc_seq** out) {
    return guard([&] {
        *out = new cc_seq{
            invert_interpolated(a->value, parse_rational(x_rational), n_terms)};
    });
}

cc_status cc_coloration_of(const cc_seq* a, int* verdict, cc_seq** prefix,
                           long* witness_index, char** witness_value) {
    return guard([&] {
        ColorationVerdict v = coloration_of(a->value);
        if (auto* p = std::get_if<Seq>(&v)) {
            *verdict = 1;
            if (prefix) *prefix = new cc_seq{std::move(*p)};
        } else {
            const auto& w = std::get<RefutationWitness>(v);
            *verdict = 0;
            if (witness_index) *witness_index = w.index;
            if (witness_value) *witness_value = dup_string(w.value.get_str());
        }
    });
}

cc_status cc_count_from_coloration(const cc_coloration* x, long n_terms,
                                   cc_seq** out) {
    return guard([&] {
        *out = new cc_seq{count_from_coloration(x->value, n_terms)};
    });
}

cc_status cc_count_sequence(const cc_coloration* x, long n,
                            cc_count_method method, cc_seq** out) {
    return guard([&] {
        if (n < 1) raise(ErrorKind::domain, "n must be >= 1");
        Seq result;
        switch (method) {
            case CC_COUNT_RECURRENCE:
                result = sigma(count_prefix(x->value, n));
                break;
            case CC_COUNT_MULTINOMIAL:
                for (long m = 1; m <= n; ++m)
                    result.push_back(count_multinomial(x->value, m));
                break;
            case CC_COUNT_INVERT:
                result = count_from_coloration(x->value, n);
                break;
            default:
                raise(ErrorKind::domain, "unknown count method");
        }
        *out = new cc_seq{std::move(result)};
    });
}

cc_status cc_parts_sequence(const cc_coloration* x, long n, cc_seq** out) {
    return guard([&] {
        if (n < 0) raise(ErrorKind::domain, "n must be >= 0");
        Seq result;
        for (long m = 0; m <= n; ++m)
            result.push_back(parts_total(x->value, m));
        *out = new cc_seq{std::move(result)};
    });
}

cc_status cc_blacktie_sequence(const cc_coloration* x, long n,
                               cc_blacktie_method method, cc_seq** out) {
    return guard([&] {
        if (n < 0) raise(ErrorKind::domain, "n must be >= 0");
        Seq result;
        result.push_back(0);  // B_0
        for (long m = 1; m <= n; ++m) {
            switch (method) {
                case CC_BLACKTIE_CONV:
                    result.push_back(blacktie_count(x->value, m));
                    break;
                case CC_BLACKTIE_T5:
                    result.push_back(blacktie_count_t5(x->value, m));
                    break;
                case CC_BLACKTIE_T6:
                    result.push_back(blacktie_count_t6(x->value, m));
                    break;
                default:
                    raise(ErrorKind::domain, "unknown blacktie method");
            }
        }
        *out = new cc_seq{std::move(result)};
    });
}

cc_status cc_enumerate(const cc_coloration* x, long n, int blacktie, long cap,
                       char** lines, long* count) {
    return guard([&] {
        const auto objects = blacktie
                                 ? enumerate_blacktie(x->value, n, cap)
                                 : enumerate_compositions(x->value, n, cap);
        std::string text;
        for (const auto& c : objects) {
            text += render(c);
            text += "\n";
        }
        *lines = dup_string(text);
        *count = static_cast<long>(objects.size());
    });
}

cc_status cc_bell_partial(long n, long k, cc_poly** out) {
    return guard([&] { *out = new cc_poly{bell_partial(n, k)}; });
}

cc_status cc_bell_complete(long n, cc_poly** out) {
    return guard([&] { *out = new cc_poly{bell_complete(n)}; });
}

cc_status cc_composition_polynomial(long n, cc_poly** out) {
    return guard([&] { *out = new cc_poly{composition_polynomial(n)}; });
}

cc_status cc_poly_derivative(const cc_poly* p, long var_index, cc_poly** out) {
    return guard([&] {
        *out = new cc_poly{partial_derivative(p->value, var_index)};
    });
}

cc_status cc_poly_to_string(const cc_poly* p, const char* var_prefix,
                            char** out) {
    return guard([&] {
        *out = dup_string(p->value.to_string(var_prefix ? var_prefix : "t"));
    });
}

cc_status cc_poly_evaluate(const cc_poly* p, const cc_seq* point, char** out) {
    return guard([&] {
        *out = dup_string(p->value.evaluate(point->value).get_str());
    });
}

int cc_poly_equal(const cc_poly* a, const cc_poly* b) {
    return a->value == b->value ? 1 : 0;
}

void cc_poly_free(cc_poly* p) { delete p; }

cc_status cc_linrec_new(const char* coeffs_list, const char* initials_list,
                        cc_linrec** out) {
    return guard([&] {
        *out = new cc_linrec{LinearRecurrence(parse_rational_list(coeffs_list),
                                              parse_rational_list(initials_list))};
    });
}

cc_status cc_linrec_generate(const cc_linrec* rec, long n_terms, cc_seq** out) {
    return guard([&] { *out = new cc_seq{rec->value.generate(n_terms)}; });
}

cc_status cc_linrec_invert(const cc_linrec* rec, const char* x_rational,
                           cc_linrec** out) {
    return guard([&] {
        *out = new cc_linrec{invert_linrec(rec->value, parse_rational(x_rational))};
    });
}

void cc_linrec_free(cc_linrec* rec) { delete rec; }

cc_status cc_rbonacci(long r, long n_terms, cc_seq** out) {
    return guard([&] { *out = new cc_seq{rbonacci(r, n_terms)}; });
}

cc_status cc_rbonacci_inverse_identity(long r, long n_terms, int* holds) {
    return guard([&] {
        *holds = rbonacci_inverse_identity_check(r, n_terms) ? 1 : 0;
    });
}

}  // extern "C"
