#include "chowops/chowops.h"

#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "textio.hpp"
#include "witt.hpp"

using namespace chowops;

struct chowops_element {
    SteenrodElement e;
};

struct chowops_module {
    std::variant<QuadricRing, ProjSpaceRing> ring;
};

struct chowops_class {
    std::variant<QuadricClass, ProjClass> x;
};

namespace {

    thread_local std::string g_last_error;

    void set_error(const std::string& msg) { g_last_error = msg; }

    char* dup_string(const std::string& s)
    {
        char* out = new char[s.size() + 1];
        std::memcpy(out, s.c_str(), s.size() + 1);
        return out;
    }

    // Runs the body, translating exceptions into status codes.
    template <typename F>
    chowops_status guarded(F&& f)
    {
        try {
            return f();
        }
        catch (const std::invalid_argument& ex) {
            set_error(ex.what());
            const std::string what = ex.what();
            if (what.find("parse error") != std::string::npos)
                return CHOWOPS_ERR_PARSE;
            if (what.find("mismatch") != std::string::npos)
                return CHOWOPS_ERR_MISMATCH;
            return CHOWOPS_ERR_INVALID_ARG;
        }
        catch (const std::exception& ex) {
            set_error(ex.what());
            return CHOWOPS_ERR_INTERNAL;
        }
        catch (...) {
            set_error("unknown error");
            return CHOWOPS_ERR_INTERNAL;
        }
    }

    chowops_status require(bool cond, const char* msg)
    {
        if (!cond) {
            set_error(msg);
            return CHOWOPS_ERR_INVALID_ARG;
        }
        return CHOWOPS_OK;
    }

}  // namespace

extern "C" {

const char* chowops_version(void)
{
    return "0.1.0";
}

const char* chowops_last_error(void)
{
    return g_last_error.c_str();
}

void chowops_string_free(char* s)
{
    delete[] s;
}

chowops_status chowops_element_parse(int prime, chowops_mode mode, const char* expr,
                                     chowops_element** out)
{
    if (auto st = require(expr && out, "element_parse: null argument"))
        return st;
    return guarded([&] {
        const Mode m = mode == CHOWOPS_MODE_CHARP ? Mode::CharPChow : Mode::Char0Motivic;
        auto* h = new chowops_element{parse_steenrod(expr, Prime(prime), m)};
        *out = h;
        return CHOWOPS_OK;
    });
}

chowops_status chowops_element_reduce(const chowops_element* e, chowops_element** out)
{
    if (auto st = require(e && out, "element_reduce: null argument"))
        return st;
    return guarded([&] {
        *out = new chowops_element{adem_reduce(e->e)};
        return CHOWOPS_OK;
    });
}

chowops_status chowops_element_compose(const chowops_element* e1, const chowops_element* e2,
                                       chowops_element** out)
{
    if (auto st = require(e1 && e2 && out, "element_compose: null argument"))
        return st;
    return guarded([&] {
        *out = new chowops_element{compose(e1->e, e2->e)};
        return CHOWOPS_OK;
    });
}

chowops_status chowops_element_format(const chowops_element* e, chowops_format format, char** out)
{
    if (auto st = require(e && out, "element_format: null argument"))
        return st;
    return guarded([&] {
        *out = dup_string(format == CHOWOPS_FORMAT_JSON ? to_json(e->e).dump()
                                                        : to_text(e->e));
        return CHOWOPS_OK;
    });
}

int chowops_element_is_zero(const chowops_element* e)
{
    return e && e->e.is_zero() ? 1 : 0;
}

void chowops_element_free(chowops_element* e)
{
    delete e;
}

chowops_status chowops_module_quadric(int dimX, chowops_module** out)
{
    if (auto st = require(out != nullptr, "module_quadric: null argument"))
        return st;
    return guarded([&] {
        *out = new chowops_module{QuadricRing(dimX)};
        return CHOWOPS_OK;
    });
}

chowops_status chowops_module_projspace(int n, int prime, chowops_module** out)
{
    if (auto st = require(out != nullptr, "module_projspace: null argument"))
        return st;
    return guarded([&] {
        *out = new chowops_module{ProjSpaceRing(n, Prime(prime))};
        return CHOWOPS_OK;
    });
}

void chowops_module_free(chowops_module* m)
{
    delete m;
}

chowops_status chowops_class_parse(const chowops_module* m, const char* expr, chowops_class** out)
{
    if (auto st = require(m && expr && out, "class_parse: null argument"))
        return st;
    return guarded([&] {
        if (const auto* q = std::get_if<QuadricRing>(&m->ring))
            *out = new chowops_class{parse_quadric_class(expr, *q)};
        else
            *out = new chowops_class{parse_proj_class(expr, std::get<ProjSpaceRing>(m->ring))};
        return CHOWOPS_OK;
    });
}

chowops_status chowops_class_act(const chowops_element* e, const chowops_class* x,
                                 chowops_class** out)
{
    if (auto st = require(e && x && out, "class_act: null argument"))
        return st;
    return guarded([&] {
        if (const auto* q = std::get_if<QuadricClass>(&x->x))
            *out = new chowops_class{act(e->e, *q)};
        else
            *out = new chowops_class{act(e->e, std::get<ProjClass>(x->x))};
        return CHOWOPS_OK;
    });
}

chowops_status chowops_class_format(const chowops_class* x, chowops_format format, char** out)
{
    if (auto st = require(x && out, "class_format: null argument"))
        return st;
    return guarded([&] {
        std::string s;
        if (const auto* q = std::get_if<QuadricClass>(&x->x))
            s = format == CHOWOPS_FORMAT_JSON ? to_json(*q).dump() : to_text(*q);
        else {
            const auto& pc = std::get<ProjClass>(x->x);
            s = format == CHOWOPS_FORMAT_JSON ? to_json(pc).dump() : to_text(pc);
        }
        *out = dup_string(s);
        return CHOWOPS_OK;
    });
}

void chowops_class_free(chowops_class* x)
{
    delete x;
}

chowops_status chowops_coaction(int prime, int truncation, const char* expr,
                                chowops_format format, char** out)
{
    if (auto st = require(expr && out, "coaction: null argument"))
        return st;
    return guarded([&] {
        if (truncation < 1)
            throw std::invalid_argument("coaction: truncation must be positive");
        const Prime p(prime);
        const CoactionElement r = evaluate_coaction(parse_bmu_terms(expr), p, truncation);
        *out = dup_string(format == CHOWOPS_FORMAT_JSON ? to_json(r).dump() : to_text(r));
        return CHOWOPS_OK;
    });
}

chowops_status chowops_rost(int quadric_dim, int prime, long long* deg, int* quotient_mod_p)
{
    if (auto st = require(deg && quotient_mod_p, "rost: null argument"))
        return st;
    return guarded([&] {
        const RostNumber r = rost_number(quadric_dim, Prime(prime));
        *deg = r.deg;
        *quotient_mod_p = r.quotient.v;
        return CHOWOPS_OK;
    });
}

chowops_status chowops_wclass(const char* spec, int prime, int truncation, chowops_format format,
                              char** out)
{
    if (auto st = require(spec && out, "wclass: null argument"))
        return st;
    return guarded([&] {
        if (truncation < 0)
            throw std::invalid_argument("wclass: negative truncation");
        const TruncSeries w = w_class(parse_bundle_spec(spec), Prime(prime), truncation);
        *out = dup_string(format == CHOWOPS_FORMAT_JSON ? to_json(w).dump() : to_text(w));
        return CHOWOPS_OK;
    });
}

chowops_status chowops_hoffmann_i1(int dim, int* out, int cap, int* count)
{
    if (auto st = require(out && count && cap >= 0, "hoffmann_i1: null argument"))
        return st;
    return guarded([&] {
        const auto r = hoffmann_feasible_i1(dim);
        *count = static_cast<int>(r.size());
        for (int i = 0; i < cap && i < *count; ++i)
            out[i] = r[i];
        return CHOWOPS_OK;
    });
}

chowops_status chowops_v2_chain_ok(int dim, const int* indices, int len, int* ok)
{
    if (auto st = require(indices && ok && len >= 0, "v2_chain_ok: null argument"))
        return st;
    return guarded([&] {
        const WittChain c(dim, std::vector<int>(indices, indices + len));
        *ok = v2_chain_ok(c) ? 1 : 0;
        return CHOWOPS_OK;
    });
}

chowops_status chowops_inq_dims(int n, long long* out, int cap, int* count)
{
    if (auto st = require(out && count && cap >= 0, "inq_dims: null argument"))
        return st;
    return guarded([&] {
        const auto dims = inq_allowed_dims(n);
        *count = static_cast<int>(dims.size());
        int i = 0;
        for (long long d : dims) {
            if (i >= cap)
                break;
            out[i++] = d;
        }
        return CHOWOPS_OK;
    });
}

}  // extern "C"
