#include "wavefront_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "wavefront/duality.hpp"
#include "wavefront/json_io.hpp"
#include "wavefront/springer.hpp"
#include "wavefront/verify.hpp"
#include "wavefront/wavefront.hpp"

struct wf_ctx {
    int code = 0;
    std::string msg;
};

namespace {

using nlohmann::json;

char* dup_string(const std::string& s)
{
    char* out = (char*)std::malloc(s.size() + 1);
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F> char* guarded(wf_ctx* ctx, F&& f)
{
    if (!ctx)
        return nullptr;
    ctx->code = 0;
    ctx->msg.clear();
    try {
        return dup_string(f());
    } catch (const wf::error& e) {
        ctx->code = (int)e.code;
        ctx->msg = e.what();
    } catch (const std::exception& e) {
        ctx->code = (int)wf::errc::internal;
        ctx->msg = e.what();
    }
    return nullptr;
}

const char* need(const char* s)
{
    WF_REQUIRE(s != nullptr, wf::errc::invalid_input, "null argument");
    return s;
}

} // namespace

extern "C" {

wf_ctx* wf_ctx_create(void)
{
    return new (std::nothrow) wf_ctx;
}

void wf_ctx_destroy(wf_ctx* ctx)
{
    delete ctx;
}

int wf_ctx_errcode(const wf_ctx* ctx)
{
    return ctx ? ctx->code : (int)wf::errc::invalid_input;
}

const char* wf_ctx_errmsg(const wf_ctx* ctx)
{
    return ctx ? ctx->msg.c_str() : "null context";
}

void wf_string_free(char* s)
{
    std::free(s);
}

char* wf_wavefront(wf_ctx* ctx, const char* quad_json)
{
    return guarded(ctx, [&] {
        wf::Quad q = wf::parse_quad(need(quad_json));
        return wf::partition_json(wf::wavefront(q));
    });
}

char* wf_table_5_3(wf_ctx* ctx, const char* partition_json)
{
    return guarded(ctx, [&] {
        wf::Partition lam = wf::parse_partition(need(partition_json));
        WF_REQUIRE(lam.size() == 3 && lam[0] > lam[1] && lam[1] > lam[2] &&
                       lam[2] > 0 && lam[0] % 2 == 0 && lam[1] % 2 == 0 &&
                       lam[2] % 2 == 0,
                   wf::errc::invalid_input,
                   "need three distinct positive even parts");
        json rows = json::array();
        for (int mask = 0; mask < 8; ++mask) {
            wf::EpsMap eps;
            json esig = json::array();
            for (int j = 0; j < 3; ++j) {
                int s = (mask >> (2 - j)) & 1 ? -1 : 1;
                eps[lam[j]] = s;
                esig.push_back(s);
            }
            auto [lmax, emax] = wf::lambda_max(lam, eps);
            json emaxsig = json::array();
            for (int i : wf::jord(lmax))
                emaxsig.push_back(emax.at(i));
            rows.push_back(
                {{"eps", esig},
                 {"k", wf::k_of({lam, wf::PClass::symp, eps})},
                 {"lmax", lmax},
                 {"emax", emaxsig},
                 {"tmin", wf::t_lambda_min(lam, eps)},
                 {"mu", wf::wavefront(lam, eps, {}, {})}});
        }
        return rows.dump();
    });
}

char* wf_dual(wf_ctx* ctx, const char* cls, const char* partition_json)
{
    return guarded(ctx, [&] {
        wf::PClass c = wf::parse_class(need(cls));
        wf::Partition lam = wf::parse_partition(need(partition_json));
        return wf::partition_json(wf::dual(lam, c));
    });
}

char* wf_sp(wf_ctx* ctx, const char* partition_json)
{
    return guarded(ctx, [&] {
        wf::Partition lam = wf::parse_partition(need(partition_json));
        return wf::partition_json(wf::sp_closure(lam));
    });
}

char* wf_family(wf_ctx* ctx, const char* cls, const char* partition_json)
{
    return guarded(ctx, [&] {
        wf::PClass c = wf::parse_class(need(cls));
        wf::Partition lam = wf::parse_partition(need(partition_json));
        wf::Symbol sp = wf::special_symbol(lam, c);
        json members = json::array();
        for (const wf::Symbol& s : wf::family_enumerate(lam, c))
            members.push_back(json::parse(wf::symbol_json(s)));
        return json{{"special", lam},
                    {"symbol", json::parse(wf::symbol_json(sp))},
                    {"members", members}}
            .dump();
    });
}

char* wf_induce(wf_ctx* ctx, const char* l1_json, const char* l2_json)
{
    return guarded(ctx, [&] {
        wf::Partition l1 = wf::parse_partition(need(l1_json));
        wf::Partition l2 = wf::parse_partition(need(l2_json));
        return wf::induction_json(wf::induce(l1, l2));
    });
}

char* wf_springer(wf_ctx* ctx, const char* signed_json)
{
    return guarded(ctx, [&] {
        wf::SignedPartition sp = wf::parse_signed_partition(need(signed_json));
        return wf::springer_datum_json(wf::springer(sp));
    });
}

char* wf_symb(wf_ctx* ctx, const char* cls, const char* partition_json)
{
    return guarded(ctx, [&] {
        wf::PClass c = wf::parse_class(need(cls));
        wf::Partition lam = wf::parse_partition(need(partition_json));
        wf::Symbol s;
        switch (c) {
        case wf::PClass::symp:
            s = wf::ordinary_symbol_symp(lam);
            break;
        case wf::PClass::orth_odd:
            s = wf::ordinary_symbol_orth_odd(lam);
            break;
        case wf::PClass::orth_even:
            s = wf::ordinary_symbol_orth_even(lam);
            break;
        }
        return wf::symbol_json(s);
    });
}

char* wf_verify(wf_ctx* ctx, const char* suite, int bound)
{
    return guarded(ctx, [&] {
        return wf::suite_report_json(wf::verify_suite(need(suite), bound));
    });
}

} /* extern "C" */
