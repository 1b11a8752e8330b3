#include "sqec.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "error.hpp"
#include "jobio.hpp"
#include "polyparse.hpp"

struct sqec_ctx {
    std::string last_error;
};

namespace {

using nlohmann::json;

char* dup_string(const std::string& s) {
    char* out = (char*)std::malloc(s.size() + 1);
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int code_of(const sqec::Error& e) {
    switch (e.code()) {
        case sqec::errc::parse_error:
        case sqec::errc::schema_error:
            return SQEC_ERR_SCHEMA;
        case sqec::errc::internal_convention_error:
            return SQEC_ERR_INTERNAL;
        default:
            return SQEC_ERR_VALIDATION;
    }
}

template <typename Fn>
int guarded(sqec_ctx* ctx, char** out, Fn&& fn) {
    if (!ctx || !out) return SQEC_ERR_SCHEMA;
    try {
        *out = dup_string(fn());
        return *out ? SQEC_OK : SQEC_ERR_INTERNAL;
    } catch (const sqec::Error& e) {
        ctx->last_error = e.what();
        return code_of(e);
    } catch (const json::exception& e) {
        ctx->last_error = e.what();
        return SQEC_ERR_SCHEMA;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SQEC_ERR_INTERNAL;
    }
}

json parse_request(const char* text) {
    if (!text) sqec::fail(sqec::errc::schema_error, "null request");
    return json::parse(text);
}

} // namespace

extern "C" {

int sqec_ctx_new(sqec_ctx** out) {
    if (!out) return SQEC_ERR_SCHEMA;
    *out = new (std::nothrow) sqec_ctx();
    return *out ? SQEC_OK : SQEC_ERR_INTERNAL;
}

void sqec_ctx_free(sqec_ctx* ctx) { delete ctx; }

const char* sqec_last_error(const sqec_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}

void sqec_string_free(char* s) { std::free(s); }

const char* sqec_version(void) { return "0.1.0"; }

int sqec_localize(sqec_ctx* ctx, const char* job_json, char** out_json) {
    return guarded(ctx, out_json, [&] {
        sqec::JobSpec spec = sqec::job_from_json(parse_request(job_json));
        return sqec::run_job(spec).dump();
    });
}

int sqec_class_eval(sqec_ctx* ctx, const char* request_json, char** out_json) {
    return guarded(ctx, out_json,
                   [&] { return sqec::class_eval(parse_request(request_json)).dump(); });
}

int sqec_quadform_eval(sqec_ctx* ctx, const char* request_json, char** out_json) {
    return guarded(ctx, out_json,
                   [&] { return sqec::quadform_eval(parse_request(request_json)).dump(); });
}

int sqec_dt3_check(sqec_ctx* ctx, const char* request_json, char** out_json) {
    return guarded(ctx, out_json,
                   [&] { return sqec::dt3_eval(parse_request(request_json)).dump(); });
}

int sqec_sq_poly(sqec_ctx* ctx, int k, char** out_json) {
    return guarded(ctx, out_json, [&] { return sqec::sq_eval(k).dump(); });
}

int sqec_poly_parse(sqec_ctx* ctx, const char* src, int rank, char** out_canonical) {
    return guarded(ctx, out_canonical, [&] {
        if (!src) sqec::fail(sqec::errc::schema_error, "null source");
        return sqec::parse_poly(src, rank).str();
    });
}

int sqec_format_table(sqec_ctx* ctx, const char* result_json, char** out_text) {
    return guarded(ctx, out_text,
                   [&] { return sqec::format_table(parse_request(result_json)); });
}

} // extern "C"
