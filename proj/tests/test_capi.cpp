#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "weightlab.h"

using json = nlohmann::json;

namespace {
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    wl_string_free(s);
    return out;
}
}  // namespace

TEST_CASE("context lifecycle and validation") {
    wl_context* ctx = wl_context_new(3, 1, 2);
    REQUIRE(ctx != nullptr);
    wl_context_free(ctx);
    CHECK(wl_context_new(3, 1, 3) == nullptr);  // ell = p
    CHECK(wl_context_new(6, 1, 5) == nullptr);  // not a prime power
    CHECK(wl_context_new(3, 2, 5) == nullptr);  // bad eta
    CHECK(std::string(wl_last_error_message()).size() > 0);
    CHECK(std::string(wl_version()).find("weightlab") == 0);
}

TEST_CASE("count") {
    wl_context* ctx = wl_context_new(3, 1, 2);
    char* out = nullptr;
    CHECK(wl_count(ctx, 2, "sl", 1, 0, &out) == WL_OK);
    json j = json::parse(take(out));
    CHECK(j["ibr"] == 3);
    CHECK(j["alp"] == 3);
    CHECK(j["oracle"] == 3);
    CHECK(j["match"] == true);

    CHECK(wl_count(ctx, 2, "gu", 0, 0, &out) == WL_ERR_INVALID);  // eta conflict
    CHECK(wl_count(ctx, 0, "gl", 0, 0, &out) == WL_ERR_INVALID);
    wl_context_free(ctx);

    wl_context* gu = wl_context_new(2, -1, 3);
    CHECK(wl_count(gu, 2, "gu", 1, 0, &out) == WL_OK);
    json ju = json::parse(take(out));
    CHECK(ju["ibr"] == 2);
    CHECK(ju["oracle"] == 2);
    wl_context_free(gu);
}

TEST_CASE("labels stream") {
    wl_context* ctx = wl_context_new(3, 1, 2);
    char* out = nullptr;
    REQUIRE(wl_labels(ctx, 2, "jsonl", &out) == WL_OK);
    std::string text = take(out);
    int lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == 2);
    json first = json::parse(text.substr(0, text.find('\n')));
    CHECK(first["defect"] == 4);
    REQUIRE(wl_labels(ctx, 2, "tsv", &out) == WL_OK);
    std::string tsv = take(out);
    CHECK(tsv.find("kappa_ell") != std::string::npos);
    CHECK(wl_labels(ctx, 2, "xml", &out) == WL_ERR_INVALID);
    wl_context_free(ctx);
}

TEST_CASE("radical classification") {
    wl_context* ctx = wl_context_new(11, 1, 5);
    char* out = nullptr;
    std::string shape = R"({"n0":0,"components":[{"kind":"R","m":1,"alpha":0,"gamma":1,"c":[]}]})";
    REQUIRE(wl_radical(ctx, shape.c_str(), &out) == WL_OK);
    json j = json::parse(take(out));
    CHECK(j["is_special"] == true);
    CHECK(j["splitting"] == 5);
    CHECK(wl_radical(ctx, "not json", &out) == WL_ERR_INVALID);
    wl_context_free(ctx);
}

TEST_CASE("verify-section3 through the API") {
    char* out = nullptr;
    std::string opts = R"({"ell_q": [[3, 4]], "m_max": 1, "alpha_max": 0, "gamma_max": 1})";
    REQUIRE(wl_verify_section3(opts.c_str(), &out) == WL_OK);
    std::string text = take(out);
    CHECK(text.find("\"summary\":true") != std::string::npos);
    CHECK(text.find("\"failures\":0") != std::string::npos);

    std::string bad =
        R"({"ell_q": [[3, 7]], "m_max": 1, "alpha_max": 0, "gamma_max": 1, "inject_sign_flip": true})";
    CHECK(wl_verify_section3(bad.c_str(), &out) == WL_ERR_VERIFY);
    std::string bad_text = take(out);
    CHECK(bad_text.find("\"pass\":false") != std::string::npos);

    std::string emit =
        R"({"ell_q": [[3, 4]], "m_max": 1, "alpha_max": 0, "gamma_max": 1, "emit_matrices": true})";
    REQUIRE(wl_verify_section3(emit.c_str(), &out) == WL_OK);
    CHECK(take(out).find("\"modulus\"") != std::string::npos);
}

TEST_CASE("bruteforce tables and caps") {
    wl_context* ctx = wl_context_new(3, 1, 2);
    char* out = nullptr;
    REQUIRE(wl_bruteforce_classes(ctx, 2, "gl", 0, &out) == WL_OK);
    json j = json::parse(take(out));
    CHECK(j["classes"] == 8);
    CHECK(j["ell_regular"] == 2);
    REQUIRE(wl_bruteforce_radical(ctx, 2, "gl", 0, &out) == WL_OK);
    json r = json::parse(take(out));
    CHECK(r["radical_classes"].size() == 2);
    CHECK(wl_bruteforce_classes(ctx, 2, "gl", 10, &out) == WL_ERR_CAP);
    wl_context_free(ctx);
}
