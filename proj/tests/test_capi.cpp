#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "wavefront_c.h"

using nlohmann::json;

namespace {

struct Ctx {
    wf_ctx* p;
    Ctx() : p(wf_ctx_create()) {}
    ~Ctx() { wf_ctx_destroy(p); }
};

json take(char* s)
{
    REQUIRE(s != nullptr);
    json j = json::parse(std::string(s));
    wf_string_free(s);
    return j;
}

} // namespace

TEST_CASE("context lifecycle")
{
    Ctx c;
    REQUIRE(c.p != nullptr);
    CHECK(wf_ctx_errcode(c.p) == 0);
    CHECK(std::string(wf_ctx_errmsg(c.p)).empty());
}

TEST_CASE("wave front endpoint")
{
    Ctx c;
    CHECK(take(wf_wavefront(
              c.p, R"({"lp":[6,4,2],"ep":[1,-1,1],"lm":[],"em":[]})")) ==
          json::parse("[5,3,3,1,1]"));
    CHECK(take(wf_wavefront(
              c.p, R"({"lp":[4,2],"ep":[1,1],"lm":[2],"em":[1]})")) ==
          json::parse("[9]"));
    CHECK(take(wf_wavefront(
              c.p, R"({"lp":[2],"ep":[-1],"lm":[2],"em":[-1]})")) ==
          json::parse("[3,1,1]"));
}

TEST_CASE("sign table endpoint")
{
    Ctx c;
    json rows = take(wf_table_5_3(c.p, "[6,4,2]"));
    REQUIRE(rows.size() == 8);
    CHECK(rows[0]["eps"] == json::parse("[1,1,1]"));
    CHECK(rows[0]["k"] == 0);
    CHECK(rows[0]["mu"] == json::parse("[13]"));
    CHECK(rows[1]["eps"] == json::parse("[1,1,-1]"));
    CHECK(rows[1]["k"] == 1);
    CHECK(rows[1]["tmin"] == json::parse("[8,2,1,1]"));
    CHECK(rows[1]["mu"] == json::parse("[9,1,1,1,1]"));
    CHECK(rows[7]["eps"] == json::parse("[-1,-1,-1]"));
    CHECK(rows[7]["mu"] == json::parse("[11,1,1]"));
}

TEST_CASE("duality endpoints")
{
    Ctx c;
    CHECK(take(wf_dual(c.p, "symp", "[2,2]")) == json::parse("[3,1,1]"));
    CHECK(take(wf_sp(c.p, "[4,3,3,2]")) == json::parse("[4,4,2,2]"));
}

TEST_CASE("family endpoint")
{
    Ctx c;
    json fam = take(wf_family(c.p, "symp", "[2,2]"));
    CHECK(fam["special"] == json::parse("[2,2]"));
    CHECK(fam["members"].size() == 4);
    CHECK(fam["symbol"]["kind"] == "imp");
}

TEST_CASE("induction endpoint")
{
    Ctx c;
    json ind = take(wf_induce(c.p, "[2,2]", "[3,1]"));
    CHECK(ind["lambda"] == json::parse("[6,2]"));
    CHECK(ind["regular"] == true);
    CHECK(ind["Jp"] == json::parse("[1]"));
    CHECK(ind["Jm"] == json::parse("[2]"));
}

TEST_CASE("springer endpoint round trips")
{
    Ctx c;
    json d = take(wf_springer(
        c.p,
        R"({"lambda":[6,4,2],"class":"symp","eps":{"6":1,"4":1,"2":-1}})"));
    CHECK(d["k"] == 1);
    json rho = d["rho"];
    REQUIRE(rho.size() == 2);
}

TEST_CASE("symbol endpoint")
{
    Ctx c;
    json s = take(wf_symb(c.p, "symp", "[2,2]"));
    CHECK(s["kind"] == "imp");
}

TEST_CASE("verify endpoint honors the bound")
{
    Ctx c;
    json rep = take(wf_verify(c.p, "all", 0));
    CHECK(rep["passed"] == true);
    CHECK(rep["failures"].empty());
}

TEST_CASE("error paths set codes and messages")
{
    Ctx c;

    CHECK(wf_wavefront(c.p, "not json") == nullptr);
    CHECK(wf_ctx_errcode(c.p) == 1);
    CHECK_FALSE(std::string(wf_ctx_errmsg(c.p)).empty());

    CHECK(wf_dual(c.p, "symp", "[3,1]") == nullptr); /* not symplectic */
    CHECK(wf_ctx_errcode(c.p) != 0);

    CHECK(wf_dual(c.p, "mystery", "[2,2]") == nullptr);
    CHECK(wf_ctx_errcode(c.p) == 1);

    CHECK(wf_sp(c.p, "[1,2]") == nullptr); /* increasing sequence */
    CHECK(wf_ctx_errcode(c.p) == 4);

    CHECK(wf_table_5_3(c.p, "[6,4,3]") == nullptr); /* odd part */
    CHECK(wf_ctx_errcode(c.p) == 6);

    CHECK(wf_wavefront(c.p, nullptr) == nullptr);
    CHECK(wf_ctx_errcode(c.p) == 6);

    /* a successful call clears the error state */
    CHECK(take(wf_dual(c.p, "symp", "[2,2]")) == json::parse("[3,1,1]"));
    CHECK(wf_ctx_errcode(c.p) == 0);
}
