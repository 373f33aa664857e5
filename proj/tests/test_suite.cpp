#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "powops/suite.hpp"

using namespace powops;
using OJ = nlohmann::ordered_json;

TEST_CASE("every registered check runs green on a small parameter set") {
    auto pass = [](const char* id, const char* params) {
        VerificationReport r = run_check(id, params);
        INFO(id, " -> ", r.witness);
        CHECK(r.status == "pass");
        CHECK(r.check == id);
        CHECK(r.ref == id);
    };
    pass("cor2.3", R"({"max_i":3})");
    pass("prop3.10", R"({"max_j":3})");
    pass("thm2.2", R"({"group":"S3","V":"std","W":"perm","max_i":4})");
    pass("prop2.1", R"({"group":"S3","module":"std","max_size":3})");
    pass("thm1.6e", R"({"group":"S3","max_k":12})");
    pass("prop1.1", R"({"group":"C2","n":1,"powers":[2]})");
    pass("lemma3.6", R"({"group":"Q8","max_k":8})");
    pass("remark3.12", "{}");
    pass("thm1.6c", R"({"group":"S3"})");
    pass("cor3.8", R"({"group":"Q8"})");
    pass("lemma3.2b", "{}");
    pass("lemma3.2b", R"({"group":"C3","beta":[[2,1,0],[1,1,0]],"k":[2,2]})");
    pass("sec4", R"({"max_abs_D":15})");
    pass("ex4.4", R"({"D_range":"-10..10"})");
    pass("ex4.4", R"({"D":5})");
    pass("thm4.1", R"({"D":3})");
    pass("lemma5.7", R"({"m":4,"k":3,"kprime":3})");
    pass("lemma5.7", R"({"max_m":8,"max_k":8})");
    pass("prop5.3", R"({"m":4,"k":3})");
    pass("prop5.3", R"({"max_m":8,"max_k":8})");
    pass("tables", R"({"group":"A4"})");
    pass("tables", R"({"group":"D6"})");  // no shipped closed form: self-checks only
}

TEST_CASE("failures and skips are reported, not thrown") {
    VerificationReport neg =
        run_check("thm1.6e", R"({"group":"C4","max_k":2,"allow_noncoprime":true})");
    CHECK(neg.status == "fail");
    CHECK(neg.witness.find("psi") != std::string::npos);

    // A library precondition violation fails loudly with the error text.
    VerificationReport pre = run_check("lemma5.7", R"({"m":4,"k":2,"kprime":2})");
    CHECK(pre.status == "fail");
    CHECK(pre.witness.find("error") != std::string::npos);

    // An enumeration past the budget is a skip.
    VerificationReport skip =
        run_check("prop1.1", R"({"group":"C12","n":2,"powers":[5,1]})");
    CHECK(skip.status == "skip");
}

TEST_CASE("the reserved expect parameter inverts the criterion") {
    VerificationReport inv = run_check(
        "thm1.6e", R"({"group":"C4","max_k":2,"allow_noncoprime":true,"expect":"fail"})");
    CHECK(inv.status == "pass");
    CHECK(inv.witness.find("failed as expected") != std::string::npos);

    VerificationReport sur = run_check("thm1.6e", R"({"group":"S3","expect":"fail"})");
    CHECK(sur.status == "fail");
    CHECK(sur.witness.find("expected a failure") != std::string::npos);

    CHECK_THROWS_AS(run_check("thm1.6e", R"({"expect":"maybe"})"), domain_error);
}

TEST_CASE("unknown ids and parameters are rejected") {
    CHECK_THROWS_AS(run_check("nope", "{}"), domain_error);
    CHECK_THROWS_AS(run_check("cor2.3", R"({"max_i":3,"bogus":1})"), domain_error);
    CHECK_THROWS_AS(run_check("cor2.3", "not json"), domain_error);
    CHECK_THROWS_AS(run_check("cor2.3", "[]"), domain_error);
}

TEST_CASE("parameter echo fills the documented defaults") {
    VerificationReport r = run_check("cor2.3", "{}");
    OJ p = OJ::parse(r.params);
    CHECK(p.contains("max_i"));
    CHECK(p.at("max_i").is_number_integer());
}

TEST_CASE("report serialization") {
    VerificationReport r = run_check("cor2.3", R"({"max_i":2})");
    OJ j = OJ::parse(report_json(r));
    CHECK(j.at("check") == "cor2.3");
    CHECK(j.at("ref") == "cor2.3");
    CHECK(j.at("status") == "pass");
    CHECK(j.at("params").is_object());
    CHECK(j.at("ms").is_number());
    std::string text = report_text(r);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("cor2.3") != std::string::npos);
}

TEST_CASE("registry listing") {
    std::vector<std::string> ids = suite_check_ids();
    CHECK(ids.size() == 17);
    for (const char* want :
         {"cor2.3", "prop3.10", "thm2.2", "prop2.1", "thm1.6e", "prop1.1", "lemma3.6",
          "remark3.12", "thm1.6c", "cor3.8", "lemma3.2b", "sec4", "ex4.4", "thm4.1",
          "lemma5.7", "prop5.3", "tables"}) {
        bool found = false;
        for (const std::string& id : ids) found = found || id == want;
        CHECK(found);
        CHECK_FALSE(check_title(want).empty());
    }
    CHECK_THROWS_AS(check_title("nope"), domain_error);
}

TEST_CASE("config grids expand in key order, last key fastest") {
    std::string cfg = R"({
      "thm1.6e": {"group": ["S3", "C6", "Q8"]},
      "lemma5.7": [{"m": [3, 4], "k": [1]}, {"m": 5, "k": 2, "kprime": 3}],
      "prop5.3": {"m": 4, "k": [2, 3]}
    })";
    std::vector<VerificationReport> seq = run_suite(cfg);
    REQUIRE(seq.size() == 3 + 3 + 2);
    CHECK(seq[0].params.find("S3") != std::string::npos);
    CHECK(seq[1].params.find("C6") != std::string::npos);
    CHECK(seq[2].params.find("Q8") != std::string::npos);
    CHECK(seq[3].check == "lemma5.7");
    CHECK(seq[3].params.find("\"m\":3") != std::string::npos);
    CHECK(seq[4].params.find("\"m\":4") != std::string::npos);
    CHECK(seq[5].params.find("\"m\":5") != std::string::npos);
    CHECK(seq[6].params.find("\"k\":2") != std::string::npos);
    CHECK(seq[7].params.find("\"k\":3") != std::string::npos);
    for (const VerificationReport& r : seq) CHECK(r.status == "pass");
    CHECK(all_passed(seq));

    // A literal array parameter is wrapped in an outer array in grids.
    std::vector<VerificationReport> one =
        run_suite(R"({"prop1.1": {"group": "C2", "n": 1, "powers": [[2]]}})");
    REQUIRE(one.size() == 1);
    CHECK(one[0].status == "pass");
    CHECK(one[0].params.find("\"powers\":[2]") != std::string::npos);
}

TEST_CASE("worker pools preserve report order and content") {
    std::string cfg = R"({
      "tables": {"group": ["C2", "C3", "C4", "C5", "C6"]},
      "prop5.3": {"m": [3, 4, 5], "k": [1, 2]}
    })";
    std::vector<VerificationReport> serial = run_suite(cfg);
    SuiteOptions par;
    par.jobs = 4;
    std::vector<VerificationReport> parallel = run_suite(cfg, par);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(parallel[i].check == serial[i].check);
        CHECK(parallel[i].params == serial[i].params);
        CHECK(parallel[i].status == serial[i].status);
        CHECK(parallel[i].witness == serial[i].witness);
    }
}

TEST_CASE("failures poison all_passed but skips do not") {
    std::vector<VerificationReport> rs = run_suite(
        R"({"thm1.6e": {"group": "C4", "max_k": 2, "allow_noncoprime": true}})");
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == "fail");
    CHECK_FALSE(all_passed(rs));

    std::vector<VerificationReport> sk =
        run_suite(R"({"prop1.1": {"group": "C12", "n": 2, "powers": [[5, 1]]}})");
    REQUIRE(sk.size() == 1);
    CHECK(sk[0].status == "skip");
    CHECK(all_passed(sk));

    CHECK(run_suite("{}").empty());
    CHECK(all_passed({}));
}

TEST_CASE("the default grid parses and covers the registry") {
    OJ cfg = OJ::parse(default_suite_config());
    CHECK(cfg.is_object());
    std::vector<std::string> ids = suite_check_ids();
    for (auto it = cfg.begin(); it != cfg.end(); ++it) {
        bool known = false;
        for (const std::string& id : ids) known = known || id == it.key();
        CHECK(known);
    }
    // Every registered check appears in the default grid.
    for (const std::string& id : ids) CHECK(cfg.contains(id));
}

TEST_CASE("malformed configs are rejected") {
    CHECK_THROWS_AS(run_suite("not json"), domain_error);
    CHECK_THROWS_AS(run_suite("[]"), domain_error);
    CHECK_THROWS_AS(run_suite(R"({"nope": {}})"), domain_error);
    CHECK_THROWS_AS(run_suite(R"({"cor2.3": 5})"), domain_error);
}
