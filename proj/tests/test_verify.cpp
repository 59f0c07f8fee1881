#include "doctest.h"

#include "piflag/verify.hpp"

using namespace piflag;

TEST_CASE("predict table") {
    const Prediction exc = predict(FlagType::pi_symmetric(2, {1}));
    CHECK(exc.exceptional);
    CHECK(exc.even_dim == 4);
    CHECK(exc.odd_dim == 4);
    const Prediction gen = predict(FlagType::pi_symmetric(3, {1}));
    CHECK(!gen.exceptional);
    CHECK(gen.even_dim == 8);
    CHECK(gen.odd_dim == 9);
    const Prediction flag = predict(FlagType::pi_symmetric(3, {2, 1}));
    CHECK(!flag.exceptional);
    CHECK(flag.even_dim == 8);
    CHECK(flag.odd_dim == 9);
}

TEST_CASE("run: exceptional super-Grassmannian, deterministic report") {
    VerifyConfig config;
    config.flag = FlagType::pi_symmetric(2, {1});
    config.with_timestamp = false;
    const Report a = run(config);
    CHECK(a.ok);
    CHECK(a.exit_code == 0);
    CHECK(a.json["schema"] == 1);
    CHECK(a.json["checks"]["fields"]["dims"]["even"] == 4);
    CHECK(a.json["checks"]["fields"]["dims"]["odd"] == 4);
    CHECK(a.json["checks"]["compare"]["structure_confirmed"] == true);
    CHECK(!a.json.contains("timestamp_ms"));
    // vertical is not applicable for r = 1 and is not selected by default
    CHECK(!a.json["checks"].contains("vertical"));
    // byte-identical on a re-run
    const Report b = run(config);
    CHECK(a.json.dump() == b.json.dump());
    CHECK(!a.text().empty());
}

TEST_CASE("run: subset of checks") {
    VerifyConfig config;
    config.flag = FlagType::pi_symmetric(3, {1});
    config.checks = {"functions"};
    config.with_timestamp = false;
    const Report r = run(config);
    CHECK(r.exit_code == 0);
    CHECK(r.json["checks"].contains("functions"));
    CHECK(!r.json["checks"].contains("fields"));
    CHECK(r.json["checks"]["functions"]["dimension"] == 1);
}

TEST_CASE("run: configuration errors") {
    VerifyConfig bad_check;
    bad_check.flag = FlagType::pi_symmetric(2, {1});
    bad_check.checks = {"nonsense"};
    CHECK(run(bad_check).exit_code == 2);

    VerifyConfig vertical_on_grassmannian;
    vertical_on_grassmannian.flag = FlagType::pi_symmetric(2, {1});
    vertical_on_grassmannian.checks = {"vertical"};
    CHECK(run(vertical_on_grassmannian).exit_code == 2);

    VerifyConfig invalid_flag;
    invalid_flag.flag = FlagType::pi_symmetric(2, {2});
    CHECK(run(invalid_flag).exit_code == 2);
}

TEST_CASE("atlas dump is deterministic and complete") {
    Atlas atlas(FlagType::pi_symmetric(2, {1}));
    const auto a = atlas_dump(atlas);
    const auto b = atlas_dump(atlas);
    CHECK(a.dump() == b.dump());
    CHECK(a["charts"].size() == 2);
    CHECK(a["transitions"].size() == 2);
    // the classical transition appears in rendered form
    bool found = false;
    for (const auto& t : a["transitions"])
        for (const auto& [var, expr] : t["assignments"].items())
            if (expr.get<std::string>() == "(1)/(x1_11)") found = true;
    CHECK(found);
}
