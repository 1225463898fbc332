#include <catch_amalgamated.hpp>

#include "fold/catalog.hpp"

#include <set>

using namespace fold;

TEST_CASE("catalog size and shape") {
    auto catalog = relation_catalog();
    CHECK(catalog.size() >= 60);

    std::set<std::string> ids;
    for (const auto& r : catalog) {
        INFO(r.id);
        CHECK(ids.insert(r.id).second);  // unique ids
        CHECK(r.lhs->src == r.rhs->src);
        CHECK(r.lhs->tgt == r.rhs->tgt);
        CHECK_FALSE(r.origin.empty());
    }
    CHECK(ids.count("barbell.green") == 1);
    CHECK(ids.count("HI.middle_brown") == 1);
    CHECK(ids.count("general_forcing.green[as*at]") == 1);
}

TEST_CASE("all catalog relations verify") {
    for (const auto& r : relation_catalog()) {
        INFO(r.id << "   lhs=" << to_text(r.lhs) << "   rhs=" << to_text(r.rhs));
        CHECK(verify_relation(r));
    }
}

TEST_CASE("negative control") {
    // a deliberately corrupted relation must fail
    Relation bad{"corrupt", barb_g(), detail::pbox("as*at"), "negative control", false};
    CHECK_FALSE(verify_relation(bad));
}
