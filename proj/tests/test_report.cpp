// Claim-report tests: baseline shape of the verification report,
// fault injection through a replaced fixture set, and round-trips of the
// shipped data files.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>
#include <string>

#include "k3/io.hpp"
#include "k3/report.hpp"

using namespace k3;

namespace {

std::string data_dir() {
    const char* d = std::getenv("K3_DATA_DIR");
    return d ? d : "../data";
}

const PaperClaim* find_claim(const PaperReport& r, const std::string& id) {
    for (const auto& c : r.claims)
        if (c.id == id) return &c;
    return nullptr;
}

size_t count_prefix(const PaperReport& r, const std::string& prefix) {
    size_t n = 0;
    for (const auto& c : r.claims)
        if (c.id.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("baseline report shape") {
    auto r = verify_paper();
    CHECK(r.claims.size() >= 40);
    CHECK(r.failed() == 0);
    CHECK(r.all_ok());
    std::set<std::string> ids;
    for (const auto& c : r.claims) {
        CHECK((c.status == "pass" || c.status == "fail" || c.status == "computed-with-note"));
        CHECK(ids.insert(c.id).second);  // ids are unique
        CHECK(!c.expected.empty());
        CHECK(!c.computed.empty());
    }
    CHECK(r.passed() + r.noted() == r.claims.size());
}

TEST_CASE("fault injection: a corrupted polytope fails reflexivity and gates its claims") {
    auto fs = default_fixture_set();
    // doubling the vertices destroys reflexivity (the origin is no longer the
    // unique interior lattice point) but keeps the polytope well-formed
    std::vector<LatticePoint> verts;
    for (const auto& v : fs.delta3.vertices)
        verts.push_back(LatticePoint(2 * v.coords[0], 2 * v.coords[1], 2 * v.coords[2]));
    fs.delta3 = Polytope::hull(verts);

    auto r = verify_paper(fs);
    auto* refl = find_claim(r, "polytope/reflexive/delta3");
    REQUIRE(refl != nullptr);
    CHECK(refl->status == "fail");
    CHECK_FALSE(r.all_ok());

    // everything recomputed from delta3 is skipped, not failed
    CHECK(find_claim(r, "polytope/dual-vertices/delta3") == nullptr);
    CHECK(find_claim(r, "picard/rank/delta3") == nullptr);
    CHECK(find_claim(r, "divisors/picard-gram/delta3") == nullptr);
    CHECK(find_claim(r, "divisors/self-intersections/delta3-dual") == nullptr);
    CHECK(find_claim(r, "duality/delta3") == nullptr);

    // the other two families are unaffected
    CHECK(find_claim(r, "polytope/reflexive/delta1")->status == "pass");
    CHECK(count_prefix(r, "picard/rank/") == 2);
    for (const auto& c : r.claims) CHECK((c.id == refl->id || c.status != "fail"));
}

TEST_CASE("data files round-trip") {
    for (const char* name : {"delta1.json", "delta2.json", "delta3.json"}) {
        auto doc = load_json_file(data_dir() + "/" + name);
        Polytope p = polytope_from_json(doc);
        json out = polytope_to_json(p);
        Polytope q = polytope_from_json(out);
        CHECK(p.same_vertex_set(q));
        CHECK(polytope_to_json(q) == out);
    }
    for (const char* name :
         {"picard_delta1.json", "picard_delta2.json", "picard_delta3.json",
          "picard_delta3_dual.json"}) {
        auto doc = load_json_file(data_dir() + "/" + name);
        Mat g = gram_from_json(doc);
        json out;
        out["gram"] = mat_to_json(g);
        CHECK(gram_from_json(out) == g);
    }
    for (const char* name : {"curve_a17.json", "curve_2a2_a11.json"}) {
        auto doc = load_json_file(data_dir() + "/" + name);
        auto c = curve_from_json(doc);
        // the parsed polynomials expand to a valid sextic
        auto f = expand_torus(c.f2, c.f3);
        CHECK(f.degree == 6);
        CHECK(!f.terms.empty());
    }
}
