#include "flagmono/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "flagmono/chains.hpp"
#include "flagmono/errors.hpp"

using namespace flagmono;
using nlohmann::json;

namespace {

Subset mk(std::initializer_list<int> es) {
    Subset s = 0;
    for (int e : es) s |= element_bit(e);
    return s;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("flagmono_test_" + name);
}

}  // namespace

TEST_CASE("matroid text serialization is bit-exact") {
    CHECK(to_text(Matroid::uniform(2, 3)) == "n=3 r=2\n1 2\n1 3\n2 3\n");
    // bases sorted lexicographically regardless of input order
    Matroid m = Matroid::from_bases(4, {mk({2, 3}), mk({1, 4}), mk({1, 2}), mk({1, 3}),
                                        mk({2, 4}), mk({3, 4})});
    CHECK(to_text(m) == "n=4 r=2\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    CHECK(to_text(Matroid::uniform(0, 3)) == "n=3 r=0\n");
}

TEST_CASE("matroid text parsing") {
    std::istringstream in("n=3 r=2\n1 2\n1 3\n\nn=3 r=0\n\nn=2 r=1\n1\n2\n");
    auto ms = read_matroids_text(in);
    REQUIRE(ms.size() == 3);
    CHECK(ms[0] == Matroid::from_bases(3, {mk({1, 2}), mk({1, 3})}));
    CHECK(ms[1] == Matroid::uniform(0, 3));
    CHECK(ms[2] == Matroid::uniform(1, 2));

    std::istringstream bad1("n=3\n1 2\n");
    CHECK_THROWS_AS(read_matroids_text(bad1), ParseError);
    std::istringstream bad2("n=3 r=2\n1 5\n");
    CHECK_THROWS_AS(read_matroids_text(bad2), ParseError);
    std::istringstream bad3("n=3 r=2\n1\n");
    CHECK_THROWS_AS(read_matroids_text(bad3), ParseError);
    std::istringstream bad4("1 2\n");
    CHECK_THROWS_AS(read_matroids_text(bad4), ParseError);
}

TEST_CASE("text round trip over a whole catalog") {
    Catalog cat = enumerate_matroids(4, 2);
    std::ostringstream out;
    for (std::size_t i = 0; i < cat.entries.size(); ++i) out << to_text(cat.entries[i].m) << "\n";
    std::istringstream in(out.str());
    auto back = read_matroids_text(in);
    REQUIRE(back.size() == cat.entries.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == cat.entries[i].m);
}

TEST_CASE("matroid JSON") {
    Matroid m = Matroid::from_bases(3, {mk({1, 2}), mk({1, 3})});
    json j = to_json(m);
    CHECK(j.at("n") == 3);
    CHECK(j.at("bases") == json::array({{1, 2}, {1, 3}}));
    CHECK(matroid_from_json(j) == m);

    CHECK_THROWS_AS(matroid_from_json(json{{"n", 3}}), ParseError);
    CHECK_THROWS_AS(matroid_from_json(json{{"n", 2}, {"bases", {{1, 3}}}}), ParseError);

    Catalog cat;
    cat.entries.push_back({"one", "named", m});
    json arr = catalog_to_json(cat);
    REQUIRE(arr.is_array());
    CHECK(arr[0].at("name") == "one");
    CHECK(arr[0].at("provenance") == "named");
}

TEST_CASE("file reading sniffs the format") {
    Catalog cat;
    cat.entries.push_back({"a", "named", Matroid::uniform(2, 3)});
    cat.entries.push_back({"b", "named", Matroid::uniform(0, 2)});

    auto text_path = temp_file("roundtrip.txt");
    write_matroids_file(text_path.string(), cat, false);
    auto ms = read_matroids_file(text_path.string());
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == cat.entries[0].m);
    CHECK(ms[1] == cat.entries[1].m);

    auto json_path = temp_file("roundtrip.json");
    write_matroids_file(json_path.string(), cat, true);
    auto ms2 = read_matroids_file(json_path.string());
    REQUIRE(ms2.size() == 2);
    CHECK(ms2[0] == cat.entries[0].m);
    CHECK(ms2[1] == cat.entries[1].m);

    std::filesystem::remove(text_path);
    std::filesystem::remove(json_path);
    CHECK_THROWS_AS(read_matroids_file("/nonexistent/flagmono"), ParseError);
}

TEST_CASE("rank-set ordering and flag-vector serialization") {
    auto order = ordered_rank_sets(3);
    CHECK(order == std::vector<RankSet>{0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111});

    FlagVector f = flag_f_vector(flat_lattice(Matroid::uniform(3, 4)));
    json j = flag_vector_to_json(f);
    REQUIRE(j.size() == 4);
    CHECK(j[0] == json({{"S", json::array()}, {"value", 1}}));
    CHECK(j[1] == json({{"S", {1}}, {"value", 4}}));
    CHECK(j[2] == json({{"S", {2}}, {"value", 6}}));
    CHECK(j[3] == json({{"S", {1, 2}}, {"value", 12}}));

    FlagVector h = h_from_f(f);
    CHECK(flag_vector_to_csv(f, h) ==
          "S_mask,size,f,h\n0,0,1,1\n1,1,4,3\n2,1,6,5\n3,2,12,3\n");
}
