#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <argonaut/argument.hpp>
#include <argonaut/dirichlet.hpp>
#include <argonaut/errors.hpp>
#include <argonaut/lfunction.hpp>
#include <argonaut/zeros.hpp>

using namespace argonaut;
namespace fs = std::filesystem;

namespace {

// Ordinates with independently published 1e-12 accuracy.
constexpr double kZeta1 = 14.134725141734693790;
constexpr double kZeta2 = 21.022039638771554993;
constexpr double kZeta3 = 25.010857580145688763;
constexpr double kZeta4 = 30.424876125859513210;

fs::path fresh_dir(const char* tag) {
    auto p = fs::temp_directory_path() / (std::string("argonaut-") + tag + "-" +
                                          std::to_string(std::random_device{}()));
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("zeta ordinates below 31") {
    const auto zeta = zeta_descriptor();
    const ZeroTable t = find_zeros(zeta, 31.0);
    REQUIRE(t.size() == 4);
    CHECK(t.count_verified);
    CHECK(t.suspect_intervals.empty());
    CHECK(std::abs(t.ordinates[0] - kZeta1) < 1e-8);
    CHECK(std::abs(t.ordinates[1] - kZeta2) < 1e-8);
    CHECK(std::abs(t.ordinates[2] - kZeta3) < 1e-8);
    CHECK(std::abs(t.ordinates[3] - kZeta4) < 1e-8);
    for (int m : t.multiplicities) CHECK(m == 1);
    CHECK(t.reflects_negative());
}

TEST_CASE("zeta count to 100") {
    const ZeroTable t = find_zeros(zeta_descriptor(), 100.0);
    CHECK(t.size() == 29);
    CHECK(t.count_upto(100.0) == 29);
    CHECK(t.count_upto(30.0) == 3);
    // reflection doubles the window count away from zero ordinates
    CHECK(t.zeros_in(-30.0, 30.0).size() == 6);
    CHECK(t.zeros_in(14.0, 15.0).size() == 1);
}

TEST_CASE("odd character mod 4: first ordinate") {
    const auto chi4 = dirichlet_descriptor(dirichlet_character(4, 1));
    const ZeroTable t = find_zeros(chi4, 10.0);
    REQUIRE(t.size() >= 1);
    CHECK(std::abs(t.ordinates[0] - 6.0209489) < 1e-5);
    CHECK(t.count_verified);
}

TEST_CASE("non-self-dual instance scans both half lines") {
    const auto chi5 = dirichlet_descriptor(dirichlet_character(5, 1));
    CHECK_FALSE(chi5.self_dual());
    const ZeroTable t = find_zeros(chi5, 20.0);
    CHECK_FALSE(t.reflects_negative());
    bool has_pos = false, has_neg = false;
    for (double g : t.ordinates) {
        has_pos = has_pos || g > 0.0;
        has_neg = has_neg || g < 0.0;
    }
    CHECK(has_pos);
    CHECK(has_neg);
}

TEST_CASE("rotated completed function is real with the right modulus") {
    const auto zeta = zeta_descriptor();
    for (double t : {2.0, 15.5, 16.0, 29.3})
        CHECK(std::abs(std::abs(hardy_function(zeta, t)) -
                       std::abs(evaluate_l(zeta, Complex(0.5, t)))) < 1e-9);
    CHECK(hardy_function(zeta, 14.0) * hardy_function(zeta, 14.2) < 0.0);
}

TEST_CASE("cache round trip") {
    const auto zeta = zeta_descriptor();
    const ZeroTable t = find_zeros(zeta, 31.0);
    const fs::path dir = fresh_dir("cache");
    write_zero_cache(t, dir);
    const auto back = load_zero_cache(dir, "zeta", 31.0);
    REQUIRE(back.has_value());
    REQUIRE(back->size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(back->ordinates[i] == doctest::Approx(t.ordinates[i]).epsilon(1e-14));
        CHECK(back->multiplicities[i] == t.multiplicities[i]);
    }
    CHECK_FALSE(load_zero_cache(dir, "zeta", 200.0).has_value());
    CHECK_FALSE(load_zero_cache(dir, "other", 10.0).has_value());

    // obtain_zeros prefers the cache and never rescans below the stored height
    const ZeroTable again = obtain_zeros(zeta, 30.0, dir);
    CHECK(again.size() == 4);  // stored table reaches 31
    fs::remove_all(dir);
}

TEST_CASE("ingest folds repeated ordinates and flags bad lines") {
    const fs::path dir = fresh_dir("ingest");
    const fs::path file = dir / "list.txt";
    {
        std::ofstream out(file);
        out << "# comment line\n14.134725141734694\n14.134725141734694\n21.022039638771555\n";
    }
    const ZeroTable t = ingest_zero_table(file, "zeta");
    REQUIRE(t.size() == 2);
    CHECK(t.multiplicities[0] == 2);
    CHECK(t.multiplicities[1] == 1);
    CHECK(t.provenance == ZeroTable::Provenance::Ingested);
    CHECK(t.height_max == doctest::Approx(21.022039638771555));

    const fs::path bad = dir / "bad.txt";
    {
        std::ofstream out(bad);
        out << "14.1\nnot-a-number\n";
    }
    CHECK_THROWS_AS(ingest_zero_table(bad, "zeta"), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("verification flag gates downstream use") {
    ZeroTable t = find_zeros(zeta_descriptor(), 31.0);
    CHECK_NOTHROW(require_verified(t));
    t.count_verified = false;
    CHECK_THROWS_AS(require_verified(t), CompletenessFailure);
}

TEST_CASE("table count agrees with the winding count") {
    const ZeroTable t = find_zeros(zeta_descriptor(), 30.0);
    const CountResult c = count_zeros_by_argument(zeta_descriptor(), 0.0, 30.0);
    CHECK(double(t.size()) == doctest::Approx(c.value));
}
