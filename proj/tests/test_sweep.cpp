#include "gupmag/sweep.hpp"

#include <doctest.h>

#include <cmath>

using namespace gupmag;

TEST_CASE("axis grids") {
    SweepAxis lin{"B", 1.0, 3.0, 5, false};
    const auto g = lin.grid();
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 3.0);
    CHECK(g[2] == doctest::Approx(2.0));

    SweepAxis lg{"T", 1.0, 100.0, 3, true};
    const auto h = lg.grid();
    CHECK(h[1] == doctest::Approx(10.0).epsilon(1e-12));

    CHECK_THROWS_AS((SweepAxis{"B", 2.0, 1.0, 5, false}).grid(), DomainError);
    CHECK_THROWS_AS((SweepAxis{"B", 1.0, 2.0, 1, false}).grid(), DomainError);
    CHECK_THROWS_AS((SweepAxis{"B", 0.0, 2.0, 4, true}).grid(), DomainError);
}

TEST_CASE("cell formatting") {
    CHECK(format_cell(Cell{std::monostate{}}) == "");
    CHECK(format_cell(Cell{42L}) == "42");
    CHECK(format_cell(Cell{std::string("ok")}) == "ok");
    CHECK(format_cell(Cell{0.5}) == "0.5");
    // Full round-trip precision for doubles.
    const double v = 1.0 / 3.0;
    CHECK(std::stod(format_cell(Cell{v})) == v);
}

TEST_CASE("csv output: header, LF endings, quoting") {
    SweepTable t({"a", "b,comma", "c"});
    t.add_row({1.5, std::string("plain"), 2L});
    t.add_row({std::monostate{}, std::string("say \"hi\"\nthere"), 3L});
    const std::string csv = t.to_csv(false);
    CHECK(csv == "a,\"b,comma\",c\n"
                 "1.5,plain,2\n"
                 ",\"say \"\"hi\"\"\nthere\",3\n");

    t.set_meta("k", "v");
    const std::string with_meta = t.to_csv(true);
    CHECK(with_meta.substr(0, 6) == "# k=v\n");
}

TEST_CASE("json round trip is bit-identical") {
    SweepTable t({"x", "label", "count"});
    t.add_row({0.1, std::string("p"), 1L});
    t.add_row({std::monostate{}, std::string("q"), 2L});
    t.add_row({1.0 / 3.0, std::string(""), -7L});
    t.set_meta("var", "B");

    const std::string once = t.to_json(true);
    auto back = SweepTable::from_json(once);
    CHECK(back == t);
    CHECK(back.to_json(true) == once);

    // Without metadata too.
    auto lean = SweepTable::from_json(t.to_json(false));
    CHECK(lean.to_json(false) == t.to_json(false));
}

TEST_CASE("parallel sweep equals serial sweep") {
    auto point = [](int index, double value) -> std::vector<Cell> {
        // Some nontrivial but deterministic math.
        return {long(index), value, std::sin(value) * std::sqrt(index + 1.0)};
    };
    SweepAxis axis{"B", 0.0, 10.0, 443, false};
    const auto grid = axis.grid();
    auto serial = run_sweep({"i", "v", "f"}, grid, point, 1);
    auto parallel = run_sweep({"i", "v", "f"}, grid, point, 8);
    CHECK(serial == parallel);
    CHECK(serial.to_csv(false) == parallel.to_csv(false));
}

TEST_CASE("row width enforcement") {
    SweepTable t({"a", "b"});
    CHECK_THROWS_AS(t.add_row({1.0}), DomainError);
}
