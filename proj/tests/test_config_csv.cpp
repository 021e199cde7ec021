#include "dcb/config.hpp"
#include "dcb/csv.hpp"

#include "dcb/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace dcb;

TEST_CASE("defaults reproduce the standard parameter set") {
    const Config cfg;
    cfg.validate();
    CHECK(cfg.cells == 7);
    CHECK(cfg.channels_per_cell == 100);
    CHECK(cfg.reuse == 3);
    CHECK(cfg.threshold == 70);
    CHECK(cfg.carrier_mhz == 1800.0);
    CHECK(cfg.tx_power_kw == 1.5);
    CHECK(cfg.bs_height_m == 100.0);
    CHECK(cfg.mean_holding_s == 90.0);
    CHECK(cfg.cell_radius_km == 1.0);
}

TEST_CASE("config parsing") {
    SUBCASE("keys override defaults, comments ignored") {
        std::istringstream in("# scenario\nthreshold = 60\nlambda_ref = 1.5  # calls/s\n\nseed=7\n");
        const Config cfg = parse_config(in);
        CHECK(cfg.threshold == 60);
        CHECK(cfg.lambda_ref == 1.5);
        CHECK(cfg.seed == 7);
        CHECK(cfg.channels_per_cell == 100); // untouched default
    }
    SUBCASE("unknown key names the line") {
        std::istringstream in("threshold = 60\nbogus = 1\n");
        try {
            parse_config(in);
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
            CHECK(std::string(e.what()).find("bogus") != std::string::npos);
        }
    }
    SUBCASE("malformed lines rejected") {
        std::istringstream a("threshold 60\n");
        CHECK_THROWS_AS(parse_config(a), ConfigError);
        std::istringstream b("threshold = sixty\n");
        CHECK_THROWS_AS(parse_config(b), ConfigError);
        std::istringstream c("threshold =\n");
        CHECK_THROWS_AS(parse_config(c), ConfigError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_config("/no/such/file.cfg"), ConfigError);
    }
}

TEST_CASE("config validation") {
    Config cfg;
    cfg.threshold = 101;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = Config{};
    cfg.mean_holding_s = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = Config{};
    cfg.cells = 8;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    cfg = Config{};
    cfg.inner_radius_fraction = 1.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("scenario assembly from config") {
    Config cfg;
    cfg.lambda_ref = 1.2;
    cfg.lambda_background = 0.3;
    const Scenario s = cfg.make_scenario(true);
    CHECK(s.borrowing_enabled);
    CHECK(s.traffic.arrival_rates[0] == 1.2);
    for (size_t i = 1; i < 7; ++i)
        CHECK(s.traffic.arrival_rates[i] == 0.3);
    CHECK(s.layout.cell_radius() == 1000.0);

    const RadioEnvironment env = cfg.make_environment();
    CHECK(env.tx_power_w == 1500.0);
    CHECK(env.cell_radius_m == 1000.0);
}

TEST_CASE("CSV writer output is stable and well-formed") {
    CsvWriter csv({"x", "y"}, 6);
    csv.begin_row();
    csv.add(1.0);
    csv.add(0.123456789);
    csv.end_row();
    csv.begin_row();
    csv.add(std::string("3"));
    csv.add_empty();
    csv.end_row();
    CHECK(csv.str() == "x,y\n1,0.123457\n3,\n");

    CHECK(CsvWriter::format_number(127.12995420804319, 6) == "127.13");
    CHECK(CsvWriter::format_number(0.5, 12) == "0.5");

    CsvWriter bad({"x"}, 6);
    bad.begin_row();
    CHECK_THROWS_AS(bad.end_row(), StateError);
}
