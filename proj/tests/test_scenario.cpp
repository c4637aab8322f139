#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "liftobs/error.hpp"
#include "liftobs/scenario.hpp"

using namespace liftobs;

namespace {

const std::string kData = TEST_DATA_DIR;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(bool(in));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void expect_rejected(const std::string& text, const std::vector<std::string>& fragments) {
    try {
        parse_scenario_text(text, kData);
        FAIL("expected the scenario to be rejected");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrKind::Input);
        std::string msg = e.what();
        for (const auto& frag : fragments) {
            INFO("looking for '" << frag << "' in:\n" << msg);
            CHECK(msg.find(frag) != std::string::npos);
        }
    }
}

// 1-connected, everything trivial except an order-2 fundamental piece
const char* kBase = R"({
  "extension": {"pi1K": "Z/2", "pi2K": "Z", "D": "0", "gamma_rank": 1,
                "d1": [], "d2": [[0]], "fund_ext": [[0]]},
  "bundle": {"pi2X": "0", "pi3X": "0", "H2X": "0", "H3X": "0",
             "h2": [], "d2P": [[]], "d3P": [[]]}
})";

} // namespace

TEST_CASE("document violations are reported with paths, all at once") {
    expect_rejected("{}", {"/extension: missing", "/bundle: missing"});
    expect_rejected("this is not json", {"scenario is not valid JSON"});
    expect_rejected(R"({"extension": 3, "bundle": []})",
                    {"/extension: expected an object", "/bundle: expected an object"});

    std::string text = kBase;
    text.replace(text.find("\"gamma_rank\": 1"), 15, "\"gamma_rank\": 1.5");
    expect_rejected(text, {"/extension/gamma_rank", "quote big integers as decimal strings"});

    text = kBase;
    text.replace(text.find("\"d2\": [[0]]"), 11, "\"d2\": [[0], [0]]");
    expect_rejected(text, {"/extension/d2: need 1 rows (target generators), got 2"});

    text = kBase;
    text.replace(text.find("\"d2\": [[0]]"), 11, "\"d2\": [[2]]");
    expect_rejected(text, {"/extension/fund_ext: only applies when d2 = 0"});

    text = kBase;
    text.replace(text.find("\"h2\": []"), 8,
                 "\"h2\": [], \"covering\": {\"nerve\": \"rp2_nerve.txt\", "
                 "\"cocycle\": \"rp2_cocycle.txt\"}");
    expect_rejected(text, {"/bundle/covering: requires pi1X"});

    text = kBase;
    text.replace(text.find("\"h2\": []"), 8, "\"h2\": [], \"pi1X\": \"Z/2\", \"pi1P_class\": [[0]]");
    expect_rejected(text, {"/bundle/pi1P_class", "|pi1X|^2 = 4"});

    text = kBase;
    text.replace(text.find("\"h2\": []"), 8,
                 "\"h2\": [], \"pi1X\": \"Z/2\", \"covering\": {\"nerve\": \"no_such_nerve.txt\", "
                 "\"cocycle\": \"rp2_cocycle.txt\"}");
    expect_rejected(text, {"/bundle/covering", "no_such_nerve.txt"});

    expect_rejected(R"({"extension": {}, "bundle": {}, "web": 1})", {"/web: unknown field"});
    // one rejection lists gaps across both sections
    expect_rejected(R"({"extension": {}, "bundle": {}})",
                    {"/extension/pi1K: missing", "/bundle/h2: missing"});
}

TEST_CASE("minimal scenarios parse and run") {
    ScenarioConfig cfg = parse_scenario_text(kBase, kData);
    CHECK(cfg.extension.pi1K == FgAbGroup::cyclic(2));
    CHECK(cfg.extension.gamma_rank == 1);
    CHECK_FALSE(cfg.options.sign_ledger);
    CHECK(run_compute(cfg).verdict == Verdict::LiftsForAllP);

    std::string with_opts = kBase;
    with_opts.replace(with_opts.find("\"extension\""), 11,
                      "\"options\": {\"sign_ledger\": true}, \"extension\"");
    CHECK(parse_scenario_text(with_opts, kData).options.sign_ledger);

    std::string bad_opts = kBase;
    bad_opts.replace(bad_opts.find("\"extension\""), 11,
                     "\"options\": {\"nope\": true}, \"extension\"");
    expect_rejected(bad_opts, {"/options/nope: unknown field"});
}

TEST_CASE("stored scenarios reproduce their reports byte for byte") {
    for (const char* name : {"pu_s3_m1", "pu_s3_m2", "pu_s3_m5", "so3_s2", "findim_s3",
                             "trivial_ext", "rp2_flat"}) {
        INFO("scenario " << name);
        ScenarioConfig cfg = parse_scenario(kData + "/" + name + ".json");
        ObstructionReport r = run_compute(cfg);
        std::string machine = emit_report(r, ReportFormat::Machine);
        CHECK(machine == slurp(kData + "/golden_" + name + ".report.json"));
        CHECK(machine == emit_report(r, ReportFormat::Machine));  // emission is deterministic

        ObstructionReport back = parse_machine_report(machine);
        CHECK(back.verdict == r.verdict);
        CHECK(back.pi2_hom == r.pi2_hom);
        CHECK(back.pi3_hom == r.pi3_hom);
        CHECK(back.flat_ext == r.flat_ext);
        CHECK(back.cech_class.has_value() == r.cech_class.has_value());
        if (back.cech_class && r.cech_class) CHECK(*back.cech_class == *r.cech_class);
        CHECK(back.provenance == r.provenance);
        CHECK(emit_report(back, ReportFormat::Machine) == machine);
    }
}

TEST_CASE("report formats carry the sign table only on request") {
    ScenarioConfig cfg = parse_scenario(kData + "/findim_s3.json");
    ObstructionReport r = run_compute(cfg);
    std::string text = emit_report(r, ReportFormat::Text);
    CHECK(text.rfind("verdict: Zero", 0) == 0);
    CHECK(text.find("sign ledger") == std::string::npos);
    CHECK(emit_report(r, ReportFormat::Text, true).find("sign ledger") != std::string::npos);
    CHECK(emit_report(r, ReportFormat::Machine).find("sign_ledger") == std::string::npos);
    CHECK(emit_report(r, ReportFormat::Machine, true).find("\"sign_ledger\"") !=
          std::string::npos);
}
