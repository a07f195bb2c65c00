#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "origami/cli.hpp"
#include "support.hpp"

using json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = origami::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string expand(std::string arg) {
    const std::string key = "@FIXTURES@";
    if (const auto at = arg.find(key); at != std::string::npos) arg.replace(at, key.size(), ORIGAMI_FIXTURES);
    return arg;
}

std::string fmt_g10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
    ~ScopedEnv() { unsetenv(name_); }

private:
    const char* name_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fixture manifest") {
    const json manifest = json::parse(slurp(testing::fixture("cli_manifest.json")));
    REQUIRE(manifest.size() > 20);
    for (const auto& c : manifest) {
        const std::string name = c["name"];
        CAPTURE(name);
        std::vector<std::string> args{"--json"};
        for (const auto& a : c["args"]) args.push_back(expand(a));
        const Outcome r = call(args);
        CHECK(r.code == c["exit"].get<int>());
        if (!c.contains("expect")) continue;
        REQUIRE(!r.out.empty());
        const json rec = json::parse(r.out);
        CHECK(rec["schema"] == 1);
        for (const auto& e : c["expect"]) {
            const json::json_pointer ptr(e[0].get<std::string>());
            CAPTURE(e[0].get<std::string>());
            REQUIRE(rec.contains(ptr));
            const json& got = rec[ptr];
            if (e[1].is_number()) {
                CHECK(std::abs(got.get<double>() - e[1].get<double>()) <= e[2].get<double>());
            } else {
                CHECK(got == e[1]);
            }
        }
    }
}

TEST_CASE("json output round trips and matches the table") {
    const std::vector<std::vector<std::string>> commands{
        {"solve-cubic", "1", "-1", "-2", "1"},
        {"trisect", "--alpha", "60", "--h", "0.2", "--all"},
        {"double-cube", "--side", "1"},
        {"heptagon"},
        {"haga", "--x", "0.5", "--second-theorem"},
        {"fold", "--ax", "0.2", "--ay", "0.7", "--bx", "0.8", "--by", "0.3", "--vertical"},
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd.front());
        std::vector<std::string> with_json{"--json"};
        with_json.insert(with_json.end(), cmd.begin(), cmd.end());
        const Outcome j = call(with_json);
        const Outcome t = call(cmd);
        REQUIRE(j.code == 0);
        REQUIRE(t.code == 0);
        const json rec = json::parse(j.out);
        CHECK(json::parse(rec.dump()) == rec);
        CHECK(rec["ok"] == true);
        CHECK(rec["command"] == cmd.front());
        CHECK(rec.contains("inputs"));
        CHECK(rec.contains("residuals"));
    }
    const json tri = json::parse(call({"--json", "trisect", "--alpha", "60", "--h", "0.2", "--all"}).out);
    const std::string table = call({"trisect", "--alpha", "60", "--h", "0.2", "--all"}).out;
    for (const auto& s : tri["solutions"]) {
        CHECK(table.find(fmt_g10(s["X_hat"].get<double>())) != std::string::npos);
        CHECK(table.find(s["which"].get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("tolerance from the environment") {
    {
        ScopedEnv env("ORIGAMI_EPS", "1e-12");
        CHECK(call({"heptagon"}).code == 0);
    }
    {
        ScopedEnv env("ORIGAMI_EPS", "1e-30");
        const Outcome r = call({"--json", "heptagon"});
        CHECK(r.code == 4);
        CHECK(json::parse(r.out)["ok"] == false);
    }
    for (const char* bad : {"abc", "-1", "0", "1e-3x"}) {
        ScopedEnv env("ORIGAMI_EPS", bad);
        CHECK(call({"heptagon"}).code == 2);
    }
}

TEST_CASE("help and usage") {
    const Outcome h = call({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("solve-cubic") != std::string::npos);
    CHECK(call({"trisect", "--help"}).code == 0);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"solve-cubic", "1", "2"}).code == 2);
    CHECK(call({"solve-cubic", "1", "x", "2", "3"}).code == 2);
}

TEST_CASE("run and render write identical svg") {
    const auto dir = std::filesystem::temp_directory_path() / "origami_cli_test";
    std::filesystem::create_directories(dir);
    const std::string script = testing::fixture("scripts/trisect_x1.fold");
    const std::string a = (dir / "a.svg").string(), b = (dir / "b.svg").string();
    const std::vector<std::string> view{"--window", "-0.1", "0.7", "-0.1", "0.7", "--highlight", "G:Bp"};
    std::vector<std::string> r1{"run", script, "--render", a};
    std::vector<std::string> r2{"render", script, b};
    r1.insert(r1.end(), view.begin(), view.end());
    r2.insert(r2.end(), view.begin(), view.end());
    CHECK(call(r1).code == 0);
    CHECK(call(r2).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(testing::fixture("golden/trisect_x1.svg")));
    CHECK(call({"render", script, b, "--highlight", "G:Nope"}).code == 3);
    CHECK(call({"render", script, b, "--highlight", "GBp"}).code == 2);
    CHECK(call({"render", script, b, "--window", "1", "0", "0", "1"}).code == 3);
    CHECK(call({"render", script, (dir / "missing" / "x.svg").string()}).code == 2);
    std::filesystem::remove_all(dir);
}

}
