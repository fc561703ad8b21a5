#include <doctest.h>

#include <fstream>
#include <sstream>

#include "intermute/cli.hpp"

using namespace intermute;

namespace {

struct Example {
    std::string line;
    std::vector<std::string> args;
    int exit_code = 0;
    std::string output;
    bool check_output = false;
};

std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, any = false;
    for (char c : s) {
        if (c == '\'') {
            quoted = !quoted;
            any = true;
        } else if (c == ' ' && !quoted) {
            if (any) out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += c;
            any = true;
        }
    }
    if (any) out.push_back(cur);
    return out;
}

std::vector<Example> load(const std::string& path) {
    std::ifstream in(path);
    std::vector<Example> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("$ ", 0) == 0) {
            out.push_back({line, words(line.substr(2))});
        } else if (line.rfind("? ", 0) == 0) {
            out.back().exit_code = std::stoi(line.substr(2));
        } else if (!line.empty() && line[0] != '#' && !out.empty()) {
            out.back().output += line + '\n';
            out.back().check_output = true;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("documented command examples") {
    const auto examples = load(INTERMUTE_FIXTURES "/cli_examples.txt");
    REQUIRE(examples.size() >= 20);
    for (const auto& e : examples) {
        std::ostringstream out, err;
        const int code = run(e.args, out, err);
        CAPTURE(e.line);
        CAPTURE(out.str());
        CAPTURE(err.str());
        CHECK(code == e.exit_code);
        if (e.check_output) CHECK(out.str() == e.output);
    }
}

TEST_CASE("json output parses") {
    std::ostringstream out, err;
    CHECK(run({"--json", "equal", "--theory", "SCk", "-a", "hc{p,p}", "-a", "id{p&p}"}, out, err) == 1);
    CHECK(out.str().find("\"NotEqual\"") != std::string::npos);
}
