// End-to-end tests of the avoidkit binary: exact output bytes and exit
// codes.  The binary path arrives in the AVOIDKIT_BIN environment
// variable (set by the build).

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path()
{
    const char* bin = std::getenv("AVOIDKIT_BIN");
    if (!bin || !*bin)
        throw std::runtime_error("AVOIDKIT_BIN is not set");
    return std::string(bin);
}

/// Runs the tool with `args`, capturing one stream.  `stream` selects
/// which: "out" (stderr dropped), "err" (stdout dropped), or "both".
RunResult run_stream(const std::string& args, const std::string& stream,
                     const std::string& env_prefix = "")
{
    std::string redirect;
    if (stream == "out")
        redirect = " 2>/dev/null";
    else if (stream == "err")
        redirect = " 2>&1 1>/dev/null";
    else
        redirect = " 2>&1";
    const std::string cmd =
        env_prefix + "\"" + binary_path() + "\" " + args + redirect;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + cmd);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

RunResult run(const std::string& args)
{
    return run_stream(args, "out");
}

nlohmann::ordered_json parse_line(const std::string& text)
{
    return nlohmann::ordered_json::parse(text);
}

} // namespace

TEST_CASE("check reports squarefreeness with exit codes")
{
    RunResult r = run("check 0102");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "squarefree\n");

    r = run("check 0101");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "not squarefree: square 0101 at position 0\n");

    r = run("check 00 --json");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "{\"word\":\"00\",\"squarefree\":false,"
                   "\"square\":{\"position\":0,\"factor\":\"00\"}}\n");

    r = run("--json check 0102");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"word\":\"0102\",\"squarefree\":true}\n");

    // binary alphabet
    r = run("check 0110 --alphabet 2");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "not squarefree: square 11 at position 1\n");
}

TEST_CASE("check rejects malformed words")
{
    RunResult r = run_stream("check 0a2", "err");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error:") != std::string::npos);

    // letter 3 is outside the default ternary alphabet
    r = run_stream("check 013", "err");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("count emits exact statistics as JSON")
{
    RunResult r = run("count 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"target_length\":2,\"count\":6,"
                   "\"nodes_visited\":10,\"max_depth\":2}\n");

    r = run("count 4 --avoid 0120,0210");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"target_length\":4,\"count\":16,"
                   "\"nodes_visited\":38,\"max_depth\":4}\n");

    // binary squarefree words die out at length 3
    r = run("count 5 --alphabet 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"target_length\":5,\"count\":0,"
                   "\"nodes_visited\":7,\"max_depth\":3}\n");
}

TEST_CASE("count is unchanged by the thread setting")
{
    const std::string expected = "{\"target_length\":13,\"count\":342,"
                                 "\"nodes_visited\":1312,\"max_depth\":13}\n";
    RunResult r = run_stream("count 13", "out", "AVOIDANCE_KIT_THREADS=1 ");
    CHECK(r.exit_code == 0);
    CHECK(r.out == expected);
    r = run_stream("count 13", "out", "AVOIDANCE_KIT_THREADS=3 ");
    CHECK(r.exit_code == 0);
    CHECK(r.out == expected);

    // nonsense thread counts warn on stderr and fall back to sequential
    r = run_stream("count 2", "out", "AVOIDANCE_KIT_THREADS=banana ");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"target_length\":2,\"count\":6,"
                   "\"nodes_visited\":10,\"max_depth\":2}\n");
    r = run_stream("count 2", "err", "AVOIDANCE_KIT_THREADS=banana ");
    CHECK(r.out.find("ignoring invalid AVOIDANCE_KIT_THREADS") !=
          std::string::npos);
}

TEST_CASE("enum lists words in lexicographic order")
{
    RunResult r = run("enum 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "01\n02\n10\n12\n20\n21\n");

    r = run("enum 3 --limit 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "010\n012\n");

    r = run("enum 3 --limit 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"target_length\":3,\"words\":[\"010\",\"012\"],"
                   "\"truncated\":true}\n");

    r = run("enum 2 --json");
    CHECK(r.exit_code == 0);
    const auto j = parse_line(r.out);
    CHECK(j.at("words").size() == 6);
    CHECK(j.at("truncated") == nlohmann::ordered_json(false));
}

TEST_CASE("maxlen reports the longest avoiding word or the cap")
{
    RunResult r = run("maxlen --avoid 012");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "finite longest=29 witness=12021201021202102010212010201\n");

    r = run("maxlen --avoid 0 --cap 100");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "finite longest=3 witness=121\n");

    r = run("maxlen --cap 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "exceeds-cap longest=5 witness=01020\n");

    r = run("maxlen --avoid 0 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"kind\":\"finite\",\"longest_length\":3,"
                   "\"witness\":\"121\"}\n");

    r = run_stream("maxlen --cap 0", "err");
    CHECK(r.exit_code == 1);
}

TEST_CASE("allcontain answers with a counterexample or a count")
{
    RunResult r = run("allcontain 4 --require 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "all-contain true checked=18\n");

    r = run("allcontain 2 --require 01");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "all-contain false counterexample=02 missing=01\n");

    // a squarefree word can dodge any one three-letter factor out to
    // length 29, so containment of all six is forced only at 30
    r = run("allcontain 29 --require 012,021,102,120,201,210");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("all-contain false counterexample=") == 0);

    r = run("allcontain 30 --require 012,021,102,120,201,210");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "all-contain true checked=34422\n");
}

TEST_CASE("morphism apply prints the image")
{
    RunResult r = run("morphism --spec 0:12,1:102,2:0 apply --word 012");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "121020\n");

    r = run("morphism --spec 0:12,1:102,2:0 apply --word 012 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"word\":\"012\",\"image\":\"121020\"}\n");
}

TEST_CASE("morphism prolongable answers per letter")
{
    RunResult r = run("morphism --spec 0:12,1:102,2:0 prolongable --letter 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run("morphism --spec 0:12,1:102,2:0 prolongable --letter 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "false\n");

    r = run_stream("morphism --spec 0:12,1:102,2:0 prolongable --letter 01",
                   "err");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("morphism prefix prints the limit word prefix")
{
    RunResult r =
        run("morphism --spec 0:12,1:102,2:0 prefix --seed 1 --length 30");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "102120102012102120121020102120\n");

    // seeds 0 and 1 converge to the same limit
    r = run("morphism --spec 0:12,1:102,2:0 prefix --seed 0 --length 30");
    CHECK(r.out == "102120102012102120121020102120\n");

    // a morphism with no growing letter cannot converge
    r = run_stream("morphism --spec 0:0,1:1,2:2 prefix --seed 0 --length 5",
                   "err");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error:") != std::string::npos);
}

TEST_CASE("morphism sqfree-test finds the shortest bad source")
{
    // the base morphism stops preserving squarefreeness at source length 3
    RunResult r = run("morphism --spec 0:12,1:102,2:0 sqfree-test");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "counterexample 101 image 10212102\n");

    r = run("morphism --spec 0:12,1:102,2:0 sqfree-test --max-length 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "ok\n");

    r = run("morphism --spec 0:12,1:102,2:0 sqfree-test --json");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "{\"ok\":false,\"max_length\":5,"
                   "\"counterexample\":\"101\",\"image\":\"10212102\"}\n");

    r = run("morphism --spec 0:010,1:1,2:2 sqfree-test --max-length 2");
    CHECK(r.exit_code == 2);
    CHECK(r.out == "counterexample 01 image 0101\n");
}

TEST_CASE("morphism preimages lists spanning sources")
{
    RunResult r =
        run("morphism --spec 0:12,1:102,2:0 preimages --factor 0120");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "source=202 offset=0\n");

    r = run("morphism --spec 0:12,1:102,2:0 preimages --factor 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "source=1 offset=1\nsource=2 offset=0\n");

    // no source at all: empty output, still success
    r = run("morphism --spec 0:12,1:102,2:0 preimages --factor 101");
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());

    r = run("morphism --spec 0:12,1:102,2:0 preimages --factor 0120 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"factor\":\"0120\",\"witnesses\":"
                   "[{\"source\":\"202\",\"offset\":0}]}\n");
}

TEST_CASE("morphism certify prints the argument or refuses")
{
    RunResult r = run("morphism --spec 0:12,1:102,2:0 certify --seed 1 "
                      "--avoid 0120,0210 --depth 1000");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "certified 0120,0210 checked_prefix=1000\n"
                   "0120 <- 202@0 no-preimage-exists\n"
                   "0210 <- 11@1 contains-square\n");

    r = run("morphism --spec 0:12,1:102,2:0 certify --seed 1 "
            "--avoid 0120,0210 --depth 500 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\"morphism\":\"0:12,1:102,2:0\",\"seed\":\"1\","
          "\"avoided\":[\"0120\",\"0210\"],"
          "\"argument\":[{\"factor\":\"0120\",\"witnesses\":"
          "[{\"source\":\"202\",\"offset\":0,"
          "\"defect\":\"no-preimage-exists\"}]},"
          "{\"factor\":\"0210\",\"witnesses\":"
          "[{\"source\":\"11\",\"offset\":1,"
          "\"defect\":\"contains-square\"}]}],"
          "\"checked_prefix_length\":500}\n");

    // 102 occurs in the limit word, so certification must refuse
    r = run_stream("morphism --spec 0:12,1:102,2:0 certify --seed 1 "
                   "--avoid 102 --depth 1000",
                   "err");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("certification refused:") != std::string::npos);

    // the depth option enforces its documented range
    r = run_stream("morphism --spec 0:12,1:102,2:0 certify --seed 1 "
                   "--avoid 0120,0210 --depth 10",
                   "err");
    CHECK(r.exit_code == 1);
}

TEST_CASE("classify prints verdicts as text")
{
    RunResult r = run("classify 012");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "word: 012\n"
                   "kind: unavoidable\n"
                   "contained in all 34422 squarefree words of length 30\n");

    r = run("classify 00 --depth 100");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "word: 00\n"
                   "kind: trivially-avoidable\n"
                   "square: 00 at position 0\n"
                   "witness: morphism=0:12,1:102,2:0 seed=1 "
                   "permutation=012→012 checked_prefix=100\n");

    r = run("classify 101 --depth 500");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "word: 101\n"
                   "kind: avoidable\n"
                   "avoids: 101,202\n"
                   "witness: morphism=0:12,1:102,2:0 seed=1 "
                   "permutation=012→012 checked_prefix=500\n");

    // no word argument classifies the empty word
    r = run("classify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("kind: unavoidable\n") != std::string::npos);
}

TEST_CASE("classify emits verdict JSON")
{
    RunResult r = run("classify 0102 --depth 500 --json");
    CHECK(r.exit_code == 0);
    const auto j = parse_line(r.out);
    CHECK(j.at("kind") == nlohmann::ordered_json("avoidable"));
    CHECK(j.at("witness").at("permutation") ==
          nlohmann::ordered_json("012→102"));
    CHECK(j.at("certificate").at("avoided") ==
          nlohmann::ordered_json::array({"010", "212"}));

    RunResult bad = run_stream("classify 101 --depth 10", "err");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("unavoidable-set lists the sixteen words")
{
    RunResult r = run("unavoidable-set");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "\n0\n1\n2\n01\n02\n10\n12\n20\n21\n"
                   "012\n021\n102\n120\n201\n210\n");

    r = run("unavoidable-set --json");
    CHECK(r.exit_code == 0);
    const auto j = parse_line(r.out);
    CHECK(j.at("words").size() == 16);
    CHECK(j.at("words")[0] == nlohmann::ordered_json(""));
    CHECK(j.at("words")[15] == nlohmann::ordered_json("210"));
}

TEST_CASE("usage errors exit with code 1 and help with 0")
{
    RunResult r = run_stream("", "err");
    CHECK(r.exit_code == 1);

    r = run_stream("frobnicate", "err");
    CHECK(r.exit_code == 1);

    r = run_stream("count", "err");
    CHECK(r.exit_code == 1);

    r = run_stream("morphism apply --word 01", "err"); // --spec missing
    CHECK(r.exit_code == 1);

    r = run_stream("morphism --spec 0:12 apply --word 0", "err");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("error:") != std::string::npos);

    r = run("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
}
