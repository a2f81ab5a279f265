/* End-to-end checks of the command-line tool: exit codes, output formats,
 * reproducibility across job counts. argv[1] is the binary under test. */

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

int checks = 0, failures = 0;
std::string cli;

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    CliRun result;
    FILE* pipe = popen(("\"" + cli + "\" " + args + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int rc = pclose(pipe);
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cout << "FAIL: " << what << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "usage: test_cli <path-to-logpois>\n";
        return 1;
    }
    cli = argv[1];

    {
        CliRun r = run("dims --variant=log --n=2 --weights=-2..5 --format=json");
        expect(r.status == 0, "dims exits 0 when every cell matches");
        json doc = json::parse(r.out, nullptr, false);
        expect(!doc.is_discarded(), "dims emits valid JSON");
        if (!doc.is_discarded()) {
            expect(doc["rows"].size() == 32, "4 degrees x 8 weights = 32 rows");
            bool all_match = true;
            for (const auto& row : doc["rows"]) all_match = all_match && row["match"].get<bool>();
            expect(all_match, "all dims rows match the predictions");
            expect(doc["config"].contains("seed") && !doc["config"].contains("jobs"),
                   "config echo excludes --jobs");
        }
    }

    {
        CliRun r = run("dims --n=1");
        expect(r.status == 2, "dims --n=1 exits 2");
        expect(r.out.find("n must be >= 2") != std::string::npos, "n >= 2 message printed");
    }

    {
        CliRun r = run("dims --variant=both --n=3 --weights=-2..6 --format=json");
        expect(r.status == 0, "dims both-variant exits 0");
        json doc = json::parse(r.out, nullptr, false);
        if (!doc.is_discarded()) {
            bool has_iso = false;
            for (const auto& row : doc["rows"])
                if (row["variant"] == "classical" && !row["iso_match"].is_null())
                    has_iso = true;
            expect(has_iso, "both mode annotates classical rows with iso columns");
            expect(doc["suites"].size() == 2, "both mode reports classical-log cell/total suites");
        }
        CliRun csv = run("dims --variant=log --n=2 --weights=0..2 --format=csv");
        expect(csv.out.rfind("variant,n,k,w,dimZ,dimB,dimH,predicted,match", 0) == 0,
               "csv starts with the header row");
    }

    {
        const std::string base = "dims --variant=both --n=2..3 --weights=-2..8 --format=json";
        CliRun a = run(base + " --jobs=1");
        CliRun b = run(base + " --jobs=8");
        expect(a.status == 0 && b.status == 0, "dims runs under both job counts");
        expect(a.out == b.out, "dims JSON is byte-identical across --jobs");
    }

    {
        CliRun r = run("verify --n=2 --weights=-2..8 --seed=42");
        expect(r.status == 0, "verify exits 0 when all suites pass");
        expect(r.out.find("all suites passed") != std::string::npos, "verify prints a summary");
        CliRun ranged = run("verify --n=2..3 --weights=-2..6 --format=json");
        json doc = json::parse(ranged.out, nullptr, false);
        expect(!doc.is_discarded() && doc["suites"].size() == 21,
               "verify --n=2..3 loops the ten per-n suites plus the general-phi one");
    }

    {
        CliRun r = run("verify --n=2 --weights=-2..4 --corrupt-d2");
        expect(r.status == 1, "corrupted d2 makes verify exit 1");
        expect(r.out.find("d2(d1(") != std::string::npos, "counterexample is printed");
    }

    {
        CliRun r = run("verify --n=2 --weights=-2..4 --phi=x^2*y-1 --format=json");
        json doc = json::parse(r.out, nullptr, false);
        bool found = false;
        if (!doc.is_discarded())
            for (const auto& s : doc["suites"])
                if (s["name"] == "complex_dd_phi(x^2*y-1)" && s["pass"].get<bool>()) found = true;
        expect(found, "--phi adds a passing general-phi suite");
        CliRun bad = run("verify --n=2 --phi=x+z");
        expect(bad.status == 2, "unparseable phi exits 2");
    }

    {
        CliRun r = run("reps --n=2 --k=1 --w=0");
        expect(r.status == 0, "reps exits 0");
        expect(r.out.find("y·δ¹") != std::string::npos, "prints y*d1 class");
        expect(r.out.find("x·δ¹ + δ²") != std::string::npos,
               "prints x*d1 + d2 class");
        expect(r.out.find("cocycle-checked") != std::string::npos, "annotates cocycle check");
        expect(r.out.find("non-coboundary-checked") != std::string::npos,
               "annotates non-coboundary check");
        CliRun high = run("reps --n=2 --k=5 --w=0");
        expect(high.status == 2, "reps --k=5 exits 2");
        expect(high.out.find("H^k = 0") != std::string::npos, "message cites H^k = 0");
    }

    {
        CliRun r = run("bench --n=2 --weights=0..6 --format=json");
        expect(r.status == 0, "bench exits 0");
        json doc = json::parse(r.out, nullptr, false);
        expect(!doc.is_discarded() && doc["bench"].size() == 7, "bench emits one cell per weight");
        CliRun empty = run("bench --n=2 --weights=5..-2");
        json edoc = json::parse(empty.out, nullptr, false);
        expect(empty.status == 0 && !edoc.is_discarded() && edoc["bench"].empty(),
               "bench on an empty window emits an empty table and exits 0");
        // identical dimension outputs across job counts
        CliRun j1 = run("bench --n=2..3 --weights=0..8 --jobs=1");
        CliRun j8 = run("bench --n=2..3 --weights=0..8 --jobs=8");
        json d1 = json::parse(j1.out, nullptr, false);
        json d8 = json::parse(j8.out, nullptr, false);
        bool dims_equal = !d1.is_discarded() && !d8.is_discarded() &&
                          d1["bench"].size() == d8["bench"].size();
        if (dims_equal)
            for (std::size_t i = 0; i < d1["bench"].size(); ++i)
                dims_equal = dims_equal && d1["bench"][i]["dimH"] == d8["bench"][i]["dimH"] &&
                             d1["bench"][i]["n"] == d8["bench"][i]["n"] &&
                             d1["bench"][i]["w"] == d8["bench"][i]["w"];
        expect(dims_equal, "bench dimension outputs identical across --jobs");
    }

    {
        CliRun r = run("dims --weights=bogus");
        expect(r.status == 2, "malformed weights range exits 2");
        CliRun unknown = run("frobnicate");
        expect(unknown.status == 2, "unknown subcommand exits 2");
        CliRun benchboth = run("bench --variant=both --n=2");
        expect(benchboth.status == 2, "bench rejects --variant=both");
    }

    std::cout << (failures == 0 ? "ok" : "FAILED") << " (" << (checks - failures) << "/" << checks
              << " checks)\n";
    return failures == 0 ? 0 : 1;
}
