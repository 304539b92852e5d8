#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "primelab/cli.hpp"
#include "primelab/error.hpp"
#include "primelab/io.hpp"
#include "primelab/labelings.hpp"

using namespace primelab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"primelab"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());
    std::ostringstream out, err;
    const int code = cli_main(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / "primelab_unit_tests";
    fs::create_directories(dir);
    return dir;
}

std::vector<FamilyParams> smallest_instances() {
    return {CyclePendantStar{3, 4}, CycleChain{4, 1}, FibonacciChain{1}, Prism{4}, Book{1, 3}};
}

}  // namespace

TEST_CASE("document round trip is byte identical") {
    for (const auto& p : smallest_instances()) {
        const auto inst = build_family(p);
        for (const bool labeled : {false, true}) {
            CAPTURE(family_name(p));
            CAPTURE(labeled);
            const auto text =
                labeled ? serialize_json(inst, label_family(inst)) : serialize_json(inst);
            const auto doc = parse_document(text);
            CHECK(serialize_document(doc) == text);
            CHECK(document_graph(doc) == inst.graph());
            CHECK(doc.roles == inst.roles());
            CHECK(doc.labeling.has_value() == labeled);
        }
    }
}

TEST_CASE("document layout") {
    const auto text = serialize_json(build_family(CycleChain{4, 1}), Labeling({2, 3, 4, 1}));
    CHECK(text.rfind("{\n  \"format\": \"primelab-graph\",\n  \"version\": 1,\n  \"family\"", 0) == 0);
    CHECK(text.find("\"labeling\"") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("malformed documents are rejected") {
    const auto good = serialize_document(make_document(path(3)));
    CHECK_NOTHROW(parse_document(good));
    CHECK_THROWS_AS(parse_document("not json"), InvalidParameter);
    CHECK_THROWS_AS(parse_document("[]"), InvalidParameter);
    CHECK_THROWS_AS(parse_document(R"({"format":"other","version":1,"vertex_count":2,"edges":[[0,1]]})"),
                    InvalidParameter);
    CHECK_THROWS_AS(parse_document(R"({"format":"primelab-graph","version":2,"vertex_count":2,"edges":[[0,1]]})"),
                    InvalidParameter);
    CHECK_THROWS_AS(parse_document(R"({"format":"primelab-graph","version":1,"vertex_count":2,"edges":[[1,0]]})"),
                    InvalidParameter);
    CHECK_THROWS_AS(
        parse_document(R"({"format":"primelab-graph","version":1,"vertex_count":3,"edges":[[1,2],[0,1]]})"),
        InvalidParameter);
    CHECK_THROWS_AS(
        parse_document(R"({"format":"primelab-graph","version":1,"vertex_count":2,"edges":[[0,1]],"labeling":[1]})"),
        InvalidParameter);
    const auto disconnected =
        parse_document(R"({"format":"primelab-graph","version":1,"vertex_count":4,"edges":[[0,1],[2,3]]})");
    CHECK_THROWS_AS(document_graph(disconnected), InvalidParameter);
}

TEST_CASE("dot export") {
    const auto inst = build_family(CycleChain{4, 1});
    const auto dot = export_dot(inst, Labeling({2, 3, 4, 1}));
    CHECK(dot.rfind("graph \"chain_4_1\" {\n", 0) == 0);
    CHECK(dot.find("\"2\" [comment=\"c(1,1)\"];") != std::string::npos);
    CHECK(dot.find("\"2\" -- \"3\";") != std::string::npos);
    CHECK(dot.find("\"1\" -- \"4\"") == std::string::npos);
    CHECK(dot.substr(dot.size() - 2) == "}\n");

    const auto unlabeled = export_dot(make_document(path(3)));
    CHECK(unlabeled.rfind("graph \"G\" {\n", 0) == 0);
    CHECK(unlabeled.find("\"0\" -- \"1\";") != std::string::npos);
}

TEST_CASE("reports") {
    const auto report = verify_labeling(path(4), Labeling({2, 4, 1, 3}));
    CHECK(summarize(report) == "prime labeling: no (0 range, 0 duplicate, 1 coprimality violation(s))");
    CHECK(report_to_json(report).find("\"gcd\": 2") != std::string::npos);
    SearchOutcome outcome;
    outcome.status = SearchStatus::Exhausted;
    outcome.nodes_explored = 7;
    CHECK(summarize(outcome) == "search: exhausted after 7 node(s)");
}

TEST_CASE("cli exit codes") {
    const auto dir = scratch_dir();
    const auto labeled = (dir / "prism6.json").string();
    const auto bare = (dir / "prism3.json").string();
    const auto broken = (dir / "broken.json").string();

    CHECK(run({"label", "prism", "6", "--out", labeled}).code == kExitOk);
    CHECK(run({"verify", labeled}).code == kExitOk);
    CHECK(run({"label", "prism", "9"}).code == kExitUsage);
    CHECK(run({"label", "prism", "10"}).code == kExitUsage);
    CHECK(run({"label", "cps", "5"}).code == kExitUsage);
    CHECK(run({"label", "wheel", "5"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
    CHECK(run({"verify", (dir / "missing.json").string()}).code == kExitUsage);

    // Relabel so that the two endpoints of the first edge are both even.
    auto doc = parse_document(slurp(labeled));
    auto& l = *doc.labeling;
    const Edge e = doc.edges.front();
    const auto pos = [&](Label x) { return std::size_t(std::find(l.begin(), l.end(), x) - l.begin()); };
    std::swap(l[pos(2)], l[e.u]);
    std::swap(l[pos(4)], l[e.v]);
    REQUIRE_FALSE(verify_labeling(document_graph(doc), Labeling(l)).is_prime);
    std::ofstream(broken) << serialize_document(doc);
    CHECK(run({"verify", broken}).code == kExitNegative);

    CHECK(run({"build", "prism", "3", "--out", bare}).code == kExitOk);
    CHECK(run({"search", bare}).code == kExitNegative);
    CHECK(run({"search", bare, "--brute"}).code == kExitNegative);
    CHECK(run({"search", bare, "--budget-nodes", "3"}).code == kExitBudgetExceeded);
    CHECK(run({"search", bare, "--threads", "0"}).code == kExitUsage);
    CHECK(run({"search", labeled, "--symmetry", "--threads", "2"}).code == kExitOk);
    CHECK(run({"export", labeled, "--format", "dot"}).code == kExitOk);
    CHECK(run({"export", labeled, "--format", "svg"}).code == kExitUsage);

    CHECK(run({"pillai", "17", "3000"}).code == kExitOk);
    CHECK(run({"pillai", "16", "3000"}).code == kExitNegative);
    CHECK(run({"pillai", "1", "3000"}).code == kExitUsage);
}

TEST_CASE("cli output") {
    const auto dir = scratch_dir();
    const auto found = (dir / "found.json").string();

    const auto label = run({"label", "book", "6", "3"});
    CHECK(label.out.rfind("scheme: book\nprime labeling: yes\n", 0) == 0);

    const auto built = run({"build", "cycle", "5"});
    REQUIRE(built.code == kExitOk);
    const auto doc = parse_document(built.out);
    CHECK(document_graph(doc) == cycle(5));

    const auto bare = (dir / "cycle5.json").string();
    std::ofstream(bare) << built.out;
    const auto search = run({"search", bare, "--out", found});
    CHECK(search.code == kExitOk);
    CHECK(search.out.rfind("search: found after ", 0) == 0);
    CHECK(run({"verify", found}).code == kExitOk);

    const auto pillai = run({"pillai", "17", "3000"});
    CHECK(pillai.out.find("\"start\": 2184") != std::string::npos);

    const auto json = run({"export", found, "--format", "json"});
    CHECK(json.out == slurp(found));
}
