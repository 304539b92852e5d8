#include "primelab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "primelab/error.hpp"
#include "primelab/io.hpp"
#include "primelab/labelings.hpp"
#include "primelab/search.hpp"

namespace primelab {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidParameter("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) {
        throw InvalidParameter("cannot write " + path);
    }
}

// Documents for the plain graphs the oracle is often pointed at.
std::optional<GraphDocument> basic_graph_document(const std::string& family, const std::vector<int>& params) {
    if (family != "path" && family != "cycle" && family != "star") {
        return std::nullopt;
    }
    if (params.size() != 1) {
        throw InvalidParameter("family '" + family + "' takes 1 parameter");
    }
    const int n = params[0];
    Graph g = family == "path" ? path(n) : family == "cycle" ? cycle(n) : star(n);
    return make_document(g, FamilyDescriptor{family, params});
}

struct Args {
    std::string family;
    std::vector<int> params;
    std::string file;
    std::string out_path;
    std::string format = "json";
    std::optional<std::uint64_t> budget_nodes;
    std::optional<double> budget_secs;
    bool brute = false;
    bool symmetry = false;
    unsigned threads = 1;
    int k = 0;
    std::uint64_t limit = 0;
};

int run_build(const Args& a, std::ostream& out) {
    GraphDocument doc;
    if (auto basic = basic_graph_document(a.family, a.params)) {
        doc = std::move(*basic);
    } else {
        doc = make_document(build_family(make_family_params(a.family, a.params)));
    }
    write_output(a.out_path, serialize_document(doc), out);
    return kExitOk;
}

int run_label(const Args& a, std::ostream& out) {
    const FamilyParams params = make_family_params(a.family, a.params);
    const LabelingScheme scheme = select_scheme(params);
    const FamilyInstance instance = build_family(params);
    const Labeling labeling = scheme.apply(instance);
    const VerificationReport report = verify_labeling(instance.graph(), labeling);

    out << "scheme: " << scheme_name(scheme.id) << "\n" << summarize(report) << "\n" << report_to_json(report);
    if (!a.out_path.empty()) {
        write_output(a.out_path, serialize_json(instance, labeling), out);
    }
    return report.is_prime ? kExitOk : kExitNegative;
}

int run_verify(const Args& a, std::ostream& out) {
    const GraphDocument doc = parse_document(read_file(a.file));
    if (!doc.labeling) {
        throw InvalidParameter(a.file + " carries no labeling");
    }
    const VerificationReport report = verify_labeling(document_graph(doc), Labeling(*doc.labeling));
    out << summarize(report) << "\n" << report_to_json(report);
    return report.is_prime ? kExitOk : kExitNegative;
}

int run_search(const Args& a, std::ostream& out) {
    GraphDocument doc = parse_document(read_file(a.file));
    const Graph g = document_graph(doc);

    SearchOutcome outcome;
    if (a.brute) {
        outcome = brute_force_search(g);
    } else {
        SearchBudget budget;
        budget.max_nodes = a.budget_nodes;
        if (a.budget_secs) {
            if (*a.budget_secs < 0) {
                throw InvalidParameter("--budget-secs must be non-negative");
            }
            budget.max_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::duration<double>(*a.budget_secs));
        }
        outcome = backtracking_search(g, budget, SearchOptions{a.threads, a.symmetry});
    }
    out << summarize(outcome) << "\n" << outcome_to_json(outcome);
    if (outcome.labeling && !a.out_path.empty()) {
        doc.labeling.emplace(outcome.labeling->labels().begin(), outcome.labeling->labels().end());
        write_output(a.out_path, serialize_document(doc), out);
    }
    switch (outcome.status) {
        case SearchStatus::Found: return kExitOk;
        case SearchStatus::Exhausted: return kExitNegative;
        case SearchStatus::BudgetExceeded: return kExitBudgetExceeded;
    }
    return kExitUsage;
}

int run_export(const Args& a, std::ostream& out) {
    const GraphDocument doc = parse_document(read_file(a.file));
    document_graph(doc);  // reject documents that do not describe a valid graph
    write_output(a.out_path, a.format == "dot" ? export_dot(doc) : serialize_document(doc), out);
    return kExitOk;
}

int run_pillai(const Args& a, std::ostream& out) {
    const auto start = pillai_witness(a.k, a.limit);
    nlohmann::ordered_json j;
    j["k"] = a.k;
    j["limit"] = a.limit;
    j["start"] = start ? nlohmann::ordered_json(*start) : nlohmann::ordered_json(nullptr);
    out << (start ? "pillai: witness window starts at " + std::to_string(*start)
                  : std::string("pillai: no witness up to the limit"))
        << "\n"
        << j.dump(2) << "\n";
    return start ? kExitOk : kExitNegative;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prime vertex labelings: build graph families, label, verify and search."};
    app.name("primelab");
    app.require_subcommand(1);
    Args a;

    auto* build = app.add_subcommand("build", "Write the graph document of a family instance");
    build->add_option("family", a.family, "cps | chain | fib | prism | book | path | cycle | star")->required();
    build->add_option("params", a.params, "Family parameters, e.g. `cps 5 6` for C5*P2*S6")->required();
    build->add_option("--out", a.out_path, "Output file (default: stdout)");

    auto* label = app.add_subcommand("label", "Build, apply the matching labeling scheme and verify it");
    label->add_option("family", a.family, "cps | chain | fib | prism | book")->required();
    label->add_option("params", a.params, "Family parameters")->required();
    label->add_option("--out", a.out_path, "Write the labeled document here");

    auto* verify = app.add_subcommand("verify", "Verify the labeling carried by a document");
    verify->add_option("file", a.file)->required();

    auto* search = app.add_subcommand("search", "Search for a prime labeling of a document's graph");
    search->add_option("file", a.file)->required();
    search->add_option("--budget-nodes", a.budget_nodes, "Maximum search nodes");
    search->add_option("--budget-secs", a.budget_secs, "Maximum wall-clock seconds");
    search->add_flag("--brute", a.brute, "Enumerate all permutations (at most 10 vertices)");
    search->add_flag("--symmetry", a.symmetry, "Break symmetry among universally coprime labels");
    search->add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", a.out_path, "Write the found labeling as a document here");

    auto* exp = app.add_subcommand("export", "Convert a document");
    exp->add_option("file", a.file)->required();
    exp->add_option("--format", a.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", a.out_path, "Output file (default: stdout)");

    auto* pillai = app.add_subcommand("pillai", "Find k consecutive integers none coprime to all the others");
    pillai->add_option("k", a.k)->required();
    pillai->add_option("limit", a.limit)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(build)) return run_build(a, out);
        if (app.got_subcommand(label)) return run_label(a, out);
        if (app.got_subcommand(verify)) return run_verify(a, out);
        if (app.got_subcommand(search)) return run_search(a, out);
        if (app.got_subcommand(exp)) return run_export(a, out);
        if (app.got_subcommand(pillai)) return run_pillai(a, out);
    } catch (const NotApplicable& e) {
        err << "not applicable: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnsupportedScheme& e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace primelab
