// Command-line front end: computes exact or simulated distributions of the
// number of text-character accesses window-based matchers spend on random
// texts, plus traces, state-space reports, and long-run rate estimates.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "matchdist/brute.hpp"
#include "matchdist/daa.hpp"
#include "matchdist/distribution.hpp"
#include "matchdist/paa.hpp"
#include "matchdist/representatives.hpp"
#include "matchdist/text_model.hpp"

namespace {

using namespace matchdist;

struct Guards {
    std::size_t naive_windows = kDefaultNaiveWindowGuard;
    std::size_t brute_texts = kDefaultBruteTextGuard;
    std::size_t dp_cells = kDefaultDpCellGuard;
    std::size_t reps = kDefaultEnumerationGuard;
};

std::size_t env_guard(const char* variable, std::size_t fallback) {
    const char* raw = std::getenv(variable);
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(raw, &end, 10);
    if (end == nullptr || *end != '\0') {
        throw std::invalid_argument(std::string("cannot parse ") + variable + "='" + raw + "'");
    }
    return static_cast<std::size_t>(parsed);
}

Guards guards_from_environment() {
    Guards g;
    g.naive_windows = env_guard("MATCHDIST_NAIVE_GUARD", g.naive_windows);
    g.brute_texts = env_guard("MATCHDIST_BRUTE_GUARD", g.brute_texts);
    g.dp_cells = env_guard("MATCHDIST_DP_CELL_GUARD", g.dp_cells);
    g.reps = env_guard("MATCHDIST_REP_GUARD", g.reps);
    return g;
}

void split(const std::string& text, char sep, std::vector<std::string>& out) {
    out.clear();
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = text.find(sep, begin);
        if (end == std::string::npos) {
            out.push_back(text.substr(begin));
            break;
        }
        out.push_back(text.substr(begin, end - begin));
        begin = end + 1;
    }
}

double parse_probability(const std::string& text) {
    std::size_t used = 0;
    double p = 0.0;
    try {
        p = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse probability '" + text + "'");
    }
    if (used != text.size()) throw std::invalid_argument("cannot parse probability '" + text + "'");
    return p;
}

// iid:a=0.5,b=0.5
TextModel parse_iid_spec(const std::string& body) {
    std::vector<std::string> entries;
    split(body, ',', entries);
    std::string characters;
    std::vector<double> probs;
    for (const std::string& entry : entries) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos || eq != 1) {
            throw std::invalid_argument("iid entry '" + entry + "' is not <symbol>=<prob>");
        }
        characters += entry[0];
        probs.push_back(parse_probability(entry.substr(2)));
    }
    return TextModel::iid(Alphabet(characters), probs);
}

// markov:init=a:0.5,b:0.5;a=a:0.9,b:0.1;b=a:0.5,b:0.5
TextModel parse_markov_spec(const std::string& body) {
    std::vector<std::string> rows;
    split(body, ';', rows);
    std::optional<std::string> init_body;
    std::vector<std::pair<std::string, std::string>> history_rows;
    for (const std::string& row : rows) {
        const std::size_t eq = row.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("markov row '" + row + "' lacks '='");
        const std::string key = row.substr(0, eq);
        if (key == "init") {
            init_body = row.substr(eq + 1);
        } else {
            history_rows.emplace_back(key, row.substr(eq + 1));
        }
    }
    if (!init_body) throw std::invalid_argument("markov spec needs an init=... row");
    if (history_rows.empty()) throw std::invalid_argument("markov spec needs at least one history row");

    auto parse_row = [](const std::string& body, std::string& characters, std::vector<std::pair<char, double>>& out) {
        std::vector<std::string> entries;
        split(body, ',', entries);
        for (const std::string& entry : entries) {
            const std::size_t colon = entry.find(':');
            if (colon != 1) throw std::invalid_argument("entry '" + entry + "' is not <symbol>:<prob>");
            out.emplace_back(entry[0], parse_probability(entry.substr(2)));
            if (characters.find(entry[0]) == std::string::npos) characters += entry[0];
        }
    };

    std::string characters;
    std::vector<std::pair<char, double>> init_entries;
    parse_row(*init_body, characters, init_entries);
    Alphabet alphabet(characters);

    auto to_dense = [&](const std::vector<std::pair<char, double>>& entries) {
        std::vector<double> row(alphabet.size(), 0.0);
        for (const auto& [c, p] : entries) row[alphabet.index_of(c)] = p;
        return row;
    };

    const std::size_t order = history_rows.front().first.size();
    if (order < 1) throw std::invalid_argument("markov history keys must be nonempty");
    std::map<SymbolString, std::vector<double>> conditional;
    for (const auto& [history, body] : history_rows) {
        if (history.size() != order) {
            throw std::invalid_argument("markov history keys must all have the same length");
        }
        std::vector<std::pair<char, double>> entries;
        parse_row(body, characters, entries);
        conditional[alphabet.encode(history)] = to_dense(entries);
    }
    return TextModel::markov(alphabet, static_cast<int>(order), to_dense(init_entries), conditional);
}

TextModel parse_model(const std::string& spec) {
    if (spec.rfind("iid:", 0) == 0) {
        TextModel model = parse_iid_spec(spec.substr(4));
        model.set_description(spec);
        return model;
    }
    if (spec.rfind("markov:", 0) == 0) {
        TextModel model = parse_markov_spec(spec.substr(7));
        model.set_description(spec);
        return model;
    }
    TextModel model = TextModel::load_file(spec);
    model.set_description(spec);
    return model;
}

Alphabet infer_alphabet(const std::string& declared, std::initializer_list<const std::string*> texts) {
    if (!declared.empty()) return Alphabet(declared);
    std::string characters;
    for (const std::string* text : texts) {
        for (char c : *text) {
            if (characters.find(c) == std::string::npos) characters += c;
        }
    }
    return Alphabet(characters);
}

Pattern make_pattern(const TextModel& model, const std::string& text) {
    try {
        return Pattern(model.alphabet(), text);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("pattern: ") + e.what());
    }
}

void emit(const nlohmann::json& document) { std::cout << document.dump(2) << "\n"; }

struct AnalyzePipeline {
    RepSet reps;
    Daa daa;
    Paa paa;
};

AnalyzePipeline build_pipeline(Algorithm algorithm, const Pattern& pattern, const TextModel& model,
                               const Guards& guards) {
    RepSet reps = algorithm == Algorithm::bom ? RepSet::oracle_closure(pattern, guards.reps)
                                              : RepSet::substring_closure(pattern);
    reps.annotate(algorithm);
    Daa daa = Daa::build_reduced(reps);
    Paa paa = induce_paa(daa, model);
    return {std::move(reps), std::move(daa), std::move(paa)};
}

nlohmann::json state_counts(const AnalyzePipeline& pipeline) {
    const int reps = pipeline.reps.size();
    const int m = pipeline.reps.window_length();
    return nlohmann::json{
        {"representatives", reps},
        {"daa_total", reps * (m + 1)},
        {"daa_reachable", pipeline.daa.state_count()},
        {"paa_reachable", pipeline.paa.state_count()},
    };
}

void write_distribution(const Distribution& dist, const std::string& format,
                        const std::vector<std::pair<std::string, std::string>>& csv_meta,
                        const nlohmann::json& json_extra) {
    if (format == "csv") {
        write_csv(dist, std::cout, csv_meta);
        return;
    }
    nlohmann::json document = to_json(dist);
    for (const auto& [key, value] : json_extra.items()) document[key] = value;
    emit(document);
}

int cmd_analyze(const std::string& pattern_text, const std::string& algo_name,
                const std::string& model_spec, std::int64_t n, const std::string& format,
                const Guards& guards) {
    const Algorithm algorithm = algorithm_from_name(algo_name);
    const TextModel model = parse_model(model_spec);
    const Pattern pattern = make_pattern(model, pattern_text);

    const auto started = std::chrono::steady_clock::now();
    AnalyzePipeline pipeline = build_pipeline(algorithm, pattern, model, guards);
    Distribution dist = distribution(pipeline.paa, n, guards.dp_cells);
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

    dist.algorithm = name(algorithm);
    dist.pattern = pattern_text;
    dist.model = model_spec;
    const auto [mean, variance] = moments(dist);
    const nlohmann::json states = state_counts(pipeline);

    std::vector<std::pair<std::string, std::string>> csv_meta{
        {"mean", format_double(mean)},
        {"variance", format_double(variance)},
        {"states_representatives", std::to_string(states["representatives"].get<int>())},
        {"states_daa_total", std::to_string(states["daa_total"].get<int>())},
        {"states_daa_reachable", std::to_string(states["daa_reachable"].get<int>())},
        {"states_paa_reachable", std::to_string(states["paa_reachable"].get<int>())},
        {"wall_ms", format_double(elapsed.count())},
    };
    nlohmann::json json_extra{
        {"mean", mean}, {"variance", variance}, {"states", states}, {"wall_ms", elapsed.count()}};
    write_distribution(dist, format, csv_meta, json_extra);
    return 0;
}

int cmd_brute(const std::string& pattern_text, const std::string& algo_name,
              const std::string& model_spec, std::int64_t n, const std::string& format,
              const Guards& guards) {
    const Algorithm algorithm = algorithm_from_name(algo_name);
    const TextModel model = parse_model(model_spec);
    const Pattern pattern = make_pattern(model, pattern_text);
    Distribution dist = brute_distribution(algorithm, pattern, model, n, guards.brute_texts);
    dist.pattern = pattern_text;
    dist.model = model_spec;
    const auto [mean, variance] = moments(dist);
    write_distribution(dist, format,
                       {{"mean", format_double(mean)}, {"variance", format_double(variance)}},
                       nlohmann::json{{"mean", mean}, {"variance", variance}});
    return 0;
}

int cmd_simulate(const std::string& pattern_text, const std::string& algo_name,
                 const std::string& model_spec, std::int64_t n, std::uint64_t samples,
                 std::uint64_t seed, const std::string& format) {
    const Algorithm algorithm = algorithm_from_name(algo_name);
    const TextModel model = parse_model(model_spec);
    const Pattern pattern = make_pattern(model, pattern_text);
    Distribution dist = monte_carlo(algorithm, pattern, model, n, samples, seed).to_distribution();
    dist.n = n;
    dist.algorithm = name(algorithm);
    dist.pattern = pattern_text;
    dist.model = model_spec;
    write_distribution(dist, format,
                       {{"samples", std::to_string(samples)}, {"seed", std::to_string(seed)}},
                       nlohmann::json{{"samples", samples}, {"seed", seed}});
    return 0;
}

int cmd_trace(const std::string& pattern_text, const std::string& algo_name,
              const std::string& text, const std::string& alphabet_spec, const std::string& format) {
    const Algorithm algorithm = algorithm_from_name(algo_name);
    const Alphabet alphabet = infer_alphabet(alphabet_spec, {&pattern_text, &text});
    const Pattern pattern(alphabet, pattern_text);
    const SymbolString encoded = alphabet.encode(text);
    const MatchTrace trace = run_matcher(algorithm, pattern, encoded);

    if (format == "csv") {
        std::cout << "start,window,cost,shift,match\n";
        for (const auto& entry : trace.entries) {
            std::cout << entry.start << ','
                      << alphabet.decode(encoded.substr(static_cast<std::size_t>(entry.start), pattern.length()))
                      << ',' << entry.verdict.cost << ',' << entry.verdict.shift << ','
                      << (entry.is_match ? "true" : "false") << "\n";
        }
        std::cout << "# total=" << trace.total_cost << "\n";
        return 0;
    }
    nlohmann::json windows = nlohmann::json::array();
    for (const auto& entry : trace.entries) {
        windows.push_back({
            {"start", entry.start},
            {"window", alphabet.decode(encoded.substr(static_cast<std::size_t>(entry.start), pattern.length()))},
            {"cost", entry.verdict.cost},
            {"shift", entry.verdict.shift},
            {"match", entry.is_match},
        });
    }
    emit(nlohmann::json{{"algorithm", name(algorithm)},
                        {"pattern", pattern_text},
                        {"text", text},
                        {"windows", std::move(windows)},
                        {"total", trace.total_cost}});
    return 0;
}

int cmd_states(const std::string& pattern_text, const std::string& algo_name,
               const std::string& model_spec, const std::string& alphabet_spec, bool dump,
               const Guards& guards) {
    const Algorithm algorithm = algorithm_from_name(algo_name);
    std::optional<TextModel> model;
    if (!model_spec.empty()) model = parse_model(model_spec);
    const Alphabet alphabet = model ? model->alphabet() : infer_alphabet(alphabet_spec, {&pattern_text});
    const Pattern pattern(alphabet, pattern_text);

    RepSet reps = algorithm == Algorithm::bom ? RepSet::oracle_closure(pattern, guards.reps)
                                              : RepSet::substring_closure(pattern);
    reps.annotate(algorithm);
    const Daa daa = Daa::build_reduced(reps);
    const auto m = static_cast<double>(pattern.length());
    const double naive_bound =
        std::pow(static_cast<double>(alphabet.size()), m) * (m + 1.0);

    nlohmann::json document{
        {"pattern", pattern_text},
        {"algorithm", name(algorithm)},
        {"alphabet", alphabet.characters()},
        {"m", pattern.length()},
        {"representatives", reps.size()},
        {"daa_total", reps.size() * (static_cast<int>(pattern.length()) + 1)},
        {"daa_reachable", daa.state_count()},
        {"naive_daa_bound", naive_bound},
    };
    if (model) {
        const Paa paa = induce_paa(daa, *model);
        document["paa_reachable"] = paa.state_count();
        document["model"] = model_spec;
    }
    emit(document);
    if (dump) daa.dump(std::cout);
    return 0;
}

int cmd_rate(const std::string& pattern_text, const std::string& algo_name,
             const std::string& model_spec, std::int64_t horizon, const Guards& guards) {
    const Algorithm algorithm = algorithm_from_name(algo_name);
    const TextModel model = parse_model(model_spec);
    const Pattern pattern = make_pattern(model, pattern_text);
    AnalyzePipeline pipeline = build_pipeline(algorithm, pattern, model, guards);
    const RateReport report = mean_rate(pipeline.paa, horizon);
    emit(nlohmann::json{
        {"algorithm", name(algorithm)},
        {"pattern", pattern_text},
        {"model", model_spec},
        {"horizon", report.horizon},
        {"estimate", report.estimate},
        {"expectation_n", report.expectation_n},
        {"expectation_2n", report.expectation_2n},
        {"converged", report.converged},
        {"heuristic", true},
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact distributions of text-character accesses for window-based matchers"};
    app.require_subcommand(1);

    std::string pattern_text, algo_name = "bmh", model_spec, format = "json", text, alphabet_spec;
    std::int64_t n = 0, horizon = 500;
    std::uint64_t samples = 100000, seed = 1;
    bool dump = false;

    auto add_common = [&](CLI::App* cmd, bool needs_model) {
        cmd->add_option("--pattern", pattern_text, "pattern string")->required();
        cmd->add_option("--algo", algo_name, "bm, bmh, bndm, or bom")->capture_default_str();
        if (needs_model) {
            cmd->add_option("--model", model_spec,
                            "iid:<sym>=<p>,... | markov:init=<sym>:<p>,...;<hist>=<sym>:<p>,... | path to model JSON")
                ->required();
        }
    };

    CLI::App* analyze = app.add_subcommand("analyze", "exact access-count distribution");
    add_common(analyze, true);
    analyze->add_option("--n", n, "text length")->required()->check(CLI::NonNegativeNumber);
    analyze->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* brute = app.add_subcommand("brute", "distribution by exhaustive text enumeration");
    add_common(brute, true);
    brute->add_option("--n", n, "text length")->required()->check(CLI::NonNegativeNumber);
    brute->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* simulate = app.add_subcommand("simulate", "distribution by seeded Monte Carlo sampling");
    add_common(simulate, true);
    simulate->add_option("--n", n, "text length")->required()->check(CLI::NonNegativeNumber);
    simulate->add_option("--samples", samples, "number of sampled texts")->capture_default_str();
    simulate->add_option("--seed", seed, "random seed")->capture_default_str();
    simulate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* trace = app.add_subcommand("trace", "replay the matcher on a concrete text");
    add_common(trace, false);
    trace->add_option("--text", text, "text to search")->required();
    trace->add_option("--alphabet", alphabet_spec, "alphabet characters (default: inferred)");
    trace->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* states = app.add_subcommand("states", "state-space report");
    add_common(states, false);
    states->add_option("--model", model_spec, "optional model for the product state count");
    states->add_option("--alphabet", alphabet_spec, "alphabet characters (default: from model or pattern)");
    states->add_flag("--dump", dump, "print the automaton state table");

    CLI::App* rate = app.add_subcommand("rate", "heuristic long-run accesses per character");
    add_common(rate, true);
    rate->add_option("--horizon", horizon, "estimation horizon N (uses 2N steps)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Guards guards = guards_from_environment();
        if (app.got_subcommand(analyze)) {
            return cmd_analyze(pattern_text, algo_name, model_spec, n, format, guards);
        }
        if (app.got_subcommand(brute)) {
            return cmd_brute(pattern_text, algo_name, model_spec, n, format, guards);
        }
        if (app.got_subcommand(simulate)) {
            return cmd_simulate(pattern_text, algo_name, model_spec, n, samples, seed, format);
        }
        if (app.got_subcommand(trace)) {
            return cmd_trace(pattern_text, algo_name, text, alphabet_spec, format);
        }
        if (app.got_subcommand(states)) {
            return cmd_states(pattern_text, algo_name, model_spec, alphabet_spec, dump, guards);
        }
        if (app.got_subcommand(rate)) {
            return cmd_rate(pattern_text, algo_name, model_spec, horizon, guards);
        }
    } catch (const matchdist::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
