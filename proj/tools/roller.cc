#include "CLI11.hpp"

#include "bench/fixtures.h"
#include "bench/score.h"
#include "bench/suite.h"
#include "learner/induce.h"
#include "pddl/parser.h"
#include "policy/context.h"
#include "policy/filter_sort.h"
#include "relaxed/relaxed_plan.h"
#include "search/run.h"
#include "training/trainer.h"
#include "util/rng.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace std;

namespace {

struct PlanArgs {
    string domain_path;
    string problem_path;
    string algo = "df-policy";
    string dck = "trees";
    string trees_prefix;
    int horizon = 100;
    string weight = "1";
    double time_bound = 60.0;
    bool anytime = false;
};

util::Rational parse_weight(const string &text) {
    size_t slash = text.find('/');
    if (slash == string::npos)
        return util::Rational(stoll(text));
    return util::Rational(stoll(text.substr(0, slash)),
                          stoll(text.substr(slash + 1)));
}

search::Algorithm parse_algorithm(const string &name) {
    if (name == "df-policy")
        return search::Algorithm::kDfPolicy;
    if (name == "lookahead-bfs")
        return search::Algorithm::kLookaheadBfs;
    if (name == "lookahead-bfs-ha")
        return search::Algorithm::kLookaheadBfsHa;
    throw CLI::ValidationError("--algo", "unknown algorithm: " + name);
}

search::DckSource parse_dck_source(const string &name) {
    if (name == "trees")
        return search::DckSource::kTrees;
    if (name == "ff-order")
        return search::DckSource::kFfOrder;
    if (name == "none")
        return search::DckSource::kNone;
    throw CLI::ValidationError("--dck", "unknown dck source: " + name);
}

pddl::DomainModel load_domain(const string &path) {
    try {
        return pddl::parse_domain_file(path);
    } catch (const pddl::ParseError &error) {
        cerr << error.format(path) << "\n";
        exit(1);
    }
}

pddl::ProblemModel load_problem(const string &path,
                                const pddl::DomainModel &domain) {
    try {
        return pddl::parse_problem_file(path, domain);
    } catch (const pddl::ParseError &error) {
        cerr << error.format(path) << "\n";
        exit(1);
    }
}

string problem_stem(const string &path) {
    return filesystem::path(path).stem().string();
}

int cmd_ground(const string &domain_path, const string &problem_path) {
    pddl::DomainModel domain = load_domain(domain_path);
    pddl::ProblemModel problem = load_problem(problem_path, domain);
    grounding::GroundTask task = grounding::ground_task(domain, problem);
    cout << "facts: " << task.facts.size() << "\n";
    cout << "actions: " << task.actions.size() << "\n";
    return 0;
}

int cmd_heuristic(const string &domain_path, const string &problem_path) {
    pddl::DomainModel domain = load_domain(domain_path);
    pddl::ProblemModel problem = load_problem(problem_path, domain);
    grounding::GroundTask task = grounding::ground_task(domain, problem);
    relaxed::Evaluator evaluator(task);
    relaxed::RelaxedResult result = evaluator.evaluate(task.init);
    if (result.is_dead_end()) {
        cout << "h: infinity\n";
        return 0;
    }
    cout << "h: " << result.h << "\n";
    for (int a : result.helpful)
        cout << task.actions[a].name() << "\n";
    return 0;
}

int cmd_train(const string &domain_path, const vector<string> &problem_paths,
              const string &prefix, double time_bound, bool all_solutions) {
    pddl::DomainModel domain = load_domain(domain_path);
    vector<pair<string, pddl::ProblemModel>> problems;
    for (const string &path : problem_paths)
        problems.emplace_back(problem_stem(path), load_problem(path, domain));
    training::TrainOptions options;
    options.time_bound = time_bound;
    options.all_solutions = all_solutions;
    training::TrainReport report =
        training::train_domain(domain, problems, prefix, options);
    cout << "problems used: " << report.problems_used << "\n";
    cout << "problems discarded: " << report.problems_discarded << "\n";
    cout << "operator examples: " << report.operator_examples << "\n";
    return 0;
}

int cmd_learn(const string &domain_path, const string &prefix,
              double gain_epsilon, int min_leaf) {
    pddl::DomainModel domain = load_domain(domain_path);
    learner::InduceOptions options;
    options.gain_epsilon = gain_epsilon;
    options.min_leaf = min_leaf;
    training::learn_trees(domain, prefix, options);
    cout << "wrote " << prefix << "-ops.tree\n";
    for (const pddl::OperatorSchema &op : domain.operators)
        if (filesystem::exists(prefix + "-" + op.name + ".tree"))
            cout << "wrote " << prefix + "-" + op.name + ".tree\n";
    return 0;
}

int cmd_plan(const PlanArgs &args) {
    pddl::DomainModel domain = load_domain(args.domain_path);
    pddl::ProblemModel problem = load_problem(args.problem_path, domain);
    grounding::GroundTask task = grounding::ground_task(domain, problem);

    policy::DckBundle bundle;
    search::SearchConfig cfg;
    cfg.algorithm = parse_algorithm(args.algo);
    cfg.dck_source = parse_dck_source(args.dck);
    cfg.horizon = args.horizon;
    cfg.weight = parse_weight(args.weight);
    cfg.time_bound = args.time_bound;
    cfg.anytime = args.anytime;
    if (cfg.dck_source == search::DckSource::kTrees &&
        !args.trees_prefix.empty())
        bundle = policy::load_dck(args.trees_prefix, domain);

    search::SearchResult result;
    if (cfg.anytime) {
        vector<search::SearchResult> stream = search::run_anytime(
            task, &bundle, cfg);
        for (const search::SearchResult &solution : stream)
            cout << "; solution length=" << solution.plan_length()
                 << " time=" << solution.stats.time << "\n";
        if (!stream.empty()) {
            result = stream.back();
        } else {
            cout << "; no solution\n";
            cout << search::format_stats_line(result) << "\n";
            return 1;
        }
    } else {
        result = search::run_search(task, &bundle, cfg);
    }

    if (!result.solved) {
        cout << "; no solution" << (result.timeout ? " (timeout)" : "")
             << "\n";
        cout << search::format_stats_line(result) << "\n";
        return 1;
    }
    if (!search::validate_plan(task, result.plan)) {
        cerr << "SOUNDNESS BUG: produced plan failed replay validation\n";
        return 2;
    }
    for (int a : result.plan)
        cout << task.actions[a].name() << "\n";
    cout << search::format_stats_line(result) << "\n";
    return 0;
}

int cmd_policy_explain(const string &domain_path, const string &problem_path,
                       const string &trees_prefix, const string &apply_path) {
    pddl::DomainModel domain = load_domain(domain_path);
    pddl::ProblemModel problem = load_problem(problem_path, domain);
    grounding::GroundTask task = grounding::ground_task(domain, problem);
    policy::DckBundle bundle = policy::load_dck(trees_prefix, domain);

    grounding::State state = task.init;
    if (!apply_path.empty()) {
        ifstream in(apply_path);
        if (!in) {
            cerr << "cannot open plan file: " << apply_path << "\n";
            return 1;
        }
        string line;
        while (getline(in, line)) {
            if (line.empty() || line[0] == ';')
                continue;
            bool applied = false;
            for (const grounding::GroundAction &action : task.actions) {
                if (action.name() == line &&
                    grounding::is_applicable(task, action, state)) {
                    state = grounding::apply_action(state, action);
                    applied = true;
                    break;
                }
            }
            if (!applied) {
                cerr << "cannot apply action: " << line << "\n";
                return 1;
            }
        }
    }

    relaxed::Evaluator evaluator(task);
    relaxed::RelaxedResult eval = evaluator.evaluate(state);
    if (eval.is_dead_end()) {
        cout << "state is a recognized dead-end (h = infinity)\n";
        return 0;
    }
    policy::HelpfulContext ctx =
        policy::build_helpful_context(task, state, eval.helpful);

    cout << "h: " << eval.h << "\n";
    cout << "helpful actions:\n";
    for (int a : ctx.helpful)
        cout << "  " << task.actions[a].name() << "\n";
    cout << "target goals:\n";
    for (int g : ctx.target)
        cout << "  " << task.facts.atom(g).to_string() << "\n";
    cout << "static facts:\n";
    for (int f : task.static_facts)
        cout << "  " << task.facts.atom(f).to_string() << "\n";

    if (bundle.empty()) {
        cout << "no decision trees loaded; helpful actions keep generation "
                "order\n";
        return 0;
    }

    vector<int> applicable = grounding::applicable_actions(task, state);
    policy::FilterSortResult sorted =
        policy::dt_filter_sort(task, applicable, ctx, bundle);

    cout << "operator leaf distribution:\n";
    const learner::RelationalTree &ops = *bundle.operator_tree;
    for (size_t c = 0; c < ops.classes.size(); ++c)
        cout << "  " << ops.classes[c] << ": "
             << sorted.operator_leaf->class_counts[c] << "\n";

    cout << "prioritized actions:\n";
    for (const policy::PrioritizedAction &entry : sorted.actions) {
        cout << "  " << task.actions[entry.action].name()
             << " priority=" << entry.priority.to_string()
             << " (count=" << entry.operator_count
             << " ratio=" << entry.ratio.to_string() << ")";
        if (!entry.helpful)
            cout << " [non-helpful]";
        if (entry.binding_support == 0)
            cout << " [no binding coverage]";
        else if (entry.binding_support < 5)
            cout << " [low binding coverage: " << entry.binding_support << "]";
        cout << "\n";
    }
    return 0;
}

int cmd_bench(const string &domain_path, const vector<string> &problem_paths,
              const vector<string> &config_names, const string &trees_prefix,
              double time_bound, int jobs, const string &csv_out) {
    pddl::DomainModel domain = load_domain(domain_path);
    policy::DckBundle bundle;
    if (!trees_prefix.empty())
        bundle = policy::load_dck(trees_prefix, domain);

    vector<pair<string, grounding::GroundTask>> tasks;
    for (const string &path : problem_paths)
        tasks.emplace_back(problem_stem(path),
                           grounding::ground_task(
                               domain, load_problem(path, domain)));
    vector<bench::SuiteProblem> problems;
    for (auto &[id, task] : tasks)
        problems.push_back(bench::SuiteProblem{id, &task});

    vector<bench::SuiteConfig> configs;
    for (const string &name : config_names) {
        // Config spec: <algo>:<dck>, e.g. df-policy:trees.
        size_t colon = name.find(':');
        if (colon == string::npos) {
            cerr << "config must look like <algo>:<dck>, got: " << name
                 << "\n";
            return 1;
        }
        search::SearchConfig cfg;
        cfg.algorithm = parse_algorithm(name.substr(0, colon));
        cfg.dck_source = parse_dck_source(name.substr(colon + 1));
        cfg.time_bound = time_bound;
        configs.push_back(bench::SuiteConfig{
            name, cfg,
            cfg.dck_source == search::DckSource::kTrees ? &bundle : nullptr});
    }

    vector<bench::RunRecord> records = bench::run_suite(configs, problems,
                                                        jobs);
    if (!csv_out.empty()) {
        learner::write_file(csv_out, bench::to_csv(records));
        cout << "wrote " << csv_out << "\n";
    }
    cout << bench::format_report(bench::score_runs(records));
    return 0;
}

int cmd_score(const string &csv_path) {
    vector<bench::RunRecord> records =
        bench::parse_csv(learner::read_text_file(csv_path));
    cout << bench::format_report(bench::score_runs(records));
    return 0;
}

int cmd_gen(const string &kind, int count, int blocks,
            const bench::SatelliteShape &shape, const string &out_dir,
            const string &name_prefix) {
    filesystem::create_directories(out_dir);
    mt19937 rng = util::make_rng(util::global_seed());
    for (int i = 1; i <= count; ++i) {
        string name = name_prefix + (i < 10 ? "0" : "") + to_string(i);
        string text;
        if (kind == "blocksworld") {
            text = bench::generate_blocksworld_problem(name, blocks, rng);
        } else if (kind == "satellite") {
            text = bench::generate_satellite_problem(name, shape, rng);
        } else {
            cerr << "unknown generator: " << kind << "\n";
            return 1;
        }
        string path = out_dir + "/" + name + ".pddl";
        learner::write_file(path, text);
        cout << "wrote " << path << "\n";
    }
    return 0;
}

}

int main(int argc, char **argv) {
    CLI::App app{"roller: learns relational decision trees from solved "
                 "planning problems and uses them to guide forward search"};
    app.require_subcommand(1);

    // ground
    string domain_path, problem_path;
    CLI::App *ground = app.add_subcommand(
        "ground", "ground a task and print fact/action counts");
    ground->add_option("domain", domain_path)->required();
    ground->add_option("problem", problem_path)->required();

    // heuristic
    CLI::App *heuristic = app.add_subcommand(
        "heuristic", "print h(s0) and the helpful actions");
    heuristic->add_option("domain", domain_path)->required();
    heuristic->add_option("problem", problem_path)->required();

    // train
    vector<string> problem_paths;
    string prefix = "dck";
    double time_bound = 60.0;
    bool all_solutions = false;
    CLI::App *train = app.add_subcommand(
        "train", "solve training problems and emit kb/bias files");
    train->add_option("--domain", domain_path)->required();
    train->add_option("--out", prefix, "output prefix for kb/bias files");
    train->add_option("--time-bound", time_bound, "seconds per problem");
    train->add_flag("--all-solutions", all_solutions,
                    "skip the ranking filter");
    train->add_option("problems", problem_paths)->required();

    // learn
    double gain_epsilon = 1e-6;
    int min_leaf = 2;
    CLI::App *learn = app.add_subcommand(
        "learn", "induce decision trees from kb/bias files");
    learn->add_option("--domain", domain_path)->required();
    learn->add_option("--prefix", prefix)->required();
    learn->add_option("--gain-epsilon", gain_epsilon);
    learn->add_option("--min-leaf", min_leaf);

    // plan
    PlanArgs plan_args;
    CLI::App *plan = app.add_subcommand("plan", "solve one problem");
    plan->add_option("--algo", plan_args.algo,
                     "df-policy | lookahead-bfs | lookahead-bfs-ha");
    plan->add_option("--dck", plan_args.dck, "trees | ff-order | none");
    plan->add_option("--trees", plan_args.trees_prefix,
                     "prefix of the .tree files");
    plan->add_option("--horizon", plan_args.horizon);
    plan->add_option("--weight", plan_args.weight, "w in f = w*h + g");
    plan->add_option("--time-bound", plan_args.time_bound);
    plan->add_flag("--anytime", plan_args.anytime);
    plan->add_option("domain", plan_args.domain_path)->required();
    plan->add_option("problem", plan_args.problem_path)->required();

    // policy explain
    string apply_path;
    CLI::App *policy_cmd = app.add_subcommand("policy", "policy utilities");
    CLI::App *explain =
        policy_cmd->add_subcommand("explain", "explain one state's ordering");
    explain->add_option("--trees", prefix)->required();
    explain->add_option("--apply", apply_path,
                        "plan file applied before explaining");
    explain->add_option("domain", domain_path)->required();
    explain->add_option("problem", problem_path)->required();

    // bench
    vector<string> config_names;
    string csv_out;
    int jobs = 1;
    CLI::App *bench_cmd = app.add_subcommand(
        "bench", "run configuration suites and score them");
    bench_cmd->add_option("--domain", domain_path)->required();
    bench_cmd->add_option("--config", config_names, "<algo>:<dck>")
        ->required();
    bench_cmd->add_option("--trees", prefix, "prefix for trees configs");
    bench_cmd->add_option("--time-bound", time_bound);
    bench_cmd->add_option("--jobs", jobs);
    bench_cmd->add_option("--out", csv_out, "CSV output path");
    bench_cmd->add_option("problems", problem_paths)->required();

    // score
    string csv_path;
    CLI::App *score = app.add_subcommand(
        "score", "recompute a score report from a CSV file");
    score->add_option("csv", csv_path)->required();

    // gen
    string gen_kind;
    int gen_count = 10;
    int gen_blocks = 5;
    string out_dir = ".";
    string name_prefix = "tr";
    bench::SatelliteShape shape;
    CLI::App *gen = app.add_subcommand(
        "gen", "generate random problems (ROLLER_SEED fixes the seed)");
    gen->add_option("kind", gen_kind, "blocksworld | satellite")->required();
    gen->add_option("--count", gen_count);
    gen->add_option("--blocks", gen_blocks);
    gen->add_option("--instruments", shape.instruments);
    gen->add_option("--modes", shape.modes);
    gen->add_option("--directions", shape.directions);
    gen->add_option("--goals", shape.goals);
    gen->add_option("--out-dir", out_dir);
    gen->add_option("--prefix", name_prefix, "problem name prefix");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ground->parsed())
            return cmd_ground(domain_path, problem_path);
        if (heuristic->parsed())
            return cmd_heuristic(domain_path, problem_path);
        if (train->parsed())
            return cmd_train(domain_path, problem_paths, prefix, time_bound,
                             all_solutions);
        if (learn->parsed())
            return cmd_learn(domain_path, prefix, gain_epsilon, min_leaf);
        if (plan->parsed())
            return cmd_plan(plan_args);
        if (policy_cmd->parsed() && explain->parsed())
            return cmd_policy_explain(domain_path, problem_path, prefix,
                                      apply_path);
        if (bench_cmd->parsed())
            return cmd_bench(domain_path, problem_paths, config_names, prefix,
                             time_bound, jobs, csv_out);
        if (score->parsed())
            return cmd_score(csv_path);
        if (gen->parsed())
            return cmd_gen(gen_kind, gen_count, gen_blocks, shape, out_dir,
                           name_prefix);
    } catch (const exception &error) {
        cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
