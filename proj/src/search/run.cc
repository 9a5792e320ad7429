#include "run.h"

using namespace std;

namespace search {

SearchResult run_search(const grounding::GroundTask &task,
                        const policy::DckBundle *dck, const SearchConfig &cfg,
                        const SolutionCallback &on_solution) {
    if (cfg.algorithm == Algorithm::kDfPolicy)
        return df_hcontext_policy(task, dck, cfg, on_solution);
    return hcontext_lookahead_bfs(task, dck, cfg, on_solution);
}

vector<SearchResult> run_anytime(const grounding::GroundTask &task,
                                 const policy::DckBundle *dck,
                                 SearchConfig cfg) {
    cfg.anytime = true;
    vector<SearchResult> stream;
    run_search(task, dck, cfg,
               [&](const SearchResult &solution) {stream.push_back(solution);});
    return stream;
}

bool validate_plan(const grounding::GroundTask &task, const vector<int> &plan) {
    grounding::State state = task.init;
    for (int action_id : plan) {
        if (action_id < 0 || action_id >= static_cast<int>(task.actions.size()))
            return false;
        const grounding::GroundAction &action = task.actions[action_id];
        if (!grounding::is_applicable(task, action, state))
            return false;
        state = grounding::apply_action(state, action);
    }
    return task.satisfies_goals(state);
}

}
