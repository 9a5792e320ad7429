#include "ranking.h"

#include <algorithm>
#include <cassert>

using namespace std;
using util::Rational;

namespace training {

int phi_commitment(const SolutionSet &sols, const Plan &plan, int i) {
    assert(i >= 1 && i <= static_cast<int>(plan.actions.size()));
    const BnbNode &node = sols.tree[plan.node_path[i]];
    int count = 0;
    for (int child : node.children)
        if (sols.tree[child].on_solution)
            ++count;
    return count;
}

vector<int> supporter_counts(const grounding::GroundTask &task) {
    vector<int> counts(task.facts.size(), 0);
    for (const grounding::GroundAction &action : task.actions)
        for (int f : action.add)
            ++counts[f];
    return counts;
}

Rational phi_difficulty(const grounding::GroundTask &task,
                        const grounding::GroundAction &action,
                        const vector<int> &supporters) {
    (void)task;
    if (action.add.empty())
        return Rational(0);
    int min_supporters = numeric_limits<int>::max();
    for (int f : action.add)
        min_supporters = min(min_supporters, supporters[f]);
    assert(min_supporters >= 1);  // the action itself supports its adds
    return Rational(1, min_supporters);
}

RankedSolutions rank_solutions(const grounding::GroundTask &task,
                               const SolutionSet &sols) {
    RankedSolutions ranked;
    vector<int> supporters = supporter_counts(task);

    for (const Plan &plan : sols.plans) {
        int n = static_cast<int>(plan.actions.size());
        Rational commitment(0);
        Rational difficulty(0);
        for (int i = 0; i < n; ++i) {
            Rational weight(n - i, n);
            commitment += weight * Rational(phi_commitment(sols, plan, i + 1));
            difficulty +=
                weight * phi_difficulty(task, task.actions[plan.actions[i]],
                                        supporters);
        }
        ranked.rank_commitment.push_back(commitment);
        ranked.rank_difficulty.push_back(difficulty);
    }

    if (sols.plans.empty())
        return ranked;

    Rational best_commitment = ranked.rank_commitment[0];
    for (const Rational &value : ranked.rank_commitment)
        if (value > best_commitment)
            best_commitment = value;
    Rational best_difficulty(0);
    bool first = true;
    for (size_t p = 0; p < sols.plans.size(); ++p) {
        if (ranked.rank_commitment[p] != best_commitment)
            continue;
        if (first || ranked.rank_difficulty[p] > best_difficulty) {
            best_difficulty = ranked.rank_difficulty[p];
            first = false;
        }
    }
    for (size_t p = 0; p < sols.plans.size(); ++p)
        if (ranked.rank_commitment[p] == best_commitment &&
            ranked.rank_difficulty[p] == best_difficulty)
            ranked.top.push_back(static_cast<int>(p));
    return ranked;
}

}
