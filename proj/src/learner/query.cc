#include "query.h"

using namespace std;

namespace learner {

namespace {

bool match_from(const IndexedFacts &facts,
                const vector<const QueryLiteral *> &conjunction, size_t k,
                Bindings &bindings, Bindings *witness) {
    if (k == conjunction.size()) {
        if (witness)
            *witness = bindings;
        return true;
    }
    const QueryLiteral &literal = *conjunction[k];
    const vector<int> *candidates = facts.lookup(literal.predicate);
    if (!candidates)
        return false;
    for (int fact_index : *candidates) {
        const Fact &fact = facts.fact(fact_index);
        if (fact.args.size() != literal.args.size())
            continue;
        vector<int> trail;
        bool ok = true;
        for (size_t i = 0; i < literal.args.size(); ++i) {
            const QueryArg &arg = literal.args[i];
            if (arg.kind == QueryArg::kConstant) {
                if (arg.constant != fact.args[i]) {
                    ok = false;
                    break;
                }
            } else {
                if (bindings.is_bound(arg.var)) {
                    if (bindings.value(arg.var) != fact.args[i]) {
                        ok = false;
                        break;
                    }
                } else {
                    bindings.bind(arg.var, fact.args[i]);
                    trail.push_back(arg.var);
                }
            }
        }
        if (ok && match_from(facts, conjunction, k + 1, bindings, witness))
            return true;
        for (int var : trail)
            bindings.unbind(var);
    }
    return false;
}

}

bool query_succeeds(const IndexedFacts &facts,
                    const vector<const QueryLiteral *> &conjunction,
                    const Bindings &initial, Bindings *witness) {
    Bindings working = initial;
    return match_from(facts, conjunction, 0, working, witness);
}

}
