#ifndef LEARNER_KB_H
#define LEARNER_KB_H

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace learner {

struct Fact {
    std::string predicate;
    std::vector<std::string> args;

    bool operator==(const Fact &other) const {
        return predicate == other.predicate && args == other.args;
    }
    bool operator<(const Fact &other) const {
        if (predicate != other.predicate)
            return predicate < other.predicate;
        return args < other.args;
    }
};

// Ground facts indexed by predicate for the query engine.
class IndexedFacts {
    std::vector<Fact> facts_;
    std::unordered_map<std::string, std::vector<int>> by_predicate;

public:
    void add(Fact fact) {
        by_predicate[fact.predicate].push_back(static_cast<int>(facts_.size()));
        facts_.push_back(std::move(fact));
    }
    const std::vector<int> *lookup(const std::string &predicate) const {
        auto it = by_predicate.find(predicate);
        return it == by_predicate.end() ? nullptr : &it->second;
    }
    const Fact &fact(int index) const {return facts_[index];}
    const std::vector<Fact> &all() const {return facts_;}
};

// One target atom occurrence: the unit of classification. The operator
// task has one per example (no object args); a binding task has one per
// applicable instantiation, each with its own class.
struct TargetInstance {
    std::vector<std::string> args;  // target object args, without the class
    std::string label;
};

struct KbExample {
    std::string example_id;
    std::string problem_id;
    std::vector<Fact> facts;  // helpful_* / target_goal_* facts
    std::vector<TargetInstance> instances;
};

struct KnowledgeBase {
    std::string target_predicate;  // "selected" or "selected_<op>"
    std::vector<KbExample> examples;
    // problem id -> static_fact_* atoms, shared by that problem's examples
    std::map<std::string, std::vector<Fact>> statics;

    int num_instances() const {
        int n = 0;
        for (const KbExample &example : examples)
            n += static_cast<int>(example.instances.size());
        return n;
    }
    bool empty() const {return num_instances() == 0;}
};

// Text form: one period-terminated ground atom per line, '%' comments.
// Example facts carry (example id, problem id) as their first arguments;
// static_fact_* atoms carry the problem id only.
std::string emit_kb(const KnowledgeBase &kb);
KnowledgeBase parse_kb(const std::string &text);
KnowledgeBase load_kb_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);
std::string read_text_file(const std::string &path);

}

#endif
