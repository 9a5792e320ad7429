#include "kb.h"

#include "term.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace learner {

namespace {

string atom_to_string(const string &functor, const vector<string> &args) {
    string result = functor;
    if (!args.empty()) {
        result += "(";
        for (size_t i = 0; i < args.size(); ++i) {
            if (i > 0)
                result += ", ";
            result += args[i];
        }
        result += ")";
    }
    result += " .";
    return result;
}

}

string emit_kb(const KnowledgeBase &kb) {
    ostringstream os;
    vector<string> problem_order;
    for (const KbExample &example : kb.examples) {
        os << "% Example " << example.example_id << " from problem "
           << example.problem_id << "\n";
        for (const TargetInstance &instance : example.instances) {
            vector<string> args = {example.example_id, example.problem_id};
            args.insert(args.end(), instance.args.begin(),
                        instance.args.end());
            args.push_back(instance.label);
            os << atom_to_string(kb.target_predicate, args) << "\n";
        }
        for (const Fact &fact : example.facts)
            os << atom_to_string(fact.predicate, fact.args) << "\n";
        os << "\n";
        bool seen = false;
        for (const string &pid : problem_order)
            if (pid == example.problem_id)
                seen = true;
        if (!seen)
            problem_order.push_back(example.problem_id);
    }
    for (const string &pid : problem_order) {
        auto it = kb.statics.find(pid);
        if (it == kb.statics.end() || it->second.empty())
            continue;
        os << "% Static Predicates of problem " << pid << "\n";
        for (const Fact &fact : it->second)
            os << atom_to_string(fact.predicate, fact.args) << "\n";
        os << "\n";
    }
    return os.str();
}

KnowledgeBase parse_kb(const string &text) {
    KnowledgeBase kb;
    unordered_map<string, int> example_index;

    auto example_for = [&](const string &eid, const string &pid) -> KbExample & {
        auto it = example_index.find(eid);
        if (it == example_index.end()) {
            example_index[eid] = static_cast<int>(kb.examples.size());
            kb.examples.push_back(KbExample{eid, pid, {}, {}});
            return kb.examples.back();
        }
        return kb.examples[it->second];
    };

    istringstream in(text);
    string line;
    int line_no = 0;
    while (getline(in, line)) {
        ++line_no;
        size_t comment = line.find('%');
        if (comment != string::npos)
            line = line.substr(0, comment);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.back() == '.')
            line = trim(line.substr(0, line.size() - 1));
        Term term;
        if (!parse_term(line, term))
            throw runtime_error("kb line " + to_string(line_no) +
                                ": malformed atom: " + line);

        if (term.functor == "selected" ||
            term.functor.rfind("selected_", 0) == 0) {
            if (term.args.size() < 3)
                throw runtime_error("kb line " + to_string(line_no) +
                                    ": target atom needs id, problem, class");
            if (kb.target_predicate.empty())
                kb.target_predicate = term.functor;
            else if (kb.target_predicate != term.functor)
                throw runtime_error("kb line " + to_string(line_no) +
                                    ": mixed target predicates '" +
                                    kb.target_predicate + "' and '" +
                                    term.functor + "'");
            KbExample &example = example_for(term.args[0], term.args[1]);
            TargetInstance instance;
            instance.args.assign(term.args.begin() + 2, term.args.end() - 1);
            instance.label = term.args.back();
            example.instances.push_back(move(instance));
        } else if (term.functor.rfind("static_fact_", 0) == 0) {
            if (term.args.empty())
                throw runtime_error("kb line " + to_string(line_no) +
                                    ": static fact needs a problem id");
            kb.statics[term.args[0]].push_back(
                Fact{term.functor, term.args});
        } else {
            if (term.args.size() < 2)
                throw runtime_error("kb line " + to_string(line_no) +
                                    ": context fact needs ids");
            KbExample &example = example_for(term.args[0], term.args[1]);
            example.facts.push_back(Fact{term.functor, term.args});
        }
    }
    return kb;
}

string read_text_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("cannot open file: " + path);
    ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const string &path, const string &content) {
    ofstream out(path);
    if (!out)
        throw runtime_error("cannot write file: " + path);
    out << content;
}

KnowledgeBase load_kb_file(const string &path) {
    return parse_kb(read_text_file(path));
}

}
