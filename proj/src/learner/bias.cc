#include "bias.h"

#include "kb.h"
#include "term.h"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

using namespace std;

namespace learner {

bool is_identifier_type(const string &type) {
    return type == "index" || type == "idex" || type == "idprob";
}

bool is_example_id_type(const string &type) {
    return type == "index" || type == "idex";
}

namespace {

// Fig-3-style mode variables: uppercase initial of the type plus a
// per-letter counter within the atom (+S1, +D1, +D2).
vector<string> mode_var_names(const vector<string> &arg_types) {
    vector<string> names;
    map<char, int> counters;
    for (const string &type : arg_types) {
        if (type == "index" || type == "idex") {
            names.push_back("+IdExample");
        } else if (type == "idprob") {
            names.push_back("+IdProblem");
        } else {
            char letter =
                static_cast<char>(toupper(static_cast<unsigned char>(type[0])));
            int count = ++counters[letter];
            names.push_back(string("+") + letter + to_string(count));
        }
    }
    return names;
}

string atom(const string &functor, const vector<string> &args) {
    string result = functor + "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i > 0)
            result += ",";
        result += args[i];
    }
    result += ")";
    return result;
}

string group_of(const string &predicate) {
    if (predicate.rfind("helpful_", 0) == 0)
        return "% predicates for the helpful actions";
    if (predicate.rfind("target_goal_", 0) == 0)
        return "% predicates for the target goals";
    if (predicate.rfind("static_fact_", 0) == 0)
        return "% predicates for the static facts";
    return "";
}

}

string emit_bias(const LanguageBias &bias) {
    ostringstream os;
    os << "% ---- The target concept ----\n";

    vector<string> target_vars =
        mode_var_names(vector<string>(bias.target_arg_types.begin(),
                                      bias.target_arg_types.end() - 1));
    target_vars.push_back(bias.target_predicate == "selected" ? "-Operator"
                                                              : "-Class");
    os << "predict(" << atom(bias.target_predicate, target_vars) << ").\n";
    os << "type(" << atom(bias.target_predicate, bias.target_arg_types)
       << ").\n";
    os << "classes([";
    for (size_t i = 0; i < bias.classes.size(); ++i) {
        if (i > 0)
            os << ",";
        os << bias.classes[i];
    }
    os << "]).\n";
    os << "\n";
    os << "% ---- The helpful context ----\n";

    string current_group;
    for (const BiasMode &mode : bias.modes) {
        string group = group_of(mode.predicate);
        if (group != current_group) {
            current_group = group;
            if (!group.empty())
                os << group << "\n";
        }
        os << "rmode(" << atom(mode.predicate, mode_var_names(mode.arg_types))
           << ").\n";
        os << "type(" << atom(mode.predicate, mode.arg_types) << ").\n";
        os << "\n";
    }
    return os.str();
}

LanguageBias parse_bias(const string &text) {
    LanguageBias bias;
    vector<string> rmode_order;
    map<string, vector<string>> types_by_predicate;

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
        Term outer;
        if (!parse_term(line, outer) || outer.args.size() != 1)
            throw runtime_error("bias line " + to_string(line_no) +
                                ": malformed declaration: " + line);

        if (outer.functor == "classes") {
            string list = trim(outer.args[0]);
            if (list.size() < 2 || list.front() != '[' || list.back() != ']')
                throw runtime_error("bias line " + to_string(line_no) +
                                    ": classes expects a [..] list");
            for (const string &cls :
                 split_top_level(list.substr(1, list.size() - 2)))
                bias.classes.push_back(cls);
            continue;
        }

        Term inner;
        if (!parse_term(outer.args[0], inner))
            throw runtime_error("bias line " + to_string(line_no) +
                                ": malformed declaration: " + line);
        if (outer.functor == "predict") {
            bias.target_predicate = inner.functor;
        } else if (outer.functor == "type") {
            types_by_predicate[inner.functor] = inner.args;
        } else if (outer.functor == "rmode") {
            rmode_order.push_back(inner.functor);
        } else {
            throw runtime_error("bias line " + to_string(line_no) +
                                ": unknown declaration '" + outer.functor +
                                "'");
        }
    }

    if (bias.target_predicate.empty())
        throw runtime_error("bias file has no predict(...) declaration");
    auto target_types = types_by_predicate.find(bias.target_predicate);
    if (target_types == types_by_predicate.end())
        throw runtime_error("bias file has no type(...) for the target");
    bias.target_arg_types = target_types->second;

    for (const string &predicate : rmode_order) {
        auto it = types_by_predicate.find(predicate);
        if (it == types_by_predicate.end())
            throw runtime_error("bias file has no type(...) for rmode '" +
                                predicate + "'");
        bias.modes.push_back(BiasMode{predicate, it->second});
    }
    return bias;
}

LanguageBias load_bias_file(const string &path) {
    return parse_bias(read_text_file(path));
}

}
