#include "parser.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

using namespace std;

namespace pddl {

namespace {

/*
  The front end works on a generic s-expression tree whose nodes carry
  source positions, so semantic errors can point at the offending token
  even though they are raised after tokenization.
*/
struct SExpr {
    bool is_list;
    string atom;                // lowercased
    vector<SExpr> items;
    int line;
    int column;
};

class Tokenizer {
    const string &text;
    size_t pos = 0;
    int line = 1;
    int column = 1;

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

public:
    explicit Tokenizer(const string &text) : text(text) {}

    void skip_whitespace_and_comments() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ';') {
                while (pos < text.size() && text[pos] != '\n')
                    advance();
            } else if (isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_whitespace_and_comments();
        return pos >= text.size();
    }

    SExpr parse_expr() {
        skip_whitespace_and_comments();
        if (pos >= text.size())
            throw ParseError(line, column, "unexpected end of input");
        int start_line = line;
        int start_column = column;
        char c = text[pos];
        if (c == '(') {
            advance();
            SExpr node{true, "", {}, start_line, start_column};
            while (true) {
                skip_whitespace_and_comments();
                if (pos >= text.size())
                    throw ParseError(start_line, start_column,
                                     "unbalanced '(': missing ')'");
                if (text[pos] == ')') {
                    advance();
                    return node;
                }
                node.items.push_back(parse_expr());
            }
        }
        if (c == ')')
            throw ParseError(line, column, "unexpected ')'");
        string token;
        while (pos < text.size()) {
            char d = text[pos];
            if (d == '(' || d == ')' || d == ';' ||
                isspace(static_cast<unsigned char>(d)))
                break;
            token += static_cast<char>(tolower(static_cast<unsigned char>(d)));
            advance();
        }
        return SExpr{false, token, {}, start_line, start_column};
    }
};

[[noreturn]] void fail(const SExpr &at, const string &message) {
    throw ParseError(at.line, at.column, message);
}

const SExpr &expect_list(const SExpr &expr, const string &what) {
    if (!expr.is_list)
        fail(expr, "expected " + what + ", got atom '" + expr.atom + "'");
    return expr;
}

const string &expect_atom(const SExpr &expr, const string &what) {
    if (expr.is_list)
        fail(expr, "expected " + what + ", got a list");
    return expr.atom;
}

bool head_is(const SExpr &expr, const string &keyword) {
    return expr.is_list && !expr.items.empty() && !expr.items[0].is_list &&
           expr.items[0].atom == keyword;
}

// Parses "n1 n2 - t1 n3 - t2 n4" style typed lists; untyped entries
// default to "object".
vector<TypedName> parse_typed_list(const vector<SExpr> &items, size_t begin,
                                   const SExpr &context) {
    vector<TypedName> result;
    vector<string> pending;
    for (size_t i = begin; i < items.size(); ++i) {
        const string &token = expect_atom(items[i], "name in typed list");
        if (token == "-") {
            if (i + 1 >= items.size())
                fail(items[i], "dangling '-' in typed list");
            const SExpr &type_expr = items[i + 1];
            if (type_expr.is_list)
                fail(type_expr, "'either' and compound types are not supported");
            const string &type = type_expr.atom;
            if (type == "either")
                fail(type_expr, "'either' types are not supported");
            for (const string &name : pending)
                result.push_back({name, type});
            pending.clear();
            ++i;
        } else {
            pending.push_back(token);
        }
    }
    for (const string &name : pending)
        result.push_back({name, "object"});
    (void)context;
    return result;
}

class DomainBuilder {
    DomainModel domain;
    map<string, const PredicateDecl *> predicate_by_name;
    map<string, string> constant_types;

    static const set<string> &rejected_heads() {
        static const set<string> heads = {
            "not", "or", "imply", "forall", "exists", "when", "increase",
            "decrease", "assign", "scale-up", "scale-down", "=", ">", "<",
            ">=", "<="};
        return heads;
    }

    Atom parse_atom(const SExpr &expr, const map<string, string> &var_types,
                    const string &where) {
        expect_list(expr, "atom");
        if (expr.items.empty())
            fail(expr, "empty atom in " + where);
        const string &pred_name = expect_atom(expr.items[0], "predicate name");
        if (rejected_heads().count(pred_name))
            fail(expr.items[0],
                 "unsupported construct '" + pred_name + "' in " + where);
        auto pred_it = predicate_by_name.find(pred_name);
        if (pred_it == predicate_by_name.end())
            fail(expr.items[0], "undeclared predicate '" + pred_name + "'");
        const PredicateDecl &decl = *pred_it->second;
        if (expr.items.size() - 1 != decl.arg_types.size())
            fail(expr, "predicate '" + pred_name + "' expects " +
                           to_string(decl.arg_types.size()) + " arguments, got " +
                           to_string(expr.items.size() - 1));
        Atom atom;
        atom.predicate = pred_name;
        for (size_t i = 1; i < expr.items.size(); ++i) {
            const string &term = expect_atom(expr.items[i], "term");
            const string &expected_type = decl.arg_types[i - 1];
            string term_type;
            if (!term.empty() && term[0] == '?') {
                auto var_it = var_types.find(term);
                if (var_it == var_types.end())
                    fail(expr.items[i],
                         "variable '" + term + "' is not a declared parameter");
                term_type = var_it->second;
            } else {
                auto const_it = constant_types.find(term);
                if (const_it == constant_types.end())
                    fail(expr.items[i],
                         "'" + term + "' is not a declared domain constant");
                term_type = const_it->second;
            }
            if (!domain.types.is_subtype(term_type, expected_type))
                fail(expr.items[i], "argument '" + term + "' of type '" +
                                        term_type + "' is incompatible with '" +
                                        expected_type + "'");
            atom.args.push_back(term);
        }
        return atom;
    }

    vector<SExpr> flatten_and(const SExpr &expr) {
        if (head_is(expr, "and"))
            return vector<SExpr>(expr.items.begin() + 1, expr.items.end());
        return {expr};
    }

    void parse_action(const SExpr &expr) {
        OperatorSchema op;
        if (expr.items.size() < 2)
            fail(expr, ":action needs a name");
        op.name = expect_atom(expr.items[1], "action name");
        map<string, string> var_types;
        size_t i = 2;
        while (i < expr.items.size()) {
            const string &key = expect_atom(expr.items[i], "action keyword");
            if (i + 1 >= expr.items.size())
                fail(expr.items[i], "missing value after '" + key + "'");
            const SExpr &value = expr.items[i + 1];
            if (key == ":parameters") {
                expect_list(value, "parameter list");
                op.params = parse_typed_list(value.items, 0, value);
                for (const TypedName &param : op.params) {
                    if (param.name.empty() || param.name[0] != '?')
                        fail(value, "parameter '" + param.name +
                                        "' must start with '?'");
                    if (!domain.types.contains(param.type))
                        fail(value, "undeclared type '" + param.type + "'");
                    if (var_types.count(param.name))
                        fail(value, "duplicate parameter '" + param.name + "'");
                    var_types[param.name] = param.type;
                }
            } else if (key == ":precondition") {
                for (const SExpr &part : flatten_and(value)) {
                    if (!part.is_list || part.items.empty())
                        fail(part, "malformed precondition");
                    const string &h = expect_atom(part.items[0], "head");
                    if (h == "not")
                        fail(part, "negative preconditions are not supported");
                    if (rejected_heads().count(h) || h == "preference")
                        fail(part, "unsupported construct '" + h +
                                       "' in precondition");
                    op.pre.push_back(parse_atom(part, var_types, "precondition"));
                }
            } else if (key == ":effect") {
                for (const SExpr &part : flatten_and(value)) {
                    if (!part.is_list || part.items.empty())
                        fail(part, "malformed effect");
                    const string &h = expect_atom(part.items[0], "head");
                    if (h == "not") {
                        if (part.items.size() != 2)
                            fail(part, "malformed negated effect");
                        op.del.push_back(
                            parse_atom(part.items[1], var_types, "effect"));
                    } else if (h == "when" || h == "forall") {
                        fail(part, "conditional/quantified effects are not "
                                   "supported");
                    } else if (rejected_heads().count(h)) {
                        fail(part,
                             "unsupported construct '" + h + "' in effect");
                    } else {
                        op.add.push_back(parse_atom(part, var_types, "effect"));
                    }
                }
            } else {
                fail(expr.items[i], "unsupported action section '" + key + "'");
            }
            i += 2;
        }
        domain.operators.push_back(move(op));
    }

public:
    DomainModel build(const SExpr &root) {
        expect_list(root, "domain definition");
        if (!head_is(root, "define"))
            fail(root, "expected (define (domain ...) ...)");
        if (root.items.size() < 2 || !head_is(root.items[1], "domain"))
            fail(root, "expected (domain <name>)");
        domain.name = expect_atom(root.items[1].items.at(1), "domain name");

        // First pass: declarations, in file order.
        for (size_t i = 2; i < root.items.size(); ++i) {
            const SExpr &section = expect_list(root.items[i], "domain section");
            if (section.items.empty())
                fail(section, "empty domain section");
            const string &key = expect_atom(section.items[0], "section keyword");
            if (key == ":requirements") {
                for (size_t j = 1; j < section.items.size(); ++j) {
                    const string &req =
                        expect_atom(section.items[j], "requirement");
                    if (req != ":strips" && req != ":typing")
                        fail(section.items[j],
                             "unsupported requirement '" + req + "'");
                }
            } else if (key == ":types") {
                vector<TypedName> types =
                    parse_typed_list(section.items, 1, section);
                for (const TypedName &t : types)
                    domain.types.add_type(t.name, t.type);
                // Parents must exist; unseen parents root at object.
                for (const TypedName &t : types)
                    if (!domain.types.contains(t.type))
                        domain.types.add_type(t.type, "object");
                check_acyclic(section);
            } else if (key == ":constants") {
                for (const TypedName &c :
                     parse_typed_list(section.items, 1, section)) {
                    if (!domain.types.contains(c.type))
                        fail(section, "undeclared type '" + c.type + "'");
                    if (constant_types.count(c.name))
                        fail(section, "duplicate constant '" + c.name + "'");
                    constant_types[c.name] = c.type;
                    domain.constants.push_back(c);
                }
            } else if (key == ":predicates") {
                for (size_t j = 1; j < section.items.size(); ++j) {
                    const SExpr &decl =
                        expect_list(section.items[j], "predicate declaration");
                    if (decl.items.empty())
                        fail(decl, "empty predicate declaration");
                    PredicateDecl pred;
                    pred.name = expect_atom(decl.items[0], "predicate name");
                    vector<TypedName> args =
                        parse_typed_list(decl.items, 1, decl);
                    for (const TypedName &arg : args) {
                        if (!domain.types.contains(arg.type))
                            fail(decl, "undeclared type '" + arg.type + "'");
                        pred.arg_types.push_back(arg.type);
                    }
                    if (domain.find_predicate(pred.name))
                        fail(decl, "duplicate predicate '" + pred.name + "'");
                    domain.predicates.push_back(move(pred));
                }
            } else if (key != ":action") {
                fail(section, "unsupported domain section '" + key + "'");
            }
        }
        for (const PredicateDecl &pred : domain.predicates)
            predicate_by_name[pred.name] = &pred;

        // Second pass: actions (they may reference any declaration).
        for (size_t i = 2; i < root.items.size(); ++i)
            if (head_is(root.items[i], ":action"))
                parse_action(root.items[i]);
        return move(domain);
    }

    void check_acyclic(const SExpr &at) {
        for (const string &name : domain.types.names_in_order()) {
            set<string> seen;
            string current = name;
            while (!current.empty()) {
                if (!seen.insert(current).second)
                    fail(at, "type hierarchy contains a cycle at '" + current +
                                 "'");
                current = domain.types.parent(current);
            }
        }
    }
};

Atom parse_ground_atom(const SExpr &expr, const DomainModel &domain,
                       const map<string, string> &object_types,
                       const string &where) {
    if (!expr.is_list || expr.items.empty())
        fail(expr, "malformed atom in " + where);
    const string &pred_name = expect_atom(expr.items[0], "predicate name");
    if (pred_name == "not")
        fail(expr, "negation is not supported in " + where);
    if (pred_name == "=" || pred_name == "increase")
        fail(expr, "unsupported construct '" + pred_name + "' in " + where);
    const PredicateDecl *decl = domain.find_predicate(pred_name);
    if (!decl)
        fail(expr.items[0], "undeclared predicate '" + pred_name + "'");
    if (expr.items.size() - 1 != decl->arg_types.size())
        fail(expr, "predicate '" + pred_name + "' expects " +
                       to_string(decl->arg_types.size()) + " arguments, got " +
                       to_string(expr.items.size() - 1));
    Atom atom;
    atom.predicate = pred_name;
    for (size_t i = 1; i < expr.items.size(); ++i) {
        const string &term = expect_atom(expr.items[i], "object name");
        if (!term.empty() && term[0] == '?')
            fail(expr.items[i], where + " atoms must be ground");
        auto it = object_types.find(term);
        if (it == object_types.end())
            fail(expr.items[i], "unknown object '" + term + "'");
        if (!domain.types.is_subtype(it->second, decl->arg_types[i - 1]))
            fail(expr.items[i], "object '" + term + "' of type '" + it->second +
                                    "' is incompatible with '" +
                                    decl->arg_types[i - 1] + "'");
        atom.args.push_back(term);
    }
    return atom;
}

}

DomainModel parse_domain(const string &text) {
    Tokenizer tokenizer(text);
    SExpr root = tokenizer.parse_expr();
    DomainBuilder builder;
    return builder.build(root);
}

ProblemModel parse_problem(const string &text, const DomainModel &domain) {
    Tokenizer tokenizer(text);
    SExpr root = tokenizer.parse_expr();
    expect_list(root, "problem definition");
    if (!head_is(root, "define") || root.items.size() < 2 ||
        !head_is(root.items[1], "problem"))
        fail(root, "expected (define (problem <name>) ...)");

    ProblemModel problem;
    problem.name = expect_atom(root.items[1].items.at(1), "problem name");

    map<string, string> object_types;
    for (const TypedName &c : domain.constants)
        object_types[c.name] = c.type;

    // :objects must be registered before :init/:goal are checked, so
    // collect the sections first.
    vector<const SExpr *> init_sections, goal_sections;
    for (size_t i = 2; i < root.items.size(); ++i) {
        const SExpr &section = expect_list(root.items[i], "problem section");
        if (section.items.empty())
            fail(section, "empty problem section");
        const string &key = expect_atom(section.items[0], "section keyword");
        if (key == ":domain") {
            problem.domain_name =
                expect_atom(section.items.at(1), "domain name");
            if (problem.domain_name != domain.name)
                fail(section, "problem requires domain '" +
                                  problem.domain_name + "', got '" +
                                  domain.name + "'");
        } else if (key == ":objects") {
            for (const TypedName &obj :
                 parse_typed_list(section.items, 1, section)) {
                if (!domain.types.contains(obj.type))
                    fail(section,
                         "object '" + obj.name + "' has undeclared type '" +
                             obj.type + "'");
                if (object_types.count(obj.name))
                    fail(section, "duplicate object '" + obj.name + "'");
                object_types[obj.name] = obj.type;
                problem.objects.push_back(obj);
            }
        } else if (key == ":init") {
            init_sections.push_back(&section);
        } else if (key == ":goal") {
            goal_sections.push_back(&section);
        } else {
            fail(section, "unsupported problem section '" + key + "'");
        }
    }

    for (const SExpr *section : init_sections)
        for (size_t j = 1; j < section->items.size(); ++j)
            problem.init.push_back(parse_ground_atom(
                section->items[j], domain, object_types, "init"));

    for (const SExpr *section : goal_sections) {
        if (section->items.size() != 2)
            fail(*section, ":goal expects a single formula");
        const SExpr &formula = section->items[1];
        vector<const SExpr *> conjuncts;
        if (head_is(formula, "and")) {
            for (size_t j = 1; j < formula.items.size(); ++j)
                conjuncts.push_back(&formula.items[j]);
        } else {
            conjuncts.push_back(&formula);
        }
        for (const SExpr *conjunct : conjuncts)
            problem.goals.push_back(
                parse_ground_atom(*conjunct, domain, object_types, "goal"));
    }
    return problem;
}

namespace {

string read_file(const string &path) {
    ifstream in(path);
    if (!in)
        throw runtime_error("cannot open file: " + path);
    ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}

DomainModel parse_domain_file(const string &path) {
    return parse_domain(read_file(path));
}

ProblemModel parse_problem_file(const string &path, const DomainModel &domain) {
    return parse_problem(read_file(path), domain);
}

}
