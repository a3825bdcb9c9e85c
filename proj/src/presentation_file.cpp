#include "fpalg/presentation_file.hpp"

#include "fpalg/parse.hpp"
#include "fpalg/print.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fpalg {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string word;
    while (in >> word) out.push_back(word);
    return out;
}

// Splits "lhs -> rhs", trimming both sides.
bool split_arrow(const std::string& s, std::string& lhs, std::string& rhs) {
    std::size_t pos = s.find("->");
    if (pos == std::string::npos) return false;
    lhs = trim(s.substr(0, pos));
    rhs = trim(s.substr(pos + 2));
    return !lhs.empty() && !rhs.empty();
}

struct PendingHom {
    std::string name;
    const Presentation* target;
    std::map<unsigned, Poly> images;
    std::size_t line;
};

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& message) {
    throw Error(origin + ":" + std::to_string(line) + ": " + message);
}

} // namespace

PresentationFile parse_presentation_text(std::string_view text,
                                         const std::string& origin) {
    std::string name;
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, std::size_t>> relation_lines;
    std::vector<PendingHom> homs;
    bool saw_generators = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            fail(origin, line_no, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key == "name") {
            if (!name.empty()) fail(origin, line_no, "duplicate 'name'");
            if (value.empty() || split_words(value).size() != 1)
                fail(origin, line_no, "'name' must be a single word");
            name = value;
        } else if (key == "generators") {
            if (saw_generators) fail(origin, line_no, "duplicate 'generators'");
            generators = split_words(value);
            saw_generators = true;
        } else if (key == "relation") {
            if (!homs.empty())
                fail(origin, line_no, "relations must come before hom blocks");
            relation_lines.emplace_back(value, line_no);
        } else if (key == "hom") {
            std::string hom_name, target_name;
            if (!split_arrow(value, hom_name, target_name))
                fail(origin, line_no, "expected 'hom: <name> -> <builtin target>'");
            auto which = builtin_from_name(target_name);
            if (!which)
                fail(origin, line_no, "unknown target algebra '" + target_name + "'");
            const Presentation& target = builtin(*which);
            if (!target.system)
                fail(origin, line_no, "target '" + target_name +
                                          "' carries no rewrite system");
            homs.push_back({hom_name, &target, {}, line_no});
        } else if (key == "image") {
            if (homs.empty())
                fail(origin, line_no, "'image' outside of a hom block");
            std::string gen_name, expr;
            if (!split_arrow(value, gen_name, expr))
                fail(origin, line_no, "expected 'image: <generator> -> <expression>'");
            // The generator list is needed to resolve the left-hand side.
            if (!saw_generators)
                fail(origin, line_no, "'image' before 'generators'");
            auto it = std::find(generators.begin(), generators.end(), gen_name);
            if (it == generators.end())
                fail(origin, line_no, "'" + gen_name + "' is not a generator");
            unsigned g = static_cast<unsigned>(it - generators.begin());
            if (homs.back().images.count(g))
                fail(origin, line_no, "duplicate image for '" + gen_name + "'");
            try {
                homs.back().images.emplace(
                    g, parse_expr(expr, homs.back().target->alphabet));
            } catch (const Error& e) {
                fail(origin, line_no, std::string("bad image expression: ") + e.what());
            }
        } else {
            fail(origin, line_no, "unknown key '" + key + "'");
        }
    }

    if (name.empty()) fail(origin, line_no ? line_no : 1, "missing 'name'");
    if (!saw_generators) fail(origin, line_no, "missing 'generators'");
    Alphabet alphabet;
    try {
        alphabet = Alphabet(generators);
    } catch (const Error& e) {
        fail(origin, line_no, e.what());
    }

    std::vector<Poly> relations;
    for (const auto& [expr, line] : relation_lines) {
        Poly rel;
        try {
            rel = parse_expr(expr, alphabet);
        } catch (const Error& e) {
            fail(origin, line, std::string("bad relation: ") + e.what());
        }
        if (rel.is_zero())
            fail(origin, line, "relation '" + expr + "' is identically zero");
        if (rel.leading()->first.empty())
            fail(origin, line, "relation '" + expr +
                                   "' cannot be oriented: its leading "
                                   "monomial is constant");
        relations.push_back(std::move(rel));
    }

    Presentation pres{name, alphabet, relations, std::nullopt};
    try {
        pres.system = RewriteSystem::orient(alphabet, relations);
    } catch (const Error& e) {
        throw Error(origin + ": " + e.what());
    }

    PresentationFile out{std::move(pres), {}};
    for (auto& pending : homs) {
        for (unsigned g = 0; g < alphabet.size(); ++g)
            if (!pending.images.count(g))
                fail(origin, pending.line,
                     "hom '" + pending.name + "' gives no image for '" +
                         alphabet.name(g) + "'");
        out.homs.push_back(Hom{pending.name, out.presentation,
                               pending.target->name, *pending.target->system,
                               std::move(pending.images)});
    }
    return out;
}

PresentationFile load_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open presentation file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_presentation_text(buffer.str(), path);
}

} // namespace fpalg
