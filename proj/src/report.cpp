#include "fpalg/report.hpp"

#include "fpalg/print.hpp"

namespace fpalg {

std::string render_text(const ConfluenceReport& report, const Alphabet& alphabet) {
    std::string out;
    std::size_t total = report.pairs.size();
    if (report.confluent) {
        out = "confluent; " + std::to_string(total) + " critical pair" +
              (total == 1 ? "" : "s") + " resolved\n";
    } else {
        std::size_t unresolved = 0;
        for (const auto& p : report.pairs) unresolved += !p.resolved;
        out = "not confluent; " + std::to_string(unresolved) + " of " +
              std::to_string(total) + " critical pair" + (total == 1 ? "" : "s") +
              " unresolved\n";
    }
    for (const auto& p : report.pairs) {
        out += "  " + to_string(p.word, alphabet);
        if (p.resolved)
            out += ": resolves to " + to_string(p.left_normal_form, alphabet) + "\n";
        else
            out += ": UNRESOLVED, left gives " +
                   to_string(p.left_normal_form, alphabet) + ", right gives " +
                   to_string(p.right_normal_form, alphabet) + "\n";
    }
    return out;
}

OrderedJson render_json(const ConfluenceReport& report, const Alphabet& alphabet) {
    OrderedJson pairs = OrderedJson::array();
    for (const auto& p : report.pairs)
        pairs.push_back({{"word", to_string(p.word, alphabet)},
                         {"left", to_string(p.left_normal_form, alphabet)},
                         {"right", to_string(p.right_normal_form, alphabet)},
                         {"resolved", p.resolved}});
    return OrderedJson{{"confluent", report.confluent},
                       {"critical_pairs", std::move(pairs)}};
}

std::string render_text(const Report& report) {
    std::string out = report.title + "\n";
    for (const auto& check : report.checks) {
        out += std::string("  ") + (check.pass ? "[ok]   " : "[FAIL] ") + check.label;
        if (!check.pass)
            out += "\n         residual: " + check.residual_text;
        out += "\n";
    }
    out += std::string("verdict: ") + (report.pass ? "pass" : "fail") + "\n";
    return out;
}

OrderedJson render_json(const Report& report) {
    OrderedJson checks = OrderedJson::array();
    for (const auto& check : report.checks)
        checks.push_back({{"label", check.label},
                          {"pass", check.pass},
                          {"residual", check.residual_text}});
    return OrderedJson{{"title", report.title},
                       {"verdict", report.pass ? "pass" : "fail"},
                       {"checks", std::move(checks)}};
}

std::string render_text(const RepReport& report) {
    std::string out = report.title + "\n";
    for (const auto& check : report.checks) {
        out += std::string("  ") + (check.pass ? "[ok]   " : "[FAIL] ") + check.label;
        if (!check.pass) {
            out += "\n         residual:\n";
            std::string matrix = check.residual.to_string();
            std::size_t start = 0;
            while (start <= matrix.size()) {
                std::size_t end = matrix.find('\n', start);
                if (end == std::string::npos) end = matrix.size();
                out += "           " + matrix.substr(start, end - start) + "\n";
                start = end + 1;
            }
            continue;
        }
        out += "\n";
    }
    out += std::string("verdict: ") + (report.pass ? "pass" : "fail") + "\n";
    return out;
}

OrderedJson render_json(const RepReport& report) {
    OrderedJson checks = OrderedJson::array();
    for (const auto& check : report.checks) {
        OrderedJson rows = OrderedJson::array();
        for (unsigned r = 0; r < check.residual.dim(); ++r) {
            OrderedJson row = OrderedJson::array();
            for (unsigned c = 0; c < check.residual.dim(); ++c)
                row.push_back(check.residual.at(r, c).to_string());
            rows.push_back(std::move(row));
        }
        checks.push_back({{"label", check.label},
                          {"pass", check.pass},
                          {"residual", std::move(rows)}});
    }
    return OrderedJson{{"title", report.title},
                       {"verdict", report.pass ? "pass" : "fail"},
                       {"checks", std::move(checks)}};
}

std::string render_text(const std::vector<CriterionResult>& results) {
    std::string out;
    bool all = true;
    for (const auto& result : results) {
        all = all && result.pass;
        out += (result.pass ? "[ok]   " : "[FAIL] ") +
               std::to_string(result.id) + ". " + result.title + " (" +
               std::to_string(result.checks.size()) + " checks)\n";
        if (!result.pass)
            for (const auto& check : result.checks)
                if (!check.pass) {
                    out += "         " + check.label + "\n";
                    if (!check.detail.empty())
                        out += "           " + check.detail + "\n";
                }
    }
    out += std::string("verdict: ") + (all ? "pass" : "fail") + "\n";
    return out;
}

OrderedJson render_json(const std::vector<CriterionResult>& results) {
    OrderedJson criteria = OrderedJson::array();
    bool all = true;
    for (const auto& result : results) {
        all = all && result.pass;
        OrderedJson checks = OrderedJson::array();
        for (const auto& check : result.checks)
            checks.push_back({{"label", check.label},
                              {"pass", check.pass},
                              {"detail", check.detail}});
        criteria.push_back({{"id", result.id},
                            {"title", result.title},
                            {"verdict", result.pass ? "pass" : "fail"},
                            {"checks", std::move(checks)}});
    }
    return OrderedJson{{"verdict", all ? "pass" : "fail"},
                       {"criteria", std::move(criteria)}};
}

} // namespace fpalg
