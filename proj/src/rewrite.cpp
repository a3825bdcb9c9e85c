#include "fpalg/rewrite.hpp"

#include "fpalg/print.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace fpalg {

long default_fuel() {
    static const long value = [] {
        if (const char* env = std::getenv("FPALG_FUEL")) {
            char* end = nullptr;
            long parsed = std::strtol(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) return parsed;
        }
        return 1000000L;
    }();
    return value;
}

RewriteSystem::RewriteSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                             long fuel)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), fuel_(fuel) {
    if (fuel_ <= 0) throw Error("rewrite budget must be positive");
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const auto& rule = rules_[r];
        if (rule.lhs.empty())
            throw Error("rule " + std::to_string(r + 1) +
                        " has an empty left-hand side");
        for (unsigned g : rule.lhs)
            if (g >= alphabet_.size())
                throw Error("rule " + std::to_string(r + 1) +
                            " uses a generator outside the alphabet");
        for (const auto& [w, c] : rule.rhs.terms()) {
            for (unsigned g : w)
                if (g >= alphabet_.size())
                    throw Error("rule " + std::to_string(r + 1) +
                                " uses a generator outside the alphabet");
            if (!(w < rule.lhs))
                throw Error("rule " + std::to_string(r + 1) + " (" +
                            to_string(rule.lhs, alphabet_) +
                            " -> ...) does not decrease: monomial " +
                            to_string(w, alphabet_) + " is not smaller");
        }
        for (std::size_t s = 0; s < r; ++s)
            if (rules_[s].lhs == rule.lhs)
                throw Error("rules " + std::to_string(s + 1) + " and " +
                            std::to_string(r + 1) +
                            " share the left-hand side " +
                            to_string(rule.lhs, alphabet_));
    }
}

RewriteSystem RewriteSystem::orient(const Alphabet& alphabet,
                                    const std::vector<Poly>& relations,
                                    long fuel) {
    std::vector<RewriteRule> rules;
    for (std::size_t k = 0; k < relations.size(); ++k) {
        const Poly& rel = relations[k];
        if (rel.is_zero())
            throw Error("relation " + std::to_string(k + 1) +
                        " is zero and cannot be oriented");
        auto [lead_w, lead_c] = *rel.leading();
        if (lead_w.empty())
            throw Error("relation " + std::to_string(k + 1) + " (" +
                        to_string(rel, alphabet) +
                        ") cannot be oriented: its leading monomial is constant");
        Poly rest = rel - Poly::monomial(lead_w, lead_c);
        Poly rhs = -rest * lead_c.inverse();
        bool duplicate = false;
        for (const auto& rule : rules) {
            if (rule.lhs != lead_w) continue;
            if (rule.rhs == rhs) {
                duplicate = true;
                break;
            }
            throw Error("relation " + std::to_string(k + 1) + " (" +
                        to_string(rel, alphabet) +
                        ") orients to the already used left-hand side " +
                        to_string(lead_w, alphabet) +
                        " with a different right-hand side");
        }
        if (!duplicate) rules.push_back({std::move(lead_w), std::move(rhs)});
    }
    return RewriteSystem(alphabet, std::move(rules), fuel);
}

RewriteSystem RewriteSystem::with_fuel(long fuel) const {
    return RewriteSystem(alphabet_, rules_, fuel);
}

std::optional<Match> RewriteSystem::find_match(const Word& w) const {
    for (std::size_t pos = 0; pos < w.degree(); ++pos) {
        for (std::size_t r = 0; r < rules_.size(); ++r) {
            const Word& lhs = rules_[r].lhs;
            if (pos + lhs.degree() > w.degree()) continue;
            bool hit = true;
            for (std::size_t k = 0; k < lhs.degree(); ++k)
                if (w[pos + k] != lhs[k]) { hit = false; break; }
            if (hit) return Match{pos, r};
        }
    }
    return std::nullopt;
}

Poly RewriteSystem::apply_at(const Word& w, const Scalar& c, const Match& m) const {
    const RewriteRule& rule = rules_[m.rule];
    Word u = w.prefix(m.pos);
    Word v = w.suffix(w.degree() - m.pos - rule.lhs.degree());
    Poly out;
    for (const auto& [rw, rc] : rule.rhs.terms())
        out.add_term(u * rw * v, c * rc);
    return out;
}

Poly RewriteSystem::normalize(const Poly& p) const {
    // Work queue keyed by monomial. Always rewriting the largest reducible
    // monomial means every word entering the queue is strictly smaller than
    // the one just consumed, so irreducible words reach `result` exactly once
    // and the loop terminates whenever the budget allows.
    Poly::Terms work(p.terms().begin(), p.terms().end());
    Poly result;
    long steps = 0;
    while (!work.empty()) {
        auto top = std::prev(work.end());
        Word w = top->first;
        Scalar c = top->second;
        work.erase(top);
        auto m = find_match(w);
        if (!m) {
            result.add_term(w, c);
            continue;
        }
        if (++steps > fuel_) throw FuelExhausted(fuel_);
        Poly rewritten = apply_at(w, c, *m);
        for (const auto& [rw, rc] : rewritten.terms()) {
            auto [it, fresh] = work.try_emplace(rw, rc);
            if (!fresh) {
                it->second += rc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return result;
}

std::vector<CriticalPair> RewriteSystem::critical_pairs() const {
    std::vector<CriticalPair> out;
    const Scalar one(1);
    for (std::size_t a = 0; a < rules_.size(); ++a) {
        const Word& la = rules_[a].lhs;
        for (std::size_t b = 0; b < rules_.size(); ++b) {
            const Word& lb = rules_[b].lhs;
            // Overlaps: a proper suffix of la equals a proper prefix of lb.
            std::size_t max_k = std::min(la.degree(), lb.degree()) - 1;
            for (std::size_t k = 1; k <= max_k; ++k) {
                if (la.suffix(k) != lb.prefix(k)) continue;
                Word w = la * lb.suffix(lb.degree() - k);
                out.push_back({w, a, b, CriticalPair::Kind::Overlap,
                               apply_at(w, one, {0, a}),
                               apply_at(w, one, {la.degree() - k, b})});
            }
            // Inclusions: lb occurs inside la as a proper factor.
            if (a != b && lb.degree() < la.degree()) {
                std::size_t from = 0;
                while (auto pos = la.find(lb, from)) {
                    out.push_back({la, a, b, CriticalPair::Kind::Inclusion,
                                   apply_at(la, one, {0, a}),
                                   apply_at(la, one, {*pos, b})});
                    from = *pos + 1;
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const CriticalPair& x, const CriticalPair& y) {
                         return std::tie(x.word, x.rule_a, x.rule_b) <
                                std::tie(y.word, y.rule_a, y.rule_b);
                     });
    return out;
}

ConfluenceReport RewriteSystem::check_confluence() const {
    ConfluenceReport report;
    report.confluent = true;
    for (const auto& pair : critical_pairs()) {
        Poly left = normalize(pair.left);
        Poly right = normalize(pair.right);
        bool resolved = left == right;
        if (!resolved) report.confluent = false;
        report.pairs.push_back(
            {pair.word, std::move(left), std::move(right), resolved});
    }
    return report;
}

} // namespace fpalg
