#include "relrips/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace relrips {

namespace {

bool matches_at(const Word& w, const Word& lhs, std::size_t pos) {
    if (pos + lhs.size() > w.size()) return false;
    return std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

Word apply_rule(const Word& w, const RewriteRule& rule, std::size_t pos) {
    Word out;
    out.reserve(w.size() - rule.lhs.size() + rule.rhs.size());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
    return out;
}

}  // namespace

RewritingSystem::RewritingSystem(const GeneratorSet& gens, std::vector<RewriteRule> rules)
    : rules_(std::move(rules)) {
    for (const auto& rule : rules_) {
        if (rule.lhs.empty()) throw domain_error("rewrite rule with empty left-hand side");
        for (Sym s : rule.lhs)
            if (s >= gens.size()) throw domain_error("rule symbol outside generator set");
        for (Sym s : rule.rhs)
            if (s >= gens.size()) throw domain_error("rule symbol outside generator set");
        if (!shortlex_less(rule.rhs, rule.lhs))
            throw domain_error("rule '" + gens.render(rule.lhs) + " -> " + gens.render(rule.rhs) +
                               "' is not shortlex-decreasing");
        max_lhs_ = std::max(max_lhs_, rule.lhs.size());
    }
}

Word RewritingSystem::normal_form(Word w) const {
    // Scan left to right; after a rewrite, resume far enough back that any
    // redex created by the inserted right-hand side is still seen.
    std::size_t pos = 0;
    while (pos < w.size()) {
        bool fired = false;
        for (const auto& rule : rules_) {
            if (matches_at(w, rule.lhs, pos)) {
                w = apply_rule(w, rule, pos);
                pos = (pos + 1 >= max_lhs_) ? pos + 1 - max_lhs_ : 0;
                fired = true;
                break;
            }
        }
        if (!fired) ++pos;
    }
    return w;
}

std::vector<Word> RewritingSystem::one_step_rewrites(const Word& w) const {
    std::vector<Word> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (const auto& rule : rules_)
            if (matches_at(w, rule.lhs, pos)) out.push_back(apply_rule(w, rule, pos));
    return out;
}

bool RewritingSystem::is_irreducible(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
        for (const auto& rule : rules_)
            if (matches_at(w, rule.lhs, pos)) return false;
    return true;
}

ConfluenceReport bounded_confluence_check(const GroupPresentation& p, int L_conf) {
    if (L_conf < static_cast<int>(p.rws.max_lhs_length()))
        throw domain_error("confluence check length is below the longest rule left-hand side");

    ConfluenceReport report;
    report.checked_length = L_conf;

    std::unordered_map<Word, Word, WordHash> nf_cache;
    auto cached_nf = [&](const Word& w) -> const Word& {
        auto it = nf_cache.find(w);
        if (it != nf_cache.end()) return it->second;
        return nf_cache.emplace(w, p.rws.normal_form(w)).first->second;
    };

    const std::size_t n = p.gens.size();
    Word w;
    // Iterate all words of length 1..L_conf in odometer order.
    for (int len = 1; len <= L_conf; ++len) {
        w.assign(static_cast<std::size_t>(len), 0);
        while (true) {
            ++report.words_checked;
            auto reducts = p.rws.one_step_rewrites(w);
            if (reducts.size() > 1) {
                const Word& first_nf = cached_nf(reducts.front());
                for (std::size_t i = 1; i < reducts.size(); ++i) {
                    const Word& nf = cached_nf(reducts[i]);
                    if (nf != first_nf) {
                        report.passed = false;
                        report.witness = w;
                        report.normal_form_a = first_nf;
                        report.normal_form_b = nf;
                        return report;
                    }
                }
            }
            // advance odometer
            int k = len - 1;
            while (k >= 0 && w[static_cast<std::size_t>(k)] == n - 1) {
                w[static_cast<std::size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
            ++w[static_cast<std::size_t>(k)];
        }
    }
    return report;
}

PeripheralClosureReport check_normal_form_closed(const GroupPresentation& p,
                                                 const PeripheralSpec& k, int L) {
    PeripheralClosureReport report;
    const std::size_t n = k.sub_gens.size();
    if (n == 0) throw domain_error("peripheral subgroup with no generators");
    Word w;
    for (int len = 1; len <= L; ++len) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
        while (true) {
            w.clear();
            for (std::size_t i : idx) w.push_back(k.sub_gens[i]);
            ++report.words_checked;
            if (!k.is_sub_word(p.normal_form(w))) {
                report.closed = false;
                report.witness = w;
                return report;
            }
            int j = len - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - 1) {
                idx[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
        }
    }
    return report;
}

bool is_peripheral_member(const Word& w, const GroupPresentation& p, const PeripheralSpec& k) {
    return k.is_sub_word(p.normal_form(w));
}

std::optional<int> peripheral_distance(const Word& w1, const Word& w2,
                                       const GroupPresentation& p, const PeripheralSpec& k) {
    Word diff = p.gens.inverse_word(w1);
    diff.insert(diff.end(), w2.begin(), w2.end());
    Word nf = p.normal_form(diff);
    if (!k.is_sub_word(nf)) return std::nullopt;
    return static_cast<int>(nf.size());
}

GroupPresentation restrict_to_peripheral(const GroupPresentation& p, const PeripheralSpec& k,
                                         const std::string& name) {
    // Build the induced generator set, pairing sub-symbols with their inverses.
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<bool> used(p.gens.size(), false);
    for (Sym s : k.sub_gens) {
        if (used[s]) continue;
        Sym inv = p.gens.inverse(s);
        if (!k.contains(inv)) throw domain_error("peripheral generators not inverse-closed");
        pairs.emplace_back(p.gens.name(s), p.gens.name(inv));
        used[s] = used[inv] = true;
    }
    GeneratorSet sub = GeneratorSet::from_pairs(pairs);

    auto translate = [&](const Word& w) {
        Word out;
        out.reserve(w.size());
        for (Sym s : w) out.push_back(*sub.find(p.gens.name(s)));
        return out;
    };

    std::vector<RewriteRule> rules;
    for (const auto& rule : p.rws.rules())
        if (k.is_sub_word(rule.lhs) && k.is_sub_word(rule.rhs))
            rules.push_back({translate(rule.lhs), translate(rule.rhs)});

    return GroupPresentation{name, sub, RewritingSystem(sub, std::move(rules)),
                             p.confluence_check_length};
}

namespace {

struct Line {
    int number;
    std::string text;
};

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

ParsedPresentation parse_presentation(std::istream& in) {
    // Collect key=value entries per section, remembering line numbers.
    std::unordered_map<std::string, std::pair<std::string, int>> group_kv, peri_kv;
    std::string section;
    std::string raw;
    int lineno = 0;
    bool saw_group = false, saw_peri = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw parse_error("unterminated section header", lineno, 1);
            section = line.substr(1, line.size() - 2);
            if (section == "group")
                saw_group = true;
            else if (section == "peripheral")
                saw_peri = true;
            else
                throw parse_error("unknown section '" + section + "'", lineno, 1);
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", lineno,
                              static_cast<int>(raw.find_first_not_of(" \t") + 1));
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (section == "group")
            group_kv[key] = {value, lineno};
        else if (section == "peripheral")
            peri_kv[key] = {value, lineno};
        else
            throw parse_error("entry outside any section", lineno, 1);
    }
    if (!saw_group) throw parse_error("missing [group] section", lineno, 1);
    if (!saw_peri) throw parse_error("missing [peripheral] section", lineno, 1);

    auto require = [&](auto& kv, const char* key) -> std::pair<std::string, int> {
        auto it = kv.find(key);
        if (it == kv.end()) throw parse_error(std::string("missing key '") + key + "'", lineno, 1);
        return it->second;
    };

    auto [name, name_line] = require(group_kv, "name");
    (void)name_line;

    auto [gens_text, gens_line] = require(group_kv, "generators");
    std::vector<std::string> tokens;
    {
        std::istringstream ts(gens_text);
        std::string tok;
        while (ts >> tok) tokens.push_back(tok);
    }
    if (tokens.empty() || tokens.size() % 2 != 0)
        throw parse_error("generators must be an even-length list of inverse pairs", gens_line, 1);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < tokens.size(); i += 2) pairs.emplace_back(tokens[i], tokens[i + 1]);
    GeneratorSet gens;
    try {
        gens = GeneratorSet::from_pairs(pairs);
    } catch (const domain_error& e) {
        throw parse_error(e.what(), gens_line, 1);
    }

    auto [rules_text, rules_line] = require(group_kv, "rules");
    std::vector<RewriteRule> rules;
    {
        std::istringstream rs(rules_text);
        std::string item;
        while (std::getline(rs, item, ';')) {
            item = strip(item);
            if (item.empty()) continue;
            auto arrow = item.find("->");
            if (arrow == std::string::npos)
                throw parse_error("rule '" + item + "' is missing '->'", rules_line, 1);
            try {
                rules.push_back({gens.parse_word(item.substr(0, arrow)),
                                 gens.parse_word(item.substr(arrow + 2))});
            } catch (const domain_error& e) {
                throw parse_error(std::string(e.what()) + " in rule '" + item + "'", rules_line, 1);
            }
        }
    }

    int l_conf = 8;
    if (auto it = peri_kv.find("confluence_check_length"); it != peri_kv.end()) {
        try {
            l_conf = std::stoi(it->second.first);
        } catch (...) {
            throw parse_error("confluence_check_length must be an integer", it->second.second, 1);
        }
        if (l_conf < 1)
            throw parse_error("confluence_check_length must be positive", it->second.second, 1);
    }

    RewritingSystem rws = [&]() -> RewritingSystem {
        try {
            return RewritingSystem(gens, std::move(rules));
        } catch (const domain_error& e) {
            throw parse_error(e.what(), rules_line, 1);
        }
    }();
    GroupPresentation group{name, gens, std::move(rws), l_conf};

    auto [peri_text, peri_line] = require(peri_kv, "generators");
    PeripheralSpec peri;
    peri.is_sub.assign(gens.size(), false);
    {
        std::istringstream ts(peri_text);
        std::string tok;
        while (ts >> tok) {
            auto s = gens.find(tok);
            if (!s)
                throw parse_error("peripheral generator '" + tok + "' is not a group generator",
                                  peri_line, 1);
            if (!peri.is_sub[*s]) {
                peri.is_sub[*s] = true;
                peri.sub_gens.push_back(*s);
            }
        }
    }
    if (peri.sub_gens.empty()) throw parse_error("empty peripheral generator list", peri_line, 1);
    std::sort(peri.sub_gens.begin(), peri.sub_gens.end());
    for (Sym s : peri.sub_gens)
        if (!peri.is_sub[gens.inverse(s)])
            throw parse_error("peripheral generators are not closed under inversion", peri_line, 1);

    return {std::move(group), std::move(peri)};
}

ParsedPresentation parse_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open presentation file '" + path + "'");
    return parse_presentation(in);
}

}  // namespace relrips
