#include "relrips/words.hpp"

#include <algorithm>

namespace relrips {

GeneratorSet GeneratorSet::from_pairs(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    GeneratorSet gs;
    for (const auto& [g, ginv] : pairs) {
        if (g.size() != 1 || ginv.size() != 1)
            throw domain_error("generator symbols must be single characters: '" + g + "' / '" +
                               ginv + "'");
        if (g == ginv) {
            // order-two generator, its own inverse
            if (gs.find(g)) throw domain_error("duplicate generator symbol '" + g + "'");
            gs.names_.push_back(g);
            gs.inverse_.push_back(static_cast<Sym>(gs.names_.size() - 1));
        } else {
            if (gs.find(g)) throw domain_error("duplicate generator symbol '" + g + "'");
            if (gs.find(ginv)) throw domain_error("duplicate generator symbol '" + ginv + "'");
            gs.names_.push_back(g);
            gs.names_.push_back(ginv);
            Sym a = static_cast<Sym>(gs.names_.size() - 2);
            Sym b = static_cast<Sym>(gs.names_.size() - 1);
            gs.inverse_.push_back(b);
            gs.inverse_.push_back(a);
        }
        if (gs.names_.size() > 250) throw domain_error("too many generator symbols");
    }
    if (gs.names_.empty()) throw domain_error("empty generator set");
    return gs;
}

std::optional<Sym> GeneratorSet::find(std::string_view token) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == token) return static_cast<Sym>(i);
    return std::nullopt;
}

Word GeneratorSet::parse_word(std::string_view text) const {
    Word w;
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        auto s = find(std::string_view(&c, 1));
        if (!s) throw domain_error(std::string("unknown generator symbol '") + c + "'");
        w.push_back(*s);
    }
    return w;
}

std::string GeneratorSet::render(const Word& w) const {
    std::string out;
    out.reserve(w.size());
    for (Sym s : w) out += names_[s];
    return out;
}

Word GeneratorSet::inverse_word(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

}  // namespace relrips
