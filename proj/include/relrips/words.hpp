#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relrips/errors.hpp"

namespace relrips {

// A generator symbol, stored as an index into the owning GeneratorSet.
using Sym = std::uint8_t;

// A word over a generator set; the empty word is the group identity.
using Word = std::vector<Sym>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        // FNV-1a
        std::size_t h = 1469598103934665603ull;
        for (Sym s : w) {
            h ^= s;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Shortlex order: shorter words first, ties broken by the symbol order
// declared in the generator set (Sym values are declaration-ordered).
inline bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// Ordered set of single-character generator symbols together with the
/// inverse involution. Symbols are declared in pairs (g, g^-1); a symbol
/// paired with itself is an order-two generator.
class GeneratorSet {
public:
    static GeneratorSet from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs);

    std::size_t size() const { return names_.size(); }
    Sym inverse(Sym s) const { return inverse_[s]; }
    const std::string& name(Sym s) const { return names_[s]; }
    std::optional<Sym> find(std::string_view token) const;

    // Words are written as runs of symbol characters; whitespace is skipped.
    Word parse_word(std::string_view text) const;
    std::string render(const Word& w) const;

    // Reverse the word and invert each letter.
    Word inverse_word(const Word& w) const;

    bool operator==(const GeneratorSet& other) const = default;

private:
    std::vector<std::string> names_;
    std::vector<Sym> inverse_;
};

}  // namespace relrips
