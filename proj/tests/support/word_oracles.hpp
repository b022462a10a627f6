#pragma once

// Independent ground-truth semantics for the fixture groups, used as oracles
// against the rewriting-system implementation. Nothing here touches the
// RewritingSystem reduction path: free groups reduce by cancellation on a
// stack, abelian fixtures go through exponent vectors.

#include <string>
#include <vector>

namespace relrips::testing {

// Free reduction over letters {a, A, b, B}; the reduced word is the unique
// shortest (hence shortlex-least) representative.
inline std::string free_reduce(const std::string& w) {
    auto inverse = [](char c) -> char {
        switch (c) {
            case 'a': return 'A';
            case 'A': return 'a';
            case 'b': return 'B';
            case 'B': return 'b';
        }
        return '\0';
    };
    std::string out;
    for (char c : w) {
        if (!out.empty() && out.back() == inverse(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

// Z^2 canonical form from the exponent vector: a-letters then b-letters.
inline std::string z2_canonical(const std::string& w) {
    long x = 0, y = 0;
    for (char c : w) {
        if (c == 'a') ++x;
        if (c == 'A') --x;
        if (c == 'b') ++y;
        if (c == 'B') --y;
    }
    std::string out;
    out.append(static_cast<std::size_t>(x > 0 ? x : 0), 'a');
    out.append(static_cast<std::size_t>(x < 0 ? -x : 0), 'A');
    out.append(static_cast<std::size_t>(y > 0 ? y : 0), 'b');
    out.append(static_cast<std::size_t>(y < 0 ? -y : 0), 'B');
    return out;
}

// C6 canonical form from the exponent mod 6; "aaa" beats "AAA" in shortlex.
inline std::string c6_canonical(const std::string& w) {
    int x = 0;
    for (char c : w) {
        if (c == 'a') ++x;
        if (c == 'A') --x;
    }
    x = ((x % 6) + 6) % 6;
    switch (x) {
        case 0: return "";
        case 1: return "a";
        case 2: return "aa";
        case 3: return "aaa";
        case 4: return "AA";
        default: return "A";
    }
}

// All words of length 1..max_len over the alphabet, in shortlex order.
inline std::vector<std::string> all_words(const std::string& alphabet, int max_len) {
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::string> next;
        for (const std::string& w : layer)
            for (char c : alphabet) next.push_back(w + c);
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace relrips::testing
