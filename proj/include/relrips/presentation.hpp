#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relrips/words.hpp"

namespace relrips {

struct RewriteRule {
    Word lhs;
    Word rhs;  // strictly shortlex-smaller than lhs
};

/// Length-ordered string rewriting system. Every rule is strictly
/// shortlex-decreasing, so rewriting always terminates; when the system is
/// confluent the fixed point is the shortlex-least word in the congruence
/// class, which is what normal_form returns.
class RewritingSystem {
public:
    RewritingSystem(const GeneratorSet& gens, std::vector<RewriteRule> rules);

    const std::vector<RewriteRule>& rules() const { return rules_; }
    std::size_t max_lhs_length() const { return max_lhs_; }

    // Deterministic leftmost-position, first-rule reduction strategy.
    Word normal_form(Word w) const;

    // Every single-step rewrite of w, position-major then rule-major.
    std::vector<Word> one_step_rewrites(const Word& w) const;

    bool is_irreducible(const Word& w) const;

private:
    std::vector<RewriteRule> rules_;
    std::size_t max_lhs_ = 0;
};

struct GroupPresentation {
    std::string name;
    GeneratorSet gens;
    RewritingSystem rws;
    int confluence_check_length = 8;

    Word normal_form(const Word& w) const { return rws.normal_form(w); }
    Word normal_form_of(std::string_view text) const {
        return rws.normal_form(gens.parse_word(text));
    }
    std::string render(const Word& w) const { return gens.render(w); }
};

/// Peripheral subgroup given by an inverse-closed subset of the generators.
/// Valid only for normal-form-closed subgroups: an element lies in K exactly
/// when its normal form uses only K-letters (sanity-checked up to the
/// confluence check length).
struct PeripheralSpec {
    std::vector<Sym> sub_gens;   // sorted
    std::vector<bool> is_sub;    // indexed by Sym

    bool contains(Sym s) const { return is_sub[s]; }
    bool is_sub_word(const Word& w) const {
        for (Sym s : w)
            if (!is_sub[s]) return false;
        return true;
    }
};

struct ConfluenceReport {
    bool passed = true;
    int checked_length = 0;
    std::size_t words_checked = 0;
    // On failure: a word with two distinct normal forms.
    Word witness;
    Word normal_form_a;
    Word normal_form_b;
};

/// Exhaustively checks that every word of length <= L_conf has a unique
/// normal form. Complete for this length range: the shortlex-least
/// non-confluent word has reducts whose normal forms are already unique,
/// so comparing strategy normal forms of all one-step reducts detects it.
ConfluenceReport bounded_confluence_check(const GroupPresentation& p, int L_conf);

struct PeripheralClosureReport {
    bool closed = true;
    std::size_t words_checked = 0;
    Word witness;  // K-word whose normal form leaves the K-letters
};

/// Checks that normal forms of K-words of length <= L stay inside the
/// K-letters, which is what makes the letter test below exact.
PeripheralClosureReport check_normal_form_closed(const GroupPresentation& p,
                                                 const PeripheralSpec& k, int L);

bool is_peripheral_member(const Word& w, const GroupPresentation& p, const PeripheralSpec& k);

/// d_K between w1 and w2, or nullopt when they are in different K-cosets.
/// Equals the length of normal_form(w1^-1 w2): shortlex-least words are
/// shortest, and normal-form closure keeps K-elements' forms inside K.
std::optional<int> peripheral_distance(const Word& w1, const Word& w2,
                                       const GroupPresentation& p, const PeripheralSpec& k);

/// K presented as a group of its own: the sub-generators plus every rule
/// whose two sides are K-words (the only rules that can ever fire on one).
GroupPresentation restrict_to_peripheral(const GroupPresentation& p, const PeripheralSpec& k,
                                         const std::string& name);

struct ParsedPresentation {
    GroupPresentation group;
    PeripheralSpec peripheral;
};

ParsedPresentation parse_presentation(std::istream& in);
ParsedPresentation parse_presentation_file(const std::string& path);

}  // namespace relrips
