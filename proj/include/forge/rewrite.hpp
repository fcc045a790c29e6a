#pragma once

#include <cstddef>
#include <optional>

#include "forge/word.hpp"

namespace forge {

// A rewrite rule lhs -> rhs. Dataset instructions always have
// is_stop = false; stop rules occur only inside markov programs.
struct RewriteRule {
    Word lhs;
    Word rhs;
    bool is_stop = false;

    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct RewriteOutcome {
    enum class Kind { Replaced, Unchanged };

    Kind kind = Kind::Unchanged;
    Word result;
    std::optional<std::size_t> position;  // match start, present iff Replaced
};

/// Smallest i with z[i .. i+|x|) == x, or nullopt. x must be non-empty.
std::optional<std::size_t> find_leftmost(const Word& z, const Word& x);

/// One-shot replacement of the leftmost occurrence of rule.lhs by rule.rhs;
/// returns the input unchanged when lhs does not occur. lhs must be non-empty.
RewriteOutcome apply_rule_once(const RewriteRule& rule, const Word& z);

/// Greedy non-overlapping left-to-right match count. x must be non-empty.
std::size_t count_occurrences(const Word& z, const Word& x);

}  // namespace forge
