#include "forge/rewrite.hpp"

#include "forge/errors.hpp"

namespace forge {

namespace {

void require_pattern(const Word& x) {
    if (x.empty()) throw config_error("rewrite: pattern must be non-empty");
}

}  // namespace

std::optional<std::size_t> find_leftmost(const Word& z, const Word& x) {
    require_pattern(x);
    const auto pos = z.find(x);
    if (pos == Word::npos) return std::nullopt;
    return pos;
}

RewriteOutcome apply_rule_once(const RewriteRule& rule, const Word& z) {
    const auto pos = find_leftmost(z, rule.lhs);
    if (!pos) return {RewriteOutcome::Kind::Unchanged, z, std::nullopt};
    Word out;
    out.reserve(z.size() - rule.lhs.size() + rule.rhs.size());
    out.append(z, 0, *pos);
    out.append(rule.rhs);
    out.append(z, *pos + rule.lhs.size(), Word::npos);
    return {RewriteOutcome::Kind::Replaced, std::move(out), pos};
}

std::size_t count_occurrences(const Word& z, const Word& x) {
    require_pattern(x);
    std::size_t count = 0;
    std::size_t from = 0;
    while (from + x.size() <= z.size()) {
        const auto pos = z.find(x, from);
        if (pos == Word::npos) break;
        ++count;
        from = pos + x.size();
    }
    return count;
}

}  // namespace forge
