#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forge/rewrite.hpp"
#include "forge/word.hpp"

namespace forge::markov {

// Symbols inside the interpreter are dense ids into an Alphabet: base
// symbols first (the letters processed words may use), then work symbols
// (rule-only helpers such as the customary greek letters). Engine words are
// byte strings of those ids; decode_word maps them back to display text.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::vector<char32_t> base, std::vector<char32_t> work);

    std::size_t size() const { return glyphs_.size(); }
    std::size_t base_count() const { return base_count_; }
    bool is_base(unsigned char id) const { return id < base_count_; }
    char32_t glyph(unsigned char id) const;
    std::optional<unsigned char> id_of(char32_t glyph) const;

private:
    std::vector<char32_t> glyphs_;
    std::size_t base_count_ = 0;
};

// One position in a rule template: either a concrete symbol id or a
// reference into the program's variable table.
struct SchemaToken {
    bool is_var = false;
    unsigned char index = 0;
};

struct Variable {
    char32_t glyph = 0;
    std::vector<unsigned char> domain;  // base symbol ids, declared order
};

struct RuleSchema {
    std::vector<SchemaToken> lhs;
    std::vector<SchemaToken> rhs;
    bool is_stop = false;
    int line = 0;  // source line, for diagnostics
};

struct MarkovProgram {
    Alphabet alphabet;
    std::vector<Variable> vars;
    std::vector<RuleSchema> rules;
};

// A concrete rule produced by schema expansion. schema_ordinal is 1-based
// and names the source schema, which is what traces report.
struct ExpandedRule {
    RewriteRule rule;
    int schema_ordinal = 0;
};

struct StepResult {
    enum class Kind { Applied, Stopped, Blocked };

    Kind kind = Kind::Blocked;
    int schema_ordinal = 0;
    std::size_t position = 0;
    Word next;  // empty when Blocked
};

struct TraceStep {
    int schema_ordinal = 0;
    std::size_t position = 0;
    Word after;
};

struct RunOutcome {
    enum class Kind { Terminated, Blocked, StepLimitExceeded };

    Kind kind = Kind::Blocked;
    Word final;
    std::vector<TraceStep> trace;
};

inline constexpr std::size_t kDefaultStepLimit = 10'000;

/// Parses program text. One directive or rule per line, '#' starts a comment:
///   @base a b          letters processed words may use
///   @work α β          rule-only symbols
///   @var x in a b      schema variable ranging over base symbols
///   LHS -> RHS         rule; '->.' marks a stop rule, '_' an empty side
/// Rule order in the file is execution priority. Errors name the line.
MarkovProgram parse_program(const std::string& text);

/// Expands every schema into concrete rules, one per variable assignment,
/// assignments enumerated lexicographically. Expanded rules keep the
/// relative order of their parent schemas.
std::vector<ExpandedRule> expand_schemas(const MarkovProgram& program);

/// Applies the first rule whose lhs occurs in w, at the leftmost position.
/// An empty lhs matches at position 0.
StepResult step(std::span<const ExpandedRule> rules, const Word& w);

/// Iterates step until a stop rule fires (Terminated), no rule applies
/// (Blocked), or step_limit steps ran. The input may use base symbols only.
RunOutcome run(const MarkovProgram& program, const Word& input,
               std::size_t step_limit = kDefaultStepLimit);

/// UTF-8 text -> engine word; every code point must be a base symbol.
Word encode_input(const MarkovProgram& program, const std::string& utf8);

/// Engine word -> UTF-8 display text.
std::string decode_word(const Alphabet& alphabet, const Word& w);

}  // namespace forge::markov
