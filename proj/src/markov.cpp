#include "forge/markov.hpp"

#include <algorithm>
#include <sstream>

#include "forge/errors.hpp"

namespace forge::markov {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "program: line " << line << ": " << what;
    throw config_error(os.str());
}

// Minimal UTF-8 decoding; program files are tiny.
std::vector<char32_t> decode_utf8(std::string_view s, int line) {
    std::vector<char32_t> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char b0 = static_cast<unsigned char>(s[i]);
        int extra = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xe0) == 0xc0) {
            cp = b0 & 0x1f;
            extra = 1;
        } else if ((b0 & 0xf0) == 0xe0) {
            cp = b0 & 0x0f;
            extra = 2;
        } else if ((b0 & 0xf8) == 0xf0) {
            cp = b0 & 0x07;
            extra = 3;
        } else {
            fail(line, "invalid utf-8 byte");
        }
        if (i + extra >= s.size() + (extra == 0 ? 1 : 0) && i + static_cast<std::size_t>(extra) >= s.size() && extra > 0)
            fail(line, "truncated utf-8 sequence");
        for (int k = 1; k <= extra; ++k) {
            const unsigned char bk = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
            if ((bk & 0xc0) != 0x80) fail(line, "invalid utf-8 continuation byte");
            cp = (cp << 6) | (bk & 0x3f);
        }
        out.push_back(cp);
        i += static_cast<std::size_t>(1 + extra);
    }
    return out;
}

std::string encode_utf8(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
    return out;
}

bool is_space_cp(char32_t cp) { return cp == U' ' || cp == U'\t' || cp == U'\r'; }

// Glyphs that would collide with the concrete syntax cannot be declared.
bool is_reserved_glyph(char32_t cp) {
    return cp == U'-' || cp == U'>' || cp == U'.' || cp == U'_' || cp == U'#' || cp == U'@' ||
           is_space_cp(cp);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct ParseState {
    std::vector<char32_t> base;
    std::vector<char32_t> work;
    std::vector<Variable> var_decls;       // domains as glyphs resolved later
    std::vector<char32_t> var_glyphs;
    MarkovProgram program;

    bool declared(char32_t g) const {
        return std::find(base.begin(), base.end(), g) != base.end() ||
               std::find(work.begin(), work.end(), g) != work.end() ||
               std::find(var_glyphs.begin(), var_glyphs.end(), g) != var_glyphs.end();
    }
};

char32_t single_cp(const std::string& tok, int line) {
    const auto cps = decode_utf8(tok, line);
    if (cps.size() != 1) fail(line, "expected a single-symbol token, got \"" + tok + "\"");
    return cps[0];
}

std::vector<SchemaToken> parse_side(const std::string& text, const ParseState& st,
                                    const Alphabet& alphabet, int line) {
    const auto cps = decode_utf8(text, line);
    std::vector<char32_t> glyphs;
    for (char32_t cp : cps)
        if (!is_space_cp(cp)) glyphs.push_back(cp);
    if (glyphs.size() == 1 && glyphs[0] == U'_') return {};  // explicit empty side
    if (glyphs.empty()) fail(line, "empty rule side must be written '_'");
    std::vector<SchemaToken> out;
    for (char32_t cp : glyphs) {
        if (cp == U'_') fail(line, "'_' may only stand alone as an empty side");
        if (const auto id = alphabet.id_of(cp)) {
            out.push_back({false, *id});
            continue;
        }
        const auto it = std::find(st.var_glyphs.begin(), st.var_glyphs.end(), cp);
        if (it == st.var_glyphs.end())
            fail(line, "unknown symbol or undeclared variable \"" + encode_utf8(cp) + "\"");
        out.push_back({true, static_cast<unsigned char>(it - st.var_glyphs.begin())});
    }
    return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<char32_t> base, std::vector<char32_t> work) {
    glyphs_ = std::move(base);
    base_count_ = glyphs_.size();
    glyphs_.insert(glyphs_.end(), work.begin(), work.end());
    if (glyphs_.size() > 255) throw config_error("alphabet: too many symbols (max 255)");
}

char32_t Alphabet::glyph(unsigned char id) const {
    if (id >= glyphs_.size()) throw invariant_error("alphabet: symbol id out of range");
    return glyphs_[id];
}

std::optional<unsigned char> Alphabet::id_of(char32_t glyph) const {
    for (std::size_t i = 0; i < glyphs_.size(); ++i)
        if (glyphs_[i] == glyph) return static_cast<unsigned char>(i);
    return std::nullopt;
}

MarkovProgram parse_program(const std::string& text) {
    ParseState st;
    struct PendingRule {
        std::string lhs, rhs;
        bool is_stop;
        int line;
    };
    std::vector<PendingRule> pending;

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const auto toks = split_ws(raw);
        if (toks.empty()) continue;

        if (toks[0] == "@base" || toks[0] == "@work") {
            if (toks.size() < 2) fail(line, toks[0] + " needs at least one symbol");
            const bool base = toks[0] == "@base";
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const char32_t g = single_cp(toks[i], line);
                if (is_reserved_glyph(g)) fail(line, "symbol \"" + toks[i] + "\" is reserved syntax");
                if (st.declared(g)) fail(line, "duplicate symbol declaration \"" + toks[i] + "\"");
                (base ? st.base : st.work).push_back(g);
            }
            continue;
        }
        if (toks[0] == "@var") {
            if (toks.size() < 4 || toks[2] != "in") fail(line, "@var syntax: @var NAME in SYMBOL...");
            const char32_t name = single_cp(toks[1], line);
            if (is_reserved_glyph(name)) fail(line, "variable \"" + toks[1] + "\" is reserved syntax");
            if (st.declared(name)) fail(line, "duplicate variable declaration \"" + toks[1] + "\"");
            Variable v;
            v.glyph = name;
            for (std::size_t i = 3; i < toks.size(); ++i) {
                const char32_t g = single_cp(toks[i], line);
                const auto it = std::find(st.base.begin(), st.base.end(), g);
                if (it == st.base.end())
                    fail(line, "variable domain symbol \"" + toks[i] + "\" is not a base symbol");
                v.domain.push_back(static_cast<unsigned char>(it - st.base.begin()));
            }
            if (v.domain.empty()) fail(line, "variable domain must be non-empty");
            st.var_glyphs.push_back(name);
            st.var_decls.push_back(std::move(v));
            continue;
        }
        if (toks[0].front() == '@') fail(line, "unknown directive \"" + toks[0] + "\"");

        // rule line: LHS -> RHS  or  LHS ->. RHS
        const auto arrow = raw.find("->");
        if (arrow == std::string::npos) fail(line, "expected a rule or a directive");
        bool is_stop = false;
        std::size_t rhs_from = arrow + 2;
        if (rhs_from < raw.size() && raw[rhs_from] == '.') {
            is_stop = true;
            ++rhs_from;
        }
        pending.push_back({raw.substr(0, arrow), raw.substr(rhs_from), is_stop, line});
    }

    if (st.base.empty()) throw config_error("program: no @base symbols declared");
    if (pending.empty()) throw config_error("program: zero rules");

    st.program.alphabet = Alphabet(st.base, st.work);
    st.program.vars = std::move(st.var_decls);
    for (const auto& p : pending) {
        RuleSchema schema;
        schema.lhs = parse_side(p.lhs, st, st.program.alphabet, p.line);
        schema.rhs = parse_side(p.rhs, st, st.program.alphabet, p.line);
        schema.is_stop = p.is_stop;
        schema.line = p.line;
        st.program.rules.push_back(std::move(schema));
    }
    return st.program;
}

std::vector<ExpandedRule> expand_schemas(const MarkovProgram& program) {
    if (program.rules.empty()) throw config_error("expand: program has no rules");
    std::vector<ExpandedRule> out;
    int ordinal = 0;
    for (const auto& schema : program.rules) {
        ++ordinal;

        // variables of this schema, in order of first appearance (lhs, then rhs)
        std::vector<unsigned char> vars;
        auto collect = [&](const std::vector<SchemaToken>& side) {
            for (const auto& t : side)
                if (t.is_var && std::find(vars.begin(), vars.end(), t.index) == vars.end())
                    vars.push_back(t.index);
        };
        collect(schema.lhs);
        collect(schema.rhs);

        for (unsigned char v : vars)
            if (program.vars.at(v).domain.empty())
                throw config_error("expand: variable with empty domain");

        std::vector<std::size_t> counter(vars.size(), 0);
        for (;;) {
            auto realize = [&](const std::vector<SchemaToken>& side) {
                Word w;
                w.reserve(side.size());
                for (const auto& t : side) {
                    if (!t.is_var) {
                        w.push_back(static_cast<char>(t.index));
                    } else {
                        const auto slot =
                            std::find(vars.begin(), vars.end(), t.index) - vars.begin();
                        w.push_back(static_cast<char>(
                            program.vars[t.index].domain[counter[static_cast<std::size_t>(slot)]]));
                    }
                }
                return w;
            };
            out.push_back({{realize(schema.lhs), realize(schema.rhs), schema.is_stop}, ordinal});

            // odometer: last variable fastest = lexicographic assignment order
            std::size_t i = counter.size();
            while (i > 0) {
                --i;
                if (++counter[i] < program.vars[vars[i]].domain.size()) break;
                counter[i] = 0;
                if (i == 0) counter.clear();
            }
            if (vars.empty() || counter.empty()) break;
            if (i == 0 && counter[0] == 0) {
                bool all_zero = true;
                for (std::size_t c : counter) all_zero &= (c == 0);
                if (all_zero) break;
            }
        }
    }
    return out;
}

StepResult step(std::span<const ExpandedRule> rules, const Word& w) {
    if (rules.empty()) throw config_error("step: empty rule list");
    for (const auto& er : rules) {
        std::optional<std::size_t> pos;
        if (er.rule.lhs.empty())
            pos = 0;  // empty lhs matches in front of the word
        else
            pos = find_leftmost(w, er.rule.lhs);
        if (!pos) continue;
        Word next;
        next.reserve(w.size() - er.rule.lhs.size() + er.rule.rhs.size());
        next.append(w, 0, *pos);
        next.append(er.rule.rhs);
        next.append(w, *pos + er.rule.lhs.size(), Word::npos);
        StepResult r;
        r.kind = er.rule.is_stop ? StepResult::Kind::Stopped : StepResult::Kind::Applied;
        r.schema_ordinal = er.schema_ordinal;
        r.position = *pos;
        r.next = std::move(next);
        return r;
    }
    return {};
}

RunOutcome run(const MarkovProgram& program, const Word& input, std::size_t step_limit) {
    for (char c : input) {
        const auto id = static_cast<unsigned char>(c);
        if (id >= program.alphabet.size()) throw config_error("run: input has undeclared symbol");
        if (!program.alphabet.is_base(id))
            throw config_error("run: input may use base symbols only");
    }
    const auto rules = expand_schemas(program);

    RunOutcome out;
    Word w = input;
    for (std::size_t n = 0; n < step_limit; ++n) {
        auto s = step(rules, w);
        if (s.kind == StepResult::Kind::Blocked) {
            out.kind = RunOutcome::Kind::Blocked;
            out.final = std::move(w);
            return out;
        }
        w = std::move(s.next);
        out.trace.push_back({s.schema_ordinal, s.position, w});
        if (s.kind == StepResult::Kind::Stopped) {
            out.kind = RunOutcome::Kind::Terminated;
            out.final = std::move(w);
            return out;
        }
    }
    out.kind = RunOutcome::Kind::StepLimitExceeded;
    out.final = std::move(w);
    return out;
}

Word encode_input(const MarkovProgram& program, const std::string& utf8) {
    const auto cps = decode_utf8(utf8, 0);
    Word w;
    w.reserve(cps.size());
    for (char32_t cp : cps) {
        const auto id = program.alphabet.id_of(cp);
        if (!id || !program.alphabet.is_base(*id))
            throw config_error("input: \"" + encode_utf8(cp) + "\" is not a base symbol");
        w.push_back(static_cast<char>(*id));
    }
    return w;
}

std::string decode_word(const Alphabet& alphabet, const Word& w) {
    std::string out;
    for (char c : w) out += encode_utf8(alphabet.glyph(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace forge::markov
