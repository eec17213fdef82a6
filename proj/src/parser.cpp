#include "am4rre/parser.hpp"

#include <cctype>
#include <set>
#include <utility>

namespace am4rre {
namespace {

enum class TokKind { Word, String, LBrace, RBrace, LBracket, RBracket, Comma, Colon, End, Bad };

struct Token {
    TokKind kind = TokKind::End;
    std::string text;
    SourceSpan span;
};

bool word_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class Lexer {
public:
    Lexer(std::string_view src, std::string file) : src_(src), file_(std::move(file)) {}

    std::vector<Token> run() {
        std::vector<Token> toks;
        while (true) {
            skip_trivia();
            if (pos_ >= src_.size()) {
                toks.push_back(make(TokKind::End, "", line_, col_, line_, col_));
                return toks;
            }
            int sl = line_, sc = col_;
            char c = src_[pos_];
            if (word_start(c)) {
                std::string text;
                while (pos_ < src_.size() && word_char(src_[pos_]))
                    text.push_back(take());
                toks.push_back(make(TokKind::Word, std::move(text), sl, sc, line_, col_ - 1));
            } else if (c == '"') {
                toks.push_back(lex_string(sl, sc));
            } else {
                TokKind k = TokKind::Bad;
                switch (c) {
                case '{': k = TokKind::LBrace; break;
                case '}': k = TokKind::RBrace; break;
                case '[': k = TokKind::LBracket; break;
                case ']': k = TokKind::RBracket; break;
                case ',': k = TokKind::Comma; break;
                case ':': k = TokKind::Colon; break;
                default: break;
                }
                std::string text(1, take());
                toks.push_back(make(k, std::move(text), sl, sc, sl, sc));
            }
        }
    }

private:
    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    take();
            } else {
                break;
            }
        }
    }

    Token lex_string(int sl, int sc) {
        take(); // opening quote
        std::string text;
        while (pos_ < src_.size()) {
            char c = take();
            if (c == '"')
                return make(TokKind::String, std::move(text), sl, sc, line_, col_ - 1);
            if (c == '\\' && pos_ < src_.size()) {
                char e = take();
                switch (e) {
                case 'n': text.push_back('\n'); break;
                case 't': text.push_back('\t'); break;
                case '"': text.push_back('"'); break;
                case '\\': text.push_back('\\'); break;
                default:
                    text.push_back('\\');
                    text.push_back(e);
                    break;
                }
            } else {
                text.push_back(c);
            }
        }
        // unterminated
        Token t = make(TokKind::Bad, std::move(text), sl, sc, line_, col_ - 1);
        t.text = "\"";
        return t;
    }

    Token make(TokKind k, std::string text, int sl, int sc, int el, int ec) {
        Token t;
        t.kind = k;
        t.text = std::move(text);
        t.span = SourceSpan{file_, sl, sc, el, ec < sc && el == sl ? sc : ec};
        return t;
    }

    std::string_view src_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

const std::set<std::string_view> kTopKeywords = {
    "act",     "jurisdiction", "field",        "regulator", "subject",
    "demand",  "scope",        "stakeholder",  "domain_model", "intent",
    "requirement", "system",   "rel",          "accept",
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::string source_name)
        : toks_(std::move(toks)) {
        result_.model.source_name = std::move(source_name);
    }

    ParseResult run() {
        while (!at_end())
            parse_decl();
        result_.partial = has_errors(result_.diagnostics);
        return std::move(result_);
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }

    const Token& advance() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size())
            ++pos_;
        return t;
    }

    bool at_end() const { return peek().kind == TokKind::End; }

    void error(const std::string& code, const std::string& message, const SourceSpan& span,
               std::vector<SourceSpan> related = {}) {
        result_.diagnostics.push_back(
            {Severity::Error, code, message, span, std::move(related), std::nullopt});
    }

    // Skip to the next top-level keyword so one mistake does not mask the
    // rest of the file.
    void sync() {
        while (!at_end()) {
            const Token& t = peek();
            if (t.kind == TokKind::Word && kTopKeywords.count(t.text))
                return;
            advance();
        }
    }

    void parse_decl() {
        const Token& t = peek();
        if (t.kind != TokKind::Word) {
            error("E-PARSE-001", "unexpected token '" + t.text + "', expected a declaration",
                  t.span);
            advance();
            sync();
            return;
        }
        if (t.text == "rel") {
            parse_rel();
            return;
        }
        if (t.text == "accept") {
            parse_accept();
            return;
        }
        if (auto cls = class_from_keyword(t.text)) {
            parse_instance(*cls);
            return;
        }
        error("E-PARSE-001", "unknown keyword '" + t.text + "'", t.span);
        advance();
        sync();
    }

    void parse_instance(ConceptClass cls) {
        Token kw = advance();
        if (peek().kind != TokKind::Word) {
            error("E-PARSE-001",
                  "expected an identifier after '" + kw.text + "', got '" + peek().text + "'",
                  peek().span);
            sync();
            return;
        }
        Token id = advance();

        ConceptInstance inst;
        inst.id = id.text;
        inst.cls = cls;
        inst.span = kw.span;

        if (peek().kind != TokKind::LBrace) {
            error("E-PARSE-001", "expected '{' after '" + id.text + "'", peek().span);
            sync();
            register_instance(std::move(inst), id);
            return;
        }
        advance();
        bool closed = parse_props(cls, inst);
        if (closed)
            inst.span.end_line = toks_[pos_ - 1].span.end_line,
            inst.span.end_col = toks_[pos_ - 1].span.end_col;
        else
            sync();
        register_instance(std::move(inst), id);
    }

    void register_instance(ConceptInstance inst, const Token& id_tok) {
        if (const ConceptInstance* existing = result_.model.find(inst.id)) {
            error("E-PARSE-002", "duplicate identifier '" + inst.id + "'", id_tok.span,
                  {existing->span});
            return; // first declaration wins
        }
        if (inst.cls == ConceptClass::RegulatoryAct) {
            if (const std::string* t = inst.text_property("title"))
                inst.display_name = *t;
        } else if (inst.cls == ConceptClass::Regulator) {
            if (const std::string* n = inst.text_property("name"))
                inst.display_name = *n;
        }
        if (inst.display_name.empty())
            inst.display_name = inst.id;
        result_.model.instances.push_back(std::move(inst));
    }

    // Returns true when the closing brace was consumed.
    bool parse_props(ConceptClass cls, ConceptInstance& inst) {
        while (true) {
            const Token& t = peek();
            if (t.kind == TokKind::RBrace) {
                advance();
                return true;
            }
            if (t.kind == TokKind::End) {
                error("E-PARSE-001",
                      "unexpected end of input inside '" + inst.id + "', expected '}'", t.span);
                return false;
            }
            if (t.kind == TokKind::Word && peek(1).kind == TokKind::Colon) {
                Token key = advance();
                advance(); // ':'
                const PropertySpec* spec = property_spec(cls, key.text);
                if (!spec) {
                    error("E-PARSE-003",
                          "unknown property '" + key.text + "' for " +
                              std::string(class_keyword(cls)),
                          key.span);
                    skip_value();
                    continue;
                }
                auto value = parse_value(*spec, key);
                if (!value)
                    return false; // diagnosed; recover at declaration level
                if (inst.properties.count(key.text)) {
                    error("E-PARSE-001", "duplicate property '" + key.text + "'", key.span);
                } else {
                    inst.properties.emplace(key.text, std::move(*value));
                }
                continue;
            }
            error("E-PARSE-001",
                  "unexpected token '" + t.text + "' in '" + inst.id +
                      "', expected a property or '}'",
                  t.span);
            return false;
        }
    }

    void skip_value() {
        const Token& t = peek();
        if (t.kind == TokKind::String || t.kind == TokKind::Word) {
            advance();
            return;
        }
        if (t.kind == TokKind::LBracket) {
            advance();
            while (!at_end()) {
                const Token& u = peek();
                if (u.kind == TokKind::RBracket) {
                    advance();
                    return;
                }
                if (u.kind == TokKind::Word && kTopKeywords.count(u.text))
                    return;
                advance();
            }
        }
    }

    std::optional<PropertyValue> parse_value(const PropertySpec& spec, const Token& key) {
        const Token& t = peek();
        switch (spec.type) {
        case ValueType::Text:
            if (t.kind != TokKind::String) {
                error("E-PARSE-001",
                      "expected a string value for property '" + key.text + "'", t.span);
                return std::nullopt;
            }
            return PropertyValue{advance().text};
        case ValueType::Bool: {
            if (t.kind == TokKind::Word && (t.text == "true" || t.text == "false"))
                return PropertyValue{advance().text == "true"};
            error("E-PARSE-001",
                  "invalid value '" + t.text + "' for property '" + key.text +
                      "' (expected true or false)",
                  t.span);
            return std::nullopt;
        }
        case ValueType::Ref:
            if (t.kind != TokKind::Word) {
                error("E-PARSE-001",
                      "expected an identifier value for property '" + key.text + "'", t.span);
                return std::nullopt;
            }
            return PropertyValue{InstanceRef{advance().text}};
        case ValueType::ActKind: {
            if (t.kind == TokKind::Word)
                if (auto k = act_kind_from_keyword(t.text)) {
                    advance();
                    return PropertyValue{*k};
                }
            error("E-PARSE-001",
                  "invalid value '" + t.text + "' for property '" + key.text +
                      "' (expected law, regulation, directive, decision, guideline, or "
                      "recommendation)",
                  t.span);
            return std::nullopt;
        }
        case ValueType::Person:
        case ValueType::PersonStrict: {
            if (t.kind == TokKind::Word)
                if (auto p = person_from_keyword(t.text)) {
                    if (spec.type == ValueType::PersonStrict && *p == PersonType::Any) {
                        error("E-PARSE-001",
                              "invalid value 'any' for property '" + key.text +
                                  "' (expected natural or legal)",
                              t.span);
                        return std::nullopt;
                    }
                    advance();
                    return PropertyValue{*p};
                }
            error("E-PARSE-001",
                  "invalid value '" + t.text + "' for property '" + key.text + "'", t.span);
            return std::nullopt;
        }
        case ValueType::DelegatoryRole: {
            if (t.kind == TokKind::Word)
                if (auto r = delegatory_role_from_keyword(t.text)) {
                    advance();
                    return PropertyValue{*r};
                }
            error("E-PARSE-001",
                  "invalid value '" + t.text + "' for property '" + key.text +
                      "' (expected delegator, delegatee, obligee, or none)",
                  t.span);
            return std::nullopt;
        }
        case ValueType::RequirementKind: {
            if (t.kind == TokKind::Word)
                if (auto k = requirement_kind_from_keyword(t.text)) {
                    advance();
                    return PropertyValue{*k};
                }
            error("E-PARSE-001",
                  "invalid value '" + t.text + "' for property '" + key.text +
                      "' (expected functional or nonfunctional)",
                  t.span);
            return std::nullopt;
        }
        case ValueType::Tags:
            return parse_tag_list(spec, key);
        }
        return std::nullopt;
    }

    std::optional<PropertyValue> parse_tag_list(const PropertySpec& spec, const Token& key) {
        if (peek().kind != TokKind::LBracket) {
            error("E-PARSE-001",
                  "expected a tag list for property '" + key.text + "'", peek().span);
            return std::nullopt;
        }
        advance();
        TagSet tags;
        if (peek().kind == TokKind::RBracket) { // empty set is legal syntax
            advance();
            return PropertyValue{std::move(tags)};
        }
        while (true) {
            if (!parse_tag(spec, tags)) {
                // skip the rest of the list
                while (!at_end()) {
                    const Token& u = peek();
                    if (u.kind == TokKind::RBracket) {
                        advance();
                        break;
                    }
                    if (u.kind == TokKind::Word && kTopKeywords.count(u.text))
                        break;
                    advance();
                }
                return PropertyValue{std::move(tags)};
            }
            if (peek().kind == TokKind::Comma) {
                advance();
                continue;
            }
            if (peek().kind == TokKind::RBracket) {
                advance();
                return PropertyValue{std::move(tags)};
            }
            error("E-PARSE-004", "expected ',' or ']' in tag list", peek().span);
            return PropertyValue{std::move(tags)};
        }
    }

    bool parse_tag(const PropertySpec& spec, TagSet& tags) {
        const Token& ns = peek();
        if (ns.kind != TokKind::Word) {
            error("E-PARSE-004", "invalid tag, expected '<namespace>:<name>'", ns.span);
            return false;
        }
        if (peek(1).kind != TokKind::Colon) {
            error("E-PARSE-004", "invalid tag '" + ns.text + "', expected '<namespace>:<name>'",
                  ns.span);
            return false;
        }
        const Token& colon = peek(1);
        const Token& name = peek(2);
        if (name.kind != TokKind::Word) {
            error("E-PARSE-004", "invalid tag '" + ns.text + ":', missing name", colon.span);
            return false;
        }
        bool adjacent = ns.span.end_line == colon.span.start_line &&
                        ns.span.end_col + 1 == colon.span.start_col &&
                        colon.span.start_line == name.span.start_line &&
                        colon.span.start_col + 1 == name.span.start_col;
        if (!adjacent) {
            error("E-PARSE-004",
                  "invalid tag, '" + ns.text + ":" + name.text + "' must be written without spaces",
                  ns.span);
            return false;
        }
        if (ns.text != "loc" && ns.text != "intent" && ns.text != "data") {
            error("E-PARSE-004", "unknown tag namespace '" + ns.text + "'", ns.span);
            return false;
        }
        if (ns.text != spec.tag_namespace) {
            error("E-PARSE-004",
                  "property '" + std::string(spec.name) + "' takes " +
                      std::string(spec.tag_namespace) + ": tags, got '" + ns.text + ":" +
                      name.text + "'",
                  ns.span);
            return false;
        }
        advance();
        advance();
        Token name_tok = advance();
        tags.insert(ns.text + ":" + name_tok.text);
        return true;
    }

    void parse_rel() {
        Token kw = advance();
        if (peek().kind != TokKind::Word) {
            error("E-PARSE-001", "expected a source identifier after 'rel'", peek().span);
            sync();
            return;
        }
        Token source = advance();
        const Token& kind_tok = peek();
        auto kind = kind_tok.kind == TokKind::Word
                        ? relationship_from_keyword(kind_tok.text)
                        : std::nullopt;
        if (!kind) {
            error("E-PARSE-001", "unknown relationship '" + kind_tok.text + "'", kind_tok.span);
            sync();
            return;
        }
        advance();
        if (peek().kind != TokKind::Word) {
            error("E-PARSE-001", "expected a target identifier", peek().span);
            sync();
            return;
        }
        Token target = advance();

        Relationship rel;
        rel.id = "rel:" + std::to_string(++rel_counter_);
        rel.kind = *kind;
        rel.source_id = source.text;
        rel.target_id = target.text;
        rel.span = kw.span;
        rel.span.end_line = target.span.end_line;
        rel.span.end_col = target.span.end_col;
        result_.model.relationships.push_back(std::move(rel));
    }

    void parse_accept() {
        Token kw = advance();
        const Token& m_tok = peek();
        auto milestone = m_tok.kind == TokKind::Word ? milestone_from_name(m_tok.text)
                                                     : std::nullopt;
        if (!milestone) {
            error("E-PARSE-001",
                  "expected a milestone (M1..M4) after 'accept', got '" + m_tok.text + "'",
                  m_tok.span);
            sync();
            return;
        }
        advance();
        if (peek().kind != TokKind::Word || peek().text != "by") {
            error("E-PARSE-001", "expected 'by' in accept declaration", peek().span);
            sync();
            return;
        }
        advance();
        const Token& r_tok = peek();
        auto role = r_tok.kind == TokKind::Word ? role_from_keyword(r_tok.text) : std::nullopt;
        if (!role) {
            error("E-PARSE-001",
                  "unknown role '" + r_tok.text +
                      "' (expected requirements_engineer, legal_expert, or domain_expert)",
                  r_tok.span);
            sync();
            return;
        }
        Token role_tok = advance();

        for (const SignOff& s : result_.model.signoffs) {
            if (s.milestone == *milestone && s.role == *role) {
                error("E-PARSE-002",
                      "duplicate sign-off for " + std::string(milestone_name(*milestone)) +
                          " by " + std::string(role_keyword(*role)),
                      kw.span, {s.span});
                return; // first sign-off wins
            }
        }
        SignOff s;
        s.milestone = *milestone;
        s.role = *role;
        s.sequence = ++signoff_seq_;
        s.span = kw.span;
        s.span.end_line = role_tok.span.end_line;
        s.span.end_col = role_tok.span.end_col;
        result_.model.signoffs.push_back(s);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ParseResult result_;
    int rel_counter_ = 0;
    int signoff_seq_ = 0;
};

} // namespace

ParseResult parse(std::string_view text, std::string source_name) {
    Lexer lexer(text, source_name);
    Parser parser(lexer.run(), std::move(source_name));
    return parser.run();
}

} // namespace am4rre
