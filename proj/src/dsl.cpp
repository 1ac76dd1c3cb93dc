#include "adic/dsl.hpp"

#include <cctype>

#include "adic/poly_parse.hpp"

namespace adic {

namespace {

const char* kCommandVerbs[] = {"gb",   "tor",      "koszul",          "wpr",
                               "flatcheck", "tower-validate", "system-resolution",
                               "lift", "prop250",  "lemma290",        "limit-flat",
                               "ml-check"};

bool is_command_verb(const std::string& w) {
    for (const char* v : kCommandVerbs)
        if (w == v) return true;
    return false;
}

class ScriptParser {
public:
    explicit ScriptParser(const std::string& text) : s_(text) {}

    SessionScript parse() {
        SessionScript out;
        skip_ws();
        while (pos_ < s_.size()) {
            std::string word = peek_word();
            if (word == "ring") {
                parse_ring(out);
            } else if (word == "ideal") {
                parse_ideal(out);
            } else if (word == "module") {
                parse_module(out);
            } else if (word == "tower") {
                parse_tower(out);
            } else if (word == "morphism") {
                parse_morphism(out);
            } else if (is_command_verb(word)) {
                parse_command(out);
            } else {
                fail("unknown declaration or command '" + word + "'",
                     "ring, ideal, module, tower, morphism or a command verb");
            }
            skip_ws();
        }
        return out;
    }

private:
    SourcePos pos_at(std::size_t off) const {
        SourcePos p;
        for (std::size_t i = 0; i < off && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++p.line;
                p.col = 1;
            } else {
                ++p.col;
            }
        }
        return p;
    }

    [[noreturn]] void fail(const std::string& msg, std::string expected) {
        throw ParseError(pos_at(pos_), msg, std::move(expected));
    }
    [[noreturn]] void fail_at(std::size_t off, const std::string& msg,
                              std::string expected) {
        throw ParseError(pos_at(off), msg, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
                ++pos_;
            } else if (s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string peek_word() {
        skip_ws();
        std::size_t p = pos_;
        std::string w;
        while (p < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_' ||
                s_[p] == '-')) {
            w += s_[p++];
        }
        return w;
    }

    std::string word() {
        skip_ws();
        std::string w = peek_word();
        if (w.empty()) fail("expected a word", "identifier");
        pos_ += w.size();
        return w;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= s_.size() ||
            !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            fail("expected an identifier", "identifier");
        std::string w;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            w += s_[pos_++];
        (void)start;
        return w;
    }

    long integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer", "integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'", what);
        ++pos_;
    }

    void expect_word(const std::string& w) {
        std::size_t save = pos_;
        std::string got = word();
        if (got != w) {
            pos_ = save;
            fail("expected '" + w + "', found '" + got + "'", w);
        }
    }

    bool try_char(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // polynomial entry: raw span up to , > ] ; at parenthesis depth zero
    Polynomial polynomial_entry() {
        skip_ws();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (depth == 0 && (c == ',' || c == '>' || c == ']' || c == ';')) break;
            ++pos_;
        }
        std::string span = s_.substr(start, pos_ - start);
        if (span.find_first_not_of(" \t\r\n") == std::string::npos)
            fail_at(start, "expected a polynomial", "polynomial");
        if (!ring_)
            fail_at(start, "polynomial before any ring declaration", "ring declaration");
        try {
            return parse_polynomial(ring_, span);
        } catch (const PolyParseError& e) {
            fail_at(start + e.offset, e.what(), "polynomial");
        }
    }

    std::vector<Polynomial> poly_list(char closer) {
        std::vector<Polynomial> out;
        skip_ws();
        if (try_char(closer)) return out;
        while (true) {
            out.push_back(polynomial_entry());
            if (try_char(closer)) break;
            expect(',', "',' or list close");
        }
        return out;
    }

    // [ [p, q], [r, s] ] -- a list of coordinate vectors
    std::vector<FreeElement> matrix(std::size_t expected_rank) {
        expect('[', "matrix");
        std::vector<FreeElement> cols;
        skip_ws();
        if (try_char(']')) return cols;
        while (true) {
            std::size_t at = pos_;
            expect('[', "matrix row");
            std::vector<Polynomial> entries = poly_list(']');
            if (entries.size() != expected_rank)
                fail_at(at,
                        "expected " + std::to_string(expected_rank) +
                            " entries, found " + std::to_string(entries.size()),
                        "matrix row of matching arity");
            cols.push_back(FreeElement(std::move(entries)));
            if (try_char(']')) break;
            expect(',', "',' or ']'");
        }
        return cols;
    }

    ModuleSpec module_spec() {
        expect_word("coker");
        expect_word("rows");
        long rank = integer();
        if (rank < 0) fail("rank must be nonnegative", "nonnegative integer");
        ModuleSpec spec;
        spec.rank = static_cast<std::size_t>(rank);
        spec.relations = matrix(spec.rank);
        return spec;
    }

    void parse_ring(SessionScript& out) {
        std::size_t at = pos_;
        expect_word("ring");
        if (!out.rings.empty())
            fail_at(at, "a script declares a single ring", "no second ring");
        RingDecl decl;
        decl.name = identifier();
        expect('=', "'='");
        std::string f = word();
        if (f == "QQ") {
            decl.field = Field::rationals();
        } else if (f == "GF") {
            expect('(', "'('");
            long p = integer();
            expect(')', "')'");
            try {
                decl.field = Field::prime(static_cast<std::uint32_t>(p));
            } catch (const AlgebraError& e) {
                fail(e.what(), "prime modulus");
            }
        } else {
            fail("unknown field '" + f + "'", "QQ or GF(p)");
        }
        expect('[', "'['");
        while (true) {
            decl.vars.push_back(identifier());
            if (try_char(']')) break;
            expect(',', "',' or ']'");
        }
        try {
            ring_ = make_poly_ring(decl.field, decl.vars, TermOrder{decl.order});
        } catch (const AlgebraError& e) {
            fail_at(at, e.what(), "distinct variable names");
        }
        if (try_char('/')) {
            expect('<', "'<'");
            decl.modulus = poly_list('>');
        }
        if (peek_word() == "order") {
            word();
            std::string o = word();
            if (o == "grevlex") decl.order = OrderKind::grevlex;
            else if (o == "lex") decl.order = OrderKind::lex;
            else fail("unknown order '" + o + "'", "grevlex or lex");
            // rebuild the ring with the requested order; re-read the
            // modulus polynomials under it
            ring_ = make_poly_ring(decl.field, decl.vars, TermOrder{decl.order});
            std::vector<Polynomial> redone;
            for (const auto& m : decl.modulus)
                redone.push_back(parse_polynomial(ring_, m.str()));
            decl.modulus = std::move(redone);
        }
        expect(';', "';'");
        out.poly_ring = ring_;
        out.working_ring = decl.modulus.empty()
                               ? Ring::polynomial(ring_)
                               : Ring::quotient(ring_, decl.modulus);
        out.rings.push_back(std::move(decl));
        out.order.push_back({SessionScript::ItemKind::ring, out.rings.size() - 1});
    }

    void require_ring(const char* what) {
        if (!ring_) fail(std::string(what) + " before the ring declaration",
                         "ring declaration first");
    }

    void parse_ideal(SessionScript& out) {
        expect_word("ideal");
        require_ring("ideal");
        IdealDecl decl;
        decl.name = identifier();
        check_fresh(out, decl.name);
        expect('=', "'='");
        expect('<', "'<'");
        decl.gens = poly_list('>');
        expect(';', "';'");
        out.ideals.push_back(std::move(decl));
        out.order.push_back({SessionScript::ItemKind::ideal, out.ideals.size() - 1});
    }

    void parse_module(SessionScript& out) {
        expect_word("module");
        require_ring("module");
        ModuleDecl decl;
        decl.name = identifier();
        check_fresh(out, decl.name);
        expect('=', "'='");
        decl.spec = module_spec();
        expect(';', "';'");
        out.modules.push_back(std::move(decl));
        out.order.push_back({SessionScript::ItemKind::module, out.modules.size() - 1});
    }

    void parse_tower(SessionScript& out) {
        expect_word("tower");
        require_ring("tower");
        if (out.ideals.empty())
            fail("tower declaration needs the ideal first", "ideal declaration");
        TowerDecl decl;
        decl.name = identifier();
        check_fresh(out, decl.name);
        expect('=', "'='");
        std::string kind = word();
        if (kind == "induced") {
            decl.induced = true;
            std::size_t at = pos_;
            decl.module = identifier();
            if (!out.find_module(decl.module))
                fail_at(at, "undeclared module '" + decl.module + "'",
                        "declared module name");
            expect_word("levels");
            decl.levels = static_cast<int>(integer());
        } else if (kind == "explicit") {
            decl.induced = false;
            expect_word("levels");
            decl.levels = static_cast<int>(integer());
            expect_word("modules");
            expect('[', "'['");
            while (true) {
                decl.explicit_modules.push_back(module_spec());
                if (try_char(']')) break;
                expect(',', "',' or ']'");
            }
            if (decl.explicit_modules.size() !=
                static_cast<std::size_t>(decl.levels + 1))
                fail("explicit tower needs levels+1 modules",
                     std::to_string(decl.levels + 1) + " module specs");
            expect_word("transitions");
            expect('[', "'['");
            for (int k = 0; k < decl.levels; ++k) {
                decl.transitions.push_back(
                    matrix(decl.explicit_modules[static_cast<std::size_t>(k)].rank));
                if (k + 1 < decl.levels) expect(',', "','");
            }
            expect(']', "']'");
        } else {
            fail("unknown tower kind '" + kind + "'", "induced or explicit");
        }
        expect(';', "';'");
        out.towers.push_back(std::move(decl));
        out.order.push_back({SessionScript::ItemKind::tower, out.towers.size() - 1});
    }

    void parse_morphism(SessionScript& out) {
        expect_word("morphism");
        require_ring("morphism");
        MorphismDecl decl;
        decl.name = identifier();
        check_fresh(out, decl.name);
        expect('=', "'='");
        std::size_t at = pos_;
        decl.src = identifier();
        const TowerDecl* src = out.find_tower(decl.src);
        if (!src) fail_at(at, "undeclared tower '" + decl.src + "'", "tower name");
        expect('-', "'->'");
        expect('>', "'->'");
        at = pos_;
        decl.dst = identifier();
        const TowerDecl* dst = out.find_tower(decl.dst);
        if (!dst) fail_at(at, "undeclared tower '" + decl.dst + "'", "tower name");
        if (src->levels != dst->levels)
            fail("towers '" + decl.src + "' and '" + decl.dst +
                     "' have different level counts",
                 "towers of equal length");
        expect_word("maps");
        expect('[', "'['");
        int levels = dst->levels;
        for (int k = 0; k <= levels; ++k) {
            // column count equals the source level rank; entry arity the
            // target level rank. Columns are checked for the target rank.
            std::size_t target_rank =
                dst->induced
                    ? module_rank(out, dst->module)
                    : dst->explicit_modules[static_cast<std::size_t>(k)].rank;
            decl.maps.push_back(matrix(target_rank));
            if (k < levels) expect(',', "','");
        }
        expect(']', "']'");
        expect(';', "';'");
        out.morphisms.push_back(std::move(decl));
        out.order.push_back({SessionScript::ItemKind::morphism,
                             out.morphisms.size() - 1});
    }

    std::size_t module_rank(const SessionScript& out, const std::string& name) {
        const ModuleDecl* m = out.find_module(name);
        if (!m) fail("undeclared module '" + name + "'", "module name");
        return m->spec.rank;
    }

    void check_fresh(const SessionScript& out, const std::string& name) {
        bool taken = out.find_ideal(name) || out.find_module(name) ||
                     out.find_tower(name) || out.find_morphism(name) ||
                     (!out.rings.empty() && out.rings[0].name == name);
        if (taken) fail("name '" + name + "' is already declared", "fresh name");
    }

    void parse_command(SessionScript& out) {
        Command cmd;
        cmd.pos = pos_at(pos_);
        cmd.verb = word();
        while (true) {
            skip_ws();
            if (pos_ >= s_.size()) fail("missing ';'", "';'");
            if (s_[pos_] == ';') {
                ++pos_;
                break;
            }
            if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                cmd.args.push_back(std::to_string(integer()));
            } else {
                cmd.args.push_back(identifier());
            }
        }
        validate_command(out, cmd);
        out.commands.push_back(std::move(cmd));
        out.order.push_back({SessionScript::ItemKind::command,
                             out.commands.size() - 1});
    }

    void validate_command(const SessionScript& out, const Command& cmd) {
        auto need_ideal = [&]() {
            if (out.ideals.empty())
                throw ParseError(cmd.pos,
                                 "'" + cmd.verb + "' needs an ideal declaration",
                                 "ideal declaration before this command");
        };
        auto is_int = [](const std::string& s) {
            return !s.empty() &&
                   s.find_first_not_of("0123456789") == std::string::npos;
        };
        auto arity = [&](std::size_t lo, std::size_t hi) {
            if (cmd.args.size() < lo || cmd.args.size() > hi)
                throw ParseError(cmd.pos, "'" + cmd.verb + "' arity mismatch",
                                 "between " + std::to_string(lo) + " and " +
                                     std::to_string(hi) + " arguments");
        };
        auto module_arg = [&](const std::string& a) {
            if (!out.find_module(a))
                throw ParseError(cmd.pos, "undeclared module '" + a + "'",
                                 "module name");
        };
        auto tower_arg = [&](const std::string& a) {
            if (!out.find_tower(a))
                throw ParseError(cmd.pos, "undeclared tower '" + a + "'",
                                 "tower name");
        };
        if (cmd.verb == "gb") {
            arity(1, 1);
            if (!out.find_ideal(cmd.args[0]) && !out.find_module(cmd.args[0]))
                throw ParseError(cmd.pos, "undeclared name '" + cmd.args[0] + "'",
                                 "ideal or module name");
        } else if (cmd.verb == "tor") {
            arity(3, 3);
            module_arg(cmd.args[0]);
            module_arg(cmd.args[1]);
            if (!is_int(cmd.args[2]))
                throw ParseError(cmd.pos, "tor index must be an integer", "integer");
        } else if (cmd.verb == "koszul") {
            arity(1, 1);
            need_ideal();
            if (!is_int(cmd.args[0]))
                throw ParseError(cmd.pos, "koszul level must be an integer", "integer");
        } else if (cmd.verb == "wpr") {
            arity(0, 0);
            need_ideal();
        } else if (cmd.verb == "flatcheck" || cmd.verb == "prop250") {
            arity(1, 1);
            need_ideal();
            module_arg(cmd.args[0]);
        } else if (cmd.verb == "tower-validate") {
            arity(1, 1);
            tower_arg(cmd.args[0]);
        } else if (cmd.verb == "system-resolution" || cmd.verb == "lemma290") {
            arity(1, 2);
            tower_arg(cmd.args[0]);
            if (cmd.args.size() == 2 && !is_int(cmd.args[1]))
                throw ParseError(cmd.pos, "length must be an integer", "integer");
        } else if (cmd.verb == "lift") {
            arity(2, 3);
            tower_arg(cmd.args[0]);
            if (!is_int(cmd.args[1]))
                throw ParseError(cmd.pos, "level must be an integer", "integer");
        } else if (cmd.verb == "limit-flat") {
            arity(1, 16);
            tower_arg(cmd.args[0]);
            for (std::size_t i = 1; i < cmd.args.size(); ++i) module_arg(cmd.args[i]);
        } else if (cmd.verb == "ml-check") {
            arity(1, 1);
            if (!out.find_morphism(cmd.args[0]))
                throw ParseError(cmd.pos, "undeclared morphism '" + cmd.args[0] + "'",
                                 "morphism name");
        }
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    RingPtr ring_;
};

} // namespace

const IdealDecl* SessionScript::find_ideal(const std::string& name) const {
    for (const auto& d : ideals)
        if (d.name == name) return &d;
    return nullptr;
}
const ModuleDecl* SessionScript::find_module(const std::string& name) const {
    for (const auto& d : modules)
        if (d.name == name) return &d;
    return nullptr;
}
const TowerDecl* SessionScript::find_tower(const std::string& name) const {
    for (const auto& d : towers)
        if (d.name == name) return &d;
    return nullptr;
}
const MorphismDecl* SessionScript::find_morphism(const std::string& name) const {
    for (const auto& d : morphisms)
        if (d.name == name) return &d;
    return nullptr;
}

bool SessionScript::operator==(const SessionScript& o) const {
    if (order.size() != o.order.size()) return false;
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i].kind != o.order[i].kind || order[i].index != o.order[i].index)
            return false;
    return rings == o.rings && ideals == o.ideals && modules == o.modules &&
           towers == o.towers && morphisms == o.morphisms && commands == o.commands;
}

SessionScript parse_script(const std::string& text) {
    return ScriptParser(text).parse();
}

namespace {

std::string print_matrix(const std::vector<FreeElement>& cols) {
    std::string s = "[";
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) s += ", ";
        s += "[";
        for (std::size_t i = 0; i < cols[c].rank(); ++i) {
            if (i) s += ", ";
            s += cols[c][i].str();
        }
        s += "]";
    }
    return s + "]";
}

std::string print_module_spec(const ModuleSpec& m) {
    return "coker rows " + std::to_string(m.rank) + " " + print_matrix(m.relations);
}

} // namespace

std::string print_script(const SessionScript& s) {
    std::string out;
    for (const auto& item : s.order) {
        switch (item.kind) {
            case SessionScript::ItemKind::ring: {
                const RingDecl& d = s.rings[item.index];
                out += "ring " + d.name + " = " + d.field.str() + "[";
                for (std::size_t i = 0; i < d.vars.size(); ++i) {
                    if (i) out += ",";
                    out += d.vars[i];
                }
                out += "]";
                if (!d.modulus.empty()) {
                    out += " / <";
                    for (std::size_t i = 0; i < d.modulus.size(); ++i) {
                        if (i) out += ", ";
                        out += d.modulus[i].str();
                    }
                    out += ">";
                }
                out += " order ";
                out += (d.order == OrderKind::lex ? "lex" : "grevlex");
                out += ";\n";
                break;
            }
            case SessionScript::ItemKind::ideal: {
                const IdealDecl& d = s.ideals[item.index];
                out += "ideal " + d.name + " = <";
                for (std::size_t i = 0; i < d.gens.size(); ++i) {
                    if (i) out += ", ";
                    out += d.gens[i].str();
                }
                out += ">;\n";
                break;
            }
            case SessionScript::ItemKind::module: {
                const ModuleDecl& d = s.modules[item.index];
                out += "module " + d.name + " = " + print_module_spec(d.spec) + ";\n";
                break;
            }
            case SessionScript::ItemKind::tower: {
                const TowerDecl& d = s.towers[item.index];
                out += "tower " + d.name + " = ";
                if (d.induced) {
                    out += "induced " + d.module + " levels " + std::to_string(d.levels);
                } else {
                    out += "explicit levels " + std::to_string(d.levels) + " modules [";
                    for (std::size_t i = 0; i < d.explicit_modules.size(); ++i) {
                        if (i) out += ", ";
                        out += print_module_spec(d.explicit_modules[i]);
                    }
                    out += "] transitions [";
                    for (std::size_t i = 0; i < d.transitions.size(); ++i) {
                        if (i) out += ", ";
                        out += print_matrix(d.transitions[i]);
                    }
                    out += "]";
                }
                out += ";\n";
                break;
            }
            case SessionScript::ItemKind::morphism: {
                const MorphismDecl& d = s.morphisms[item.index];
                out += "morphism " + d.name + " = " + d.src + " -> " + d.dst + " maps [";
                for (std::size_t i = 0; i < d.maps.size(); ++i) {
                    if (i) out += ", ";
                    out += print_matrix(d.maps[i]);
                }
                out += "];\n";
                break;
            }
            case SessionScript::ItemKind::command: {
                const Command& d = s.commands[item.index];
                out += d.verb;
                for (const auto& a : d.args) out += " " + a;
                out += ";\n";
                break;
            }
        }
    }
    return out;
}

} // namespace adic
