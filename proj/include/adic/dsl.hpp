#ifndef ADIC_DSL_HPP
#define ADIC_DSL_HPP

#include <string>
#include <vector>

#include "adic/ring.hpp"

namespace adic {

struct SourcePos {
    int line = 1;
    int col = 1;
};

/// Parse failure with position and the tokens that would have been
/// accepted.
class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos pos, const std::string& message, std::string expected)
        : std::runtime_error("parse error at " + std::to_string(pos.line) + ":" +
                             std::to_string(pos.col) + ": " + message),
          pos(pos),
          expected(std::move(expected)) {}
    SourcePos pos;
    std::string expected;  // comma-separated expected-token set
};

/// One presentation as written in a script.
struct ModuleSpec {
    std::size_t rank = 0;
    std::vector<FreeElement> relations;

    bool operator==(const ModuleSpec& o) const {
        return rank == o.rank && relations == o.relations;
    }
};

struct RingDecl {
    std::string name;
    Field field;
    std::vector<std::string> vars;
    OrderKind order = OrderKind::grevlex;
    std::vector<Polynomial> modulus;  // empty for a polynomial ring

    bool operator==(const RingDecl& o) const {
        return name == o.name && field == o.field && vars == o.vars &&
               order == o.order && modulus == o.modulus;
    }
};

struct IdealDecl {
    std::string name;
    std::vector<Polynomial> gens;

    bool operator==(const IdealDecl& o) const {
        return name == o.name && gens == o.gens;
    }
};

struct ModuleDecl {
    std::string name;
    ModuleSpec spec;

    bool operator==(const ModuleDecl& o) const {
        return name == o.name && spec == o.spec;
    }
};

struct TowerDecl {
    std::string name;
    bool induced = true;
    std::string module;  // induced case
    int levels = 0;      // kmax
    std::vector<ModuleSpec> explicit_modules;              // explicit case
    std::vector<std::vector<FreeElement>> transitions;     // explicit case

    bool operator==(const TowerDecl& o) const {
        return name == o.name && induced == o.induced && module == o.module &&
               levels == o.levels && explicit_modules == o.explicit_modules &&
               transitions == o.transitions;
    }
};

struct MorphismDecl {
    std::string name;
    std::string src, dst;
    std::vector<std::vector<FreeElement>> maps;

    bool operator==(const MorphismDecl& o) const {
        return name == o.name && src == o.src && dst == o.dst && maps == o.maps;
    }
};

struct Command {
    std::string verb;
    std::vector<std::string> args;
    SourcePos pos;

    bool operator==(const Command& o) const {
        return verb == o.verb && args == o.args;
    }
};

/// Parsed script: declarations in order plus the name environment.
/// Invariants: names are declared before use, a single ring per script,
/// and the ideal precedes any tower or flatness command.
struct SessionScript {
    enum class ItemKind { ring, ideal, module, tower, morphism, command };
    struct Item {
        ItemKind kind;
        std::size_t index;
    };

    std::vector<RingDecl> rings;
    std::vector<IdealDecl> ideals;
    std::vector<ModuleDecl> modules;
    std::vector<TowerDecl> towers;
    std::vector<MorphismDecl> morphisms;
    std::vector<Command> commands;
    std::vector<Item> order;

    RingPtr poly_ring;   // the declared polynomial ring
    Ring working_ring;   // with the declared modulus

    const IdealDecl* find_ideal(const std::string& name) const;
    const ModuleDecl* find_module(const std::string& name) const;
    const TowerDecl* find_tower(const std::string& name) const;
    const MorphismDecl* find_morphism(const std::string& name) const;

    bool operator==(const SessionScript& o) const;
};

SessionScript parse_script(const std::string& text);

/// Canonical text form; parse(print(s)) == s structurally.
std::string print_script(const SessionScript& s);

} // namespace adic

#endif
