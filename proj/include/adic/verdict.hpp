#ifndef ADIC_VERDICT_HPP
#define ADIC_VERDICT_HPP

#include <string>
#include <utility>
#include <vector>

namespace adic {

enum class Outcome { pass, fail, undetermined };

std::string outcome_str(Outcome o);

struct Witness {
    std::string kind;
    std::string detail;
};

/// Structured check result. Every fail carries at least one witness;
/// "undetermined" records an honest truncation, never a guess.
struct Verdict {
    Outcome outcome = Outcome::pass;
    std::string summary;
    std::vector<Witness> witnesses;
    std::vector<std::pair<std::string, std::string>> notes;

    static Verdict pass(std::string summary) {
        return Verdict{Outcome::pass, std::move(summary), {}, {}};
    }
    static Verdict fail(std::string summary, Witness w) {
        return Verdict{Outcome::fail, std::move(summary), {std::move(w)}, {}};
    }
    static Verdict undetermined(std::string summary) {
        return Verdict{Outcome::undetermined, std::move(summary), {}, {}};
    }

    bool passed() const { return outcome == Outcome::pass; }
    bool failed() const { return outcome == Outcome::fail; }

    void add_witness(std::string kind, std::string detail) {
        witnesses.push_back({std::move(kind), std::move(detail)});
    }
    void note(std::string key, std::string value) {
        notes.push_back({std::move(key), std::move(value)});
    }
    /// Absorb a sub-check: worst outcome wins, witnesses accumulate.
    void absorb(const Verdict& v);
};

} // namespace adic

#endif
