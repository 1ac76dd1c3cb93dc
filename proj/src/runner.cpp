#include "adic/runner.hpp"

#include <chrono>

#include "adic/flatness.hpp"
#include "adic/koszul.hpp"
#include "adic/wpr.hpp"

namespace adic {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

nlohmann::json witnesses_json(const Verdict& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& w : v.witnesses)
        arr.push_back({{"kind", w.kind}, {"detail", w.detail}});
    return arr;
}

nlohmann::json notes_json(const Verdict& v) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [k, val] : v.notes) obj[k] = val;
    return obj;
}

std::string dim_string(const FPModule& m) {
    auto d = k_dimension(m);
    return d ? std::to_string(*d) : "infinite";
}

class Session {
public:
    Session(const SessionScript& script, const RunOptions& opt)
        : script_(script), opt_(opt) {
        ring_ = script.working_ring;
        if (!script.ideals.empty()) ideal_gens_ = script.ideals[0].gens;
    }

    std::vector<Report> run() {
        std::vector<Report> reports;
        for (const auto& cmd : script_.commands) {
            auto start = std::chrono::steady_clock::now();
            Report r = dispatch(cmd);
            auto stop = std::chrono::steady_clock::now();
            r.timing_ms =
                std::chrono::duration<double, std::milli>(stop - start).count();
            r.bounds["kmax"] = opt_.kmax;
            r.bounds["depth"] = opt_.depth;
            reports.push_back(std::move(r));
        }
        return reports;
    }

private:
    FPModule module_of(const std::string& name) const {
        const ModuleDecl* d = script_.find_module(name);
        if (!d) throw AlgebraError("runner: unknown module " + name);
        return FPModule(ring_, d->spec.rank, d->spec.relations);
    }

    AdicTower tower_of(const TowerDecl& d) const {
        if (d.induced) return induced_tower(module_of(d.module), ideal_gens_, d.levels);
        std::vector<FPModule> levels;
        for (const auto& spec : d.explicit_modules)
            levels.push_back(FPModule(ring_, spec.rank, spec.relations));
        return build_tower(ring_, ideal_gens_, d.levels, levels, d.transitions);
    }

    Report base_report(const Command& cmd) const {
        Report r;
        r.command = cmd.verb;
        for (const auto& a : cmd.args) r.command += " " + a;
        std::string inputs = print_script(script_);
        inputs += "|" + r.command;
        inputs += "|kmax=" + std::to_string(opt_.kmax);
        inputs += "|depth=" + std::to_string(opt_.depth);
        r.inputs_digest = fnv1a_hex(inputs);
        return r;
    }

    void fill_verdict(Report& r, const Verdict& v) const {
        r.verdict = outcome_str(v.outcome);
        r.witnesses = witnesses_json(v);
        r.detail["summary"] = v.summary;
        nlohmann::json notes = notes_json(v);
        if (!notes.empty()) r.detail["notes"] = notes;
    }

    Report dispatch(const Command& cmd) {
        Report r = base_report(cmd);
        if (cmd.verb == "gb") return cmd_gb(cmd, std::move(r));
        if (cmd.verb == "tor") return cmd_tor(cmd, std::move(r));
        if (cmd.verb == "koszul") return cmd_koszul(cmd, std::move(r));
        if (cmd.verb == "wpr") return cmd_wpr(cmd, std::move(r));
        if (cmd.verb == "flatcheck") return cmd_flatcheck(cmd, std::move(r));
        if (cmd.verb == "tower-validate") return cmd_tower_validate(cmd, std::move(r));
        if (cmd.verb == "system-resolution")
            return cmd_system_resolution(cmd, std::move(r));
        if (cmd.verb == "lift") return cmd_lift(cmd, std::move(r));
        if (cmd.verb == "prop250") return cmd_prop250(cmd, std::move(r));
        if (cmd.verb == "lemma290") return cmd_lemma290(cmd, std::move(r));
        if (cmd.verb == "limit-flat") return cmd_limit_flat(cmd, std::move(r));
        if (cmd.verb == "ml-check") return cmd_ml_check(cmd, std::move(r));
        throw AlgebraError("runner: unknown command " + cmd.verb);
    }

    Report cmd_gb(const Command& cmd, Report r) {
        std::vector<FreeElement> gens;
        std::size_t rank = 1;
        if (const IdealDecl* id = script_.find_ideal(cmd.args[0])) {
            for (const auto& g : id->gens) gens.push_back(FreeElement({g}));
        } else {
            FPModule m = module_of(cmd.args[0]);
            rank = m.rank;
            gens = m.relations;
        }
        Submodule sub(ring_, rank, gens);
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& g : sub.reduced_gb()) basis.push_back(g.str());
        r.detail["basis"] = basis;
        r.detail["size"] = sub.reduced_gb().size();
        // post-pass: the reduced basis satisfies the Buchberger criterion
        std::vector<FreeElement> combined = sub.reduced_gb();
        for (const auto& p : ring_.modulus_gb())
            for (std::size_t i = 0; i < rank; ++i) {
                FreeElement e(ring_.poly(), rank);
                e[i] = p;
                combined.push_back(std::move(e));
            }
        bool sound = verify_buchberger(buchberger(combined, ring_.module_order()).basis,
                                       ring_.module_order());
        r.detail["buchberger_criterion"] = sound ? "verified" : "violated";
        r.verdict = outcome_str(sound ? Outcome::pass : Outcome::fail);
        if (!sound)
            r.witnesses.push_back(
                {{"kind", "s-pair"}, {"detail", "an S-pair failed to reduce to zero"}});
        return r;
    }

    Report cmd_tor(const Command& cmd, Report r) {
        FPModule n = module_of(cmd.args[0]);
        FPModule m = module_of(cmd.args[1]);
        int i = std::stoi(cmd.args[2]);
        Subquotient cls = tor(n, m, i);
        r.detail["index"] = i;
        r.detail["dimension"] = dim_string(cls.presentation());
        r.detail["zero"] = cls.is_zero();
        if (!cls.is_zero())
            r.detail["class"] = cls.gen_reps()[0].str();
        r.verdict = outcome_str(Outcome::pass);
        return r;
    }

    Report cmd_koszul(const Command& cmd, Report r) {
        int k = std::stoi(cmd.args[0]);
        ChainComplex c = koszul_complex(ring_, ideal_gens_, k);
        nlohmann::json ranks = nlohmann::json::array();
        nlohmann::json hdims = nlohmann::json::array();
        for (int i = c.lo(); i <= c.hi(); ++i) {
            ranks.push_back(c.rank(i));
            Subquotient h = homology_at(c, i);
            hdims.push_back({{"degree", i},
                             {"dimension", dim_string(h.presentation())},
                             {"zero", h.is_zero()}});
        }
        r.detail["level"] = k;
        r.detail["ranks"] = ranks;
        r.detail["homology"] = hdims;
        r.verdict = outcome_str(Outcome::pass);
        return r;
    }

    Report cmd_wpr(const Command&, Report r) {
        ProZeroReport rep = wpr_report(ring_, ideal_gens_, opt_.kmax);
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& e : rep.entries) {
            nlohmann::json j = {{"i", e.i},
                                {"k", e.k},
                                {"outcome", outcome_str(e.outcome)},
                                {"trivially_zero", e.trivially_zero}};
            if (e.outcome == Outcome::pass) j["witness_level"] = e.witness_level;
            else j["surviving_class"] = e.surviving_class;
            entries.push_back(std::move(j));
            if (e.outcome == Outcome::fail)
                r.witnesses.push_back({{"kind", "surviving-class"},
                                       {"detail",
                                        "i=" + std::to_string(e.i) +
                                            " k=" + std::to_string(e.k) + ": " +
                                            e.surviving_class}});
        }
        r.detail["entries"] = entries;
        r.detail["summary"] = rep.summary;
        r.verdict = outcome_str(rep.overall);
        return r;
    }

    Report cmd_flatcheck(const Command& cmd, Report r) {
        FPModule m = module_of(cmd.args[0]);
        FlatnessVerdict fv = adic_flat_check(m, ideal_gens_, opt_.depth, opt_.kmax,
                                             default_torsion_tests(ring_, ideal_gens_));
        auto cond_json = [&](const ConditionResult& c) {
            nlohmann::json j = {{"outcome", outcome_str(c.outcome)}};
            if (!c.detail.empty()) j["detail"] = c.detail;
            nlohmann::json ws = nlohmann::json::array();
            for (const auto& w : c.witnesses)
                ws.push_back({{"kind", w.kind}, {"detail", w.detail}});
            if (!ws.empty()) j["witnesses"] = ws;
            return j;
        };
        r.detail["condition_torsion_tests"] = cond_json(fv.cond_torsion_tests);
        r.detail["condition_all_levels"] = cond_json(fv.cond_all_levels);
        r.detail["condition_level_zero"] = cond_json(fv.cond_level_zero);
        r.detail["tor1_only_variant"] = cond_json(fv.tor1_only_variant);
        for (const auto& [k, v] : fv.notes) r.detail[k] = v;
        for (const ConditionResult* c :
             {&fv.cond_level_zero, &fv.cond_all_levels, &fv.cond_torsion_tests})
            for (const auto& w : c->witnesses)
                r.witnesses.push_back({{"kind", w.kind}, {"detail", w.detail}});
        r.verdict = outcome_str(fv.overall);
        return r;
    }

    Report cmd_tower_validate(const Command& cmd, Report r) {
        AdicTower t = tower_of(*script_.find_tower(cmd.args[0]));
        fill_verdict(r, validate_tower(t));
        return r;
    }

    Report cmd_system_resolution(const Command& cmd, Report r) {
        AdicTower t = tower_of(*script_.find_tower(cmd.args[0]));
        int length = cmd.args.size() > 1 ? std::stoi(cmd.args[1]) : opt_.depth;
        SystemResolutionOutcome out = system_resolution(t, length);
        r.detail["length"] = length;
        if (out.ok) {
            nlohmann::json ranks = nlohmann::json::array();
            const ChainComplex& c = out.resolution->levels[0].complex;
            for (int i = c.lo(); i <= c.hi(); ++i) ranks.push_back(c.rank(i));
            r.detail["ranks"] = ranks;
            r.verdict = outcome_str(Outcome::pass);
        } else {
            r.verdict = outcome_str(Outcome::fail);
            r.detail["fail_level"] = out.fail_level;
            r.detail["obstruction_index"] = out.obstruction_index;
            r.detail["obstruction_dimension"] =
                dim_string(out.obstruction->presentation());
            r.witnesses.push_back(
                {{"kind", "tor-obstruction"},
                 {"detail", out.detail + "; class " +
                                (out.obstruction->gen_reps().empty()
                                     ? "<zero>"
                                     : out.obstruction->gen_reps()[0].str())}});
        }
        return r;
    }

    Report cmd_lift(const Command& cmd, Report r) {
        AdicTower t = tower_of(*script_.find_tower(cmd.args[0]));
        int k = std::stoi(cmd.args[1]);
        int length = cmd.args.size() > 2 ? std::stoi(cmd.args[2]) : opt_.depth;
        if (k < 0 || k >= t.kmax)
            throw AlgebraError("lift: level out of range");
        FreeResolution res_k = free_resolution(t.level(k), length);
        LiftOutcome out = lift_resolution(t, k, res_k, length);
        r.detail["from_level"] = k;
        r.detail["length"] = length;
        if (out.ok) {
            r.verdict = outcome_str(Outcome::pass);
            r.detail["lifted"] = out.lifted->complex.str();
        } else {
            r.verdict = outcome_str(Outcome::fail);
            r.detail["obstruction_index"] = out.obstruction_index;
            r.detail["obstruction_dimension"] =
                dim_string(out.obstruction->presentation());
            r.witnesses.push_back({{"kind", "tor-obstruction"}, {"detail", out.detail}});
        }
        return r;
    }

    Report cmd_prop250(const Command& cmd, Report r) {
        FPModule m = module_of(cmd.args[0]);
        fill_verdict(r, check_prop_250(m, ideal_gens_, opt_.kmax, opt_.depth));
        return r;
    }

    Report cmd_lemma290(const Command& cmd, Report r) {
        AdicTower t = tower_of(*script_.find_tower(cmd.args[0]));
        int length = cmd.args.size() > 1 ? std::stoi(cmd.args[1]) : opt_.depth;
        SystemResolutionOutcome out = system_resolution(t, length);
        if (!out.ok) {
            r.verdict = outcome_str(Outcome::fail);
            r.witnesses.push_back(
                {{"kind", "tor-obstruction"},
                 {"detail", "no system resolution: " + out.detail}});
            return r;
        }
        fill_verdict(r, check_lemma_290(*out.resolution));
        return r;
    }

    Report cmd_limit_flat(const Command& cmd, Report r) {
        AdicTower t = tower_of(*script_.find_tower(cmd.args[0]));
        std::vector<FPModule> tests;
        for (std::size_t i = 1; i < cmd.args.size(); ++i)
            tests.push_back(module_of(cmd.args[i]));
        if (tests.empty()) tests = default_torsion_tests(ring_, ideal_gens_);
        SystemResolutionOutcome out = system_resolution(t, opt_.depth + 1);
        if (!out.ok) {
            r.verdict = outcome_str(Outcome::fail);
            r.witnesses.push_back(
                {{"kind", "tor-obstruction"},
                 {"detail", "no system resolution: " + out.detail}});
            return r;
        }
        fill_verdict(r, check_flat_tower_limit(*out.resolution, tests, opt_.depth));
        return r;
    }

    Report cmd_ml_check(const Command& cmd, Report r) {
        const MorphismDecl* d = script_.find_morphism(cmd.args[0]);
        AdicTower src = tower_of(*script_.find_tower(d->src));
        AdicTower dst = tower_of(*script_.find_tower(d->dst));
        TowerMorphism phi{d->maps};
        fill_verdict(r, ml_kernel_tower_check(src, dst, phi));
        return r;
    }

    const SessionScript& script_;
    RunOptions opt_;
    Ring ring_;
    std::vector<Polynomial> ideal_gens_;
};

} // namespace

std::vector<Report> run_script(const SessionScript& script, const RunOptions& options) {
    return Session(script, options).run();
}

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["schema"] = "adic-report/1";
    j["command"] = r.command;
    j["inputs_digest"] = r.inputs_digest;
    j["verdict"] = r.verdict;
    j["witnesses"] = r.witnesses;
    j["bounds"] = r.bounds;
    j["detail"] = r.detail;
    j["timing_ms"] = r.timing_ms;
    return j;
}

std::string report_summary_line(const Report& r) {
    std::string s = "[" + r.verdict + "] " + r.command;
    if (!r.witnesses.empty()) {
        s += " -- " + std::to_string(r.witnesses.size()) + " witness(es): ";
        s += r.witnesses[0].value("detail", "");
    }
    return s;
}

} // namespace adic
