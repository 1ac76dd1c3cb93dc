#include "adic/wpr.hpp"

namespace adic {

std::vector<FreeElement> homology_transition(const KoszulTower& tower, int i, int k_from,
                                             int k_to, Subquotient* hsrc,
                                             Subquotient* hdst) {
    ComplexMap t = tower.transition(k_from, k_to);
    Subquotient hs = homology_at(tower.level(k_from), -i);
    Subquotient hd = homology_at(tower.level(k_to), -i);
    std::vector<FreeElement> mat = induced_on_homology(t, -i, hs, hd);
    if (hsrc) *hsrc = std::move(hs);
    if (hdst) *hdst = std::move(hd);
    return mat;
}

namespace {

// the transition image of every homology generator of level k_from dies
// in H^{-i}(K(A; a^{k_to}))
bool map_is_zero_on_homology(const KoszulTower& tower, int i, int k_from, int k_to,
                             const Subquotient& hs, const Subquotient& hd,
                             FreeElement* survivor) {
    ComplexMap t = tower.transition(k_from, k_to);
    bool zero = true;
    for (const auto& rep : hs.gen_reps()) {
        FreeElement y = t.apply_at(-i, rep);
        FreeElement nf = hd.denominator().nf(y);
        if (!nf.is_zero()) {
            zero = false;
            if (survivor) *survivor = nf;
            break;
        }
    }
    return zero;
}

} // namespace

ProZeroReport wpr_report(const Ring& ring, const std::vector<Polynomial>& seq, int kmax) {
    if (kmax < 1) throw AlgebraError("wpr_report: kmax must be >= 1");
    ProZeroReport report;
    report.sequence = seq;
    report.kmax = kmax;
    report.overall = Outcome::pass;

    KoszulTower tower(ring, seq, kmax);
    const int n = static_cast<int>(seq.size());

    for (int i = 1; i <= n; ++i) {
        std::vector<Subquotient> by_level;  // H^{-i}(K(A; a^k)), k = 1..kmax
        for (int k = 1; k <= kmax; ++k)
            by_level.push_back(homology_at(tower.level(k), -i));

        for (int k = 1; k < kmax; ++k) {
            ProZeroEntry entry;
            entry.i = i;
            entry.k = k;
            const Subquotient& hd = by_level[static_cast<std::size_t>(k - 1)];
            if (hd.is_zero()) {
                entry.outcome = Outcome::pass;
                entry.trivially_zero = true;
                entry.witness_level = k;
                report.entries.push_back(std::move(entry));
                continue;
            }
            bool found = false;
            for (int kp = k; kp <= kmax; ++kp) {
                const Subquotient& hs = by_level[static_cast<std::size_t>(kp - 1)];
                if (map_is_zero_on_homology(tower, i, kp, k, hs, hd, nullptr)) {
                    entry.outcome = Outcome::pass;
                    entry.witness_level = kp;
                    found = true;
                    break;
                }
            }
            if (!found) {
                entry.outcome = Outcome::fail;
                // surviving class from the top level, verified nonzero
                FreeElement survivor;
                map_is_zero_on_homology(tower, i, kmax, k,
                                        by_level[static_cast<std::size_t>(kmax - 1)], hd,
                                        &survivor);
                entry.surviving_class = survivor.str();
                report.overall = Outcome::fail;
            }
            report.entries.push_back(std::move(entry));
        }
    }
    report.summary = report.overall == Outcome::pass
                         ? "pro-zero up to kmax = " + std::to_string(kmax)
                         : "no witness within bound (evidence against weak "
                           "proregularity)";
    return report;
}

} // namespace adic
