#include "adic/koszul.hpp"

namespace adic {

std::vector<std::vector<int>> subsets_of_size(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    std::vector<int> s(p);
    for (int i = 0; i < p; ++i) s[i] = i;
    while (true) {
        out.push_back(s);
        int i = p - 1;
        while (i >= 0 && s[i] == n - p + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

namespace {

std::size_t subset_index(const std::vector<std::vector<int>>& list,
                         const std::vector<int>& s) {
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == s) return i;
    throw AlgebraError("koszul: subset not found");
}

Polynomial poly_power(const Polynomial& p, int e) {
    Polynomial r = Polynomial::constant(p.ring(), 1);
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

} // namespace

ChainComplex koszul_complex(const Ring& ring, const std::vector<Polynomial>& seq, int k) {
    if (k < 1) throw AlgebraError("koszul: level must be >= 1");
    if (seq.empty()) throw AlgebraError("koszul: empty sequence");
    const int n = static_cast<int>(seq.size());
    std::vector<Polynomial> powers;
    for (const auto& a : seq) powers.push_back(ring.nf(poly_power(a, k)));

    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::vector<int>>> bases;  // degree -n .. 0
    for (int p = n; p >= 0; --p) {
        bases.push_back(subsets_of_size(n, p));
        ranks.push_back(bases.back().size());
    }

    std::vector<std::vector<FreeElement>> diffs;
    for (int t = 0; t + 1 < static_cast<int>(bases.size()); ++t) {
        const auto& src = bases[t];      // size p subsets, degree -(n-t)
        const auto& dst = bases[t + 1];  // size p-1 subsets
        std::vector<FreeElement> cols;
        for (const auto& S : src) {
            FreeElement col(ring.poly(), dst.size());
            for (std::size_t j = 0; j < S.size(); ++j) {
                std::vector<int> T = S;
                T.erase(T.begin() + static_cast<std::ptrdiff_t>(j));
                std::size_t idx = subset_index(dst, T);
                Polynomial coeff = powers[static_cast<std::size_t>(S[j])];
                col[idx] = col[idx] + ((j % 2 == 0) ? coeff : -coeff);
            }
            cols.push_back(std::move(col));
        }
        diffs.push_back(std::move(cols));
    }
    return ChainComplex(ring, -n, std::move(ranks), std::move(diffs));
}

ChainComplex dual_koszul(const Ring& ring, const std::vector<Polynomial>& seq, int k) {
    ChainComplex kos = koszul_complex(ring, seq, k);
    const int n = static_cast<int>(seq.size());
    // (K^v)^p = Hom(K^{-p}, A); differential = transpose of d^{-p-1}
    std::vector<std::size_t> ranks;
    for (int p = 0; p <= n; ++p) ranks.push_back(kos.rank(-p));
    std::vector<std::vector<FreeElement>> diffs;
    for (int p = 0; p < n; ++p) {
        const auto& d = kos.differential(-p - 1);  // rank(-p) rows, rank(-p-1) cols
        std::vector<FreeElement> cols(kos.rank(-p),
                                      FreeElement(ring.poly(), kos.rank(-p - 1)));
        for (std::size_t c = 0; c < d.size(); ++c)
            for (std::size_t r = 0; r < d[c].rank(); ++r)
                if (!d[c][r].is_zero()) cols[r][c] = d[c][r];
        diffs.push_back(std::move(cols));
    }
    return ChainComplex(ring, 0, std::move(ranks), std::move(diffs));
}

KoszulTower::KoszulTower(Ring ring, std::vector<Polynomial> seq, int kmax)
    : ring_(std::move(ring)), seq_(std::move(seq)), kmax_(kmax) {
    if (kmax_ < 1) throw AlgebraError("koszul tower: kmax must be >= 1");
    for (int k = 1; k <= kmax_; ++k) {
        levels_.push_back(koszul_complex(ring_, seq_, k));
        duals_.push_back(dual_koszul(ring_, seq_, k));
    }
}

const ChainComplex& KoszulTower::level(int k) const {
    if (k < 1 || k > kmax_) throw AlgebraError("koszul tower: level out of range");
    return levels_[static_cast<std::size_t>(k - 1)];
}

const ChainComplex& KoszulTower::dual_level(int k) const {
    if (k < 1 || k > kmax_) throw AlgebraError("koszul tower: level out of range");
    return duals_[static_cast<std::size_t>(k - 1)];
}

ComplexMap KoszulTower::transition(int k_from, int k_to) const {
    if (k_from < k_to) throw AlgebraError("koszul transition: needs k_from >= k_to");
    const ChainComplex& src = level(k_from);
    const ChainComplex& dst = level(k_to);
    const int n = static_cast<int>(seq_.size());
    std::vector<std::vector<FreeElement>> mats;
    for (int p = n; p >= 0; --p) {
        auto subs = subsets_of_size(n, p);
        std::vector<FreeElement> cols;
        for (std::size_t s = 0; s < subs.size(); ++s) {
            FreeElement col(ring_.poly(), dst.rank(-p));
            Polynomial factor = Polynomial::constant(ring_.poly(), 1);
            for (int i : subs[s])
                factor = factor * poly_power(seq_[static_cast<std::size_t>(i)],
                                             k_from - k_to);
            col[s] = ring_.nf(factor);
            cols.push_back(std::move(col));
        }
        mats.push_back(std::move(cols));
    }
    return ComplexMap(src, dst, std::move(mats));
}

ComplexMap KoszulTower::dual_transition(int k_from, int k_to) const {
    if (k_from > k_to) throw AlgebraError("dual koszul transition: needs k_from <= k_to");
    const ChainComplex& src = dual_level(k_from);
    const ChainComplex& dst = dual_level(k_to);
    const int n = static_cast<int>(seq_.size());
    std::vector<std::vector<FreeElement>> mats;
    for (int p = 0; p <= n; ++p) {
        auto subs = subsets_of_size(n, p);
        std::vector<FreeElement> cols;
        for (std::size_t s = 0; s < subs.size(); ++s) {
            FreeElement col(ring_.poly(), dst.rank(p));
            Polynomial factor = Polynomial::constant(ring_.poly(), 1);
            for (int i : subs[s])
                factor = factor * poly_power(seq_[static_cast<std::size_t>(i)],
                                             k_to - k_from);
            col[s] = ring_.nf(factor);
            cols.push_back(std::move(col));
        }
        mats.push_back(std::move(cols));
    }
    return ComplexMap(src, dst, std::move(mats));
}

LocalCohomologyApprox local_cohomology_approx(const FPModule& m,
                                              const std::vector<Polynomial>& seq,
                                              int k, int i) {
    KoszulTower tower(m.ring, seq, k + 1);
    const ChainComplex& dk = tower.dual_level(k);
    const ChainComplex& dk1 = tower.dual_level(k + 1);
    Subquotient hk = homology_with_coefficients(m, dk, i);
    Subquotient hk1 = homology_with_coefficients(m, dk1, i);

    // big matrix of (dual transition at degree i) (x) id_M
    ComplexMap t = tower.dual_transition(k, k + 1);
    const auto& tm = t.matrix_at(i);
    const std::size_t nr = m.rank;
    std::vector<FreeElement> big(dk.rank(i) * nr,
                                 FreeElement(m.ring.poly(), dk1.rank(i) * nr));
    for (std::size_t c = 0; c < tm.size(); ++c)
        for (std::size_t r = 0; r < tm[c].rank(); ++r)
            if (!tm[c][r].is_zero())
                for (std::size_t g = 0; g < nr; ++g) big[c * nr + g][r * nr + g] = tm[c][r];

    std::vector<FreeElement> comparison = induced_on_subquotients(big, hk, hk1);
    return LocalCohomologyApprox{std::move(hk), std::move(hk1), std::move(comparison)};
}

} // namespace adic
