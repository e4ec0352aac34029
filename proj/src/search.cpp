#include "psik/search.hpp"

#include <algorithm>

#include "psik/parallel.hpp"

namespace psik {

std::vector<ReversalWitness> find_reversals(std::uint64_t n, unsigned k_max,
                                            const FamilyOptions& families) {
    if (n < 2) throw usage_error("reversal search needs n >= 2");
    if (k_max < 2) throw usage_error("reversal search needs k_max >= 2");
    std::vector<GroupSpec> insts = families_of_order(n, families, true);
    // psi_k value table, one row per instance.
    std::vector<std::vector<Natural>> vals(insts.size());
    for (std::size_t i = 0; i < insts.size(); ++i) {
        vals[i].reserve(k_max);
        for (unsigned k = 1; k <= k_max; ++k) vals[i].push_back(psi(insts[i], k).value);
    }
    std::vector<ReversalWitness> out;
    for (std::size_t i = 0; i < insts.size(); ++i) {
        for (std::size_t j = i + 1; j < insts.size(); ++j) {
            // Orient by the k = 1 comparison; equal values cannot reverse.
            std::size_t lo = i, hi = j;
            if (vals[i][0] == vals[j][0]) continue;
            if (vals[i][0] > vals[j][0]) std::swap(lo, hi);
            // One witness per pair, recording the largest reversing k.
            for (unsigned k = k_max; k >= 2; --k) {
                if (vals[lo][k - 1] > vals[hi][k - 1]) {
                    out.push_back({insts[lo], insts[hi], 1, k, vals[lo][0], vals[hi][0],
                                   vals[lo][k - 1], vals[hi][k - 1]});
                    break;
                }
            }
        }
    }
    return out;
}

bool ExtremalResult::max_strict() const {
    return ranked.size() < 2 || ranked[1].value < ranked[0].value;
}

bool ExtremalResult::min_strict() const {
    return ranked.size() < 2 || ranked[ranked.size() - 2].value > ranked.back().value;
}

ExtremalResult extremal_over_order(std::uint64_t n, unsigned k, const FamilyOptions& families,
                                   bool include_cyclic) {
    if (n < 2) throw usage_error("extremal search needs n >= 2");
    ExtremalResult res;
    for (const auto& g : families_of_order(n, families, include_cyclic))
        res.ranked.push_back({g, psi(g, k).value});
    std::stable_sort(res.ranked.begin(), res.ranked.end(),
                     [](const ExtremalEntry& a, const ExtremalEntry& b) {
                         if (a.value != b.value) return a.value > b.value;
                         return spec_less(a.spec, b.spec);
                     });
    return res;
}

namespace {

// ratio(a) > ratio(b) by cross-multiplication, ties toward smaller order
// then structurally smaller spec.
bool ratio_better(const RatioRecord& a, const RatioRecord& b) {
    Cmp c = compare_ratio(a.psi_g, a.psi_zn, b.psi_g, b.psi_zn);
    if (c != Cmp::EQ) return c == Cmp::GT;
    Natural oa = a.spec.order(), ob = b.spec.order();
    if (oa != ob) return oa < ob;
    return spec_less(a.spec, b.spec);
}

} // namespace

RatioScanResult worst_ratio_scan(std::uint64_t n_max, unsigned k, std::size_t top_n,
                                 const FamilyOptions& families, unsigned workers) {
    if (n_max < 4) throw usage_error("worst-ratio scan needs n_max >= 4");
    Natural cl = main_bound_coeff_lhs(k), cr = main_bound_coeff_rhs(k);

    struct Unit {
        std::vector<RatioRecord> records;
        std::vector<BoundReport> violations;
    };
    std::vector<std::uint64_t> ns;
    for (std::uint64_t n = 2; n <= n_max; ++n) ns.push_back(n);
    auto units = parallel_index_map<Unit>(ns.size(), workers, [&](std::size_t i) {
        Unit u;
        std::uint64_t n = ns[i];
        std::vector<GroupSpec> insts = families_of_order(n, families, false);
        if (insts.empty()) return u;
        Natural pz = psi_cyclic(Natural(n), k);
        for (const auto& g : insts) {
            RatioRecord rec{g, k, psi(g, k).value, pz, false};
            // Compare psi_g / psi_zn against cr / cl.
            Cmp c = compare_ratio(rec.psi_g, rec.psi_zn, cr, cl);
            rec.at_bound = c == Cmp::EQ;
            if (c == Cmp::GT) {
                u.violations.push_back(check_main_bound(g, k));
            }
            u.records.push_back(std::move(rec));
        }
        return u;
    });

    RatioScanResult out;
    for (auto& u : units) {
        for (auto& v : u.violations) out.violations.push_back(std::move(v));
        for (auto& r : u.records) {
            // Insert into the running top-N, kept sorted best-first.
            auto pos = std::upper_bound(out.top.begin(), out.top.end(), r, ratio_better);
            if (pos != out.top.end() || out.top.size() < top_n)
                out.top.insert(pos, std::move(r));
            if (out.top.size() > top_n) out.top.pop_back();
        }
    }
    return out;
}

} // namespace psik
