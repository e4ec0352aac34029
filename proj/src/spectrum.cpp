#include "psik/spectrum.hpp"

#include <algorithm>

namespace psik {

void OrderSpectrum::validate() const {
    Natural total = 0;
    for (const auto& [d, c] : counts) {
        if (d.is_zero()) throw internal_error("spectrum contains order 0");
        if (c.is_zero()) throw internal_error("spectrum contains an empty order class");
        if (group_order % d != 0)
            throw internal_error("order " + d.str() + " does not divide |G| = " + group_order.str());
        total += c;
    }
    if (total != group_order)
        throw internal_error("spectrum counts sum to " + total.str() + ", expected " +
                             group_order.str());
    if (count(1) != 1) throw internal_error("spectrum must have exactly one identity");
}

OrderSpectrum spectrum_cyclic(const Natural& n) {
    if (n.is_zero()) throw validation_error("cyclic group order must be >= 1");
    OrderSpectrum s;
    s.group_order = n;
    for (auto& [d, phi] : divisors_with_phi(factorize(n))) s.counts.emplace(d, phi);
    return s;
}

OrderSpectrum spectrum_abelian_p(const Natural& p, const Partition& lambda) {
    OrderSpectrum s;
    s.group_order = pow(p, lambda.sum());
    s.counts[1] = 1;
    Natural prev = 1; // #{x : x^(p^(j-1)) = e}
    for (unsigned j = 1; j <= lambda.largest(); ++j) {
        unsigned exp_sum = 0;
        for (unsigned r : lambda.parts()) exp_sum += std::min(r, j);
        Natural cur = pow(p, exp_sum);
        s.counts[pow(p, j)] = cur - prev;
        prev = cur;
    }
    return s;
}

OrderSpectrum spectrum_product(const OrderSpectrum& s1, const OrderSpectrum& s2) {
    OrderSpectrum out;
    out.group_order = s1.group_order * s2.group_order;
    for (const auto& [d1, c1] : s1.counts)
        for (const auto& [d2, c2] : s2.counts)
            out.counts[lcm(d1, d2)] += c1 * c2;
    return out;
}

OrderSpectrum spectrum_dihedral(const Natural& m) {
    OrderSpectrum s = spectrum_cyclic(m);
    s.counts[2] += m;
    s.group_order = m * 2;
    return s;
}

OrderSpectrum spectrum_dicyclic(const Natural& m) {
    if (m < 2) throw validation_error("dicyclic parameter must be >= 2");
    OrderSpectrum s = spectrum_cyclic(m * 2);
    s.counts[4] += m * 2;
    s.group_order = m * 4;
    return s;
}

OrderSpectrum spectrum_semidirect(const SemidirectSpec& spec) {
    GroupSpec(spec).validate();
    Natural q = spec.modulus();
    Natural z = spec.kernel_order();
    // P x Z is an honest direct product of coprime cyclics.
    OrderSpectrum s = spectrum_product(spectrum_cyclic(q), spectrum_cyclic(z));
    // Cosets of x outside the kernel contribute o(x) once per element of P.
    for (auto& [e, phi] : divisors_with_phi(factorize(spec.m)))
        if (z % e != 0) s.counts[e] += phi * q;
    s.group_order = q * spec.m;
    return s;
}

OrderSpectrum spectrum_bruteforce(const CayleyTable& t) {
    OrderSpectrum s;
    s.group_order = Natural(t.n);
    for (std::uint32_t g = 0; g < t.n; ++g) {
        std::uint32_t x = g;
        std::uint64_t o = 1;
        while (x != t.identity) {
            x = t.at(x, g);
            ++o;
            if (o > t.n)
                throw validation_error("element " + std::to_string(g) +
                                       " never reaches the identity; table is not a group");
        }
        s.counts[Natural(o)] += 1;
    }
    return s;
}

OrderSpectrum spectrum_direct(const GroupSpec& spec) {
    auto elems = make_elements(spec);
    std::uint64_t n = elems->size();
    std::uint64_t e = elems->identity();
    OrderSpectrum s;
    s.group_order = Natural(n);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t g = 0; g < n; ++g) {
        std::uint64_t x = g;
        std::uint64_t o = 1;
        while (x != e) {
            x = elems->mul(x, g);
            ++o;
        }
        counts[o] += 1;
    }
    for (auto& [o, c] : counts) s.counts.emplace(Natural(o), Natural(c));
    return s;
}

OrderSpectrum spectrum(const GroupSpec& spec) {
    struct V {
        OrderSpectrum operator()(const CyclicSpec& s) const { return spectrum_cyclic(s.n); }
        OrderSpectrum operator()(const AbelianSpec& s) const {
            OrderSpectrum acc;
            bool first = true;
            for (const auto& [p, lam] : s.components) {
                OrderSpectrum part = spectrum_abelian_p(p, lam);
                acc = first ? std::move(part) : spectrum_product(acc, part);
                first = false;
            }
            return acc;
        }
        OrderSpectrum operator()(const DihedralSpec& s) const { return spectrum_dihedral(s.m); }
        OrderSpectrum operator()(const DicyclicSpec& s) const { return spectrum_dicyclic(s.m); }
        OrderSpectrum operator()(const SemidirectSpec& s) const { return spectrum_semidirect(s); }
        OrderSpectrum operator()(const ProductSpec& s) const {
            OrderSpectrum acc;
            bool first = true;
            for (const auto& f : s.factors) {
                OrderSpectrum part = spectrum(f);
                acc = first ? std::move(part) : spectrum_product(acc, part);
                first = false;
            }
            return acc;
        }
        OrderSpectrum operator()(const CayleySpec& s) const { return spectrum_bruteforce(*s.table); }
    };
    return std::visit(V{}, spec.node());
}

} // namespace psik
