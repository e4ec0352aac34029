#include "psik/group.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

namespace psik {

using nlohmann::json;

bool ProductSpec::operator==(const ProductSpec& o) const { return factors == o.factors; }

// ---------------------------------------------------------------------------
// Spec construction and invariants
// ---------------------------------------------------------------------------

GroupSpec GroupSpec::abelian_p(Natural p, Partition lambda) {
    std::map<Natural, Partition> comps;
    comps.emplace(std::move(p), std::move(lambda));
    return GroupSpec(AbelianSpec{std::move(comps)});
}

GroupSpec GroupSpec::abelian(std::map<Natural, Partition> components) {
    return GroupSpec(AbelianSpec{std::move(components)});
}

GroupSpec GroupSpec::semidirect(Natural p, unsigned r, Natural m, Natural a) {
    return GroupSpec(SemidirectSpec{std::move(p), r, std::move(m), std::move(a)});
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    return GroupSpec(ProductSpec{std::move(factors)});
}

GroupSpec GroupSpec::cayley(CayleyTable table, std::string label) {
    return GroupSpec(CayleySpec{std::make_shared<CayleyTable>(std::move(table)), std::move(label)});
}

Natural SemidirectSpec::action_order() const {
    return multiplicative_order(a, modulus(), gcd(m, euler_phi(modulus())));
}

namespace {

struct OrderVisitor {
    Natural operator()(const CyclicSpec& s) const { return s.n; }
    Natural operator()(const AbelianSpec& s) const {
        Natural v = 1;
        for (const auto& [p, lam] : s.components) v *= pow(p, lam.sum());
        return v;
    }
    Natural operator()(const DihedralSpec& s) const { return s.m * 2; }
    Natural operator()(const DicyclicSpec& s) const { return s.m * 4; }
    Natural operator()(const SemidirectSpec& s) const { return s.modulus() * s.m; }
    Natural operator()(const ProductSpec& s) const {
        Natural v = 1;
        for (const auto& f : s.factors) v *= f.order();
        return v;
    }
    Natural operator()(const CayleySpec& s) const { return Natural(s.table->n); }
};

} // namespace

Natural GroupSpec::order() const { return std::visit(OrderVisitor{}, *node_); }

void GroupSpec::validate(CayleyCheckPolicy policy) const {
    struct V {
        CayleyCheckPolicy policy;
        void operator()(const CyclicSpec& s) const {
            if (s.n.is_zero()) throw validation_error("cyclic group order must be >= 1");
        }
        void operator()(const AbelianSpec& s) const {
            if (s.components.empty()) throw validation_error("abelian spec needs at least one prime component");
            for (const auto& [p, lam] : s.components) {
                if (!is_prime(p))
                    throw validation_error("abelian component base " + p.str() + " is not prime");
                (void)lam; // partition invariants enforced at construction
            }
        }
        void operator()(const DihedralSpec& s) const {
            if (s.m.is_zero()) throw validation_error("dihedral parameter must be >= 1");
        }
        void operator()(const DicyclicSpec& s) const {
            if (s.m < 2) throw validation_error("dicyclic parameter must be >= 2");
        }
        void operator()(const SemidirectSpec& s) const {
            if (!is_prime(s.p))
                throw validation_error("semidirect base " + s.p.str() + " is not prime");
            if (s.r == 0) throw validation_error("semidirect exponent r must be >= 1");
            if (s.m < 2) throw validation_error("semidirect complement order m must be >= 2");
            if (gcd(s.p, s.m) != 1)
                throw validation_error("semidirect requires gcd(p, m) = 1; got p=" + s.p.str() +
                                       ", m=" + s.m.str());
            Natural q = s.modulus();
            if (s.a.is_zero() || s.a >= q)
                throw validation_error("semidirect action exponent must satisfy 1 <= a < p^r");
            if (powmod(s.a, s.m, q) != 1)
                throw validation_error("invalid semidirect action: " + s.a.str() + "^" + s.m.str() +
                                       " != 1 (mod " + q.str() + ")");
        }
        void operator()(const ProductSpec& s) const {
            if (s.factors.empty()) throw validation_error("direct product needs at least one factor");
            for (const auto& f : s.factors) f.validate(policy);
        }
        void operator()(const CayleySpec& s) const {
            s.table->validate_latin_identity();
            bool check = policy == CayleyCheckPolicy::Always ||
                         (policy == CayleyCheckPolicy::Auto && s.table->n <= 512);
            if (check) s.table->validate_associativity();
        }
    };
    std::visit(V{policy}, *node_);
}

// ---------------------------------------------------------------------------
// Cyclicity
// ---------------------------------------------------------------------------

namespace {

// Collapse a spec into per-prime abelian invariants when it is abelian-like;
// nullopt if a non-abelian (or table) piece is present.
std::optional<std::map<Natural, std::vector<unsigned>>> abelian_shape(const GroupSpec& g);

void merge_shape(std::map<Natural, std::vector<unsigned>>& into,
                 const std::map<Natural, std::vector<unsigned>>& from) {
    for (const auto& [p, parts] : from) {
        auto& dst = into[p];
        dst.insert(dst.end(), parts.begin(), parts.end());
    }
}

std::optional<std::map<Natural, std::vector<unsigned>>> abelian_shape(const GroupSpec& g) {
    std::map<Natural, std::vector<unsigned>> shape;
    if (const auto* c = g.get_if<CyclicSpec>()) {
        if (c->n == 1) return shape;
        Factorization fac = factorize(c->n);
        for (const auto& pp : fac.factors()) shape[pp.prime].push_back(pp.exponent);
        return shape;
    }
    if (const auto* a = g.get_if<AbelianSpec>()) {
        for (const auto& [p, lam] : a->components)
            for (unsigned r : lam.parts()) shape[p].push_back(r);
        return shape;
    }
    if (const auto* d = g.get_if<DihedralSpec>()) {
        if (d->m == 1) { shape[Natural(2)].push_back(1); return shape; } // D_1 = Z_2
        return std::nullopt;
    }
    if (const auto* s = g.get_if<SemidirectSpec>()) {
        if (s->a == 1) {
            // Trivial action: Z_{p^r} x Z_m with coprime orders.
            shape[s->p].push_back(s->r);
            Factorization fac = factorize(s->m);
            for (const auto& pp : fac.factors()) shape[pp.prime].push_back(pp.exponent);
            return shape;
        }
        return std::nullopt;
    }
    if (const auto* pr = g.get_if<ProductSpec>()) {
        for (const auto& f : pr->factors) {
            auto sub = abelian_shape(f);
            if (!sub) return std::nullopt;
            merge_shape(shape, *sub);
        }
        return shape;
    }
    return std::nullopt; // dicyclic, cayley
}

} // namespace

bool GroupSpec::cyclic() const {
    if (auto shape = abelian_shape(*this)) {
        for (const auto& [p, parts] : *shape)
            if (parts.size() > 1) return false;
        return true;
    }
    if (const auto* c = get_if<CayleySpec>()) {
        // Definitional: cyclic iff some element has full order.
        const CayleyTable& t = *c->table;
        for (std::uint32_t g = 0; g < t.n; ++g) {
            std::uint32_t x = g;
            std::uint32_t o = 1;
            while (x != t.identity) { x = t.at(x, g); ++o; }
            if (o == t.n) return true;
        }
        return false;
    }
    return false; // dicyclic (m >= 2) and nontrivial semidirects never are
}

// ---------------------------------------------------------------------------
// Canonical text form and ordering
// ---------------------------------------------------------------------------

namespace {

int family_rank(const GroupSpec::Node& n) { return static_cast<int>(n.index()); }

} // namespace

std::string GroupSpec::canonical() const {
    struct V {
        std::string operator()(const CyclicSpec& s) const { return "C" + s.n.str(); }
        std::string operator()(const AbelianSpec& s) const {
            std::ostringstream os;
            os << "A[";
            bool first = true;
            for (const auto& [p, lam] : s.components) {
                if (!first) os << ';';
                first = false;
                os << p << ':' << lam.str();
            }
            os << ']';
            return os.str();
        }
        std::string operator()(const DihedralSpec& s) const { return "D" + s.m.str(); }
        std::string operator()(const DicyclicSpec& s) const { return "Dic" + s.m.str(); }
        std::string operator()(const SemidirectSpec& s) const {
            std::ostringstream os;
            os << "SD(" << s.p << '^' << s.r << ',' << s.m << ',' << s.a << ')';
            return os.str();
        }
        std::string operator()(const ProductSpec& s) const {
            // Flatten nested products, then sort factors.
            std::vector<GroupSpec> flat;
            std::function<void(const GroupSpec&)> collect = [&](const GroupSpec& g) {
                if (const auto* sub = g.get_if<ProductSpec>())
                    for (const auto& f : sub->factors) collect(f);
                else
                    flat.push_back(g);
            };
            for (const auto& f : s.factors) collect(f);
            std::sort(flat.begin(), flat.end(), spec_less);
            std::ostringstream os;
            for (std::size_t i = 0; i < flat.size(); ++i) {
                if (i) os << '*';
                os << flat[i].canonical();
            }
            return os.str();
        }
        std::string operator()(const CayleySpec& s) const { return "file:" + s.label; }
    };
    return std::visit(V{}, *node_);
}

bool spec_less(const GroupSpec& a, const GroupSpec& b) {
    int ra = family_rank(a.node()), rb = family_rank(b.node());
    if (ra != rb) return ra < rb;
    switch (a.node().index()) {
    case 0: return a.get_if<CyclicSpec>()->n < b.get_if<CyclicSpec>()->n;
    case 1: {
        const auto &x = a.get_if<AbelianSpec>()->components, &y = b.get_if<AbelianSpec>()->components;
        return std::lexicographical_compare(
            x.begin(), x.end(), y.begin(), y.end(), [](const auto& l, const auto& r) {
                if (l.first != r.first) return l.first < r.first;
                return l.second < r.second;
            });
    }
    case 2: return a.get_if<DihedralSpec>()->m < b.get_if<DihedralSpec>()->m;
    case 3: return a.get_if<DicyclicSpec>()->m < b.get_if<DicyclicSpec>()->m;
    case 4: {
        const auto *x = a.get_if<SemidirectSpec>(), *y = b.get_if<SemidirectSpec>();
        if (x->p != y->p) return x->p < y->p;
        if (x->r != y->r) return x->r < y->r;
        if (x->m != y->m) return x->m < y->m;
        return x->a < y->a;
    }
    case 5: {
        const auto &x = a.get_if<ProductSpec>()->factors, &y = b.get_if<ProductSpec>()->factors;
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), spec_less);
    }
    default: return a.canonical() < b.canonical();
    }
}

// ---------------------------------------------------------------------------
// Element-level realizations
// ---------------------------------------------------------------------------

namespace {

struct CyclicElems final : GroupElements {
    std::uint64_t n;
    explicit CyclicElems(std::uint64_t n) : n(n) {}
    std::uint64_t size() const override { return n; }
    std::uint64_t identity() const override { return 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        std::uint64_t s = a + b;
        return s >= n ? s - n : s;
    }
};

struct DihedralElems final : GroupElements {
    std::uint64_t m;
    explicit DihedralElems(std::uint64_t m) : m(m) {}
    std::uint64_t size() const override { return 2 * m; }
    std::uint64_t identity() const override { return 0; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const override {
        // r^i (i < m), r^i s (m + i); s r^j = r^{-j} s
        bool sx = x >= m, sy = y >= m;
        std::uint64_t i = sx ? x - m : x, j = sy ? y - m : y;
        std::uint64_t rot = sx ? (i + m - j % m) % m : (i + j) % m;
        return (sx != sy) ? m + rot : rot;
    }
};

struct DicyclicElems final : GroupElements {
    std::uint64_t m; // order 4m; a has order 2m, b^2 = a^m
    explicit DicyclicElems(std::uint64_t m) : m(m) {}
    std::uint64_t size() const override { return 4 * m; }
    std::uint64_t identity() const override { return 0; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const override {
        std::uint64_t n2 = 2 * m;
        bool bx = x >= n2, by = y >= n2;
        std::uint64_t i = bx ? x - n2 : x, j = by ? y - n2 : y;
        if (!bx && !by) return (i + j) % n2;
        if (!bx) return n2 + (i + j) % n2;        // a^i (a^j b) = a^{i+j} b
        if (!by) return n2 + (i + n2 - j) % n2;   // (a^i b) a^j = a^{i-j} b
        return (i + n2 - j + m) % n2;             // (a^i b)(a^j b) = a^{i-j+m}
    }
};

struct SemidirectElems final : GroupElements {
    std::uint64_t q; // p^r
    std::uint64_t m;
    std::vector<std::uint64_t> apow; // a^x mod q for x in [0, m)
    SemidirectElems(std::uint64_t q, std::uint64_t m, std::uint64_t a) : q(q), m(m), apow(m) {
        std::uint64_t cur = 1;
        for (std::uint64_t x = 0; x < m; ++x) {
            apow[x] = cur;
            cur = static_cast<std::uint64_t>((static_cast<unsigned __int128>(cur) * a) % q);
        }
    }
    std::uint64_t size() const override { return q * m; }
    std::uint64_t identity() const override { return 0; }
    std::uint64_t mul(std::uint64_t x, std::uint64_t y) const override {
        std::uint64_t u1 = x / m, x1 = x % m, u2 = y / m, x2 = y % m;
        std::uint64_t u = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(apow[x1]) * u2 + u1) % q);
        std::uint64_t xx = x1 + x2;
        if (xx >= m) xx -= m;
        return u * m + xx;
    }
};

struct PairElems final : GroupElements {
    std::unique_ptr<GroupElements> left, right;
    std::uint64_t rn;
    PairElems(std::unique_ptr<GroupElements> l, std::unique_ptr<GroupElements> r)
        : left(std::move(l)), right(std::move(r)), rn(right->size()) {}
    std::uint64_t size() const override { return left->size() * rn; }
    std::uint64_t identity() const override { return left->identity() * rn + right->identity(); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        return left->mul(a / rn, b / rn) * rn + right->mul(a % rn, b % rn);
    }
};

struct TableElems final : GroupElements {
    std::shared_ptr<const CayleyTable> t;
    explicit TableElems(std::shared_ptr<const CayleyTable> t) : t(std::move(t)) {}
    std::uint64_t size() const override { return t->n; }
    std::uint64_t identity() const override { return t->identity; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const override {
        return t->at(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
};

} // namespace

std::unique_ptr<GroupElements> make_elements(const GroupSpec& spec) {
    struct V {
        std::unique_ptr<GroupElements> operator()(const CyclicSpec& s) const {
            return std::make_unique<CyclicElems>(s.n.to_u64());
        }
        std::unique_ptr<GroupElements> operator()(const AbelianSpec& s) const {
            // prime ascending, parts ascending: Z_{p^{r_1}} x ... as a chain.
            std::unique_ptr<GroupElements> acc;
            for (const auto& [p, lam] : s.components) {
                for (unsigned r : lam.parts()) {
                    auto f = std::make_unique<CyclicElems>(pow(p, r).to_u64());
                    acc = acc ? std::unique_ptr<GroupElements>(
                                    std::make_unique<PairElems>(std::move(acc), std::move(f)))
                              : std::move(f);
                }
            }
            return acc;
        }
        std::unique_ptr<GroupElements> operator()(const DihedralSpec& s) const {
            return std::make_unique<DihedralElems>(s.m.to_u64());
        }
        std::unique_ptr<GroupElements> operator()(const DicyclicSpec& s) const {
            return std::make_unique<DicyclicElems>(s.m.to_u64());
        }
        std::unique_ptr<GroupElements> operator()(const SemidirectSpec& s) const {
            return std::make_unique<SemidirectElems>(s.modulus().to_u64(), s.m.to_u64(),
                                                     s.a.to_u64());
        }
        std::unique_ptr<GroupElements> operator()(const ProductSpec& s) const {
            std::unique_ptr<GroupElements> acc;
            for (const auto& f : s.factors) {
                auto e = make_elements(f);
                acc = acc ? std::unique_ptr<GroupElements>(
                                std::make_unique<PairElems>(std::move(acc), std::move(e)))
                          : std::move(e);
            }
            return acc;
        }
        std::unique_ptr<GroupElements> operator()(const CayleySpec& s) const {
            return std::make_unique<TableElems>(s.table);
        }
    };
    return std::visit(V{}, spec.node());
}

CayleyTable build_cayley(const GroupSpec& spec, std::uint64_t cap) {
    Natural order = spec.order();
    if (order > Natural(cap))
        throw resource_error("group order " + order.str() + " exceeds Cayley materialization cap " +
                             std::to_string(cap));
    spec.validate();
    auto elems = make_elements(spec);
    std::uint64_t n = elems->size();
    CayleyTable t;
    t.n = static_cast<std::uint32_t>(n);
    t.identity = static_cast<std::uint32_t>(elems->identity());
    t.table.resize(n * n);
    for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = 0; j < n; ++j)
            t.table[i * n + j] = static_cast<std::uint32_t>(elems->mul(i, j));
    return t;
}

// ---------------------------------------------------------------------------
// Cayley-table validation and IO
// ---------------------------------------------------------------------------

void CayleyTable::validate_latin_identity() const {
    if (n == 0) throw validation_error("Cayley table must have n >= 1");
    if (table.size() != std::size_t(n) * n)
        throw validation_error("Cayley table has " + std::to_string(table.size()) +
                               " entries, expected " + std::to_string(std::size_t(n) * n));
    if (identity >= n) throw validation_error("identity index out of range");
    std::vector<std::uint32_t> seen(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), n);
        for (std::uint32_t j = 0; j < n; ++j) {
            std::uint32_t v = at(i, j);
            if (v >= n)
                throw validation_error("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") holds out-of-range index " + std::to_string(v));
            if (seen[v] != n)
                throw validation_error("row " + std::to_string(i) + " repeats element " +
                                       std::to_string(v) + " at columns " +
                                       std::to_string(seen[v]) + " and " + std::to_string(j));
            seen[v] = j;
        }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        std::fill(seen.begin(), seen.end(), n);
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t v = at(i, j);
            if (seen[v] != n)
                throw validation_error("column " + std::to_string(j) + " repeats element " +
                                       std::to_string(v) + " at rows " + std::to_string(seen[v]) +
                                       " and " + std::to_string(i));
            seen[v] = i;
        }
    }
    for (std::uint32_t j = 0; j < n; ++j)
        if (at(identity, j) != j)
            throw validation_error("identity row broken at cell (" + std::to_string(identity) +
                                   "," + std::to_string(j) + ")");
    for (std::uint32_t i = 0; i < n; ++i)
        if (at(i, identity) != i)
            throw validation_error("identity column broken at cell (" + std::to_string(i) + "," +
                                   std::to_string(identity) + ")");
}

void CayleyTable::validate_associativity() const {
    // Greedy generating set: close under products, adopt the first element
    // outside the closure as a new generator. Light's test then checks
    // (x*g)*y == x*(g*y) for generators only.
    std::vector<char> in(n, 0);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> gens;
    auto add = [&](std::uint32_t v) {
        if (!in[v]) { in[v] = 1; members.push_back(v); }
    };
    add(identity);
    std::size_t processed = 0;
    std::uint32_t next_candidate = 0;
    while (members.size() < n) {
        if (processed == members.size()) {
            while (in[next_candidate]) ++next_candidate;
            gens.push_back(next_candidate);
            add(next_candidate);
        }
        // close pairs (members[processed], members[j]) for j <= processed
        std::uint32_t x = members[processed];
        for (std::size_t j = 0; j <= processed; ++j) {
            add(at(x, members[j]));
            add(at(members[j], x));
        }
        ++processed;
    }
    for (std::uint32_t g : gens) {
        for (std::uint32_t x = 0; x < n; ++x) {
            std::uint32_t xg = at(x, g);
            for (std::uint32_t y = 0; y < n; ++y) {
                if (at(xg, y) != at(x, at(g, y)))
                    throw validation_error("associativity fails at (x,a,y)=(" + std::to_string(x) +
                                           "," + std::to_string(g) + "," + std::to_string(y) +
                                           "): (x*a)*y=" + std::to_string(at(xg, y)) +
                                           " but x*(a*y)=" + std::to_string(at(x, at(g, y))));
            }
        }
    }
}

CayleyTable load_cayley_json(const std::string& json_text, CayleyCheckPolicy policy,
                             const std::string& origin) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw validation_error(origin + ": not valid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("table"))
        throw validation_error(origin + ": expected object with \"n\", \"identity\", \"table\"");
    std::int64_t n = j.at("n").get<std::int64_t>();
    if (n < 1 || n > 10000)
        throw validation_error(origin + ": table size n must be in [1, 10000]");
    CayleyTable t;
    t.n = static_cast<std::uint32_t>(n);
    t.identity = j.value("identity", 0u);
    const auto& rows = j.at("table");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n))
        throw validation_error(origin + ": \"table\" must be an array of " + std::to_string(n) +
                               " rows");
    t.table.reserve(std::size_t(n) * n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw validation_error(origin + ": row " + std::to_string(i) + " must have " +
                                   std::to_string(n) + " entries");
        for (const auto& cell : row) {
            if (!cell.is_number_unsigned() && !cell.is_number_integer())
                throw validation_error(origin + ": non-integer cell in row " + std::to_string(i));
            std::int64_t v = cell.get<std::int64_t>();
            if (v < 0 || v >= n)
                throw validation_error(origin + ": cell value " + std::to_string(v) +
                                       " out of range in row " + std::to_string(i));
            t.table.push_back(static_cast<std::uint32_t>(v));
        }
    }
    t.validate_latin_identity();
    bool check = policy == CayleyCheckPolicy::Always ||
                 (policy == CayleyCheckPolicy::Auto && t.n <= 512);
    if (check) t.validate_associativity();
    return t;
}

CayleyTable load_cayley_file(const std::string& path, CayleyCheckPolicy policy) {
    std::ifstream f(path);
    if (!f) throw validation_error("cannot open Cayley table file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return load_cayley_json(ss.str(), policy, path);
}

std::string cayley_to_json(const CayleyTable& t) {
    json rows = json::array();
    for (std::uint32_t i = 0; i < t.n; ++i) {
        json row = json::array();
        for (std::uint32_t j = 0; j < t.n; ++j) row.push_back(t.at(i, j));
        rows.push_back(std::move(row));
    }
    json j{{"n", t.n}, {"identity", t.identity}, {"table", std::move(rows)}};
    return j.dump();
}

} // namespace psik
