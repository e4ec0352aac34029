#pragma once

// Structural group descriptions and explicit (Cayley-table) realizations for
// every family the library knows how to build: cyclic, abelian, dihedral,
// dicyclic, cyclic-by-cyclic semidirect products, direct products, and
// user-supplied multiplication tables.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "psik/arith.hpp"
#include "psik/partition.hpp"

namespace psik {

class GroupSpec;

/// Explicit multiplication table on element indices 0..n-1, row-major:
/// table[i*n + j] = i*j. Untrusted input; validate before use.
struct CayleyTable {
    std::uint32_t n = 0;
    std::uint32_t identity = 0;
    std::vector<std::uint32_t> table;

    std::uint32_t at(std::uint32_t i, std::uint32_t j) const { return table[std::size_t(i) * n + j]; }

    /// Latin-square property plus identity row/column. Throws
    /// validation_error naming the failing cell.
    void validate_latin_identity() const;

    /// Full associativity proof via Light's test: O(|generators| * n^2).
    void validate_associativity() const;

    bool operator==(const CayleyTable&) const = default;
};

enum class CayleyCheckPolicy {
    Auto,   // associativity checked iff n <= 512
    Always,
    Never,  // Latin square and identity are still always checked
};

/// Parse {"n":..., "identity":..., "table":[[...]]} and validate per policy.
CayleyTable load_cayley_json(const std::string& json_text, CayleyCheckPolicy policy,
                             const std::string& origin = "<input>");
CayleyTable load_cayley_file(const std::string& path, CayleyCheckPolicy policy);
std::string cayley_to_json(const CayleyTable& t);

struct CyclicSpec {
    Natural n; // order n >= 1
    bool operator==(const CyclicSpec&) const = default;
};

struct AbelianSpec {
    // prime -> exponent partition; the group is the direct product over all
    // entries of Z_{p^{r_1}} x ... x Z_{p^{r_t}}.
    std::map<Natural, Partition> components;
    bool operator==(const AbelianSpec&) const = default;
};

struct DihedralSpec {
    Natural m; // order 2m; D_18 here is the 36-element group
    bool operator==(const DihedralSpec&) const = default;
};

struct DicyclicSpec {
    Natural m; // order 4m, m >= 2; Dic_2 is the quaternion group
    bool operator==(const DicyclicSpec&) const = default;
};

struct SemidirectSpec {
    // Z_{p^r} x| Z_m, the generator of Z_m acting by u -> u^a.
    // Requires gcd(p, m) = 1, m >= 2, 1 <= a < p^r, a^m = 1 (mod p^r).
    Natural p;
    unsigned r = 1;
    Natural m;
    Natural a;
    bool operator==(const SemidirectSpec&) const = default;

    Natural modulus() const { return pow(p, r); }
    /// Order of a in the unit group mod p^r (the action order).
    Natural action_order() const;
    /// Size of the kernel Z = C_F(P) inside Z_m: m / action_order().
    Natural kernel_order() const { return m / action_order(); }
};

struct ProductSpec {
    std::vector<GroupSpec> factors; // at least one
    bool operator==(const ProductSpec&) const;
};

struct CayleySpec {
    std::shared_ptr<const CayleyTable> table;
    std::string label; // file path or synthetic name, for rendering
    bool operator==(const CayleySpec& o) const { return *table == *o.table; }
};

/// Tagged structural description of a finite group.
class GroupSpec {
public:
    using Node = std::variant<CyclicSpec, AbelianSpec, DihedralSpec, DicyclicSpec,
                              SemidirectSpec, ProductSpec, CayleySpec>;

    GroupSpec(Node node) : node_(std::make_shared<Node>(std::move(node))) {}

    static GroupSpec cyclic(Natural n) { return GroupSpec(CyclicSpec{std::move(n)}); }
    static GroupSpec abelian_p(Natural p, Partition lambda);
    static GroupSpec abelian(std::map<Natural, Partition> components);
    static GroupSpec dihedral(Natural m) { return GroupSpec(DihedralSpec{std::move(m)}); }
    static GroupSpec dicyclic(Natural m) { return GroupSpec(DicyclicSpec{std::move(m)}); }
    static GroupSpec semidirect(Natural p, unsigned r, Natural m, Natural a);
    static GroupSpec product(std::vector<GroupSpec> factors);
    static GroupSpec cayley(CayleyTable table, std::string label = "cayley");

    const Node& node() const { return *node_; }

    template <class T> const T* get_if() const { return std::get_if<T>(node_.get()); }

    Natural order() const;

    /// Structural cyclicity: true iff the description reduces to Z_n after
    /// coprime merging and single-part collapse; Cayley tables are decided
    /// by whether an element of full order exists.
    bool cyclic() const;

    /// Checks all structural invariants, recursively. Cayley associativity
    /// obeys the given policy.
    void validate(CayleyCheckPolicy policy = CayleyCheckPolicy::Auto) const;

    /// Canonical text form in the CLI grammar: abelian components sorted by
    /// prime, partitions ascending, product factors sorted. Used for cache
    /// keys and deterministic ordering.
    std::string canonical() const;

    bool operator==(const GroupSpec& o) const { return *node_ == *o.node_; }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

private:
    std::shared_ptr<Node> node_; // shared: specs are freely copied into reports
};

/// Deterministic structural total order (family tag, then parameters).
bool spec_less(const GroupSpec& a, const GroupSpec& b);

/// Finite group with explicit multiplication on element indices; identity is
/// always index 0 for built-ins. Element enumeration per family:
///   cyclic n:          i  <->  residue i
///   abelian/products:  mixed radix over factors, last factor fastest
///   dihedral m:        i < m rotation r^i, m+i reflection r^i s
///   dicyclic m:        i < 2m power a^i, 2m+i element a^i b
///   semidirect:        (u, x)  <->  u*m + x
class GroupElements {
public:
    virtual ~GroupElements() = default;
    virtual std::uint64_t size() const = 0;
    virtual std::uint64_t identity() const = 0;
    virtual std::uint64_t mul(std::uint64_t a, std::uint64_t b) const = 0;
};

/// Element-level realization of a spec; requires the order to fit in 64 bits.
std::unique_ptr<GroupElements> make_elements(const GroupSpec& spec);

/// Materialize the full multiplication table. Orders above the cap are
/// refused with resource_error.
CayleyTable build_cayley(const GroupSpec& spec, std::uint64_t cap = 5000);

} // namespace psik
