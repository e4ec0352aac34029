#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "psik/errors.hpp"

namespace psik {

/// Exponent partition r_1 <= r_2 <= ... <= r_t of an abelian p-group type
/// Z_{p^{r_1}} x ... x Z_{p^{r_t}}. Nonempty, ascending, parts >= 1.
class Partition {
public:
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw validation_error("partition must be nonempty");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0) throw validation_error("partition parts must be >= 1");
            if (i > 0 && parts_[i - 1] > parts_[i])
                throw validation_error("partition parts must be ascending");
        }
    }

    const std::vector<unsigned>& parts() const { return parts_; }
    std::size_t count() const { return parts_.size(); }
    unsigned smallest() const { return parts_.front(); }
    unsigned largest() const { return parts_.back(); }

    unsigned sum() const {
        unsigned s = 0;
        for (unsigned p : parts_) s += p;
        return s;
    }

    bool all_equal() const { return parts_.front() == parts_.back(); }
    bool all_ones() const { return parts_.back() == 1; }

    /// Partition with the smallest part removed; only valid for count() >= 2.
    Partition rest() const {
        return Partition(std::vector<unsigned>(parts_.begin() + 1, parts_.end()));
    }

    std::string str() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<unsigned> parts_;
};

/// All partitions of m in ascending-part form, ordered lexicographically.
std::vector<Partition> partitions_of(unsigned m);

} // namespace psik
