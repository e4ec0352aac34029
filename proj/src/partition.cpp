#include "psik/partition.hpp"

#include <sstream>

namespace psik {

std::string Partition::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

namespace {
void gen(unsigned remaining, unsigned lo, std::vector<unsigned>& acc,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (unsigned first = lo; first <= remaining; ++first) {
        acc.push_back(first);
        gen(remaining - first, first, acc, out);
        acc.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(unsigned m) {
    if (m == 0) return {};
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    gen(m, 1, acc, out);
    return out;
}

} // namespace psik
