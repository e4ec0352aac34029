#pragma once

// Optional append-only psi cache: one JSON record per line, keyed by the
// canonical spec text plus k. Unreadable lines are skipped with a warning
// and never trusted; hits can be re-derived on demand.

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "psik/psi.hpp"

namespace psik {

class PsiCache {
public:
    /// Loads existing entries from `path` (which may not exist yet); new
    /// entries are appended on store(). Warnings go to the given callback.
    PsiCache(std::string path, std::function<void(const std::string&)> warn = {});

    struct Entry {
        std::string value;
        std::string route;
    };

    std::optional<Entry> lookup(const std::string& canonical_spec, unsigned k) const;
    void store(const std::string& canonical_spec, unsigned k, const PsiValue& value);

    std::size_t size() const { return entries_.size(); }
    const std::string& path() const { return path_; }

    /// Recompute every entry and compare; returns the number of mismatches
    /// and reports each through the callback.
    std::size_t verify_all(const std::function<void(const std::string&)>& report) const;

    static std::string key(const std::string& canonical_spec, unsigned k);

private:
    std::string path_;
    std::map<std::string, Entry> entries_;
};

} // namespace psik
