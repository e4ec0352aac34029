#include "psik/cache.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "psik/parse.hpp"

namespace psik {

using nlohmann::json;

std::string PsiCache::key(const std::string& canonical_spec, unsigned k) {
    return canonical_spec + "|k=" + std::to_string(k);
}

PsiCache::PsiCache(std::string path, std::function<void(const std::string&)> warn)
    : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return; // fresh cache
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            json j = json::parse(line);
            std::string key = j.at("key").get<std::string>();
            Entry e{j.at("psi").get<std::string>(), j.value("route", "")};
            Natural::from_decimal(e.value); // reject non-numeric payloads
            entries_[key] = std::move(e);
        } catch (const std::exception& ex) {
            if (warn)
                warn(path_ + ":" + std::to_string(lineno) + ": skipping unreadable cache line (" +
                     ex.what() + ")");
        }
    }
}

std::optional<PsiCache::Entry> PsiCache::lookup(const std::string& canonical_spec,
                                                unsigned k) const {
    auto it = entries_.find(key(canonical_spec, k));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void PsiCache::store(const std::string& canonical_spec, unsigned k, const PsiValue& value) {
    std::string cache_key = key(canonical_spec, k);
    Entry e{value.value.str(), value.route};
    auto [it, inserted] = entries_.emplace(cache_key, e);
    if (!inserted) return; // already present; append-only file stays clean
    std::ofstream out(path_, std::ios::app);
    if (!out) throw validation_error("cannot append to cache file: " + path_);
    json j{{"key", cache_key}, {"psi", e.value}, {"route", e.route}};
    out << j.dump() << '\n';
}

std::size_t PsiCache::verify_all(const std::function<void(const std::string&)>& report) const {
    std::size_t mismatches = 0;
    for (const auto& [k, e] : entries_) {
        auto sep = k.rfind("|k=");
        if (sep == std::string::npos) {
            ++mismatches;
            if (report) report("malformed cache key: " + k);
            continue;
        }
        std::string spec_text = k.substr(0, sep);
        unsigned kk = static_cast<unsigned>(std::stoul(k.substr(sep + 3)));
        try {
            PsiValue fresh = psi(parse_spec(spec_text), kk);
            if (fresh.value.str() != e.value) {
                ++mismatches;
                if (report)
                    report("cache mismatch for " + k + ": cached " + e.value + ", recomputed " +
                           fresh.value.str());
            }
        } catch (const std::exception& ex) {
            ++mismatches;
            if (report) report("cache entry " + k + " cannot be re-derived: " + ex.what());
        }
    }
    return mismatches;
}

} // namespace psik
