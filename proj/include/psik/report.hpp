#pragma once

// Rendering of reports and scan records: human tables, JSON lines and CSV.
// Big values are always decimal strings in machine formats; nothing is ever
// rounded.

#include <iosfwd>
#include <string>

#include "psik/psi.hpp"
#include "psik/search.hpp"
#include "psik/verify.hpp"

namespace psik {

enum class OutputFormat { Table, Json, Csv };

OutputFormat format_from_name(const std::string& name); // usage_error on junk

/// Streaming emitter for BoundReports; header/footer handled per format.
class ReportEmitter {
public:
    ReportEmitter(std::ostream& os, OutputFormat format);
    ~ReportEmitter();
    void emit(const BoundReport& r);

private:
    std::ostream& os_;
    OutputFormat format_;
    std::size_t count_ = 0;
};

std::string report_json_line(const BoundReport& r);

void emit_compute(std::ostream& os, const GroupSpec& spec, const PsiValue& value,
                  OutputFormat format);
void emit_spectrum(std::ostream& os, const GroupSpec& spec, const OrderSpectrum& s,
                   OutputFormat format);
void emit_reversals(std::ostream& os, const std::vector<ReversalWitness>& ws,
                    OutputFormat format);
void emit_extremal(std::ostream& os, std::uint64_t n, unsigned k, const ExtremalResult& res,
                   OutputFormat format);
void emit_ratios(std::ostream& os, const RatioScanResult& res, OutputFormat format);

} // namespace psik
