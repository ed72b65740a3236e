#include "fibperm/verify.hpp"

#include <sstream>

#include "fibperm/enumeration.hpp"

namespace fibperm {

namespace {

std::string discrepancy_text(const VerifyRow& row) {
    std::ostringstream os;
    os << "n=" << row.n << ": closed=" << row.closed;
    if (row.oracle) os << " oracle=" << *row.oracle;
    if (row.series) os << " series=" << *row.series;
    return os.str();
}

} // namespace

VerifyReport verify_formula(const Formula& f, const VerifyOptions& opt) {
    VerifyReport report;
    report.id = f.id;
    report.used_gf = f.has_gf();
    report.n_lo = f.valid_from;
    report.n_hi = opt.nmax;
    if (report.n_hi < report.n_lo) report.n_hi = report.n_lo;

    const PatternSet patterns = f.pattern_set();
    std::vector<BigInt> coeffs;
    if (f.has_gf()) coeffs = f.gf().series(static_cast<int>(report.n_hi));

    const long long oracle_hi = std::min<long long>(opt.oracle_max, report.n_hi);
    for (long long n = report.n_lo; n <= report.n_hi; ++n) {
        VerifyRow row;
        row.n = n;
        row.closed = f.closed(n);
        if (n >= std::max<long long>(report.n_lo, 1) && n <= oracle_hi)
            row.oracle = count_avoiders(static_cast<int>(n), patterns);
        if (f.has_gf())
            row.series = coeffs[static_cast<size_t>(n)];
        else if (f.reference)
            row.series = f.reference(n);
        row.ok = (!row.oracle || *row.oracle == row.closed) &&
                 (!row.series || *row.series == row.closed);
        if (!row.ok && report.pass) {
            report.pass = false;
            report.first_discrepancy = discrepancy_text(row);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

VerifyReport verify_formula(const std::string& id, const VerifyOptions& opt) {
    return verify_formula(find_formula(id), opt);
}

std::vector<VerifyReport> verify_all(const VerifyOptions& opt) {
    std::vector<VerifyReport> reports;
    reports.reserve(formula_registry().size());
    for (const auto& f : formula_registry()) reports.push_back(verify_formula(f, opt));
    return reports;
}

} // namespace fibperm
