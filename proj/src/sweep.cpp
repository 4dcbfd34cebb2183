#include "starprism/sweep.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "starprism/errors.hpp"
#include "starprism/solver.hpp"

namespace starprism {

namespace {

SweepRecord run_one(int n, int m, const SweepOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const FormulaResult formula = closed_form_rn(n, m);
    const ConstructionReport report = construct_best(n, m, options.seeds);

    SweepRecord record;
    record.n = n;
    record.m = m;
    record.parity = formula.parity;
    record.formula_rn = formula.value;
    record.constructed_span = report.achieved_span;
    record.paper_literal_violations = report.paper_literal_violations;
    if ((n + 1) * m <= options.exact_vertex_cap) {
        const unsigned seed = options.seeds.empty() ? 0 : options.seeds.front();
        const ExactResult exact =
            exact_rn(Graph::star_cycle_product(n, m), options.budget, seed);
        record.exact_rn = exact.optimum;
        record.exact_status = std::string(to_string(exact.status));
    } else {
        record.exact_status = "skipped";
    }
    record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return record;
}

} // namespace

std::vector<SweepRecord> run_sweep(IntRange n_range, IntRange m_range,
                                   const SweepOptions& options) {
    if (options.jobs < 1) {
        throw UsageError("jobs must be >= 1, got " + std::to_string(options.jobs));
    }
    if (n_range.lo > n_range.hi || m_range.lo > m_range.hi) {
        throw UsageError("empty sweep grid: range bounds are reversed");
    }
    if (n_range.lo < 2) {
        throw UsageError("n range must start at 2 or above, got " +
                         std::to_string(n_range.lo));
    }

    std::vector<std::pair<int, int>> grid;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        for (int m = m_range.lo; m <= m_range.hi; ++m) {
            if (in_theorem_range(n, m)) grid.emplace_back(n, m);
        }
    }
    if (grid.empty()) {
        throw UsageError("empty sweep grid: no (n, m) pair inside the formula range");
    }

    std::vector<SweepRecord> records(grid.size());
    const int workers = std::min<int>(options.jobs, static_cast<int>(grid.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) {
            records[i] = run_one(grid[i].first, grid[i].second, options);
        }
        return records;
    }

    // Per-(n, m) tasks; each result lands in its grid slot, so the output
    // order never depends on the schedule.
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= grid.size()) return;
                records[i] = run_one(grid[i].first, grid[i].second, options);
            }
        });
    }
    for (auto& t : pool) t.join();
    return records;
}

std::string sweep_csv(std::span<const SweepRecord> records, bool include_timing) {
    std::ostringstream out;
    out << "n,m,parity,formula_rn,constructed_span,paper_literal_violations,"
           "exact_rn,exact_status,elapsed_ms\n";
    for (const SweepRecord& r : records) {
        out << r.n << ',' << r.m << ',' << to_string(r.parity) << ',' << r.formula_rn
            << ',' << r.constructed_span << ',' << r.paper_literal_violations << ',';
        if (r.exact_rn) out << *r.exact_rn;
        out << ',' << r.exact_status << ',';
        if (include_timing) out << r.elapsed_ms;
        out << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
        const size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

long long parse_int_field(const std::string& value, const std::string& field) {
    try {
        size_t pos = 0;
        const long long parsed = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw UsageError("field '" + field + "' is not an integer: '" + value + "'");
    }
}

} // namespace

std::vector<SweepRecord> parse_sweep_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) ||
        line != "n,m,parity,formula_rn,constructed_span,paper_literal_violations,"
                "exact_rn,exact_status,elapsed_ms") {
        throw UsageError("field 'header' is not a sweep CSV header");
    }
    std::vector<SweepRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_line(line);
        if (f.size() != 9) {
            throw UsageError("field 'row' has " + std::to_string(f.size()) +
                             " columns, expected 9");
        }
        SweepRecord r;
        r.n = static_cast<int>(parse_int_field(f[0], "n"));
        r.m = static_cast<int>(parse_int_field(f[1], "m"));
        if (f[2] != "even" && f[2] != "odd") {
            throw UsageError("field 'parity' must be even or odd, got '" + f[2] + "'");
        }
        r.parity = f[2] == "even" ? Parity::even : Parity::odd;
        r.formula_rn = parse_int_field(f[3], "formula_rn");
        r.constructed_span = static_cast<int>(parse_int_field(f[4], "constructed_span"));
        r.paper_literal_violations =
            static_cast<int>(parse_int_field(f[5], "paper_literal_violations"));
        if (!f[6].empty()) r.exact_rn = static_cast<int>(parse_int_field(f[6], "exact_rn"));
        r.exact_status = f[7];
        r.elapsed_ms = f[8].empty() ? 0 : parse_int_field(f[8], "elapsed_ms");
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace starprism
