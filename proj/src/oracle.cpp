#include "fibpart/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <ostream>
#include <queue>
#include <set>
#include <thread>

#include "fibpart/complement.hpp"
#include "fibpart/fibbinary.hpp"

namespace fibpart::oracle {

namespace {

using Clock = std::chrono::steady_clock;

struct Witness {
    natural k = 0;
    natural n = 0;
    std::uint8_t hits = 0;  // saturates at 2
};

struct Hit {
    natural m;
    natural k;
    natural n;
};

struct ChunkResult {
    natural checked = 0;
    natural failure_count = 0;
    std::vector<Failure> failures;

    void fail(natural m, std::string expected, std::string actual) {
        ++failure_count;
        if (failures.size() < kMaxReportedFailures) {
            failures.push_back(Failure{m, std::move(expected), std::move(actual)});
        }
    }
};

std::string cell_text(natural k, natural n) {
    return std::to_string(k) + "," + std::to_string(n);
}

std::string witness_text(const Witness& w) {
    if (w.hits == 0) return "uncovered";
    if (w.hits > 1) return "multiply-covered";
    return cell_text(w.k, w.n);
}

unsigned effective_jobs(unsigned jobs) { return jobs == 0 ? 1 : jobs; }

// Runs body(worker) for worker in [0, jobs) and waits for all of them.
void run_parallel(unsigned jobs, const std::function<void(unsigned)>& body) {
    if (jobs == 1) {
        body(0);
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(body, w);
}

void record(std::vector<Witness>& slots, const Hit& h) {
    Witness& w = slots[h.m];
    if (w.hits == 0) {
        w.k = h.k;
        w.n = h.n;
    }
    if (w.hits < 2) ++w.hits;
}

// Builds per-value witnesses from hits produced per set index, in a fixed
// merge order so the outcome is independent of the job count.
std::vector<Witness> collect(natural limit, natural max_k, unsigned jobs,
                             const std::function<void(natural, std::vector<Hit>&)>& emit) {
    std::vector<std::vector<Hit>> per_worker(jobs);
    run_parallel(jobs, [&](unsigned w) {
        for (natural k = w; k <= max_k; k += jobs) emit(k, per_worker[w]);
    });
    std::vector<Witness> slots(limit + 1);
    for (const auto& hits : per_worker) {
        for (const Hit& h : hits) record(slots, h);
    }
    return slots;
}

// Splits [1, limit] into contiguous chunks, checks each value, and merges the
// chunk results in ascending order.
VerificationReport check_range(natural limit, unsigned jobs,
                               const std::function<void(natural, ChunkResult&)>& check) {
    std::vector<ChunkResult> chunks(jobs);
    const natural span = (limit + jobs - 1) / jobs;
    run_parallel(jobs, [&](unsigned w) {
        const natural lo = 1 + natural{w} * span;
        const natural hi = std::min(limit, lo + span - 1);
        for (natural m = lo; m <= hi && m >= lo; ++m) check(m, chunks[w]);
    });
    VerificationReport report;
    report.range_lo = 1;
    report.range_hi = limit;
    for (ChunkResult& c : chunks) {
        report.checked += c.checked;
        report.failure_count += c.failure_count;
        for (Failure& f : c.failures) {
            if (report.failures.size() < kMaxReportedFailures) {
                report.failures.push_back(std::move(f));
            }
        }
    }
    return report;
}

natural max_set_index(natural limit) { return (limit + 1) / 4; }

} // namespace

std::string VerificationReport::summary() const {
    if (ok()) return "OK " + std::to_string(checked) + " checked";
    return "FAILED " + std::to_string(failure_count) + " of " + std::to_string(checked) +
           " checked";
}

void VerificationReport::write_failures(std::ostream& os) const {
    for (const Failure& f : failures) {
        os << "FAIL " << f.m << ' ' << f.expected << ' ' << f.actual << '\n';
    }
}

std::string binary_digits(natural m) {
    std::string digits;
    while (m != 0) {
        digits.push_back(static_cast<char>('0' + m % 2));
        m /= 2;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool naive_is_fibbinary(natural m) {
    return binary_digits(m).find("11") == std::string::npos;
}

std::vector<natural> naive_closure(natural k, natural limit) {
    if (k > (natural{1} << 62)) return {};
    const natural seed = k == 0 ? 1 : 4 * k - 1;
    if (seed > limit) return {};
    std::set<natural> seen{seed};
    std::queue<natural> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
        const natural j = frontier.front();
        frontier.pop();
        if (j <= limit / 2 && seen.insert(2 * j).second) frontier.push(2 * j);
        if (j <= (limit - 1) / 4 && seen.insert(4 * j + 1).second) frontier.push(4 * j + 1);
    }
    return {seen.begin(), seen.end()};
}

bool naive_membership(natural k, natural m, natural limit) {
    const std::vector<natural> members = naive_closure(k, limit);
    return std::find(members.begin(), members.end(), m) != members.end();
}

VerificationReport verify_partition(natural limit, unsigned jobs) {
    const auto start = Clock::now();
    jobs = effective_jobs(jobs);
    if (limit == 0) return VerificationReport{};

    const std::vector<Witness> expected =
        collect(limit, max_set_index(limit), jobs, [limit](natural k, std::vector<Hit>& out) {
            const std::vector<natural> members = naive_closure(k, limit);
            for (std::size_t i = 0; i < members.size(); ++i) {
                out.push_back(Hit{members[i], k, i + 1});
            }
        });

    VerificationReport report = check_range(limit, jobs, [&](natural m, ChunkResult& res) {
        ++res.checked;
        const Witness& want = expected[m];
        std::string actual;
        bool good = want.hits == 1;
        try {
            const PartitionCell cell = classify(m);
            actual = cell_text(cell.k, cell.n);
            good = good && cell.k == want.k && cell.n == want.n;
            const natural back = phi(cell.k, cell.n);
            if (back != m) {
                actual += "->" + std::to_string(back);
                good = false;
            }
        } catch (const std::exception&) {
            actual = "error";
            good = false;
        }
        if (!good) res.fail(m, witness_text(want), std::move(actual));
    });
    report.elapsed = Clock::now() - start;
    return report;
}

VerificationReport verify_odd_partition(natural limit, unsigned jobs) {
    const auto start = Clock::now();
    jobs = effective_jobs(jobs);
    if (limit == 0) return VerificationReport{};
    const natural max_k = max_set_index(limit);

    const std::vector<Witness> expected =
        collect(limit, max_k, jobs, [limit](natural k, std::vector<Hit>& out) {
            natural index = 0;
            for (const natural m : naive_closure(k, limit)) {
                if (m % 2 == 1) out.push_back(Hit{m, k, index++});
            }
        });
    const std::vector<Witness> streamed =
        collect(limit, max_k, jobs, [limit](natural k, std::vector<Hit>& out) {
            const std::vector<natural> members = psi_stream(k, limit);
            for (std::size_t i = 0; i < members.size(); ++i) {
                out.push_back(Hit{members[i], k, i});
            }
        });

    VerificationReport report = check_range(limit, jobs, [&](natural m, ChunkResult& res) {
        if (m % 2 == 0) return;
        ++res.checked;
        const Witness& want = expected[m];
        const Witness& stream = streamed[m];
        bool good = want.hits == 1;
        std::string actual;
        try {
            const OddSplit split = decompose_odd(m);
            const natural k = split.pp == 0 ? 0 : (split.pp + 1) / 2;
            const natural n = odfib_rank(split.op);
            actual = cell_text(k, n);
            good = good && k == want.k && n == want.n;
            const natural back = psi(k, n);
            if (back != m) {
                actual += "->" + std::to_string(back);
                good = false;
            }
        } catch (const std::exception&) {
            actual = "error";
            good = false;
        }
        if (stream.hits != 1 || stream.k != want.k || stream.n != want.n) {
            actual += "/stream:" + witness_text(stream);
            good = false;
        }
        if (!good) res.fail(m, witness_text(want), std::move(actual));
    });
    report.elapsed = Clock::now() - start;
    return report;
}

} // namespace fibpart::oracle
