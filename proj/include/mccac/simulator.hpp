#ifndef MCCAC_SIMULATOR_HPP
#define MCCAC_SIMULATOR_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mccac/code.hpp"
#include "mccac/errors.hpp"
#include "mccac/pattern.hpp"
#include "mccac/rng.hpp"

namespace mccac {

/// One transmitting node: its codeword, its time offset, and when it is active.
struct NodeConfig {
    SchedulingPattern pattern;
    int offset = 0;
    long long activation_slot = 0;
    std::optional<long long> deactivation_slot;  // exclusive

    bool active_at(long long slot) const {
        if (slot < activation_slot) return false;
        if (deactivation_slot && slot >= *deactivation_slot) return false;
        return true;
    }
};

/// Per-slot, per-channel record of who transmitted. A packet gets through iff
/// it is the only one on its channel in its slot; collisions destroy all
/// packets involved.
struct TransmissionLog {
    CodeParams params;
    long long horizon = 0;
    std::vector<NodeConfig> nodes;
    std::vector<std::vector<std::vector<int>>> transmitters;  // [slot][channel] -> node ids

    bool is_success(long long slot, int channel) const {
        return transmitters[slot][channel].size() == 1;
    }

    /// True when the node got at least one packet through in this slot.
    bool node_succeeds_at(int node, long long slot) const {
        for (int channel = 0; channel < params.channels; ++channel) {
            const auto& ids = transmitters[slot][channel];
            if (ids.size() == 1 && ids[0] == node) return true;
        }
        return false;
    }
};

/// Runs the slot-synchronous collision channel: node n transmits at
/// (slot s, channel i) iff n is active at s and (i, (s - offset_n) mod L) is
/// in its pattern. Every node's pattern must belong to the code.
inline TransmissionLog simulate(const Code& code, const std::vector<NodeConfig>& nodes,
                                long long horizon) {
    const CodeParams& params = code.params();
    if (horizon < params.length)
        throw std::invalid_argument("simulate: horizon must cover at least one period");

    std::set<SchedulingPattern> known(code.patterns().begin(), code.patterns().end());
    for (const auto& node : nodes) {
        if (!node.pattern.fits(params))
            throw UnknownCodewordError("simulate: node pattern outside channels x length");
        if (!known.count(canonicalize(node.pattern, params.length)))
            throw UnknownCodewordError("simulate: node pattern is not a codeword of the code");
    }

    TransmissionLog log;
    log.params = params;
    log.horizon = horizon;
    log.nodes = nodes;
    log.transmitters.assign(horizon, std::vector<std::vector<int>>(params.channels));

    for (int n = 0; n < static_cast<int>(nodes.size()); ++n) {
        const NodeConfig& node = nodes[n];
        for (long long slot = std::max<long long>(0, node.activation_slot); slot < horizon;
             ++slot) {
            if (!node.active_at(slot)) break;
            int phase = static_cast<int>(((slot - node.offset) % params.length + params.length) %
                                         params.length);
            for (const Slot& e : node.pattern.entries()) {
                if (e.time == phase) log.transmitters[slot][e.channel].push_back(n);
            }
        }
    }
    return log;
}

enum class GuaranteeStatus { Pass, Fail, NotClaimed };

struct GuaranteeViolation {
    int node = 0;
    long long window_start = 0;
};

struct GuaranteeReport {
    GuaranteeStatus status = GuaranteeStatus::NotClaimed;
    std::vector<GuaranteeViolation> violations;
    // max slots from a window start to the node's first success; length L
    // when some window saw none
    int worst_delay = 0;
    std::string note;
};

/// Checks the hard guarantee: every active node achieves at least one success
/// in every window of L consecutive slots lying fully inside its activity
/// interval. Claimed only while the number of simultaneously active nodes
/// stays within the cap (at most the code weight).
inline GuaranteeReport check_guarantee(const TransmissionLog& log, const Code& code,
                                       int active_count_cap) {
    GuaranteeReport report;
    const int L = code.params().length;

    if (active_count_cap > code.params().weight) {
        report.status = GuaranteeStatus::NotClaimed;
        report.note = "active count cap exceeds the code weight";
        return report;
    }
    for (long long slot = 0; slot < log.horizon; ++slot) {
        int active = 0;
        for (const auto& node : log.nodes) {
            if (node.active_at(slot)) ++active;
        }
        if (active > active_count_cap) {
            report.status = GuaranteeStatus::NotClaimed;
            report.note = "more than " + std::to_string(active_count_cap) +
                          " nodes active at slot " + std::to_string(slot);
            return report;
        }
    }

    report.status = GuaranteeStatus::Pass;
    for (int n = 0; n < static_cast<int>(log.nodes.size()); ++n) {
        const NodeConfig& node = log.nodes[n];
        const long long first = std::max<long long>(0, node.activation_slot);
        const long long last =
            std::min<long long>(log.horizon,
                                node.deactivation_slot ? *node.deactivation_slot : log.horizon);
        std::vector<long long> successes;
        for (long long slot = first; slot < last; ++slot) {
            if (log.node_succeeds_at(n, slot)) successes.push_back(slot);
        }
        for (long long start = first; start + L <= last; ++start) {
            auto it = std::lower_bound(successes.begin(), successes.end(), start);
            int delay = (it == successes.end() || *it >= start + L)
                            ? L
                            : static_cast<int>(*it - start);
            report.worst_delay = std::max(report.worst_delay, delay);
            if (delay == L) {
                report.status = GuaranteeStatus::Fail;
                report.violations.push_back({n, start});
            }
        }
    }
    return report;
}

struct TrialSummary {
    GuaranteeStatus status = GuaranteeStatus::Pass;  // NotClaimed when the cap is violated
    long long trials = 0;
    long long passes = 0;
    long long failures = 0;
    int worst_delay = 0;
    int active_count = 0;
    long long horizon_per_trial = 0;
    std::uint64_t seed = 0;
    std::string note;
};

namespace detail {

struct TrialTally {
    long long passes = 0;
    long long failures = 0;
    int worst_delay = 0;
};

inline TrialTally run_trial_range(const Code& code, long long first, long long last,
                                  std::uint64_t seed, int active_count, bool restricted,
                                  long long horizon) {
    const CodeParams& params = code.params();
    TrialTally tally;
    for (long long trial = first; trial < last; ++trial) {
        CounterRng rng(seed, static_cast<std::uint64_t>(trial));

        // distinct codeword picks via partial Fisher-Yates
        std::vector<int> indices(code.size());
        for (int i = 0; i < code.size(); ++i) indices[i] = i;
        std::vector<NodeConfig> nodes;
        for (int k = 0; k < active_count; ++k) {
            int j = k + rng.below(code.size() - k);
            std::swap(indices[k], indices[j]);
            NodeConfig node;
            node.pattern = code.patterns()[indices[k]];
            node.offset = rng.below(params.length);
            nodes.push_back(std::move(node));
        }

        TransmissionLog log = simulate(code, nodes, horizon);
        if (restricted) {
            // a node must never send two packets in one slot
            for (long long slot = 0; slot < log.horizon; ++slot) {
                std::vector<int> count(nodes.size(), 0);
                for (int channel = 0; channel < params.channels; ++channel) {
                    for (int id : log.transmitters[slot][channel]) ++count[id];
                }
                for (int c : count) {
                    if (c > 1)
                        throw std::logic_error("random_trials: restricted node sent twice in a slot");
                }
            }
        }
        GuaranteeReport report = check_guarantee(log, code, active_count);
        tally.worst_delay = std::max(tally.worst_delay, report.worst_delay);
        if (report.status == GuaranteeStatus::Pass) ++tally.passes;
        else ++tally.failures;
    }
    return tally;
}

}  // namespace detail

/// Seeded randomized guarantee trials: each trial activates a uniform subset
/// of the given size with uniform offsets and runs 10 periods. Replayable per
/// (seed, trial index); with jobs > 1 the trials are split across threads and
/// the summary is identical because it only aggregates counts and maxima.
inline TrialSummary random_trials(const Code& code, long long trials, std::uint64_t seed,
                                  int active_count, bool restricted = false, int jobs = 1) {
    const CodeParams& params = code.params();
    TrialSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    summary.active_count = active_count;
    summary.horizon_per_trial = 10LL * params.length;

    if (active_count > params.weight) {
        summary.status = GuaranteeStatus::NotClaimed;
        summary.note = "active count exceeds the code weight";
        return summary;
    }
    if (active_count > code.size())
        throw std::invalid_argument("random_trials: more active nodes than codewords");
    if (restricted && !verify_code(code, true).valid)
        throw std::invalid_argument("random_trials: restricted trials need a restricted-valid code");

    std::vector<detail::TrialTally> tallies;
    if (jobs <= 1 || trials < 2) {
        tallies.push_back(detail::run_trial_range(code, 0, trials, seed, active_count, restricted,
                                                  summary.horizon_per_trial));
    } else {
        const int worker_count = static_cast<int>(std::min<long long>(jobs, trials));
        tallies.resize(worker_count);
        std::vector<std::thread> workers;
        for (int t = 0; t < worker_count; ++t) {
            long long first = trials * t / worker_count;
            long long last = trials * (t + 1) / worker_count;
            workers.emplace_back([&, t, first, last]() {
                tallies[t] = detail::run_trial_range(code, first, last, seed, active_count,
                                                     restricted, summary.horizon_per_trial);
            });
        }
        for (auto& w : workers) w.join();
    }
    for (const auto& tally : tallies) {
        summary.passes += tally.passes;
        summary.failures += tally.failures;
        summary.worst_delay = std::max(summary.worst_delay, tally.worst_delay);
    }
    if (summary.failures > 0) summary.status = GuaranteeStatus::Fail;
    return summary;
}

}  // namespace mccac

#endif  // MCCAC_SIMULATOR_HPP
