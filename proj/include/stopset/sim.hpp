#ifndef STOPSET_SIM_HPP
#define STOPSET_SIM_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "stopset/decode.hpp"
#include "stopset/matrix.hpp"
#include "stopset/pattern.hpp"

namespace stopset {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Sub-seed derivation: mixes the parent seed with a stream index so grid
/// points and trials get independent, reproducible generators.
inline std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
    return splitmix64(parent ^ splitmix64(index + 1));
}

/// Uniform double in [0,1) from the top 53 bits, independent of the standard
/// library's distribution implementation.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// One coordinate pattern of a binary erasure channel use: each position is
/// erased independently with probability er.
inline ErasurePattern sample_bec(std::size_t n, double er, std::mt19937_64& rng) {
    if (!(er > 0.0 && er < 1.0)) throw std::invalid_argument("sample_bec: need 0 < ER < 1");
    std::vector<std::uint32_t> idx;
    for (std::size_t i = 0; i < n; ++i)
        if (detail::uniform01(rng) < er) idx.push_back(static_cast<std::uint32_t>(i));
    return ErasurePattern(n, std::move(idx));
}

enum class DecoderKind { Iterative, AgdA, AgdB, MlOracle };

inline const char* to_string(DecoderKind k) {
    switch (k) {
        case DecoderKind::Iterative: return "iterative";
        case DecoderKind::AgdA: return "agd_a";
        case DecoderKind::AgdB: return "agd_b";
        case DecoderKind::MlOracle: return "ml";
    }
    return "?";
}

inline DecoderKind decoder_from_string(const std::string& s) {
    if (s == "iterative") return DecoderKind::Iterative;
    if (s == "agd_a") return DecoderKind::AgdA;
    if (s == "agd_b") return DecoderKind::AgdB;
    if (s == "ml") return DecoderKind::MlOracle;
    throw std::invalid_argument("unknown decoder: " + s);
}

struct SimConfig {
    BitMatrix matrix{1, 1};            // decoding matrix (may be redundant)
    std::optional<LinearCode> code;    // required for AGD schedules and the ML oracle
    DecoderKind decoder = DecoderKind::Iterative;
    std::vector<double> erasure_rates;
    std::uint64_t trials = 1000;
    std::uint64_t master_seed = 1;
    std::size_t threads = 0;           // 0 = hardware concurrency
    bool partial_progress = true;
};

struct SimRecord {
    double er = 0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double fer = 0;
    double ci95 = 0;  // normal-approximation half width
    double mean_perms = 0;
    double mean_iters = 0;
};

/// Monte-Carlo frame-error-rate run. The all-zero codeword is transmitted
/// (performance is codeword-independent for linear codes on the BEC). Every
/// record is a deterministic function of the master seed: grid point i uses
/// sub-seed derive_seed(master, i) and trial j within it uses
/// derive_seed(point_seed, j), so results do not depend on the thread count.
inline std::vector<SimRecord> simulate(const SimConfig& cfg) {
    const std::size_t n = cfg.matrix.cols();
    if (cfg.erasure_rates.empty()) throw std::invalid_argument("simulate: empty erasure-rate grid");
    for (double er : cfg.erasure_rates)
        if (!(er > 0.0 && er < 1.0)) throw std::invalid_argument("simulate: need 0 < ER < 1");
    if (cfg.trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");

    const bool needs_code =
        cfg.decoder == DecoderKind::AgdA || cfg.decoder == DecoderKind::AgdB || cfg.decoder == DecoderKind::MlOracle;
    if (needs_code && !cfg.code) throw std::invalid_argument("simulate: this decoder needs the code");
    if (cfg.code && cfg.code->n() != n) throw std::invalid_argument("simulate: code/matrix length mismatch");

    std::optional<PermSet> c1, c2;
    if (cfg.decoder == DecoderKind::AgdA || cfg.decoder == DecoderKind::AgdB) {
        const bool ext = cfg.code->is_extended();
        if (!cfg.code->is_cyclic() && !ext)
            throw std::invalid_argument("simulate: AGD decoders need a cyclic or extended cyclic code");
        c1 = c1_group(n, ext);
        if (cfg.decoder == DecoderKind::AgdB) c2 = c2_group(n, ext);
        // validate the groups once; per-trial decodes skip re-validation
        for (const auto& p : *c1)
            if (!is_automorphism(*cfg.code, p))
                throw std::invalid_argument("simulate: C1 member is not an automorphism");
        if (c2)
            for (const auto& p : *c2)
                if (!is_automorphism(*cfg.code, p))
                    throw std::invalid_argument("simulate: C2 member is not an automorphism");
    }

    const BitVector zero(n);
    std::vector<SimRecord> records;
    for (std::size_t point = 0; point < cfg.erasure_rates.size(); ++point) {
        const double er = cfg.erasure_rates[point];
        const std::uint64_t point_seed = detail::derive_seed(cfg.master_seed, point);

        struct Tally {
            std::uint64_t failures = 0;
            std::uint64_t perms = 0;
            std::uint64_t iters = 0;
        };
        auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Tally& tally) {
            for (std::uint64_t trial = lo; trial < hi; ++trial) {
                std::mt19937_64 rng(detail::derive_seed(point_seed, trial));
                const ErasurePattern pattern = sample_bec(n, er, rng);
                const ReceivedWord word = ReceivedWord::bec(zero, pattern);
                bool failed = false;
                switch (cfg.decoder) {
                    case DecoderKind::Iterative: {
                        const DecodeOutcome out = iterative_decode(cfg.matrix, word);
                        failed = out.status == DecodeStatus::Failed;
                        tally.perms += out.permutations_tried;
                        tally.iters += out.peel_iterations;
                        break;
                    }
                    case DecoderKind::AgdA:
                    case DecoderKind::AgdB: {
                        const std::uint64_t schedule_seed = rng();
                        const Schedule schedule = cfg.decoder == DecoderKind::AgdA
                                                      ? Schedule::agd_a(*c1, schedule_seed)
                                                      : Schedule::agd_b(*c1, *c2, schedule_seed);
                        const DecodeOutcome out = agd_decode(*cfg.code, cfg.matrix, schedule, word,
                                                             cfg.partial_progress, false);
                        failed = out.status == DecodeStatus::Failed;
                        tally.perms += out.permutations_tried;
                        tally.iters += out.peel_iterations;
                        break;
                    }
                    case DecoderKind::MlOracle: {
                        const auto solved = solve_erased(cfg.code->parity(), word.values(), pattern);
                        failed = solved.status != ErasureSolve::Status::Unique;
                        tally.perms += 1;
                        break;
                    }
                }
                if (failed) ++tally.failures;
            }
        };

        std::size_t threads = cfg.threads ? cfg.threads : std::max<std::size_t>(1, std::thread::hardware_concurrency());
        threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, cfg.trials));
        std::vector<Tally> tallies(threads);
        if (threads == 1) {
            run_range(0, cfg.trials, tallies[0]);
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < threads; ++t)
                pool.emplace_back(run_range, cfg.trials * t / threads, cfg.trials * (t + 1) / threads,
                                  std::ref(tallies[t]));
            for (auto& th : pool) th.join();
        }

        Tally total;
        for (const auto& t : tallies) {
            total.failures += t.failures;
            total.perms += t.perms;
            total.iters += t.iters;
        }

        SimRecord rec;
        rec.er = er;
        rec.trials = cfg.trials;
        rec.failures = total.failures;
        rec.fer = static_cast<double>(total.failures) / static_cast<double>(cfg.trials);
        rec.ci95 = 1.96 * std::sqrt(rec.fer * (1.0 - rec.fer) / static_cast<double>(cfg.trials));
        rec.mean_perms = static_cast<double>(total.perms) / static_cast<double>(cfg.trials);
        rec.mean_iters = static_cast<double>(total.iters) / static_cast<double>(cfg.trials);
        records.push_back(rec);
    }
    return records;
}

inline void write_sim_csv(std::ostream& os, const std::vector<SimRecord>& records) {
    os << "er,trials,failures,fer,ci,mean_perms,mean_iters\n";
    for (const auto& r : records)
        os << r.er << ',' << r.trials << ',' << r.failures << ',' << r.fer << ',' << r.ci95 << ','
           << r.mean_perms << ',' << r.mean_iters << '\n';
}

/// Gnuplot-ready companion: whitespace columns with a commented header.
inline void write_sim_gnuplot(std::ostream& os, const std::vector<SimRecord>& records) {
    os << "# er fer ci mean_perms mean_iters\n";
    for (const auto& r : records)
        os << r.er << ' ' << r.fer << ' ' << r.ci95 << ' ' << r.mean_perms << ' ' << r.mean_iters << '\n';
}

}  // namespace stopset

#endif
