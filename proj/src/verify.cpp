#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "bookcross/coloring.hpp"
#include "bookcross/enumeration.hpp"
#include "bookcross/error.hpp"

namespace bookcross {

std::string to_string(PipelineVerdict v) {
    switch (v) {
        case PipelineVerdict::proven: return "proven";
        case PipelineVerdict::refuted: return "refuted";
        case PipelineVerdict::inconclusive: return "inconclusive";
    }
    return "unknown";
}

VerificationResult verify_positive_crossing(int m, int n, int k, const VerifyOptions& options) {
    if (k < 1) throw InputError("k must be >= 1");
    const auto classes = enumerate_classes(m, n);
    const std::size_t count = classes.size();

    std::map<std::string, LayoutRecord> reusable;
    for (const auto& r : options.resume)
        if (r.verdict == Verdict::not_colorable) reusable[r.canonical] = r;

    struct Slot {
        bool done = false;
        LayoutRecord record;
        std::vector<int> colors;
    };
    std::vector<Slot> slots(count);

    std::mutex mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto publish = [&](std::size_t idx, LayoutRecord record, std::vector<int> colors) {
        std::lock_guard lock(mutex);
        slots[idx].done = true;
        slots[idx].record = record;
        slots[idx].colors = std::move(colors);
        if (options.on_record) options.on_record(record);
    };

    auto worker = [&] {
        for (;;) {
            if (stop.load()) return;
            const std::size_t idx = next.fetch_add(1);
            if (idx >= count) return;
            const auto& canonical = classes[idx].canonical;
            if (auto it = reusable.find(canonical); it != reusable.end()) {
                publish(idx, it->second, {});
                continue;
            }
            const auto graph = conflict_graph(CircularLayout::from_bits(canonical));
            auto result = is_k_colorable(graph, k, options.budget);
            LayoutRecord record{canonical, result.verdict, result.nodes, result.millis};
            if (result.verdict == Verdict::colorable && options.stop_on_refutation) stop.store(true);
            publish(idx, std::move(record), std::move(result.colors));
        }
    };

    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    VerificationResult out;
    std::optional<std::size_t> refuting;
    for (std::size_t idx = 0; idx < count; ++idx) {
        const auto& slot = slots[idx];
        if (!slot.done) {
            out.unfinished.push_back(classes[idx].canonical);
            continue;
        }
        out.log.push_back(slot.record);
        if (slot.record.verdict == Verdict::colorable && !refuting) refuting = idx;
        if (slot.record.verdict == Verdict::budget_exceeded) out.unfinished.push_back(slot.record.canonical);
    }

    if (refuting) {
        out.verdict = PipelineVerdict::refuted;
        out.witness = drawing_from_coloring(CircularLayout::from_bits(classes[*refuting].canonical), k,
                                            slots[*refuting].colors);
    } else if (!out.unfinished.empty()) {
        out.verdict = PipelineVerdict::inconclusive;
    } else {
        out.verdict = PipelineVerdict::proven;
    }
    return out;
}

}  // namespace bookcross
