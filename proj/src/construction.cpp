#include "dense23/construction.hpp"

#include <stdexcept>

#include "dense23/errors.hpp"

namespace dense23 {

namespace {

// splitmix64; the free digits of step k are drawn from a stream seeded by
// (seed, k) so the result does not depend on evaluation order
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct BitStream {
    std::uint64_t state;
    std::uint64_t buf = 0;
    int left = 0;

    explicit BitStream(std::uint64_t seed) : state(seed) {}
    int next_bit() {
        if (left == 0) {
            state += 0x9e3779b97f4a7c15ull;
            buf = mix64(state);
            left = 64;
        }
        int b = static_cast<int>(buf & 1);
        buf >>= 1;
        --left;
        return b;
    }
};

bool forced_position(long offset0, int m) {
    // 0-based offset within the block; forced at sub-block first and last
    long r = offset0 % m;
    return r == 0 || r == m - 1;
}

}  // namespace

long Schedule::ell(long k) const {
    if (k < 1) throw std::invalid_argument("Schedule::ell: k must be >= 1");
    if (kind == Kind::Test) return fixed_ell;
    long g = 0;
    for (long i = 1; i <= k; ++i) g += item_at(i).gap_bound;
    return k * g;
}

std::string Schedule::describe() const {
    return kind == Kind::Default ? "default" : "test:" + std::to_string(fixed_ell);
}

Schedule default_schedule(int m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    return Schedule{m, Schedule::Kind::Default, 1};
}

Schedule test_schedule(int m, long ell) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (ell < 1) throw std::invalid_argument("test schedule: ell must be >= 1");
    return Schedule{m, Schedule::Kind::Test, ell};
}

Schedule schedule_from_descriptor(const std::string& descriptor, int m) {
    if (descriptor == "default") return default_schedule(m);
    if (descriptor.rfind("test:", 0) == 0) {
        std::size_t pos = 0;
        long ell;
        try {
            ell = std::stol(descriptor.substr(5), &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad schedule descriptor: " + descriptor);
        }
        if (pos != descriptor.size() - 5)
            throw std::invalid_argument("bad schedule descriptor: " + descriptor);
        return test_schedule(m, ell);
    }
    throw std::invalid_argument("unknown schedule: " + descriptor);
}

std::string FreeDigitPolicy::describe() const {
    switch (mode) {
        case Mode::Zero: return "zero";
        case Mode::One: return "one";
        case Mode::Random: return "random";
    }
    return "zero";
}

FreeDigitPolicy policy_from_descriptor(const std::string& descriptor, std::uint64_t seed) {
    if (descriptor == "zero") return FreeDigitPolicy{FreeDigitPolicy::Mode::Zero, 0};
    if (descriptor == "one") return FreeDigitPolicy{FreeDigitPolicy::Mode::One, 0};
    if (descriptor == "random") return FreeDigitPolicy{FreeDigitPolicy::Mode::Random, seed};
    throw std::invalid_argument("unknown policy: " + descriptor);
}

ConstrainedBlock make_block(const Schedule& schedule, long k, const FreeDigitPolicy& policy) {
    long ell = schedule.ell(k);
    long n = ell * schedule.m;
    std::string digits(static_cast<std::size_t>(n), '0');
    BitStream bits(mix64(policy.seed) ^ mix64(static_cast<std::uint64_t>(k) * 0x517cc1b727220a95ull));
    for (long i = 0; i < n; ++i) {
        if (forced_position(i, schedule.m)) {
            digits[static_cast<std::size_t>(i)] = '1';
        } else {
            switch (policy.mode) {
                case FreeDigitPolicy::Mode::Zero: break;
                case FreeDigitPolicy::Mode::One:
                    digits[static_cast<std::size_t>(i)] = '1';
                    break;
                case FreeDigitPolicy::Mode::Random:
                    digits[static_cast<std::size_t>(i)] =
                        static_cast<char>('0' + bits.next_bit());
                    break;
            }
        }
    }
    return ConstrainedBlock{schedule.m, ell, Word(2, std::move(digits))};
}

std::vector<ConstrainedBlock> all_blocks(const Schedule& schedule, long k,
                                         unsigned long long cap) {
    long ell = schedule.ell(k);
    long n = ell * schedule.m;
    long free = ell * (schedule.m - 2);
    if (free >= 63 || (1ull << free) > cap)
        throw CapExceeded("all_blocks: free-digit space exceeds cap",
                          BigNat(1).shifted_left(static_cast<std::size_t>(free)).to_decimal());
    std::vector<ConstrainedBlock> out;
    out.reserve(1ull << free);
    for (unsigned long long mask = 0; mask < (1ull << free); ++mask) {
        std::string digits(static_cast<std::size_t>(n), '0');
        int bit = static_cast<int>(free);
        for (long i = 0; i < n; ++i) {
            if (forced_position(i, schedule.m))
                digits[static_cast<std::size_t>(i)] = '1';
            else
                digits[static_cast<std::size_t>(i)] =
                    static_cast<char>('0' + ((mask >> --bit) & 1ull));
        }
        out.push_back(ConstrainedBlock{schedule.m, ell, Word(2, std::move(digits))});
    }
    return out;
}

ConstructionState initial_state(const Schedule& schedule) {
    ConstructionState state;
    state.schedule = schedule;
    state.eta = Cylinder{2, 0, BigNat{}};
    state.eps_v = Cylinder{3, 0, BigNat{}};
    return state;
}

ConstructionState step(const ConstructionState& state, const ConstrainedBlock& block,
                       const EnumerationItem& item) {
    const Schedule& schedule = state.schedule;
    long k = state.k + 1;
    long ell = schedule.ell(k);
    long n = ell * schedule.m;

    if (block.m != schedule.m || block.ell != ell ||
        static_cast<long>(block.digits.size()) != n)
        throw std::invalid_argument("step: block shape does not match schedule");
    for (long i = 0; i < n; ++i)
        if (forced_position(i, schedule.m) &&
            block.digits.digit_at(static_cast<std::size_t>(i + 1)) != 1)
            throw std::invalid_argument("step: block violates forced-digit constraint");

    long t_prev = state.t();
    const Word& w = item.w;
    const Word& v = item.v;

    Cylinder block_w = refine(state.eta, block.digits + w);
    long rho = min_inner_order(block_w.order, 2, 3, 3);
    Cylinder eps = find_inner_cylinder(block_w, 3, rho);
    Cylinder eps_v = refine(eps, v);
    long t = min_inner_order(rho + static_cast<long>(v.size()), 3, 2, 2);
    Cylinder eta = find_inner_cylinder(eps_v, 2, t);

    if (!contains(eps_v, eta) || !contains(block_w, eps_v) || !contains(block_w, eta))
        throw std::logic_error("step: inclusion chain violated");

    ConstructionState next = state;
    next.k = k;
    next.eta = eta;
    next.eps_v = eps_v;
    long p = t - t_prev - n;
    next.steps.push_back(StepInfo{k, item, ell, n, rho, t, p});

    next.marks.reserve(static_cast<std::size_t>(t));
    for (long i = 0; i < n; ++i)
        next.marks.push_back(forced_position(i, schedule.m) ? Mark::ForcedOne : Mark::Free);
    for (std::size_t i = 0; i < w.size(); ++i) next.marks.push_back(Mark::WordSeg);
    for (long i = 0; i < p - static_cast<long>(w.size()); ++i)
        next.marks.push_back(Mark::TildeSeg);
    return next;
}

ConstructionState generate_point(const Schedule& schedule, long depth,
                                 const FreeDigitPolicy& policy) {
    return generate_point(schedule, depth, policy, item_at);
}

ConstructionState generate_point(const Schedule& schedule, long depth,
                                 const FreeDigitPolicy& policy, const ItemProvider& items) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    ConstructionState state = initial_state(schedule);
    for (long k = 1; k <= depth; ++k)
        state = step(state, make_block(schedule, k, policy), items(k));
    return state;
}

std::vector<Cylinder> enumerate_level(const Schedule& schedule, long k,
                                      unsigned long long cap) {
    return enumerate_level(schedule, k, cap, item_at);
}

std::vector<Cylinder> enumerate_level(const Schedule& schedule, long k,
                                      unsigned long long cap, const ItemProvider& items) {
    if (k < 1) throw std::invalid_argument("enumerate_level: k must be >= 1");
    long total_free = 0;
    for (long j = 1; j <= k; ++j) total_free += schedule.ell(j) * (schedule.m - 2);
    if (total_free >= 63 || (1ull << total_free) > cap)
        throw CapExceeded(
            "enumerate_level: level size exceeds cap",
            BigNat(1).shifted_left(static_cast<std::size_t>(total_free)).to_decimal());

    std::vector<ConstructionState> frontier{initial_state(schedule)};
    for (long j = 1; j <= k; ++j) {
        EnumerationItem item = items(j);
        std::vector<ConstrainedBlock> blocks = all_blocks(schedule, j, cap);
        std::vector<ConstructionState> next;
        next.reserve(frontier.size() * blocks.size());
        for (const ConstructionState& s : frontier)
            for (const ConstrainedBlock& b : blocks) next.push_back(step(s, b, item));
        frontier = std::move(next);
    }
    std::vector<Cylinder> out;
    out.reserve(frontier.size());
    for (const ConstructionState& s : frontier) out.push_back(s.eta);
    return out;
}

std::vector<StepInfo> trace_orders(const Schedule& schedule, long depth) {
    return trace_orders(schedule, depth, item_at);
}

std::vector<StepInfo> trace_orders(const Schedule& schedule, long depth,
                                   const ItemProvider& items) {
    std::vector<StepInfo> out;
    out.reserve(static_cast<std::size_t>(depth));
    long t_prev = 0;
    for (long k = 1; k <= depth; ++k) {
        EnumerationItem item = items(k);
        long ell = schedule.ell(k);
        long n = ell * schedule.m;
        long rho = min_inner_order(t_prev + n + static_cast<long>(item.w.size()), 2, 3, 3);
        long t = min_inner_order(rho + static_cast<long>(item.v.size()), 3, 2, 2);
        out.push_back(StepInfo{k, item, ell, n, rho, t, t - t_prev - n});
        t_prev = t;
    }
    return out;
}

bool order_bounds_hold(long t_prev, long n, std::size_t wlen, std::size_t vlen, long t) {
    long base_order = t_prev + static_cast<long>(wlen) + n;
    // lower: 2^(t-1) >= 2^base_order * 3^(vlen+1)
    long d1 = t - 1 - base_order;
    if (d1 < 0) return false;
    if (BigNat(1).shifted_left(static_cast<std::size_t>(d1)) < BigNat::power(3, vlen + 1))
        return false;
    // upper: 2^(t-2) < 2^base_order * 3^(vlen+2)
    long d2 = t - 2 - base_order;
    if (d2 < 0) return true;
    return BigNat(1).shifted_left(static_cast<std::size_t>(d2)) < BigNat::power(3, vlen + 2);
}

}  // namespace dense23
