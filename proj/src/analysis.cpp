#include "dense23/analysis.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "dense23/cylinder.hpp"
#include "dense23/errors.hpp"

namespace dense23 {

Rational Rational::make(long long num, long long den) {
    if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    if (num < 0) throw std::invalid_argument("Rational: negative value");
    long long g = std::gcd(num, den);
    if (g == 0) return Rational{0, 1};
    return Rational{num / g, den / g};
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool operator<=(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
    return os << q.num << '/' << q.den;
}

BlockCount block_count(const Word& digits, const Word& block, long N) {
    if (digits.base() != block.base())
        throw std::invalid_argument("block_count: base mismatch");
    if (block.empty()) throw std::invalid_argument("block_count: empty block");
    if (N < 0 || N > static_cast<long>(digits.size()))
        throw std::invalid_argument("block_count: N out of range");

    long k = static_cast<long>(block.size());
    long window = N - k + 1;
    if (window < 0) window = 0;
    long count = 0;
    const std::string& d = digits.digits();
    const std::string& b = block.digits();
    for (long j = 0; j + k <= N; ++j)
        if (d.compare(static_cast<std::size_t>(j), static_cast<std::size_t>(k), b) == 0)
            ++count;
    return BlockCount{digits.base(), block, N, count, window};
}

NonnormalityProfile nonnormality_profile(const ConstructionState& state) {
    return nonnormality_profile(
        state, Word(2, std::string(static_cast<std::size_t>(state.schedule.m), '0')));
}

NonnormalityProfile nonnormality_profile(const ConstructionState& state, const Word& block) {
    NonnormalityProfile profile;
    profile.block = block;
    Word digits = state.binary_word();
    long t_prev = 0;
    long sum_p = 0;
    for (const StepInfo& st : state.steps) {
        ProfileEntry e;
        e.k = st.k;
        e.checkpoint = st.t;
        BlockCount at_t = block_count(digits, block, st.t);
        e.count = at_t.count;
        e.window = at_t.window;
        e.prefix_len = t_prev + st.n;
        e.count_prefix = block_count(digits, block, e.prefix_len).count;
        e.sum_p_before = sum_p;
        e.bound_over_n = Rational::make(sum_p, st.n);
        e.bound_over_prefix = Rational::make(sum_p, e.prefix_len);
        profile.entries.push_back(e);
        sum_p += st.p;
        t_prev = st.t;
    }
    return profile;
}

std::vector<OrbitWitness> orbit_witnesses(const ConstructionState& state) {
    std::vector<OrbitWitness> out;
    if (state.k == 0) return out;
    Word digits2 = state.binary_word();
    Word digits3 = state.ternary_word();
    long t_prev = 0;
    for (const StepInfo& st : state.steps) {
        const Word& w = st.item.w;
        const Word& v = st.item.v;
        long pos2 = t_prev + st.n;
        if (digits2.segment(static_cast<std::size_t>(pos2 + 1), w.size()) != w)
            throw WitnessFailed("orbit witness mismatch in base 2 at step " +
                                    std::to_string(st.k),
                                st.k, 2);
        if (digits3.segment(static_cast<std::size_t>(st.rho + 1), v.size()) != v)
            throw WitnessFailed("orbit witness mismatch in base 3 at step " +
                                    std::to_string(st.k),
                                st.k, 3);
        out.push_back(OrbitWitness{w, 2, pos2});
        out.push_back(OrbitWitness{v, 3, st.rho});
        t_prev = st.t;
    }
    return out;
}

long count_formula_exponent(const Schedule& schedule, const Trace& trace, long t) {
    if (t < 1) throw std::out_of_range("count_formula: t must be >= 1");
    if (trace.empty() || t > trace.back().t)
        throw std::out_of_range("count_formula: t beyond constructed depth");
    int m = schedule.m;
    long acc = 0;  // exponent of prod_{j<=k} 2^(ell_j m - 2 ell_j)
    long t_prev = 0;
    for (const StepInfo& st : trace) {
        if (t <= st.t) {
            long s = t - t_prev;
            if (s >= st.n) return acc + st.ell * (m - 2);
            long l = s / m;
            if (s % m == 0) return acc + s - 2 * l;
            return acc + s - 2 * l - 1;
        }
        acc += st.ell * (m - 2);
        t_prev = st.t;
    }
    throw std::out_of_range("count_formula: t beyond constructed depth");
}

BigNat count_formula(const Schedule& schedule, const Trace& trace, long t) {
    return BigNat(1).shifted_left(
        static_cast<std::size_t>(count_formula_exponent(schedule, trace, t)));
}

BigNat count_bruteforce(const Schedule& schedule, const Trace& trace, long t,
                        unsigned long long cap) {
    if (t < 1) throw std::out_of_range("count_bruteforce: t must be >= 1");
    if (trace.empty() || t > trace.back().t)
        throw std::out_of_range("count_bruteforce: t beyond constructed depth");
    if (t >= 62 || (1ull << t) > cap)
        throw CapExceeded("count_bruteforce: 2^t exceeds cap",
                          BigNat(1).shifted_left(static_cast<std::size_t>(t)).to_decimal());

    int m = schedule.m;
    // prefix of length t_{k-1} + n_k  ->  the p_k gap digits it forces
    std::unordered_map<std::string, std::string> gap_memo;

    auto consistent = [&](const std::string& u) -> bool {
        long t_prev = 0;
        for (const StepInfo& st : trace) {
            long lim = std::min(t, t_prev + st.n);
            for (long pos = t_prev + 1; pos <= lim; ++pos) {
                long r = (pos - t_prev - 1) % m;
                if ((r == 0 || r == m - 1) && u[static_cast<std::size_t>(pos - 1)] != '1')
                    return false;
            }
            if (t <= t_prev + st.n) return true;

            std::string key = u.substr(0, static_cast<std::size_t>(t_prev + st.n));
            auto it = gap_memo.find(key);
            if (it == gap_memo.end()) {
                Cylinder block_w = word_to_cylinder(Word(2, key) + st.item.w);
                Cylinder eps = find_inner_cylinder(block_w, 3, st.rho);
                Cylinder eps_v = refine(eps, st.item.v);
                Cylinder eta = find_inner_cylinder(eps_v, 2, st.t);
                std::string gap = cylinder_to_word(eta).digits().substr(
                    static_cast<std::size_t>(t_prev + st.n));
                it = gap_memo.emplace(std::move(key), std::move(gap)).first;
            }
            const std::string& gap = it->second;
            long upto = std::min(t, st.t) - (t_prev + st.n);
            if (u.compare(static_cast<std::size_t>(t_prev + st.n),
                          static_cast<std::size_t>(upto), gap, 0,
                          static_cast<std::size_t>(upto)) != 0)
                return false;
            if (t <= st.t) return true;
            t_prev = st.t;
        }
        return true;
    };

    unsigned long long total = 1ull << t;
    std::uint64_t count = 0;
    std::string u(static_cast<std::size_t>(t), '0');
    for (unsigned long long bits = 0; bits < total; ++bits) {
        for (long i = 0; i < t; ++i)
            u[static_cast<std::size_t>(i)] =
                ((bits >> (t - 1 - i)) & 1ull) ? '1' : '0';
        if (consistent(u)) ++count;
    }
    return BigNat(count);
}

long LevelCountTable::exponent(long t) const {
    if (t < t_min || t > t_max())
        throw std::out_of_range("LevelCountTable: t outside table range");
    return exponents[static_cast<std::size_t>(t - t_min)];
}

BigNat LevelCountTable::b(long t) const {
    return BigNat(1).shifted_left(static_cast<std::size_t>(exponent(t)));
}

Rational LevelCountTable::quotient(long t) const {
    return Rational::make(exponent(t), t);
}

std::string LevelCountTable::to_csv() const {
    std::ostringstream os;
    os << "t,b_t,quotient_num,quotient_den\n";
    for (long t = t_min; t <= t_max(); ++t) {
        Rational q = quotient(t);
        os << t << ',' << b(t).to_decimal() << ',' << q.num << ',' << q.den << '\n';
    }
    return os.str();
}

LevelCountTable build_count_table(const Schedule& schedule, const Trace& trace,
                                  long t_min, long t_max) {
    if (t_min < 1 || t_min > t_max)
        throw std::out_of_range("build_count_table: bad range");
    LevelCountTable table;
    table.m = schedule.m;
    table.schedule_desc = schedule.describe();
    table.t_min = t_min;
    table.exponents.reserve(static_cast<std::size_t>(t_max - t_min + 1));
    for (long t = t_min; t <= t_max; ++t)
        table.exponents.push_back(count_formula_exponent(schedule, trace, t));
    return table;
}

Rational dimension_lower_bound(const LevelCountTable& table, long t0, long t1) {
    if (t0 > t1 || t0 < table.t_min || t1 > table.t_max())
        throw std::out_of_range("dimension_lower_bound: range outside table");
    Rational best = table.quotient(t0);
    for (long t = t0 + 1; t <= t1; ++t) {
        Rational q = table.quotient(t);
        if (q < best) best = q;
    }
    // certificate check: b_t >= 2^(best * t) for every t in range
    for (long t = t0; t <= t1; ++t)
        if (static_cast<__int128>(table.exponent(t)) * best.den <
            static_cast<__int128>(best.num) * t)
            throw std::logic_error("dimension_lower_bound: certificate check failed");
    return best;
}

}  // namespace dense23
