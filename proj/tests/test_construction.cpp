#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "dense23/construction.hpp"
#include "dense23/enumeration.hpp"
#include "dense23/errors.hpp"

using namespace dense23;

TEST_CASE("default schedule") {
    Schedule s = default_schedule(3);
    CHECK(s.ell(1) == 7);
    CHECK(s.n(1) == 21);
    CHECK_THROWS_AS(default_schedule(1), std::invalid_argument);
    CHECK_THROWS_AS(test_schedule(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(s.ell(0), std::invalid_argument);

    // ell_k = k * (g_1 + ... + g_k), recomputed here from the enumeration
    for (long k = 1; k <= 50; ++k) {
        long g = 0;
        for (long i = 1; i <= k; ++i) g += item_at(i).gap_bound;
        CHECK(s.ell(k) == k * g);
        CHECK(s.n(k) % s.m == 0);
        // gap-sum ratio: G_k / n_k == 1 / (m k)
        CHECK(g * s.m * k == s.n(k));
    }
}

TEST_CASE("schedule descriptors") {
    CHECK(default_schedule(3).describe() == "default");
    CHECK(test_schedule(3, 2).describe() == "test:2");
    CHECK(schedule_from_descriptor("default", 4).kind == Schedule::Kind::Default);
    Schedule t = schedule_from_descriptor("test:5", 4);
    CHECK(t.ell(10) == 5);
    CHECK_THROWS_AS(schedule_from_descriptor("test:", 4), std::invalid_argument);
    CHECK_THROWS_AS(schedule_from_descriptor("test:2x", 4), std::invalid_argument);
    CHECK_THROWS_AS(schedule_from_descriptor("weekly", 4), std::invalid_argument);
}

TEST_CASE("policy descriptors") {
    CHECK(policy_from_descriptor("zero", 9).mode == FreeDigitPolicy::Mode::Zero);
    CHECK(policy_from_descriptor("one", 0).mode == FreeDigitPolicy::Mode::One);
    FreeDigitPolicy r = policy_from_descriptor("random", 55);
    CHECK(r.mode == FreeDigitPolicy::Mode::Random);
    CHECK(r.seed == 55);
    CHECK(r.describe() == "random");
    CHECK(FreeDigitPolicy{}.describe() == "zero");
    CHECK_THROWS_AS(policy_from_descriptor("coin", 0), std::invalid_argument);
}

TEST_CASE("constrained blocks") {
    Schedule s = test_schedule(3, 2);
    ConstrainedBlock zero = make_block(s, 1, FreeDigitPolicy{});
    CHECK(zero.digits == Word(2, "101101"));
    ConstrainedBlock ones = make_block(s, 1, FreeDigitPolicy{FreeDigitPolicy::Mode::One, 0});
    CHECK(ones.digits == Word(2, "111111"));

    std::vector<ConstrainedBlock> all = all_blocks(s, 1, 1u << 10);
    REQUIRE(all.size() == 4);
    CHECK(all[0].digits == Word(2, "101101"));
    CHECK(all[1].digits == Word(2, "101111"));
    CHECK(all[2].digits == Word(2, "111101"));
    CHECK(all[3].digits == Word(2, "111111"));

    // the random fill is a pure function of (seed, k)
    FreeDigitPolicy rnd{FreeDigitPolicy::Mode::Random, 99};
    CHECK(make_block(s, 2, rnd).digits == make_block(s, 2, rnd).digits);
    CHECK(make_block(s, 1, rnd).digits != make_block(s, 1, FreeDigitPolicy{FreeDigitPolicy::Mode::Random, 100}).digits);
}

TEST_CASE("worked first step at m=3") {
    ConstructionState st = generate_point(default_schedule(3), 1, FreeDigitPolicy{});
    REQUIRE(st.k == 1);
    const StepInfo& s1 = st.step_info(1);
    CHECK(s1.ell == 7);
    CHECK(s1.n == 21);
    CHECK(s1.rho == 15);
    CHECK(s1.t == 27);
    CHECK(s1.p == 6);
    CHECK(s1.item.gap_bound == 7);
    CHECK(s1.p <= s1.item.gap_bound);

    CHECK(st.binary_word() == Word(2, "101101101101101101101000110"));
    CHECK(st.ternary_word() == Word(3, "2010212010211200"));

    // ternary prefix read back off the final dyadic cylinder
    auto tern = ternary_prefix_of_cylinder(st.eta, 16);
    REQUIRE(tern.has_value());
    CHECK(*tern == st.ternary_word());
    CHECK(contains(word_to_cylinder(*tern), st.eta));

    // marks: 7 sub-blocks with 2 forced digits each, then w, then tilde-v
    REQUIRE(st.marks.size() == 27);
    CHECK(std::count(st.marks.begin(), st.marks.end(), Mark::ForcedOne) == 14);
    CHECK(std::count(st.marks.begin(), st.marks.end(), Mark::Free) == 7);
    CHECK(std::count(st.marks.begin(), st.marks.end(), Mark::WordSeg) == 1);
    CHECK(std::count(st.marks.begin(), st.marks.end(), Mark::TildeSeg) == 5);
    CHECK(st.marks[0] == Mark::ForcedOne);
    CHECK(st.marks[1] == Mark::Free);
    CHECK(st.marks[21] == Mark::WordSeg);
    CHECK(st.marks[22] == Mark::TildeSeg);
}

TEST_CASE("frozen order sequences at depth 3") {
    std::vector<StepInfo> m3 = trace_orders(default_schedule(3), 3);
    CHECK(m3[0].t == 27);
    CHECK(m3[1].t == 117);
    CHECK(m3[2].t == 312);
    CHECK(m3[0].rho == 15);
    CHECK(m3[1].rho == 72);
    CHECK(m3[2].rho == 195);
    CHECK(m3[0].p == 6);
    CHECK(m3[1].p == 6);
    CHECK(m3[2].p == 6);

    std::vector<StepInfo> m2 = trace_orders(default_schedule(2), 3);
    CHECK(m2[0].t == 21);
    CHECK(m2[1].t == 84);
    CHECK(m2[2].t == 217);
    CHECK(m2[0].rho == 11);
    CHECK(m2[1].rho == 51);
    CHECK(m2[2].rho == 135);

    std::vector<StepInfo> t31 = trace_orders(test_schedule(3, 1), 3);
    CHECK(t31[0].t == 9);
    CHECK(t31[1].t == 19);
    CHECK(t31[2].t == 28);
}

TEST_CASE("trace orders agree with the generated point") {
    for (int m : {2, 3, 5}) {
        Schedule s = default_schedule(m);
        std::vector<StepInfo> trace = trace_orders(s, 3);
        ConstructionState st = generate_point(s, 3, FreeDigitPolicy{});
        REQUIRE(trace.size() == st.steps.size());
        for (std::size_t i = 0; i < trace.size(); ++i) {
            CHECK(trace[i].t == st.steps[i].t);
            CHECK(trace[i].rho == st.steps[i].rho);
            CHECK(trace[i].p == st.steps[i].p);
        }
    }
}

TEST_CASE("step rejects malformed blocks") {
    Schedule s = test_schedule(3, 1);
    ConstructionState st = initial_state(s);
    EnumerationItem item = item_at(1);
    CHECK_THROWS_AS(step(st, ConstrainedBlock{3, 1, Word(2, "10")}, item),
                    std::invalid_argument);
    CHECK_THROWS_AS(step(st, ConstrainedBlock{3, 1, Word(2, "100")}, item),
                    std::invalid_argument);
    CHECK_THROWS_AS(step(st, ConstrainedBlock{3, 1, Word(2, "001")}, item),
                    std::invalid_argument);
}

TEST_CASE("generate_point is deterministic") {
    Schedule s = default_schedule(3);
    FreeDigitPolicy rnd{FreeDigitPolicy::Mode::Random, 424242};
    ConstructionState a = generate_point(s, 2, rnd);
    ConstructionState b = generate_point(s, 2, rnd);
    CHECK(a.eta == b.eta);
    CHECK(a.eps_v == b.eps_v);
    CHECK(a.binary_word() == b.binary_word());
    CHECK_THROWS_AS(generate_point(s, 0, rnd), std::invalid_argument);
}

TEST_CASE("inclusion chain, order bounds and ternary readability to depth 10") {
    for (int m : {2, 3, 4, 5}) {
        Schedule s = default_schedule(m);
        for (FreeDigitPolicy policy :
             {FreeDigitPolicy{}, FreeDigitPolicy{FreeDigitPolicy::Mode::Random, 1234}}) {
            ConstructionState st = initial_state(s);
            for (long k = 1; k <= 10; ++k) {
                EnumerationItem item = item_at(k);
                ConstrainedBlock block = make_block(s, k, policy);
                Cylinder before = st.eta;
                long t_prev = st.t();
                st = step(st, block, item);
                const StepInfo& info = st.steps.back();

                Cylinder block_w = refine(before, block.digits + item.w);
                CHECK(contains(block_w, st.eps_v));
                CHECK(contains(st.eps_v, st.eta));
                CHECK(contains(block_w, st.eta));
                CHECK(contains(before, st.eta));

                CHECK(order_bounds_hold(t_prev, info.n, item.w.size(), item.v.size(), info.t));
                CHECK(info.p <= item.gap_bound);

                auto tern = ternary_prefix_of_cylinder(st.eta, st.eps_v.order);
                REQUIRE(tern.has_value());
                CHECK(word_to_cylinder(*tern) == st.eps_v);
            }
        }
    }
}

TEST_CASE("gap ratio stays below the schedule bound to depth 20") {
    Schedule s = default_schedule(3);
    std::vector<StepInfo> trace = trace_orders(s, 20);
    long long sum_p = 0, sum_n = 0, sum_g = 0;
    for (const StepInfo& st : trace) {
        sum_p += st.p;
        sum_n += st.n;
        sum_g += st.item.gap_bound;
        // sum p_i / sum n_i <= G_k / n_k == 1/(m k), cross-multiplied
        CHECK(sum_p * st.n <= sum_g * sum_n);
        CHECK(sum_p * 3 * st.k <= sum_n);
    }
    CHECK(trace.back().t == 73040);
}

TEST_CASE("level enumeration") {
    // m=3, ell=2: the free digit is the middle of each length-3 sub-block
    Schedule s32 = test_schedule(3, 2);
    std::vector<Cylinder> level1 = enumerate_level(s32, 1, 1u << 12);
    CHECK(level1.size() == 4);
    std::vector<Cylinder> level2 = enumerate_level(s32, 2, 1u << 12);
    CHECK(level2.size() == 16);

    // pairwise disjoint: same order, all indices distinct
    std::set<std::string> seen;
    for (const Cylinder& c : level2) {
        CHECK(c.order == level2.front().order);
        seen.insert(c.index.to_decimal());
    }
    CHECK(seen.size() == level2.size());

    // m=2 has no free digits at all
    Schedule s2 = test_schedule(2, 2);
    for (long k = 1; k <= 3; ++k)
        CHECK(enumerate_level(s2, k, 1u << 12).size() == 1);

    Schedule s41 = test_schedule(4, 1);
    CHECK(enumerate_level(s41, 2, 1u << 12).size() == 16);

    // cap carries the exact required count
    try {
        enumerate_level(s32, 2, 15);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.required == "16");
    }
}

TEST_CASE("a custom item provider drives the same machinery") {
    // alternate between two fixed word pairs; every per-step invariant is
    // enumeration-independent
    ItemProvider items = [](long k) {
        Word w = k % 2 ? Word(2, "11") : Word(2, "010");
        Word v = k % 2 ? Word(3, "20") : Word(3, "1");
        return EnumerationItem{k, w, v, gap_bound(w, v)};
    };
    Schedule s = test_schedule(3, 2);
    ConstructionState st = initial_state(s);
    for (long k = 1; k <= 4; ++k) {
        long t_prev = st.t();
        EnumerationItem item = items(k);
        st = step(st, make_block(s, k, FreeDigitPolicy{}), item);
        const StepInfo& info = st.steps.back();
        CHECK(contains(st.eps_v, st.eta));
        CHECK(order_bounds_hold(t_prev, info.n, item.w.size(), item.v.size(), info.t));
        CHECK(info.p <= item.gap_bound);
    }
    CHECK(generate_point(s, 4, FreeDigitPolicy{}, items).eta == st.eta);
    CHECK(trace_orders(s, 4, items).back().t == st.t());
    CHECK(enumerate_level(s, 1, 1u << 12, items).size() == 4);
}

TEST_CASE("every level cylinder refines a level-1 cylinder") {
    Schedule s = test_schedule(3, 1);
    std::vector<Cylinder> level1 = enumerate_level(s, 1, 1u << 12);
    std::vector<Cylinder> level2 = enumerate_level(s, 2, 1u << 12);
    for (const Cylinder& c : level2) {
        int parents = 0;
        for (const Cylinder& p : level1)
            if (contains(p, c)) ++parents;
        CHECK(parents == 1);
    }
}
