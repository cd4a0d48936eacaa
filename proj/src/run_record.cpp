#include "dense23/run_record.hpp"

#include <json.hpp>

#include "dense23/analysis.hpp"
#include "dense23/cylinder.hpp"
#include "dense23/enumeration.hpp"
#include "dense23/errors.hpp"

namespace dense23 {

using nlohmann::json;

RunRecord make_run_record(const ConstructionState& state, const FreeDigitPolicy& policy) {
    RunRecord rec;
    rec.m = state.schedule.m;
    rec.depth = state.k;
    rec.policy = policy.describe();
    rec.seed = policy.mode == FreeDigitPolicy::Mode::Random ? policy.seed : 0;
    rec.schedule = state.schedule.describe();
    for (const StepInfo& st : state.steps) {
        rec.t.push_back(st.t);
        rec.rho.push_back(st.rho);
        rec.p.push_back(st.p);
        rec.items.push_back(RunRecord::Item{st.item.index, st.item.w.digits(),
                                            st.item.v.digits(), st.item.gap_bound});
    }
    rec.binary_digits = state.binary_word().digits();
    rec.ternary_digits = state.ternary_word().digits();
    return rec;
}

std::string serialize_run_record(const RunRecord& rec) {
    json items = json::array();
    for (const RunRecord::Item& it : rec.items)
        items.push_back(json{{"index", it.index},
                             {"w", it.w},
                             {"v", it.v},
                             {"gap_bound", it.gap_bound}});
    json j{{"m", rec.m},
           {"depth", rec.depth},
           {"policy", rec.policy},
           {"seed", rec.seed},
           {"schedule", rec.schedule},
           {"t", rec.t},
           {"rho", rec.rho},
           {"p", rec.p},
           {"binary_digits", rec.binary_digits},
           {"ternary_digits", rec.ternary_digits},
           {"items", items}};
    return j.dump(2) + "\n";
}

RunRecord parse_run_record(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record parse error: ") + e.what());
    }
    RunRecord rec;
    try {
        j.at("m").get_to(rec.m);
        j.at("depth").get_to(rec.depth);
        j.at("policy").get_to(rec.policy);
        j.at("seed").get_to(rec.seed);
        j.at("schedule").get_to(rec.schedule);
        j.at("t").get_to(rec.t);
        j.at("rho").get_to(rec.rho);
        j.at("p").get_to(rec.p);
        j.at("binary_digits").get_to(rec.binary_digits);
        j.at("ternary_digits").get_to(rec.ternary_digits);
        for (const json& it : j.at("items")) {
            RunRecord::Item item;
            it.at("index").get_to(item.index);
            it.at("w").get_to(item.w);
            it.at("v").get_to(item.v);
            it.at("gap_bound").get_to(item.gap_bound);
            rec.items.push_back(std::move(item));
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("record schema error: ") + e.what());
    }
    if (!valid_digits(2, rec.binary_digits) || !valid_digits(3, rec.ternary_digits))
        throw std::invalid_argument("record digit strings contain invalid characters");
    return rec;
}

std::string VerifyReport::to_json() const {
    json ws = json::array();
    for (const Witness& w : witnesses)
        ws.push_back(json{{"k", w.k}, {"base", w.base}, {"position", w.position},
                          {"word", w.word}});
    json j{{"chain_ok", chain_ok},
           {"bounds_ok", bounds_ok},
           {"witnesses_ok", witnesses_ok},
           {"ok", ok()},
           {"details", details},
           {"witnesses", ws}};
    return j.dump(2) + "\n";
}

namespace {

void verify_into(VerifyReport& report, const RunRecord& rec, bool deep) {
    auto fail = [&](bool& flag, const std::string& msg) {
        flag = false;
        report.details.push_back(msg);
    };

    Schedule schedule;
    try {
        schedule = schedule_from_descriptor(rec.schedule, rec.m);
    } catch (const std::exception& e) {
        fail(report.chain_ok, std::string("schedule descriptor: ") + e.what());
        return;
    }

    long K = rec.depth;
    if (K < 1 || static_cast<long>(rec.t.size()) != K ||
        static_cast<long>(rec.rho.size()) != K || static_cast<long>(rec.p.size()) != K ||
        static_cast<long>(rec.items.size()) != K) {
        fail(report.chain_ok, "sequence lengths do not match depth");
        return;
    }
    if (static_cast<long>(rec.binary_digits.size()) != rec.t.back()) {
        fail(report.chain_ok, "binary digit length differs from t_K");
        return;
    }

    Word binary(2, rec.binary_digits);
    Word ternary(3, rec.ternary_digits);

    long t_prev = 0;
    long gap_sum = 0;  // G_k, so the default schedule's n_k comes out linear in K
    for (long k = 1; k <= K; ++k) {
        const RunRecord::Item& it = rec.items[static_cast<std::size_t>(k - 1)];
        EnumerationItem expect = item_at(k);
        if (it.index != k || it.w != expect.w.digits() || it.v != expect.v.digits() ||
            it.gap_bound != expect.gap_bound)
            fail(report.chain_ok, "k=" + std::to_string(k) + ": enumeration item mismatch");
        const Word& w = expect.w;
        const Word& v = expect.v;

        gap_sum += expect.gap_bound;
        long ell = schedule.kind == Schedule::Kind::Test ? schedule.fixed_ell : k * gap_sum;
        long n = ell * schedule.m;
        long t_k = rec.t[static_cast<std::size_t>(k - 1)];
        long rho_k = rec.rho[static_cast<std::size_t>(k - 1)];
        long p_k = rec.p[static_cast<std::size_t>(k - 1)];
        long block_w_order = t_prev + n + static_cast<long>(w.size());

        if (t_k <= t_prev || block_w_order > t_k) {
            fail(report.chain_ok, "k=" + std::to_string(k) + ": inconsistent orders");
            return;
        }
        if (rho_k < 1 || rho_k > t_k) {
            // 3^rho_k sits between the two dyadic orders, so rho_k < t_k;
            // also keeps bogus records from forcing giant powers below
            fail(report.chain_ok, "k=" + std::to_string(k) + ": rho_k out of range");
            return;
        }
        if (k == K && static_cast<long>(rec.ternary_digits.size()) !=
                          rho_k + static_cast<long>(v.size()))
            fail(report.chain_ok, "ternary digit length differs from rho_K + |v_K|");

        if (p_k != t_k - t_prev - n)
            fail(report.bounds_ok, "k=" + std::to_string(k) + ": p_k != t_k - t_{k-1} - n_k");
        if (p_k > expect.gap_bound)
            fail(report.bounds_ok, "k=" + std::to_string(k) + ": p_k exceeds its gap bound");

        // forced block digits
        for (long i = 0; i < n; ++i) {
            long r = i % schedule.m;
            if ((r == 0 || r == schedule.m - 1) &&
                binary.digit_at(static_cast<std::size_t>(t_prev + i + 1)) != 1) {
                fail(report.chain_ok, "k=" + std::to_string(k) + ": forced block digit is not 1");
                break;
            }
        }

        // recompute the two orders
        if (rho_k != min_inner_order(block_w_order, 2, 3, 3))
            fail(report.chain_ok, "k=" + std::to_string(k) + ": rho_k is not the minimal 3-adic order");
        if (t_k != min_inner_order(rho_k + static_cast<long>(v.size()), 3, 2, 2))
            fail(report.chain_ok, "k=" + std::to_string(k) + ": t_k is not the minimal 2-adic order");

        // cylinders read back from the digit strings
        if (rho_k + static_cast<long>(v.size()) > static_cast<long>(ternary.size())) {
            fail(report.chain_ok, "k=" + std::to_string(k) + ": ternary prefix too short");
            return;
        }
        Cylinder block_w_cyl =
            word_to_cylinder(binary.prefix(static_cast<std::size_t>(block_w_order)));
        Cylinder eta_k = word_to_cylinder(binary.prefix(static_cast<std::size_t>(t_k)));
        Cylinder eps_k = word_to_cylinder(ternary.prefix(static_cast<std::size_t>(rho_k)));
        Cylinder eps_v_k = word_to_cylinder(
            ternary.prefix(static_cast<std::size_t>(rho_k + static_cast<long>(v.size()))));

        if (!contains(block_w_cyl, eps_v_k))
            fail(report.chain_ok,
                 "k=" + std::to_string(k) + ": [eps_k,v_k]_3 not inside [eta_{k-1},block,w_k]_2");
        if (!contains(eps_v_k, eta_k))
            fail(report.chain_ok, "k=" + std::to_string(k) + ": [eta_k]_2 not inside [eps_k,v_k]_3");
        if (!contains(block_w_cyl, eta_k))
            fail(report.chain_ok,
                 "k=" + std::to_string(k) + ": [eta_k]_2 not inside [eta_{k-1},block,w_k]_2");

        // canonical smallest-index choices
        try {
            if (find_inner_cylinder(block_w_cyl, 3, rho_k) != eps_k)
                fail(report.chain_ok,
                     "k=" + std::to_string(k) + ": eps_k is not the smallest admissible cylinder");
            if (find_inner_cylinder(eps_v_k, 2, t_k) != eta_k)
                fail(report.chain_ok,
                     "k=" + std::to_string(k) + ": eta_k is not the smallest admissible cylinder");
        } catch (const NotContainable& e) {
            fail(report.chain_ok, "k=" + std::to_string(k) + ": " + e.what());
        }

        if (!order_bounds_hold(t_prev, n, w.size(), v.size(), t_k))
            fail(report.bounds_ok, "k=" + std::to_string(k) + ": t_k estimate violated");

        // occurrence witnesses
        if (binary.segment(static_cast<std::size_t>(t_prev + n + 1), w.size()) != w)
            fail(report.witnesses_ok,
                 "k=" + std::to_string(k) + ": w_k does not occur at position t_{k-1}+n_k");
        if (ternary.segment(static_cast<std::size_t>(rho_k + 1), v.size()) != v)
            fail(report.witnesses_ok,
                 "k=" + std::to_string(k) + ": v_k does not occur at position rho_k");
        report.witnesses.push_back(VerifyReport::Witness{k, 2, t_prev + n, w.digits()});
        report.witnesses.push_back(VerifyReport::Witness{k, 3, rho_k, v.digits()});

        t_prev = t_k;
    }

    // the final cylinder determines the whole recorded ternary prefix
    Cylinder eta_K = word_to_cylinder(binary);
    std::optional<Word> tern =
        ternary_prefix_of_cylinder(eta_K, static_cast<long>(rec.ternary_digits.size()));
    if (!tern.has_value())
        fail(report.witnesses_ok, "ternary prefix of the final cylinder is undetermined");
    else if (tern->digits() != rec.ternary_digits)
        fail(report.witnesses_ok, "recorded ternary digits differ from the final cylinder's prefix");

    if (deep && report.ok()) {
        try {
            FreeDigitPolicy policy = policy_from_descriptor(rec.policy, rec.seed);
            ConstructionState state = generate_point(schedule, K, policy);
            RunRecord fresh = make_run_record(state, policy);
            if (!(fresh == rec))
                fail(report.chain_ok, "deep check: regenerated record differs");
        } catch (const std::exception& e) {
            fail(report.chain_ok, std::string("deep check: ") + e.what());
        }
    }
}

}  // namespace

VerifyReport verify_record(const RunRecord& rec, bool deep) {
    VerifyReport report;
    try {
        verify_into(report, rec, deep);
    } catch (const std::exception& e) {
        // nonsense values (negative orders, absurd lengths) surface as
        // failed verification, not as an escaped exception
        report.chain_ok = false;
        report.details.push_back(std::string("verification aborted: ") + e.what());
    }
    return report;
}

}  // namespace dense23
