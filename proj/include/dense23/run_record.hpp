#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dense23/construction.hpp"

namespace dense23 {

// Serializable result of one construction run. binary_digits has length
// t_K and ternary_digits length rho_K + |v_K|; both are the exact shared
// prefixes of every point of the final cylinder.
struct RunRecord {
    struct Item {
        long index = 0;
        std::string w;
        std::string v;
        long gap_bound = 0;
        bool operator==(const Item&) const = default;
    };

    int m = 2;
    long depth = 0;
    std::string policy;    // "zero" | "one" | "random"
    std::uint64_t seed = 0;
    std::string schedule;  // "default" | "test:<ell>"
    std::vector<long> t;
    std::vector<long> rho;
    std::vector<long> p;
    std::string binary_digits;
    std::string ternary_digits;
    std::vector<Item> items;

    bool operator==(const RunRecord&) const = default;
};

RunRecord make_run_record(const ConstructionState& state, const FreeDigitPolicy& policy);

std::string serialize_run_record(const RunRecord& record);
// throws std::invalid_argument on malformed JSON or schema violations
RunRecord parse_run_record(const std::string& json_text);

// Re-checks a record: inclusion chain (and that each cylinder is the
// canonical smallest-index choice), the t_k order bounds, and the
// occurrence witnesses, all from the serialized digits. With deep, the
// whole run is regenerated from the recorded parameters and compared.
struct VerifyReport {
    struct Witness {
        long k = 0;
        int base = 2;
        long position = 0;  // word occupies digits position+1 .. position+|word|
        std::string word;
    };

    bool chain_ok = true;
    bool bounds_ok = true;
    bool witnesses_ok = true;
    std::vector<std::string> details;   // one line per failed check
    std::vector<Witness> witnesses;     // the checked occurrence positions

    bool ok() const { return chain_ok && bounds_ok && witnesses_ok; }
    std::string to_json() const;
};

VerifyReport verify_record(const RunRecord& record, bool deep);

}  // namespace dense23
