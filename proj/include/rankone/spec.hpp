#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/bigint.hpp"
#include "rankone/errors.hpp"

namespace rankone {

constexpr uint64_t kDefaultCap = 10'000'000;  // materialization cap, in symbols

// One stage of a cutting-and-stacking construction: r+1 subcolumns and the
// spacer counts s_0..s_r placed above them.
struct SpacerRow {
    std::vector<int64_t> s;

    int64_t r() const { return static_cast<int64_t>(s.size()) - 1; }
    int64_t spacer_total() const;
    int64_t max_entry() const;
    // counts over the interior entries s_0..s_{r-1}
    int64_t count_interior(int64_t value) const;
    bool interior_constant() const;

    void validate() const;  // r >= 1, entries >= 0
    bool operator==(const SpacerRow&) const = default;
};

// Row facts that never require materializing the row.
struct RowSummary {
    BigInt branches;      // r + 1
    BigInt spacer_total;  // sum of s_i
    BigInt max_entry;
};

enum class TailRule { RepeatLast, RepeatCycle };

// Integer sequence given by a finite description: a constant, a finite list
// with a tail rule, or a named unbounded rule.
class SequenceRule {
public:
    enum class Kind { Constant, List, Named };

    static SequenceRule constant(BigInt v);
    static SequenceRule list(std::vector<BigInt> values, TailRule tail = TailRule::RepeatLast);
    static SequenceRule named(std::string name);  // "n_plus_1" | "two_pow_n"

    BigInt at(int64_t n) const;  // 1-based
    Kind kind() const { return kind_; }
    bool divergent() const;  // true for named rules (they grow without bound)
    // The eventual constant value, when the description pins one down.
    std::optional<BigInt> tail_constant() const;

    nlohmann::json to_json() const;
    static SequenceRule from_json(const nlohmann::json& j);
    bool operator==(const SequenceRule&) const = default;

private:
    Kind kind_ = Kind::Constant;
    std::vector<BigInt> values_{1};
    TailRule tail_ = TailRule::RepeatLast;
    std::string name_;
};

// Parameters gamma_n, L_n (> 1) of the family B_{n+1} = ((B_n 1)^{gamma_n} B_n)^{L_n}.
struct TheTsParams {
    SequenceRule gamma;
    SequenceRule L;

    BigInt gamma_at(int64_t n) const;  // validates > 1
    BigInt L_at(int64_t n) const;      // validates > 1
};

enum class FamilyTag { TheTs, Ferenczi, Chacon, Explicit, Custom };

std::string family_tag_name(FamilyTag tag);

// A rank-one construction: a total map from stage to spacer row plus the
// finite description it came from.  Values are immutable after construction.
class RankOneSpec {
public:
    RankOneSpec() = default;

    SpacerRow row(int64_t n) const;  // dense; may throw CapacityError on huge rows
    RowSummary row_summary(int64_t n) const;

    FamilyTag family() const { return tag_; }
    const std::optional<int64_t>& spacer_bound() const { return spacer_bound_; }
    const std::optional<TheTsParams>& the_ts_params() const { return ts_; }

    static RankOneSpec the_ts(TheTsParams params);
    static RankOneSpec ferenczi();
    static RankOneSpec chacon();
    static RankOneSpec explicit_rows(std::vector<SpacerRow> rows, TailRule tail,
                                     std::optional<int64_t> spacer_bound = {});
    // Derived presentations (rewrites) supply their own total rule.
    static RankOneSpec custom(std::function<SpacerRow(int64_t)> rule,
                              std::optional<int64_t> spacer_bound = {});

    nlohmann::json to_json(int64_t horizon = 12) const;
    static RankOneSpec from_json(const nlohmann::json& j);
    static RankOneSpec load(const std::string& path);

private:
    FamilyTag tag_ = FamilyTag::Chacon;
    std::optional<TheTsParams> ts_;
    std::vector<SpacerRow> rows_;
    TailRule tail_ = TailRule::RepeatLast;
    std::function<SpacerRow(int64_t)> rule_;  // Custom only
    std::optional<int64_t> spacer_bound_;

    SpacerRow base_row(int64_t n) const;
};

}  // namespace rankone
