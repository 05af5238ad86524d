#include "rankone/spec.hpp"

#include <algorithm>
#include <fstream>

namespace rankone {

int64_t SpacerRow::spacer_total() const {
    int64_t t = 0;
    for (int64_t v : s) t += v;
    return t;
}

int64_t SpacerRow::max_entry() const {
    return *std::max_element(s.begin(), s.end());
}

int64_t SpacerRow::count_interior(int64_t value) const {
    int64_t c = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == value) ++c;
    return c;
}

bool SpacerRow::interior_constant() const {
    for (size_t i = 1; i + 1 < s.size(); ++i)
        if (s[i] != s[0]) return false;
    return true;
}

void SpacerRow::validate() const {
    if (s.size() < 2) throw PreconditionError("spacer row needs r >= 1 (at least two entries)");
    for (int64_t v : s)
        if (v < 0) throw PreconditionError("spacer counts must be nonnegative");
}

SequenceRule SequenceRule::constant(BigInt v) {
    SequenceRule r;
    r.kind_ = Kind::Constant;
    r.values_ = {std::move(v)};
    return r;
}

SequenceRule SequenceRule::list(std::vector<BigInt> values, TailRule tail) {
    if (values.empty()) throw std::invalid_argument("sequence rule list must be nonempty");
    SequenceRule r;
    r.kind_ = Kind::List;
    r.values_ = std::move(values);
    r.tail_ = tail;
    return r;
}

SequenceRule SequenceRule::named(std::string name) {
    if (name != "n_plus_1" && name != "two_pow_n")
        throw std::invalid_argument("unknown sequence rule: " + name);
    SequenceRule r;
    r.kind_ = Kind::Named;
    r.name_ = std::move(name);
    return r;
}

BigInt SequenceRule::at(int64_t n) const {
    if (n < 1) throw std::invalid_argument("sequence rules are 1-based");
    switch (kind_) {
        case Kind::Constant:
            return values_[0];
        case Kind::List: {
            auto k = static_cast<size_t>(n - 1);
            if (k < values_.size()) return values_[k];
            if (tail_ == TailRule::RepeatLast) return values_.back();
            return values_[k % values_.size()];
        }
        case Kind::Named:
            if (name_ == "n_plus_1") return BigInt(n) + 1;
            return BigInt(1) << n;  // two_pow_n
    }
    throw std::logic_error("unreachable");
}

bool SequenceRule::divergent() const { return kind_ == Kind::Named; }

std::optional<BigInt> SequenceRule::tail_constant() const {
    switch (kind_) {
        case Kind::Constant:
            return values_[0];
        case Kind::List:
            if (tail_ == TailRule::RepeatLast) return values_.back();
            if (std::all_of(values_.begin(), values_.end(),
                            [&](const BigInt& v) { return v == values_[0]; }))
                return values_[0];
            return std::nullopt;
        case Kind::Named:
            return std::nullopt;
    }
    return std::nullopt;
}

namespace {

nlohmann::json bigint_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return BigInt(j.get<int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

std::string tail_name(TailRule t) {
    return t == TailRule::RepeatLast ? "repeat_last" : "repeat_cycle";
}

TailRule tail_from_name(const std::string& s) {
    if (s == "repeat_last") return TailRule::RepeatLast;
    if (s == "repeat_cycle") return TailRule::RepeatCycle;
    throw std::invalid_argument("unknown tail rule: " + s);
}

}  // namespace

nlohmann::json SequenceRule::to_json() const {
    switch (kind_) {
        case Kind::Constant:
            return bigint_to_json(values_[0]);
        case Kind::List: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& v : values_) arr.push_back(bigint_to_json(v));
            if (tail_ == TailRule::RepeatLast) return arr;
            return nlohmann::json{{"values", arr}, {"tail", tail_name(tail_)}};
        }
        case Kind::Named:
            return name_;
    }
    throw std::logic_error("unreachable");
}

SequenceRule SequenceRule::from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return constant(BigInt(j.get<int64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "n_plus_1" || s == "two_pow_n") return named(s);
        return constant(BigInt(s));  // decimal string for big constants
    }
    if (j.is_array()) {
        std::vector<BigInt> vs;
        for (const auto& e : j) vs.push_back(bigint_from_json(e));
        return list(std::move(vs));
    }
    if (j.is_object()) {
        std::vector<BigInt> vs;
        for (const auto& e : j.at("values")) vs.push_back(bigint_from_json(e));
        TailRule t = j.contains("tail") ? tail_from_name(j.at("tail").get<std::string>())
                                        : TailRule::RepeatLast;
        return list(std::move(vs), t);
    }
    throw std::invalid_argument("bad sequence rule");
}

BigInt TheTsParams::gamma_at(int64_t n) const {
    BigInt g = gamma.at(n);
    if (g <= 1) throw PreconditionError("gamma_n must exceed 1", n);
    return g;
}

BigInt TheTsParams::L_at(int64_t n) const {
    BigInt l = L.at(n);
    if (l <= 1) throw PreconditionError("L_n must exceed 1", n);
    return l;
}

std::string family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::TheTs: return "the_ts";
        case FamilyTag::Ferenczi: return "ferenczi";
        case FamilyTag::Chacon: return "chacon";
        case FamilyTag::Explicit: return "explicit";
        case FamilyTag::Custom: return "custom";
    }
    throw std::logic_error("unreachable");
}

RankOneSpec RankOneSpec::the_ts(TheTsParams params) {
    params.gamma_at(1);
    params.L_at(1);
    RankOneSpec s;
    s.tag_ = FamilyTag::TheTs;
    s.ts_ = std::move(params);
    return s;
}

RankOneSpec RankOneSpec::ferenczi() {
    RankOneSpec s;
    s.tag_ = FamilyTag::Ferenczi;
    return s;
}

RankOneSpec RankOneSpec::chacon() {
    RankOneSpec s;
    s.tag_ = FamilyTag::Chacon;
    return s;
}

RankOneSpec RankOneSpec::explicit_rows(std::vector<SpacerRow> rows, TailRule tail,
                                       std::optional<int64_t> spacer_bound) {
    if (rows.empty()) throw std::invalid_argument("explicit spec needs at least one stage");
    for (const auto& r : rows) r.validate();
    RankOneSpec s;
    s.tag_ = FamilyTag::Explicit;
    s.rows_ = std::move(rows);
    s.tail_ = tail;
    s.spacer_bound_ = spacer_bound;
    return s;
}

RankOneSpec RankOneSpec::custom(std::function<SpacerRow(int64_t)> rule,
                                std::optional<int64_t> spacer_bound) {
    RankOneSpec s;
    s.tag_ = FamilyTag::Custom;
    s.rule_ = std::move(rule);
    s.spacer_bound_ = spacer_bound;
    return s;
}

SpacerRow RankOneSpec::base_row(int64_t n) const {
    if (n < 1) throw std::invalid_argument("stages are 1-based");
    switch (tag_) {
        case FamilyTag::TheTs: {
            int64_t g = to_i64(ts_->gamma_at(n), "gamma_n");
            int64_t l = to_i64(ts_->L_at(n), "L_n");
            BigInt size = BigInt(l) * (g + 1);
            if (size > static_cast<int64_t>(kDefaultCap)) throw CapacityError(size, kDefaultCap);
            SpacerRow row;
            row.s.reserve(static_cast<size_t>(l) * (g + 1));
            for (int64_t b = 0; b < l; ++b) {
                for (int64_t i = 0; i < g; ++i) row.s.push_back(1);
                row.s.push_back(0);
            }
            return row;
        }
        case FamilyTag::Ferenczi:
            return SpacerRow{{0, 1, 0, 0}};
        case FamilyTag::Chacon:
            return SpacerRow{{0, 1, 0}};
        case FamilyTag::Explicit: {
            auto k = static_cast<size_t>(n - 1);
            if (k < rows_.size()) return rows_[k];
            if (tail_ == TailRule::RepeatLast) return rows_.back();
            return rows_[k % rows_.size()];
        }
        case FamilyTag::Custom:
            return rule_(n);
    }
    throw std::logic_error("unreachable");
}

SpacerRow RankOneSpec::row(int64_t n) const {
    SpacerRow r = base_row(n);
    r.validate();
    if (spacer_bound_ && r.max_entry() > *spacer_bound_)
        throw PreconditionError("declared spacer bound violated", n);
    return r;
}

RowSummary RankOneSpec::row_summary(int64_t n) const {
    if (tag_ == FamilyTag::TheTs) {
        BigInt g = ts_->gamma_at(n);
        BigInt l = ts_->L_at(n);
        return RowSummary{l * (g + 1), l * g, 1};
    }
    SpacerRow r = row(n);
    return RowSummary{BigInt(r.r()) + 1, r.spacer_total(), r.max_entry()};
}

nlohmann::json RankOneSpec::to_json(int64_t horizon) const {
    nlohmann::json j;
    j["family"] = family_tag_name(tag_ == FamilyTag::Custom ? FamilyTag::Explicit : tag_);
    switch (tag_) {
        case FamilyTag::TheTs:
            j["gamma"] = ts_->gamma.to_json();
            j["L"] = ts_->L.to_json();
            break;
        case FamilyTag::Ferenczi:
        case FamilyTag::Chacon:
            break;
        case FamilyTag::Explicit: {
            nlohmann::json stages = nlohmann::json::array();
            for (const auto& r : rows_) stages.push_back({{"s", r.s}});
            j["stages"] = stages;
            j["tail"] = tail_name(tail_);
            break;
        }
        case FamilyTag::Custom: {
            // Derived presentations serialize as explicit rows up to the horizon.
            nlohmann::json stages = nlohmann::json::array();
            for (int64_t n = 1; n <= horizon; ++n) stages.push_back({{"s", rule_(n).s}});
            j["stages"] = stages;
            j["tail"] = "repeat_last";
            j["horizon"] = horizon;
            break;
        }
    }
    if (spacer_bound_) j["spacer_bound"] = *spacer_bound_;
    return j;
}

RankOneSpec RankOneSpec::from_json(const nlohmann::json& j) {
    std::string fam = j.at("family").get<std::string>();
    std::optional<int64_t> bound;
    if (j.contains("spacer_bound")) bound = j.at("spacer_bound").get<int64_t>();
    RankOneSpec s;
    if (fam == "the_ts") {
        s = the_ts(TheTsParams{SequenceRule::from_json(j.at("gamma")),
                               SequenceRule::from_json(j.at("L"))});
    } else if (fam == "ferenczi") {
        s = ferenczi();
    } else if (fam == "chacon") {
        s = chacon();
    } else if (fam == "explicit") {
        std::vector<SpacerRow> rows;
        for (const auto& st : j.at("stages"))
            rows.push_back(SpacerRow{st.at("s").get<std::vector<int64_t>>()});
        TailRule tail = j.contains("tail") ? tail_from_name(j.at("tail").get<std::string>())
                                           : TailRule::RepeatLast;
        s = explicit_rows(std::move(rows), tail, bound);
        return s;
    } else {
        throw std::invalid_argument("unknown family: " + fam);
    }
    s.spacer_bound_ = bound;
    return s;
}

RankOneSpec RankOneSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

}  // namespace rankone
