#include "fdecomp/rule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fdecomp/errors.hpp"

namespace fdecomp {

FRule::FRule(RuleKind kind, std::vector<std::size_t> values, TableExtension ext)
    : kind_(kind), values_(std::move(values)), extension_(ext) {}

FRule FRule::constant(std::size_t value) {
    return FRule(RuleKind::constant, {value}, TableExtension::repeat_last);
}

FRule FRule::periodic(std::vector<std::size_t> pattern) {
    if (pattern.empty()) throw parse_error("periodic rule: pattern must be nonempty");
    return FRule(RuleKind::periodic, std::move(pattern), TableExtension::repeat_last);
}

FRule FRule::factorial_bins() {
    return FRule(RuleKind::factorial_bins, {}, TableExtension::repeat_last);
}

FRule FRule::table(std::vector<std::size_t> values, TableExtension extension) {
    if (values.empty()) throw parse_error("table rule: table must be nonempty");
    return FRule(RuleKind::table, std::move(values), extension);
}

FRule FRule::bbin(std::size_t b) {
    if (b < 3) throw parse_error("bbin rule requires b >= 3");
    std::vector<std::size_t> pattern;
    pattern.reserve(b);
    pattern.push_back(1);
    for (std::size_t v = 1; v < b; ++v) pattern.push_back(v);
    return periodic(std::move(pattern));
}

FRule FRule::base(std::size_t b) {
    if (b < 2) throw parse_error("base rule requires b >= 2");
    std::vector<std::size_t> pattern;
    for (std::size_t v = 0; v + 1 < b; ++v) pattern.push_back(v);
    return periodic(std::move(pattern));
}

std::size_t FRule::operator()(std::size_t n) const {
    switch (kind_) {
        case RuleKind::constant:
            return values_[0];
        case RuleKind::periodic:
            return values_[n % values_.size()];
        case RuleKind::factorial_bins: {
            // bin m starts at m(m+1)/2; f is the offset inside the bin
            std::size_t m = static_cast<std::size_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
            while (m * (m + 1) / 2 > n) --m;
            while ((m + 1) * (m + 2) / 2 <= n) ++m;
            return n - m * (m + 1) / 2;
        }
        case RuleKind::table:
            if (n < values_.size()) return values_[n];
            return extension_ == TableExtension::repeat_last ? values_.back() : 0;
    }
    return 0;  // unreachable
}

std::size_t FRule::period() const {
    switch (kind_) {
        case RuleKind::constant:
            return 1;
        case RuleKind::periodic:
            return values_.size();
        default:
            throw unsupported_rule("period() requires a constant or periodic rule");
    }
}

std::size_t FRule::max_value() const {
    switch (kind_) {
        case RuleKind::constant:
        case RuleKind::periodic:
            return *std::max_element(values_.begin(), values_.end());
        default:
            throw unsupported_rule("max_value() requires a constant or periodic rule");
    }
}

namespace {

std::vector<std::size_t> parse_nat_list(const std::string& text, const std::string& what) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw parse_error(what + ": expected a comma-separated list of naturals, got '" + text + "'");
        }
        out.push_back(std::stoull(item));
    }
    if (out.empty()) throw parse_error(what + ": empty list");
    return out;
}

std::size_t parse_nat(const std::string& text, const std::string& what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw parse_error(what + ": expected a natural number, got '" + text + "'");
    }
    return std::stoull(text);
}

}  // namespace

FRule FRule::parse(const std::string& text) {
    if (text == "factorial") return factorial_bins();
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw parse_error("unrecognized rule shorthand '" + text + "'");
    }
    const std::string head = text.substr(0, colon);
    const std::string rest = text.substr(colon + 1);
    if (head == "constant") return constant(parse_nat(rest, "constant"));
    if (head == "periodic") return periodic(parse_nat_list(rest, "periodic"));
    if (head == "bbin") return bbin(parse_nat(rest, "bbin"));
    if (head == "base") return base(parse_nat(rest, "base"));
    if (head == "table") {
        const auto colon2 = rest.find(':');
        TableExtension ext = TableExtension::repeat_last;
        std::string values = rest;
        if (colon2 != std::string::npos) {
            values = rest.substr(0, colon2);
            const std::string extname = rest.substr(colon2 + 1);
            if (extname == "zero") {
                ext = TableExtension::zero;
            } else if (extname != "repeat_last") {
                throw parse_error("table extension must be 'repeat_last' or 'zero', got '" + extname + "'");
            }
        }
        return table(parse_nat_list(values, "table"), ext);
    }
    throw parse_error("unrecognized rule kind '" + head + "'");
}

namespace {

std::vector<std::size_t> nat_list_from_json(const nlohmann::json& arr, const std::string& field) {
    if (!arr.is_array()) throw parse_error("field '" + field + "' must be an array");
    std::vector<std::size_t> out;
    for (const auto& v : arr) {
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw parse_error("field '" + field + "' must contain nonnegative integers");
        }
        out.push_back(v.get<std::size_t>());
    }
    return out;
}

}  // namespace

FRule FRule::from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        throw parse_error("rule document: missing string field 'kind'");
    }
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "constant") {
        if (!doc.contains("value") || !doc["value"].is_number_integer() || doc["value"].get<long long>() < 0) {
            throw parse_error("constant rule: field 'value' must be a nonnegative integer");
        }
        return constant(doc["value"].get<std::size_t>());
    }
    if (kind == "periodic") {
        if (!doc.contains("pattern")) throw parse_error("periodic rule: missing field 'pattern'");
        auto pattern = nat_list_from_json(doc["pattern"], "pattern");
        if (pattern.empty()) throw parse_error("periodic rule: field 'pattern' must be nonempty");
        return periodic(std::move(pattern));
    }
    if (kind == "factorial_bins") return factorial_bins();
    if (kind == "table") {
        if (!doc.contains("table")) throw parse_error("table rule: missing field 'table'");
        auto values = nat_list_from_json(doc["table"], "table");
        if (values.empty()) throw parse_error("table rule: field 'table' must be nonempty");
        TableExtension ext = TableExtension::repeat_last;
        if (doc.contains("extension")) {
            const auto& e = doc["extension"];
            if (!e.is_string() || (e != "repeat_last" && e != "zero")) {
                throw parse_error("table rule: field 'extension' must be 'repeat_last' or 'zero'");
            }
            if (e == "zero") ext = TableExtension::zero;
        }
        return table(std::move(values), ext);
    }
    throw parse_error("rule document: unknown kind '" + kind + "'");
}

nlohmann::json FRule::to_json() const {
    nlohmann::json doc;
    switch (kind_) {
        case RuleKind::constant:
            doc["kind"] = "constant";
            doc["value"] = values_[0];
            break;
        case RuleKind::periodic:
            doc["kind"] = "periodic";
            doc["pattern"] = values_;
            break;
        case RuleKind::factorial_bins:
            doc["kind"] = "factorial_bins";
            break;
        case RuleKind::table:
            doc["kind"] = "table";
            doc["table"] = values_;
            doc["extension"] = extension_ == TableExtension::zero ? "zero" : "repeat_last";
            break;
    }
    return doc;
}

std::string FRule::spec_string() const {
    std::ostringstream os;
    auto join = [&os](const std::vector<std::size_t>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
    };
    switch (kind_) {
        case RuleKind::constant:
            os << "constant:" << values_[0];
            break;
        case RuleKind::periodic:
            os << "periodic:";
            join(values_);
            break;
        case RuleKind::factorial_bins:
            os << "factorial";
            break;
        case RuleKind::table:
            os << "table:";
            join(values_);
            if (extension_ == TableExtension::zero) os << ":zero";
            break;
    }
    return os.str();
}

}  // namespace fdecomp
