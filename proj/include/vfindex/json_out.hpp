#pragma once

#include <sstream>
#include <string>

#include "indices.hpp"

namespace vfindex {

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default: out += c;
        }
    }
    return out;
}

/// Tiny append-only JSON object writer with caller-fixed key order; emits
/// compact output so identical reports are byte-identical.
class JsonObject {
public:
    void field(const std::string& key, long long value) {
        sep();
        os_ << '"' << key << "\":" << value;
    }
    void field(const std::string& key, unsigned long long value) {
        sep();
        os_ << '"' << key << "\":" << value;
    }
    void field(const std::string& key, bool value) {
        sep();
        os_ << '"' << key << "\":" << (value ? "true" : "false");
    }
    void field(const std::string& key, const std::string& value) {
        sep();
        os_ << '"' << key << "\":\"" << json_escape(value) << '"';
    }
    void raw_field(const std::string& key, const std::string& raw) {
        sep();
        os_ << '"' << key << "\":" << raw;
    }
    std::string str() const { return "{" + os_.str() + "}"; }

private:
    void sep() {
        if (any_) os_ << ',';
        any_ = true;
    }
    std::ostringstream os_;
    bool any_ = false;
};

inline std::string json_int_array(const std::vector<unsigned long long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

inline std::string json_string_array(const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += "\"" + json_escape(v[i]) + "\"";
    }
    return s + "]";
}

} // namespace detail

/// Stable key order, integers as JSON numbers, rationals as "p/q" strings,
/// absent fields omitted; byte-identical output for identical inputs.
inline std::string emit_json(const IndexReport& r) {
    detail::JsonObject o;
    if (r.ind_ph) o.field("ind_ph", *r.ind_ph);
    if (r.ind_hom) o.field("ind_hom", *r.ind_hom);
    if (r.ind_gsv) o.field("ind_gsv", *r.ind_gsv);
    if (r.ind_sch) o.field("ind_sch", *r.ind_sch);
    if (r.ind_virtual) o.field("ind_virtual", *r.ind_virtual);
    if (r.mu) o.field("mu", *r.mu);
    if (!r.homology.empty()) o.raw_field("h", detail::json_int_array(r.homology));
    o.field("n", static_cast<unsigned long long>(r.dim));
    o.field("N", static_cast<unsigned long long>(r.ambient_dim));
    o.field("k", static_cast<unsigned long long>(r.codim));
    o.field("gsv_equality_asserted", r.gsv_equality_asserted);
    if (!r.routes.empty()) o.raw_field("routes", detail::json_string_array(r.routes));
    return o.str();
}

inline std::string emit_json(const ConservationReport& rep) {
    std::string cases = "[";
    for (std::size_t i = 0; i < rep.cases.size(); ++i) {
        const auto& c = rep.cases[i];
        detail::JsonObject o;
        o.field("eps", rat_to_string(c.epsilon));
        o.field("certified", c.certified);
        o.field("conserved", c.conserved);
        if (c.index) o.field("ind_hom", *c.index);
        o.field("note", c.note);
        if (i) cases += ",";
        cases += o.str();
    }
    cases += "]";
    detail::JsonObject o;
    o.field("base_ind_hom", rep.base_index);
    o.raw_field("cases", cases);
    return o.str();
}

} // namespace vfindex
