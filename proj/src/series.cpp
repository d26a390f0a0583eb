#include "mfc/series.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace mfc {

namespace {

void put_number(std::ostream& os, double v) {
    if (std::isnan(v)) {
        os << "nan";
        return;
    }
    if (std::isinf(v)) {
        os << (v > 0 ? "inf" : "-inf");
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

nlohmann::ordered_json column(const std::vector<double>& v) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (double x : v) {
        if (std::isfinite(x))
            arr.push_back(x);
        else
            arr.push_back(nullptr);
    }
    return arr;
}

}  // namespace

void write_csv(const SeriesResult& s, std::ostream& os) {
    const bool with_ref = s.reference.has_value() && s.abs_err.has_value();
    os << "x," << s.value_label;
    if (with_ref) os << ',' << s.ref_label << ',' << s.err_label;
    os << '\n';
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        put_number(os, s.x[i]);
        os << ',';
        put_number(os, s.value[i]);
        if (with_ref) {
            os << ',';
            put_number(os, (*s.reference)[i]);
            os << ',';
            put_number(os, (*s.abs_err)[i]);
        }
        os << '\n';
    }
}

void write_json(const SeriesResult& s, std::ostream& os) {
    nlohmann::ordered_json j;
    j["x"] = column(s.x);
    j["value"] = column(s.value);
    if (s.reference) j["reference"] = column(*s.reference);
    if (s.abs_err) j["abs_err"] = column(*s.abs_err);
    nlohmann::ordered_json meta;
    meta["op"] = s.meta.op;
    meta["fn"] = s.meta.fn;
    meta["order"] = s.meta.order;
    meta["side"] = s.meta.side;
    meta["grid"] = s.meta.grid;
    meta["a"] = s.meta.a;
    meta["b"] = s.meta.b;
    j["meta"] = meta;
    os << j.dump() << '\n';
}

}  // namespace mfc
