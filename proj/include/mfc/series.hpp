#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mfc {

// One evaluated series plus optional closed-form reference columns.
struct SeriesResult {
    std::vector<double> x;
    std::vector<double> value;
    std::optional<std::vector<double>> reference;
    std::optional<std::vector<double>> abs_err;

    // CSV column labels; `table` renames value/reference to numeric/closed_form
    std::string value_label = "value";
    std::string ref_label = "reference";
    std::string err_label = "abs_err";

    struct Meta {
        std::string op;       // operator kind as spelled on the command line
        std::string fn;       // function text
        std::string order;    // alpha or n, as given
        std::string side;     // "left" / "right"
        int grid = 0;
        double a = 0.0;
        double b = 0.0;
    } meta;
};

// CSV: header "x,value" plus ",reference,abs_err" when present, rows in
// ascending x, numbers with 17 significant digits, non-finite values as
// "inf" / "-inf".
void write_csv(const SeriesResult& s, std::ostream& os);

// JSON: one object with the column arrays and a "meta" object; non-finite
// entries become null. Output is byte-stable for identical inputs.
void write_json(const SeriesResult& s, std::ostream& os);

}  // namespace mfc
