#include "rigorquad/reference.hpp"

#include <array>
#include <stdexcept>

namespace rq {

Interval decode_reference_cell(const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        return Interval::parse(text); // endpoints exact as printed
    }
    auto caret = text.find('^');
    auto under = text.find('_', caret == std::string::npos ? 0 : caret);
    if (caret == std::string::npos || under == std::string::npos || under < caret)
        throw std::invalid_argument("decode_reference_cell: bad cell '" + text + "'");
    std::string base = text.substr(0, caret);
    Interval v1 = Interval::from_decimal(base + text.substr(caret + 1, under - caret - 1));
    Interval v2 = Interval::from_decimal(base + text.substr(under + 1));
    return hull(v1, v2);
}

namespace {

struct Row {
    const char* id;
    const char* bounded;
    const char* center;
    const char* y_axis;
    const char* z_axis;
};

// Transcribed from the published breakdown table; the shorthand cells keep
// the original superscript/subscript digits.
constexpr std::array<Row, 41> kRows{{
    {"B11", "-21.93^58_09", "[-4.9e-13,4.9e-13]", "[-6.3e-7,6.3e-7]", "-0.20^71_50"},
    {"B12", "19.1^19_32", "[8.9e-8,3.7e-7]", "[-2.3e-3,2.5e-3]", "0.2^76_82"},
    {"B13", "-2.^13_03", "[-4.2e-8,5.6e-8]", "[-3.2e-5,3.2e-5]", "0.^38_41"},
    {"B14", "4.^39_41", "[7.8e-8,1.9e-7]", "[-1.1e-4,1.0e-4]", "0.2^76_82"},
    {"B15", "8.5^35_43", "[-9.0e-10,1.3e-7]", "[-7.7e-5,6.1e-5]", "0.0^88_91"},
    {"B16", "1^4.9_5.1", "[-7.3e-8,7.4e-8]", "[-7.0e-4,8.8e-4]", "-0.^42_28"},
    {"B21", "4.^39_41", "[7.8e-8,1.9e-7]", "[-1.1e-4,1.0e-4]", "0.2^76_82"},
    {"B22", "14.^55_62", "[-6.0e-8,6.0e-8]", "[-5.9e-6,5.9e-6]", "0.1^77_91"},
    {"B23", "-13.35^59_12", "[-9.2e-10,9.2e-10]", "[-4.1e-5,6.6e-5]", "-0.0000^46_33"},
    {"B24", "3^0.9_1.1", "[-2.5e-8,1.9e-7]", "[-1.5e-4,1.9e-4]", "0.04^22_52"},
    {"B25", "-29.^79_66", "[-3.5e-7,3.5e-7]", "[-1.7e-3,1.6e-3]", "-0.^28_19"},
    {"B31", "8.5^35_43", "[-9.0e-10,1.3e-7]", "[-7.7e-5,6.1e-5]", "0.0^88_91"},
    {"B32", "10.^09_14", "[-6.2e-8,6.3e-8]", "[-5.8e-6,5.8e-6]", "0.28^21_74"},
    {"B33", "15.^49_51", "[-3.6e-8,1.2e-7]", "[-7.2e-5,9.5e-5]", "0.02^11_26"},
    {"B34", "-14.94^63_18", "[-5.5e-8,5.4e-8]", "[-5.0e-5,4.9e-5]", "-0.14^52_36"},
    {"B35", "-9.^96_88", "[-6.3e-7,6.3e-7]", "[-1.2e-3,1.2e-3]", "-0.0^87_48"},
    {"B41", "-6.^62_47", "[-7.3e-8,7.4e-8]", "[-7.2e-4,8.0e-4]", "-0.^21_08"},
    {"B42", "15.^13_60", "[-5.5e-8,5.6e-8]", "[-2.5e-5,2.5e-5]", "-1.^40_17"},
    {"B43", "-0.^64_52", "[-3.5e-7,3.5e-7]", "[-1.7e-3,1.7e-3]", "-0.^13_05"},
    {"B44", "9.^07_15", "[-6.2e-7,6.3e-7]", "[-1.3e-3,1.2e-3]", "-0.0^73_36"},
    {"B45", "-751.^73_06", "[-3.0e-7,3.0e-7]", "[-1.4e-2,1.2e-2]", "[-4.2,-3.8]"},
    {"B46", "50.^27_33", "[-6.9e-7,6.9e-7]", "[-5.3e-4,6.1e-4]", "0.6^53_99"},
    {"B47", "68^5.1_7.2", "[-2.1e-6,2.1e-6]", "[-2.9e-2,3.2e-2]", "[3.7,4.7]"},
    {"B51", "21.5^63_84", "[-6.8e-8,8.0e-8]", "[-2.1e-4,3.1e-4]", "-0.^22_19"},
    {"B52", "-15.^13_02", "[-8.9e-8,8.8e-8]", "[-1.1e-5,1.1e-5]", "-0.0^77_39"},
    {"B53", "-58.^31_27", "[-5.1e-8,5.1e-8]", "[-1.2e-3,9.7e-4]", "-0.^31_28"},
    {"B54", "-38.0^75_55", "[-5.5e-8,5.5e-8]", "[-6.8e-4,6.7e-4]", "-0.0^32_19"},
    {"B55", "10^3.5_4.1", "[-5.1e-8,5.1e-8]", "[-8.3e-3,8.5e-3]", "0.^34_52"},
    {"B61", "48.5^07_82", "[-4.9e-8,6.3e-8]", "[2.5e-5,4.1e-5]", "0.5^09_27"},
    {"B62", "33.6^46_95", "[-2.2e-7,2.2e-7]", "[-5.0e-4,5.4e-4]", "0.4^77_88"},
    {"B63", "-61^5.3_4.7", "[-4.7e-8,4.7e-8]", "[-5.4e-6,5.4e-6]", "0.4^18_96"},
    {"B64", "49^4.9_5.9", "[-1.1e-7,1.1e-7]", "[-4.7e-6,4.7e-6]", "-0.^54_41"},
    {"B65", "49.^09_16", "[-6.1e-8,6.1e-8]", "[-4.9e-6,4.9e-6]", "0.4^77_88"},
    {"B66", "7.4^18_57", "[-6.2e-8,6.2e-8]", "[-4.7e-6,4.7e-6]", "-0.0^85_63"},
    {"B67", "-24.^62_15", "[-5.7e-8,5.7e-8]", "[-1.1e-5,1.1e-5]", "-0.^68_48"},
    {"B71", "-84.^81_78", "[-8.1e-10,8.0e-10]", "[-3.5e-6,3.6e-6]", "-0.62^79_12"},
    {"B72", "-29.3^69_59", "[-1.4e-7,7.0e-8]", "[-4.6e-6,4.6e-6]", "-0.22^39_18"},
    {"B73", "13^7.8_8.1", "[-8.8e-10,5.4e-10]", "[-3.0e-6,2.8e-6]", "0.8^57_94"},
    {"B74", "7.0^85_96", "[-2.1e-9,2.4e-9]", "[-3.5e-6,3.3e-6]", "-0.22^39_17"},
    {"B75", "-2.8^23_14", "[-4.2e-9,4.5e-9]", "[-3.9e-6,3.7e-6]", "0.04^29_29"},
    {"B76", "-35.^63_52", "[-5.0e-8,5.2e-8]", "[-3.6e-6,3.6e-6]", "0.0^42_68"},
}};

} // namespace

const std::map<std::pair<std::string, std::string>, Interval>& reference_table() {
    static const auto table = [] {
        std::map<std::pair<std::string, std::string>, Interval> t;
        for (const Row& r : kRows) {
            t.emplace(std::make_pair(r.id, "nonsingular"), decode_reference_cell(r.bounded));
            t.emplace(std::make_pair(r.id, "singular-center"), decode_reference_cell(r.center));
            t.emplace(std::make_pair(r.id, "singular-first"), decode_reference_cell(r.y_axis));
            t.emplace(std::make_pair(r.id, "singular-second"), decode_reference_cell(r.z_axis));
        }
        return t;
    }();
    return table;
}

Interval reference_part1_low_A() { return decode_reference_cell("0.000^01_27"); }
Interval reference_part1_high_A() { return decode_reference_cell("-0.000^28_02"); }

Interval reference_part2_total() {
    return hull(Interval::from_decimal("38.706"), Interval::from_decimal("48.787"));
}

double reference_part2_total_min() { return 30.0; }

} // namespace rq
