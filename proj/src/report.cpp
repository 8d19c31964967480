#include "borpi/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "borpi/errors.hpp"

namespace borpi {

long compare_digits(const BigReal& pi_value, std::string_view reference_text) {
    std::string ref;
    ref.reserve(reference_text.size());
    for (char c : reference_text)
        if (!std::isspace(static_cast<unsigned char>(c))) ref.push_back(c);
    if (ref.empty()) throw ParseError("reference digits are empty");

    auto dot = ref.find('.');
    if (dot == std::string::npos || dot == 0)
        throw ParseError("reference digits must look like 3.14159...");
    std::string_view ref_int{ref.data(), dot};
    std::string_view ref_frac{ref.data() + dot + 1, ref.size() - dot - 1};
    for (std::string_view part : {ref_int, ref_frac})
        for (char c : part)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("reference digits contain a non-digit character");

    // render beyond the comparison window so the final printed digit is not
    // rounded inside it; digits past the value's own accuracy just stop the
    // match, which is the right answer
    long capacity = static_cast<long>(static_cast<double>(pi_value.precision_bits()) * 0.30103);
    long window = std::min<long>(static_cast<long>(ref_frac.size()), capacity) + 8;
    std::string computed = pi_value.to_fixed(window);

    auto cdot = computed.find('.');
    std::string_view comp_int{computed.data(), cdot};
    std::string_view comp_frac{computed.data() + cdot + 1, computed.size() - cdot - 1};

    if (comp_int != ref_int) return 0;
    long matched = 0;
    size_t limit = std::min(comp_frac.size(), ref_frac.size());
    while (static_cast<size_t>(matched) < limit &&
           comp_frac[static_cast<size_t>(matched)] == ref_frac[static_cast<size_t>(matched)])
        ++matched;
    return matched;
}

std::string pi_digit_string(const BigReal& pi_value, long fraction_digits) {
    return pi_value.to_fixed(fraction_digits);
}

std::string format_digit_block(std::string_view pi_digits) {
    auto dot = pi_digits.find('.');
    std::string out;
    if (dot == std::string_view::npos) {
        out = pi_digits;
        out += '\n';
        return out;
    }
    out.assign(pi_digits.substr(0, dot + 1));
    out += '\n';
    std::string_view frac = pi_digits.substr(dot + 1);
    for (size_t i = 0; i < frac.size(); i += 10) {
        out += frac.substr(i, 10);
        if ((i / 10) % 5 == 4 || i + 10 >= frac.size())
            out += '\n';
        else
            out += ' ';
    }
    return out;
}

nlohmann::json run_report_json(const RunResult& result, long digits_verified,
                               std::string_view oracle) {
    nlohmann::json per = nlohmann::json::array();
    for (const auto& sample : result.per_iteration)
        per.push_back({{"n", sample.n}, {"est_digits", sample.est_digits}, {"ms", sample.millis}});
    return nlohmann::json{{"scheme", std::string(scheme_name(result.scheme))},
                          {"identity", result.identity_id},
                          {"digits_requested", result.target_digits},
                          {"digits_verified", digits_verified},
                          {"iterations", result.iterations_used},
                          {"pi", pi_digit_string(result.pi, result.target_digits)},
                          {"per_iteration", per},
                          {"oracle", std::string(oracle)}};
}

std::string run_report_text(const RunResult& result, long digits_verified,
                            std::string_view oracle) {
    std::ostringstream out;
    out << "scheme:           " << scheme_name(result.scheme) << "\n";
    out << "identity:         " << result.identity_id << "\n";
    out << "digits requested: " << result.target_digits << "\n";
    out << "digits verified:  " << digits_verified << " (oracle: " << oracle << ")\n";
    out << "iterations:       " << result.iterations_used << "\n";
    out << "convergence:\n";
    for (const auto& sample : result.per_iteration) {
        std::ostringstream row;
        row.setf(std::ios::fixed);
        row.precision(3);
        row << "  n=" << sample.n << "  est_digits=" << sample.est_digits
            << "  ms=" << sample.millis;
        out << row.str() << "\n";
    }
    out << "pi:\n" << format_digit_block(pi_digit_string(result.pi, result.target_digits));
    return out.str();
}

}  // namespace borpi
