#include "borpi/initial_values.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include "borpi/errors.hpp"

namespace borpi {

namespace {

RadicalExpr rat(long num, long den = 1) { return RadicalExpr::rational(num, den); }
RadicalExpr rsqrt(RadicalExpr e) { return RadicalExpr::sqrt(std::move(e)); }

std::array<InitialValueSet, 5> build_registry() {
    RadicalExpr sqrt2 = rsqrt(rat(2));
    RadicalExpr sqrt3 = rsqrt(rat(3));
    RadicalExpr sqrt6 = rsqrt(rat(6));

    InitialValueSet id1{
        1,
        rat(3) - rat(2) * sqrt2,    // d0 = 3 - 2*sqrt(2)
        rat(48) * sqrt2 - rat(64),  // b0
        rat(20) * sqrt2 - rat(28),  // a0
        rat(4),                     // c0
        rat(6) - rat(4) * sqrt2,    // r0
    };
    InitialValueSet id2{
        2, rat(1) / sqrt2, rat(1), rat(0), rat(2), rat(1, 2),
    };
    InitialValueSet id3{
        3,
        sqrt2 - rat(1),
        rat(8) - rat(4) * sqrt2,
        rat(3) - rat(2) * sqrt2,
        rat(2) * sqrt2,
        sqrt2 - rat(1),
    };
    InitialValueSet id4{
        4,
        (sqrt6 - sqrt2) / rat(4),
        rat(3, 2) + sqrt3,
        rat(1, 4),
        rat(2) * sqrt3,
        (sqrt3 - rat(1)) / rat(2),
    };
    InitialValueSet id5{
        5,
        rsqrt(rat(2) * sqrt2 - rat(2)),  // d0 = sqrt(2*sqrt(2) - 2)
        rat(3) * sqrt2 - rat(4),
        sqrt2 - rat(3, 2),
        sqrt2,
        rat(1, 2),
    };
    return {id1, id2, id3, id4, id5};
}

}  // namespace

const InitialValueSet& identity_set(int identity_id) {
    static const std::array<InitialValueSet, 5> registry = build_registry();
    if (identity_id < 1 || identity_id > 5)
        throw DomainError("identity must be 1..5, got " + std::to_string(identity_id));
    return registry[static_cast<size_t>(identity_id - 1)];
}

ConsistencyReport consistency_check(const InitialValueSet& set, const PrecisionContext& ctx) {
    BigReal d0 = eval(set.d0, ctx);
    BigReal b0 = eval(set.b0, ctx);
    BigReal a0 = eval(set.a0, ctx);
    BigReal c0 = eval(set.c0, ctx);
    BigReal r0 = eval(set.r0, ctx);

    BigReal d0sq = d0 * d0;
    BigReal c0_res = abs(c0 - b0 / (1 - d0sq));
    BigReal a0_res = abs(a0 - (r0 - c0 * d0sq / 2));
    BigReal tol = pow10(-ctx.working_digits() + 4, ctx);
    return ConsistencyReport{std::move(c0_res), std::move(a0_res), std::move(tol)};
}

InitialValueSet parse_initial_value_set(std::string_view text) {
    std::map<std::string, RadicalExpr> fields;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = expression'");
        std::string key = line.substr(0, eq);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        if (key != "d0" && key != "b0" && key != "a0" && key != "c0" && key != "r0")
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (fields.count(key))
            throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        try {
            fields.emplace(key, parse_radical(line.substr(eq + 1)));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    for (const char* key : {"d0", "b0", "a0", "c0", "r0"})
        if (!fields.count(key)) throw ParseError(std::string("missing key '") + key + "'");
    return InitialValueSet{0,
                           fields.at("d0"),
                           fields.at("b0"),
                           fields.at("a0"),
                           fields.at("c0"),
                           fields.at("r0")};
}

InitialValueSet load_initial_value_set(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open initial-value file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_initial_value_set(buf.str());
}

void validate_initial_value_set(const InitialValueSet& set, const PrecisionContext& ctx) {
    BigReal d0 = eval(set.d0, ctx);
    if (!(d0 > 0 && d0 < 1))
        throw DomainError("initial d0 must lie strictly between 0 and 1");
    if (!(eval(set.r0, ctx) > 0)) throw DomainError("initial r0 must be positive");
    ConsistencyReport report = consistency_check(set, ctx);
    if (!report.pass())
        throw DomainError("initial values fail consistency: |c0 - b0/(1-d0^2)| = " +
                          report.c0_residual.to_sci(3) + ", |a0 - (r0 - c0*d0^2/2)| = " +
                          report.a0_residual.to_sci(3) + ", tolerance " +
                          report.tolerance.to_sci(3));
}

}  // namespace borpi
