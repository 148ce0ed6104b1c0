#include "qudigit/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qudigit {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_cell(std::complex<double> z) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

}  // namespace

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    const std::int64_t n = m.dim();
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::int64_t i = 0; i < n; ++i) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (std::int64_t j = 0; j < n; ++j) {
            re_row.push_back(m.at(i, j).real());
            im_row.push_back(m.at(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return nlohmann::json{{"n", n}, {"ordering", "decreasing"}, {"re", std::move(re)},
                          {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("ordering") || !j.contains("re") ||
        !j.contains("im"))
        throw std::invalid_argument("matrix json: missing field");
    if (j.at("ordering").get<std::string>() != "decreasing")
        throw std::invalid_argument("matrix json: unknown basis ordering");
    const std::int64_t n = j.at("n").get<std::int64_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (static_cast<std::int64_t>(re.size()) != n || static_cast<std::int64_t>(im.size()) != n)
        throw std::invalid_argument("matrix json: row count mismatch");

    ComplexMatrix m(n);
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& re_row = re.at(static_cast<std::size_t>(i));
        const auto& im_row = im.at(static_cast<std::size_t>(i));
        if (static_cast<std::int64_t>(re_row.size()) != n ||
            static_cast<std::int64_t>(im_row.size()) != n)
            throw std::invalid_argument("matrix json: column count mismatch");
        for (std::int64_t jj = 0; jj < n; ++jj) {
            const double a = re_row.at(static_cast<std::size_t>(jj)).get<double>();
            const double b = im_row.at(static_cast<std::size_t>(jj)).get<double>();
            if (!std::isfinite(a) || !std::isfinite(b))
                throw std::invalid_argument("matrix json: non-finite entry");
            m.at(i, jj) = {a, b};
        }
    }
    return m;
}

std::string matrix_to_csv(const ComplexMatrix& m) {
    const std::int64_t n = m.dim();
    std::string out;
    for (std::int64_t j = 0; j < n; ++j) {
        if (j) out += ',';
        out += "c" + std::to_string(j);
    }
    out += '\n';
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            if (j) out += ',';
            out += fmt_cell(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

std::string coefficients_to_csv(const ShiftCoefficients& coeffs) {
    std::string out = "A,re,im\n";
    for (const auto& [a, c] : coeffs.terms()) {
        const double shift = rat_double(Rational(a) * coeffs.step());
        out += fmt17(shift) + "," + fmt17(c.real()) + "," + fmt17(c.imag()) + "\n";
    }
    return out;
}

std::string report_to_csv(const CommutatorReport& report) {
    std::string out = "s,r,norm,commutes\n";
    for (const auto& e : report.pairs)
        out += std::to_string(e.s) + "," + std::to_string(e.r) + "," + fmt17(e.norm) + "," +
               (e.commutes ? "1" : "0") + "\n";
    return out;
}

std::string convergence_to_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "n_plus,delta_p,err\n";
    for (const auto& r : rows)
        out += std::to_string(r.n_plus) + "," + fmt17(r.delta_p) + "," + fmt17(r.err) + "\n";
    return out;
}

}  // namespace qudigit
