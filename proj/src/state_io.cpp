#include "qcb/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcb/errors.hpp"

namespace qcb {

using nlohmann::json;

namespace {

json require_field(const json& doc, const char* key) {
    if (!doc.contains(key)) throw parse_error(std::string("missing field: ") + key);
    return doc.at(key);
}

// Reads an NxN matrix of numbers; any shape or type mismatch against the
// declared dimension is a named validation failure.
ComplexMatrix matrix_from_parts(const json& re, const json& im, std::size_t d) {
    if (!re.is_array() || !im.is_array())
        throw parse_error("real_part and imag_part must be arrays of rows");
    if (re.size() != d || im.size() != d)
        throw validation_error("dimension: matrix rows do not match dim_a*dim_b");
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const json& rrow = re.at(i);
        const json& irow = im.at(i);
        if (!rrow.is_array() || !irow.is_array()) throw parse_error("matrix rows must be arrays");
        if (rrow.size() != d || irow.size() != d)
            throw validation_error("dimension: matrix columns do not match dim_a*dim_b");
        for (std::size_t j = 0; j < d; ++j) {
            if (!rrow.at(j).is_number() || !irow.at(j).is_number())
                throw parse_error("matrix entries must be numbers");
            m(i, j) = Complex(rrow.at(j).get<double>(), irow.at(j).get<double>());
        }
    }
    return m;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    std::string s(buf);
    // Roundoff-scale negatives would otherwise print as "-0.000000".
    if (s == "-0.000000") s = "0.000000";
    return s;
}

std::string sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

BipartiteState load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open state file: " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("malformed state file " + path.string() + ": " + e.what());
    }
    if (!doc.is_object()) throw parse_error("state file must hold a JSON object");

    const json version = require_field(doc, "format_version");
    if (!version.is_number_integer() || version.get<int>() != kStateFormatVersion)
        throw parse_error("unsupported format_version");
    const json ja = require_field(doc, "dim_a");
    const json jb = require_field(doc, "dim_b");
    if (!ja.is_number_integer() || !jb.is_number_integer() || ja.get<long>() < 1 ||
        jb.get<long>() < 1)
        throw parse_error("dim_a and dim_b must be positive integers");
    const std::size_t m = ja.get<std::size_t>();
    const std::size_t n = jb.get<std::size_t>();

    ComplexMatrix matrix =
        matrix_from_parts(require_field(doc, "real_part"), require_field(doc, "imag_part"), m * n);
    return BipartiteState(m, n, std::move(matrix));  // validates hermitian/trace/psd
}

void save_state(const BipartiteState& rho, const std::filesystem::path& path) {
    const std::size_t d = rho.dim();
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < d; ++i) {
        json rrow = json::array();
        json irow = json::array();
        for (std::size_t j = 0; j < d; ++j) {
            rrow.push_back(rho.matrix()(i, j).real());
            irow.push_back(rho.matrix()(i, j).imag());
        }
        re.push_back(std::move(rrow));
        im.push_back(std::move(irow));
    }
    const json doc = {{"format_version", kStateFormatVersion},
                      {"dim_a", rho.dim_a()},
                      {"dim_b", rho.dim_b()},
                      {"real_part", std::move(re)},
                      {"imag_part", std::move(im)}};
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path.string());
    out << doc.dump(1) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string to_string(BoundSource source) {
    switch (source) {
        case BoundSource::ppt: return "ppt";
        case BoundSource::realignment: return "realignment";
        case BoundSource::tie: return "tie";
    }
    return "tie";
}

std::string csv_report_header() {
    return "label,dim_a,dim_b,ppt_norm,realignment_norm,negativity,ccnr_violation,"
           "concurrence_lower_bound,bound_source,entangled";
}

std::string write_report(const EntanglementReport& r, ReportFormat format) {
    switch (format) {
        case ReportFormat::text: {
            std::ostringstream out;
            out << "label:                   " << r.label << '\n'
                << "dimensions:              " << r.dim_a << "x" << r.dim_b << '\n'
                << "ppt_norm:                " << sig6(r.scores.ppt_norm) << '\n'
                << "realignment_norm:        " << sig6(r.scores.realignment_norm) << '\n'
                << "negativity:              " << sig6(r.scores.negativity) << '\n'
                << "ccnr_violation:          " << sig6(r.scores.ccnr_violation) << '\n'
                << "min_pt_eigenvalue:       " << sig6(r.scores.min_pt_eigenvalue) << '\n'
                << "concurrence_lower_bound: " << sig6(r.bound.value) << '\n'
                << "bound_source:            " << to_string(r.bound.source) << '\n';
            if (r.eof_lower_bound)
                out << "eof_lower_bound:         " << sig6(*r.eof_lower_bound) << '\n';
            out << "entangled:               " << (r.entangled_verdict ? "yes" : "no") << '\n';
            return out.str();
        }
        case ReportFormat::csv_row: {
            std::ostringstream out;
            out << r.label << ',' << r.dim_a << ',' << r.dim_b << ','
                << fixed6(r.scores.ppt_norm) << ',' << fixed6(r.scores.realignment_norm) << ','
                << fixed6(r.scores.negativity) << ',' << fixed6(r.scores.ccnr_violation) << ','
                << fixed6(r.bound.value) << ',' << to_string(r.bound.source) << ','
                << (r.entangled_verdict ? "true" : "false");
            return out.str();
        }
        case ReportFormat::structured: {
            json doc = {{"label", r.label},
                        {"dim_a", r.dim_a},
                        {"dim_b", r.dim_b},
                        {"ppt_norm", r.scores.ppt_norm},
                        {"realignment_norm", r.scores.realignment_norm},
                        {"negativity", r.scores.negativity},
                        {"ccnr_violation", r.scores.ccnr_violation},
                        {"min_pt_eigenvalue", r.scores.min_pt_eigenvalue},
                        {"concurrence_lower_bound",
                         {{"value", r.bound.value},
                          {"raw_bound", r.bound.raw_bound},
                          {"source", to_string(r.bound.source)},
                          {"m_used", r.bound.m_used}}},
                        {"eof_lower_bound",
                         r.eof_lower_bound ? json(*r.eof_lower_bound) : json(nullptr)},
                        {"entangled", r.entangled_verdict}};
            return doc.dump(1) + "\n";
        }
    }
    return {};
}

}  // namespace qcb
