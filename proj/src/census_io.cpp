#include "salem/census_io.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"
#include "salem/errors.hpp"
#include "salem/version.hpp"

namespace salem {

namespace {

using ordered_json = nlohmann::ordered_json;

long long to_longlong(const Int& v, const char* what) {
    if (!v.fits_slong_p()) fail(errc::IoError, std::string("census value too large for ") + what);
    return static_cast<long long>(v.get_si());
}

} // namespace

std::string census_file_name(int m, const Rat& H) {
    std::string h = rat_to_string(H);
    for (char& ch : h)
        if (ch == '/') ch = '_';
    return "census_m" + std::to_string(m) + "_H" + h + ".jsonl";
}

std::string census_cache_path(const std::string& cache_dir, int m, const Rat& H) {
    return (std::filesystem::path(cache_dir) / census_file_name(m, H)).string();
}

void write_census_jsonl(const CensusSummary& summary, std::ostream& os) {
    ordered_json header;
    header["m"] = summary.m;
    header["H"] = rat_to_string(summary.H);
    header["tool_version"] = kToolVersion;
    header["class_count"] = summary.class_count;
    header["reducible_count"] = summary.reducible_count;
    os << header.dump() << '\n';
    for (const SalemRecord& rec : summary.records) {
        ordered_json row;
        row["m"] = rec.m;
        auto& coeffs = row["coeffs"] = ordered_json::array();
        for (const Int& c : rec.coeffs) coeffs.push_back(to_longlong(c, "coeffs"));
        auto& trace = row["trace_coeffs"] = ordered_json::array();
        for (const Int& c : rec.trace_coeffs) trace.push_back(to_longlong(c, "trace_coeffs"));
        row["alpha_lo"] = rec.alpha_lo;
        row["alpha_hi"] = rec.alpha_hi;
        row["angles"] = rec.angles;
        os << row.dump() << '\n';
    }
}

void save_census(const CensusSummary& summary, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) fail(errc::IoError, "cannot open census file for writing: " + path);
    write_census_jsonl(summary, os);
    if (!os) fail(errc::IoError, "write failed for census file: " + path);
}

CensusSummary read_census_jsonl(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) fail(errc::IoError, "census file is empty");
    CensusSummary sum;
    try {
        ordered_json header = ordered_json::parse(line);
        sum.m = header.at("m").get<int>();
        sum.H = rat_from_string(header.at("H").get<std::string>());
        sum.class_count = header.at("class_count").get<std::uint64_t>();
        sum.reducible_count = header.at("reducible_count").get<std::uint64_t>();
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            ordered_json row = ordered_json::parse(line);
            SalemRecord rec;
            rec.m = row.at("m").get<int>();
            for (const auto& v : row.at("coeffs"))
                rec.coeffs.emplace_back(static_cast<long>(v.get<long long>()));
            for (const auto& v : row.at("trace_coeffs"))
                rec.trace_coeffs.emplace_back(static_cast<long>(v.get<long long>()));
            rec.alpha_lo = row.at("alpha_lo").get<double>();
            rec.alpha_hi = row.at("alpha_hi").get<double>();
            rec.angles = row.at("angles").get<std::vector<double>>();
            if (rec.m != sum.m) fail(errc::IoError, "census record m differs from header m");
            sum.records.push_back(std::move(rec));
        }
    } catch (const ordered_json::exception& e) {
        fail(errc::IoError, std::string("census file is not valid JSONL: ") + e.what());
    }
    sum.irreducible_count = sum.records.size();
    if (sum.class_count != sum.irreducible_count + sum.reducible_count)
        fail(errc::IoError, "census header counters are inconsistent with the record list");
    return sum;
}

CensusSummary load_census(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) fail(errc::IoError, "cannot open census file: " + path);
    return read_census_jsonl(is);
}

void write_census_csv(const CensusSummary& summary, std::ostream& os) {
    os << "m,coeffs,trace_coeffs,alpha_lo,alpha_hi,angles\n";
    std::ostringstream cell;
    cell << std::setprecision(17);
    for (const SalemRecord& rec : summary.records) {
        os << rec.m << ',';
        for (std::size_t i = 0; i < rec.coeffs.size(); ++i)
            os << (i ? ";" : "") << rec.coeffs[i].get_str();
        os << ',';
        for (std::size_t i = 0; i < rec.trace_coeffs.size(); ++i)
            os << (i ? ";" : "") << rec.trace_coeffs[i].get_str();
        cell.str("");
        cell << ',' << rec.alpha_lo << ',' << rec.alpha_hi << ',';
        for (std::size_t i = 0; i < rec.angles.size(); ++i)
            cell << (i ? ";" : "") << rec.angles[i];
        os << cell.str() << '\n';
    }
}

CensusSummary load_or_build_census(int m, const Rat& H, const std::string& cache_dir,
                                   const CensusConfig& cfg) {
    if (cache_dir.empty()) return enumerate_census(m, H, cfg);
    std::string path = census_cache_path(cache_dir, m, H);
    if (std::filesystem::exists(path)) {
        CensusSummary sum = load_census(path);
        if (sum.m != m || sum.H != H)
            fail(errc::IoError, "cached census header does not match the request: " + path);
        return sum;
    }
    CensusSummary sum = enumerate_census(m, H, cfg);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    if (ec) fail(errc::IoError, "cannot create cache directory: " + cache_dir);
    save_census(sum, path);
    return sum;
}

} // namespace salem
