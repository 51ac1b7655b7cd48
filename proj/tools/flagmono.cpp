// Command-line front end: matroid enumeration, h-vector computation,
// weak/strong map verdicts and the theorem-verification suite.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "flagmono/catalog.hpp"
#include "flagmono/chains.hpp"
#include "flagmono/errors.hpp"
#include "flagmono/io.hpp"
#include "flagmono/maps.hpp"
#include "flagmono/sr.hpp"
#include "flagmono/suite.hpp"

namespace {

using nlohmann::json;

int enumeration_cap() {
    if (const char* env = std::getenv("FLAGMONO_CAP")) return std::atoi(env);
    return flagmono::kDefaultEnumCap;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw flagmono::ParseError("cannot open " + out_path + " for writing");
    out << text;
}

int cmd_enumerate(int n, int r, const std::string& out, const std::string& format, bool dedup_iso) {
    flagmono::Catalog cat = flagmono::enumerate_matroids(n, r, enumeration_cap());
    if (dedup_iso) {
        std::set<std::vector<flagmono::Subset>> seen;
        flagmono::Catalog reduced;
        for (auto& e : cat.entries)
            if (seen.insert(flagmono::canonical_basis_key(e.m)).second)
                reduced.entries.push_back(std::move(e));
        cat = std::move(reduced);
    }
    flagmono::write_matroids_file(out, cat, format == "json");
    std::cout << cat.entries.size() << " matroids written to " << out << "\n";
    return 0;
}

json sr_table(const flagmono::Matroid& m) {
    flagmono::FlatLattice lat = flagmono::flat_lattice(m);
    flagmono::FlagVector h = flagmono::flag_h_vector(lat);
    json rows = json::array();
    for (flagmono::RankSet s : flagmono::ordered_rank_sets(lat.proper_rank())) {
        flagmono::RelationMatrix rel = flagmono::theta_relations(lat, s);
        const int rank = flagmono::exact_rank(rel.mat);
        const long long dim = static_cast<long long>(rel.columns.size()) - rank;
        rows.push_back({{"S", flagmono::rank_set_to_json(s)},
                        {"S_mask", s},
                        {"chains", rel.columns.size()},
                        {"relation_rank", rank},
                        {"quotient_dim", dim},
                        {"h", h.at(s)},
                        {"agree", dim == h.at(s)}});
    }
    return rows;
}

std::string sr_table_csv(const json& rows) {
    std::ostringstream out;
    out << "S_mask,size,chains,relation_rank,quotient_dim,h,agree\n";
    for (const auto& row : rows)
        out << row.at("S_mask").get<long long>() << "," << row.at("S").size() << ","
            << row.at("chains").get<long long>() << "," << row.at("relation_rank").get<long long>()
            << "," << row.at("quotient_dim").get<long long>() << "," << row.at("h").get<long long>()
            << "," << (row.at("agree").get<bool>() ? 1 : 0) << "\n";
    return out.str();
}

int cmd_hvector(const std::string& file, const std::string& mode, const std::string& format,
                const std::string& out) {
    std::vector<flagmono::Matroid> ms = flagmono::read_matroids_file(file);
    json results = json::array();
    std::ostringstream csv;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        const flagmono::Matroid& m = ms[i];
        if (mode == "sr") {
            json rows = sr_table(m);
            if (format == "csv") {
                csv << sr_table_csv(rows);
            } else {
                results.push_back({{"record", i}, {"table", rows}});
            }
        } else if (mode == "independence") {
            auto f = flagmono::independence_f_vector(m);
            auto h = flagmono::independence_h_vector(m);
            if (format == "csv") {
                csv << "k,f,h\n";
                for (std::size_t k = 0; k < f.size(); ++k) csv << k << "," << f[k] << "," << h[k] << "\n";
            } else {
                results.push_back({{"record", i}, {"f", f}, {"h", h}});
            }
        } else if (mode == "coarse") {
            flagmono::CoarseVectors cv =
                flagmono::coarse_vectors(flagmono::flag_f_vector(flagmono::flat_lattice(m)));
            if (format == "csv") {
                csv << "k,f,h\n";
                for (std::size_t k = 0; k < cv.f.size(); ++k)
                    csv << k << "," << cv.f[k] << "," << cv.h[k] << "\n";
            } else {
                results.push_back({{"record", i}, {"f", cv.f}, {"h", cv.h}});
            }
        } else {  // flag
            flagmono::FlagVector f = flagmono::flag_f_vector(flagmono::flat_lattice(m));
            flagmono::FlagVector h = flagmono::h_from_f(f);
            if (format == "csv") {
                csv << flagmono::flag_vector_to_csv(f, h);
            } else {
                json entries = json::array();
                for (flagmono::RankSet s : flagmono::ordered_rank_sets(f.r))
                    entries.push_back(
                        {{"S", flagmono::rank_set_to_json(s)}, {"f", f.at(s)}, {"h", h.at(s)}});
                results.push_back({{"record", i}, {"r", f.r}, {"entries", entries}});
            }
        }
    }
    write_output(out, format == "csv" ? csv.str() : results.dump(2) + "\n");
    return 0;
}

int cmd_check_pair(const std::string& file_a, const std::string& file_b) {
    auto ms_a = flagmono::read_matroids_file(file_a);
    auto ms_b = flagmono::read_matroids_file(file_b);
    if (ms_a.empty() || ms_b.empty()) throw flagmono::ParseError("empty matroid file");
    const flagmono::Matroid& a = ms_a.front();
    const flagmono::Matroid& b = ms_b.front();

    flagmono::MapWitness weak = flagmono::is_weak_map(a, b);
    flagmono::MapWitness strong = flagmono::is_strong_map(a, b);
    const bool rank_preserving = a.rank() == b.rank();

    json details = {{"rank_a", a.rank()}, {"rank_b", b.rank()}};
    details["weak_witness"] =
        weak.violation ? json(flagmono::elements(*weak.violation)) : json(nullptr);
    details["strong_witness"] =
        strong.violation ? json(flagmono::elements(*strong.violation)) : json(nullptr);

    json verdict = {{"weak", weak.holds()},
                    {"strong", strong.holds()},
                    {"rank_preserving", rank_preserving},
                    {"flag_h_monotone", nullptr}};
    bool violation = false;

    if (weak.holds()) {
        // coarse monotonicity applies to every weak pair
        auto ca = flagmono::coarse_vectors(flagmono::flag_f_vector(flagmono::flat_lattice(a)));
        auto cb = flagmono::coarse_vectors(flagmono::flag_f_vector(flagmono::flat_lattice(b)));
        json coarse_viol = json::array();
        for (int k = 0; k <= b.rank() - 1; ++k) {
            long long va = k < static_cast<int>(ca.h.size()) ? ca.h[k] : 0;
            long long vb = k < static_cast<int>(cb.h.size()) ? cb.h[k] : 0;
            if (va < vb) coarse_viol.push_back({{"k", k}, {"h_a", va}, {"h_b", vb}});
        }
        details["coarse_h_monotone"] = coarse_viol.empty();
        details["coarse_h_violations"] = coarse_viol;
        if (!coarse_viol.empty()) violation = true;

        if (rank_preserving) {
            flagmono::FlagVector ha = flagmono::flag_h_vector(flagmono::flat_lattice(a));
            flagmono::FlagVector hb = flagmono::flag_h_vector(flagmono::flat_lattice(b));
            json flag_viol = json::array();
            for (flagmono::RankSet s = 0; s < ha.v.size(); ++s)
                if (ha.at(s) < hb.at(s))
                    flag_viol.push_back({{"S", flagmono::rank_set_to_json(s)},
                                         {"h_a", ha.at(s)},
                                         {"h_b", hb.at(s)}});
            verdict["flag_h_monotone"] = flag_viol.empty();
            details["flag_h_violations"] = flag_viol;
            details["flag_h_a"] = flagmono::flag_vector_to_json(ha);
            details["flag_h_b"] = flagmono::flag_vector_to_json(hb);
            if (!flag_viol.empty()) violation = true;
        }
    }
    verdict["details"] = std::move(details);
    std::cout << verdict.dump(2) << "\n";
    return violation ? 2 : 0;
}

int cmd_suite(int n_max, const std::string& checks_csv, int jobs, std::uint64_t seed,
              const std::string& format, const std::string& out, int random_linear_count,
              int random_n) {
    const int cap = enumeration_cap();
    flagmono::Catalog cat = flagmono::exhaustive_catalog(n_max, cap);
    for (int i = 0; i < random_linear_count; ++i) {
        const int p = i % 2 == 0 ? 2 : 3;
        const int d = 3 + i % 3;
        const std::uint64_t s = seed ^ (0x5851f42d4c957f2dull * (i + 1));
        flagmono::Matroid m = flagmono::random_linear(p, d, random_n, s);
        cat.entries.push_back({"rl#" + std::to_string(i) + "(p=" + std::to_string(p) +
                                   ",d=" + std::to_string(d) + ",n=" + std::to_string(random_n) +
                                   ",seed=" + std::to_string(s) + ")",
                               "random-linear", std::move(m)});
    }

    flagmono::SuiteReport report =
        flagmono::run_suite(cat, flagmono::parse_checks(checks_csv), jobs, seed);
    if (format == "csv") {
        write_output(out, report.to_csv());
    } else {
        json j = report.to_json();
        j["n_max"] = n_max;
        j["cap"] = cap;
        j["random_linear"] = random_linear_count;
        write_output(out, j.dump(2) + "\n");
    }
    for (const auto& c : report.checks)
        std::cerr << c.name << ": " << (c.passed() ? "pass" : "FAIL") << " (items=" << c.items
                  << ", violations=" << c.violations << ", " << static_cast<long long>(c.ms)
                  << " ms)\n";
    return report.all_passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flag h-vector monotonicity toolkit"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate all labeled matroids of rank r on [n]");
    int en_n = 0, en_r = 0;
    bool en_dedup = false;
    std::string en_out, en_format = "text";
    enumerate->add_option("--n", en_n, "ground set size")->required();
    enumerate->add_option("--r", en_r, "rank")->required();
    enumerate->add_option("--out", en_out, "output file")->required();
    enumerate->add_option("--format", en_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_flag("--dedup-iso", en_dedup, "keep one representative per isomorphism class");

    auto* hvector = app.add_subcommand("hvector", "flag/coarse/SR/independence vectors of matroids");
    std::string hv_file, hv_format = "json", hv_out;
    bool hv_flag = false, hv_coarse = false, hv_sr = false, hv_indep = false;
    hvector->add_option("file", hv_file, "matroid file (text or JSON)")->required();
    hvector->add_flag("--flag", hv_flag, "flag f/h-vectors (default)");
    hvector->add_flag("--coarse", hv_coarse, "coarse f/h-vectors of the order complex");
    hvector->add_flag("--sr", hv_sr, "Stanley-Reisner quotient dimensions per degree");
    hvector->add_flag("--independence", hv_indep, "independence-complex f/h-vectors");
    hvector->add_option("--format", hv_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    hvector->add_option("--out", hv_out, "output file (default stdout)");

    auto* check_pair = app.add_subcommand("check-pair", "weak/strong verdict and monotonicity for a pair");
    std::string cp_a, cp_b;
    check_pair->add_option("A", cp_a, "matroid file for A")->required();
    check_pair->add_option("B", cp_b, "matroid file for B")->required();

    auto* suite = app.add_subcommand("suite", "run the theorem-verification suite");
    int su_n_max = 6, su_jobs = 0, su_random = 0, su_random_n = 8;
    std::uint64_t su_seed = 20250810;
    std::string su_checks = "all", su_format = "json", su_out;
    suite->add_option("--n-max", su_n_max, "exhaustive catalog bound (default 6)");
    suite->add_option("--checks", su_checks, "comma-separated check names, or 'all'");
    suite->add_option("--jobs", su_jobs, "worker threads (0 = hardware)");
    suite->add_option("--seed", su_seed, "seed for randomized checks");
    suite->add_option("--format", su_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    suite->add_option("--out", su_out, "report file (default stdout)");
    suite->add_option("--random-linear", su_random, "supplementary random linear matroids");
    suite->add_option("--random-n", su_random_n, "ground set size for random linear matroids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(en_n, en_r, en_out, en_format, en_dedup);
        if (hvector->parsed()) {
            int picked = hv_flag + hv_coarse + hv_sr + hv_indep;
            if (picked > 1) {
                std::cerr << "pick at most one of --flag/--coarse/--sr/--independence\n";
                return 1;
            }
            std::string mode = hv_coarse ? "coarse" : hv_sr ? "sr" : hv_indep ? "independence" : "flag";
            return cmd_hvector(hv_file, mode, hv_format, hv_out);
        }
        if (check_pair->parsed()) return cmd_check_pair(cp_a, cp_b);
        if (suite->parsed())
            return cmd_suite(su_n_max, su_checks, su_jobs, su_seed, su_format, su_out, su_random,
                             su_random_n);
    } catch (const flagmono::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
