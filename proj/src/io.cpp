#include "flagmono/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "flagmono/errors.hpp"

namespace flagmono {

std::string to_text(const Matroid& m) {
    std::ostringstream out;
    out << "n=" << m.ground_size() << " r=" << m.rank() << "\n";
    for (Subset b : m.bases()) {
        bool first = true;
        for (int e : elements(b)) {
            if (!first) out << ' ';
            out << e;
            first = false;
        }
        if (b != 0) out << '\n';
    }
    return out.str();
}

std::vector<Matroid> read_matroids_text(std::istream& in) {
    std::vector<Matroid> out;
    std::string line;
    int n = -1, r = -1;
    std::vector<Subset> bases;
    auto flush = [&]() {
        if (n < 0) return;
        if (r == 0) bases.push_back(0);
        out.push_back(Matroid::from_bases(n, std::move(bases)));
        bases.clear();
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok.rfind("n=", 0) == 0) {
            flush();
            std::string rtok;
            if (!(ls >> rtok) || rtok.rfind("r=", 0) != 0)
                throw ParseError("header must be 'n=<int> r=<int>', got: " + line);
            try {
                n = std::stoi(tok.substr(2));
                r = std::stoi(rtok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("bad header numbers: " + line);
            }
            continue;
        }
        if (n < 0) throw ParseError("basis line before any header: " + line);
        Subset b = 0;
        std::istringstream es(line);
        int e;
        int count = 0;
        while (es >> e) {
            if (e < 1 || e > n) throw ParseError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
            if (contains(b, e)) throw ParseError("repeated element in basis line: " + line);
            b |= element_bit(e);
            ++count;
        }
        if (count != r) throw ParseError("basis line has " + std::to_string(count) + " elements, expected r=" + std::to_string(r));
        bases.push_back(b);
    }
    flush();
    return out;
}

nlohmann::json to_json(const Matroid& m) {
    nlohmann::json bases = nlohmann::json::array();
    for (Subset b : m.bases()) bases.push_back(elements(b));
    return {{"n", m.ground_size()}, {"bases", bases}};
}

Matroid matroid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("bases"))
        throw ParseError("matroid JSON needs \"n\" and \"bases\"");
    int n = j.at("n").get<int>();
    std::vector<Subset> bases;
    for (const auto& arr : j.at("bases")) {
        Subset b = 0;
        for (const auto& ev : arr) {
            int e = ev.get<int>();
            if (e < 1 || e > n) throw ParseError("element " + std::to_string(e) + " outside [" + std::to_string(n) + "]");
            b |= element_bit(e);
        }
        bases.push_back(b);
    }
    return Matroid::from_bases(n, std::move(bases));
}

nlohmann::json catalog_to_json(const Catalog& cat) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : cat.entries) {
        nlohmann::json j = to_json(e.m);
        j["name"] = e.name;
        j["provenance"] = e.provenance;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::vector<Matroid> read_matroids_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    char c = 0;
    while (in.get(c) && std::isspace(static_cast<unsigned char>(c))) {
    }
    in.unget();
    if (c == '[' || c == '{') {
        nlohmann::json j;
        in >> j;
        std::vector<Matroid> out;
        if (j.is_array())
            for (const auto& rec : j) out.push_back(matroid_from_json(rec));
        else
            out.push_back(matroid_from_json(j));
        return out;
    }
    return read_matroids_text(in);
}

void write_matroids_file(const std::string& path, const Catalog& cat, bool json) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    if (json) {
        out << catalog_to_json(cat).dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        if (i > 0) out << "\n";
        out << to_text(cat.entries[i].m);
    }
}

std::vector<RankSet> ordered_rank_sets(int r) {
    std::vector<RankSet> out;
    for (RankSet s = 0; s < (RankSet{1} << r); ++s) out.push_back(s);
    std::stable_sort(out.begin(), out.end(), [](RankSet a, RankSet b) {
        if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
        return elements(a) < elements(b);
    });
    return out;
}

nlohmann::json rank_set_to_json(RankSet s) { return nlohmann::json(elements(s)); }

nlohmann::json flag_vector_to_json(const FlagVector& fv) {
    nlohmann::json arr = nlohmann::json::array();
    for (RankSet s : ordered_rank_sets(fv.r))
        arr.push_back({{"S", rank_set_to_json(s)}, {"value", fv.at(s)}});
    return arr;
}

std::string flag_vector_to_csv(const FlagVector& f, const FlagVector& h) {
    std::ostringstream out;
    out << "S_mask,size,f,h\n";
    for (RankSet s : ordered_rank_sets(f.r))
        out << s << "," << set_size(s) << "," << f.at(s) << "," << h.at(s) << "\n";
    return out.str();
}

}  // namespace flagmono
