#include "jetrank/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace jetrank {

namespace {

using json = nlohmann::ordered_json;

json coords_to_json(const ProjPoint& pt) {
    json a = json::array();
    for (const Fp& c : pt.coords) a.push_back(c.value());
    return a;
}

ProjPoint coords_from_json(const json& a, const PrimeModulus& p) {
    ProjPoint pt;
    for (const auto& v : a) pt.coords.emplace_back(v.get<std::uint64_t>(), p);
    return pt;
}

json weight_to_json(const Weight& w) {
    json j;
    j["chi"] = w.chi;
    j["lengths"] = w.lengths;
    return j;
}

} // namespace

std::string configuration_to_json(const Configuration& c, const PrimeModulus& p) {
    json doc;
    doc["version"] = 1;
    doc["n"] = c.n;
    doc["p"] = p.value();
    doc["seed"] = c.seed;
    doc["jets"] = json::array();
    for (const Jet& j : c.jets) {
        json jj;
        jj["axis"] = json::array({coords_to_json(j.axis.a), coords_to_json(j.axis.b)});
        jj["t0"] = j.support_param.value();
        jj["length"] = j.length;
        doc["jets"].push_back(std::move(jj));
    }
    doc["free_points"] = json::array();
    for (const ProjPoint& pt : c.free_points) doc["free_points"].push_back(coords_to_json(pt));
    return doc.dump(2) + "\n";
}

Configuration configuration_from_json(const std::string& text, PrimeModulus* p_out) {
    const json doc = json::parse(text);
    if (doc.at("version").get<int>() != 1)
        throw std::invalid_argument("unsupported configuration document version");
    const PrimeModulus p(doc.at("p").get<std::uint64_t>());
    Configuration c;
    c.n = doc.at("n").get<int>();
    c.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& jj : doc.at("jets")) {
        Jet j;
        j.axis.a = coords_from_json(jj.at("axis").at(0), p);
        j.axis.b = coords_from_json(jj.at("axis").at(1), p);
        j.support_param = Fp(jj.at("t0").get<std::uint64_t>(), p);
        j.length = jj.at("length").get<long>();
        c.jets.push_back(std::move(j));
    }
    for (const auto& pj : doc.at("free_points")) c.free_points.push_back(coords_from_json(pj, p));
    if (p_out) *p_out = p;
    return c;
}

std::string sweep_report_json(const SweepResult& r) {
    json doc;
    doc["n"] = r.n;
    doc["d"] = r.d;
    doc["p"] = r.p;
    doc["base_seed"] = r.base_seed;
    doc["verdicts"] = json::array();
    for (const Verdict& v : r.verdicts) {
        json jv;
        jv["weight"] = weight_to_json(v.weight);
        jv["seed"] = v.seed;
        jv["covered"] = v.predicted.covered;
        jv["expect_max_rank"] = v.predicted.expect_max_rank;
        jv["expected_rank"] = v.predicted.expected_rank;
        jv["measured_rank"] = v.measured_rank;
        jv["nullity"] = v.nullity;
        jv["agrees"] = v.agrees;
        jv["retried"] = v.retried;
        doc["verdicts"].push_back(std::move(jv));
    }
    return doc.dump(2) + "\n";
}

std::string sweep_report_csv(const SweepResult& r) {
    std::ostringstream os;
    os << "n,d,p,base_seed,chi,lengths,seed,covered,expect_max_rank,expected_rank,"
          "measured_rank,nullity,agrees,retried\n";
    for (const Verdict& v : r.verdicts) {
        os << r.n << ',' << r.d << ',' << r.p << ',' << r.base_seed << ',' << v.weight.chi
           << ',';
        for (std::size_t i = 0; i < v.weight.lengths.size(); ++i) {
            if (i) os << ' ';
            os << v.weight.lengths[i];
        }
        os << ',' << v.seed << ',' << (v.predicted.covered ? 1 : 0) << ','
           << (v.predicted.expect_max_rank ? 1 : 0) << ',' << v.predicted.expected_rank << ','
           << v.measured_rank << ',' << v.nullity << ',' << (v.agrees ? 1 : 0) << ','
           << (v.retried ? 1 : 0) << '\n';
    }
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

} // namespace jetrank
