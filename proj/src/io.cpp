#include "bkf/io.hpp"

#include <sstream>

namespace bkf {

namespace {
constexpr const char* kModule = "cli";

std::vector<int> to_one_based(const ParabolicSubset& p) {
    std::vector<int> out;
    for (int i : p.simple_indices) out.push_back(i + 1);
    return out;
}

ParabolicSubset from_one_based(const std::vector<int>& v) {
    std::vector<int> idx;
    for (int i : v) idx.push_back(i - 1);
    return ParabolicSubset(std::move(idx));
}

std::vector<int> dims_as_ints(const std::vector<std::size_t>& d) {
    return std::vector<int>(d.begin(), d.end());
}
}  // namespace

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.find_first_not_of(" \t") == std::string::npos) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw Error(kModule, "expected a comma-separated integer list, got '" + s + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw Error(kModule, "expected a comma-separated integer list, got '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

nlohmann::json to_json(const QPolynomial& p) {
    nlohmann::json j = nlohmann::json::object();
    for (int d = 0; d <= p.degree(); ++d)
        if (p.coefficient(d) != 0) j[std::to_string(d)] = p.coefficient(d);
    return j;
}

QPolynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw Error(kModule, "polynomial must be a JSON object of degree -> coefficient");
    QPolynomial p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        auto deg = parse_int_list(it.key());
        if (deg.size() != 1 || deg[0] < 0 || !it.value().is_number_integer())
            throw Error(kModule, "bad polynomial term '" + it.key() + "'");
        p += QPolynomial::monomial(deg[0], it.value().get<std::int64_t>());
    }
    return p;
}

nlohmann::json to_json(const FiltrationReport& r) {
    return {{"dims", r.subspace_dims}, {"r", to_json(r.jump_polynomial)}};
}

FiltrationReport filtration_from_json(const nlohmann::json& j) {
    FiltrationReport r;
    r.subspace_dims = j.at("dims").get<std::vector<std::size_t>>();
    r.jump_polynomial = polynomial_from_json(j.at("r"));
    return r;
}

nlohmann::json to_json(const VerificationReport& r) {
    return {{"type", r.type_label},
            {"rank", r.rank},
            {"orbit", r.orbit},
            {"mu", r.mu.coords},
            {"lambda", r.lambda.coords},
            {"parabolic", to_one_based(r.parabolic)},
            {"dims", r.subspace_dims},
            {"r", to_json(r.r)},
            {"m", to_json(r.m)},
            {"equal", r.equal},
            {"certificate", to_string(r.certificate.verdict)},
            {"detail", r.certificate.detail}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.type_label = j.at("type").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.orbit = j.at("orbit").get<std::string>();
    r.mu = Weight(j.at("mu").get<std::vector<int>>());
    r.lambda = Weight(j.at("lambda").get<std::vector<int>>());
    r.parabolic = from_one_based(j.at("parabolic").get<std::vector<int>>());
    r.subspace_dims = j.at("dims").get<std::vector<std::size_t>>();
    r.r = polynomial_from_json(j.at("r"));
    r.m = polynomial_from_json(j.at("m"));
    r.equal = j.at("equal").get<bool>();
    r.certificate.verdict = parse_verdict(j.at("certificate").get<std::string>());
    r.certificate.detail = j.at("detail").get<std::string>();
    return r;
}

std::string to_text(const FiltrationReport& r) {
    std::ostringstream os;
    os << "dims: " << join_ints(dims_as_ints(r.subspace_dims)) << '\n';
    os << "r: " << r.jump_polynomial.to_string() << '\n';
    return os.str();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "type: " << r.type_label << '\n'
       << "rank: " << r.rank << '\n'
       << "orbit: " << r.orbit << '\n'
       << "mu: " << join_ints(r.mu.coords) << '\n'
       << "lambda: " << join_ints(r.lambda.coords) << '\n'
       << "parabolic: " << join_ints(to_one_based(r.parabolic)) << '\n'
       << "dims: " << join_ints(dims_as_ints(r.subspace_dims)) << '\n'
       << "r: " << r.r.to_string() << '\n'
       << "m: " << r.m.to_string() << '\n'
       << "equal: " << (r.equal ? "true" : "false") << '\n'
       << "certificate: " << to_string(r.certificate.verdict) << '\n'
       << "detail: " << r.certificate.detail << '\n';
    return os.str();
}

VerificationReport report_from_text(const std::string& text) {
    VerificationReport r;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto colon = line.find(": ");
        std::string key = line.substr(0, colon == std::string::npos ? line.size() : colon);
        std::string val = colon == std::string::npos ? "" : line.substr(colon + 2);
        if (key == "type") r.type_label = val;
        else if (key == "rank") {
            auto v = parse_int_list(val);
            if (v.size() != 1) throw Error(kModule, "bad rank '" + val + "'");
            r.rank = v[0];
        }
        else if (key == "orbit") r.orbit = val;
        else if (key == "mu") r.mu = Weight(parse_int_list(val));
        else if (key == "lambda") r.lambda = Weight(parse_int_list(val));
        else if (key == "parabolic") r.parabolic = from_one_based(parse_int_list(val));
        else if (key == "dims") {
            auto d = parse_int_list(val);
            r.subspace_dims.assign(d.begin(), d.end());
        } else if (key == "r") r.r = QPolynomial::parse(val);
        else if (key == "m") r.m = QPolynomial::parse(val);
        else if (key == "equal") r.equal = val == "true";
        else if (key == "certificate") r.certificate.verdict = parse_verdict(val);
        else if (key == "detail") r.certificate.detail = val;
        else throw Error(kModule, "unknown report field '" + key + "'");
    }
    return r;
}

}  // namespace bkf
