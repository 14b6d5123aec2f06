#include <sstream>

#include <json.hpp>

#include "hopffact/classify.hpp"

namespace hopffact {

std::string report_json(const ClassificationReport& r) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["field"] = r.field.str();
    j["nu"] = r.nu;
    j["d"] = r.d;
    auto& fac = j["nu_over_d_factorization"] = nlohmann::ordered_json::array();
    for (const auto& [p, a] : r.nu_over_d_factorization.factors)
        fac.push_back({p, a});
    j["count"] = r.count;
    j["representatives"] = r.representatives;
    auto& pw = j["pairwise"] = nlohmann::ordered_json::array();
    for (const auto& row : r.pairwise) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (bool b : row) jr.push_back(b);
        pw.push_back(std::move(jr));
    }
    auto& aut = j["aut"] = nlohmann::ordered_json::array();
    for (const AutGroup& g : r.aut) {
        nlohmann::ordered_json jg;
        jg["t"] = g.t;
        auto& els = jg["s_t_elements"] = nlohmann::ordered_json::array();
        for (const auto& [l, s] : g.elements) els.push_back({l, s});
        jg["s_t_order"] = g.order;
        aut.push_back(std::move(jg));
    }
    return j.dump(2) + "\n";
}

std::string report_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "classification m=" << r.m << " n=" << r.n << " field=" << r.field.str() << "\n";
    os << "nu = " << r.nu << ", d = gcd(m, nu) = " << r.d << "\n";
    os << "nu/d factorization:";
    if (r.nu_over_d_factorization.factors.empty()) os << " (none)";
    for (const auto& [p, a] : r.nu_over_d_factorization.factors)
        os << " " << p << "^" << a;
    os << "\n";
    os << "isomorphism classes: " << r.count << "\n";
    os << "representatives (exponents t of xi):";
    for (const auto t : r.representatives) os << " " << t;
    os << "\n";
    os << "pairwise isomorphism table (rows and columns indexed by t ascending):\n";
    for (const auto& row : r.pairwise) {
        os << " ";
        for (bool b : row) os << " " << (b ? 1 : 0);
        os << "\n";
    }
    for (const AutGroup& g : r.aut) {
        os << "aut t=" << g.t << ": |S^t| = " << g.order << ", elements:";
        for (const auto& [l, s] : g.elements) os << " (l=" << l << ",s=" << s << ")";
        os << "; Aut = K* x S^t\n";
    }
    return os.str();
}

std::string report_csv(const ClassificationReport& r) {
    std::ostringstream os;
    os << "key,value\n";
    os << "m," << r.m << "\n";
    os << "n," << r.n << "\n";
    os << "field," << r.field.str() << "\n";
    os << "nu," << r.nu << "\n";
    os << "d," << r.d << "\n";
    os << "nu_over_d," << r.nu / r.d << "\n";
    {
        std::ostringstream fac;
        for (std::size_t i = 0; i < r.nu_over_d_factorization.factors.size(); ++i) {
            if (i) fac << " ";
            fac << r.nu_over_d_factorization.factors[i].first << "^"
                << r.nu_over_d_factorization.factors[i].second;
        }
        os << "nu_over_d_factorization," << fac.str() << "\n";
    }
    os << "count," << r.count << "\n";
    {
        std::ostringstream reps;
        for (std::size_t i = 0; i < r.representatives.size(); ++i) {
            if (i) reps << " ";
            reps << r.representatives[i];
        }
        os << "representatives," << reps.str() << "\n";
    }
    os << "\nt,t_prime,isomorphic\n";
    for (std::size_t t = 0; t < r.pairwise.size(); ++t)
        for (std::size_t t2 = 0; t2 < r.pairwise[t].size(); ++t2)
            os << t << "," << t2 << "," << (r.pairwise[t][t2] ? 1 : 0) << "\n";
    os << "\nt,l,s\n";
    for (const AutGroup& g : r.aut)
        for (const auto& [l, s] : g.elements) os << g.t << "," << l << "," << s << "\n";
    return os.str();
}

}  // namespace hopffact
