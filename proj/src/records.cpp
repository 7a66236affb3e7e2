#include "unitfrac/records.hpp"

namespace unitfrac {

std::string jsonl_line(const SolutionRecord& rec) {
    std::string out = "{\"m\":" + rec.m.get_str() + ",\"n\":" + rec.n.get_str() +
                      ",\"k\":" + std::to_string(rec.k) + ",\"denominators\":[";
    for (size_t i = 0; i < rec.denominators.size(); ++i) {
        if (i) out += ',';
        out += rec.denominators[i].get_str();
    }
    out += "]}";
    return out;
}

std::string csv_header(unsigned k) {
    std::string out = "m,n,k";
    for (unsigned i = 1; i <= k; ++i) out += ",a" + std::to_string(i);
    return out;
}

std::string csv_line(const SolutionRecord& rec) {
    std::string out = rec.m.get_str() + ',' + rec.n.get_str() + ',' + std::to_string(rec.k);
    for (const mpz_class& a : rec.denominators) out += ',' + a.get_str();
    return out;
}

}  // namespace unitfrac
