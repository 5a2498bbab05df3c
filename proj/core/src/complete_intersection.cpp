#include "cigenera/complete_intersection.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cigenera {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

int parse_int(const std::string& token, const std::string& what) {
    size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse " + what + " from '" + token + "'");
    }
    if (used != token.size())
        throw std::invalid_argument("trailing characters after " + what + " in '" + token + "'");
    return value;
}

std::vector<int> parse_degree_list(const std::string& body) {
    std::vector<int> degrees;
    if (strip(body).empty()) return degrees;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ','))
        degrees.push_back(parse_int(strip(item), "degree"));
    return degrees;
}

}  // namespace

CompleteIntersection::CompleteIntersection(int dimension, std::vector<int> raw_degrees)
    : n_(dimension) {
    if (dimension < 1)
        throw std::invalid_argument("CompleteIntersection: dimension must be >= 1");
    for (int d : raw_degrees) {
        if (d < 1)
            throw std::invalid_argument("CompleteIntersection: degrees must be >= 1");
        if (d > 1) degrees_.push_back(d);  // X_n(d, 1) is X_n(d)
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<int>());
}

CompleteIntersection CompleteIntersection::parse(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty complete-intersection text");

    if (s[0] == 'X' || s[0] == 'x') {
        const size_t open = s.find('(');
        if (open == std::string::npos || s.back() != ')')
            throw std::invalid_argument("expected 'Xn(d1,...,dr)', got '" + text + "'");
        const int n = parse_int(strip(s.substr(1, open - 1)), "dimension");
        return CompleteIntersection(n, parse_degree_list(s.substr(open + 1, s.size() - open - 2)));
    }

    // Flag form: "n=3 d=5,2,2" (d= optional for projective space).
    int n = 0;
    bool have_n = false;
    std::vector<int> degrees;
    std::istringstream in(s);
    std::string token;
    while (in >> token) {
        if (token.rfind("n=", 0) == 0) {
            n = parse_int(token.substr(2), "dimension");
            have_n = true;
        } else if (token.rfind("d=", 0) == 0) {
            degrees = parse_degree_list(token.substr(2));
        } else {
            throw std::invalid_argument("unrecognized token '" + token + "' in '" + text + "'");
        }
    }
    if (!have_n) throw std::invalid_argument("missing n= in '" + text + "'");
    return CompleteIntersection(n, std::move(degrees));
}

long CompleteIntersection::first_chern() const {
    const long degree_sum = std::accumulate(degrees_.begin(), degrees_.end(), 0L);
    return static_cast<long>(n_) + codimension() + 1 - degree_sum;
}

mpz_class CompleteIntersection::total_degree() const {
    mpz_class product(1);
    for (int d : degrees_) product *= d;
    return product;
}

std::string CompleteIntersection::to_string() const {
    std::ostringstream os;
    os << "X" << n_ << "(";
    for (size_t i = 0; i < degrees_.size(); ++i) {
        if (i) os << ",";
        os << degrees_[i];
    }
    os << ")";
    return os.str();
}

TwistedGenusQuery::TwistedGenusQuery(CompleteIntersection ci_, int k_, int level_)
    : ci(std::move(ci_)), k(k_), level(level_) {
    if (level < 1) throw std::invalid_argument("TwistedGenusQuery: level N must be >= 1");
    if (k < 0 || k > level)
        throw std::invalid_argument("TwistedGenusQuery: k must satisfy 0 <= k <= N");
}

}  // namespace cigenera
