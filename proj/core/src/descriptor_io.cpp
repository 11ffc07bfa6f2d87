#include "argonaut/descriptor_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "argonaut/errors.hpp"

namespace argonaut {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw Error("trailing characters in number '" + text + "'");
    return v;
}

// Index of the sign splitting real and imaginary parts, or npos. Signs inside
// an exponent (preceded by e/E) and a leading sign do not split.
std::size_t split_point(const std::string& t) {
    for (std::size_t i = t.size(); i-- > 1;) {
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') return i;
    }
    return std::string::npos;
}

double parse_imag_coeff(const std::string& text) {
    if (text.empty() || text == "+") return 1.0;
    if (text == "-") return -1.0;
    return parse_real(text);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

bool parse_bool(const std::string& raw) {
    const std::string v = lower(trim(raw));
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw Error("invalid boolean '" + raw + "'");
}

class CsvCoefficients final : public CoefficientSource {
public:
    explicit CsvCoefficients(std::vector<Complex> table) : table_(std::move(table)) {}
    Complex lambda(std::uint64_t n) const override {
        if (n == 0 || n > table_.size())
            throw IncompleteTable("coefficient index outside the loaded table");
        return table_[n - 1];
    }
    std::uint64_t max_index() const override { return table_.size(); }

private:
    std::vector<Complex> table_;
};

}  // namespace

Complex parse_complex(const std::string& text) {
    const std::string t = trim(text);
    if (t.empty()) throw Error("empty complex literal");
    if (t.back() == 'i' || t.back() == 'I') {
        const std::string body = t.substr(0, t.size() - 1);
        const std::size_t k = split_point(body);
        if (k == std::string::npos) return Complex(0.0, parse_imag_coeff(body));
        return Complex(parse_real(body.substr(0, k)), parse_imag_coeff(body.substr(k)));
    }
    return Complex(parse_real(t), 0.0);
}

LFunctionDescriptor descriptor_from_builtin(const std::string& name) {
    const std::string t = trim(name);
    if (t == "zeta") return zeta_descriptor();
    if (t.rfind("dirichlet:", 0) == 0) {
        const std::vector<std::string> parts = split(t, ':');
        if (parts.size() != 3)
            throw Error("builtin Dirichlet selector must look like dirichlet:q:index");
        const unsigned long q = std::stoul(parts[1]);
        const unsigned long index = std::stoul(parts[2]);
        return dirichlet_descriptor(dirichlet_character(std::uint32_t(q), std::uint32_t(index)));
    }
    throw Error("unknown builtin '" + t + "' (expected zeta or dirichlet:q:index)");
}

std::shared_ptr<const CoefficientSource> load_coefficient_csv(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open coefficient file " + file.string());
    std::vector<Complex> table;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!std::isdigit(static_cast<unsigned char>(t[0]))) continue;  // header row
        std::string spaced = t;
        std::replace(spaced.begin(), spaced.end(), ',', ' ');
        std::istringstream is(spaced);
        std::uint64_t n = 0;
        double re = 0.0, im = 0.0;
        if (!(is >> n >> re)) throw ParseError("malformed coefficient row", lineno);
        is >> im;  // optional third column
        if (n == 0) throw ParseError("coefficient index must be positive", lineno);
        if (n > 10'000'000) throw ParseError("coefficient index too large", lineno);
        if (n > table.size()) table.resize(std::size_t(n), Complex(0.0, 0.0));
        table[std::size_t(n - 1)] = Complex(re, im);
    }
    if (table.empty()) throw Error("coefficient file " + file.string() + " holds no rows");
    return std::make_shared<CsvCoefficients>(std::move(table));
}

LFunctionDescriptor load_descriptor(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open descriptor file " + file.string());
    std::map<std::string, std::pair<std::string, long>> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value", lineno);
        const std::string key = lower(trim(t.substr(0, eq)));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) throw ParseError("empty key", lineno);
        if (!kv.emplace(key, std::make_pair(value, lineno)).second)
            throw ParseError("duplicate key '" + key + "'", lineno);
    }

    const auto get = [&](const std::string& key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) throw Error("descriptor file misses key '" + key + "'");
        return it->second.first;
    };
    const auto wrap = [&](const std::string& key, auto&& fn) {
        try {
            return fn(get(key));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            const auto it = kv.find(key);
            throw ParseError("key '" + key + "': " + e.what(),
                             it == kv.end() ? 0 : it->second.second);
        }
    };

    if (kv.count("builtin")) return descriptor_from_builtin(get("builtin"));

    const int degree = wrap("degree", [](const std::string& v) { return std::stoi(v); });
    const std::int64_t conductor =
        wrap("conductor", [](const std::string& v) { return std::int64_t(std::stoll(v)); });
    const std::vector<Complex> mu = wrap("mu", [](const std::string& v) {
        std::vector<Complex> out;
        for (const std::string& part : split(v, ',')) out.push_back(parse_complex(part));
        return out;
    });
    const Complex kappa = wrap("kappa", [](const std::string& v) { return parse_complex(v); });
    const double theta = wrap("theta", [](const std::string& v) { return parse_real(v); });
    const int pole_order = wrap("pole_order", [](const std::string& v) { return std::stoi(v); });
    const bool self_dual =
        wrap("self_dual", [](const std::string& v) { return parse_bool(v); });
    std::filesystem::path coeff =
        wrap("coefficients", [](const std::string& v) { return std::filesystem::path(v); });
    if (coeff.is_relative()) coeff = file.parent_path() / coeff;

    std::string id = kv.count("id") ? get("id") : file.stem().string();
    return user_descriptor(std::move(id), degree, conductor, mu, kappa, theta, pole_order,
                           self_dual, load_coefficient_csv(coeff));
}

}  // namespace argonaut
