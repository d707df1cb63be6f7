#pragma once

#include "rank1sep/expr.hpp"
#include "rank1sep/stackel.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace rank1sep::sov {

/// Parse a Stäckel instance from its text form. The format is line-based:
/// `#` starts a comment; every other nonempty line is `key: value` with keys
///   name: <string>
///   m: <integer>            number of separable coordinates
///   r: <integer>            ignorable coordinates (informational, default 0)
///   vars: <id> ... <id>     m coordinate names
///   S <i> <j>: <expr>       Stäckel matrix entry, expression in vars[i-1]
///   f <i>: <expr>           momentum coefficient, expression in vars[i-1]
///   phi <i>: <expr>         potential term, expression in vars[i-1]
///   domain <i>: <lo> <hi>   admissible open interval of coordinate i
///   sample <i>: <lo> <hi>   interval test points are drawn from (default: domain)
///   ref <i>: <value>        lower limit of the W_i integral
/// Indices are 1-based. Each row-i expression may only use vars[i-1]; any
/// other identifier is rejected, which enforces the Stäckel separation
/// property structurally.
inline StackelSystem parse_stackel(const std::string& text)
{
    StackelSystem sys;
    std::vector<std::string> vars;
    std::map<std::string, std::string> scalars;
    std::map<std::pair<int, int>, std::string> s_entries;
    std::map<int, std::string> f_entries, phi_entries, domain_entries, sample_entries,
        ref_entries;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::invalid_argument(
                    "parse_stackel: line " + std::to_string(lineno) + ": expected 'key: value'");
            continue;
        }
        std::istringstream key(line.substr(0, colon));
        std::string value = line.substr(colon + 1);
        std::string head;
        key >> head;
        if (head == "S") {
            int i, j;
            if (!(key >> i >> j))
                throw std::invalid_argument("parse_stackel: malformed S entry key");
            s_entries[{i, j}] = value;
        } else if (head == "f" || head == "phi" || head == "domain" || head == "sample"
            || head == "ref") {
            int i;
            if (!(key >> i))
                throw std::invalid_argument("parse_stackel: malformed '" + head + "' key");
            (head == "f"            ? f_entries
                    : head == "phi" ? phi_entries
                    : head == "domain"
                    ? domain_entries
                    : head == "sample" ? sample_entries : ref_entries)[i]
                = value;
        } else {
            scalars[head] = value;
        }
    }

    if (!scalars.count("m"))
        throw std::invalid_argument("parse_stackel: missing 'm'");
    sys.m = std::stoi(scalars["m"]);
    if (sys.m < 1)
        throw std::invalid_argument("parse_stackel: need m >= 1");
    if (scalars.count("name")) {
        std::istringstream v(scalars["name"]);
        v >> sys.name;
    }
    {
        if (!scalars.count("vars"))
            throw std::invalid_argument("parse_stackel: missing 'vars'");
        std::istringstream v(scalars["vars"]);
        std::string w;
        while (v >> w)
            vars.push_back(w);
        if (static_cast<int>(vars.size()) != sys.m)
            throw std::invalid_argument("parse_stackel: 'vars' must list m names");
    }

    auto univariate = [&](const std::string& src, int row) -> StackelSystem::PosFn {
        Expr e = Expr::parse(src, vars[row]);
        return [e, row](const Vec& x) { return e(x(row)); };
    };

    sys.S.assign(sys.m, std::vector<StackelSystem::PosFn>(sys.m));
    sys.f.resize(sys.m);
    sys.phi.resize(sys.m);
    sys.domain.resize(sys.m);
    sys.sample.resize(sys.m);
    sys.ref = Vec::Zero(sys.m);
    for (int i = 0; i < sys.m; ++i) {
        for (int j = 0; j < sys.m; ++j) {
            auto it = s_entries.find({i + 1, j + 1});
            if (it == s_entries.end())
                throw std::invalid_argument("parse_stackel: missing S " + std::to_string(i + 1)
                    + " " + std::to_string(j + 1));
            sys.S[i][j] = univariate(it->second, i);
        }
        if (!f_entries.count(i + 1))
            throw std::invalid_argument("parse_stackel: missing f " + std::to_string(i + 1));
        sys.f[i] = univariate(f_entries[i + 1], i);
        sys.phi[i] = phi_entries.count(i + 1)
            ? univariate(phi_entries[i + 1], i)
            : StackelSystem::PosFn([](const Vec&) { return 0.0; });
        if (!domain_entries.count(i + 1))
            throw std::invalid_argument("parse_stackel: missing domain " + std::to_string(i + 1));
        std::istringstream dv(domain_entries[i + 1]);
        if (!(dv >> sys.domain[i][0] >> sys.domain[i][1]) || sys.domain[i][0] >= sys.domain[i][1])
            throw std::invalid_argument("parse_stackel: malformed domain " + std::to_string(i + 1));
        if (sample_entries.count(i + 1)) {
            std::istringstream sv(sample_entries[i + 1]);
            if (!(sv >> sys.sample[i][0] >> sys.sample[i][1])
                || sys.sample[i][0] >= sys.sample[i][1] || sys.sample[i][0] < sys.domain[i][0]
                || sys.sample[i][1] > sys.domain[i][1])
                throw std::invalid_argument(
                    "parse_stackel: malformed sample " + std::to_string(i + 1));
        } else {
            sys.sample[i] = sys.domain[i];
        }
        if (ref_entries.count(i + 1)) {
            std::istringstream rv(ref_entries[i + 1]);
            if (!(rv >> sys.ref(i)))
                throw std::invalid_argument("parse_stackel: malformed ref " + std::to_string(i + 1));
        } else {
            sys.ref(i) = 0.5 * (sys.domain[i][0] + sys.domain[i][1]);
        }
    }
    return sys;
}

inline StackelSystem load_stackel(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_stackel: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_stackel(buf.str());
}

} // namespace rank1sep::sov
