#include "willsym/serialization.hpp"

#include <fstream>
#include <sstream>

namespace willsym {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw Error("empty rational");
    size_t slash = t.find('/');
    using Int = boost::multiprecision::cpp_int;
    auto parse_int = [](const std::string& v) {
        std::string u = trim(v);
        if (!u.empty() && u.front() == '+') u.erase(0, 1);
        if (u.empty() || u.find_first_not_of("-0123456789") != std::string::npos ||
            u.find('-', 1) != std::string::npos)
            throw Error("bad integer '" + u + "'");
        return Int(u);
    };
    if (slash == std::string::npos) return Rational(parse_int(t));
    return Rational(parse_int(t.substr(0, slash)), parse_int(t.substr(slash + 1)));
}

std::string format_gauss(const GaussRational& g) {
    if (g.im == 0) return format_rational(g.re);
    std::string im_part = format_rational(g.im) + "i";
    if (g.re == 0) return im_part;
    return format_rational(g.re) + (g.im < 0 ? "" : "+") + im_part;
}

// `a`, `bi`, `a+bi`, `a-bi`; `i` alone means `1i`.
GaussRational parse_gauss(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw Error("empty coefficient");
    if (t.back() == 'i') {
        // Find the split between the real part and the imaginary term: the
        // last '+'/'-' that is not a leading sign and not inside `p/q`.
        std::string body = t.substr(0, t.size() - 1);
        size_t split = std::string::npos;
        for (size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != '+' &&
                body[k - 1] != '-') {
                split = k;
                break;
            }
        }
        std::string im_str = split == std::string::npos ? body : body.substr(split);
        if (im_str.empty() || im_str == "+") im_str = "1";
        if (im_str == "-") im_str = "-1";
        GaussRational out;
        out.im = parse_rational(im_str);
        if (split != std::string::npos) out.re = parse_rational(body.substr(0, split));
        return out;
    }
    return GaussRational(parse_rational(t));
}

}  // namespace

std::string format_scalar(const SurdScalar& s) {
    if (s.radicand() == 0) return format_gauss(s.rat());
    return "(" + format_gauss(s.rat()) + ")+(" + format_gauss(s.surd()) + ")*sqrt(" +
           std::to_string(s.radicand()) + ")";
}

SurdScalar parse_scalar(const std::string& text) {
    std::string t = trim(text);
    if (t.empty()) throw Error("empty scalar");
    if (t.front() != '(') return SurdScalar(parse_gauss(t));

    size_t close1 = t.find(')');
    if (close1 == std::string::npos) throw Error("unterminated '(' in scalar '" + t + "'");
    GaussRational rat = parse_gauss(t.substr(1, close1 - 1));

    std::string rest = trim(t.substr(close1 + 1));
    if (rest.empty()) return SurdScalar(rat);
    bool negate = rest.front() == '-';
    if (rest.front() != '+' && rest.front() != '-')
        throw Error("expected '+' or '-' before surd part in '" + t + "'");
    rest = trim(rest.substr(1));
    if (rest.empty() || rest.front() != '(') throw Error("expected '(' in surd part of '" + t + "'");
    size_t close2 = rest.find(')');
    if (close2 == std::string::npos) throw Error("unterminated surd coefficient in '" + t + "'");
    GaussRational surd = parse_gauss(rest.substr(1, close2 - 1));
    if (negate) surd = -surd;

    std::string tail = trim(rest.substr(close2 + 1));
    const std::string prefix = "*sqrt(";
    if (tail.rfind(prefix, 0) != 0 || tail.back() != ')')
        throw Error("expected '*sqrt(d)' in '" + t + "'");
    std::string d_str = tail.substr(prefix.size(), tail.size() - prefix.size() - 1);
    unsigned long d = std::stoul(trim(d_str));
    return SurdScalar(rat, surd, d);
}

namespace {

std::vector<SurdScalar> parse_coeff_list(const std::string& text) {
    std::string t = trim(text);
    if (t.empty() || t.front() != '[' || t.back() != ']')
        throw Error("expected [c0, c1, ...] coefficient list");
    std::string body = t.substr(1, t.size() - 2);
    std::vector<SurdScalar> out;
    if (trim(body).empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
    return out;
}

std::string format_coeff_list(const Polynomial<SurdScalar>& p) {
    std::string out = "[";
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) out += ", ";
        out += format_scalar(p.coeff(k));
    }
    if (p.is_zero()) out += "0";
    return out + "]";
}

}  // namespace

std::string format_map(const RationalMapX& f) {
    return "num: " + format_coeff_list(f.num()) + " den: " + format_coeff_list(f.den());
}

RationalMapX parse_map(const std::string& text) {
    size_t num_pos = text.find("num:");
    size_t den_pos = text.find("den:");
    if (num_pos == std::string::npos || den_pos == std::string::npos || den_pos < num_pos)
        throw Error("expected 'num: [...] den: [...]'");
    std::vector<SurdScalar> num =
        parse_coeff_list(text.substr(num_pos + 4, den_pos - num_pos - 4));
    std::vector<SurdScalar> den = parse_coeff_list(text.substr(den_pos + 4));
    Polynomial<SurdScalar> pd(den);
    if (pd.is_zero()) throw Error("zero denominator polynomial");
    return RationalMapX(Polynomial<SurdScalar>(num), pd);
}

namespace {

MatrixR parse_diag(const std::string& text, int line) {
    std::string t = trim(text);
    const std::string prefix = "diag(";
    if (t.rfind(prefix, 0) != 0 || t.back() != ')')
        throw ParseError("expected diag(...)", line);
    std::string body = t.substr(prefix.size(), t.size() - prefix.size() - 1);
    std::vector<double> vals;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.push_back(std::stod(trim(item)));
        } catch (const std::exception&) {
            throw ParseError("bad diagonal entry '" + trim(item) + "'", line);
        }
    }
    MatrixR m = MatrixR::Zero(vals.size(), vals.size());
    for (size_t i = 0; i < vals.size(); ++i) m(i, i) = vals[i];
    return m;
}

// `a b c d [antiholomorphic]`, scalars whitespace-separated.
MoebiusX parse_moebius(const std::string& text, int line) {
    std::stringstream ss(trim(text));
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    bool anti = false;
    if (!tokens.empty() && tokens.back() == "antiholomorphic") {
        anti = true;
        tokens.pop_back();
    }
    if (tokens.size() != 4) throw ParseError("mu needs four scalars a b c d", line);
    try {
        return MoebiusX(parse_scalar(tokens[0]), parse_scalar(tokens[1]), parse_scalar(tokens[2]),
                        parse_scalar(tokens[3]), anti);
    } catch (const Error& e) {
        throw ParseError(e.what(), line);
    }
}

}  // namespace

PotentialFile parse_potential_text(const std::string& text) {
    PotentialFile out;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    std::string section;

    std::map<std::string, RationalMapX> maps;
    std::optional<MoebiusX> mu;
    std::optional<MatrixR> s1, s2;
    int det_flag = 0;
    bool any_content = false;

    while (std::getline(is, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        any_content = true;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError("unterminated section header", line_no);
            section = t.substr(1, t.size() - 2);
            if (section != "quadruple" && section != "symmetry" && section != "weierstrass")
                throw ParseError("unknown section [" + section + "]", line_no);
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (section.empty()) throw ParseError("key outside of any section", line_no);

        try {
            if (section == "quadruple") {
                if (key != "f1" && key != "f2" && key != "f3" && key != "f4")
                    throw ParseError("unknown quadruple key '" + key + "'", line_no);
                maps["q." + key] = parse_map(value);
            } else if (section == "weierstrass") {
                if (key != "h" && key != "g")
                    throw ParseError("unknown weierstrass key '" + key + "'", line_no);
                maps["w." + key] = parse_map(value);
            } else {  // symmetry
                if (key == "mu")
                    mu = parse_moebius(value, line_no);
                else if (key == "s1")
                    s1 = parse_diag(value, line_no);
                else if (key == "s2")
                    s2 = parse_diag(value, line_no);
                else if (key == "m")
                    det_flag = std::stoi(value);
                else
                    throw ParseError("unknown symmetry key '" + key + "'", line_no);
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(e.what(), line_no);
        }
    }

    if (!any_content) throw ParseError("empty potential file", std::max(line_no, 1));

    if (maps.count("q.f1") || maps.count("q.f2") || maps.count("q.f3") || maps.count("q.f4")) {
        for (const char* k : {"q.f1", "q.f2", "q.f3", "q.f4"})
            if (!maps.count(k))
                throw ParseError(std::string("missing quadruple entry ") + (k + 2), line_no);
        out.quadruple =
            IsotropicQuadruple<SurdScalar>{maps["q.f1"], maps["q.f2"], maps["q.f3"], maps["q.f4"]};
    }
    if (maps.count("w.h") || maps.count("w.g")) {
        if (!maps.count("w.h") || !maps.count("w.g"))
            throw ParseError("weierstrass section needs both h and g", line_no);
        out.weierstrass = WeierstrassData<SurdScalar>{maps["w.h"], maps["w.g"]};
    }
    if (mu || s1 || s2 || det_flag) {
        if (!mu || !s1 || !s2 || !det_flag)
            throw ParseError("symmetry section needs mu, s1, s2 and m", line_no);
        if (s1->rows() != 4) throw ParseError("s1 must be 4x4", line_no);
        SymmetrySpec<SurdScalar> spec{*mu, Eigen::Matrix4d(*s1), *s2, det_flag};
        try {
            spec.validate();
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
        out.symmetry = spec;
    }
    return out;
}

PotentialFile read_potential_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_potential_text(buffer.str());
}

std::string format_potential_text(const PotentialFile& file) {
    std::ostringstream os;
    if (file.quadruple) {
        os << "[quadruple]\n";
        os << "f1 = " << format_map(file.quadruple->f1) << "\n";
        os << "f2 = " << format_map(file.quadruple->f2) << "\n";
        os << "f3 = " << format_map(file.quadruple->f3) << "\n";
        os << "f4 = " << format_map(file.quadruple->f4) << "\n";
    }
    if (file.symmetry) {
        const auto& s = *file.symmetry;
        os << "[symmetry]\n";
        os << "mu = " << format_scalar(s.mu.a) << " " << format_scalar(s.mu.b) << " "
           << format_scalar(s.mu.c) << " " << format_scalar(s.mu.d)
           << (s.mu.antiholomorphic ? " antiholomorphic" : "") << "\n";
        auto diag = [&](const MatrixR& m) {
            std::string out = "diag(";
            for (int i = 0; i < m.rows(); ++i) {
                if (i) out += ", ";
                out += std::to_string(static_cast<long>(std::llround(m(i, i))));
            }
            return out + ")";
        };
        os << "s1 = " << diag(s.s_hat1) << "\n";
        os << "s2 = " << diag(s.s_hat2) << "\n";
        os << "m = " << s.det_flag << "\n";
    }
    if (file.weierstrass) {
        os << "[weierstrass]\n";
        os << "h = " << format_map(file.weierstrass->h) << "\n";
        os << "g = " << format_map(file.weierstrass->g) << "\n";
    }
    return os.str();
}

void write_potential_file(const std::string& path, const PotentialFile& file) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << format_potential_text(file);
}

Json laurent_to_json(const LaurentMatrix& a) {
    Json terms = Json::object();
    for (int k = a.k_min(); k <= a.k_max(); ++k) {
        MatrixC c = a.coeff(k);
        if (c.cwiseAbs().maxCoeff() == 0.0 && k != 0) continue;
        Json rows = Json::array();
        for (int i = 0; i < a.size(); ++i) {
            Json row = Json::array();
            for (int j = 0; j < a.size(); ++j)
                row.push_back(Json::array({c(i, j).real(), c(i, j).imag()}));
            rows.push_back(row);
        }
        terms[std::to_string(k)] = rows;
    }
    return Json{{"size", a.size()}, {"terms", terms}};
}

LaurentMatrix laurent_from_json(const Json& j) {
    const int n = j.at("size").get<int>();
    const auto& terms = j.at("terms");
    int k_min = 0, k_max = 0;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        int k = std::stoi(it.key());
        k_min = std::min(k_min, k);
        k_max = std::max(k_max, k);
    }
    LaurentMatrix a(n, k_min, k_max);
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        int k = std::stoi(it.key());
        MatrixC c(n, n);
        for (int i = 0; i < n; ++i)
            for (int col = 0; col < n; ++col) {
                const auto& pair = it.value().at(i).at(col);
                c(i, col) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
            }
        a.set_coeff(k, c);
    }
    return a;
}

}  // namespace willsym
