#include "polyadj/io.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "polyadj/errors.hpp"

namespace polyadj {

namespace {

using nlohmann::json;

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Rational json_rational(const json& v)
{
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    throw InputError("document: entries must be integers or rational strings");
}

std::vector<QVector> json_rows(const json& rows, Index width, const char* what)
{
    if (!rows.is_array())
        throw InputError(std::string("document: ") + what + " must be a list of rows");
    std::vector<QVector> out;
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<Index>(row.size()) != width)
            throw InputError(std::string("document: every row of ") + what + " needs " +
                             std::to_string(width) + " entries");
        QVector v(width);
        for (Index i = 0; i < width; ++i)
            v[i] = json_rational(row[static_cast<std::size_t>(i)]);
        out.push_back(std::move(v));
    }
    return out;
}

json rows_json(const std::vector<QVector>& rows)
{
    json out = json::array();
    for (const QVector& r : rows) {
        json row = json::array();
        for (Index i = 0; i < r.size(); ++i)
            row.push_back(format_rational(r[i]));
        out.push_back(std::move(row));
    }
    return out;
}

class PolyParser {
  public:
    PolyParser(std::string_view text, Index nvars) : nvars_(nvars)
    {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c)))
                s_.push_back(c);
        }
    }

    HomoPoly parse()
    {
        if (s_.empty())
            throw InputError("polynomial: empty input");
        std::vector<std::pair<Monomial, Rational>> terms;
        bool first = true;
        while (pos_ < s_.size()) {
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            terms.push_back(term());
            terms.back().second *= sign;
        }

        int degree = -1;
        for (const auto& [m, c] : terms) {
            if (c == 0)
                continue;
            const int deg = std::accumulate(m.begin(), m.end(), 0);
            if (degree >= 0 && deg != degree)
                throw InputError("polynomial: terms of different degrees");
            degree = deg;
        }
        HomoPoly f(nvars_, degree < 0 ? 0 : degree);
        for (const auto& [m, c] : terms) {
            if (c != 0)
                f.add_term(m, c);
        }
        return f;
    }

  private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("polynomial: " + what + " at position " + std::to_string(pos_));
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    std::pair<Monomial, Rational> term()
    {
        Monomial m(static_cast<std::size_t>(nvars_), 0);
        Rational c = 1;
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            if (peek() == '/') {
                ++pos_;
                num += "/" + digits();
            }
            c = parse_rational(num);
            have_factor = true;
            if (peek() == '*')
                ++pos_;
            else if (peek() != 'X')
                return {m, c};
        }
        while (peek() == 'X') {
            ++pos_;
            const std::string idx = digits();
            if (idx.empty())
                fail("variable index expected");
            const long var = std::stol(idx);
            if (var >= nvars_)
                fail("variable X" + idx + " out of range");
            int e = 1;
            if (peek() == '^') {
                ++pos_;
                const std::string ex = digits();
                if (ex.empty())
                    fail("exponent expected");
                e = std::stoi(ex);
            }
            m[static_cast<std::size_t>(var)] += e;
            have_factor = true;
            if (peek() != '*')
                break;
            ++pos_;
        }
        if (!have_factor)
            fail("term expected");
        return {m, c};
    }

    std::string s_;
    std::size_t pos_ = 0;
    Index nvars_;
};

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const std::size_t slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InputError("not a rational number: '" + std::string(text) + "'");
    const Integer q{std::string(den)};
    if (q == 0)
        throw InputError("zero denominator: '" + std::string(text) + "'");
    Rational r(Integer{std::string(num)}, q);
    return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& x)
{
    return x.str();
}

std::string format_polynomial(const HomoPoly& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = c < 0;
        const Rational a = negative ? Rational(-c) : c;
        if (negative)
            out += '-';
        else if (!first)
            out += '+';
        first = false;

        std::string factors;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += 'X' + std::to_string(i);
            if (m[i] >= 2)
                factors += '^' + std::to_string(m[i]);
        }
        if (factors.empty())
            out += format_rational(a);
        else if (a == 1)
            out += factors;
        else
            out += format_rational(a) + '*' + factors;
    }
    return out;
}

HomoPoly parse_polynomial(std::string_view text, Index nvars)
{
    return PolyParser(text, nvars).parse();
}

PolytopeDocument parse_document(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("document: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("document: top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw InputError("document: \"dim\" must be a positive integer");

    PolytopeDocument doc;
    doc.dim = j["dim"].get<Index>();
    if (j.contains("vertices"))
        doc.vertices = json_rows(j["vertices"], doc.dim, "vertices");
    if (j.contains("inequalities"))
        doc.inequalities = json_rows(j["inequalities"], doc.dim + 1, "inequalities");
    if (!doc.vertices && !doc.inequalities)
        throw InputError("document: needs vertices or inequalities");
    return doc;
}

std::string write_document(const PolytopeDocument& doc)
{
    json j;
    j["dim"] = doc.dim;
    if (doc.vertices)
        j["vertices"] = rows_json(*doc.vertices);
    if (doc.inequalities)
        j["inequalities"] = rows_json(*doc.inequalities);
    return j.dump(2) + "\n";
}

Polytope to_polytope(const PolytopeDocument& doc)
{
    std::vector<LinearForm> forms;
    if (doc.inequalities) {
        for (const QVector& row : *doc.inequalities)
            forms.push_back(LinearForm::oriented(row));
    }
    if (doc.vertices && doc.inequalities)
        return Polytope::from_both(*doc.vertices, forms);
    if (doc.vertices)
        return Polytope::from_vertices(*doc.vertices);
    return Polytope::from_inequalities(forms, doc.dim);
}

QMatrix parse_matrix(std::string_view text)
{
    std::vector<std::vector<Rational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::vector<Rational> row;
        std::string token;
        while (fields >> token)
            row.push_back(parse_rational(token));
        if (row.empty())
            continue;
        if (!rows.empty() && row.size() != rows.front().size())
            throw InputError("matrix: rows have different lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw InputError("matrix: no rows");
    QMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    return m;
}

std::string format_row(const QVector& v)
{
    std::string out;
    for (Index i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += format_rational(v[i]);
    }
    return out;
}

}  // namespace polyadj
