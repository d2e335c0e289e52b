#include <bbf/poly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bbf
{

namespace
{

void trim_row(std::vector<Rational> &row)
{
    while (!row.empty() && row.back().is_zero()) {
        row.pop_back();
    }
}

std::string coeff_text(const Rational &c)
{
    return c.is_integer() ? c.numerator().get_str() : c.str();
}

// Appends "c*name^e" style terms; shared by both printers.
void append_term(std::ostringstream &os, bool &first, const Rational &c, const std::string &mono)
{
    if (c.is_zero()) {
        return;
    }
    if (!first) {
        os << (c.sign() < 0 ? " - " : " + ");
    } else if (c.sign() < 0) {
        os << "-";
    }
    first = false;
    const Rational mag = c.abs();
    if (mono.empty()) {
        os << coeff_text(mag);
    } else if (mag == Rational(1)) {
        os << mono;
    } else {
        os << coeff_text(mag) << "*" << mono;
    }
}

std::string power_text(const char *name, int e)
{
    if (e == 0) {
        return {};
    }
    return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
}

} // namespace

// ---------------------------------------------------------------- Poly1

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly1 Poly1::constant(const Rational &c)
{
    return Poly1({c});
}

Poly1 Poly1::x()
{
    return Poly1({Rational(0), Rational(1)});
}

Poly1 Poly1::monomial(const Rational &c, int power)
{
    if (power < 0) {
        throw std::invalid_argument("negative monomial power");
    }
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Poly1(std::move(v));
}

void Poly1::trim()
{
    trim_row(coeffs_);
}

Rational Poly1::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational Poly1::eval(const Rational &x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

Poly1 Poly1::derivative(int order) const
{
    if (order < 0) {
        throw std::invalid_argument("negative derivative order");
    }
    if (order > degree()) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < out.size(); ++i) {
        // (i+order)!/i!
        Rational factor(1);
        for (int f = 1; f <= order; ++f) {
            factor *= Rational(static_cast<long>(i) + f);
        }
        out[i] = coeffs_[i + static_cast<std::size_t>(order)] * factor;
    }
    return Poly1(std::move(out));
}

Poly1 Poly1::pow(int e) const
{
    if (e < 0) {
        throw std::invalid_argument("negative polynomial power");
    }
    Poly1 result = constant(Rational(1));
    Poly1 base = *this;
    while (e > 0) {
        if ((e & 1) != 0) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Poly1 Poly1::compose(const Poly1 &inner) const
{
    Poly1 acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner;
        acc += constant(*it);
    }
    return acc;
}

Poly1 &Poly1::operator+=(const Poly1 &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly1 &Poly1::operator-=(const Poly1 &o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly1 &Poly1::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &v : coeffs_) {
        v *= c;
    }
    return *this;
}

Poly1 operator*(const Poly1 &a, const Poly1 &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly1(std::move(out));
}

std::string Poly1::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        append_term(os, first, coeffs_[i], power_text("x", static_cast<int>(i)));
    }
    return os.str();
}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows))
{
    trim();
}

Poly2 Poly2::constant(const Rational &c)
{
    return Poly2({{c}});
}

Poly2 Poly2::x()
{
    return monomial(Rational(1), 1, 0);
}

Poly2 Poly2::y()
{
    return monomial(Rational(1), 0, 1);
}

Poly2 Poly2::monomial(const Rational &c, int x_power, int y_power)
{
    if (x_power < 0 || y_power < 0) {
        throw std::invalid_argument("negative monomial power");
    }
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(x_power) + 1);
    rows.back().resize(static_cast<std::size_t>(y_power) + 1);
    rows.back().back() = c;
    return Poly2(std::move(rows));
}

Poly2 Poly2::from_x(const Poly1 &p)
{
    std::vector<std::vector<Rational>> rows;
    rows.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        rows.push_back({c});
    }
    return Poly2(std::move(rows));
}

Poly2 Poly2::from_y(const Poly1 &p)
{
    if (p.is_zero()) {
        return {};
    }
    return Poly2({std::vector<Rational>(p.coeffs().begin(), p.coeffs().end())});
}

void Poly2::trim()
{
    for (auto &row : rows_) {
        trim_row(row);
    }
    while (!rows_.empty() && rows_.back().empty()) {
        rows_.pop_back();
    }
}

int Poly2::degree_y() const noexcept
{
    int d = -1;
    for (const auto &row : rows_) {
        d = std::max(d, static_cast<int>(row.size()) - 1);
    }
    return d;
}

int Poly2::total_degree() const noexcept
{
    int d = -1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i].empty()) {
            d = std::max(d, static_cast<int>(i + rows_[i].size()) - 1);
        }
    }
    return d;
}

Rational Poly2::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i >= static_cast<int>(rows_.size())) {
        return Rational(0);
    }
    const auto &row = rows_[static_cast<std::size_t>(i)];
    if (j >= static_cast<int>(row.size())) {
        return Rational(0);
    }
    return row[static_cast<std::size_t>(j)];
}

Rational Poly2::eval(const Rational &x, const Rational &y) const
{
    return specialize_y(y).eval(x);
}

Poly1 Poly2::specialize_y(const Rational &y) const
{
    std::vector<Rational> out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Rational acc;
        for (auto it = rows_[i].rbegin(); it != rows_[i].rend(); ++it) {
            acc *= y;
            acc += *it;
        }
        out[i] = acc;
    }
    return Poly1(std::move(out));
}

Poly2 Poly2::diff_x(int order) const
{
    if (order < 0) {
        throw std::invalid_argument("negative derivative order");
    }
    if (order > degree_x()) {
        return {};
    }
    std::vector<std::vector<Rational>> out(rows_.size() - static_cast<std::size_t>(order));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational factor(1);
        for (int f = 1; f <= order; ++f) {
            factor *= Rational(static_cast<long>(i) + f);
        }
        out[i] = rows_[i + static_cast<std::size_t>(order)];
        for (auto &c : out[i]) {
            c *= factor;
        }
    }
    return Poly2(std::move(out));
}

Poly2 Poly2::pow(int e) const
{
    if (e < 0) {
        throw std::invalid_argument("negative polynomial power");
    }
    Poly2 result = constant(Rational(1));
    Poly2 base = *this;
    while (e > 0) {
        if ((e & 1) != 0) {
            result = result * base;
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Poly2 Poly2::swap_xy() const
{
    const int dy = degree_y();
    std::vector<std::vector<Rational>> out(static_cast<std::size_t>(dy + 1));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            auto &row = out[j];
            if (row.size() <= i) {
                row.resize(i + 1);
            }
            row[i] = rows_[i][j];
        }
    }
    return Poly2(std::move(out));
}

Poly2 Poly2::substitute_x(const Poly2 &arg) const
{
    Poly2 acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        acc = acc * arg;
        if (!it->empty()) {
            acc += Poly2({*it});
        }
    }
    return acc;
}

Poly2 &Poly2::operator+=(const Poly2 &o)
{
    if (o.rows_.size() > rows_.size()) {
        rows_.resize(o.rows_.size());
    }
    for (std::size_t i = 0; i < o.rows_.size(); ++i) {
        auto &row = rows_[i];
        const auto &orow = o.rows_[i];
        if (orow.size() > row.size()) {
            row.resize(orow.size());
        }
        for (std::size_t j = 0; j < orow.size(); ++j) {
            row[j] += orow[j];
        }
    }
    trim();
    return *this;
}

Poly2 &Poly2::operator-=(const Poly2 &o)
{
    if (o.rows_.size() > rows_.size()) {
        rows_.resize(o.rows_.size());
    }
    for (std::size_t i = 0; i < o.rows_.size(); ++i) {
        auto &row = rows_[i];
        const auto &orow = o.rows_[i];
        if (orow.size() > row.size()) {
            row.resize(orow.size());
        }
        for (std::size_t j = 0; j < orow.size(); ++j) {
            row[j] -= orow[j];
        }
    }
    trim();
    return *this;
}

Poly2 &Poly2::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        rows_.clear();
        return *this;
    }
    for (auto &row : rows_) {
        for (auto &v : row) {
            v *= c;
        }
    }
    return *this;
}

Poly2 operator*(const Poly2 &a, const Poly2 &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<std::vector<Rational>> out(a.rows_.size() + b.rows_.size() - 1);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
        const auto &ar = a.rows_[i];
        if (ar.empty()) {
            continue;
        }
        for (std::size_t k = 0; k < b.rows_.size(); ++k) {
            const auto &br = b.rows_[k];
            if (br.empty()) {
                continue;
            }
            auto &orow = out[i + k];
            if (orow.size() < ar.size() + br.size() - 1) {
                orow.resize(ar.size() + br.size() - 1);
            }
            for (std::size_t j = 0; j < ar.size(); ++j) {
                if (ar[j].is_zero()) {
                    continue;
                }
                for (std::size_t l = 0; l < br.size(); ++l) {
                    orow[j + l] += ar[j] * br[l];
                }
            }
        }
    }
    return Poly2(std::move(out));
}

std::string Poly2::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            auto xs = power_text("x", static_cast<int>(i));
            auto ys = power_text("y", static_cast<int>(j));
            std::string mono = xs.empty() ? ys : (ys.empty() ? xs : xs + "*" + ys);
            append_term(os, first, rows_[i][j], mono);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- free functions

Poly2 substitute(const Poly1 &p, const Poly2 &arg)
{
    Poly2 acc;
    const auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * arg;
        acc += Poly2::constant(*it);
    }
    return acc;
}

std::optional<std::pair<int, int>> first_difference(const Poly2 &a, const Poly2 &b)
{
    const int rows = std::max(a.degree_x(), b.degree_x()) + 1;
    const int cols = std::max(a.degree_y(), b.degree_y()) + 1;
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (a.coeff(i, j) != b.coeff(i, j)) {
                return std::pair{i, j};
            }
        }
    }
    return std::nullopt;
}

std::optional<int> first_difference(const Poly1 &a, const Poly1 &b)
{
    const int n = std::max(a.degree(), b.degree()) + 1;
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) != b.coeff(i)) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace bbf
