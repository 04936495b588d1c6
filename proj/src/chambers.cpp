#include <wallcross/chambers.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace wallcross
{

namespace
{

Rational canonical(Rational r)
{
    r.canonicalize();
    return r;
}

int sign(const Rational &r)
{
    return sgn(r);
}

// Integer n when r == n exactly.
std::optional<std::int64_t> as_integer(const Rational &r)
{
    if (r.get_den() != 1 || !r.get_num().fits_slong_p()) {
        return std::nullopt;
    }
    return r.get_num().get_si();
}

std::int64_t floor_of(const Rational &r)
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) {
        throw std::overflow_error("wall index out of range");
    }
    return q.get_si();
}

// Largest m with the monomial (m, m + shift) inside the box, 0 if none.
std::int64_t last_in_box(TruncationBox box, std::int64_t shift, std::int64_t first)
{
    const std::int64_t m = std::min(box.n0_max, box.n1_max - shift);
    return m >= first ? m : first - 1;
}

bool infinite_factor_in_box(TruncationBox box)
{
    return box.n0_max >= 1 && box.n1_max >= 1;
}

const char *family_name(WallFamily f)
{
    switch (f) {
    case WallFamily::minus_plus:
        return "minus_plus";
    case WallFamily::minus_inf:
        return "minus_inf";
    case WallFamily::minus_minus:
        return "minus_minus";
    case WallFamily::plus_plus:
        return "plus_plus";
    case WallFamily::plus_inf:
        return "plus_inf";
    case WallFamily::plus_minus:
        return "plus_minus";
    }
    return "";
}

std::int64_t parse_index(const std::string &text, const std::string &label)
{
    std::int64_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty()) {
        throw std::invalid_argument("bad index in label: " + label);
    }
    return value;
}

} // namespace

StabilityParam::StabilityParam(Rational z0, Rational z1) : zeta0(canonical(std::move(z0))), zeta1(canonical(std::move(z1)))
{
}

Rational parse_rational(const std::string &text)
{
    std::string body = text;
    if (!body.empty() && body.front() == '+') {
        body.erase(body.begin());
    }
    const auto slash = body.find('/');
    const auto valid_int = [](const std::string &s, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !s.empty() && s.front() == '-') {
            start = 1;
        }
        return s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                               [](unsigned char ch) { return ch >= '0' && ch <= '9'; });
    };
    const std::string num = body.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw std::invalid_argument("not an exact rational: \"" + text + "\"");
    }
    Rational r(mpz_class(num, 10), mpz_class(den, 10));
    if (r.get_den() == 0) {
        throw std::invalid_argument("zero denominator: \"" + text + "\"");
    }
    r.canonicalize();
    return r;
}

std::pair<std::int64_t, std::int64_t> Wall::linear_form() const
{
    switch (family) {
    case WallFamily::minus_plus:
    case WallFamily::plus_plus:
        return {m, m - 1};
    case WallFamily::minus_minus:
    case WallFamily::plus_minus:
        return {m, m + 1};
    case WallFamily::minus_inf:
    case WallFamily::plus_inf:
        return {1, 1};
    }
    return {0, 0};
}

std::optional<Bidegree> Wall::dim_vector() const
{
    switch (family) {
    case WallFamily::minus_plus:
    case WallFamily::plus_plus:
        return Bidegree{m, m - 1};
    case WallFamily::minus_minus:
    case WallFamily::plus_minus:
        return Bidegree{m, m + 1};
    default:
        return std::nullopt;
    }
}

bool Wall::contains(const StabilityParam &zeta) const
{
    const auto [c0, c1] = linear_form();
    const Rational value = Rational(c0) * zeta.zeta0 + Rational(c1) * zeta.zeta1;
    if (value != 0) {
        return false;
    }
    const bool minus_sector = zeta.zeta0 < zeta.zeta1;
    const bool plus_sector = zeta.zeta0 > zeta.zeta1;
    switch (family) {
    case WallFamily::minus_plus:
    case WallFamily::minus_inf:
    case WallFamily::minus_minus:
        return minus_sector;
    default:
        return plus_sector;
    }
}

Classification classify(const StabilityParam &zeta)
{
    const int s0 = sign(zeta.zeta0);
    const int s1 = sign(zeta.zeta1);
    if (s0 == 0 && s1 == 0) {
        return Degenerate{};
    }
    if (s0 > 0 && s1 > 0) {
        return Chamber{ChamberKind::trivial};
    }
    if (s0 < 0 && s1 < 0) {
        return Chamber{ChamberKind::ncdt};
    }
    // From here the parameter is off the diagonal and outside both open
    // quadrants, so it sits in exactly one sector.
    const bool minus_sector = zeta.zeta0 < zeta.zeta1;
    const Rational total = zeta.zeta0 + zeta.zeta1;
    if (total == 0) {
        return OnWall{Wall{minus_sector ? WallFamily::minus_inf : WallFamily::plus_inf}};
    }
    // The finite walls are the level sets of one ratio per half-sector:
    //   m zeta0 + (m-1) zeta1 = 0  <=>  zeta1 / (zeta0 + zeta1) = m
    //   m zeta0 + (m+1) zeta1 = 0  <=>  -zeta1 / (zeta0 + zeta1) = m
    if (minus_sector) {
        if (total > 0) {
            const Rational mu = zeta.zeta1 / total; // > 1 here, == 1 on the zeta0 = 0 axis
            if (const auto m = as_integer(mu)) {
                return OnWall{Wall{WallFamily::minus_plus, *m}};
            }
            return Chamber{ChamberKind::minus_plus, floor_of(mu)};
        }
        const Rational nu = -zeta.zeta1 / total; // >= 0
        if (const auto m = as_integer(nu)) {
            return OnWall{Wall{WallFamily::minus_minus, *m}};
        }
        return Chamber{ChamberKind::minus_minus, floor_of(nu) + 1};
    }
    if (total > 0) {
        const Rational nu = -zeta.zeta1 / total; // >= 0
        if (const auto m = as_integer(nu)) {
            return OnWall{Wall{WallFamily::plus_minus, *m}};
        }
        return Chamber{ChamberKind::plus_minus, floor_of(nu) + 1};
    }
    const Rational mu = zeta.zeta1 / total; // >= 1
    if (const auto m = as_integer(mu)) {
        return OnWall{Wall{WallFamily::plus_plus, *m}};
    }
    return Chamber{ChamberKind::plus_plus, floor_of(mu)};
}

Rational framing_weight(const StabilityParam &zeta, const Bidegree &v)
{
    return -zeta.zeta0 * Rational(v.v0) - zeta.zeta1 * Rational(v.v1);
}

BiSeries wall_factor(const Wall &w, TruncationBox box)
{
    const auto dim = w.dim_vector();
    if (!dim) {
        throw no_finite_factor("no finite crossing factor on " + to_label(w) + "; use dtpt_factor");
    }
    if (dim->v0 == 0) {
        return BiSeries::one(box);
    }
    const BinomialFactor f{1, dim->v0, dim->v1, dim->v0};
    return expand_binomial_product(box, std::span<const BinomialFactor>(&f, 1));
}

BiSeries dtpt_factor(TruncationBox box)
{
    return expand_binomial_product(box, [](std::int64_t k) { return BinomialFactor{-1, k, k, -2 * k}; });
}

std::vector<Crossing> crossing_path(const Chamber &c, TruncationBox box, Route route)
{
    std::vector<Crossing> path;
    const auto finite = [&](WallFamily f, std::int64_t m) { path.push_back({Wall{f, m}, FactorKind::finite}); };
    const auto infinite = [&](WallFamily f) {
        if (infinite_factor_in_box(box)) {
            path.push_back({Wall{f}, FactorKind::external});
        }
    };
    // Walls of dimension vector (m, m - 1) and (m, m + 1) present in the box.
    const std::int64_t minus_one_last = last_in_box(box, -1, 1);
    const std::int64_t plus_one_last = last_in_box(box, 1, 1);

    // Counterclockwise from the trivial chamber, stopping before minus_minus(stop).
    const auto minus_walk = [&](std::int64_t plus_walls, bool cross_inf, std::int64_t stop) {
        for (std::int64_t m = 1; m <= std::min(plus_walls, minus_one_last); ++m) {
            finite(WallFamily::minus_plus, m);
        }
        if (!cross_inf) {
            return;
        }
        infinite(WallFamily::minus_inf);
        for (std::int64_t m = plus_one_last; m >= std::max<std::int64_t>(stop, 1); --m) {
            finite(WallFamily::minus_minus, m);
        }
    };
    // Clockwise from the trivial chamber, stopping before plus_plus(stop).
    const auto plus_walk = [&](std::int64_t minus_walls, bool cross_inf, std::int64_t stop) {
        for (std::int64_t m = 1; m <= std::min(minus_walls, plus_one_last); ++m) {
            finite(WallFamily::plus_minus, m);
        }
        if (!cross_inf) {
            return;
        }
        infinite(WallFamily::plus_inf);
        for (std::int64_t m = minus_one_last; m >= std::max<std::int64_t>(stop, 1); --m) {
            finite(WallFamily::plus_plus, m);
        }
    };

    constexpr std::int64_t all = std::numeric_limits<std::int64_t>::max();
    switch (c.kind) {
    case ChamberKind::trivial:
        break;
    case ChamberKind::minus_plus:
        minus_walk(c.k, false, 0);
        break;
    case ChamberKind::pty:
        minus_walk(all, false, 0);
        break;
    case ChamberKind::dty:
        minus_walk(all, true, all);
        break;
    case ChamberKind::minus_minus:
        minus_walk(all, true, c.k);
        break;
    case ChamberKind::ncdt:
        if (route == Route::plus) {
            plus_walk(all, true, 1);
        } else {
            minus_walk(all, true, 1);
        }
        break;
    case ChamberKind::plus_minus:
        plus_walk(c.k - 1, false, 0);
        break;
    case ChamberKind::pty_plus:
        plus_walk(all, false, 0);
        break;
    case ChamberKind::dty_plus:
        plus_walk(all, true, all);
        break;
    case ChamberKind::plus_plus:
        plus_walk(all, true, c.k + 1);
        break;
    }
    return path;
}

bool uses_external_factor(const Chamber &c)
{
    switch (c.kind) {
    case ChamberKind::dty:
    case ChamberKind::minus_minus:
    case ChamberKind::ncdt:
    case ChamberKind::dty_plus:
    case ChamberKind::plus_plus:
        return true;
    default:
        return false;
    }
}

BiSeries z_unsigned(const Chamber &c, TruncationBox box, Route route)
{
    BiSeries z = BiSeries::one(box);
    for (const auto &step : crossing_path(c, box, route)) {
        z = mul(z, step.kind == FactorKind::finite ? wall_factor(step.wall, box) : dtpt_factor(box));
    }
    return z;
}

BiSeries z_signed(const Chamber &c, TruncationBox box, Route route)
{
    return sign_twist(z_unsigned(c, box, route));
}

std::string to_label(const Chamber &c)
{
    const auto indexed = [&](const char *name) { return std::string(name) + ":" + std::to_string(c.k); };
    switch (c.kind) {
    case ChamberKind::trivial:
        return "trivial";
    case ChamberKind::minus_plus:
        return indexed("minus_plus");
    case ChamberKind::pty:
        return "pty";
    case ChamberKind::dty:
        return "dty";
    case ChamberKind::minus_minus:
        return indexed("minus_minus");
    case ChamberKind::ncdt:
        return "ncdt";
    case ChamberKind::plus_minus:
        return indexed("plus_minus");
    case ChamberKind::pty_plus:
        return "pty_plus";
    case ChamberKind::dty_plus:
        return "dty_plus";
    case ChamberKind::plus_plus:
        return indexed("plus_plus");
    }
    return "";
}

std::string to_label(const Wall &w)
{
    std::string out = std::string("wall:") + family_name(w.family);
    if (!w.is_infinite()) {
        out += ":" + std::to_string(w.m);
    }
    return out;
}

std::string to_label(const Classification &c)
{
    return std::visit(
        [](const auto &x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Chamber>) {
                return to_label(x);
            } else if constexpr (std::is_same_v<T, OnWall>) {
                return to_label(x.wall);
            } else {
                return "degenerate";
            }
        },
        c);
}

Chamber parse_chamber(const std::string &label)
{
    static const std::pair<const char *, ChamberKind> plain[] = {
        {"trivial", ChamberKind::trivial}, {"pty", ChamberKind::pty},
        {"dty", ChamberKind::dty},         {"ncdt", ChamberKind::ncdt},
        {"pty_plus", ChamberKind::pty_plus}, {"dty_plus", ChamberKind::dty_plus},
    };
    static const std::pair<const char *, ChamberKind> indexed[] = {
        {"minus_plus", ChamberKind::minus_plus},
        {"minus_minus", ChamberKind::minus_minus},
        {"plus_minus", ChamberKind::plus_minus},
        {"plus_plus", ChamberKind::plus_plus},
    };
    for (const auto &[name, kind] : plain) {
        if (label == name) {
            return Chamber{kind};
        }
    }
    const auto colon = label.find(':');
    if (colon != std::string::npos) {
        const std::string head = label.substr(0, colon);
        for (const auto &[name, kind] : indexed) {
            if (head == name) {
                const std::int64_t k = parse_index(label.substr(colon + 1), label);
                if (k < 1) {
                    throw std::invalid_argument("chamber index must be >= 1: " + label);
                }
                return Chamber{kind, k};
            }
        }
    }
    throw std::invalid_argument("unknown chamber label: " + label);
}

Wall parse_wall(const std::string &label)
{
    const std::string prefix = "wall:";
    if (label.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("unknown wall label: " + label);
    }
    const std::string rest = label.substr(prefix.size());
    if (rest == "minus_inf") {
        return Wall{WallFamily::minus_inf};
    }
    if (rest == "plus_inf") {
        return Wall{WallFamily::plus_inf};
    }
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("unknown wall label: " + label);
    }
    const std::string head = rest.substr(0, colon);
    const std::int64_t m = parse_index(rest.substr(colon + 1), label);
    for (const auto f : {WallFamily::minus_plus, WallFamily::minus_minus, WallFamily::plus_plus,
                         WallFamily::plus_minus}) {
        if (head == family_name(f)) {
            const bool starts_at_one = f == WallFamily::minus_plus || f == WallFamily::plus_plus;
            if (m < (starts_at_one ? 1 : 0)) {
                throw std::invalid_argument("wall index out of range: " + label);
            }
            return Wall{f, m};
        }
    }
    throw std::invalid_argument("unknown wall label: " + label);
}

} // namespace wallcross
