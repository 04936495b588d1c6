#include <wallcross/identities.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <wallcross/chambers.hpp>
#include <wallcross/formulas.hpp>
#include <wallcross/oracle.hpp>

namespace wallcross
{

namespace
{

IdentityResult compare(std::string name, std::string lhs_label, BiSeries lhs, std::string rhs_label, BiSeries rhs)
{
    IdentityResult r;
    r.name = std::move(name);
    r.lhs_label = std::move(lhs_label);
    r.rhs_label = std::move(rhs_label);
    r.first_difference = first_difference(lhs, rhs);
    r.ok = !r.first_difference.has_value();
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

std::int64_t length_param(const IdentityParams &p, std::int64_t fallback)
{
    const std::int64_t m = p.m.value_or(fallback);
    if (m < 1) {
        throw std::invalid_argument("--m must be >= 1");
    }
    return m;
}

TruncationBox box_param(const IdentityParams &p, TruncationBox fallback)
{
    const TruncationBox box = p.box.value_or(fallback);
    if (box.n0_max < 0 || box.n1_max < 0) {
        throw std::invalid_argument("box dimensions must be nonnegative");
    }
    return box;
}

BiSeries guarded_enumeration(const ErcSpec &spec, const EnumerationLimits &limits, const IdentityParams &p)
{
    check_work_budget(spec, limits, p.max_work);
    return enumerate_counts(spec, limits);
}

IdentityResult finite_pyramid_formula(const IdentityParams &p)
{
    const ErcSpec spec(ErcKind::finite_type, length_param(p, 3));
    const TruncationBox box = zfin_support(spec.m);
    return compare("thm_phyramid_1", "enumerate(" + to_label(spec) + ")", guarded_enumeration(spec, {box, std::nullopt}, p),
                   "zfin:" + std::to_string(spec.m), evaluate({FormulaKind::zfin, spec.m}, box));
}

IdentityResult infinite_pyramid_formula(const IdentityParams &p)
{
    const ErcSpec spec(ErcKind::infinite_pyramid, length_param(p, 1));
    const std::int64_t cap = p.max_stones.value_or(12);
    const TruncationBox box = box_param(p, {cap, cap});
    const EnumerationLimits limits{box, cap};
    return compare("thm_phyramid_2", "enumerate(" + to_label(spec) + ")", guarded_enumeration(spec, limits, p),
                   "zpyr:" + std::to_string(spec.m),
                   cap_total_degree(evaluate({FormulaKind::zpyr, spec.m}, box), cap));
}

IdentityResult three_way_finite(const IdentityParams &p)
{
    const ErcSpec spec(ErcKind::finite_type, length_param(p, 2));
    const TruncationBox target = zfin_support(spec.m);
    const IntMatrix2 matrix = stone_matrix(spec);
    const Chamber chamber{ChamberKind::minus_plus, spec.m};
    const BiSeries reindexed = reindex(matrix, z_unsigned(chamber, preimage_box(matrix, target)), target);
    const BiSeries formula = evaluate({FormulaKind::zfin, spec.m}, target);
    const std::string lhs = "reindex(z(" + to_label(chamber) + "))";
    if (reindexed != formula) {
        return compare("three_way_finite", lhs, reindexed, "zfin:" + std::to_string(spec.m), formula);
    }
    return compare("three_way_finite", lhs, reindexed, "enumerate(" + to_label(spec) + ")",
                   guarded_enumeration(spec, {target, std::nullopt}, p));
}

IdentityResult three_way_infinite(const IdentityParams &p)
{
    const ErcSpec spec(ErcKind::infinite_pyramid, length_param(p, 1));
    const TruncationBox target = box_param(p, {6, 6});
    const IntMatrix2 matrix = stone_matrix(spec);
    const Chamber chamber{ChamberKind::minus_minus, spec.m};
    const BiSeries reindexed = reindex(matrix, z_unsigned(chamber, preimage_box(matrix, target)), target);
    const BiSeries formula = evaluate({FormulaKind::zpyr, spec.m}, target);
    const std::string lhs = "reindex(z(" + to_label(chamber) + "))";
    IdentityResult r = reindexed != formula
                           ? compare("three_way_infinite", lhs, reindexed, "zpyr:" + std::to_string(spec.m), formula)
                           : compare("three_way_infinite", lhs, reindexed, "enumerate(" + to_label(spec) + ")",
                                     guarded_enumeration(spec, {target, std::nullopt}, p));
    r.provenance.push_back(external_factor_flag);
    return r;
}

IdentityResult ncdt_two_paths(const IdentityParams &p)
{
    const TruncationBox box = box_param(p, {4, 4});
    const Chamber ncdt{ChamberKind::ncdt};
    IdentityResult r = compare("ncdt_two_paths", "z(ncdt) via minus path", z_unsigned(ncdt, box, Route::minus),
                               "z(ncdt) via plus path", z_unsigned(ncdt, box, Route::plus));
    r.provenance.push_back(external_factor_flag);
    return r;
}

IdentityResult oracle_length_one(const IdentityParams &p)
{
    const TruncationBox box = box_param(p, {3, 3});
    const ErcSpec spec(ErcKind::infinite_pyramid, 1);
    check_work_budget(spec, {box, p.max_stones}, p.max_work);
    return compare("oracle_length_1", "oracle ideals", oracle::enumerate_ideals(box, p.max_stones),
                   "enumerate(" + to_label(spec) + ")", enumerate_counts(spec, EnumerationLimits{box, p.max_stones}));
}

IdentityResult flop(const IdentityParams &p)
{
    const TruncationBox box = box_param(p, {6, 6});
    const IntMatrix2 flip{{{1, 0}, {2, -1}}};
    return compare("flop", "reindex(z(pty))", reindex(flip, z_unsigned({ChamberKind::pty}, box), box), "z(pty_plus)",
                   z_unsigned({ChamberKind::pty_plus}, box));
}

IdentityResult sign_rule_pt(const IdentityParams &p)
{
    const TruncationBox box = box_param(p, {4, 4});
    IdentityResult r = compare("sign_rule_pt", "z_signed(pty)", z_signed({ChamberKind::pty}, box), "zpt_y",
                               evaluate({FormulaKind::zpt_y}, box));
    if (!r.ok) {
        return r;
    }
    r = compare("sign_rule_pt", "z_signed(pty_plus)", z_signed({ChamberKind::pty_plus}, box), "zpt_yplus",
                evaluate({FormulaKind::zpt_yplus}, box));
    return r;
}

IdentityResult ncdt_formula(const IdentityParams &p)
{
    const TruncationBox box = box_param(p, {4, 4});
    IdentityResult r = compare("ncdt_formula", "z_signed(ncdt)", z_signed({ChamberKind::ncdt}, box), "zncdt",
                               evaluate({FormulaKind::zncdt}, box));
    r.provenance.push_back(external_factor_flag);
    return r;
}

IdentityResult dt_formula(const IdentityParams &p)
{
    const TruncationBox box = box_param(p, {4, 4});
    IdentityResult r = compare("dt_formula", "z_signed(dty)", z_signed({ChamberKind::dty}, box), "zdt_y_qt",
                               evaluate({FormulaKind::zdt_y_qt}, box));
    r.provenance.push_back(external_factor_flag);
    return r;
}

using Runner = std::function<IdentityResult(const IdentityParams &)>;

const std::vector<std::pair<std::string, Runner>> &registry()
{
    static const std::vector<std::pair<std::string, Runner>> table = {
        {"thm_phyramid_1", finite_pyramid_formula},
        {"thm_phyramid_2", infinite_pyramid_formula},
        {"three_way_finite", three_way_finite},
        {"three_way_infinite", three_way_infinite},
        {"ncdt_two_paths", ncdt_two_paths},
        {"oracle_length_1", oracle_length_one},
        {"flop", flop},
        {"sign_rule_pt", sign_rule_pt},
        {"ncdt_formula", ncdt_formula},
        {"dt_formula", dt_formula},
    };
    return table;
}

} // namespace

std::vector<std::string> identity_names()
{
    std::vector<std::string> out;
    for (const auto &[name, run] : registry()) {
        out.push_back(name);
    }
    return out;
}

IdentityResult run_identity(const std::string &name, const IdentityParams &params)
{
    for (const auto &[key, run] : registry()) {
        if (key == name) {
            return run(params);
        }
    }
    throw std::invalid_argument("unknown identity: " + name);
}

TruncationBox preimage_box(const IntMatrix2 &m, TruncationBox target)
{
    const std::int64_t det = determinant(m);
    if (det != 1 && det != -1) {
        throw std::invalid_argument("preimage_box needs a unimodular matrix");
    }
    const IntMatrix2 inverse{{{det * m[1][1], -det * m[0][1]}, {-det * m[1][0], det * m[0][0]}}};
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    for (const Bidegree corner : {Bidegree{0, 0}, Bidegree{target.n0_max, 0}, Bidegree{0, target.n1_max},
                                  Bidegree{target.n0_max, target.n1_max}}) {
        const Bidegree v = apply(inverse, corner);
        n0 = std::max(n0, v.v0);
        n1 = std::max(n1, v.v1);
    }
    return {n0, n1};
}

BiSeries cap_total_degree(const BiSeries &a, std::int64_t max_total)
{
    std::vector<Term> kept;
    for (auto &t : a.terms()) {
        if (t.first.v0 + t.first.v1 <= max_total) {
            kept.push_back(std::move(t));
        }
    }
    return BiSeries::make(a.box(), kept);
}

Integer predicted_enumeration_nodes(const ErcSpec &spec, const EnumerationLimits &limits)
{
    const FormulaId id{spec.kind == ErcKind::finite_type ? FormulaKind::zfin : FormulaKind::zpyr, spec.m};
    BiSeries counts = evaluate(id, limits.box);
    if (limits.max_stones) {
        counts = cap_total_degree(counts, *limits.max_stones);
    }
    Integer total = 0;
    for (const auto &[d, c] : counts.terms()) {
        total += c;
    }
    return total;
}

void check_work_budget(const ErcSpec &spec, const EnumerationLimits &limits, std::optional<std::uint64_t> max_work)
{
    if (!max_work) {
        return;
    }
    const Integer predicted = predicted_enumeration_nodes(spec, limits);
    if (predicted > Integer(static_cast<unsigned long>(*max_work))) {
        throw work_budget_exceeded("enumeration of " + to_label(spec) + " is predicted to visit " +
                                   predicted.get_str() + " partitions, above --max-work " +
                                   std::to_string(*max_work));
    }
}

} // namespace wallcross
