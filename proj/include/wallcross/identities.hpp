#ifndef WALLCROSS_IDENTITIES_HPP
#define WALLCROSS_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <wallcross/pyramid.hpp>
#include <wallcross/series.hpp>

namespace wallcross
{

struct IdentityParams {
    std::optional<std::int64_t> m;
    std::optional<TruncationBox> box;
    std::optional<std::int64_t> max_stones;
    // Refuse enumerations predicted to visit more partitions than this.
    std::optional<std::uint64_t> max_work;
};

class work_budget_exceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct IdentityResult {
    std::string name;
    bool ok = false;
    std::string lhs_label;
    std::string rhs_label;
    BiSeries lhs{TruncationBox{}};
    BiSeries rhs{TruncationBox{}};
    std::optional<Bidegree> first_difference;
    std::vector<std::string> provenance;
};

// Names accepted by run_identity, in display order.
std::vector<std::string> identity_names();

// Evaluates both sides of a named identity. Throws std::invalid_argument for
// unknown names or out-of-range parameters.
IdentityResult run_identity(const std::string &name, const IdentityParams &params);

// Smallest box in the source grading whose image under m covers every
// nonnegative preimage of target. Requires |det m| = 1.
TruncationBox preimage_box(const IntMatrix2 &m, TruncationBox target);

// Drops the terms with v0 + v1 > max_total.
BiSeries cap_total_degree(const BiSeries &a, std::int64_t max_total);

// Number of partitions an enumeration inside the limits would visit,
// read off the closed-form counting series.
Integer predicted_enumeration_nodes(const ErcSpec &spec, const EnumerationLimits &limits);

// Throws work_budget_exceeded when the prediction is above max_work.
void check_work_budget(const ErcSpec &spec, const EnumerationLimits &limits, std::optional<std::uint64_t> max_work);

} // namespace wallcross

#endif
