#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spg/profile.hpp"

namespace spg {

// Parse failure with the 1-based line the problem was found on.
struct SocParseError : std::runtime_error {
    int line;
    SocParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
          line(line_) {}
};

struct SocData {
    Profile profile;
    std::vector<std::string> labels;  // labels[i] names candidate i+1
};

// Two dialects are accepted:
//  (a) metadata lines starting with '#' ("# NUMBER ALTERNATIVES: m",
//      "# NUMBER VOTERS: n", optional "# ALTERNATIVE NAME i: ...") followed
//      by body lines "count: c1,c2,...,cm";
//  (b) legacy: first line "m", then m lines "i,label", then
//      "n,sum_of_counts,num_unique", then body lines "count,c1,...,cm".
SocData parse_soc(std::string_view text);

SocData read_soc_file(const std::string& path);

// Emits dialect (a). parse(serialize(p)) == p, multiplicities preserved.
std::string serialize_soc(const Profile& p, const std::vector<std::string>& labels = {});

void write_soc_file(const std::string& path, const Profile& p,
                    const std::vector<std::string>& labels = {});

}  // namespace spg
