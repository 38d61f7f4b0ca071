#pragma once

#include "acb/errors.hpp"
#include "acb/structure.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace acb {

/// Raised by run_pipeline; names the report section that was being built.
class PipelineError : public Error {
public:
    PipelineError(std::string section, const std::string& what)
        : Error("section '" + section + "': " + what)
        , section_(std::move(section))
    {
    }
    const std::string& section() const { return section_; }

private:
    std::string section_;
};

struct PipelineOptions {
    /// Numeric point the manifold was instantiated at; adds the "numeric" section.
    std::optional<Assignment> assignment;
};

struct Report {
    /// "schema" first, then the sections in report_sections() order.
    nlohmann::ordered_json body;
    /// Per section: nothing in it failed.
    std::map<std::string, bool> passed;

    bool section_passed(const std::string& name) const;
};

/// manifold, validation, tensors, classification, fits, theorems, numeric
const std::vector<std::string>& report_sections();

/// Runs every stage on a manifold that has already been validated.
Report run_pipeline(const Manifold& m, const PipelineOptions& options = {});

/// Instantiates every parameter, re-validates (including the signature of g)
/// and runs the pipeline at that point. Throws StructuralError when the
/// instantiated structure is invalid or the signature is not (n+1, n).
Report substitute_and_rerun(const Manifold& m, const Assignment& assignment);

/// Keeps "schema" plus the listed sections; throws UsageError on unknown names.
nlohmann::ordered_json select_sections(const Report& report, const std::vector<std::string>& sections);

std::string render_json(const nlohmann::ordered_json& body);
std::string render_text(const nlohmann::ordered_json& body);

} // namespace acb
