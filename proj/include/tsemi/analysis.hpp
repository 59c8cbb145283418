#ifndef TSEMI_ANALYSIS_HPP
#define TSEMI_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "green.hpp"
#include "io.hpp"
#include "maps.hpp"
#include "morphisms.hpp"
#include "regrep.hpp"
#include "skeleton.hpp"

namespace tsemi {

  enum class Task { green, skeleton, diagram, regrep, functorial };

  std::string_view          name(Task task) noexcept;
  std::optional<Task>       parse_task(std::string_view text);

  struct PartitionResult {
    AdmissiblePartition partition;
    std::size_t         target_states   = 0;
    std::size_t         target_elements = 0;
    MorphismValidation  validation;
    FunctorialityReport report;

    bool passed() const noexcept {
      return validation.valid && report.passed();
    }
  };

  // Everything computed for one input document.
  struct AnalysisBundle {
    InputDocument           input;
    TransformationSemigroup semigroup;  // S, with the identity if input.monoid
    std::set<Task>          tasks;      // after dependency expansion

    std::optional<GreenStructure>         green;
    std::vector<std::vector<std::size_t>> d_classes;
    std::vector<EggBox>                   eggboxes;

    std::optional<Skeleton> skeleton;  // over I+(X) when input.extended

    std::optional<DiagramData>      diagram_data;
    std::optional<DiagramReport>    diagram;
    std::optional<ImRespectsReport> im_check;
    std::optional<InducedMap>       im_bar_s;

    std::optional<RegRep>          regrep;
    std::optional<CorollaryReport> corollary;

    std::vector<PartitionResult> functorial;

    // Every verification that ran came out positive.
    bool verified() const;
  };

  // Runs the requested tasks; diagram pulls in green and skeleton. A
  // ResourceLimitError is rethrown with the name of the stage that hit it.
  AnalysisBundle run(InputDocument const& doc,
                     std::set<Task>       tasks,
                     std::size_t          max_elements = default_max_elements);

  std::string    text_report(AnalysisBundle const& bundle);
  nlohmann::json json_report(AnalysisBundle const& bundle);

}  // namespace tsemi

#endif  // TSEMI_ANALYSIS_HPP
