#ifndef CATWB_IO_HPP
#define CATWB_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "catwb/cattribe.hpp"
#include "catwb/fincat.hpp"
#include "catwb/freecat.hpp"
#include "catwb/reedy.hpp"

namespace catwb {

// Text formats are whitespace-insensitive token streams with '#' line
// comments. Writers emit a canonical sorted form so outputs are diffable and
// bit-identical across runs.
//
// Category file:      category / objects ... / arrows (id name dom cod) ... /
//                     identities (obj arrow) ... / compose (g f gf) ... / end
// Functor file:       functor / source <path> / target <path> /
//                     objects (a Fa) ... / arrows (f Ff) ... / end
// Reedy annotation:   reedy / degrees (obj n) ... / plus ... / minus ... / end
// Presentation file:  presentation / r0 <path> / r <path> / c <path> / end
// Diagram file:       diagram / shape <path> / value (obj <path>) ... /
//                     action (arrow <path>) ... / end
// Paths are resolved relative to the referring file.

FinCat parse_category(const std::string& text);
std::string write_category(const FinCat& c);

FinCat read_category_file(const std::filesystem::path& p);
FinFunctor read_functor_file(const std::filesystem::path& p);
AmalgamPresentation read_presentation_file(const std::filesystem::path& p);
Diagram read_diagram_file(const std::filesystem::path& p);

// Degrees and classes without the base category; bound by apply.
struct ReedyAnnotation {
  std::map<std::string, int> degree;
  std::set<std::string> plus;
  std::set<std::string> minus;
};

ReedyAnnotation parse_reedy_annotation(const std::string& text);
ReedyAnnotation read_reedy_annotation_file(const std::filesystem::path& p);
ReedyStructure apply_annotation(FinCat base, const ReedyAnnotation& ann);

std::string write_functor(const FinFunctor& f, const std::string& source_ref,
                          const std::string& target_ref);
std::string write_reedy_annotation(const ReedyStructure& s);

// Report rendering; the JSON schema carries a version field.
std::string report_to_text(const Report& r);
std::string report_to_json(const Report& r);
std::string reports_to_json(const std::string& command,
                            const std::vector<Report>& rs);
std::string reports_to_text(const std::string& command,
                            const std::vector<Report>& rs);

}  // namespace catwb

#endif
