#include "clasperkit/presentation.hpp"

#include "clasperkit/errors.hpp"

namespace clasperkit {

SurgeryPresentation SurgeryPresentation::diagram(FramedBraidLink link,
                                                 std::string label) {
  SurgeryPresentation p;
  p.link_ = std::move(link);
  p.label_ = std::move(label);
  return p;
}

SurgeryPresentation SurgeryPresentation::matrix_only(IntMatrix b,
                                                     std::string label) {
  if (!b.is_symmetric())
    throw ValidationError("matrix-only presentation needs a symmetric matrix");
  SurgeryPresentation p;
  p.link_.reset();
  p.matrix_ = std::move(b);
  p.label_ = std::move(label);
  return p;
}

const FramedBraidLink& SurgeryPresentation::link() const {
  if (!link_) throw NeedsDiagramError("presentation has no diagram");
  return *link_;
}

IntMatrix SurgeryPresentation::linking_matrix() const {
  return link_ ? link_->linking_matrix() : *matrix_;
}

std::size_t SurgeryPresentation::component_count() const {
  return link_ ? link_->component_count() : matrix_->rows();
}

bool SurgeryPresentation::operator==(const SurgeryPresentation& o) const {
  if (is_diagram() != o.is_diagram()) return false;
  return is_diagram() ? *link_ == *o.link_ : *matrix_ == *o.matrix_;
}

std::string SurgeryPresentation::to_string() const {
  std::string s = label_.empty() ? "" : label_ + ": ";
  return s + (link_ ? link_->to_string() : "matrix" + matrix_->to_string());
}

}  // namespace clasperkit
